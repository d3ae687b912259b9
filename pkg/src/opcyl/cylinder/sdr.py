"""
Perturbed homotopy of the canonical cylinder.

The stage-by-stage strong deformation retraction of I(O_beta) onto O_beta is
rebuilt from the tensor product retraction of I(O_gamma) coproduct F(IV_gamma)
and the perturbation d_I, using the recursion h' = h0 + h' d_I h0. The
recursion terminates because d_I lowers the number of stage-gamma labels
while h0 preserves it; every step asserts the drop.
"""

import logging
import threading
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..config import EngineSettings, get_settings
from ..core.errors import FiltrationError, StageError
from ..core.terms.element import Element, accumulate
from ..core.terms.generators import CYLINDER_MARKERS, Generator, Marker, source_stage
from ..core.terms.maps import apply_derivation
from ..core.terms.monomial import Monomial, assemble, relabel
from ..core.terms.signs import koszul_sign, sign_power
from ..core.trees.planar import parent_positions
from .labels import CylinderLabels

logger = logging.getLogger(__name__)

# factor kinds of a vertex at a given stage
CURRENT = 1
LOWER = 0


class FactorSplit:
    """Path-ordered factors of a monomial for the coproduct at one stage"""

    __slots__ = ("factors", "kinds", "skeleton", "sign")

    def __init__(self, factors: List[Monomial], kinds: List[int], skeleton: List[Optional[int]], sign: int):
        self.factors = factors
        self.kinds = kinds
        self.skeleton = skeleton
        self.sign = sign

    def reassemble(self, blocks: List[Monomial]) -> Tuple[int, Monomial]:
        s, mono = assemble(self.skeleton, blocks)
        return self.sign * s, mono


def stage_level(mono: Monomial, stage: int) -> int:
    """Number of stage-``stage`` cylinder labels, the filtration degree of the perturbation"""
    return sum(1 for tok in mono.tokens if tok is not None and tok.is_cell and source_stage(tok) == stage)


def cylinder_min_stage(mono: Monomial) -> int:
    """Smallest source stage beta with the monomial in the cylinder of O_beta"""
    stages = [source_stage(tok) for tok in mono.tokens if tok is not None and tok.is_cell]
    return 1 + max(stages) if stages else 0


class CylinderHomotopy:
    """Homotopy h, perturbation d_I and the sigma boundary terms of one cylinder"""

    def __init__(self, labels: CylinderLabels, settings: Optional[EngineSettings] = None):
        self.labels = labels
        self.source = labels.source
        self.base = labels.source.base
        self.settings = settings or get_settings()
        self._at_stage = lru_cache(maxsize=self.settings.lru_maxsize)(self._compute_at_stage)
        self._sigma_images: Dict[Generator, Element] = {}
        self._lock = threading.Lock()

    # factor decomposition

    def _kind(self, g: Generator, stage: int) -> int:
        if g.is_base or source_stage(g) < stage:
            return LOWER
        if source_stage(g) > stage or g.marker not in CYLINDER_MARKERS:
            raise StageError(f"Label {g.label} of stage {source_stage(g)} above stage {stage}")
        return CURRENT

    def split(self, stage: int, mono: Monomial) -> FactorSplit:
        """
        Cut a monomial into stage-``stage`` cylinder labels and maximal
        connected lower-stage pieces, in path order of their roots
        """
        tokens = mono.tokens
        parents = parent_positions(mono.code)
        kinds: List[Optional[int]] = [None if tok is None else self._kind(tok, stage) for tok in tokens]
        factor_of = [-1] * len(tokens)
        factor_tokens: List[List] = []
        factor_kinds: List[int] = []
        skeleton: List[Optional[int]] = []
        entries = []
        ranks: List[int] = []

        for t, tok in enumerate(tokens):
            kind = kinds[t]
            p = parents[t]
            inside = p is not None and kinds[p] == LOWER
            if kind != LOWER and inside:
                # leaves and current labels are exits of the piece above them
                factor_tokens[factor_of[p]].append(None)
            if kind is None:
                skeleton.append(None)
                continue
            if kind == LOWER and inside:
                f = factor_of[p]
            else:
                f = len(factor_tokens)
                factor_tokens.append([])
                factor_kinds.append(kind)
                ranks.append(0)
                skeleton.append(f)
            factor_of[t] = f
            factor_tokens[f].append(tok)
            if kind == CURRENT:
                factor_tokens[f].extend([None] * tok.arity)
            entries.append(((f, ranks[f]), tok.degree))
            ranks[f] += 1

        # labels sit in path order; the tensor of factors lists them factor by factor
        sign = koszul_sign(entries)
        factors = [Monomial(toks) for toks in factor_tokens]
        return FactorSplit(factors, factor_kinds, skeleton, sign)

    # the tensor product homotopy

    def _factor_homotopy(self, stage: int, kind: int, factor: Monomial) -> Element:
        if kind == CURRENT:
            image = self.labels.h_label(factor.tokens[0])
            if image is None:
                return Element.zero(factor.arity, factor.degree + 1)
            return Element.generator(image)
        return self.at_stage(stage, factor)

    def tensor_homotopy(self, stage: int, mono: Monomial) -> Element:
        """
        h0 on a monomial of I(O_stage) coproduct F(IV_stage)

        Sum over factors j of (-1)^(degrees before j) times i0 p on the
        earlier factors, h on factor j and the later factors unchanged.
        """
        split = self.split(stage, mono)
        terms: Dict[Monomial, int] = {}
        prefix: List[Monomial] = []
        passed = 0
        for j, (factor, kind) in enumerate(zip(split.factors, split.kinds)):
            h = self._factor_homotopy(stage, kind, factor)
            if not h.is_zero():
                later = split.factors[j + 1:]
                base_sign = sign_power(passed)
                for block, coeff in h.terms.items():
                    s, out = split.reassemble(prefix + [block] + later)
                    normal_sign, out = self.base.normalize(out)
                    accumulate(terms, out, base_sign * s * normal_sign * coeff)
            projected = relabel(factor, self.labels.i0p_label)
            if projected is None:
                break
            prefix.append(projected)
            passed += factor.degree
        return Element(terms, mono.arity, mono.degree + 1)

    # the perturbation

    def _perturbation_image(self, stage: int, g: Generator) -> Optional[Element]:
        if not g.is_cell or source_stage(g) != stage:
            return None
        x = self.labels.underlying(g)
        boundary = self.source.boundary(x)
        if g.marker is Marker.I0:
            return self.labels.i0_map(boundary)
        if g.marker is Marker.I1:
            return self.labels.i1_map(boundary)
        return -self.sigma_correction(x)

    def perturbation_extension(self, stage: int, e: Element) -> Element:
        """
        The derivation d_I at ``stage``: i0 x to i0(dx), i1 x to i1(dx) and
        sigma x to -h i1(dx), zero on lower material
        """
        return apply_derivation(e, lambda g: self._perturbation_image(stage, g), -1, self.base)

    def sigma_correction(self, x: Generator) -> Element:
        """h i1(dx) at the stage of x, the correction term of d(sigma x)"""
        cached = self._sigma_images.get(x)
        if cached is not None:
            return cached
        value = self.cylinder_homotopy(x.stage, self.labels.i1_map(self.source.boundary(x)))
        value = Element(value.terms, x.arity, x.degree)
        with self._lock:
            return self._sigma_images.setdefault(x, value)

    # the perturbed homotopy

    def at_stage(self, stage: int, mono: Monomial) -> Element:
        """h of I(O_stage) on one monomial (memoized)"""
        return self._at_stage(stage, mono)

    def _compute_at_stage(self, stage: int, mono: Monomial) -> Element:
        if stage == 0:
            return Element.zero(mono.arity, mono.degree + 1)
        below = stage - 1
        h0 = self.tensor_homotopy(below, mono)
        if h0.is_zero():
            return h0
        perturbed = self.perturbation_extension(below, h0)
        if perturbed.is_zero():
            return h0
        level = stage_level(mono, below)
        logger.debug("stage %d: level %d, %d perturbed term(s)", stage, level, len(perturbed))
        result = dict(h0.terms)
        for m, coeff in perturbed.terms.items():
            if stage_level(m, below) >= level:
                raise FiltrationError(
                    f"Perturbation at stage {below} did not lower the filtration degree {level}"
                )
            for out, c in self.at_stage(stage, m).terms.items():
                accumulate(result, out, coeff * c)
        return Element(result, mono.arity, mono.degree + 1)

    def _check_stage(self, stage: int, e: Element) -> None:
        for mono in e.terms:
            for tok in mono.tokens:
                if tok is not None and tok.is_cell and source_stage(tok) >= stage:
                    raise StageError(f"Label {tok.label} of stage {source_stage(tok)} is not in stage {stage} material")

    def cylinder_homotopy(self, stage: int, e: Element) -> Element:
        """h of I(O_stage) on an element whose cells all have stage below ``stage``"""
        self._check_stage(stage, e)
        degree = None if e.degree is None else e.degree + 1
        terms: Dict[Monomial, int] = {}
        for mono, coeff in e.terms.items():
            for out, c in self.at_stage(stage, mono).terms.items():
                accumulate(terms, out, coeff * c)
        return Element(terms, e.arity, degree)

    def homotopy(self, e: Element) -> Element:
        """h on the whole cylinder, each monomial at its minimal stage"""
        degree = None if e.degree is None else e.degree + 1
        terms: Dict[Monomial, int] = {}
        for mono, coeff in e.terms.items():
            for out, c in self.at_stage(cylinder_min_stage(mono), mono).terms.items():
                accumulate(terms, out, coeff * c)
        return Element(terms, e.arity, degree)

    def series_homotopy(self, stage: int, e: Element, terms: int) -> Element:
        """
        Truncated perturbation series: sum of (h0 d_I)^k h0 for k <= terms

        Only used as an oracle against the recursion on small inputs; the
        series is exact once ``terms`` reaches the filtration degree.
        """
        self._check_stage(stage, e)
        if stage == 0:
            return Element.zero(e.arity, None if e.degree is None else e.degree + 1)
        below = stage - 1

        def h0(x: Element) -> Element:
            return Element.sum(
                (self.tensor_homotopy(below, m).scale(c) for m, c in x.terms.items()),
                x.arity, None if x.degree is None else x.degree + 1,
            )

        current = h0(e)
        total = current
        for _ in range(terms):
            current = h0(self.perturbation_extension(below, current))
            if current.is_zero():
                break
            total = total + current
        return total

    def cache_info(self):
        info = self._at_stage.cache_info()
        logger.debug("homotopy memo: %d hits, %d misses, %d entries", info.hits, info.misses, info.currsize)
        return info

    def clear_cache(self) -> None:
        self._at_stage.cache_clear()
        with self._lock:
            self._sigma_images.clear()
