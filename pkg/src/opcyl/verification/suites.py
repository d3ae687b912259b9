"""
The verification suites behind ``opcyl verify``.

Every suite stops at its first counterexample and reports it rendered in
the expression grammar.
"""

import logging
import random
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Iterator, List, Sequence

from ..catalog.ainf import AInfinityPresentation
from ..catalog.formulas import chain_element, chain_homotopy_prediction, dsigma_ainf, first_series_prediction, h_i1_d
from ..catalog.registry import build, default_catalog
from ..catalog.unital import UnitalPresentation, unital_projection, unital_retraction, unital_retraction_homotopy
from ..config import EngineSettings
from ..core.base.operads import INITIAL, BaseOperad
from ..core.errors import PresentationError
from ..core.terms.composition import brace, compose_at, compose_full
from ..core.terms.element import Element
from ..core.terms.generators import Generator, Marker, marked
from ..core.terms.monomial import Monomial
from ..core.terms.render import render_element, render_monomial
from ..core.terms.signs import sign_power
from ..cylinder.linear import (
    DoubleCylinderPresentation,
    doubling_map,
    glued_projection,
    inclusion_maps,
    linear_sigma_differential,
    require_linear,
    reversing_map,
)
from ..cylinder.presentation import CylinderPresentation, bottom_label_kind, has_forbidden_edge
from ..presentation.morphism import ChainMapReport
from ..presentation.presentation import Presentation
from ..suspension.operadic import SuspendedPresentation, desuspend_element, suspend_element
from .base import CheckReport, VerificationOptions, VerificationSuite
from .enumerate import (
    chains,
    cylinder_alphabet,
    monomials,
    random_chain_presentation,
    random_monomial,
    standard_monomials,
)

logger = logging.getLogger(__name__)


def _mismatch(what: str, subject: str, lhs: Element, rhs: Element) -> str:
    return f"{what} on {subject}:\n  lhs = {render_element(lhs)}\n  rhs = {render_element(rhs)}"


def _chain_map_failure(report: ChainMapReport) -> str:
    return f"d {report.name}({report.failing_generator}) = {report.lhs}\n{report.name}(d {report.failing_generator}) = {report.rhs}"


class SdrSuite(VerificationSuite):
    name = "sdr"
    description = "p i0 = p i1 = 1, i0 p - 1 = dh + hd, ph = 0, hi0 = 0, hh = 0 on the standard basis"
    default_presentation = "ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = build(self.presentation_name(options), options.suspended, settings)
        cylinder = CylinderPresentation(source, settings)
        checked = 0

        for mono in monomials(source.generators(options.max_arity), options.max_vertices, options.max_arity):
            x = Element.of(mono)
            checked += 1
            for label, image in (("p i0", cylinder.p_map(cylinder.i0_map(x))),
                                 ("p i1", cylinder.p_map(cylinder.i1_map(x)))):
                if image != x:
                    return self.failed(checked, _mismatch(label, render_monomial(mono), image, x),
                                       f"{label} is not the identity")
            h_i0 = cylinder.homotopy(cylinder.i0_map(x))
            if not h_i0.is_zero():
                return self.failed(checked, _mismatch("h i0", render_monomial(mono), h_i0, Element.zero()),
                                   "h i0 is not zero")

        for mono in standard_monomials(source, options.max_arity, options.max_vertices):
            e = Element.of(mono)
            checked += 1
            h = cylinder.homotopy(e)
            lhs = cylinder.i0_map(cylinder.p_map(e)) - e
            rhs = cylinder.differential(h) + cylinder.homotopy(cylinder.differential(e))
            if lhs != rhs:
                return self.failed(checked, _mismatch("i0 p - 1 = dh + hd", render_monomial(mono), lhs, rhs),
                                   "the homotopy identity fails")
            for label, value in (("p h", cylinder.p_map(h)), ("h h", cylinder.homotopy(h))):
                if not value.is_zero():
                    return self.failed(checked, _mismatch(label, render_monomial(mono), value, Element.zero()),
                                       f"{label} is not zero")
        cylinder.engine.cache_info()
        return self.passed(checked, f"SDR identities hold on {checked} monomials of {cylinder.name}")


class DSquaredSuite(VerificationSuite):
    name = "d2"
    description = "d(d(x)) = 0 and the stage condition on every generator"
    default_presentation = "ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        presentation = build(self.presentation_name(options), options.suspended, settings)
        report = presentation.check_d_squared(options.max_arity)
        if report.success:
            return self.passed(report.checked, report.message)
        return self.failed(report.checked, f"{report.failing_generator}: {report.residue}", report.message)


class VanishingSuite(VerificationSuite):
    name = "vanishing"
    description = "h = 0 on standard monomials with bottom sigma, or bottom i0 and no forbidden edge"
    default_presentation = "ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = build(self.presentation_name(options), options.suspended, settings)
        cylinder = CylinderPresentation(source, settings)
        labels = cylinder_alphabet(source, options.max_arity)
        rng = random.Random(options.seed)
        checked = 0
        for _ in range(options.samples * 50):
            if checked >= options.samples:
                break
            mono = random_monomial(rng, labels, options.max_vertices, options.max_arity)
            kind = bottom_label_kind(mono)
            if kind is not Marker.SIGMA and (kind is not Marker.I0 or has_forbidden_edge(mono)):
                continue
            checked += 1
            value = cylinder.homotopy(Element.of(mono))
            if not value.is_zero():
                return self.failed(checked, _mismatch("h", render_monomial(mono), value, Element.zero()),
                                   "h does not vanish")
        return self.passed(checked, f"h vanishes on {checked} sampled monomials")


class AInfinityFormulaSuite(VerificationSuite):
    name = "ainf-formula"
    description = "engine d(sigma mu_n) against the closed A-infinity cylinder formula, in both gradings"
    default_presentation = "ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        cylinder = CylinderPresentation(AInfinityPresentation(), settings)
        suspended = CylinderPresentation(AInfinityPresentation(suspended=True), settings)
        checked = 0
        for n in range(2, options.max_arity + 1):
            checked += 1
            formula = dsigma_ainf(n)
            engine = cylinder.boundary(cylinder.resolve(f"sigma:mu_{n}"))
            if engine != formula:
                return self.failed(checked, _mismatch("d(sigma mu_n)", f"n = {n}", engine, formula),
                                   "engine and closed formula disagree")
            braced = suspended.boundary(suspended.resolve(f"sigma:mu_{n}"))
            if desuspend_element(braced) != formula:
                return self.failed(checked, _mismatch("desuspended d(sigma mu_n)", f"n = {n}",
                                                      desuspend_element(braced), formula),
                                   "the suspended cylinder disagrees with the closed formula")
        return self.passed(checked, f"closed formula holds for 2 <= n <= {options.max_arity}")


def first_series_monomials(max_arity: int, max_vertices: int) -> Iterator[Monomial]:
    """i0 mu_r(..., sigma mu_t, ..., i1 mu_q, ...) in the brace grading, with identities in the other slots"""
    mu = AInfinityPresentation(suspended=True).mu
    identity = Element.identity()
    for r in range(2, max_arity + 1):
        root = Element.generator(marked(mu(r), Marker.I0))
        for k in range(1, min(r, max_vertices - 1) + 1):
            for slots in combinations(range(r), k):
                for arities in product(range(2, max_arity + 1), repeat=k):
                    if r - k + sum(arities) > max_arity:
                        continue
                    for chosen in range(k):
                        args = [identity] * r
                        for index, (slot, t) in enumerate(zip(slots, arities)):
                            marker = Marker.I1 if index == chosen else Marker.SIGMA
                            args[slot] = Element.generator(marked(mu(t), marker))
                        yield compose_full(root, args).monomials()[0]


class TechSuite(VerificationSuite):
    name = "tech"
    description = "h i1 d(mu_(n+1)) in the suspended cylinder and the first-series case split"
    default_presentation = "lambda-ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = AInfinityPresentation(suspended=True)
        cylinder = CylinderPresentation(source, settings)
        checked = 0
        for n in range(2, options.max_arity):
            checked += 1
            engine = cylinder.homotopy(cylinder.i1_map(source.boundary(source.mu(n + 1))))
            formula = h_i1_d("lambda-ainf", n)
            if engine != formula:
                return self.failed(checked, _mismatch("h i1 d(mu_(n+1))", f"n = {n}", engine, formula),
                                   "engine and closed formula disagree")
        for mono in first_series_monomials(options.max_arity, options.max_vertices):
            checked += 1
            engine = cylinder.homotopy(Element.of(mono))
            predicted = first_series_prediction(mono)
            if engine != predicted:
                return self.failed(checked, _mismatch("h", render_monomial(mono), engine, predicted),
                                   "first-series case split fails")
        return self.passed(checked)


class ConderSuite(VerificationSuite):
    name = "conder"
    description = "h i1 d(D_n) in the cylinder of suspended A-infinity with a derivation"
    default_presentation = "lambda-ainf-d"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = AInfinityPresentation(suspended=True, with_derivation=True)
        cylinder = CylinderPresentation(source, settings)
        checked = 0
        for n in range(1, options.max_arity + 1):
            checked += 1
            engine = cylinder.homotopy(cylinder.i1_map(source.boundary(source.derivation(n))))
            formula = h_i1_d("lambda-ainf-d", n)
            if engine != formula:
                return self.failed(checked, _mismatch("h i1 d(D_n)", f"n = {n}", engine, formula),
                                   "engine and closed formula disagree")
        return self.passed(checked)


class LinearSuite(VerificationSuite):
    name = "linear"
    description = "linear d(sigma x) against the engine; doubling and reversing maps"
    default_presentation = "assoc-der"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = build(self.presentation_name(options), options.suspended, settings)
        require_linear(source, options.max_arity)
        cylinder = CylinderPresentation(source, settings)
        generators = source.generators(options.max_arity)
        checked = 0
        for x in generators:
            checked += 1
            fast = linear_sigma_differential(source, x)
            engine = cylinder.boundary(marked(x, Marker.SIGMA))
            if fast != engine:
                return self.failed(checked, _mismatch("d(sigma x)", x.label, fast, engine),
                                   "linear formula and engine disagree")

        double = DoubleCylinderPresentation(source)
        report = double.check_d_squared(options.max_arity)
        if not report.success:
            return self.failed(checked, f"{report.failing_generator}: {report.residue}", report.message)
        nu = doubling_map(cylinder, double, options.max_arity)
        iota = reversing_map(cylinder, options.max_arity)
        j0, j1 = inclusion_maps(cylinder, double)
        glued = glued_projection(double)
        for operad_map in (nu, iota, j0, j1, glued):
            chain = operad_map.check_chain_map(options.max_arity)
            checked += chain.checked
            if not chain.success:
                return self.failed(checked, _chain_map_failure(chain), f"{operad_map.name} is not a chain map")

        for g in cylinder.generators(options.max_arity):
            checked += 1
            e = Element.generator(g)
            p = cylinder.p_map(e)
            for label, lhs, rhs in (("iota iota", iota(iota(e)), e),
                                    ("p iota", cylinder.p_map(iota(e)), p),
                                    ("P nu", glued(nu(e)), p)):
                if lhs != rhs:
                    return self.failed(checked, _mismatch(label, g.label, lhs, rhs), f"{label} fails")
        for x in generators:
            checked += 1
            for label, end, inclusion in (("nu i0 = j0 i0", Marker.I0, j0), ("nu i1 = j1 i1", Marker.I1, j1)):
                e = Element.generator(marked(x, end))
                if nu(e) != inclusion(e):
                    return self.failed(checked, _mismatch(label, x.label, nu(e), inclusion(e)), f"{label} fails")
        return self.passed(checked)


class UnitalSuite(VerificationSuite):
    name = "unital-H"
    description = "the unital example: d^2 = 0, r a chain map, H a chain map from 1 to j r"
    default_presentation = "unital-nu:m=1"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = build(self.presentation_name(options), False, settings)
        if not isinstance(source, UnitalPresentation):
            raise PresentationError(f"unital-H needs a unital-nu presentation, got {source.name}")
        report = source.check_d_squared(options.max_arity)
        if not report.success:
            return self.failed(report.checked, f"{report.failing_generator}: {report.residue}", report.message)
        checked = report.checked

        cylinder = CylinderPresentation(source, settings)
        homotopy = unital_retraction_homotopy(cylinder)
        for operad_map in (unital_retraction(source), homotopy):
            chain = operad_map.check_chain_map(options.max_arity)
            checked += chain.checked
            if not chain.success:
                return self.failed(checked, _chain_map_failure(chain), f"{operad_map.name} is not a chain map")

        projection = unital_projection(source)
        for x in source.generators(options.max_arity):
            checked += 1
            plain = Element.generator(x)
            for label, end, expected in (("H i0", Marker.I0, plain), ("H i1", Marker.I1, projection(plain))):
                value = homotopy(Element.generator(marked(x, end)))
                if value != expected:
                    return self.failed(checked, _mismatch(label, x.label, value, expected), f"{label} fails")
        return self.passed(checked)


def brace_relation_rhs(x: Element, ys: Sequence[Element], zs: Sequence[Element],
                       base: BaseOperad = INITIAL) -> Element:
    """
    sum of (-1)^e x{z.., y_1{z..}, z.., y_p{z..}, z..} over 0 <= i_1 <= j_1 <= ... <= j_p <= q,
    e counting |y_k| |z_l| for every z_l placed before y_k
    """
    p, q = len(ys), len(zs)
    parts: List[Element] = []
    for cuts in combinations_with_replacement(range(q + 1), 2 * p):
        args: List[Element] = []
        exponent = 0
        previous = 0
        for k, y in enumerate(ys):
            start, stop = cuts[2 * k], cuts[2 * k + 1]
            args.extend(zs[previous:start])
            exponent += (y.degree or 0) * sum(z.degree or 0 for z in zs[:start])
            args.append(brace(y, zs[start:stop], base))
            previous = stop
        args.extend(zs[previous:])
        parts.append(brace(x, args, base).scale(sign_power(exponent)))
    return Element.sum(parts)


def _alphabet(source: Presentation, max_arity: int) -> List[Generator]:
    return source.generators(max_arity) + source.base.labels(max_arity)


class BracesSuite(VerificationSuite):
    name = "braces"
    description = "associativity, commutation, unit laws, Leibniz rule and the brace relation on random inputs"
    default_presentation = "ainf-d"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        source = build(self.presentation_name(options), options.suspended, settings)
        base = source.base
        labels = [g for g in _alphabet(source, options.max_arity) if g.arity >= 1]
        rng = random.Random(options.seed)

        def pick(vertices: int = 2) -> Element:
            return Element.of(random_monomial(rng, labels, vertices, options.max_arity, base))

        identity = Element.identity()
        checked = 0
        for _ in range(options.samples):
            checked += 1
            x, y, z = pick(), pick(), pick()
            i = rng.randint(1, x.arity)
            j = rng.randint(1, y.arity)
            lhs = compose_at(x, i, compose_at(y, j, z, base), base)
            rhs = compose_at(compose_at(x, i, y, base), i + j - 1, z, base)
            if lhs != rhs:
                return self.failed(checked, _mismatch("associativity", f"slots {i}, {j}", lhs, rhs),
                                   "nested associativity fails")
            if x.arity >= 2:
                i = rng.randint(2, x.arity)
                j = rng.randint(1, i - 1)
                lhs = compose_at(compose_at(x, i, y, base), j, z, base)
                rhs = compose_at(compose_at(x, j, z, base), i + z.arity - 1, y, base)
                rhs = rhs.scale(sign_power(y.degree * z.degree))
                if lhs != rhs:
                    return self.failed(checked, _mismatch("commutation", f"slots {i}, {j}", lhs, rhs),
                                       "disjoint commutation fails")
            if compose_at(identity, 1, x, base) != x or compose_at(x, x.arity, identity, base) != x:
                return self.failed(checked, render_element(x), "unit laws fail")
            i = rng.randint(1, x.arity)
            lhs = source.differential(compose_at(x, i, y, base))
            rhs = compose_at(source.differential(x), i, y, base) + \
                compose_at(x, i, source.differential(y), base).scale(sign_power(x.degree))
            if lhs != rhs:
                return self.failed(checked, _mismatch("Leibniz rule", f"slot {i}", lhs, rhs), "Leibniz rule fails")
            ys = [pick(1) for _ in range(rng.randint(1, 2))]
            zs = [pick(1) for _ in range(rng.randint(1, 2))]
            lhs = brace(brace(x, ys, base), zs, base)
            rhs = brace_relation_rhs(x, ys, zs, base)
            if lhs != rhs:
                return self.failed(checked, _mismatch("brace relation", render_element(x), lhs, rhs),
                                   "brace relation fails")
        return self.passed(checked)


def suspended_degree_of(e: Element) -> int:
    """||e|| = |e| + 1 - arity"""
    return (e.degree or 0) + 1 - (e.arity or 0)


class SuspensionSuite(VerificationSuite):
    name = "suspension"
    description = "Lambda round trip, Lambda d = d Lambda, the composition signs, and Lambda I(O) = I(Lambda O)"
    default_presentation = "ainf"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        name = self.presentation_name(options)
        source = build(name, False, settings)
        suspended = SuspendedPresentation(source)
        base, lifted = source.base, suspended.base
        labels = [g for g in _alphabet(source, options.max_arity) if g.arity >= 1]
        rng = random.Random(options.seed)
        checked = 0
        for _ in range(options.samples):
            checked += 1
            x = Element.of(random_monomial(rng, labels, options.max_vertices, options.max_arity, base))
            y = Element.of(random_monomial(rng, labels, options.max_vertices, options.max_arity, base))
            if desuspend_element(suspend_element(x)) != x:
                return self.failed(checked, render_element(x), "desuspend(suspend(e)) is not e")
            lhs = suspend_element(source.differential(x))
            rhs = suspended.differential(suspend_element(x))
            if lhs != rhs:
                return self.failed(checked, _mismatch("Lambda d = d Lambda", render_element(x), lhs, rhs),
                                   "suspension does not commute with d")
            i = rng.randint(1, x.arity)
            y_suspended = suspended_degree_of(y)
            exponent = y_suspended * (x.arity - i) + y.degree * (i - 1)
            lhs = suspend_element(compose_at(x, i, y, base))
            rhs = compose_at(suspend_element(x), i, suspend_element(y), lifted).scale(sign_power(exponent))
            if lhs != rhs:
                return self.failed(checked, _mismatch("Lambda(x o_i y)", f"slot {i}", lhs, rhs),
                                   "composition sign of the suspension fails")

        builtin = f"lambda-{name}"
        if default_catalog.exists(builtin) and not options.suspended:
            reference = build(builtin, False, settings)
            for g in suspended.generators(options.max_arity):
                checked += 1
                if suspended.boundary(g) != reference.boundary(g):
                    return self.failed(checked, _mismatch("d", g.label, suspended.boundary(g), reference.boundary(g)),
                                       f"suspension of {name} differs from {builtin}")

        outer = SuspendedPresentation(CylinderPresentation(source, settings))
        inner = CylinderPresentation(suspended, settings)
        for g in inner.generators(options.max_arity):
            checked += 1
            if outer.boundary(g) != inner.boundary(g):
                return self.failed(checked, _mismatch("d", g.label, outer.boundary(g), inner.boundary(g)),
                                   "suspension does not commute with the cylinder")
        return self.passed(checked)


class ChainSuite(VerificationSuite):
    name = "chain"
    description = "h i1 of chains x_1 o_1 ... o_1 x_n in a random presentation concentrated in arities 0 and 1"

    def run(self, options: VerificationOptions, settings: EngineSettings) -> CheckReport:
        rng = random.Random(options.seed)
        source = random_chain_presentation(rng)
        report = source.check_d_squared(1)
        if not report.success:
            return self.failed(report.checked, f"{report.failing_generator}: {report.residue}", report.message)
        cylinder = CylinderPresentation(source, settings)
        checked = 0
        for chain in chains(source.generators(1), max(options.max_vertices, 1)):
            checked += 1
            engine = cylinder.homotopy(chain_element([marked(x, Marker.I1) for x in chain]))
            predicted = chain_homotopy_prediction(chain)
            if engine != predicted:
                subject = " o1 ".join(x.label for x in chain)
                return self.failed(checked, _mismatch("h i1", subject, engine, predicted), "chain formula fails")
        return self.passed(checked)


def default_suites() -> Dict[str, VerificationSuite]:
    suites = [SdrSuite(), DSquaredSuite(), VanishingSuite(), AInfinityFormulaSuite(), TechSuite(),
              ConderSuite(), LinearSuite(), UnitalSuite(), BracesSuite(), SuspensionSuite(), ChainSuite()]
    return {suite.name: suite for suite in suites}


SUITE_NAMES = tuple(default_suites())
