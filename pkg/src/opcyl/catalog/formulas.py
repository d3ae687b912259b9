"""
Closed cylinder formulas for the A-infinity family.

Every function builds its right-hand side from the index sums alone and
never calls the homotopy engine, so the two can be compared term by term.
"""

from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.errors import ArityError, OperadError
from ..core.terms.composition import brace, compose_at, compose_full
from ..core.terms.element import Element
from ..core.terms.generators import Generator, Marker, generator, marked, source_stage
from ..core.terms.monomial import Monomial
from ..core.terms.signs import sign_power
from ..core.trees.planar import child_positions
from ..presentation.morphism import OperadMap
from .ainf import AInfinityPresentation


def compositions(total: int, parts: int, least: int = 2) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of ``parts`` integers >= ``least`` summing to ``total``"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(least, total - least * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, least):
            yield (first,) + rest


def _cyl(g: Generator, marker: Marker) -> Element:
    return Element.generator(marked(g, marker))


def dsigma_ainf(n: int) -> Element:
    """
    d(sigma mu_n) in the cylinder of A-infinity:

    i0 mu_n - i1 mu_n
    - sum_{p+q=n+1, j} (-1)^(p-j+q(j-1)) sigma mu_p o_j i1 mu_q
    + sum (-1)^e i0 mu_r(id^j0, sigma mu_t1, id^j1, ..., sigma mu_ts, id^js)
    with e = sum_k (t_k - 1)(j_0 + sum_{l<k} (t_l + j_l))
    """
    if n < 2:
        raise ArityError(f"mu_n needs n >= 2, got {n}")
    ainf = AInfinityPresentation()
    mu = ainf.mu
    result = _cyl(mu(n), Marker.I0) - _cyl(mu(n), Marker.I1)
    for p in range(2, n):
        q = n + 1 - p
        for j in range(1, p + 1):
            term = compose_at(_cyl(mu(p), Marker.SIGMA), j, _cyl(mu(q), Marker.I1))
            result = result - term.scale(sign_power(p - j + q * (j - 1)))

    identity = Element.identity()
    for r in range(2, n):
        for s in range(1, r + 1):
            for ts in compositions(n - r + s, s):
                for slots in combinations(range(r), s):
                    gaps = _gaps(slots, r)
                    exponent = 0
                    before = gaps[0]
                    for k, t in enumerate(ts):
                        exponent += (t - 1) * before
                        before += t + gaps[k + 1]
                    args = [identity] * r
                    for slot, t in zip(slots, ts):
                        args[slot] = _cyl(mu(t), Marker.SIGMA)
                    term = compose_full(_cyl(mu(r), Marker.I0), args)
                    result = result + term.scale(sign_power(exponent))
    return result


def _gaps(slots: Sequence[int], r: int) -> List[int]:
    """j_0, ..., j_s: the numbers of identity slots around the chosen ones"""
    gaps = []
    previous = -1
    for slot in slots:
        gaps.append(slot - previous - 1)
        previous = slot
    gaps.append(r - previous - 1)
    return gaps


def h_i1_d(name: str, n: int) -> Element:
    """
    h i1 d of the next generator, in brace form

    ``lambda-ainf``: h i1 d(mu_(n+1)) evaluated in the cylinder of A_n.
    ``lambda-ainf-d``: h i1 d(D_n).
    """
    if name == "lambda-ainf":
        return _h_i1_d_mu(n)
    if name == "lambda-ainf-d":
        return _h_i1_d_derivation(n)
    raise OperadError(f"No closed homotopy formula for '{name}'")


def _h_i1_d_mu(n: int) -> Element:
    mu = AInfinityPresentation(suspended=True).mu
    arity = n + 1
    parts = []
    for p in range(2, n + 1):
        q = n + 2 - p
        parts.append(brace(_cyl(mu(p), Marker.SIGMA), [_cyl(mu(q), Marker.I1)]))
    for r in range(2, n + 1):
        for s in range(1, r + 1):
            for ts in compositions(n + 1 + s - r, s):
                args = [_cyl(mu(t), Marker.SIGMA) for t in ts]
                parts.append(-brace(_cyl(mu(r), Marker.I0), args))
    return Element.sum(parts, arity, -1)


def _h_i1_d_derivation(n: int) -> Element:
    ainf_d = AInfinityPresentation(suspended=True, with_derivation=True)
    mu, der = ainf_d.mu, ainf_d.derivation
    parts = []
    for p in range(2, n + 1):
        parts.append(brace(_cyl(mu(p), Marker.SIGMA), [_cyl(der(n + 1 - p), Marker.I1)]))
    for r in range(2, n + 1):
        for s in range(0, r):
            for q in range(1, n + 2 + s - r):
                for ts in compositions(n + 1 + s - r - q, s):
                    for j in range(s + 1):
                        args = [_cyl(mu(t), Marker.SIGMA) for t in ts]
                        args.insert(j, _cyl(der(q), Marker.SIGMA))
                        parts.append(-brace(_cyl(mu(r), Marker.I0), args))
    for q in range(2, n + 1):
        parts.append(-brace(_cyl(der(n + 1 - q), Marker.SIGMA), [_cyl(mu(q), Marker.I1)]))
    for r in range(1, n + 1):
        for s in range(1, r + 1):
            for ts in compositions(n + s - r, s):
                args = [_cyl(mu(t), Marker.SIGMA) for t in ts]
                parts.append(-brace(_cyl(der(r), Marker.I0), args))
    return Element.sum(parts, n, 0)


def _plain(g: Generator) -> Generator:
    return generator(g.name, g.arity, g.degree - (1 if g.marker is Marker.SIGMA else 0), source_stage(g))


def first_series_prediction(mono: Monomial) -> Element:
    """
    h of i0 mu_r(..., sigma mu_t, ..., i1 mu_q, ..., sigma mu_t, ...), brace grading

    The value is -i0 mu_r(..., sigma mu_q, ...) when the sigma arities before
    the i1 slot all exceed r and r >= q, or all exceed q, q > r and q is at
    most every sigma arity after it; otherwise zero.
    """
    tokens = mono.tokens
    root = tokens[0]
    if root is None or root.marker is not Marker.I0:
        raise OperadError("Expected a monomial with root label i0(mu_r)")
    code = mono.code
    args: List[Element] = []
    swapped: List[Element] = []
    before: List[int] = []
    after: List[int] = []
    q: Optional[int] = None
    for child in child_positions(code, 0):
        tok = tokens[child]
        if tok is None:
            args.append(Element.identity())
            swapped.append(Element.identity())
            continue
        if any(tokens[c] is not None for c in child_positions(code, child)):
            raise OperadError("Expected every argument to be a single label")
        args.append(Element.generator(tok))
        if tok.marker is Marker.I1:
            if q is not None:
                raise OperadError("Expected exactly one i1 argument")
            q = tok.arity
            swapped.append(_cyl(_plain(tok), Marker.SIGMA))
        elif tok.marker is Marker.SIGMA:
            (before if q is None else after).append(tok.arity)
            swapped.append(Element.generator(tok))
        else:
            raise OperadError(f"Unexpected argument label {tok.label}")
    if q is None:
        raise OperadError("Expected exactly one i1 argument")

    r = root.arity
    holds = (all(t > r for t in before) and r >= q) or \
            (all(t > q for t in before) and q > r and all(q <= t for t in after))
    if not holds:
        return Element.zero(mono.arity, mono.degree + 1)
    root_element = Element.generator(root)
    orientation = compose_full(root_element, args).coefficient(mono)
    return compose_full(root_element, swapped).scale(-orientation)


def chain_homotopy_prediction(chain: Sequence[Generator]) -> Element:
    """
    sum_j (-1)^(|x_1| + ... + |x_(j-1)|) i0 x_1 o_1 ... o_1 sigma x_j o_1 i1 x_(j+1) ...

    The prediction for h i1(x_1 o_1 ... o_1 x_n) when the cells live in
    arities 0 and 1.
    """
    if not chain:
        raise OperadError("Empty chain")
    parts = []
    passed = 0
    for j in range(len(chain)):
        labels = [marked(x, Marker.I0) for x in chain[:j]]
        labels.append(marked(chain[j], Marker.SIGMA))
        labels.extend(marked(x, Marker.I1) for x in chain[j + 1:])
        parts.append(chain_element(labels).scale(sign_power(passed)))
        passed += chain[j].degree
    arity = chain[-1].arity
    degree = sum(x.degree for x in chain) + 1
    return Element.sum(parts, arity, degree)


def chain_element(labels: Sequence[Generator]) -> Element:
    """x_1 o_1 x_2 o_1 ... o_1 x_n"""
    result = Element.generator(labels[-1])
    for g in reversed(labels[:-1]):
        result = compose_at(Element.generator(g), 1, result)
    return result


def ainf_morphism_components(morphism: OperadMap, n: int) -> Tuple[Element, Element, Element]:
    """
    (m'_n, m_n, f_n) = (H(i0 mu_n), H(i1 mu_n), H(sigma mu_n)) for a map H
    out of the cylinder of A-infinity
    """
    cylinder = morphism.source
    images = []
    for marker in (Marker.I0, Marker.I1, Marker.SIGMA):
        g = cylinder.resolve(f"{marker.value}:mu_{n}")
        images.append(morphism(Element.generator(g)))
    return images[0], images[1], images[2]
