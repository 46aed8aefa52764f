"""Affine cell coordinates at a monomial ideal and the edge-scheme equations.

For a finite-colength M in k[x,y] and a grading, the ideals whose initial
ideal under the x-smaller order is M form an affine cell.  One coordinate is
attached to each positive significant arrow of M; the cell's universal ideal
has one generator per minimal generator of M, computed here by the standard
recursion and then tail-reduced to the unique reduced basis.

The edge equations for a comparable pair (M, N) come from reducing the
y-smaller-side basis of N modulo the reduced basis of M and reading off the
coefficients of the standard monomials of M.  All coefficients stay integral
because every reduction divides only by unit lead coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass

from .monomial import (Grading, MonomialIdeal2, TermSide, format_monomial,
                       hilbert_function, side_key)
from .poly import ArrowVar, Poly, Ring, arrow_ring


@dataclass(frozen=True)
class SignificantArrowSet:
    """Positive and negative arrow labels (generator index, step count)."""

    positive: tuple
    negative: tuple


def significant_arrows(M, g, side=TermSide.X_SMALL):
    """All significant arrows of M for one grading and chain direction."""
    if side is TermSide.Y_SMALL:
        flipped = significant_arrows(M.swap(), g.swap(), TermSide.X_SMALL)
        return flipped
    gens = M.gens
    e = len(gens) - 1
    positive = []
    for i in range(1, e + 1):
        ai, bi = gens[i]
        wi = (gens[i - 1][0], bi)
        for l in range(1, bi // g.alpha + 1):
            target = g.shift((ai, bi), l)
            hop = g.shift(wi, l)
            if target is None or hop is None:
                continue
            if not M.contains(target) and M.contains(hop):
                positive.append((i, l))
    negative = []
    for i in range(0, e):
        ai, bi = gens[i]
        w_next = (ai, gens[i + 1][1])
        for k in range(1, ai // g.beta + 1):
            target = g.shift((ai, bi), -k)
            hop = g.shift(w_next, -k)
            if target is None or hop is None:
                continue
            if not M.contains(target) and M.contains(hop):
                negative.append((i, -k))
    return SignificantArrowSet(tuple(positive), tuple(negative))


@dataclass(frozen=True)
class CellBasis:
    """Generators of the universal cell ideal: lead monomial -> coefficients.

    elements[i] maps each monomial of the i-th generator to its coefficient
    polynomial; leads[i] is that generator, sorted ascending under the side,
    and always carries coefficient one.
    """

    ideal: MonomialIdeal2
    grading: Grading
    side: TermSide
    ring: Ring
    leads: tuple
    elements: tuple  # tuple of dict(Mono -> Poly)
    reduced: bool

    def element(self, i):
        return self.elements[i]


def _shift_element(elem, delta):
    """Multiply a cell element by x^da*y^db with possibly negative deltas."""
    da, db = delta
    out = {}
    for (a, b), poly in elem.items():
        a2, b2 = a + da, b + db
        assert a2 >= 0 and b2 >= 0, "shift left the polynomial ring"
        out[(a2, b2)] = poly
    return out


def cell_generators_f(M, g, side=TermSide.X_SMALL, ring=None, var_side=0):
    """Recursive cell basis; element i has lead M.gens[i] with coefficient 1.

    When `ring` is given it must contain ArrowVar(var_side, i, l) for every
    positive arrow (i, l); this lets both sides of a pair share one ring.
    """
    if side is TermSide.Y_SMALL:
        basis = cell_generators_f(M.swap(), g.swap(), TermSide.X_SMALL,
                                  ring=ring, var_side=var_side)
        elements = tuple(
            {(b, a): poly for (a, b), poly in elem.items()}
            for elem in basis.elements
        )
        leads = tuple((b, a) for a, b in basis.leads)
        return CellBasis(M, g, side, basis.ring, leads, elements, reduced=False)

    arrows = significant_arrows(M, g, TermSide.X_SMALL).positive
    if ring is None:
        ring = arrow_ring(arrows) if var_side == 0 else arrow_ring((), arrows)
    gens = M.gens
    elements = [{gens[0]: ring.one()}]
    by_index = {}
    for (i, l) in arrows:
        by_index.setdefault(i, []).append(l)
    for i in range(1, len(gens)):
        prev = gens[i - 1]
        cur = gens[i]
        elem = _shift_element(elements[i - 1],
                              (cur[0] - prev[0], cur[1] - prev[1]))
        acc = {m: dict(p.terms) for m, p in elem.items()}
        wi = (prev[0], cur[1])
        for l in by_index.get(i, ()):
            hop = g.shift(wi, l)
            target = g.shift(cur, l)
            j = M.j_index(hop)
            var = ring.var(ArrowVar(var_side, i, l))
            delta = (target[0] - gens[j][0], target[1] - gens[j][1])
            for m, poly in _shift_element(elements[j], delta).items():
                slot = acc.setdefault(m, {})
                for e2, c2 in (var * poly).terms.items():
                    c3 = ring.coeff(slot.get(e2, 0) + c2)
                    if c3:
                        slot[e2] = c3
                    else:
                        slot.pop(e2, None)
        elements.append({m: Poly(ring, t) for m, t in acc.items() if t})
    return CellBasis(M, g, side, ring, gens, tuple(elements), reduced=False)


def _tail_reduce(elem, lead, basis):
    """Rewrite every non-lead monomial of the ideal via the cell basis."""
    M = basis.ideal
    g = basis.grading
    ring = basis.ring
    work = {m: dict(p.terms) for m, p in elem.items()}
    while True:
        candidates = [m for m in work if m != lead and M.contains(m)]
        if not candidates:
            break
        u = max(candidates, key=lambda m: side_key(m, TermSide.X_SMALL))
        coeff = work.pop(u)
        j = M.j_index(u)
        gj = M.gens[j]
        delta = (u[0] - gj[0], u[1] - gj[1])
        for m, poly in basis.element(j).items():
            if m == gj:
                continue
            m2 = (m[0] + delta[0], m[1] + delta[1])
            slot = work.setdefault(m2, {})
            for e1, c1 in coeff.items():
                for e2, c2 in poly.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = ring.coeff(slot.get(e, 0) - c1 * c2)
                    if c:
                        slot[e] = c
                    else:
                        slot.pop(e, None)
        work = {m: t for m, t in work.items() if t}
    return {m: Poly(ring, t) for m, t in work.items()}


def cell_generators_g(M, g, side=TermSide.X_SMALL, ring=None, var_side=0,
                      f_basis=None):
    """Reduced cell basis: tails are supported on standard monomials of M."""
    basis = f_basis or cell_generators_f(M, g, side, ring=ring,
                                         var_side=var_side)
    if side is TermSide.Y_SMALL:
        swapped = cell_generators_g(M.swap(), g.swap(), TermSide.X_SMALL,
                                    ring=basis.ring, var_side=var_side)
        elements = tuple(
            {(b, a): poly for (a, b), poly in elem.items()}
            for elem in swapped.elements
        )
        leads = tuple((b, a) for a, b in swapped.leads)
        return CellBasis(M, g, side, swapped.ring, leads, elements, reduced=True)
    reduced = []
    for i, elem in enumerate(basis.elements):
        lead = M.gens[i]
        red = _tail_reduce(elem, lead, basis)
        assert all(m == lead or not M.contains(m) for m in red)
        reduced.append(red)
    return CellBasis(M, g, side, basis.ring, basis.leads, tuple(reduced),
                     reduced=True)


def reduce_monomial(m, gbasis):
    """Normal form of a monomial of the ideal modulo the reduced cell basis.

    Returns a map from standard monomials (all of the same weight as m,
    strictly smaller under the basis side) to integer coefficient polynomials.
    """
    M = gbasis.ideal
    if not M.contains(m):
        raise ValueError(f"{format_monomial(m)} is not in {M}")
    if gbasis.side is not TermSide.X_SMALL:
        raise ValueError("reduction is defined against an x-smaller basis")
    nf = _tail_reduce({m: gbasis.ring.one()}, None, gbasis)
    assert all(not M.contains(s) for s in nf)
    return nf


def normal_form_element(elem, gbasis):
    """Tail-reduce an arbitrary homogeneous element against the basis."""
    return _tail_reduce(elem, None, gbasis)


@dataclass(frozen=True)
class EdgeIdeal:
    """Integer equations cutting out the ideals whose two limits are M and N.

    Keys run over every pair (n, s) with n a minimal generator of N and s a
    standard monomial of M of the same weight; values may be zero.
    """

    M: MonomialIdeal2
    N: MonomialIdeal2
    grading: Grading
    ring: Ring
    generators: tuple  # ((n, s, Poly), ...)

    def nonzero_generators(self):
        return [p for _, _, p in self.generators if p]

    def generator(self, n, s):
        for nn, ss, p in self.generators:
            if nn == n and ss == s:
                return p
        raise KeyError((n, s))


def edge_ideal(M, N, g):
    """Equations for the pair, with M strictly above N (x-smaller side)."""
    from .arrows import dominates

    if hilbert_function(M, g) != hilbert_function(N, g):
        raise ValueError("the two ideals have different Hilbert functions")
    if M == N or not dominates(M, N, g, TermSide.X_SMALL):
        raise ValueError("first ideal must dominate the second strictly")

    m_arrows = significant_arrows(M, g, TermSide.X_SMALL).positive
    n_arrows = significant_arrows(N, g, TermSide.Y_SMALL).positive
    ring = arrow_ring(m_arrows, n_arrows)
    gb = cell_generators_g(M, g, TermSide.X_SMALL, ring=ring, var_side=0)
    nf_basis = cell_generators_f(N, g, TermSide.Y_SMALL, ring=ring, var_side=1)

    std_by_weight = {}
    for s in M.standard_monomials():
        std_by_weight.setdefault(g.weight(s), []).append(s)

    generators = []
    for i, n in enumerate(nf_basis.leads):
        w = g.weight(n)
        nf = normal_form_element(nf_basis.element(i), gb)
        targets = sorted(std_by_weight.get(w, ()),
                         key=lambda s: side_key(s, TermSide.X_SMALL),
                         reverse=True)
        seen = set()
        for s, poly in nf.items():
            assert g.weight(s) == w
            seen.add(s)
            assert s in targets
        assert targets or not nf
        for s in targets:
            poly = nf.get(s, ring.zero())
            for c in poly.terms.values():
                assert isinstance(c, int), "edge equations must be integral"
            generators.append((n, s, poly))
    return EdgeIdeal(M, N, g, ring, tuple(generators))


def extremal_ideals(H, g):
    """Unique top and bottom monomial ideals with Hilbert function H.

    Found by exhaustive comparison among all monomial ideals of the right
    colength; raises when H is not realized.
    """
    from .arrows import dominates
    from .monomial import enumerate_ideals

    d = H.total()
    pool = [M for M in enumerate_ideals(d) if hilbert_function(M, g) == H]
    if not pool:
        raise ValueError("Hilbert function is not realized by a monomial ideal")
    tops = [M for M in pool
            if all(dominates(M, other, g, TermSide.X_SMALL) for other in pool)]
    bottoms = [M for M in pool
               if all(dominates(other, M, g, TermSide.X_SMALL) for other in pool)]
    if len(tops) != 1 or len(bottoms) != 1:
        raise ValueError("poset of ideals lacks a unique top or bottom")
    return tops[0], bottoms[0]


def _axis_arrow_count(M):
    """Tangent directions along the two degenerate gradings."""
    return M.a0 + M.be


def tangent_weight_count(M):
    """Total significant arrows over all gradings; always twice the colength."""
    from math import gcd

    total = _axis_arrow_count(M)
    bound_a = max(M.be, 1)
    bound_b = max(M.a0, 1)
    for alpha in range(1, bound_a + 1):
        for beta in range(1, bound_b + 1):
            if gcd(alpha, beta) != 1:
                continue
            arrows = significant_arrows(M, Grading(alpha, beta))
            total += len(arrows.positive) + len(arrows.negative)
    return total
