"""Edge schemes in more than two variables, on a declared degree window.

The two-variable machinery does not carry over verbatim (cells need not be
affine), so here a candidate ideal is parametrized degree by degree with
generic coefficients: each minimal generator m of M picks up free
coefficients on the standard monomials of its degree class that sit strictly
below m, and the requirements "initial ideal is M, opposite initial ideal is
N" become polynomial constraints: every syzygy-degree S-pair must reduce to
zero against the family, and each generator of the N-side family must reduce
to zero as well.  Everything happens inside a finite degree window, declared
by the caller and re-checkable one degree higher.

This is enough for the Hilbert scheme of two points in the projective plane,
and for colength-d ideals in two variables it must agree with the staircase
route, which the test suite uses as a cross-engine oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .groebner import DEFAULT_BUDGET, is_trivial
from .poly import ArrowVar, Ring


def _monomials_of_degree(nvars, weights, t):
    """All exponent tuples of weighted degree t, lexicographic order."""
    out = []

    def rec(prefix, rest):
        i = len(prefix)
        if i == nvars - 1:
            q, r = divmod(rest, weights[i])
            if r == 0:
                out.append(tuple(prefix) + (q,))
            return
        for e in range(rest // weights[i] + 1):
            rec(prefix + [e], rest - e * weights[i])

    rec([], t)
    return out


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


@dataclass(frozen=True)
class NMonomialIdeal:
    """Monomial ideal given by minimal generators inside a degree window."""

    nvars: int
    gens: tuple
    weights: tuple

    def __post_init__(self):
        gens = tuple(sorted(tuple(g) for g in self.gens))
        for u, v in combinations(gens, 2):
            if _divides(u, v) or _divides(v, u):
                raise ValueError("generators are not minimal")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "weights", tuple(self.weights))

    def contains(self, m):
        return any(_divides(g, m) for g in self.gens)

    def degree(self, m):
        return sum(w * e for w, e in zip(self.weights, m))

    def hilbert_values(self, degrees):
        """Quotient dimensions on the window, by monomial counting."""
        out = {}
        for t in degrees:
            mons = _monomials_of_degree(self.nvars, self.weights, t)
            out[t] = sum(1 for m in mons if not self.contains(m))
        return out

    def permute(self, perm):
        """Relabel variables: position i receives old variable perm[i]."""
        gens = tuple(tuple(g[perm[i]] for i in range(self.nvars))
                     for g in self.gens)
        weights = tuple(self.weights[perm[i]] for i in range(self.nvars))
        return NMonomialIdeal(self.nvars, gens, weights)

    def __str__(self):
        def fmt(m):
            parts = []
            for i, e in enumerate(m):
                if e == 1:
                    parts.append(f"x{i}")
                elif e > 1:
                    parts.append(f"x{i}^{e}")
            return "*".join(parts) if parts else "1"

        return "<" + ", ".join(fmt(g) for g in self.gens) + ">"


def degree_classes(nvars, weights, c, t):
    """Partition the degree-t monomials into chains under adding c.

    Each class is returned from the large end downward: index 0 is the
    monomial with the most room to move against c, and each later entry adds
    one copy of c.
    """
    mons = set(_monomials_of_degree(nvars, weights, t))
    seen = set()
    classes = []
    for m in sorted(mons):
        if m in seen:
            continue
        top = m
        while True:
            up = tuple(a - b for a, b in zip(top, c))
            if any(x < 0 for x in up) or up not in mons:
                break
            top = up
        chain = [top]
        while True:
            down = tuple(a + b for a, b in zip(chain[-1], c))
            if any(x < 0 for x in down) or down not in mons:
                break
            chain.append(down)
        seen.update(chain)
        classes.append(tuple(chain))
    return classes


def candidate_refinements(nvars, weights, degrees):
    """Primitive direction vectors from same-degree exponent differences."""
    seen = set()
    out = []
    for t in degrees:
        mons = _monomials_of_degree(nvars, weights, t)
        for u, v in combinations(mons, 2):
            c = tuple(a - b for a, b in zip(u, v))
            g = gcd(*(abs(x) for x in c)) if nvars > 1 else abs(c[0])
            g = g or 1
            c = tuple(x // g for x in c)
            canon = max(c, tuple(-x for x in c))
            if canon not in seen:
                seen.add(canon)
                out.append(canon)
    out.sort()
    return out


def class_dominates(M, N, c, degrees):
    """Chain-wise dominance of M over N on the window classes."""
    for t in degrees:
        for chain in degree_classes(M.nvars, M.weights, c, t):
            pos_m = [k for k, m in enumerate(chain) if M.contains(m)]
            pos_n = [k for k, m in enumerate(chain) if N.contains(m)]
            if len(pos_m) != len(pos_n):
                return False
            if any(a > b for a, b in zip(pos_m, pos_n)):
                return False
    return True


def _family(ideal, c, degrees, ring, var_side, opposite):
    """Generic-coefficient deformations of the generators, one per generator.

    A generator m picks up one variable per standard monomial strictly after
    it on its chain (strictly before it when `opposite`).  Returns a list of
    dicts: exponent tuple -> Poly coefficient.
    """
    members = []
    for t in degrees:
        for chain in degree_classes(ideal.nvars, ideal.weights, c, t):
            members.append(chain)
    out = []
    for gi, gen in enumerate(ideal.gens):
        chain = next(ch for ch in members if gen in ch)
        k = chain.index(gen)
        if opposite:
            tail = chain[k - 1::-1] if k else ()
        else:
            tail = chain[k + 1:]
        row = {gen: ring.one()}
        for step, u in enumerate(tail, start=1):
            if ideal.contains(u):
                continue
            var = ring.var(ArrowVar(var_side, gi, step))
            row[u] = var
        out.append(row)
    return out


def _reduce_against(poly_row, M, families_by_gen):
    """Eliminate every in-M monomial of a row using the generic family.

    Reduction strictly descends each chain, so it terminates; the remainder
    is supported on standard monomials.
    """
    work = dict(poly_row)
    while True:
        inside = [m for m in work if M.contains(m)]
        if not inside:
            break
        inside.sort()
        m = inside[0]
        coeff = work.pop(m)
        gen = next(g for g in M.gens if _divides(g, m))
        shift = tuple(a - b for a, b in zip(m, gen))
        for u, cpoly in families_by_gen[gen].items():
            if u == gen:
                continue
            target = tuple(a + b for a, b in zip(u, shift))
            add = coeff * cpoly
            if target in work:
                merged = work[target] + add
            else:
                merged = add
            if merged:
                work[target] = merged
            else:
                work.pop(target, None)
    return work


def edge_scheme_general(M, N, c, window_degrees, spair_degrees=None):
    """Constraint ideal for "initial ideal M, opposite initial ideal N".

    `window_degrees` must cover the generators of both ideals;
    `spair_degrees` (defaulting to every window degree above the generators)
    bounds which syzygy degrees are imposed.  Raises when the window misses a
    needed lcm degree, rather than guessing.
    """
    if M == N:
        raise ValueError("the two ideals must differ")
    if not (any(x > 0 for x in c) and any(x < 0 for x in c)):
        raise ValueError("direction must have entries of both signs")
    hm = M.hilbert_values(window_degrees)
    hn = N.hilbert_values(window_degrees)
    if hm != hn:
        raise ValueError("Hilbert values differ on the window")
    if not class_dominates(M, N, c, window_degrees):
        raise ValueError("first ideal must dominate the second on the window")

    mvars = []
    nvars_list = []
    _family(M, c, window_degrees, _VarCollector(0, mvars), 0, False)
    _family(N, c, window_degrees, _VarCollector(1, nvars_list), 1, True)
    ring = Ring(tuple(sorted(set(mvars))) + tuple(sorted(set(nvars_list))))
    fam_m = _family(M, c, window_degrees, ring, 0, False)
    fam_n = _family(N, c, window_degrees, ring, 1, True)
    by_gen = {gen: row for gen, row in zip(M.gens, fam_m)}

    equations = []

    def emit(remainder):
        for m, poly in sorted(remainder.items()):
            if M.contains(m):
                raise AssertionError("reduction left an in-ideal monomial")
            if poly:
                equations.append(poly)

    gen_degrees = {M.degree(g) for g in M.gens}
    if spair_degrees is None:
        spair_degrees = [t for t in window_degrees if t > min(gen_degrees)]
    max_window = max(window_degrees)
    for (g1, r1), (g2, r2) in combinations(zip(M.gens, fam_m), 2):
        lcm = tuple(max(a, b) for a, b in zip(g1, g2))
        t = M.degree(lcm)
        if t > max_window:
            continue
        if t not in spair_degrees:
            raise ValueError(
                f"syzygy degree {t} falls outside the declared window")
        s1 = tuple(a - b for a, b in zip(lcm, g1))
        s2 = tuple(a - b for a, b in zip(lcm, g2))
        row = {}
        for u, poly in r1.items():
            row[tuple(a + b for a, b in zip(u, s1))] = poly
        for u, poly in r2.items():
            target = tuple(a + b for a, b in zip(u, s2))
            if target in row:
                merged = row[target] - poly
                if merged:
                    row[target] = merged
                else:
                    row.pop(target)
            else:
                row[target] = -poly
        emit(_reduce_against(row, M, by_gen))

    for row in fam_n:
        emit(_reduce_against(dict(row), M, by_gen))

    return ring, equations


class _VarCollector:
    """Stand-in ring that records which variables a family would use."""

    def __init__(self, side, sink):
        self.side = side
        self.sink = sink

    def one(self):
        return 1

    def var(self, v):
        self.sink.append(v)
        return 1


TWO_POINTS_WINDOW = (0, 1, 2, 3)


def fixed_points_two_points_p2():
    """The monomial ideals with the two-points Hilbert values (1, 3, 2, 2).

    Ideals are generated by four quadrics; the label pairs each with the
    generators of its saturation (a linear form and one more monomial).
    """
    deg2 = _monomials_of_degree(3, (1, 1, 1), 2)
    out = []
    for quad in combinations(deg2, 4):
        M = NMonomialIdeal(3, quad, (1, 1, 1))
        values = M.hilbert_values(TWO_POINTS_WINDOW)
        if values == {0: 1, 1: 3, 2: 2, 3: 2}:
            out.append(M)
    return out


def saturation_label(M):
    """Generators of the saturation: the linear variable plus one monomial."""
    for i in range(3):
        covered = [g for g in M.gens if g[i] >= 1]
        if len(covered) == 3:
            extra = next(g for g in M.gens if g[i] == 0)
            parts = [f"x{i}"]
            factors = []
            for k, e in enumerate(extra):
                if e == 1:
                    factors.append(f"x{k}")
                elif e > 1:
                    factors.append(f"x{k}^{e}")
            parts.append("*".join(factors))
            return "<" + ", ".join(parts) + ">"
    raise ValueError("not a two-points fixed ideal")


def from_saturation(linear, quad):
    """Degree-two truncation of <x_linear, quad>: the fixed-point ideal."""
    gens = []
    for i in range(3):
        e = [0, 0, 0]
        e[linear] += 1
        e[i] += 1
        gens.append(tuple(e))
    gens.append(tuple(quad))
    gens = [g for g in gens
            if not any(h != g and _divides(h, g) for h in gens)]
    return NMonomialIdeal(3, tuple(sorted(set(gens))), (1, 1, 1))


def two_points_graph(budget=DEFAULT_BUDGET, verify_window=False):
    """Vertices, edges, and edge dimensions for two points in the plane.

    Returns (vertices, edges, dims) where edges maps a vertex index pair to
    the list of directions carrying a nonempty edge scheme and dims holds the
    corresponding quotient dimensions.
    """
    from .groebner import buchberger, quotient_dimension

    vertices = fixed_points_two_points_p2()
    degrees = TWO_POINTS_WINDOW
    directions = candidate_refinements(3, (1, 1, 1), (1, 2))
    edges = {}
    dims = {}
    for i, j in combinations(range(len(vertices)), 2):
        M, N = vertices[i], vertices[j]
        if M.hilbert_values(degrees) != N.hilbert_values(degrees):
            continue
        for c in directions:
            for big, small, direction in ((M, N, c), (N, M, c)):
                try:
                    ring, eqs = edge_scheme_general(big, small, direction,
                                                    degrees)
                except ValueError:
                    continue
                if verify_window:
                    ring4, eqs4 = edge_scheme_general(
                        big, small, direction, tuple(degrees) + (4,))
                    verdict4 = is_trivial(eqs4, budget=budget)
                else:
                    verdict4 = None
                verdict = is_trivial(eqs, budget=budget)
                if verify_window and verdict4 is not None:
                    assert verdict == verdict4
                assert verdict is not None, "budget exhausted on a window run"
                if verdict is False:
                    gb = buchberger(eqs, budget=budget)
                    dim = quotient_dimension(gb, nvars=ring.nvars)
                    key = (i + 1, j + 1)
                    edges.setdefault(key, []).append(direction)
                    prev = dims.get(key)
                    dims[key] = dim if prev is None else max(prev, dim)
                break
    return vertices, edges, dims
