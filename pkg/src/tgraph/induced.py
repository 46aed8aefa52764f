"""Extract the arrow map induced by an explicit homogeneous ideal.

Input is a list of homogeneous generators with exact coefficients (any field
whose elements support Python arithmetic, Fraction by default).  Per degree
class the generators span a slice of the ideal; row reduction against the
x-smaller order reads off the initial monomials, and a second reduction from
the opposite end finds, for each initial monomial m, the largest possible
opposite-side initial monomial among slice members leading with m.  That
assignment is the map the ideal induces between its two initial ideals.
"""
from __future__ import annotations

from fractions import Fraction

from .arrows import build_arrow_map, is_arrow_map
from .monomial import MonomialIdeal2, TermSide, side_key
from .poly import ArrowVar


def _as_field(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def rref(rows, columns):
    """Reduced row echelon form over an exact field.

    `rows` are dicts column -> coefficient, `columns` the elimination order
    (most significant first).  Returns {pivot column: normalized row}.
    """
    colpos = {c: i for i, c in enumerate(columns)}
    pivots = {}
    for row in rows:
        work = {c: _as_field(v) for c, v in row.items() if v}
        for c in sorted(work, key=lambda c: colpos[c]):
            if c in pivots and work.get(c):
                factor = work[c]
                for c2, v2 in pivots[c].items():
                    step = factor * v2
                    new = work[c2] - step if c2 in work else -step
                    if new:
                        work[c2] = new
                    else:
                        work.pop(c2, None)
        work = {c: v for c, v in work.items() if v}
        if not work:
            continue
        lead = min(work, key=lambda c: colpos[c])
        inv = work[lead]
        work = {c: v / inv for c, v in work.items()}
        for c2, prow in pivots.items():
            if lead in prow:
                factor = prow[lead]
                merged = dict(prow)
                for c3, v3 in work.items():
                    step = factor * v3
                    new = merged[c3] - step if c3 in merged else -step
                    if new:
                        merged[c3] = new
                    else:
                        merged.pop(c3, None)
                pivots[c2] = merged
        pivots[lead] = work
    return pivots


def specialize(basis, values):
    """Evaluate a cell basis at a coordinate vector; returns monomial rows."""
    out = []
    for elem in basis.elements:
        row = {}
        for m, poly in elem.items():
            total = None
            for exps, coeff in poly.terms.items():
                term = _as_field(coeff)
                for var, e in zip(poly.ring.vars, exps):
                    if e:
                        term = term * (values[var] ** e)
                total = term if total is None else total + term
            if total:
                row[m] = total
        out.append(row)
    return out


def cell_point(M, g, values, side=TermSide.X_SMALL):
    """Rows of the ideal at a point of the cell of M (values per arrow)."""
    from .cells import cell_generators_f, significant_arrows

    arrows = significant_arrows(M, g, side).positive
    basis = cell_generators_f(M, g, side)
    assignment = {}
    for (i, l) in arrows:
        var = ArrowVar(0, i, l)
        assignment[var] = _as_field(values.get((i, l), 0))
    return specialize(basis, assignment)


def _weight_of_row(row, g):
    weights = {g.weight(m) for m in row}
    if len(weights) != 1:
        raise ValueError("generators must be homogeneous for the grading")
    return weights.pop()


def _slice_rows(gens, g, w):
    rows = []
    for row in gens:
        if not row:
            continue
        rw = _weight_of_row(row, g)
        if rw > w:
            continue
        for u in g.monomials_of_weight(w - rw):
            rows.append({(m[0] + u[0], m[1] + u[1]): c for m, c in row.items()})
    return rows


def _desc(columns, side):
    return sorted(columns, key=lambda m: side_key(m, side), reverse=True)


def initial_ideal(gens, g, colength_bound, side=TermSide.X_SMALL):
    """Initial monomial ideal of the span of the generators, as a staircase.

    Scans degree classes up to a window determined by the colength bound and
    rejects inputs that do not define a finite-colength point (rank deficits
    or pivot patterns that fail to form a monomial staircase).
    """
    wmax = (g.alpha + g.beta) * colength_bound
    pivots_all = []
    std_total = 0
    for w in range(wmax + 1):
        columns = _desc(g.monomials_of_weight(w), side)
        piv = rref(_slice_rows(gens, g, w), columns)
        pivots_all.extend(piv)
        std_total += len(columns) - len(piv)
    minimal = [m for m in pivots_all
               if not any(u != m and u[0] <= m[0] and u[1] <= m[1]
                          for u in pivots_all)]
    minimal.sort(key=lambda m: (m[1], m[0]))
    try:
        M = MonomialIdeal2(tuple(minimal))
    except ValueError as exc:
        raise ValueError(f"initial monomials do not form a staircase: {exc}")
    if M.colength != std_total:
        raise ValueError("rank pattern does not match a finite-colength point")
    for w in range(wmax + 1):
        expected = {m for m in g.monomials_of_weight(w) if M.contains(m)}
        columns = _desc(g.monomials_of_weight(w), side)
        got = set(rref(_slice_rows(gens, g, w), columns))
        if got != expected:
            raise ValueError("pivot pattern is not an ideal slice")
    return M


def induced_arrow_map(gens, g, colength_bound):
    """The arrow map carried by a homogeneous ideal, plus its two limits.

    Returns (M, N, ArrowMap) where M is the x-smaller initial ideal and N the
    opposite one.  The witness is re-validated against the map conditions.
    """
    M = initial_ideal(gens, g, colength_bound, TermSide.X_SMALL)
    N = initial_ideal(gens, g, colength_bound, TermSide.Y_SMALL)
    assignment = {}
    from .arrows import active_classes

    for w, mons_m, mons_n in active_classes(M, N, g):
        columns = _desc(g.monomials_of_weight(w), TermSide.X_SMALL)
        piv = rref(_slice_rows(gens, g, w), columns)
        assert set(piv) == set(mons_m)
        colpos = {c: i for i, c in enumerate(columns)}
        for m in _desc(mons_m, TermSide.X_SMALL):
            below = [piv[m2] for m2 in mons_m
                     if side_key(m2, TermSide.X_SMALL)
                     < side_key(m, TermSide.X_SMALL)]
            opp_cols = list(reversed(columns))
            opp_piv = rref(below, opp_cols)
            vec = dict(piv[m])
            while True:
                tail = max(vec, key=lambda c: colpos[c])
                if tail not in opp_piv:
                    break
                factor = vec[tail]
                for c2, v2 in opp_piv[tail].items():
                    step = factor * v2
                    new = vec[c2] - step if c2 in vec else -step
                    if new:
                        vec[c2] = new
                    else:
                        vec.pop(c2, None)
            assignment[m] = max(vec, key=lambda c: colpos[c])
    witness = build_arrow_map(M, N, g, TermSide.X_SMALL, assignment)
    assert is_arrow_map(M, N, g, TermSide.X_SMALL, witness.as_dict())
    return M, N, witness
