"""Decide whether a pair of monomial ideals is joined for a given grading.

The verdict is exact over characteristic zero: the pair is joined exactly
when the integer edge equations have a common zero over the algebraic
closure, i.e. when their reduced Groebner basis is not the unit ideal.
A finite characteristic can be requested as a fast pre-screen; such records
are labeled and never merged with the characteristic-zero graph.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .arrows import dominates
from .cells import edge_ideal
from .groebner import (DEFAULT_BUDGET, BudgetExceeded, buchberger,
                       quotient_dimension)
from .monomial import (Grading, TermSide, format_ideal, hilbert_function,
                       parse_ideal)
from .poly import Ring


class EdgeStatus(Enum):
    EDGE = "EDGE"
    NO_EDGE = "NO_EDGE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class EdgeRecord:
    pair: tuple  # (M, N) as given by the caller
    grading: Grading
    status: EdgeStatus
    dimension: object = None  # int when computed
    generator_count: int = 0
    s_pairs: int = 0
    time_ms: float = 0.0
    characteristic: int = 0

    def to_json(self):
        return {
            "schema": "tgraph.edge-record/1",
            "pair": [format_ideal(self.pair[0]), format_ideal(self.pair[1])],
            "grading": {"alpha": self.grading.alpha, "beta": self.grading.beta},
            "status": self.status.value,
            "dimension": self.dimension,
            "generator_count": self.generator_count,
            "groebner": {"s_pairs": self.s_pairs, "time_ms": self.time_ms},
            "characteristic": self.characteristic,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            pair=(parse_ideal(data["pair"][0]), parse_ideal(data["pair"][1])),
            grading=Grading(data["grading"]["alpha"], data["grading"]["beta"]),
            status=EdgeStatus(data["status"]),
            dimension=data.get("dimension"),
            generator_count=data.get("generator_count", 0),
            s_pairs=data.get("groebner", {}).get("s_pairs", 0),
            time_ms=data.get("groebner", {}).get("time_ms", 0.0),
            characteristic=data.get("characteristic", 0),
        )


def oriented_pair(M, N, g):
    """Order the pair with the dominating ideal first, or None if incomparable."""
    if dominates(M, N, g, TermSide.X_SMALL):
        return M, N
    if dominates(N, M, g, TermSide.X_SMALL):
        return N, M
    return None


def _char_ring(ring, char):
    if char == 0:
        return ring, lambda p: p
    modring = Ring(ring.vars, char=char)

    def convert(p):
        return modring.poly(p.terms)

    return modring, convert


def decide_edge(M, N, g, budget=DEFAULT_BUDGET, with_dimension=False, char=0):
    """Tri-state edge decision for one pair and grading.

    The pair must be distinct with equal Hilbert functions.  When neither
    ideal dominates the other no equations are formed and the verdict is
    immediate.
    """
    if M == N:
        raise ValueError("edge decision needs two distinct ideals")
    if hilbert_function(M, g) != hilbert_function(N, g):
        raise ValueError("the two ideals have different Hilbert functions")
    oriented = oriented_pair(M, N, g)
    if oriented is None:
        return EdgeRecord((M, N), g, EdgeStatus.NO_EDGE, characteristic=char)
    big, small = oriented
    ideal = edge_ideal(big, small, g)
    gens = ideal.nonzero_generators()
    ring, convert = _char_ring(ideal.ring, char)
    gens = [convert(p) for p in gens]
    start = time.perf_counter()
    try:
        gb = buchberger(gens, budget=budget)
    except BudgetExceeded:
        elapsed = (time.perf_counter() - start) * 1000.0
        return EdgeRecord((M, N), g, EdgeStatus.UNKNOWN,
                          generator_count=len(gens), s_pairs=budget,
                          time_ms=elapsed, characteristic=char)
    elapsed = (time.perf_counter() - start) * 1000.0
    if gb.is_trivial():
        status, dim = EdgeStatus.NO_EDGE, None
    else:
        status = EdgeStatus.EDGE
        dim = (quotient_dimension(gb, nvars=ring.nvars)
               if with_dimension else None)
    return EdgeRecord((M, N), g, status, dimension=dim,
                      generator_count=len(gens),
                      s_pairs=gb.stats["s_pairs"], time_ms=elapsed,
                      characteristic=char)


def edge_dimension(record_or_pair, g=None, budget=DEFAULT_BUDGET):
    """Dimension of a confirmed edge; recomputes when given a bare record."""
    if isinstance(record_or_pair, EdgeRecord):
        record = record_or_pair
        if record.status is not EdgeStatus.EDGE:
            raise ValueError("dimension is defined for confirmed edges only")
        if record.dimension is not None:
            return record.dimension
        M, N = record.pair
        fresh = decide_edge(M, N, record.grading, budget=budget,
                            with_dimension=True,
                            char=record.characteristic)
        return fresh.dimension
    M, N = record_or_pair
    fresh = decide_edge(M, N, g, budget=budget, with_dimension=True)
    if fresh.status is not EdgeStatus.EDGE:
        raise ValueError("dimension is defined for confirmed edges only")
    return fresh.dimension
