"""Assemble the full torus graph for d points in the plane.

Vertices are the monomial ideals of colength d in partition order.  For every
unordered pair and every coprime grading under which the two ideals share a
Hilbert function, a record is produced by a filter chain of necessary
conditions (dominance order, arrow map, arrow map on the box quotients) with
the exact equation solver as the final stage.  At full depth the solver runs
on every order-comparable pair so its verdicts stay independent of the
combinatorial filters and can be checked against them.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb, gcd

from .arrows import arrow_map_exists, dual_condition
from .edges import EdgeRecord, EdgeStatus, decide_edge, oriented_pair
from .groebner import DEFAULT_BUDGET
from .monomial import (Grading, MonomialIdeal2, enumerate_ideals,
                       format_ideal, hilbert_function, parse_ideal)

SCHEMA_VERSION = "1"


class PipelineDepth(Enum):
    ORDER_ONLY = "order"
    ARROWMAP = "arrowmap"
    DUAL = "dual"
    FULL = "full"


_DEPTH_RANK = {PipelineDepth.ORDER_ONLY: 0, PipelineDepth.ARROWMAP: 1,
               PipelineDepth.DUAL: 2, PipelineDepth.FULL: 3}


@lru_cache(maxsize=None)
def coprime_gradings(bound):
    """All gradings with weights between 1 and bound, ascending."""
    return tuple(Grading(a, b)
                 for a in range(1, bound + 1)
                 for b in range(1, bound + 1)
                 if gcd(a, b) == 1)


@lru_cache(maxsize=262144)
def _hf(M, g):
    return hilbert_function(M, g)


def candidate_gradings(M, N, bound=None):
    """Gradings under which the pair shares a Hilbert function.

    Weights range over [1, d]; an edge for any grading forces a tangent
    direction whose shift fits inside the staircases, so nothing outside
    that box can carry one.
    """
    if M.colength != N.colength:
        raise ValueError("candidate gradings need ideals of equal colength")
    bound = bound or M.colength
    return [g for g in coprime_gradings(bound) if _hf(M, g) == _hf(N, g)]


def pair_grading_conditions(M, N, g):
    """Evaluate the chain of necessary conditions for one pair and grading."""
    oriented = oriented_pair(M, N, g)
    out = {"order": oriented is not None, "arrow": False, "dual": False}
    if oriented is None:
        return out
    big, small = oriented
    witness = arrow_map_exists(big, small, g)
    out["arrow"] = witness is not None
    if witness is not None:
        dual_witness, _ = dual_condition(big, small, g)
        out["dual"] = dual_witness is not None
    return out


def evaluate_pair_grading(M, N, g, depth, budget=DEFAULT_BUDGET,
                          with_dimension=False, cache=None):
    """One record for (pair, grading) at the requested pipeline depth."""
    if depth is PipelineDepth.FULL:
        if cache is not None:
            hit = cache.get(M, N, g, budget, with_dimension)
            if hit is not None:
                return hit
        record = decide_edge(M, N, g, budget=budget,
                             with_dimension=with_dimension)
        if cache is not None:
            cache.put(record, budget, with_dimension)
        return record
    oriented = oriented_pair(M, N, g)
    if oriented is None:
        return EdgeRecord((M, N), g, EdgeStatus.NO_EDGE)
    if depth is PipelineDepth.ORDER_ONLY:
        return EdgeRecord((M, N), g, EdgeStatus.UNKNOWN)
    big, small = oriented
    if arrow_map_exists(big, small, g) is None:
        return EdgeRecord((M, N), g, EdgeStatus.NO_EDGE)
    if depth is PipelineDepth.ARROWMAP:
        return EdgeRecord((M, N), g, EdgeStatus.UNKNOWN)
    dual_witness, _ = dual_condition(big, small, g)
    if dual_witness is None:
        return EdgeRecord((M, N), g, EdgeStatus.NO_EDGE)
    return EdgeRecord((M, N), g, EdgeStatus.UNKNOWN)


@dataclass
class TGraph:
    d: int
    depth: PipelineDepth
    vertices: list
    records: list  # EdgeRecord per (pair, grading), keyed below
    keys: list  # ((i, j), Grading) parallel to records, 1-based indices
    simple_edges: set = field(default_factory=set)

    def vertex_index(self, M):
        return self.vertices.index(M) + 1

    def edge_gradings(self, i, j):
        out = []
        for ((a, b), g), rec in zip(self.keys, self.records):
            if (a, b) == (i, j) and rec.status is EdgeStatus.EDGE:
                out.append(g)
        return out


def pair_grading_jobs(vertices, bound=None):
    """All (pair index, grading) jobs with matching Hilbert functions."""
    bound = bound or (vertices[0].colength if vertices else 1)
    jobs = []
    for g in coprime_gradings(bound):
        buckets = {}
        for idx, M in enumerate(vertices):
            buckets.setdefault(_hf(M, g), []).append(idx)
        for members in buckets.values():
            for x in range(len(members)):
                for y in range(x + 1, len(members)):
                    jobs.append(((members[x] + 1, members[y] + 1), g))
    jobs.sort(key=lambda job: (job[0], (job[1].alpha, job[1].beta)))
    return jobs


def _full_job(args):
    m_gens, n_gens, alpha, beta, budget, with_dimension = args
    record = decide_edge(MonomialIdeal2(m_gens), MonomialIdeal2(n_gens),
                         Grading(alpha, beta), budget=budget,
                         with_dimension=with_dimension)
    return record.to_json()


def build_tgraph(d, depth=PipelineDepth.FULL, budget=DEFAULT_BUDGET,
                 with_dimension=False, cache=None, threads=1):
    """Vertices, per-(pair, grading) records, and the confirmed simple edges."""
    vertices = enumerate_ideals(d)
    jobs = pair_grading_jobs(vertices, bound=d)
    records = []
    if (depth is PipelineDepth.FULL and threads > 1):
        todo = []
        for (i, j), g in jobs:
            todo.append((vertices[i - 1].gens, vertices[j - 1].gens,
                         g.alpha, g.beta, budget, with_dimension))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for data in pool.map(_full_job, todo, chunksize=8):
                records.append(EdgeRecord.from_json(data))
    else:
        for (i, j), g in jobs:
            records.append(evaluate_pair_grading(
                vertices[i - 1], vertices[j - 1], g, depth, budget=budget,
                with_dimension=with_dimension, cache=cache))
    simple = {key[0] for key, rec in zip(jobs, records)
              if rec.status is EdgeStatus.EDGE}
    return TGraph(d, depth, vertices, records, jobs, simple)


@dataclass
class CountRow:
    d: int
    ideals: int
    pairs: int
    ordered: int
    arrowmap: int
    dual: int
    edges: object  # int at full depth, None otherwise
    unknown: int = 0

    def as_list(self):
        edges = "" if self.edges is None else self.edges
        return [self.d, self.ideals, self.pairs, self.ordered,
                self.arrowmap, self.dual, edges]


TABLE_HEADER = ["d", "ideals", "pairs", "pairs_ordered", "pairs_arrowmap",
                "pairs_dual_arrowmap", "edges"]


def count_row(d, depth=PipelineDepth.FULL, budget=DEFAULT_BUDGET, cache=None,
              threads=1):
    """One summary row: unordered-pair counts for each necessary condition.

    A pair is counted for a condition when some grading (and orientation)
    satisfies it together with every weaker condition; the edge count asks
    for a confirmed nonempty edge scheme under some grading.
    """
    vertices = enumerate_ideals(d)
    jobs = pair_grading_jobs(vertices, bound=d)
    by_pair = {}
    for (pair, g) in jobs:
        by_pair.setdefault(pair, []).append(g)

    ordered = arrow = dual = edges = unknown = 0
    rank = _DEPTH_RANK[depth]
    edge_jobs = []
    for pair in sorted(by_pair):
        M, N = vertices[pair[0] - 1], vertices[pair[1] - 1]
        found_order = found_arrow = found_dual = False
        for g in by_pair[pair]:
            oriented = oriented_pair(M, N, g)
            if oriented is None:
                continue
            found_order = True
            if rank < 1:
                break
            big, small = oriented
            if not found_arrow or not found_dual:
                witness = arrow_map_exists(big, small, g)
                if witness is None:
                    continue
                found_arrow = True
                if rank < 2:
                    break
                if dual_condition(big, small, g)[0] is not None:
                    found_dual = True
                    break
        ordered += found_order
        arrow += found_arrow
        dual += found_dual
        if rank >= 3 and found_order:
            edge_jobs.append(pair)

    if rank >= 3:
        for pair in edge_jobs:
            M, N = vertices[pair[0] - 1], vertices[pair[1] - 1]
            saw_unknown = False
            for g in by_pair[pair]:
                if oriented_pair(M, N, g) is None:
                    continue
                record = evaluate_pair_grading(M, N, g, PipelineDepth.FULL,
                                               budget=budget, cache=cache)
                if record.status is EdgeStatus.EDGE:
                    edges += 1
                    saw_unknown = False
                    break
                if record.status is EdgeStatus.UNKNOWN:
                    saw_unknown = True
            if saw_unknown:
                unknown += 1

    return CountRow(d, len(vertices), comb(len(vertices), 2), ordered,
                    arrow, dual, edges if rank >= 3 else None, unknown)


def count_table(d_min, d_max, depth=PipelineDepth.FULL, budget=DEFAULT_BUDGET,
                cache=None, threads=1):
    if not (1 <= d_min <= d_max):
        raise ValueError("need 1 <= d_min <= d_max")
    return [count_row(d, depth, budget=budget, cache=cache, threads=threads)
            for d in range(d_min, d_max + 1)]


def table_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow(row.as_list())
    return buf.getvalue()


def graph_to_json(graph):
    payload = {
        "schema": f"tgraph.graph/{SCHEMA_VERSION}",
        "d": graph.d,
        "depth": graph.depth.value,
        "vertices": [format_ideal(M) for M in graph.vertices],
        "records": [rec.to_json() for rec in graph.records],
        "keys": [
            {"pair": [i, j], "grading": {"alpha": g.alpha, "beta": g.beta}}
            for (i, j), g in graph.keys
        ],
        "simple_edges": sorted(list(e) for e in graph.simple_edges),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def graph_from_json(text):
    data = json.loads(text)
    vertices = [parse_ideal(s) for s in data["vertices"]]
    records = [EdgeRecord.from_json(r) for r in data["records"]]
    keys = [((k["pair"][0], k["pair"][1]),
             Grading(k["grading"]["alpha"], k["grading"]["beta"]))
            for k in data["keys"]]
    simple = {tuple(e) for e in data["simple_edges"]}
    return TGraph(data["d"], PipelineDepth(data["depth"]), vertices, records,
                  keys, simple)


def graph_to_dot(graph):
    lines = [f"graph tgraph_d{graph.d} {{", "  node [shape=box];"]
    for idx, M in enumerate(graph.vertices, start=1):
        label = "+".join(str(p) for p in M.to_partition())
        lines.append(f'  v{idx} [label="{label} = {format_ideal(M)}"];')
    for (i, j) in sorted(graph.simple_edges):
        gradings = graph.edge_gradings(i, j)
        tag = ", ".join(f"({g.alpha},{g.beta})" for g in gradings)
        lines.append(f'  v{i} -- v{j} [label="{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_csv(graph):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "alpha", "beta", "status", "dimension"])
    for ((i, j), g), rec in zip(graph.keys, graph.records):
        writer.writerow([i, j, g.alpha, g.beta, rec.status.value,
                         "" if rec.dimension is None else rec.dimension])
    return buf.getvalue()


class EdgeCache:
    """Content-addressed store of edge records for resumable table runs."""

    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, M, N, g, budget, with_dimension):
        key = json.dumps({
            "schema": f"tgraph.edge-record/{SCHEMA_VERSION}",
            "pair": sorted([format_ideal(M), format_ideal(N)]),
            "grading": [g.alpha, g.beta],
            "budget": budget,
            "with_dimension": bool(with_dimension),
        }, sort_keys=True)
        digest = hashlib.sha256(key.encode()).hexdigest()[:32]
        return os.path.join(self.directory, f"{digest}.json")

    def get(self, M, N, g, budget, with_dimension):
        path = self._path(M, N, g, budget, with_dimension)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return EdgeRecord.from_json(json.load(fh))

    def put(self, record, budget, with_dimension):
        M, N = record.pair
        path = self._path(M, N, record.grading, budget, with_dimension)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(record.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
