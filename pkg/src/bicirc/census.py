"""Census of edge-transitive graphs in F(d) over canonical bicirculant symbols.

Per symbol the pipeline is: build -> connectivity -> walk-count filter ->
full automorphism group -> transitivity flags.  The walk-count filter checks
that ``A^k[x, y]`` (k = 2, 3, 4) is the same on every edge.  Any edge-transitive
graph passes it, since those counts are automorphism invariants.  Only the
survivors pay for the automorphism search.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .bicirculant import BicirculantSymbol, build_graph, enumerate_symbols, raw_symbol_count
from .graph import is_connected
from .perm import DEFAULT_ELEMENT_CAP, CapExceeded
from .symmetry import (
    all_minimal_block_systems,
    arc_orbit_count,
    are_isomorphic,
    edge_orbit_count,
    search_automorphisms,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusJob:
    d: int
    max_order: int
    twice_odd: bool = True
    connected_only: bool = True
    jobs: int = 1
    element_cap: int = DEFAULT_ELEMENT_CAP
    all_records: bool = False

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("valence must be at least 3")
        if self.max_order < 2 * self.d + 2 and self.max_order < 6:
            raise ValueError("order cap below the smallest plausible order")

    def half_orders(self) -> list[int]:
        top = self.max_order // 2
        return [n for n in range(3, top + 1)
                if (n % 2 == 1 or not self.twice_odd) and self.d - 2 <= n]


@dataclass
class CensusRecord:
    symbol: str
    order: int
    connected: bool
    stage: str                       # "pruned" | "full" | "undecided"
    aut_order: int | None = None
    vertex_transitive: bool | None = None
    edge_transitive: bool | None = None
    arc_transitive: bool | None = None
    primitive: bool | None = None
    class_id: int | None = None
    undecided: str | None = None


@dataclass
class CensusResult:
    job: CensusJob
    counts: dict = field(default_factory=dict)
    records: list[CensusRecord] = field(default_factory=list)
    classes: list[dict] = field(default_factory=list)

    @property
    def undecided(self) -> list[CensusRecord]:
        return [r for r in self.records if r.stage == "undecided"]

    def to_json(self) -> str:
        return json.dumps({
            "job": asdict(self.job),
            "counts": self.counts,
            "classes": self.classes,
            "records": [asdict(r) for r in self.records],
        }, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = list(CensusRecord.__dataclass_fields__)
        w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        w.writeheader()
        for r in self.records:
            w.writerow(asdict(r))
        return buf.getvalue()


def adjacency(sym: BicirculantSymbol) -> np.ndarray:
    n = sym.n
    i = np.arange(n)
    A = np.zeros((2 * n, 2 * n), dtype=np.int64)
    A[i, (i + 1) % n] = 1
    A[n + i, n + (i + sym.b) % n] = 1
    for s in sym.spokes:
        A[i, n + (i + s) % n] = 1
    return A | A.T


def passes_walk_filter(A: np.ndarray, depth: int = 4) -> bool:
    rows, cols = np.nonzero(np.triu(A))
    P = A
    for _ in range(depth - 1):
        P = P @ A
        vals = P[rows, cols]
        if vals.min() != vals.max():
            return False
    return True


def _process_slice(job: CensusJob, n: int, b: int) -> tuple[dict, list[CensusRecord], list]:
    counts = {"canonical": 0, "disconnected": 0, "pruned": 0, "full": 0, "undecided": 0}
    records = []
    survivors = []
    for sym in enumerate_symbols(n, job.d, b):
        counts["canonical"] += 1
        A = adjacency(sym)
        # every v_j meets a spoke and the u-cycle is connected
        connected = len(sym.spokes) > 0
        if not connected:
            counts["disconnected"] += 1
            if job.connected_only:
                continue
        if not passes_walk_filter(A):
            counts["pruned"] += 1
            if job.all_records:
                records.append(CensusRecord(str(sym), sym.order, connected, "pruned",
                                            edge_transitive=False))
            continue
        g = build_graph(sym)
        try:
            search = search_automorphisms(g)
            G = search.group(job.element_cap)
            et = edge_orbit_count(g, G) <= 1
            rec = CensusRecord(
                str(sym), sym.order, is_connected(g), "full",
                aut_order=search.order,
                vertex_transitive=G.is_transitive(),
                edge_transitive=et,
                arc_transitive=arc_orbit_count(g, G) <= 1,
                primitive=G.is_transitive() and not all_minimal_block_systems(G),
            )
            counts["full"] += 1
        except CapExceeded as exc:
            rec = CensusRecord(str(sym), sym.order, connected, "undecided",
                               undecided=f"element cap: {exc}")
            counts["undecided"] += 1
        records.append(rec)
        if rec.edge_transitive:
            survivors.append(sym)
    return counts, records, survivors


def search(job: CensusJob) -> CensusResult:
    slices = [(n, b) for n in job.half_orders() for b in range(1, (n - 1) // 2 + 1)]
    if job.jobs > 1:
        with ProcessPoolExecutor(job.jobs) as pool:
            parts = list(pool.map(_process_slice, [job] * len(slices),
                                  [s[0] for s in slices], [s[1] for s in slices]))
    else:
        parts = [_process_slice(job, n, b) for n, b in slices]

    result = CensusResult(job)
    totals = {"raw": 0, "canonical": 0, "disconnected": 0, "pruned": 0,
              "full": 0, "undecided": 0}
    per_n: dict[int, dict] = {}
    survivors: list[BicirculantSymbol] = []
    for (n, b), (counts, records, surv) in zip(slices, parts):
        slot = per_n.setdefault(n, {"raw": raw_symbol_count(n, job.d)})
        for k, v in counts.items():
            slot[k] = slot.get(k, 0) + v
        result.records.extend(records)
        survivors.extend(surv)
    for n, slot in sorted(per_n.items()):
        log.info("d=%d n=%d: %s", job.d, n, slot)
        for k in totals:
            totals[k] += slot.get(k, 0)
    result.counts = {"total": totals, "per_n": {str(n): v for n, v in sorted(per_n.items())}}

    classes: list[tuple[BicirculantSymbol, object]] = []
    class_of: dict[str, int] = {}
    for sym in sorted(survivors, key=lambda s: (s.order, s)):
        g = build_graph(sym)
        for cid, (rep, rg) in enumerate(classes):
            if rg.n == g.n and are_isomorphic(rg, g):
                class_of[str(sym)] = cid
                break
        else:
            class_of[str(sym)] = len(classes)
            classes.append((sym, g))
    result.records.sort(key=lambda r: (r.order, BicirculantSymbol.parse(r.symbol)))
    for r in result.records:
        if r.symbol in class_of:
            r.class_id = class_of[r.symbol]
    for cid, (sym, g) in enumerate(classes):
        members = [s for s, c in class_of.items() if c == cid]
        rec = next(r for r in result.records if r.symbol == str(sym))
        result.classes.append({
            "class_id": cid, "representative": str(sym), "order": sym.order,
            "aut_order": rec.aut_order, "arc_transitive": rec.arc_transitive,
            "primitive": rec.primitive, "symbols": sorted(members),
        })
    return result
