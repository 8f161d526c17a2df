"""Circulants Cay(Z_n, S) and the case analysis for arc-transitive ones.

For a connected arc-transitive circulant the classifier checks four cases:

* ``complete``      S = Z_n minus 0;
* ``normal``        the rotation group is normal in Aut;
* ``coset_blocks``  a proper non-trivial subgroup D is a block for Aut, the
                    quotient by the cosets of D is a connected arc-transitive
                    circulant, and S is a union of D-cosets;
* ``tensor``        Z_n = D x E with |D| > 3, gcd(|D|, |E|) = 1, both blocks,
                    S = D^# + R with R in E^#, and Cay(E, R) connected and
                    arc-transitive (classified recursively).

Every case that verifies is reported; the cases are not exclusive.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

import numpy as np

from .graph import Graph, VertexPartition
from .perm import Perm
from .symmetry import AutomorphismSearch, arc_orbit_count, search_automorphisms

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CirculantSymbol:
    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        S = tuple(sorted({s % self.n for s in self.S}))
        if 0 in S:
            raise ValueError("0 in connection set")
        if set(S) != {(-s) % self.n for s in S}:
            raise ValueError(f"connection set {S} is not inverse-closed mod {self.n}")
        object.__setattr__(self, "S", S)

    @property
    def valence(self) -> int:
        return len(self.S)

    def __str__(self) -> str:
        return f"Cay(Z{self.n}, {{{','.join(map(str, self.S))}}})"


def circulant(sym: CirculantSymbol) -> Graph:
    n = sym.n
    return Graph.from_edges(n, {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in sym.S})


def is_connected_circulant(sym: CirculantSymbol) -> bool:
    return math.gcd(sym.n, *sym.S) == 1 if sym.S else sym.n == 1


def rotation(n: int) -> Perm:
    return Perm([(i + 1) % n for i in range(n)])


def is_normal_circulant(sym: CirculantSymbol, search: AutomorphismSearch | None = None) -> bool:
    """Whether the rotation group is normal in the full automorphism group."""
    search = search or search_automorphisms(circulant(sym))
    r = rotation(sym.n)
    # <r> is normal iff every generator conjugates r to a power of r
    powers = {r ** k for k in range(sym.n)}
    return all(r.conj(a) in powers for a in search.generators)


def _subgroup(n: int, order: int) -> frozenset[int]:
    step = n // order
    return frozenset(range(0, n, step))


def _is_block(search: AutomorphismSearch, n: int, D: frozenset[int]) -> bool:
    step = n // len(D)
    part = VertexPartition([sorted((x + c) % n for x in D) for c in range(step)])
    return all(part.is_invariant_under(a) for a in search.generators)


def _is_arc_transitive(sym: CirculantSymbol) -> tuple[bool, AutomorphismSearch]:
    g = circulant(sym)
    search = search_automorphisms(g)
    return arc_orbit_count(g, search.group()) <= 1, search


@dataclass
class CaseWitness:
    kind: str
    detail: dict = field(default_factory=dict)


@dataclass
class ClassificationReport:
    symbol: CirculantSymbol
    aut_order: int
    cases: list[CaseWitness]

    @property
    def kinds(self) -> list[str]:
        return [c.kind for c in self.cases]

    def as_dict(self) -> dict:
        return {
            "n": self.symbol.n,
            "S": list(self.symbol.S),
            "valence": self.symbol.valence,
            "aut_order": self.aut_order,
            "cases": [{"kind": c.kind, **_jsonable(c.detail)} for c in self.cases],
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (frozenset, set)) else obj
        return [_jsonable(v) for v in items]
    if isinstance(obj, ClassificationReport):
        return obj.as_dict()
    return obj


def coset_union_reading(n: int, S: tuple[int, ...], D: frozenset[int]) -> str | None:
    """How S is a union of D-cosets, if at all.

    ``"disjoint"``: S itself is a union of full D-cosets (so S misses D).
    ``"contains_D#"``: S contains D minus 0 and the rest is a union of cosets.
    """
    Sset = set(S)
    outside = Sset - D
    full = all({(s + x) % n for x in D} <= Sset for s in outside)
    if not full:
        return None
    if not (Sset & D):
        return "disjoint"
    if (D - {0}) <= Sset:
        return "contains_D#"
    return None


def classify_arc_transitive_circulant(sym: CirculantSymbol) -> ClassificationReport:
    if not is_connected_circulant(sym):
        raise ValueError(f"{sym} is not connected")
    at, search = _is_arc_transitive(sym)
    if not at:
        raise ValueError(f"{sym} is not arc-transitive")
    n, S = sym.n, sym.S
    cases = []
    if len(S) == n - 1:
        cases.append(CaseWitness("complete"))
    if is_normal_circulant(sym, search):
        cases.append(CaseWitness("normal"))
    divisors = [k for k in range(2, n) if n % k == 0]
    for k in divisors:
        D = _subgroup(n, k)
        if not _is_block(search, n, D):
            continue
        reading = coset_union_reading(n, S, D)
        if reading is None:
            continue
        m = n // k
        qS = tuple(sorted({s % m for s in S if s not in D}))
        quot = CirculantSymbol(m, qS)
        if is_connected_circulant(quot) and _is_arc_transitive(quot)[0]:
            cases.append(CaseWitness("coset_blocks", {
                "D": sorted(D), "reading": reading, "quotient": str(quot),
            }))
    for a in divisors:
        b = n // a
        if a <= 3 or math.gcd(a, b) != 1:
            continue
        D, E = _subgroup(n, a), _subgroup(n, b)
        if not (_is_block(search, n, D) and _is_block(search, n, E)):
            continue
        d1 = min(D - {0})
        R = frozenset(e for e in E - {0} if (d1 + e) % n in S)
        if set(S) != {(x + e) % n for x in D - {0} for e in R}:
            continue
        step = n // b
        sub = CirculantSymbol(b, tuple(e // step for e in R))
        if not is_connected_circulant(sub) or not _is_arc_transitive(sub)[0]:
            continue
        cases.append(CaseWitness("tensor", {
            "D": sorted(D), "E": sorted(E), "R": sorted(R),
            "sub": classify_arc_transitive_circulant(sub),
        }))
    return ClassificationReport(sym, search.order, cases)


# exhaustive run ------------------------------------------------------------

def inverse_closed_sets(n: int) -> Iterator[tuple[int, ...]]:
    reps = [s for s in range(1, n // 2 + 1)]
    for choice in product((False, True), repeat=len(reps)):
        S = set()
        for s, take in zip(reps, choice):
            if take:
                S.update((s, n - s))
        if S:
            yield tuple(sorted(S))


def multiplier_canonical(n: int, S: tuple[int, ...]) -> tuple[int, ...]:
    units = [m for m in range(1, n) if math.gcd(m, n) == 1]
    return min(tuple(sorted((m * s) % n for s in S)) for m in units)


def walk_regular_on_arcs(n: int, S: tuple[int, ...], depth: int = 4) -> bool:
    """Cheap necessary condition for arc-transitivity.

    Walk counts from 0 to s must agree for every s in S.
    """
    row = np.zeros(n, dtype=np.int64)
    row[list(S)] = 1
    walk = row.copy()
    for _ in range(depth - 1):
        walk = sum(np.roll(walk, s) for s in S)
        if len(set(walk[list(S)].tolist())) != 1:
            return False
    return True


def arc_transitive_circulants(n: int) -> Iterator[CirculantSymbol]:
    """Connected arc-transitive circulants of order n, one per multiplier class."""
    seen = set()
    for S in inverse_closed_sets(n):
        if math.gcd(n, *S) != 1:
            continue
        key = multiplier_canonical(n, S)
        if key in seen:
            continue
        seen.add(key)
        if not walk_regular_on_arcs(n, key):
            continue
        sym = CirculantSymbol(n, key)
        if _is_arc_transitive(sym)[0]:
            yield sym


@dataclass
class CoverageReport:
    max_n: int
    rows: list[ClassificationReport]

    @property
    def unclassified(self) -> list[ClassificationReport]:
        return [r for r in self.rows if not r.cases]

    def to_json(self) -> str:
        return json.dumps([r.as_dict() for r in self.rows], indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "S", "valence", "aut_order", "cases", "witnesses"])
        for r in self.rows:
            w.writerow([
                r.symbol.n, " ".join(map(str, r.symbol.S)), r.symbol.valence,
                r.aut_order, "|".join(r.kinds),
                json.dumps([{k: v for k, v in _jsonable(c.detail).items() if k != "sub"}
                            for c in r.cases]),
            ])
        return buf.getvalue()


def exhaustive_case_coverage(max_n: int = 30, bound: int = 30) -> CoverageReport:
    if max_n > bound:
        raise ValueError(f"max_n={max_n} exceeds configured bound {bound}")
    rows = []
    for n in range(2, max_n + 1):
        for sym in arc_transitive_circulants(n):
            rows.append(classify_arc_transitive_circulant(sym))
        log.info("n=%d: %d arc-transitive circulants so far", n, len(rows))
    return CoverageReport(max_n, rows)
