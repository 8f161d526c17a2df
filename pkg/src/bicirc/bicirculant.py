"""Bicirculants with an induced cycle orbit (the families F(d)).

A symbol ``BC(n; b; S)`` describes the graph on ``u_0..u_{n-1}, v_0..v_{n-1}``
(``u_i`` is vertex ``i`` and ``v_i`` is vertex ``n + i``) with edges

* ``u_i ~ u_{i+1}``          the induced n-cycle,
* ``u_i ~ v_{i+s}``, s in S  spokes,
* ``v_i ~ v_{i+b}``          inner edges.

Every member of F(d) can be written this way.  Relabel so that the cycle
orbit uses differences ±1 (possible since the cycle has length n, so its
step is a unit).  Equal valence on both orbits then forces the inner
difference set to be ``{±b}`` with ``b != n/2``.

Two symbols give the same graph up to relabelling when related by

* translation  ``S -> S + t``            (shift the v labels),
* reflection   ``S -> -S``               (i -> -i on both orbits),
* orbit swap   ``(S, b) -> (-b^-1 S, b^-1)``, when ``gcd(b, n) = 1``
  (the inner orbit is then also an n-cycle and may play the cycle role).

:func:`canonical_symbol` picks the least member of that orbit.  This is only
sound in one direction: equal canonical symbols means isomorphic graphs, but
two different canonical symbols can still give isomorphic graphs.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, complement, induced_subgraph, is_cycle
from .perm import CapExceeded, Perm
from .symmetry import (
    all_minimal_block_systems,
    are_isomorphic,
    automorphism_group,
    search_automorphisms,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BicirculantSymbol:
    n: int
    b: int
    spokes: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise ValueError(f"half-order must be at least 3, got {n}")
        if not 1 <= self.b <= (n - 1) // 2:
            raise ValueError(f"inner step b={self.b} outside 1..{(n - 1) // 2}")
        spokes = tuple(sorted({s % n for s in self.spokes}))
        if not spokes:
            raise ValueError("spoke set must be non-empty")
        if len(spokes) != len(self.spokes):
            raise ValueError(f"repeated spokes in {self.spokes}")
        object.__setattr__(self, "spokes", spokes)

    @property
    def d(self) -> int:
        return len(self.spokes) + 2

    @property
    def order(self) -> int:
        return 2 * self.n

    def __str__(self) -> str:
        return f"BC({self.n}; {self.b}; {','.join(map(str, self.spokes))})"

    @classmethod
    def parse(cls, text: str) -> BicirculantSymbol:
        m = re.fullmatch(r"\s*BC\(\s*(\d+)\s*;\s*(\d+)\s*;\s*([\d,\s]+)\)\s*", text)
        if not m:
            raise ValueError(f"malformed symbol {text!r}; expected 'BC(n; b; s1,s2,...)'")
        n, b = int(m.group(1)), int(m.group(2))
        spokes = tuple(int(t) for t in m.group(3).split(",") if t.strip())
        return cls(n, b, spokes)


def normalize_step(b: int, n: int) -> int:
    b %= n
    return min(b, n - b)


def build(sym: BicirculantSymbol) -> tuple[Graph, Perm]:
    """The graph of ``sym`` and its semiregular automorphism ``rho``."""
    n = sym.n
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + sym.b) % n))
        for s in sym.spokes:
            edges.append((i, n + (i + s) % n))
    g = Graph.from_edges(2 * n, edges)
    rho = Perm([(i + 1) % n for i in range(n)] + [n + (i + 1) % n for i in range(n)])
    return g, rho


def build_graph(sym: BicirculantSymbol) -> Graph:
    return build(sym)[0]


def _least_translate(S: list[int], n: int) -> tuple[int, ...]:
    return min(tuple(sorted((x - t) % n for x in S)) for t in S)


def _symbol_images(n: int, b: int, S: tuple[int, ...]):
    """(b', S') for every reflection / swap image, before translation."""
    yield b, S
    yield b, tuple((-x) % n for x in S)
    if math.gcd(b, n) == 1:
        binv = pow(b, -1, n)
        b2 = normalize_step(binv, n)
        swapped = tuple((-binv * x) % n for x in S)
        yield b2, swapped
        yield b2, tuple((-x) % n for x in swapped)


def canonical_key(n: int, b: int, S) -> tuple[int, tuple[int, ...]]:
    return min((b2, _least_translate(list(T), n)) for b2, T in _symbol_images(n, b, tuple(S)))


def canonical_symbol(sym: BicirculantSymbol) -> BicirculantSymbol:
    b, S = canonical_key(sym.n, sym.b, sym.spokes)
    return BicirculantSymbol(sym.n, b, S)


def raw_symbol_count(n: int, d: int) -> int:
    return math.comb(n, d - 2) * ((n - 1) // 2)


def enumerate_symbols(n: int, d: int, b: int | None = None) -> Iterator[BicirculantSymbol]:
    """Canonical symbols of half-order n and valence d, each exactly once.

    With ``b`` given, only the canonical symbols whose inner step is ``b``.
    """
    k = d - 2
    if n < 3 or k < 1 or k > n:
        return
    steps = range(1, (n - 1) // 2 + 1) if b is None else [b]
    count = 0
    for step in steps:
        for rest in combinations(range(1, n), k - 1):
            S = (0,) + rest
            if canonical_key(n, step, S) == (step, S):
                count += 1
                yield BicirculantSymbol(n, step, S)
    log.debug("n=%d d=%d b=%s: %d canonical symbols", n, d, b, count)


@dataclass(frozen=True)
class FamilyWitness:
    rho: Perm
    cycle_orbit: tuple[int, ...]
    other_orbit: tuple[int, ...]


def family_witness_from(g: Graph, p: Perm) -> FamilyWitness | None:
    pair = p.two_equal_orbits()
    if pair is None or len(pair[0]) < 3:
        return None
    for orb, other in (pair, pair[::-1]):
        if is_cycle(induced_subgraph(g, orb)):
            return FamilyWitness(p, orb, other)
    return None


def in_family_F(g: Graph, d: int, cap: int | None = None) -> FamilyWitness | None:
    """A witness that ``g`` lies in F(d), or ``None``.

    Raises :class:`CapExceeded` when Aut(g) is too large to scan; that is an
    undecided outcome and is kept distinct from ``None``.
    """
    if g.valence() != d or g.n % 2:
        return None
    half = g.n // 2
    G = automorphism_group(g, cap)
    if G.order % half:
        return None
    for p in sorted(G.elements):
        if p.order() != half:
            continue
        w = family_witness_from(g, p)
        if w is not None:
            return w
    return None


# named graphs -------------------------------------------------------------

def generalized_petersen(n: int, k: int) -> Graph:
    if not (n >= 3 and 1 <= k < n / 2):
        raise ValueError(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def petersen_complement() -> Graph:
    return complement(petersen())


def clebsch() -> Graph:
    edges = [(x, x ^ (1 << j)) for x in range(16) for j in range(4)]
    edges += [(x, x ^ 15) for x in range(16)]
    return Graph.from_edges(16, [e for e in edges if e[0] < e[1]])


def lattice_L2_4() -> Graph:
    """The 4x4 rook's graph; vertex ``(i, j)`` (1-based) is ``4(i-1) + (j-1)``."""
    cells = [(i, j) for i in range(1, 5) for j in range(1, 5)]
    return Graph.from_edges(16, [
        (a, b)
        for a, (i, j) in enumerate(cells)
        for b, (k, l) in enumerate(cells)
        if a < b and (i == k or j == l)
    ])


def lattice_sigma() -> Perm:
    """``(i, j) -> (j + 1, i)`` on L2(4), coordinates taken in 1..4 mod 4."""
    def idx(i, j):
        return 4 * (i - 1) + (j - 1)
    images = [0] * 16
    for i in range(1, 5):
        for j in range(1, 5):
            images[idx(i, j)] = idx(j % 4 + 1, i)
    return Perm(images)


def triangular(m: int) -> Graph:
    """T(m): 2-subsets of 0..m-1 in lexicographic order, adjacent when they meet."""
    from .perm import pairs_of
    pairs = pairs_of(m)
    return Graph.from_edges(len(pairs), [
        (a, b) for a in range(len(pairs)) for b in range(a + 1, len(pairs))
        if len(set(pairs[a]) & set(pairs[b])) == 1
    ])


def complete(m: int) -> Graph:
    from .graph import complete_graph
    return complete_graph(m)


def named_graph(name: str) -> Graph:
    """Look up ``petersen``, ``petersen_complement``, ``clebsch``,
    ``lattice_L2_4``, ``K<m>`` / ``complete(m)``, ``C<m>``, ``T(m)``, ``GP(n,k)``
    and symbols ``BC(n; b; S)``."""
    key = name.strip()
    simple = {
        "petersen": petersen,
        "petersen_complement": petersen_complement,
        "clebsch": clebsch,
        "lattice_L2_4": lattice_L2_4,
        "L2(4)": lattice_L2_4,
    }
    if key in simple:
        return simple[key]()
    if m := re.fullmatch(r"(?:K|complete\()(\d+)\)?", key):
        return complete(int(m.group(1)))
    if m := re.fullmatch(r"T\((\d+)\)", key):
        return triangular(int(m.group(1)))
    if m := re.fullmatch(r"C(\d+)", key):
        from .graph import cycle_graph
        return cycle_graph(int(m.group(1)))
    if m := re.fullmatch(r"GP\(\s*(\d+)\s*,\s*(\d+)\s*\)", key):
        return generalized_petersen(int(m.group(1)), int(m.group(2)))
    if key.startswith("BC("):
        return build_graph(BicirculantSymbol.parse(key))
    raise ValueError(f"unknown graph name {name!r}")


PRIMITIVE_CASE_GRAPHS = ("K6", "petersen", "petersen_complement", "lattice_L2_4")


def primitive_case_check(g: Graph, d: int | None = None) -> bool:
    """If Aut(g) is vertex-primitive, g must be one of the four listed graphs.

    Returns ``False`` only when that implication is violated.
    """
    G = search_automorphisms(g).group()
    if not G.is_transitive() or all_minimal_block_systems(G):
        return True
    return any(are_isomorphic(g, named_graph(name)) for name in PRIMITIVE_CASE_GRAPHS)


__all__ = [
    "BicirculantSymbol", "FamilyWitness", "CapExceeded", "build", "build_graph",
    "canonical_symbol", "canonical_key", "enumerate_symbols", "in_family_F",
    "named_graph", "primitive_case_check", "raw_symbol_count",
]
