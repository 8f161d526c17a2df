"""Permutations and small materialized permutation groups.

Everything acts on the right: ``x^(pq) = (x^p)^q``.  A :class:`Perm` is a
tuple of images, so ``p[i]`` is the image of ``i`` and ``p * q`` first applies
``p`` and then ``q``.  Conjugation follows the same convention,
``p^g = g^-1 p g``.

Groups are held as generator sets and enumerated breadth-first on demand.
Enumeration is capped; hitting the cap raises :class:`CapExceeded` instead of
returning a truncated element set.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

DEFAULT_ELEMENT_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """Raised when a group enumeration would exceed its element cap."""


class Perm(tuple):
    """A permutation of ``{0, ..., m-1}`` given by its image sequence."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> Perm:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Perm:
        """Build from 0-indexed cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if not 0 <= x < degree or x in seen:
                    raise ValueError(f"bad cycle {cyc!r} for degree {degree}")
                seen.add(x)
                images[x] = cyc[(k + 1) % len(cyc)]
        return cls._raw(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> Perm:
        """Parse 1-indexed cycle notation such as ``"(1,2,3)(4,5)"``."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+", text.replace(" ", "")):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(tok) - 1 for tok in body.split(",")]
            for body in re.findall(r"\(([^()]*)\)", text)
        ]
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: Perm) -> Perm:
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Perm._raw([other[x] for x in self])

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Perm.identity(len(self))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return Perm._raw(inv)

    def conj(self, g: Perm) -> Perm:
        """Return ``self^g = g^-1 * self * g``."""
        if len(self) != len(g):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(g)}")
        images = [0] * len(self)
        for i, x in enumerate(self):
            images[g[i]] = g[x]
        return Perm._raw(images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self[x]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if len(self) else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_semiregular(self) -> bool:
        return len(set(len(c) for c in self.cycles())) <= 1

    def two_equal_orbits(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """The orbit pair if ``self`` has exactly two cycles of length degree/2."""
        cycles = self.cycles()
        if len(cycles) == 2 and len(cycles[0]) == len(cycles[1]):
            return cycles[0], cycles[1]
        return None

    def cycle_str(self, one_indexed: bool = False) -> str:
        shift = 1 if one_indexed else 0
        parts = [
            "(" + ",".join(str(x + shift) for x in c) + ")"
            for c in self.cycles(include_fixed=False)
        ]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Perm({self.cycle_str()}, degree={len(self)})"


def compose(p: Perm, q: Perm) -> Perm:
    return p * q


def inverse(p: Perm) -> Perm:
    return p.inverse()


def conjugate(p: Perm, g: Perm) -> Perm:
    return p.conj(g)


def order_of(p: Perm) -> int:
    return p.order()


def cycle_type(p: Perm) -> tuple[int, ...]:
    return p.cycle_type()


def is_semiregular(p: Perm) -> bool:
    return p.is_semiregular()


def semiregular_with_two_equal_orbits(p: Perm):
    return p.two_equal_orbits()


class Group:
    """A permutation group given by generators.

    ``elements`` is filled in lazily by breadth-first closure.  ``order`` may be
    supplied by the caller (the automorphism search knows it from its
    stabiliser chain) so that large groups never need to be enumerated.
    """

    def __init__(
        self,
        generators: Iterable[Perm],
        degree: int | None = None,
        *,
        order: int | None = None,
        cap: int = DEFAULT_ELEMENT_CAP,
        elements: Iterable[Perm] | None = None,
    ):
        gens = sorted({Perm(g) if not isinstance(g, Perm) else g for g in generators})
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators of mixed degree")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self.cap = cap
        self._order = order
        self._elements: frozenset[Perm] | None = None
        if elements is not None:
            self._elements = frozenset(elements)
            self._order = len(self._elements)

    def __repr__(self) -> str:
        order = self._order if self._order is not None else "?"
        return f"Group(degree={self.degree}, order={order}, ngens={len(self.generators)})"

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @property
    def elements(self) -> frozenset[Perm]:
        if self._elements is None:
            if self._order is not None and self._order > self.cap:
                raise CapExceeded(f"group of order {self._order} exceeds cap {self.cap}")
            self._elements = _closure(self.generators, self.degree, self.cap)
            if self._order is not None and self._order != len(self._elements):
                raise AssertionError(
                    f"declared order {self._order} != enumerated {len(self._elements)}"
                )
            self._order = len(self._elements)
        return self._elements

    def is_enumerated(self) -> bool:
        return self._elements is not None

    @property
    def order(self) -> int:
        if self._order is None:
            self.elements
        return self._order

    def __len__(self) -> int:
        return self.order

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __iter__(self) -> Iterator[Perm]:
        return iter(sorted(self.elements))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)

    def orbit(self, point: int) -> frozenset[int]:
        return orbit(self, point)

    def orbits(self) -> list[frozenset[int]]:
        return orbits(self.generators, self.degree)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1


def _closure(gens: Sequence[Perm], degree: int, cap: int) -> frozenset[Perm]:
    ident = Perm.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = Perm._raw([s[i] for i in x])
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeded cap of {cap} elements")
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def group_closure(generators: Iterable[Perm], cap: int = DEFAULT_ELEMENT_CAP,
                  degree: int | None = None) -> Group:
    if cap < 1:
        raise ValueError("cap must be positive")
    G = Group(generators, degree, cap=cap)
    G.elements
    return G


def subgroup(elements: Iterable[Perm], degree: int) -> Group:
    """Wrap an element set that is already known to be a group."""
    elements = frozenset(elements)
    return Group(elements, degree, elements=elements)


def symmetric_group(m: int) -> Group:
    if m <= 1:
        return Group([], m if m else 1)
    gens = [Perm.from_cycles([tuple(range(m))], m), Perm.from_cycles([(0, 1)], m)]
    return Group(gens, m, order=math.factorial(m))


def alternating_group(m: int) -> Group:
    gens = [Perm.from_cycles([(0, 1, k)], m) for k in range(2, m)]
    return Group(gens, m, order=max(1, math.factorial(m) // 2))


def cyclic_group(m: int) -> Group:
    return Group([Perm.from_cycles([tuple(range(m))], m)], m, order=m)


def orbits(gens: Sequence[Perm], degree: int) -> list[frozenset[int]]:
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
                    stack.append(y)
        out.append(frozenset(orb))
    return out


def orbit(G: Group, point: int) -> frozenset[int]:
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in G.generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def stabilizer(G: Group, point: int) -> Group:
    return subgroup((g for g in G.elements if g[point] == point), G.degree)


def setwise_stabilizer(G: Group, block: Iterable[int]) -> Group:
    B = frozenset(block)
    return subgroup((g for g in G.elements if all(g[x] in B for x in B)), G.degree)


def is_subgroup(H: Group, G: Group) -> bool:
    if H.degree != G.degree:
        return False
    return all(h in G.elements for h in H.generators)


def _require_subgroup(H: Group, G: Group) -> None:
    if not is_subgroup(H, G):
        raise ValueError("H is not a subgroup of G")


def normal_in(H: Group, G: Group) -> bool:
    _require_subgroup(H, G)
    Hel = H.elements
    return all(h.conj(g) in Hel for g in G.generators for h in H.generators)


def centralizer(G: Group, X: Iterable[Perm]) -> Group:
    X = list(X)
    return subgroup((g for g in G.elements if all(g * x == x * g for x in X)), G.degree)


def normalizer(G: Group, H: Group) -> Group:
    Hel = H.elements
    return subgroup(
        (g for g in G.elements if all(h.conj(g) in Hel for h in H.generators)),
        G.degree,
    )


def intersection(H: Group, K: Group) -> Group:
    return subgroup(H.elements & K.elements, H.degree)


def conjugate_group(H: Group, g: Perm) -> Group:
    """``H^g = {g^-1 h g : h in H}``."""
    return subgroup((h.conj(g) for h in H.elements), H.degree)


def right_coset(H: Group, x: Perm) -> frozenset[Perm]:
    return frozenset(h * x for h in H.elements)


def right_cosets(G: Group, H: Group) -> list[frozenset[Perm]]:
    """Right cosets ``Hx`` of ``H`` in ``G``, ordered by least element."""
    _require_subgroup(H, G)
    remaining = set(G.elements)
    out = []
    for x in sorted(G.elements):
        if x in remaining:
            coset = right_coset(H, x)
            remaining -= coset
            out.append(coset)
    return out


@dataclass(frozen=True)
class DoubleCoset:
    representative: Perm
    members: frozenset[Perm]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p) -> bool:
        return p in self.members


def product_set(*parts: Iterable[Perm]) -> frozenset[Perm]:
    """All products ``a1 * a2 * ...`` with ``ai`` drawn from the i-th part."""
    result = {None}
    for part in parts:
        part = list(part)
        result = {p if x is None else x * p for x in result for p in part}
    return frozenset(result)


def double_coset(H: Group, g: Perm, K: Group) -> DoubleCoset:
    members = frozenset(h * g * k for h in H.elements for k in K.elements)
    Hg = conjugate_group(H, g).elements
    expected = H.order * K.order // len(Hg & K.elements)
    if len(members) != expected:
        raise AssertionError(f"|HgK| = {len(members)} but index formula gives {expected}")
    return DoubleCoset(g, members)


def double_cosets(G: Group, H: Group, K: Group) -> list[DoubleCoset]:
    remaining = set(G.elements)
    out = []
    for g in sorted(G.elements):
        if g in remaining:
            dc = double_coset(H, g, K)
            remaining -= dc.members
            out.append(dc)
    return out


def cyclic_subgroup(g: Perm) -> frozenset[Perm]:
    out = [Perm.identity(len(g))]
    x = g
    while not x.is_identity():
        out.append(x)
        x = x * g
    return frozenset(out)


def set_product_intersection(H: Group, g: Perm) -> tuple[int, bool]:
    """Return ``(|H<g> ∩ HgH|, HgH == Hg^-1H)``."""
    Hg_set = product_set(H.elements, cyclic_subgroup(g))
    HgH = double_coset(H, g, H).members
    return len(Hg_set & HgH), g.inverse() in HgH


def pairs_of(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def pair_action(p: Perm) -> Perm:
    """Induced permutation on lexicographically ordered 2-subsets."""
    pairs = pairs_of(len(p))
    index = {pr: i for i, pr in enumerate(pairs)}
    return Perm._raw(
        [index[tuple(sorted((p[a], p[b])))] for a, b in pairs]
    )


def induced_action_on_pairs(G: Group) -> Group:
    gens = [pair_action(g) for g in G.generators]
    degree = G.degree * (G.degree - 1) // 2
    if G.is_enumerated():
        return subgroup((pair_action(g) for g in G.elements), degree)
    return Group(gens, degree, cap=G.cap)


def cycle_type_counts(G: Group) -> Counter:
    return Counter(g.cycle_type() for g in G.elements)
