"""Finite simple undirected graphs on vertices ``0..n-1``.

Includes quotients by vertex partitions, the r-cover test, and graph6 /
edge-list JSON serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .perm import Perm


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n or v not in self.adj[w]:
                    raise ValueError(f"asymmetric or out-of-range edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) outside 0..{n - 1}")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def from_matrix(cls, A) -> Graph:
        A = np.asarray(A)
        n = A.shape[0]
        return cls(n, tuple(frozenset(np.flatnonzero(A[i]).tolist()) for i in range(n)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def vertex_count(self) -> int:
        return self.n

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a in range(self.n) for b in sorted(self.adj[a]) if a < b)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a in range(self.n) for b in sorted(self.adj[a]))

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted((len(s) for s in self.adj), reverse=True)

    def valence(self) -> int | None:
        """Common degree of a regular graph, else ``None``."""
        degs = {len(s) for s in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def is_regular(self) -> bool:
        return self.valence() is not None

    @cached_property
    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for a, b in self.edges:
            A[a, b] = A[b, a] = 1
        return A

    def is_automorphism(self, p: Sequence[int]) -> bool:
        if len(p) != self.n:
            return False
        adj = self.adj
        return all(
            len(adj[p[v]]) == len(adj[v]) and all(p[w] in adj[p[v]] for w in adj[v])
            for v in range(self.n)
        )

    def relabel(self, p: Sequence[int]) -> Graph:
        """Image of the graph under the vertex map ``v -> p[v]``."""
        return Graph.from_edges(self.n, ((p[a], p[b]) for a, b in self.edges))


def complement(g: Graph) -> Graph:
    everything = frozenset(range(g.n))
    return Graph(g.n, tuple(everything - g.adj[v] - {v} for v in range(g.n)))


def induced_subgraph(g: Graph, verts: Iterable[int]) -> Graph:
    verts = sorted(set(verts))
    if not verts:
        raise ValueError("induced subgraph on an empty vertex set")
    index = {v: i for i, v in enumerate(verts)}
    return Graph(
        len(verts),
        tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in verts),
    )


def components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(s) == 2 for s in g.adj) and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((a + offset, b + offset) for a, b in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((a, b) for a in range(n) for b in range(a + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


@dataclass(frozen=True)
class VertexPartition:
    classes: tuple[frozenset[int], ...]

    def __init__(self, classes: Iterable[Iterable[int]]):
        cls = tuple(frozenset(c) for c in classes)
        if any(not c for c in cls):
            raise ValueError("empty class in partition")
        seen: set[int] = set()
        for c in cls:
            if seen & c:
                raise ValueError("partition classes overlap")
            seen |= c
        if seen != set(range(len(seen))):
            raise ValueError("partition does not cover 0..m-1")
        object.__setattr__(self, "classes", cls)

    @classmethod
    def singletons(cls, m: int) -> VertexPartition:
        return cls([v] for v in range(m))

    @classmethod
    def whole(cls, m: int) -> VertexPartition:
        return cls([range(m)])

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        idx = [0] * self.size
        for i, c in enumerate(self.classes):
            for v in c:
                idx[v] = i
        return tuple(idx)

    def class_of(self, v: int) -> frozenset[int]:
        return self.classes[self.class_index[v]]

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(c)) for c in self.classes))

    def is_invariant_under(self, p: Perm) -> bool:
        idx = self.class_index
        return all(len({idx[p[v]] for v in c}) == 1 for c in self.classes)

    def image_permutation(self, p: Perm) -> Perm:
        """The permutation ``p`` induces on the classes."""
        idx = self.class_index
        return Perm([idx[p[next(iter(c))]] for c in self.classes])


def quotient(g: Graph, pi: VertexPartition) -> Graph:
    idx = pi.class_index
    edges = {
        (idx[a], idx[b]) for a, b in g.edges if idx[a] != idx[b]
    }
    return Graph.from_edges(len(pi), edges)


def r_cover_check(g: Graph, pi: VertexPartition) -> int | None:
    """The r for which ``g`` is an r-cover of ``g/pi``, or ``None``."""
    idx = pi.class_index
    r = None
    for u in range(g.n):
        counts: dict[int, int] = {}
        for w in g.adj[u]:
            c = idx[w]
            if c == idx[u]:
                return None
            counts[c] = counts.get(c, 0) + 1
        for k in counts.values():
            if r is None:
                r = k
            elif k != r:
                return None
    return r


def graph6_encode(g: Graph, header: bool = False) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if i in g.adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    text = bytes(out).decode("ascii")
    return (">>graph6<<" + text) if header else text


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    data = s.encode("ascii", errors="replace")
    for k, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", base + k)
    if not data:
        raise Graph6Error("empty graph6 string", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte vertex count", base + len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte vertex count", base + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", off)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            ch = body[k // 6] - 63
            if (ch >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        return Graph.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"bad edge-list JSON: {exc}") from exc
