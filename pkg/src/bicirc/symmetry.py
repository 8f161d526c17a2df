"""Graph automorphisms, isomorphism, transitivity, and blocks of imprimitivity.

The automorphism search is individualization/refinement in the usual style:

* an ordered partition is refined to the coarsest equitable partition by
  counting neighbours in each cell (1-dimensional Weisfeiler-Leman);
* the first largest non-singleton cell is the target cell and its smallest
  vertex is individualized on the leftmost path;
* the search then walks the leftmost path bottom-up.  At level i it looks
  for automorphisms fixing the first i base points and moving base point i to
  each candidate of the target cell, skipping candidates already in the orbit
  of the generators found so far.

The automorphisms found at each level form a transversal of a stabiliser
chain, so the group order is the product of the basic orbit lengths and no
element enumeration is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, VertexPartition
from .perm import Group, Perm, orbits, subgroup

Cells = list[list[int]]


def refine(g: Graph, cells: Cells) -> tuple[Cells, tuple]:
    """Refine an ordered partition to an equitable one.

    Returns the refined cells together with a trace that is equal for two
    partitions related by an isomorphism.
    """
    adj = g.adj
    cell_of = [0] * g.n
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    trace = []
    while True:
        sig = {}
        for v in range(g.n):
            counts: dict[int, int] = {}
            for w in adj[v]:
                c = cell_of[w]
                counts[c] = counts.get(c, 0) + 1
            sig[v] = (cell_of[v], tuple(sorted(counts.items())))
        keys = sorted(set(sig.values()))
        if len(keys) == len(cells):
            return cells, tuple(trace)
        trace.append(tuple((k, sum(1 for v in sig if sig[v] == k)) for k in keys))
        rank = {k: i for i, k in enumerate(keys)}
        new_cells: Cells = [[] for _ in keys]
        for v in range(g.n):
            new_cells[rank[sig[v]]].append(v)
        cells = new_cells
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i


def _target_cell(cells: Cells) -> int | None:
    best, best_size = None, 1
    for i, c in enumerate(cells):
        if len(c) > best_size:
            best, best_size = i, len(c)
    return best


def _individualize(cells: Cells, idx: int, v: int) -> Cells:
    rest = [w for w in cells[idx] if w != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


@dataclass
class _Level:
    cells: Cells
    target: int
    base_point: int


@dataclass
class _Path:
    root_trace: tuple
    levels: list[_Level]
    traces: list[tuple]
    leaf: list[int]


def _leftmost_path(g: Graph, initial: Cells | None = None) -> _Path:
    cells, root_trace = refine(g, initial or [list(range(g.n))])
    levels, traces = [], []
    while (t := _target_cell(cells)) is not None:
        v = min(cells[t])
        levels.append(_Level(cells, t, v))
        cells, tr = refine(g, _individualize(cells, t, v))
        traces.append(tr)
    return _Path(root_trace, levels, traces, [c[0] for c in cells])


def _extend(g2: Graph, cells: Cells, depth: int, path: _Path, g1: Graph) -> list[int] | None:
    """Search below ``cells`` in ``g2`` for a leaf matching the left path."""
    if depth == len(path.levels):
        leaf = [c[0] for c in cells]
        mapping = [0] * g1.n
        for a, b in zip(path.leaf, leaf):
            mapping[a] = b
        if all(
            len(g1.adj[v]) == len(g2.adj[mapping[v]])
            and all(mapping[w] in g2.adj[mapping[v]] for w in g1.adj[v])
            for v in range(g1.n)
        ):
            return mapping
        return None
    lvl = path.levels[depth]
    if len(cells) != len(lvl.cells) or len(cells[lvl.target]) != len(lvl.cells[lvl.target]):
        return None
    for w in sorted(cells[lvl.target]):
        sub, tr = refine(g2, _individualize(cells, lvl.target, w))
        if tr != path.traces[depth]:
            continue
        found = _extend(g2, sub, depth + 1, path, g1)
        if found is not None:
            return found
    return None


@dataclass
class AutomorphismSearch:
    """Result of the search: generators plus the stabiliser chain data."""

    graph: Graph
    base: list[int]
    basic_orbit_sizes: list[int]
    generators: list[Perm]

    @property
    def order(self) -> int:
        out = 1
        for k in self.basic_orbit_sizes:
            out *= k
        return out

    def group(self, cap: int | None = None) -> Group:
        kwargs = {} if cap is None else {"cap": cap}
        return Group(self.generators, max(self.graph.n, 1), order=self.order, **kwargs)


def search_automorphisms(g: Graph, initial: Cells | None = None) -> AutomorphismSearch:
    if g.n == 0:
        return AutomorphismSearch(g, [], [], [])
    path = _leftmost_path(g, initial)
    gens: list[Perm] = []
    sizes: list[int] = []
    for depth in range(len(path.levels) - 1, -1, -1):
        lvl = path.levels[depth]
        b = lvl.base_point
        orb = _orbit_of(b, gens)
        for t in sorted(lvl.cells[lvl.target]):
            if t in orb:
                continue
            sub, tr = refine(g, _individualize(lvl.cells, lvl.target, t))
            if tr != path.traces[depth]:
                continue
            found = _extend(g, sub, depth + 1, path, g)
            if found is not None:
                gens.append(Perm._raw(found))
                orb = _orbit_of(b, gens)
        sizes.append(len(orb))
    sizes.reverse()
    return AutomorphismSearch(g, [lvl.base_point for lvl in path.levels], sizes, gens)


def _orbit_of(point: int, gens: Sequence[Perm]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for s in gens:
            y = s[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_group(g: Graph, cap: int | None = None) -> Group:
    """Full automorphism group, with its exact order and no enumeration."""
    return search_automorphisms(g).group(cap)


def find_isomorphism(g1: Graph, g2: Graph) -> Perm | None:
    """A vertex map ``p`` with ``g1.relabel(p) == g2``, or ``None``."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    if g1.n == 0:
        return Perm(())
    path = _leftmost_path(g1)
    cells, tr = refine(g2, [list(range(g2.n))])
    if tr != path.root_trace:
        return None
    found = _extend(g2, cells, 0, path, g1)
    return Perm._raw(found) if found is not None else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def brute_force_automorphisms(g: Graph) -> set[Perm]:
    """Every automorphism, by plain backtracking with no refinement."""
    n = g.n
    adj = g.adj
    image = [-1] * n
    used = [False] * n
    out: set[Perm] = set()

    def place(v: int) -> None:
        if v == n:
            out.add(Perm._raw(image))
            return
        for w in range(n):
            if used[w] or len(adj[w]) != len(adj[v]):
                continue
            if all((image[u] in adj[w]) == (u in adj[v]) for u in range(v)):
                image[v] = w
                used[w] = True
                place(v + 1)
                used[w] = False
        image[v] = -1

    place(0)
    return out


# transitivity ------------------------------------------------------------

def _check_automorphisms(g: Graph, G: Group) -> None:
    for s in G.generators:
        if not g.is_automorphism(s):
            raise ValueError(f"generator {s!r} is not an automorphism")


def _domain_orbits(items: Sequence, act, gens: Sequence[Perm]) -> int:
    index = {x: i for i, x in enumerate(items)}
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s in gens:
        for i, x in enumerate(items):
            j = index[act(x, s)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(i) for i in range(len(items))})


def vertex_orbits(g: Graph, G: Group) -> list[frozenset[int]]:
    return orbits(G.generators, g.n)


def edge_orbit_count(g: Graph, G: Group) -> int:
    return _domain_orbits(
        g.edges, lambda e, s: tuple(sorted((s[e[0]], s[e[1]]))), G.generators
    )


def arc_orbit_count(g: Graph, G: Group) -> int:
    return _domain_orbits(g.arcs, lambda a, s: (s[a[0]], s[a[1]]), G.generators)


def is_vertex_transitive(g: Graph, G: Group | None = None) -> bool:
    G = G if G is not None else automorphism_group(g)
    _check_automorphisms(g, G)
    return len(vertex_orbits(g, G)) == 1


def is_edge_transitive(g: Graph, G: Group | None = None) -> bool:
    G = G if G is not None else automorphism_group(g)
    _check_automorphisms(g, G)
    return edge_orbit_count(g, G) <= 1


def is_arc_transitive(g: Graph, G: Group | None = None) -> bool:
    G = G if G is not None else automorphism_group(g)
    _check_automorphisms(g, G)
    return arc_orbit_count(g, G) <= 1


# blocks -----------------------------------------------------------------

def _require_transitive(G: Group) -> None:
    if len(orbits(G.generators, G.degree)) != 1:
        raise ValueError("group is not transitive")


def block_partition(G: Group, seed: Iterable[int]) -> VertexPartition:
    """Finest G-invariant partition with all of ``seed`` in one class.

    Union-find closure over generators (Atkinson's algorithm).
    """
    seed = list(seed)
    parent = list(range(G.degree))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    queue = []
    for x in seed[1:]:
        ra, rb = find(seed[0]), find(x)
        if ra != rb:
            parent[rb] = ra
            queue.append((ra, rb))
    while queue:
        a, b = queue.pop()
        for s in G.generators:
            ra, rb = find(s[a]), find(s[b])
            if ra != rb:
                parent[rb] = ra
                queue.append((ra, rb))
    classes: dict[int, list[int]] = {}
    for v in range(G.degree):
        classes.setdefault(find(v), []).append(v)
    return VertexPartition(sorted(classes.values()))


def minimal_block(G: Group, seed: Iterable[int]) -> frozenset[int]:
    seed = list(seed)
    _require_transitive(G)
    return block_partition(G, seed).class_of(seed[0])


def is_block(G: Group, B: Iterable[int]) -> bool:
    B = frozenset(B)
    return minimal_block(G, B) == B if len(B) > 1 else True


def all_minimal_block_systems(G: Group) -> list[BlockSystem]:
    _require_transitive(G)
    m = G.degree
    blocks = set()
    for x in range(1, m):
        B = minimal_block(G, (0, x))
        if len(B) < m:
            blocks.add(B)
    minimal = sorted(
        (B for B in blocks if not any(C < B for C in blocks)),
        key=lambda B: (len(B), sorted(B)),
    )
    systems = {}
    for B in minimal:
        part = block_partition(G, B)
        systems.setdefault(part.canonical(), BlockSystem(G, part))
    return list(systems.values())


def is_primitive(G: Group) -> bool:
    return not all_minimal_block_systems(G)


def kernel_of_action(G: Group, pi: VertexPartition) -> Group:
    for s in G.generators:
        if not pi.is_invariant_under(s):
            raise ValueError("partition is not invariant under the group")
    idx = pi.class_index
    K = subgroup(
        (g for g in G.elements if all(idx[g[v]] == idx[v] for v in range(G.degree))),
        G.degree,
    )
    return K


def quotient_action(G: Group, pi: VertexPartition) -> Group:
    return Group([pi.image_permutation(s) for s in G.generators], len(pi), cap=G.cap)


def is_normal_block_system(G: Group, pi: VertexPartition) -> tuple[bool, Group]:
    """Whether ``pi`` is the orbit partition of a normal subgroup.

    The kernel is the largest candidate, so it serves as witness.
    """
    K = kernel_of_action(G, pi)
    orbs = VertexPartition(orbits(K.generators, G.degree))
    return orbs.canonical() == pi.canonical(), K


@dataclass(frozen=True)
class BlockSystem:
    base_group: Group
    blocks: VertexPartition

    @cached_property
    def kernel(self) -> Group:
        return kernel_of_action(self.base_group, self.blocks)

    @cached_property
    def is_normal(self) -> bool:
        return is_normal_block_system(self.base_group, self.blocks)[0]

    @property
    def block_size(self) -> int:
        return len(self.blocks.classes[0])


# subdegrees and regularity -----------------------------------------------

def subdegrees(G: Group) -> list[int]:
    _require_transitive(G)
    stab = [g for g in G.elements if g[0] == 0]
    return sorted(len(o) for o in orbits(stab, G.degree))


def rank(G: Group) -> int:
    return len(subdegrees(G))


def restrict(G: Group, domain: Iterable[int]) -> Group:
    """Action of ``G`` on an invariant subset, relabelled to ``0..k-1``."""
    dom = sorted(set(domain))
    index = {v: i for i, v in enumerate(dom)}
    gens = []
    for s in G.generators:
        if any(s[v] not in index for v in dom):
            raise ValueError("domain is not invariant under the group")
        gens.append(Perm._raw([index[s[v]] for v in dom]))
    return Group(gens, len(dom), cap=G.cap)


def is_regular(G: Group, domain: Iterable[int] | None = None) -> bool:
    R = restrict(G, domain if domain is not None else range(G.degree))
    return R.is_transitive() and R.order == R.degree
