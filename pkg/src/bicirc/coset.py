"""Coset graphs Cos(G, H, H{g, g^-1}H) and the stabiliser conditions on them."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .perm import (
    Group,
    Perm,
    conjugate_group,
    cyclic_subgroup,
    double_coset,
    is_subgroup,
    orbits,
    product_set,
    right_cosets,
    subgroup,
)


def core(G: Group, H: Group) -> frozenset[Perm]:
    """Intersection of all conjugates of H in G."""
    out = set(H.elements)
    for g in G.elements:
        if len(out) == 1:
            break
        out &= {h.conj(g) for h in H.elements}
    return frozenset(out)


def core_free(G: Group, H: Group) -> bool:
    if not is_subgroup(H, G):
        raise ValueError("H is not a subgroup of G")
    return len(core(G, H)) == 1


@dataclass(frozen=True)
class CosetGraphSpec:
    ambient: Group
    H: Group
    g: Perm

    def __post_init__(self):
        if not is_subgroup(self.H, self.ambient):
            raise ValueError("H is not a subgroup of the ambient group")
        if self.g not in self.ambient.elements:
            raise ValueError("g is not in the ambient group")
        if self.g in self.H.elements:
            raise ValueError("g lies in H: the coset graph would have loops")
        if not core_free(self.ambient, self.H):
            raise ValueError("H is not core-free in the ambient group")


def connection_double_coset(H: Group, g: Perm) -> frozenset[Perm]:
    """``H{g, g^-1}H``."""
    return double_coset(H, g, H).members | double_coset(H, g.inverse(), H).members


def coset_graph(spec: CosetGraphSpec) -> tuple[Graph, list[frozenset[Perm]]]:
    """The coset graph and its vertex list (cosets ordered by least element)."""
    cosets = right_cosets(spec.ambient, spec.H)
    where = {x: i for i, c in enumerate(cosets) for x in c}
    D = connection_double_coset(spec.H, spec.g)
    edges = set()
    for i, c in enumerate(cosets):
        x = min(c)
        for d in D:
            j = where[d * x]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(len(cosets), edges), cosets


def coset_valence(spec: CosetGraphSpec) -> int:
    H, g = spec.H, spec.g
    meet = len(H.elements & conjugate_group(H, g).elements)
    if g.inverse() in double_coset(H, g, H).members:
        return H.order // meet
    return 2 * H.order // meet


def coset_action(spec: CosetGraphSpec, cosets: list[frozenset[Perm]]) -> Group:
    """Right multiplication action of the ambient group on the cosets."""
    where = {x: i for i, c in enumerate(cosets) for x in c}
    gens = [
        Perm([where[min(c) * s] for c in cosets]) for s in spec.ambient.generators
    ]
    return Group(gens, len(cosets))


def orbit_map(G: Group, H: Group, v: int, cosets: list[frozenset[Perm]]) -> Perm:
    """The map ``Hx -> v^x`` as a permutation from coset index to vertex."""
    images = []
    for c in cosets:
        pts = {x[v] for x in c}
        if len(pts) != 1:
            raise ValueError("H does not fix v: Hx -> v^x is not well defined")
        images.append(pts.pop())
    return Perm(images)


def sabidussi_connection_set(g: Graph, R: Group, v: int) -> frozenset[Perm]:
    """``{x in R : v^x adjacent to v}`` for a regular subgroup R of Aut(g)."""
    if len(orbits(R.generators, g.n)) != 1 or R.order != g.n:
        raise ValueError("R is not regular on the vertices")
    for s in R.generators:
        if not g.is_automorphism(s):
            raise ValueError("R is not a group of automorphisms")
    return frozenset(x for x in R.elements if x[v] in g.adj[v])


def cayley_graph(R: Group, S) -> tuple[Graph, list[Perm]]:
    """Cay(R, S) with arcs ``(h, s h)``; vertices are R's sorted elements."""
    elements = R.sorted_elements()
    index = {x: i for i, x in enumerate(elements)}
    edges = {
        tuple(sorted((index[h], index[s * h]))) for h in elements for s in S
    }
    return Graph.from_edges(len(elements), edges), elements


@dataclass(frozen=True)
class CondReport:
    """Cardinalities behind the two condition sets for an element g."""

    order_H: int
    meet: int                 # |H ∩ H^g|
    product_meet: int         # |H<g> ∩ HgH|
    self_paired: bool         # HgH == Hg^-1H

    @property
    def case1(self) -> bool:
        return (self.self_paired and self.order_H == 6 * self.meet
                and 2 * self.order_H == self.product_meet)

    @property
    def case2(self) -> bool:
        return (not self.self_paired and self.order_H == 3 * self.meet
                and self.order_H == self.product_meet)

    @property
    def case(self) -> int | None:
        return 1 if self.case1 else 2 if self.case2 else None


def lemma_cond_eval(G: Group, H: Group, g: Perm) -> CondReport:
    if not is_subgroup(H, G) or g not in G.elements:
        raise ValueError("need H <= G and g in G")
    HgH = double_coset(H, g, H).members
    Hg_cyc = product_set(H.elements, cyclic_subgroup(g))
    return CondReport(
        order_H=H.order,
        meet=len(H.elements & conjugate_group(H, g).elements),
        product_meet=len(Hg_cyc & HgH),
        self_paired=g.inverse() in HgH,
    )


@dataclass(frozen=True)
class OrderWitness:
    g: Perm
    report: CondReport
    in_C: bool | None


def exists_order_n_witness(G: Group, H: Group, n: int,
                           C: Group | None = None) -> OrderWitness | None:
    """First element of order n (sorted order) meeting condition set 1 or 2."""
    if G.order % n:
        return None
    for g in G.sorted_elements():
        if g.order() != n:
            continue
        rep = lemma_cond_eval(G, H, g)
        if rep.case is not None:
            return OrderWitness(g, rep, None if C is None else g in C.elements)
    return None


@dataclass
class RoundTrip:
    isomorphic: bool
    valence_formula: int
    valence_graph: int | None
    spec: CosetGraphSpec
    mapping: Perm


def adjacent_witness(graph: Graph, G: Group, v: int) -> Perm:
    """Least element g of G with ``{v, v^g}`` an edge."""
    for g in G.sorted_elements():
        if g[v] in graph.adj[v]:
            return g
    raise ValueError(f"no element of G moves {v} to a neighbour")


def coset_roundtrip(graph: Graph, G: Group, v: int = 0, g: Perm | None = None) -> RoundTrip:
    """Rebuild ``graph`` as Cos(G, G_v, G_v{g, g^-1}G_v) and compare.

    The comparison is the explicit map ``Hx -> v^x``, not an invariant.
    """
    for s in G.generators:
        if not graph.is_automorphism(s):
            raise ValueError("G does not act by automorphisms")
    H = subgroup((x for x in G.elements if x[v] == v), G.degree)
    if g is None:
        g = adjacent_witness(graph, G, v)
    spec = CosetGraphSpec(G, H, g)
    cos, cosets = coset_graph(spec)
    phi = orbit_map(G, H, v, cosets)
    return RoundTrip(
        isomorphic=cos.relabel(phi) == graph,
        valence_formula=coset_valence(spec),
        valence_graph=cos.valence(),
        spec=spec,
        mapping=phi,
    )
