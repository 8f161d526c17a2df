import math
import random

import pytest
from hypothesis import given, strategies as st

from bicirc.bicirculant import (
    BicirculantSymbol, build, canonical_key, canonical_symbol, enumerate_symbols,
    generalized_petersen, in_family_F, lattice_L2_4, lattice_sigma, named_graph,
    petersen, petersen_complement, primitive_case_check, raw_symbol_count,
)
from bicirc.graph import complete_bipartite, complete_graph, induced_subgraph, is_cycle
from bicirc.symmetry import are_isomorphic, search_automorphisms


def test_build_examples():
    g, rho = build(BicirculantSymbol(5, 2, (1, 2, 3, 4)))
    assert are_isomorphic(g, petersen_complement())
    assert g.is_automorphism(rho) and rho.two_equal_orbits() is not None
    assert are_isomorphic(build(BicirculantSymbol(5, 2, (0,)))[0], petersen())
    k = build(BicirculantSymbol(3, 1, (0, 1, 2)))[0]
    assert k.valence() == 5 and k == complete_graph(6)


def test_symbol_validation():
    with pytest.raises(ValueError):
        BicirculantSymbol(5, 3, (0,))
    with pytest.raises(ValueError):
        BicirculantSymbol(5, 1, ())
    with pytest.raises(ValueError):
        BicirculantSymbol(5, 1, (0, 5))
    with pytest.raises(ValueError):
        BicirculantSymbol.parse("BC(5, 1, 0)")
    s = BicirculantSymbol.parse("BC(5; 2; 0,1,2,3)")
    assert str(s) == "BC(5; 2; 0,1,2,3)" and s.d == 6 and s.order == 10


def test_canonical_idempotent_and_reflection():
    s = BicirculantSymbol(9, 2, (0, 1, 4))
    c = canonical_symbol(s)
    assert canonical_symbol(c) == c
    refl = BicirculantSymbol(9, 2, tuple((-x) % 9 for x in s.spokes))
    assert canonical_symbol(refl) == c
    shifted = BicirculantSymbol(9, 2, tuple((x + 4) % 9 for x in s.spokes))
    assert canonical_symbol(shifted) == c


def _symbol_orbit_count(n, d):
    """Independent oracle: BFS over all raw symbols under the generating moves."""
    k = d - 2
    from itertools import combinations
    raw = {(b, S) for b in range(1, (n - 1) // 2 + 1) for S in combinations(range(n), k)}

    def moves(b, S):
        yield b, tuple(sorted((x + 1) % n for x in S))
        yield b, tuple(sorted((-x) % n for x in S))
        if math.gcd(b, n) == 1:
            bi = pow(b, -1, n)
            yield min(bi, n - bi), tuple(sorted((-bi * x) % n for x in S))

    seen, orbits = set(), 0
    for start in sorted(raw):
        if start in seen:
            continue
        orbits += 1
        stack = [start]
        seen.add(start)
        while stack:
            for nxt in moves(*stack.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return orbits


# [DERIVED] frozen from the BFS orbit oracle above
@pytest.mark.parametrize("n, d, count", [
    (5, 6, 2), (7, 6, 8), (9, 5, 21), (8, 6, 22), (11, 7, 78), (6, 4, 6),
])
def test_enumeration_counts(n, d, count):
    syms = list(enumerate_symbols(n, d))
    assert len(syms) == count
    assert len(set(syms)) == count
    assert all(canonical_symbol(s) == s for s in syms)


@pytest.mark.parametrize("n, d", [(5, 6), (6, 4), (7, 5)])
def test_enumeration_matches_live_oracle(n, d):
    assert len(list(enumerate_symbols(n, d))) == _symbol_orbit_count(n, d)


def test_enumeration_examples():
    assert [str(s) for s in enumerate_symbols(5, 6)] == [
        "BC(5; 1; 0,1,2,3)", "BC(5; 2; 0,1,2,3)"]
    assert list(enumerate_symbols(3, 6)) == []
    assert raw_symbol_count(5, 6) == 10


@given(st.integers(0, 10**9))
def test_canonical_form_is_sound(seed):
    # equal canonical form must mean isomorphic graphs
    r = random.Random(seed)
    n = r.choice([5, 7, 8, 9, 11])
    k = r.randint(1, n)
    b = r.randint(1, (n - 1) // 2)
    sym = BicirculantSymbol(n, b, tuple(r.sample(range(n), k)))
    can = canonical_symbol(sym)
    assert are_isomorphic(build(sym)[0], build(can)[0])


def test_canonical_form_not_complete_invariant():
    # different canonical symbols can still be isomorphic graphs
    a = BicirculantSymbol(7, 1, tuple(range(7)))
    b = BicirculantSymbol(7, 2, tuple(range(7)))
    assert canonical_symbol(a) != canonical_symbol(b)
    assert are_isomorphic(build(a)[0], build(b)[0])


def test_in_family_examples():
    w = in_family_F(lattice_L2_4(), 6)
    assert w is not None and len(w.cycle_orbit) == 8
    assert is_cycle(induced_subgraph(lattice_L2_4(), w.cycle_orbit))
    assert in_family_F(complete_graph(4), 3) is None
    w = in_family_F(petersen_complement(), 6)
    assert w is not None and w.rho.order() == 5
    assert in_family_F(petersen(), 6) is None


def test_lattice_sigma_orbits():
    s = lattice_sigma()
    assert lattice_L2_4().is_automorphism(s)
    assert [len(c) for c in s.cycles()] == [8, 8]


def test_named_graphs():
    p = named_graph("petersen")
    assert p == generalized_petersen(5, 2) and p.valence() == 3
    L = named_graph("lattice_L2_4")
    assert L.valence() == 6 and search_automorphisms(L).order == 1152
    c = named_graph("clebsch")
    assert c.valence() == 5 and search_automorphisms(c).group().is_transitive()
    assert named_graph("K6") == complete_graph(6)
    assert named_graph("GP(5,1)") == generalized_petersen(5, 1)
    with pytest.raises(ValueError):
        named_graph("nonsense")


def test_primitive_case_check():
    assert primitive_case_check(complete_graph(6))
    assert primitive_case_check(petersen_complement())
    assert primitive_case_check(build(BicirculantSymbol(4, 1, (0, 1, 2, 3)))[0])
    # Clebsch has primitive Aut but is not on the list
    assert not primitive_case_check(named_graph("clebsch"))
