import pytest

from bicirc.bicirculant import BicirculantSymbol, build, enumerate_symbols
from bicirc.census import CensusJob, adjacency, passes_walk_filter, search
from bicirc.symmetry import is_edge_transitive


def test_job_validation():
    with pytest.raises(ValueError):
        CensusJob(d=2, max_order=20)
    assert CensusJob(6, 22).half_orders() == [5, 7, 9, 11]
    assert CensusJob(6, 16, twice_odd=False).half_orders() == [4, 5, 6, 7, 8]


def test_adjacency_matches_graph():
    sym = BicirculantSymbol(9, 4, (0, 2, 3))
    assert (adjacency(sym) == build(sym)[0].matrix).all()


@pytest.mark.parametrize("n, d", [(4, 6), (5, 6), (6, 6), (7, 5), (8, 6), (6, 4), (9, 4)])
def test_walk_filter_never_prunes_edge_transitive(n, d):
    for sym in enumerate_symbols(n, d):
        g = build(sym)[0]
        if is_edge_transitive(g):
            assert passes_walk_filter(adjacency(sym)), sym


def test_small_census_d6():
    res = search(CensusJob(6, 22))
    assert len(res.classes) == 1
    assert res.classes[0]["representative"] == "BC(5; 2; 0,1,2,3)"
    assert res.classes[0]["aut_order"] == 120 and res.classes[0]["primitive"]
    assert res.counts["total"]["canonical"] == sum(
        len(list(enumerate_symbols(n, 6))) for n in (5, 7, 9, 11))
    assert not res.undecided


def test_all_parities_contains_lattice():
    res = search(CensusJob(6, 16, twice_odd=False))
    reps = {c["representative"]: c["aut_order"] for c in res.classes}
    assert reps["BC(8; 3; 0,1,3,4)"] == 1152
    assert len(reps) == 5


def test_determinism_and_parallel():
    job = CensusJob(5, 22)
    a = search(job).to_json()
    assert a == search(job).to_json()
    b = search(CensusJob(5, 22, jobs=2))
    assert b.counts == search(job).counts and b.classes == search(job).classes


def test_monotone_in_order_cap():
    small = search(CensusJob(6, 14, twice_odd=False))
    big = search(CensusJob(6, 18, twice_odd=False))
    reps_small = {c["representative"] for c in small.classes}
    reps_big = {c["representative"] for c in big.classes}
    assert reps_small <= reps_big


def test_all_records_and_csv():
    res = search(CensusJob(6, 10, all_records=True))
    stages = {r.stage for r in res.records}
    assert "pruned" in stages or "full" in stages
    assert res.to_csv().splitlines()[0].startswith("symbol,order,connected,stage")


def test_census_never_enumerates_groups():
    # transitivity and blocks use generators only, so a tiny cap still decides
    res = search(CensusJob(6, 10, element_cap=10))
    assert not res.undecided and len(res.classes) == 1


def test_cap_is_reported_by_family_scan():
    from bicirc.bicirculant import in_family_F, lattice_L2_4
    from bicirc.perm import CapExceeded
    with pytest.raises(CapExceeded):
        in_family_F(lattice_L2_4(), 6, cap=100)
