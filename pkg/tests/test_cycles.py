import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from tricirc.cycles import (
    GoodCycle,
    all_longest_good_cycles,
    canonical_cycle,
    circumference,
    extend,
    extend_fully,
    extendable_edges,
    good_cycle,
    goodness_violations,
    is_hamiltonian,
    longest_good_cycle,
    reroute,
)
from tricirc.embedding import parse_rot
from tricirc.errors import ConfigMismatch, NotACycle, NotExtendable, Timeout
from tricirc.generators import double_wheel, extremal_expand, octahedron, random_triangulation


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 4, 2]) == (1, 3, 2, 4)
    assert canonical_cycle([3, 2, 4, 1]) == (1, 3, 2, 4)


def test_small_values_match_frozen_oracle(oracle_values):
    for e in oracle_values["small"]:
        g = parse_rot(e["rot"])
        length, witness = circumference(g)
        assert length == e["circ"]
        assert oracle.is_good_cycle(oracle.to_nx(g), witness) or len(witness) == length
        assert longest_good_cycle(g).k == e["good"]


def test_witness_is_a_cycle():
    g = extremal_expand(double_wheel(5))
    length, cyc = circumference(g)
    G = oracle.to_nx(g)
    assert length == len(set(cyc)) == 14
    assert all(G.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length))


def test_known_seeds_incumbent():
    g = double_wheel(6)
    length, cyc = circumference(g)
    assert circumference(g, known=cyc) == (length, canonical_cycle(cyc))
    with pytest.raises(NotACycle):
        circumference(g, known=[0, 2, 6])


def test_hamiltonian():
    assert is_hamiltonian(octahedron())
    assert not is_hamiltonian(extremal_expand(octahedron()))


def test_goodness():
    g = extremal_expand(octahedron())
    rim = [0, 1, 2, 3]
    assert goodness_violations(g, rim)  # the poles have degree 8
    ham = [0, 1, 4, 2, 3, 5]  # Hamiltonian in the base
    assert good_cycle(g, ham).k == 6
    with pytest.raises(ValueError):
        good_cycle(g, rim)
    with pytest.raises(NotACycle):
        goodness_violations(g, [0, 2, 4])


def test_extension():
    g = extremal_expand(octahedron())
    c = good_cycle(g, [0, 1, 4, 2, 3, 5])
    ext = extendable_edges(g, c)
    assert len(ext) == 6
    (x, y), z = ext[0]
    longer = extend(g, c, (x, y))
    assert longer.k == 7 and z in longer.verts
    full = extend_fully(g, c)
    # greedy extension reaches a maximal good cycle, here one short of the maximum
    assert not extendable_edges(g, full)
    assert oracle.is_good_cycle(oracle.to_nx(g), full.verts)
    assert 6 < full.k <= 12
    with pytest.raises(NotExtendable):
        extend(g, c, (0, 2))


def test_longest_good_has_no_extendable_edge():
    for r in (4, 5, 6):
        g = extremal_expand(double_wheel(r))
        c = longest_good_cycle(g)
        assert c.k == 2 * (r + 2)
        assert extendable_edges(g, c) == []


def test_all_longest_good_cycles_are_distinct_and_good():
    g = extremal_expand(octahedron())
    cycles = all_longest_good_cycles(g)
    G = oracle.to_nx(g)
    assert len({c.verts for c in cycles}) == len(cycles) > 1
    assert all(c.k == 12 and oracle.is_good_cycle(G, c.verts) for c in cycles)


def test_timeout():
    g = extremal_expand(double_wheel(7))
    with pytest.raises(Timeout):
        circumference(g, budget_secs=1e-6)


def test_reroute_rejects_mismatched_configuration():
    g = extremal_expand(octahedron())
    c = longest_good_cycle(g)
    with pytest.raises(ConfigMismatch):
        reroute(g, c, "a", 0, 1, 20)
    with pytest.raises(ValueError):
        reroute(g, c, "z", 0, 1, 2)
    with pytest.raises(ValueError):
        reroute(g, c, "a", 0, 2, 2)


def test_reroute_fixtures(reroute_cases):
    for case in reroute_cases:
        g = parse_rot(case["rot"])
        c = good_cycle(g, case["cycle"])
        out = reroute(g, c, case["move"], case["start"], case["direction"], case["r"])
        assert isinstance(out, GoodCycle) and out.k == c.k
        assert oracle.is_good_cycle(oracle.to_nx(g), out.verts)
        assert out.has_edge(*case["gained"])


@settings(max_examples=30, deadline=None)
@given(n=st.integers(4, 11), seed=st.integers(0, 100_000))
def test_search_agrees_with_subset_dp(n, seed):
    g = random_triangulation(n, seed)
    circ, good = oracle.dp_longest_cycles(oracle.to_nx(g))
    assert circumference(g)[0] == circ
    if good:
        assert longest_good_cycle(g).k == good
