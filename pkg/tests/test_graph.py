import pytest
from hypothesis import given, settings, strategies as st

from signedspread.errors import CapacityError, InputError
from signedspread.families import gen_cycle, gen_gn, gen_ktt_tau, gen_random_connected
from signedspread.graph import (
    SignedGraph,
    equivalent,
    frustration_index,
    graph_from_json,
    graph_to_json,
    is_antibalanced,
    is_balanced,
    min_deletion_balancing,
    negate_signature,
    negative_cycles,
    realize_min_signature,
    switch,
)


@st.composite
def signed_graphs(draw, max_n=7, connected=False):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    for u, v in pairs:
        if draw(st.booleans()):
            edges.append((u, v, draw(st.sampled_from([1, -1]))))
    g = SignedGraph.from_edge_list(n, edges)
    if connected and not g.connected():
        # fall back to a seeded connected instance of the same order
        return gen_random_connected(draw(st.integers(0, 10_000)), n)
    return g


def test_from_edge_list_normalizes_and_sorts():
    g = SignedGraph.from_edge_list(4, [(3, 1, -1), (2, 0, 1), (0, 1, 1)])
    assert g.edges == ((0, 1, 1), (0, 2, 1), (1, 3, -1))
    assert g.sign_of(3, 1) == -1
    assert g.has_edge(1, 3) and not g.has_edge(0, 3)
    assert g.neighbors(0) == (1, 2)
    assert g.degree(1) == 2 and g.max_degree() == 2


@pytest.mark.parametrize(
    "n,edges",
    [
        (3, [(0, 0, 1)]),  # self-loop
        (3, [(0, 1, 1), (1, 0, -1)]),  # duplicate
        (3, [(0, 3, 1)]),  # out of range
        (3, [(0, 1, 2)]),  # bad sign
        (3, [(0, 1)]),  # not a triple
        (-1, []),
    ],
)
def test_from_edge_list_rejects(n, edges):
    with pytest.raises(InputError):
        SignedGraph.from_edge_list(n, edges)


def test_sign_of_missing_edge():
    g = SignedGraph.from_edge_list(3, [(0, 1, 1)])
    with pytest.raises(InputError):
        g.sign_of(0, 2)


@settings(max_examples=60, deadline=None)
@given(signed_graphs())
def test_json_roundtrip(g):
    assert graph_from_json(graph_to_json(g)) == g


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"n": 3},
        {"n": "3", "edges": []},
        {"n": 3, "edges": [{"u": 0, "v": 1}]},
        {"n": 3, "edges": [[0, 1, 1]]},
    ],
)
def test_graph_from_json_rejects(payload):
    with pytest.raises(InputError):
        graph_from_json(payload)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(), st.sets(st.integers(0, 6)))
def test_switch_involution(g, members):
    members = {v for v in members if v < g.n}
    assert switch(switch(g, members), members) == g


@settings(max_examples=30, deadline=None)
@given(signed_graphs())
def test_switch_trivial_sets(g):
    assert switch(g, set()) == g
    assert switch(g, range(g.n)) == g  # full set flips nothing
    assert negate_signature(negate_signature(g)) == g


def test_switch_rejects_out_of_range():
    g = SignedGraph.from_edge_list(3, [(0, 1, 1)])
    with pytest.raises(InputError):
        switch(g, {5})


def test_balance_basics():
    g = gen_gn(6)
    part = is_balanced(g)
    assert part is not None
    assert set(part.u1) == {0, 1, 2} and set(part.u2) == {3, 4, 5}
    assert is_antibalanced(negate_signature(g)) is not None
    # odd all-negative cycle is unbalanced, even one is balanced
    assert is_balanced(gen_cycle(3, [-1, -1, -1])) is None
    assert is_balanced(gen_cycle(4, [-1] * 4)) is not None


@settings(max_examples=60, deadline=None)
@given(signed_graphs())
def test_balanced_iff_no_negative_cycles(g):
    assert (is_balanced(g) is not None) == (len(negative_cycles(g)) == 0)


@settings(max_examples=60, deadline=None)
@given(signed_graphs())
def test_antibalance_is_balance_of_negation(g):
    assert (is_antibalanced(g) is not None) == (
        is_balanced(negate_signature(g)) is not None
    )


@settings(max_examples=40, deadline=None)
@given(signed_graphs(), st.sets(st.integers(0, 6)))
def test_equivalent_recovers_switching(g, members):
    members = {v for v in members if v < g.n}
    h = switch(g, members)
    witness = equivalent(g, h)
    assert witness is not None
    assert switch(g, witness) == h


def test_equivalent_negative_and_errors():
    g = gen_cycle(3)
    h = gen_cycle(3, [-1, 1, 1])  # one negative triangle is unbalanced
    assert equivalent(g, h) is None
    with pytest.raises(InputError):
        equivalent(g, gen_cycle(4))


def test_negative_cycles_canonical():
    g = gen_cycle(5, [-1] * 5)
    cycles = negative_cycles(g)
    assert cycles == frozenset({(0, 1, 2, 3, 4)})
    assert negative_cycles(gen_cycle(4, [-1] * 4)) == frozenset()


def test_negative_cycles_cap():
    with pytest.raises(CapacityError):
        negative_cycles(gen_random_connected(1, 11))


def test_frustration_known_values():
    assert frustration_index(gen_gn(8))[0] == 0
    assert frustration_index(gen_cycle(3, [-1, 1, 1]))[0] == 1
    for t, want in ((3, 2), (4, 4), (5, 5)):
        # t >= 4 gives value t; at t=3 switching at {a0, a1, b2} leaves
        # only two negative edges, so the value drops to 2
        assert frustration_index(gen_ktt_tau(t))[0] == want


@settings(max_examples=25, deadline=None)
@given(signed_graphs(max_n=5))
def test_frustration_matches_deletion_oracle(g):
    if g.m > 10:
        return
    value, witness = frustration_index(g)
    oracle_value, _ = min_deletion_balancing(g)
    assert value == oracle_value
    assert len(witness) == value


@settings(max_examples=25, deadline=None)
@given(signed_graphs(max_n=6), st.sets(st.integers(0, 5)))
def test_frustration_switching_invariant(g, members):
    members = {v for v in members if v < g.n}
    assert frustration_index(g)[0] == frustration_index(switch(g, members))[0]


def test_frustration_zero_iff_balanced():
    assert frustration_index(gen_gn(6))[0] == 0
    g = gen_cycle(5, [-1] * 5)
    assert frustration_index(g)[0] > 0 and is_balanced(g) is None


def test_frustration_cap():
    with pytest.raises(CapacityError):
        frustration_index(gen_random_connected(2, 9), max_n=8)


def test_realize_min_signature():
    g = gen_ktt_tau(4)
    value, witness = frustration_index(g)
    assert value == 4
    realized = realize_min_signature(g, witness)
    assert set(realized.negative_edges()) == set(witness)
    assert equivalent(g, realized) is not None
    with pytest.raises(InputError):
        realize_min_signature(g, [(0, 1)])  # not an edge (same side)
    with pytest.raises(InputError):
        # deleting a single matching edge does not balance the rest
        realize_min_signature(g, [(0, 4)])


def test_connected():
    assert gen_cycle(5).connected()
    assert not SignedGraph.from_edge_list(4, [(0, 1, 1), (2, 3, -1)]).connected()
    assert SignedGraph.from_edge_list(1, []).connected()
