import math
from fractions import Fraction

import pytest

from signedspread.errors import CapacityError, InputError
from signedspread.families import gen_cycle, gen_path
from signedspread.graph import SignedGraph, graph_from_json
from signedspread.solver import Budget, exact_confusion, exact_relaxed_confusion
from signedspread.verify import (
    CLAIMS,
    burning_number_brute,
    conjecture_ceiling,
    explore_conjecture,
    family_instances,
    random_instances,
    run_suite,
    verify_claim,
)

# Claims that assert literal target values known to be off at the
# smallest instances; they are kept failing on purpose.
EXPECTED_RED = {"conjecture_bound", "conjecture_relaxed_bound", "frustration_family"}


def test_run_suite_statuses():
    results = run_suite()
    assert [r.claim_id for r in results] == sorted(CLAIMS)
    by_status = {r.claim_id: r.status for r in results}
    assert {cid for cid, s in by_status.items() if s == "fail"} == EXPECTED_RED
    assert all(s == "pass" for cid, s in by_status.items() if cid not in EXPECTED_RED)


def test_run_suite_zero_budget_skips_everything():
    results = run_suite(budget=Budget(nodes=0))
    assert len(results) == len(CLAIMS)
    assert all(r.status == "skipped" for r in results)


def test_run_suite_claim_filter():
    results = run_suite(claim_ids=["tree_zero"])
    assert len(results) == 1 and results[0].claim_id == "tree_zero"
    pair = run_suite(claim_ids=["tree_zero", "c5_allneg", "tree_zero"])
    assert [r.claim_id for r in pair] == ["c5_allneg", "tree_zero"]


def test_verify_claim_json_shape():
    res = verify_claim("c5_allneg")
    assert res.status == "pass"
    payload = res.to_json()
    assert payload["schema"] == 1
    assert payload["claim_id"] == "c5_allneg"
    assert set(payload) >= {"instance", "expected", "observed", "status"}


def test_verify_claim_unknown():
    with pytest.raises(InputError):
        verify_claim("perpetual_motion")
    with pytest.raises(InputError):
        verify_claim("tree_zero", params={"bogus_kw": 1})


@pytest.mark.parametrize("n", range(4, 11))
def test_burning_matches_sqrt_ceiling(n):
    want = math.isqrt(n - 1) + 1  # ceil(sqrt(n))
    assert burning_number_brute(gen_path(n)) == want
    assert burning_number_brute(gen_cycle(n)) == want


def test_burning_edge_cases():
    assert burning_number_brute(gen_path(1)) == 1
    ball = SignedGraph.from_edge_list(5, [(0, v, 1) for v in range(1, 5)])
    assert burning_number_brute(ball) == 2
    two_parts = SignedGraph.from_edge_list(4, [(0, 1, 1), (2, 3, 1)])
    with pytest.raises(InputError):
        burning_number_brute(two_parts)
    with pytest.raises(CapacityError):
        burning_number_brute(gen_path(19))
    assert burning_number_brute(gen_path(19), max_n=19) == 5


@pytest.mark.parametrize("n", range(0, 120))
def test_conjecture_ceiling_exact(n):
    assert conjecture_ceiling(n) == math.ceil(Fraction(3 * n, 5) - 4)


def test_explorer_violations_are_reproducible():
    rep = explore_conjecture("conj1", max_n=8, random_count=12, random_max_n=6)
    assert rep.which == "conj1" and rep.checked > 0
    assert rep.violations, "small orders sit above the conjectured ceiling"
    for v in rep.violations[:3]:
        g = graph_from_json(v.graph)
        assert g.n == v.n
        fresh = exact_confusion(g)
        assert fresh.optimal and fresh.optimum == v.observed
        assert v.observed > v.bound
        assert v.report["optimum"] == v.observed
        assert v.frustration is None


def test_explorer_conj2_uses_frustration():
    rep = explore_conjecture("conj2", max_n=6, random_count=8, random_max_n=5)
    assert rep.violations
    v = rep.violations[0]
    assert v.frustration is not None
    assert v.bound == min(v.frustration, conjecture_ceiling(v.n))
    fresh = exact_relaxed_confusion(graph_from_json(v.graph))
    assert fresh.optimum == v.observed
    payload = rep.to_json()
    assert payload["schema"] == 1
    assert payload["violations"][0]["label"] == v.label
    with pytest.raises(InputError):
        explore_conjecture("conj3")


def test_family_instances_bounded_and_distinct():
    pairs = family_instances(max_n=12)
    assert pairs and all(g.n <= 12 for _, g in pairs)
    labels = [label for label, _ in pairs]
    assert len(set(labels)) == len(labels)
    assert any(label.startswith("gn") for label in labels)
    assert any(label.startswith("gst") for label in labels)


def test_random_instances_deterministic():
    a = random_instances(count=6, max_n=6, seed=7)
    b = random_instances(count=6, max_n=6, seed=7)
    assert [lab for lab, _ in a] == [lab for lab, _ in b]
    assert all(ga == gb for (_, ga), (_, gb) in zip(a, b))
    assert {g.n for _, g in a} <= set(range(3, 7))
