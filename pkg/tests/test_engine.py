import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from signedspread.engine import (
    MODE_ID,
    MODE_RID,
    Label,
    Placement,
    StepContext,
    Strategy,
    label_to_str,
    levels,
    mirror_trace,
    pending_signals,
    run,
    step,
    str_to_label,
    strategy_from_json,
    strategy_to_json,
    trace_to_json,
)
from signedspread.errors import InputError, StrategyError
from signedspread.families import gen_cycle, gen_gn, gen_path, gen_random_connected
from signedspread.graph import SignedGraph, negate_signature


def test_label_negation_and_strings():
    assert Label.A.negated() is Label.NEG_A
    assert Label.NEG_A.negated() is Label.A
    assert Label.ZERO.negated() is Label.ZERO
    assert Label.CONFUSED.negated() is Label.CONFUSED
    for lab in Label:
        assert str_to_label(label_to_str(lab)) is lab
    with pytest.raises(InputError):
        str_to_label("B")


def test_single_step_transmission_signs():
    # 0 -(+)- 1 -(-)- 2: placing on 1 sends A left and -A right
    g = SignedGraph.from_edge_list(3, [(0, 1, 1), (1, 2, -1)])
    state = step(g, StepContext(g).zeros_state(), Placement(1, Label.A))
    assert list(state) == [int(Label.A), int(Label.A), int(Label.NEG_A)]


def test_informed_vertices_retransmit_every_round():
    # path 0-1-2-3, all positive: after placing 0, vertex 1 is informed;
    # at the next step it transmits again, reaching 2 alongside 3's signal
    g = gen_path(4)
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(3, Label.A))))
    assert trace.complete
    assert [list(s) for s in trace.snapshots][1] == [1, 1, 0, 0]
    assert list(trace.final) == [1, 1, 1, 1]
    assert trace.confused() == ()


def test_conflicting_signals_confuse():
    # all-negative 5-cycle, placements 0 then 2: vertex 3 hears -A from 2
    # and A from 4 in the same round
    g = gen_cycle(5, [-1] * 5)
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(2, Label.A))))
    assert trace.complete
    assert trace.confused() == (3,)
    assert trace.confused_count() == 1
    assert trace.steps == 2


def test_confused_vertices_stay_silent():
    # extend the confusing cycle with a pendant on the confused vertex:
    # the pendant must stay Zero until something places there
    edges = [(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 4, -1), (0, 4, -1), (3, 5, 1)]
    g = SignedGraph.from_edge_list(6, edges)
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(2, Label.A))))
    assert not trace.complete
    assert trace.final[3] == int(Label.CONFUSED)
    assert trace.final[5] == int(Label.ZERO)
    done = run(
        g,
        Strategy(
            MODE_ID,
            (Placement(0, Label.A), Placement(2, Label.A), Placement(5, Label.A)),
        ),
    )
    assert done.complete and done.confused() == (3,)


def test_run_validations():
    g = gen_path(3)
    with pytest.raises(StrategyError):
        run(g, Strategy(MODE_ID, (Placement(0, Label.NEG_A),)))
    with pytest.raises(StrategyError):
        # vertex 1 is informed after step 1
        run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(1, Label.A))))
    with pytest.raises(InputError):
        run(g, Strategy(MODE_ID, (Placement(7, Label.A),)))
    with pytest.raises(InputError):
        Strategy("bogus", ())
    err = None
    try:
        run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(1, Label.A))))
    except StrategyError as exc:
        err = exc
    assert err is not None and err.step == 2


def test_relaxed_mode_allows_negative_placement():
    g = gen_path(3, [-1, -1])
    trace = run(g, Strategy(MODE_RID, (Placement(1, Label.NEG_A),)))
    assert trace.complete
    assert list(trace.final) == [int(Label.A), int(Label.NEG_A), int(Label.A)]


def test_levels():
    g = gen_path(4)
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(3, Label.A))))
    assert levels(trace) == {0: 0, 1: 1, 2: 2, 3: 1}
    with pytest.raises(InputError):
        levels(run(g, Strategy(MODE_ID, ())))


@st.composite
def relaxed_runs(draw):
    n = draw(st.integers(3, 7))
    g = gen_random_connected(draw(st.integers(0, 9999)), n)
    ctx = StepContext(g)
    labels = ctx.zeros_state()
    placements = []
    while (labels == int(Label.ZERO)).any():
        zeros = [int(v) for v in np.flatnonzero(labels == int(Label.ZERO))]
        v = draw(st.sampled_from(zeros))
        info = draw(st.sampled_from([Label.A, Label.NEG_A]))
        placements.append(Placement(v, info))
        labels = ctx.step(labels, v, int(info))
    return g, Strategy(MODE_RID, tuple(placements))


@settings(max_examples=40, deadline=None)
@given(relaxed_runs())
def test_mirror_trace_replays_on_negation(gs):
    g, strategy = gs
    trace = run(g, strategy)
    assert trace.complete
    mirrored = mirror_trace(trace)
    assert mirrored.graph == negate_signature(g)
    assert mirrored.confused() == trace.confused()
    replay = run(mirrored.graph, mirrored.strategy)
    assert replay == mirrored
    assert mirror_trace(mirrored) == trace


def test_mirror_trace_requires_complete_relaxed_trace():
    g = gen_path(3)
    with pytest.raises(InputError):
        mirror_trace(run(g, Strategy(MODE_ID, (Placement(1, Label.A),))))
    with pytest.raises(InputError):
        mirror_trace(run(g, Strategy(MODE_RID, ())))


def test_pending_signals():
    g = gen_cycle(5, [-1] * 5)
    state = step(g, StepContext(g).zeros_state(), Placement(0, Label.A))
    hears_p, hears_m = pending_signals(g, state)
    # zeros are 2 and 3; each hears A from its informed -A neighbor
    # through a negative edge
    assert hears_p == [False, False, True, True, False]
    assert hears_m == [False] * 5


def test_strategy_json_roundtrip():
    s = Strategy(MODE_RID, (Placement(0, Label.A), Placement(2, Label.NEG_A)))
    payload = strategy_to_json(s)
    assert payload == [{"vertex": 0, "info": "A"}, {"vertex": 2, "info": "-A"}]
    assert strategy_from_json(MODE_RID, payload) == s
    with pytest.raises(InputError):
        strategy_from_json(MODE_ID, [{"vertex": 0}])


def test_trace_json_fields():
    g = gen_cycle(5, [-1] * 5)
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A), Placement(2, Label.A))))
    payload = trace_to_json(trace)
    assert payload["schema"] == 1
    assert payload["mode"] == MODE_ID
    assert payload["confused"] == [3]
    assert payload["complete"] is True
    assert payload["snapshots"][0] == ["0"] * 5
    assert payload["snapshots"][-1].count("C") == 1


def test_gn_balanced_play_floods_without_confusion():
    g = gen_gn(6)
    # place inside one clique, then the matched twin of the other side
    trace = run(g, Strategy(MODE_ID, (Placement(0, Label.A),)))
    assert trace.final[3] == int(Label.NEG_A)  # matched partner flips
    assert trace.final[1] == int(Label.A) and trace.final[2] == int(Label.A)
