"""Discrete-time information spread on signed graphs.

Each step places a value on a still-uninformed (Zero) vertex, then runs
one synchronous round: informed and confused vertices keep their labels;
a Zero vertex that hears exactly one signed value from informed
neighbors (edge sign times neighbor value) adopts it, hears both values
becomes confused, hears nothing stays Zero. Confused vertices transmit
nothing, and the vertex placed this step keeps its placed value. In ID
mode every placement carries A; relaxed (rID) mode may place -A.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InputError, StrategyError
from .graph import SignedGraph, graph_to_json, negate_signature

MODE_ID = "ID"
MODE_RID = "rID"


class Label(IntEnum):
    ZERO = 0
    A = 1
    NEG_A = 2
    CONFUSED = 3

    def negated(self) -> "Label":
        if self is Label.A:
            return Label.NEG_A
        if self is Label.NEG_A:
            return Label.A
        return self


_LABEL_STR = {Label.ZERO: "0", Label.A: "A", Label.NEG_A: "-A", Label.CONFUSED: "C"}
_STR_LABEL = {s: l for l, s in _LABEL_STR.items()}


def label_to_str(label) -> str:
    return _LABEL_STR[Label(int(label))]


def str_to_label(text: str) -> Label:
    try:
        return _STR_LABEL[text]
    except KeyError:
        raise InputError(f"unknown label {text!r}, expected one of 0, A, -A, C") from None


@dataclass(frozen=True)
class Placement:
    vertex: int
    info: Label


@dataclass(frozen=True)
class Strategy:
    mode: str
    placements: tuple

    def __post_init__(self):
        if self.mode not in (MODE_ID, MODE_RID):
            raise InputError(f"mode must be {MODE_ID!r} or {MODE_RID!r}")
        object.__setattr__(self, "placements", tuple(self.placements))


class StepContext:
    """Per-graph adjacency tables for the propagation kernels."""

    def __init__(self, g: SignedGraph, backend: str | None = None):
        self.graph = g
        self.backend = _kernels.resolve_backend(backend)
        n = g.n
        if self.backend == "numba":
            indptr = np.zeros(n + 1, dtype=np.int64)
            for v in range(n):
                indptr[v + 1] = indptr[v] + g.degree(v)
            nbrs = np.zeros(max(indptr[n], 1), dtype=np.int64)
            sgn = np.zeros(max(indptr[n], 1), dtype=np.int8)
            for v in range(n):
                base = indptr[v]
                for i, (w, s) in enumerate(g._adj[v]):
                    nbrs[base + i] = w
                    sgn[base + i] = s
            self._indptr, self._nbrs, self._sgn = indptr, nbrs, sgn
        else:
            pos = np.zeros((n, n), dtype=bool)
            neg = np.zeros((n, n), dtype=bool)
            for u, v, s in g.edges:
                if s > 0:
                    pos[u, v] = pos[v, u] = True
                else:
                    neg[u, v] = neg[v, u] = True
            self._pos, self._neg = pos, neg

    def zeros_state(self) -> np.ndarray:
        return np.zeros(self.graph.n, dtype=np.int8)

    def step(self, labels: np.ndarray, vertex: int, info: int) -> np.ndarray:
        if self.backend == "numba":
            return _kernels.step_numba(
                self._indptr, self._nbrs, self._sgn, labels, vertex, info
            )
        return _kernels.step_numpy(self._pos, self._neg, labels, vertex, info)

    def expand(self, labels: np.ndarray, allow_neg: bool):
        """Child states for every legal placement, in lexicographic order."""
        if self.backend == "numba":
            return _kernels.expand_numba(
                self._indptr, self._nbrs, self._sgn, labels, allow_neg
            )
        return _kernels.expand_numpy(self._pos, self._neg, labels, allow_neg)


@dataclass(eq=False)
class Trace:
    """A run of the process: snapshots[i] is the state after step i."""

    graph: SignedGraph
    strategy: Strategy
    snapshots: tuple
    complete: bool

    @property
    def steps(self) -> int:
        return len(self.snapshots) - 1

    @property
    def final(self) -> np.ndarray:
        return self.snapshots[-1]

    def confused(self) -> tuple:
        return tuple(int(v) for v in np.flatnonzero(self.final == int(Label.CONFUSED)))

    def confused_count(self) -> int:
        return len(self.confused())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.strategy == other.strategy
            and self.complete == other.complete
            and len(self.snapshots) == len(other.snapshots)
            and all(
                np.array_equal(a, b) for a, b in zip(self.snapshots, other.snapshots)
            )
        )


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def step(g: SignedGraph, state: np.ndarray, placement: Placement,
         ctx: StepContext | None = None) -> np.ndarray:
    """Place on a Zero vertex and run one synchronous round."""
    ctx = ctx or StepContext(g)
    v = placement.vertex
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InputError(f"placement vertex {v!r} out of range")
    try:
        info = Label(placement.info)
    except ValueError:
        raise InputError(f"invalid placement value {placement.info!r}") from None
    if info not in (Label.A, Label.NEG_A):
        raise StrategyError(f"placement value must be A or -A, got {info!r}")
    if state[v] != int(Label.ZERO):
        raise StrategyError(f"vertex {v} is not Zero")
    return _freeze(ctx.step(np.asarray(state, dtype=np.int8), v, int(info)))


def run(g: SignedGraph, strategy: Strategy, ctx: StepContext | None = None) -> Trace:
    """Run a full strategy from the all-Zero state."""
    ctx = ctx or StepContext(g)
    labels = ctx.zeros_state()
    snapshots = [_freeze(labels.copy())]
    for idx, p in enumerate(strategy.placements, start=1):
        if not (isinstance(p.vertex, int) and 0 <= p.vertex < g.n):
            raise InputError(f"step {idx}: placement vertex {p.vertex!r} out of range")
        try:
            info = Label(p.info)
        except ValueError:
            raise InputError(f"step {idx}: invalid placement value {p.info!r}") from None
        if strategy.mode == MODE_ID and info is not Label.A:
            raise StrategyError(f"step {idx}: ID mode only places A", step=idx)
        if info not in (Label.A, Label.NEG_A):
            raise StrategyError(f"step {idx}: placement value must be A or -A", step=idx)
        if labels[p.vertex] != int(Label.ZERO):
            raise StrategyError(f"step {idx}: vertex {p.vertex} is not Zero", step=idx)
        labels = _freeze(ctx.step(labels, p.vertex, int(info)))
        snapshots.append(labels)
    complete = not bool((labels == int(Label.ZERO)).any())
    return Trace(graph=g, strategy=strategy, snapshots=tuple(snapshots), complete=complete)


def levels(trace: Trace) -> dict:
    """Level map of a complete trace.

    The j-th placed vertex has level j-1; every other vertex has the
    first step index at which its label became nonzero.
    """
    if not trace.complete:
        raise InputError("levels are defined only for complete traces")
    placed = {p.vertex: j for j, p in enumerate(trace.strategy.placements, start=1)}
    out = {}
    for v in range(trace.graph.n):
        if v in placed:
            out[v] = placed[v] - 1
            continue
        for i in range(1, len(trace.snapshots)):
            if trace.snapshots[i][v] != int(Label.ZERO):
                out[v] = i
                break
    return out


def mirror_trace(trace: Trace) -> Trace:
    """Mirror a complete rID trace onto the negated signature.

    Placement values and snapshot labels are negated exactly on
    odd-level vertices (confused stays confused); the result replays as
    a valid complete trace on negate_signature(graph) with the same
    confused set. Applying it twice returns the original trace.
    """
    if trace.strategy.mode != MODE_RID:
        raise InputError("mirror_trace expects an rID trace")
    if not trace.complete:
        raise InputError("mirror_trace expects a complete trace")
    lv = levels(trace)
    odd = np.array([lv[v] % 2 == 1 for v in range(trace.graph.n)], dtype=bool)
    placements = tuple(
        Placement(p.vertex, p.info.negated() if odd[p.vertex] else Label(p.info))
        for p in trace.strategy.placements
    )
    snapshots = []
    for snap in trace.snapshots:
        out = snap.copy()
        was_a = odd & (snap == int(Label.A))
        was_neg = odd & (snap == int(Label.NEG_A))
        out[was_a] = int(Label.NEG_A)
        out[was_neg] = int(Label.A)
        snapshots.append(_freeze(out))
    return Trace(
        graph=negate_signature(trace.graph),
        strategy=Strategy(MODE_RID, placements),
        snapshots=tuple(snapshots),
        complete=True,
    )


def pending_signals(g: SignedGraph, labels: np.ndarray):
    """Per-vertex (hears A, hears -A) flags for the Zero vertices."""
    hears_p = [False] * g.n
    hears_m = [False] * g.n
    for v in range(g.n):
        if labels[v] != int(Label.ZERO):
            continue
        for w, s in g._adj[v]:
            lw = labels[w]
            if lw == int(Label.A):
                val = s
            elif lw == int(Label.NEG_A):
                val = -s
            else:
                continue
            if val > 0:
                hears_p[v] = True
            else:
                hears_m[v] = True
    return hears_p, hears_m


def strategy_to_json(strategy: Strategy) -> list:
    return [
        {"vertex": p.vertex, "info": label_to_str(p.info)} for p in strategy.placements
    ]


def strategy_from_json(mode: str, payload: Iterable[dict]) -> Strategy:
    placements = []
    for item in payload:
        try:
            placements.append(Placement(item["vertex"], str_to_label(item["info"])))
        except (KeyError, TypeError):
            raise InputError(f"placement entry {item!r} needs 'vertex' and 'info'") from None
    return Strategy(mode, tuple(placements))


def trace_to_json(trace: Trace) -> dict:
    return {
        "schema": 1,
        "graph": graph_to_json(trace.graph),
        "mode": trace.strategy.mode,
        "placements": strategy_to_json(trace.strategy),
        "snapshots": [
            [label_to_str(x) for x in snap] for snap in trace.snapshots
        ],
        "confused": list(trace.confused()),
        "complete": trace.complete,
    }
