"""Placement policies with per-policy confusion guarantees.

Every policy returns a complete ID strategy (placements carry value A
only). Choices that the guarantee leaves free are resolved toward the
smallest vertex id, so each policy is deterministic.
"""

from __future__ import annotations

from .engine import MODE_ID, Label, Placement, StepContext, Strategy, pending_signals
from .errors import InputError
from .graph import SignedGraph, is_balanced

_ZERO = int(Label.ZERO)


def _drive(g: SignedGraph, pick) -> Strategy:
    """Run the process, choosing each placement with pick(labels, i)."""
    ctx = StepContext(g)
    labels = ctx.zeros_state()
    placements = []
    while (labels == _ZERO).any():
        v = pick(labels, len(placements))
        if labels[v] != _ZERO:
            raise InputError(f"policy picked a non-Zero vertex {v}")
        placements.append(Placement(v, Label.A))
        labels = ctx.step(labels, v, int(Label.A))
    return Strategy(MODE_ID, tuple(placements))


def _zeros(labels):
    return [v for v in range(len(labels)) if labels[v] == _ZERO]


def tree_frontier(g: SignedGraph) -> Strategy:
    """On trees: grow from vertex 0, always placing on a Zero vertex
    adjacent to an informed one. Guarantees zero confusion."""
    if not g.connected() or g.m != g.n - 1:
        raise InputError("tree_frontier expects a tree")

    def pick(labels, i):
        if i == 0:
            return 0
        for v in _zeros(labels):
            if any(labels[w] in (1, 2) for w in g.neighbors(v)):
                return v
        raise InputError("no frontier vertex found")

    return _drive(g, pick)


def _cycle_order(g: SignedGraph) -> list[int]:
    order = [0, min(g.neighbors(0))]
    while len(order) < g.n:
        a, b = order[-2], order[-1]
        nxt = [w for w in g.neighbors(b) if w != a]
        if len(nxt) != 1:
            raise InputError("circuit_strategy expects a single cycle")
        order.append(nxt[0])
    return order


def circuit_strategy(g: SignedGraph) -> Strategy:
    """On a single cycle: place on every other vertex, with the residue
    of the length mod 3 deciding the tail. Guarantees zero confusion,
    except the all-negative 5-cycle, where one confused vertex is
    unavoidable and the strategy concedes exactly one."""
    if g.n < 3 or not g.connected() or any(g.degree(v) != 2 for v in range(g.n)):
        raise InputError("circuit_strategy expects a cycle of length >= 3")
    order = _cycle_order(g)
    k = g.n
    all_neg = all(s < 0 for _, _, s in g.edges)
    if k == 5 and all_neg:
        idxs = [0, 2]
    elif k == 5:
        # some stretch of three consecutive edges has positive sign
        # product; inform its four vertices from both ends first
        start = None
        for j in range(5):
            prod = 1
            for d in range(3):
                prod *= g.sign_of(order[(j + d) % 5], order[(j + d + 1) % 5])
            if prod > 0:
                start = j
                break
        assert start is not None
        order = [order[(start + d) % 5] for d in range(5)]
        idxs = [0, 3]
    else:
        r = k % 3
        t = k // 3
        if r == 0:
            idxs = [2 * i for i in range(t)]
        elif r == 1:
            idxs = [2 * i for i in range(t)] + [2 * t]
        else:
            idxs = [0, 4] + [2 * i for i in range(3, t + 1)]
    placements = tuple(Placement(order[j], Label.A) for j in idxs)
    return Strategy(MODE_ID, placements)


def max_degree_first(g: SignedGraph) -> Strategy:
    """Place on a maximum-degree vertex first, then sweep the remaining
    Zero vertices in id order. Guarantees at most
    max(0, n - 2 - max_degree) confused vertices."""
    if not g.connected():
        raise InputError("max_degree_first expects a connected graph")
    dmax = g.max_degree()
    first = min(v for v in range(g.n) if g.degree(v) == dmax)

    def pick(labels, i):
        if i == 0:
            return first
        return _zeros(labels)[0]

    return _drive(g, pick)


def rescue_priority(g: SignedGraph) -> Strategy:
    """Each step, place on a Zero vertex about to hear both values;
    failing that, one about to hear a single value; failing that, the
    smallest Zero vertex. Guarantees at most (1 - 2/max_degree) * n
    confused vertices when max_degree >= 3."""
    if not g.connected():
        raise InputError("rescue_priority expects a connected graph")

    def pick(labels, i):
        hp, hm = pending_signals(g, labels)
        zeros = _zeros(labels)
        for v in zeros:
            if hp[v] and hm[v]:
                return v
        for v in zeros:
            if hp[v] or hm[v]:
                return v
        return zeros[0]

    return _drive(g, pick)


def balanced_partition_first(g: SignedGraph) -> Strategy:
    """On a balanced graph: saturate the larger side of the sign
    partition first (within it, only frontier placements), then cross
    over. Guarantees at most n/2 - 2 confused vertices for n >= 4."""
    if not g.connected():
        raise InputError("balanced_partition_first expects a connected graph")
    if g.n < 4:
        raise InputError("balanced_partition_first expects n >= 4")
    part = is_balanced(g)
    if part is None:
        raise InputError("balanced_partition_first expects a balanced graph")
    side_a, side_b = set(part.u1), set(part.u2)
    if len(side_a) < len(side_b):
        side_a, side_b = side_b, side_a

    def pick(labels, i):
        zeros = _zeros(labels)
        first_zeros = [v for v in zeros if v in side_a]
        if not first_zeros:
            return zeros[0]
        if i == 0:
            for v in first_zeros:
                if any(w in side_b for w in g.neighbors(v)):
                    return v
            return first_zeros[0]
        for v in first_zeros:
            if any(labels[w] in (1, 2) for w in g.neighbors(v)):
                return v
        return first_zeros[0]

    return _drive(g, pick)


def policy_bound(name: str, g: SignedGraph) -> float:
    """The confusion guarantee the named policy carries on g."""
    if name == "tree_frontier":
        return 0.0
    if name == "circuit_strategy":
        all_neg = all(s < 0 for _, _, s in g.edges)
        return 1.0 if (g.n == 5 and all_neg) else 0.0
    if name == "max_degree_first":
        return float(max(0, g.n - 2 - g.max_degree()))
    if name == "rescue_priority":
        d = g.max_degree()
        if d < 3:
            return float(g.n)
        return (1.0 - 2.0 / d) * g.n
    if name == "balanced_partition_first":
        return max(0.0, g.n / 2.0 - 2.0)
    raise InputError(f"unknown policy {name!r}")


POLICIES = {
    "tree_frontier": tree_frontier,
    "circuit_strategy": circuit_strategy,
    "max_degree_first": max_degree_first,
    "rescue_priority": rescue_priority,
    "balanced_partition_first": balanced_partition_first,
}
