"""Signed graphs: construction, switching, balance, frustration.

A signed graph is a simple undirected graph on vertices 0..n-1 whose
edges each carry a sign +1 or -1. Switching at a vertex set X flips the
sign of every edge with exactly one end in X; two signatures on the same
underlying graph are equivalent when one arises from the other this way.
A graph is balanced when its vertices split into two sides with positive
edges inside the sides and negative edges across, and antibalanced when
negating every sign makes it balanced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .errors import CapacityError, InputError

SwitchSet = frozenset  # of vertex ids
CycleSet = frozenset  # of canonical vertex tuples

NEGATIVE_CYCLES_MAX_N = 10
FRUSTRATION_MAX_N = 20


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph; edges are (u, v, sign) with u < v, sorted."""

    n: int
    edges: tuple

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple]) -> "SignedGraph":
        """Validate and canonicalize an edge list into a SignedGraph."""
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        seen = set()
        canon = []
        for item in edges:
            try:
                u, v, s = item
            except (TypeError, ValueError):
                raise InputError(f"edge {item!r} is not a (u, v, sign) triple") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge {item!r} has non-integer endpoints")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if s not in (1, -1):
                raise InputError(f"edge {u}-{v} has sign {s!r}, expected 1 or -1")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"duplicate edge {u}-{v}")
            seen.add((u, v))
            canon.append((u, v, int(s)))
        canon.sort()
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _sign_map(self) -> dict:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def _adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._sign_map

    def sign_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._sign_map[(u, v)]
        except KeyError:
            raise InputError(f"no edge {u}-{v}") from None

    def neighbors(self, v: int) -> tuple:
        return tuple(w for w, _ in self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def edge_pairs(self) -> tuple:
        return tuple((u, v) for u, v, _ in self.edges)

    def negative_edges(self) -> tuple:
        return tuple((u, v) for u, v, s in self.edges if s < 0)

    def connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class BalancePartition:
    """The two sides of a balance 2-coloring, each a sorted vertex tuple."""

    u1: tuple
    u2: tuple


def graph_to_json(g: SignedGraph) -> dict:
    """JSON-ready dict; edges listed with u < v in lexicographic order."""
    return {
        "schema": 1,
        "n": g.n,
        "edges": [{"u": u, "v": v, "sign": s} for u, v, s in g.edges],
    }


def graph_from_json(payload: dict) -> SignedGraph:
    """Parse the graph JSON format, rejecting duplicates and self-loops."""
    if not isinstance(payload, dict):
        raise InputError("graph JSON must be an object")
    try:
        n = payload["n"]
        raw = payload["edges"]
    except (KeyError, TypeError):
        raise InputError("graph JSON needs 'n' and 'edges'") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError("'n' must be an integer")
    if not isinstance(raw, list):
        raise InputError("'edges' must be a list")
    edges = []
    for item in raw:
        if not isinstance(item, dict):
            raise InputError(f"edge entry {item!r} must be an object")
        try:
            edges.append((item["u"], item["v"], item["sign"]))
        except KeyError:
            raise InputError(f"edge entry {item!r} needs 'u', 'v', 'sign'") from None
    return SignedGraph.from_edge_list(n, edges)


def switch(g: SignedGraph, members: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one end in `members`."""
    x = frozenset(members)
    for v in x:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InputError(f"switch set member {v!r} out of range")
    flipped = [
        (u, v, -s if ((u in x) != (v in x)) else s) for u, v, s in g.edges
    ]
    return SignedGraph(g.n, tuple(flipped))


def negate_signature(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def is_balanced(g: SignedGraph) -> Optional[BalancePartition]:
    """Balance partition via BFS 2-coloring, or None when unbalanced.

    A positive edge forces equal colors, a negative edge opposite colors.
    Each component's smallest vertex lands on side u1, so the edgeless
    graph yields (all vertices, empty).
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w, s in g._adj[u]:
                want = color[u] if s > 0 else 1 - color[u]
                if color[w] == -1:
                    color[w] = want
                    queue.append(w)
                elif color[w] != want:
                    return None
    u1 = tuple(v for v in range(g.n) if color[v] == 0)
    u2 = tuple(v for v in range(g.n) if color[v] == 1)
    return BalancePartition(u1, u2)


def is_antibalanced(g: SignedGraph) -> Optional[BalancePartition]:
    """Balance partition of the negated signature, or None."""
    return is_balanced(negate_signature(g))


def equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[SwitchSet]:
    """Switch set carrying g1 onto g2, or None when inequivalent.

    Both graphs must share the underlying (unsigned) graph. The witness
    never contains the smallest vertex of any component, making it the
    canonical choice among the per-component complements.
    """
    if g1.n != g2.n or g1.edge_pairs() != g2.edge_pairs():
        raise InputError("graphs differ in vertices or underlying edges")
    product = SignedGraph(
        g1.n,
        tuple((u, v, s1 * g2.sign_of(u, v)) for u, v, s1 in g1.edges),
    )
    part = is_balanced(product)
    if part is None:
        return None
    witness = frozenset(part.u2)
    assert switch(g1, witness) == g2
    return witness


def negative_cycles(g: SignedGraph, max_n: int = NEGATIVE_CYCLES_MAX_N) -> CycleSet:
    """All negative simple circuits, each as its canonical vertex tuple.

    Canonical form: start at the circuit's smallest vertex and take the
    lexicographically smaller of the two traversal directions.
    """
    if g.n > max_n:
        raise CapacityError(f"negative_cycles capped at n <= {max_n}, got {g.n}")
    out = set()

    def extend(path, seen, sign):
        u = path[-1]
        s = path[0]
        for w, ws in g._adj[u]:
            if w == s and len(path) >= 3:
                if path[1] < path[-1] and sign * ws < 0:
                    out.add(tuple(path))
            elif w > s and w not in seen:
                seen.add(w)
                path.append(w)
                extend(path, seen, sign * ws)
                path.pop()
                seen.remove(w)

    for s in range(g.n):
        extend([s], {s}, 1)
    return frozenset(out)


def _edge_shift_arrays(g: SignedGraph):
    # vertex 0 is pinned outside every switch set; its mask bit is always 0,
    # encoded as shift 63 so (mask >> 63) == 0 for all masks used here
    shift_u = np.array([63 if u == 0 else u - 1 for u, _, _ in g.edges], dtype=np.int64)
    shift_v = np.array([63 if v == 0 else v - 1 for _, v, _ in g.edges], dtype=np.int64)
    eneg = np.array([1 if s < 0 else 0 for _, _, s in g.edges], dtype=np.int64)
    return shift_u, shift_v, eneg


def _negatives_after_switch(g: SignedGraph, mask: int) -> tuple:
    out = []
    for u, v, s in g.edges:
        in_u = u != 0 and (mask >> (u - 1)) & 1 == 1
        in_v = v != 0 and (mask >> (v - 1)) & 1 == 1
        flipped = in_u != in_v
        if (s < 0) != flipped:  # negative sign xor flipped-by-cut
            out.append((u, v))
    return tuple(out)


def frustration_index(
    g: SignedGraph,
    max_n: int = FRUSTRATION_MAX_N,
    backend: str | None = None,
):
    """Minimum negative-edge count over the switching class, with witness.

    Returns (value, witness) where witness is the negative edge set of a
    minimizing switching; ties pick the lexicographically smallest edge
    set. Equals the minimum number of edge deletions that balance g.
    """
    if g.n > max_n:
        raise CapacityError(f"frustration_index capped at n <= {max_n}, got {g.n}")
    if g.m == 0:
        return 0, frozenset()
    shift_u, shift_v, eneg = _edge_shift_arrays(g)
    n_masks = 1 << max(0, g.n - 1)
    which = _kernels.resolve_backend(backend)
    if which == "numba":
        best, first_mask, ties = _kernels.frustration_scan_numba(
            shift_u, shift_v, eneg, n_masks
        )
    else:
        best, first_mask, ties = _kernels.frustration_scan_numpy(
            shift_u, shift_v, eneg, n_masks
        )
    best = int(best)
    if best == 0:
        return 0, frozenset()
    if ties <= 1:
        masks = [int(first_mask)]
    elif which == "numba":
        buf = np.empty(int(ties), dtype=np.int64)
        k = _kernels.frustration_collect_numba(
            shift_u, shift_v, eneg, n_masks, best, buf
        )
        masks = [int(x) for x in buf[:k]]
    else:
        masks = [
            int(x)
            for x in _kernels.frustration_collect_numpy(
                shift_u, shift_v, eneg, n_masks, best
            )
        ]
    witness = min(sorted(_negatives_after_switch(g, mask)) for mask in masks)
    return best, frozenset(witness)


def realize_min_signature(g: SignedGraph, e_set: Iterable[tuple]) -> SignedGraph:
    """Equivalent signature whose negative edges all lie inside `e_set`.

    `e_set` must be a set of edges whose deletion balances g. When its
    size equals the frustration index, the negative edges of the result
    are exactly `e_set`.
    """
    wanted = set()
    for pair in e_set:
        u, v = pair
        if u > v:
            u, v = v, u
        if not g.has_edge(u, v):
            raise InputError(f"edge {u}-{v} not in graph")
        wanted.add((u, v))
    rest = tuple(e for e in g.edges if (e[0], e[1]) not in wanted)
    part = is_balanced(SignedGraph(g.n, rest))
    if part is None:
        raise InputError("deleting the given edges does not balance the graph")
    return switch(g, part.u2)


def min_deletion_balancing(g: SignedGraph, max_edges: int = 14):
    """Smallest edge set whose deletion balances g, by subset enumeration.

    Exponential in the edge count; intended as an independent cross-check
    for frustration_index on small graphs.
    """
    if g.m > max_edges:
        raise CapacityError(f"deletion enumeration capped at m <= {max_edges}")
    for k in range(g.m + 1):
        for combo in combinations(range(g.m), k):
            dropped = set(combo)
            rest = tuple(e for i, e in enumerate(g.edges) if i not in dropped)
            if is_balanced(SignedGraph(g.n, rest)) is not None:
                return k, frozenset((g.edges[i][0], g.edges[i][1]) for i in combo)
    raise AssertionError("deleting all edges always balances")
