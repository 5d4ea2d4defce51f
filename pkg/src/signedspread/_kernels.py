"""Numerical kernels, each with a numba and a pure-numpy implementation.

The active backend is chosen from the environment variable
SIGNEDSPREAD_BACKEND ("numba" or "numpy"; unset/auto picks numba when it
is importable and numpy otherwise). Both implementations stay importable
side by side so the parity tests and the benchmark can compare them.

Label codes: 0 = Zero (uninformed), 1 = A, 2 = -A, 3 = C (confused).
A Zero vertex adopts the unique signed value it hears from informed
neighbors (edge sign times the neighbor's value), becomes confused when
it hears both values, and stays Zero when it hears nothing. Confused
vertices transmit nothing. The placed vertex keeps its placed value.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

ENV_FLAG = "SIGNEDSPREAD_BACKEND"

ZERO = 0
INFO_A = 1
INFO_NEG_A = 2
CONFUSED = 3

_CHUNK = 1 << 16


def resolve_backend(override: str | None = None) -> str:
    """Map an explicit override or the env flag to "numba" or "numpy"."""
    req = (override or os.environ.get(ENV_FLAG, "auto") or "auto").strip().lower()
    if req in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if req == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("backend 'numba' requested but numba is not importable")
        return "numba"
    if req == "numpy":
        return "numpy"
    raise RuntimeError(f"unknown backend {req!r} (expected 'numba' or 'numpy')")


# ---------------------------------------------------------------------------
# pure-numpy implementations


def step_numpy(pos_adj, neg_adj, labels, v, info):
    """One synchronous round after placing `info` on Zero vertex `v`."""
    gp = labels.copy()
    gp[v] = info
    plus = gp == INFO_A
    minus = gp == INFO_NEG_A
    hears_p = (pos_adj & plus).any(axis=1) | (neg_adj & minus).any(axis=1)
    hears_m = (pos_adj & minus).any(axis=1) | (neg_adj & plus).any(axis=1)
    zero = gp == ZERO
    gp[zero & hears_p & ~hears_m] = INFO_A
    gp[zero & hears_m & ~hears_p] = INFO_NEG_A
    gp[zero & hears_p & hears_m] = CONFUSED
    return gp


def expand_numpy(pos_adj, neg_adj, labels, allow_neg):
    """All child states of `labels`, one per (Zero vertex, placement value).

    Rows are ordered by vertex ascending, value A before -A, which is the
    lexicographic order the solvers rely on. Returns (children, moves,
    ccounts) where ccounts[i] is the confused-vertex count of child i.
    """
    n = labels.shape[0]
    zeros = np.flatnonzero(labels == ZERO)
    infos = (INFO_A, INFO_NEG_A) if allow_neg else (INFO_A,)
    k = len(zeros) * len(infos)
    children = np.empty((k, n), dtype=np.int8)
    moves = np.empty((k, 2), dtype=np.int64)
    ccounts = np.empty(k, dtype=np.int64)
    row = 0
    for v in zeros:
        for info in infos:
            child = step_numpy(pos_adj, neg_adj, labels, int(v), info)
            children[row] = child
            moves[row, 0] = v
            moves[row, 1] = info
            ccounts[row] = int((child == CONFUSED).sum())
            row += 1
    return children, moves, ccounts


def frustration_scan_numpy(shift_u, shift_v, eneg, n_masks):
    """Minimum negative-edge count over all switchings, scanned by mask.

    Masks encode switch sets over vertices 1..n-1 (vertex 0 is pinned
    outside). Returns (best, first mask attaining it, tie count).
    """
    m = len(shift_u)
    best = m + 1
    first_mask = 0
    ties = 0
    # uint64 >> int64 has no safe common type in numpy; shift as uint64
    su = shift_u.astype(np.uint64)
    sv = shift_v.astype(np.uint64)
    eneg64 = [np.uint64(x) for x in eneg]
    one = np.uint64(1)
    for lo in range(0, n_masks, _CHUNK):
        hi = min(lo + _CHUNK, n_masks)
        masks = np.arange(lo, hi, dtype=np.uint64)
        counts = np.zeros(hi - lo, dtype=np.int64)
        for j in range(m):
            flip = ((masks >> su[j]) ^ (masks >> sv[j])) & one
            counts += (flip ^ eneg64[j]).astype(np.int64)
        cbest = int(counts.min())
        if cbest < best:
            best = cbest
            first_mask = lo + int(np.argmax(counts == cbest))
            ties = int((counts == cbest).sum())
        elif cbest == best:
            ties += int((counts == best).sum())
    return best, first_mask, ties


def frustration_collect_numpy(shift_u, shift_v, eneg, n_masks, target):
    """All masks whose switched signature has exactly `target` negatives."""
    m = len(shift_u)
    su = shift_u.astype(np.uint64)
    sv = shift_v.astype(np.uint64)
    eneg64 = [np.uint64(x) for x in eneg]
    one = np.uint64(1)
    found = []
    for lo in range(0, n_masks, _CHUNK):
        hi = min(lo + _CHUNK, n_masks)
        masks = np.arange(lo, hi, dtype=np.uint64)
        counts = np.zeros(hi - lo, dtype=np.int64)
        for j in range(m):
            flip = ((masks >> su[j]) ^ (masks >> sv[j])) & one
            counts += (flip ^ eneg64[j]).astype(np.int64)
        found.append(masks[counts == target].astype(np.int64))
    return np.concatenate(found) if found else np.empty(0, dtype=np.int64)


# ---------------------------------------------------------------------------
# numba implementations (CSR adjacency: indptr, nbrs, sgn aligned to nbrs)

if HAVE_NUMBA:

    @njit(cache=True)
    def step_numba(indptr, nbrs, sgn, labels, v, info):
        n = labels.shape[0]
        out = labels.copy()
        out[v] = info
        for w in range(n):
            if w == v or labels[w] != ZERO:
                continue
            seen_p = False
            seen_m = False
            for e in range(indptr[w], indptr[w + 1]):
                z = nbrs[e]
                lz = info if z == v else labels[z]
                if lz == INFO_A:
                    val = sgn[e]
                elif lz == INFO_NEG_A:
                    val = -sgn[e]
                else:
                    continue
                if val > 0:
                    seen_p = True
                else:
                    seen_m = True
                if seen_p and seen_m:
                    break
            if seen_p and seen_m:
                out[w] = CONFUSED
            elif seen_p:
                out[w] = INFO_A
            elif seen_m:
                out[w] = INFO_NEG_A
        return out

    @njit(cache=True)
    def expand_numba(indptr, nbrs, sgn, labels, allow_neg):
        n = labels.shape[0]
        nz = 0
        for v in range(n):
            if labels[v] == ZERO:
                nz += 1
        per = 2 if allow_neg else 1
        k = nz * per
        children = np.empty((k, n), dtype=np.int8)
        moves = np.empty((k, 2), dtype=np.int64)
        ccounts = np.empty(k, dtype=np.int64)
        row = 0
        for v in range(n):
            if labels[v] != ZERO:
                continue
            for s in range(per):
                info = s + 1
                out = children[row]
                cc = 0
                for i in range(n):
                    out[i] = labels[i]
                out[v] = info
                for w in range(n):
                    lw = labels[w]
                    if lw == CONFUSED:
                        cc += 1
                    if w == v or lw != ZERO:
                        continue
                    seen_p = False
                    seen_m = False
                    for e in range(indptr[w], indptr[w + 1]):
                        z = nbrs[e]
                        lz = info if z == v else labels[z]
                        if lz == INFO_A:
                            val = sgn[e]
                        elif lz == INFO_NEG_A:
                            val = -sgn[e]
                        else:
                            continue
                        if val > 0:
                            seen_p = True
                        else:
                            seen_m = True
                        if seen_p and seen_m:
                            break
                    if seen_p and seen_m:
                        out[w] = CONFUSED
                        cc += 1
                    elif seen_p:
                        out[w] = INFO_A
                    elif seen_m:
                        out[w] = INFO_NEG_A
                moves[row, 0] = v
                moves[row, 1] = info
                ccounts[row] = cc
                row += 1
        return children, moves, ccounts

    @njit(cache=True)
    def frustration_scan_numba(shift_u, shift_v, eneg, n_masks):
        m = shift_u.shape[0]
        best = m + 1
        first_mask = 0
        ties = 0
        for mask in range(n_masks):
            c = 0
            for j in range(m):
                flip = ((mask >> shift_u[j]) ^ (mask >> shift_v[j])) & 1
                c += flip ^ eneg[j]
                if c > best:
                    break
            if c < best:
                best = c
                first_mask = mask
                ties = 1
            elif c == best:
                ties += 1
        return best, first_mask, ties

    @njit(cache=True)
    def frustration_collect_numba(shift_u, shift_v, eneg, n_masks, target, out):
        m = shift_u.shape[0]
        k = 0
        for mask in range(n_masks):
            c = 0
            for j in range(m):
                flip = ((mask >> shift_u[j]) ^ (mask >> shift_v[j])) & 1
                c += flip ^ eneg[j]
                if c > target:
                    break
            if c == target:
                out[k] = mask
                k += 1
        return k
