"""Throughput comparison of the pure-numpy kernels and the compiled ones.

Runs the single-step kernel, the child-state expansion, the switching
scan behind the frustration index, and two full solves under each
backend, then prints one table. The state pool and the graphs are
seeded, so numbers are comparable across runs on the same machine.

    python3 benchmarks/bench_kernels.py [--repeats 3] [--pool 400]
"""

import argparse
import os
import time

import numpy as np

from signedspread._kernels import ENV_FLAG, resolve_backend
from signedspread.engine import StepContext
from signedspread.families import gen_gn, gen_ktt_tau
from signedspread.graph import frustration_index
from signedspread.solver import exact_confusion, exact_relaxed_confusion


def build_state_pool(g, size, seed):
    """Reachable mid-run states, deduplicated, breadth-first from empty."""
    ctx = StepContext(g, backend="numpy")
    rng = np.random.default_rng(seed)
    pool, seen = [], set()
    frontier = [ctx.zeros_state()]
    while frontier and len(pool) < size:
        labels = frontier.pop(0)
        children, _, _ = ctx.expand(labels, allow_neg=True)
        order = rng.permutation(children.shape[0])
        for i in order:
            key = children[i].tobytes()
            if key not in seen:
                seen.add(key)
                pool.append(children[i])
                frontier.append(children[i])
            if len(pool) >= size:
                break
    return [s for s in pool if (s == 0).any()]


def best_of(repeats, fn):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_backend(backend, pool, repeats):
    g = gen_gn(12)
    ctx = StepContext(g, backend=backend)
    targets = [(s, int(np.flatnonzero(s == 0)[0])) for s in pool]

    def run_steps():
        for s, v in targets:
            ctx.step(s, v, 1)

    def run_expands():
        for s, _ in targets:
            ctx.expand(s, True)

    ktt6 = gen_ktt_tau(6)
    gn10 = gen_gn(10)
    ktt4 = gen_ktt_tau(4)

    # compile before the clock starts; a no-op for the numpy path
    run_steps()
    run_expands()
    frustration_index(ktt6, backend=backend)
    previous = os.environ.get(ENV_FLAG)
    os.environ[ENV_FLAG] = backend
    try:
        exact_confusion(gn10)
        rows = {
            "single step": best_of(repeats, run_steps) / len(targets),
            "expand children": best_of(repeats, run_expands) / len(targets),
            "frustration ktt(6)": best_of(
                repeats, lambda: frustration_index(ktt6, backend=backend)
            ),
            "exact solve gn(10)": best_of(repeats, lambda: exact_confusion(gn10)),
            "relaxed solve ktt(4)": best_of(
                repeats, lambda: exact_relaxed_confusion(ktt4)
            ),
        }
    finally:
        if previous is None:
            os.environ.pop(ENV_FLAG, None)
        else:
            os.environ[ENV_FLAG] = previous
    return rows


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:9.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:9.2f} ms"
    return f"{seconds:9.3f} s "


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--pool", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    pool = build_state_pool(gen_gn(12), args.pool, args.seed)
    print(f"state pool: {len(pool)} reachable states on gn(12), seed {args.seed}")

    backends = ["numpy"]
    try:
        resolve_backend("numba")
        backends.append("numba")
    except RuntimeError as exc:
        print(f"numba backend unavailable ({exc}); timing numpy only")

    results = {b: bench_backend(b, pool, args.repeats) for b in backends}
    names = list(results[backends[0]])
    header = f"{'bench':<22}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print()
    print(header)
    print("-" * len(header))
    for name in names:
        line = f"{name:<22}" + "".join(fmt(results[b][name]) for b in backends)
        if len(backends) == 2:
            line += f"{results['numpy'][name] / results['numba'][name]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
