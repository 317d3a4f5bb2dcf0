"""Time the compiled kernels against the NumPy fallback.

    python3 benchmarks/bench_kernels.py            # quick set
    python3 benchmarks/bench_kernels.py --full     # adds Sp(6) closure and simplicity

Every job runs on freshly built tables so that no cached work is shared
between backends.  Results are checked for equality before timing is shown.
"""

import argparse
import time

import numpy as np

from smallquot.carriers import available_backends, using_backend
from smallquot.groups import closure, conjugacy_class_labels, is_simple
from smallquot.homs import enumerate_homs
from smallquot.named import builtin_group
from smallquot.symplectic import nonzero_vectors, transvection


def gens(name):
    return builtin_group(name).generators


def sp_gens(g):
    return [transvection(v) for v in nonzero_vectors(g)]


def jobs(full):
    out = [
        ("closure S7", lambda: closure(gens("S7")).keys),
        ("closure Sp(4)", lambda: closure(sp_gens(2)).keys),
        ("class labels S7", lambda: conjugacy_class_labels(closure(gens("S7")))),
        ("homs B6 -> S6 (raw)", lambda: [h.keys for h in enumerate_homs(6, closure(gens("S6")))]),
        ("homs B7 -> S7 (classes)", lambda: [
            c.representative.keys
            for c in enumerate_homs(7, closure(gens("S7")), "up_to_conjugacy")]),
        ("is_simple A7", lambda: is_simple(closure(gens("A7")))),
    ]
    if full:
        out += [
            ("closure Sp(6)", lambda: closure(sp_gens(3)).keys),
            ("is_simple Sp(6)", lambda: is_simple(closure(sp_gens(3)))),
        ]
    return out


def same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'job':28s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, job in jobs(args.full):
        times, results = {}, {}
        for b in backends:
            with using_backend(b):
                best = float("inf")
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    results[b] = job()
                    best = min(best, time.perf_counter() - t0)
                times[b] = best
        first = results[backends[0]]
        if not all(same(first, r) for r in results.values()):
            raise SystemExit(f"{name}: backends disagree")
        line = f"{name:28s}" + "".join(f"{times[b]:11.3f}s" for b in backends)
        if "compiled" in times and "python" in times:
            line += f"  {times['python'] / max(times['compiled'], 1e-9):9.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()
