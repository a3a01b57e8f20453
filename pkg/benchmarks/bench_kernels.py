"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --a 7 --b 12 --repeat 5
"""
import argparse
import sys
import timeit

from ratcat import dyck, kernels
from ratcat.numbers import CoprimePair


def _plain(x):
    """Lists and tuples compare equal once nested sequences are all tuples."""
    if isinstance(x, (list, tuple)):
        return tuple(_plain(v) for v in x)
    return x


def workloads(a: int, b: int):
    p = CoprimePair(a, b)
    nxs = kernels.BACKENDS["python"].enumerate_nx(a, b)
    words = [dyck._from_nx(p, nx).steps for nx in nxs]
    region_inputs = []
    for nx in nxs:
        D = dyck._from_nx(p, nx)
        lasers = dyck.fire_lasers(D)
        triples = [(L.source[0], L.source[1], int(L.end_x * a)) for L in lasers]
        region_inputs.append((triples, D.internal_points))
    run_words = [dyck.run_word(dyck._from_nx(p, nx), "x").letters for nx in nxs]
    rotated = [w[1:] + w[:1] for w in run_words]

    def make(mod):
        return {
            "enumerate_nx": lambda: mod.enumerate_nx(a, b),
            "first_violation": lambda: [mod.first_violation(w, a, b) for w in words],
            "laser_ends": lambda: [mod.laser_ends(nx, a, b) for nx in nxs],
            "assign_regions": lambda: [mod.assign_regions(t, pts, a, b) for t, pts in region_inputs],
            "promote": lambda: [mod.promote(w, a, b) for w in words],
            "rectify_offset": lambda: [mod.rectify_offset(w, a, b) for w in rotated],
        }

    return len(words), make


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=int, default=7)
    ap.add_argument("--b", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if "cython" not in kernels.BACKENDS:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    npaths, make = workloads(args.a, args.b)
    benches = {name: make(mod) for name, mod in kernels.BACKENDS.items()}
    print(f"pair ({args.a},{args.b}): {npaths} paths, best of {args.repeat}")
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for kernel in benches["python"]:
        times = {}
        for name, fns in benches.items():
            fn = fns[kernel]
            assert _plain(benches["python"][kernel]()) == _plain(fn()), kernel
            times[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        py, cy = times["python"], times["cython"]
        print(f"{kernel:<16}{py:>12.2f}{cy:>12.2f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
