"""Compare the pure-Python and compiled closure kernels.

Usage: python3 benchmarks/bench_closure.py [--heavy]

Each case enumerates the full subring lattice once per backend and checks
that both backends produce the same lattice before reporting timings.
"""

import argparse
import time

from steinitz import finring, kernel


def cases(heavy: bool):
    yield "gf(2,10)", lambda: finring.make_gf(2, 10)
    yield "gf(3,6)", lambda: finring.make_gf(3, 6)
    yield "dual(2,4)", lambda: finring.make_dual(finring.make_gf(2, 4))
    if heavy:
        yield "gf(2,12)", lambda: finring.make_gf(2, 12)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--heavy", action="store_true", help="add the 4096-element case")
    args = parser.parse_args()

    backends = kernel.available()
    active = kernel.backend_name()
    print(f"backends: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled kernel not built; timing the fallback only")

    width = max(len(name) for name, _ in cases(args.heavy))
    header = f"{'case':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))

    try:
        for name, build in cases(args.heavy):
            ring = build()
            timings = []
            lattices = []
            for backend in backends:
                kernel.select(backend)
                t0 = time.perf_counter()
                lattices.append(finring.enumerate_subrings(ring))
                timings.append(time.perf_counter() - t0)
            for other in lattices[1:]:
                assert other.subrings == lattices[0].subrings
                assert other.covers == lattices[0].covers
            row = f"{name:<{width}}  " + "".join(f"{t:>11.3f}s" for t in timings)
            if len(timings) > 1:
                baseline = timings[backends.index("python")]
                row += f"   x{baseline / min(timings):.1f} over python"
            print(row)
    finally:
        kernel.select(active)
    print("lattices agree across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
