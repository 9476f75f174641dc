"""Time the hot kernels on every available backend.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each task is executed N times per backend and the best wall time is
reported, together with the speedup of the compiled extension over the
NumPy fallback when both are present.
"""

import argparse
import time

from anisobec import kernels

TASKS = {
    "octants small (65k states)": ("lattice_octants", (0.25, 0.25, 0.25, 0.7, 40, 40, 40)),
    "octants soft axis (33M states)": ("lattice_octants", (0.6, 0.6, 0.0006, 0.99, 40, 40, 20000)),
    "octants cube (64M states)": ("lattice_octants", (0.1, 0.1, 0.1, 0.9, 400, 400, 400)),
    "series fast decay": ("bose_series", (0.5, 0.1, 0.3, 0.2, 0.1, 3, 1e-12, 1e-15, 10**6)),
    "series slow decay": ("bose_series", (0.001, 0.05, 0.6, 0.0006, 0.0, 2, 1e-12, 1e-15, 10**6)),
}


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args()

    backends = kernels.available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)} (active: {kernels.backend_name})")
    header = f"{'task':34s}" + "".join(f"{n:>12s}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10s}"
    print(header)
    for label, (fn_name, args) in TASKS.items():
        row = f"{label:34s}"
        timings = {}
        for n in names:
            timings[n] = best_time(getattr(backends[n], fn_name), args, opts.repeat)
            row += f"{timings[n] * 1e3:10.2f} ms"
        if len(names) > 1:
            row += f"{timings['python'] / timings['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
