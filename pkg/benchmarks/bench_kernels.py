"""Numba vs numpy timings for the hot kernels, plus one end-to-end run per backend.

    python benchmarks/bench_kernels.py [--n 2000] [--repeat 20] [--no-e2e]

The kernel table calls both flavours in this process.  The end-to-end
numbers start a fresh interpreter per backend (the switch is read at
import time via MOVINGSETS_DISABLE_NUMBA).
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from movingsets import kernels
from movingsets._accel import HAVE_NUMBA
from movingsets.geometry import ClosedCurve

E2E = """
import time
from movingsets import ControlPolicy, EffortModel, ClosedCurve, simulate
from movingsets._accel import backend
t0 = time.perf_counter()
simulate(ClosedCurve.square(1.0), ControlPolicy.saturating(8.0, q=0.35), EffortModel.canonical(), 0.02, 1e-4, n_markers={n})
print(backend(), time.perf_counter() - t0)
"""


def cases(n):
    curve = ClosedCurve.circle(1.0, n)
    xy = np.ascontiguousarray(curve.xy)
    beta = np.linspace(-1.0, 2.0, n)
    coef = np.random.default_rng(0).normal(size=(200, n))
    dts = np.full(199, 1e-3)
    return {
        "curvature": (xy,),
        "resample": (xy, n, 0.3),
        "offset_move": (xy, beta, 1e-4, 0.1),
        "grid_offset": (xy,),
        "polygon_metrics": (xy,),
        "trapezoid_weights": (xy,),
        "first_crossing": (xy,),
        "rasterize": (xy, -1.1, -1.1, 2.2 / 512, 512, 512),
        "adjoint_rk4": (coef, dts, 1.0, 0.5),
    }


def bench(n, repeat):
    print(f"{'kernel':18s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>8s}")
    for name, args in cases(n).items():
        f_np = getattr(kernels, name + "_np")
        f_nb = getattr(kernels, name + "_nb")
        f_nb(*args)  # compile
        t_np = min(timeit.repeat(lambda: f_np(*args), number=1, repeat=repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: f_nb(*args), number=1, repeat=repeat)) * 1e3
        print(f"{name:18s} {t_np:12.3f} {t_nb:12.3f} {t_np / t_nb:8.1f}")


def end_to_end(n):
    for flag in ("0", "1"):
        env = dict(os.environ, MOVINGSETS_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", E2E.format(n=n)], env=env, capture_output=True, text=True, check=True)
        name, secs = out.stdout.split()
        print(f"saturating square, 200 steps, N={n}: {name:6s} {float(secs):.2f} s (includes compilation)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--no-e2e", action="store_true")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        sys.exit("numba is not installed")
    bench(args.n, args.repeat)
    if not args.no_e2e:
        end_to_end(args.n)


if __name__ == "__main__":
    main()
