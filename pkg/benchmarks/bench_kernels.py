"""Compare the numba kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat 5]

Each path runs in its own interpreter (the fallback with
HOSHIFT_DISABLE_NUMBA=1) so that nested kernel calls stay on one path.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def measure(repeat):
    from hoshift import kernels
    from hoshift._accel import HAS_NUMBA
    from hoshift.hyperfun import eval_F
    from hoshift.root_system import build_bc
    from hoshift.series import gamma_coefficients

    zs = (np.linspace(-20, 20, 2000) + 1j * np.linspace(-5, 5, 2000)).astype(np.complex128)
    coeffs = np.linspace(1, 2, 400).astype(np.complex128)
    us = np.linspace(-0.8, 0.8, 2000).astype(np.complex128)
    rs = build_bc(2)
    lam = np.array([1.4 + 0.3j, 0.55 - 0.2j])
    cases = {
        "loggamma_array, 2000 points": lambda: kernels.loggamma_array(zs),
        "frobenius_coeffs, order 2000": lambda: kernels.frobenius_coeffs(1.3 + 0.2j, -0.7 + 0.1j, 2.5 + 0j, 2000),
        "horner, 400 terms x 2000 points": lambda: kernels.horner(coeffs, us),
        "gamma_coefficients BC_2, N=24": lambda: gamma_coefficients(lam, (1.0, 0.5, 1.5), rs, 24),
        "eval_F BC_2, N=16": lambda: eval_F(lam, (1.0, 0.5, 1.5), rs, [1.6, 0.8], 16),
    }
    out = {"numba": HAS_NUMBA, "times": {}}
    for name, fn in cases.items():
        fn()  # warm-up, includes compilation
        out["times"][name] = best_of(fn, repeat)
    return out


def run_child(disable, repeat):
    env = dict(os.environ)
    env.pop("HOSHIFT_DISABLE_NUMBA", None)
    if disable:
        env["HOSHIFT_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description="numba vs pure-Python kernel timings")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return
    fast, slow = run_child(False, args.repeat), run_child(True, args.repeat)
    if not fast["numba"]:
        print("numba is not importable; both columns use the fallback")
    print(f"{'case':36s} {'numba [ms]':>11s} {'python [ms]':>12s} {'speedup':>8s}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:36s} {t_fast * 1e3:11.3f} {t_slow * 1e3:12.3f} {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
