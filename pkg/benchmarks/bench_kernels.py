"""Benchmark: jitted kernels vs the BLASCHKE_NO_NUMBA fallback.

Renders the same small dynamical grid in-process (numba) and in a
subprocess with BLASCHKE_NO_NUMBA=1 (plain Python), times both, and checks
the outputs are bit-identical.

Usage: python3 benchmarks/bench_kernels.py [--res 96] [--maxiter 400]
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import time

import numpy as np

WORKLOAD = r"""
import json, sys, time
import numpy as np
from blaschke import maps, raster

cfg = json.loads(sys.argv[1])
p = maps.MapParams.perturbed(complex(*cfg["a"]), complex(*cfg["lam"]))
spec = raster.PlaneSpec(center=0j, width=3.0, resolution=cfg["res"],
                        max_iter=cfg["maxiter"], plane_kind="dynamical", params=p)
raster.render_dynamical(spec)          # warm the jit cache before timing
t0 = time.perf_counter()
grid = raster.render_dynamical(spec)
elapsed = time.perf_counter() - t0
np.savez(sys.argv[2], kind=grid.kind, esc=grid.esc, t0e=grid.t0e,
         bits=grid.bits, blen=grid.blen, fin=grid.fin, amb=grid.amb,
         elapsed=np.array([elapsed]))
"""


def run(res, maxiter, no_numba):
    cfg = json.dumps({"a": [0.0, 0.5], "lam": [-1.9e-6, 3.15e-5],
                      "res": res, "maxiter": maxiter})
    env = dict(os.environ)
    if no_numba:
        env["BLASCHKE_NO_NUMBA"] = "1"
    else:
        env.pop("BLASCHKE_NO_NUMBA", None)
    with tempfile.NamedTemporaryFile(suffix=".npz", delete=False) as f:
        out = f.name
    try:
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-c", WORKLOAD, cfg, out],
                       check=True, env=env)
        wall = time.perf_counter() - t0
        data = np.load(out)
        return {k: data[k] for k in data.files}, wall
    finally:
        os.unlink(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--res", type=int, default=96)
    ap.add_argument("--maxiter", type=int, default=400)
    args = ap.parse_args()

    jit, wall_jit = run(args.res, args.maxiter, no_numba=False)
    py, wall_py = run(args.res, args.maxiter, no_numba=True)

    same = all(np.array_equal(jit[k], py[k]) for k in jit if k != "elapsed")
    t_jit = float(jit["elapsed"][0])
    t_py = float(py["elapsed"][0])
    print(f"grid {args.res}x{args.res}, maxiter {args.maxiter}")
    print(f"numba kernels : {t_jit:10.4f} s  (process wall {wall_jit:.1f} s incl. jit)")
    print(f"python fallback: {t_py:10.4f} s  (process wall {wall_py:.1f} s)")
    print(f"speedup        : {t_py / t_jit:10.1f} x")
    print(f"bit-identical  : {same}")
    if not same:
        raise SystemExit("FAIL: the two paths disagree")


if __name__ == "__main__":
    main()
