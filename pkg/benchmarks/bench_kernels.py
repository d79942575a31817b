"""Numba vs numpy kernels: Freudenthal, Weyl orbits, chamber reflection.

    python benchmarks/bench_kernels.py [--n-max 5] [--repeat 3]
"""
import argparse
import time

import numpy as np

from thetalie import kernels
from thetalie.characters import E, IrrepLabel, _kernel_arrays, dominant_weights
from thetalie.root_system import build_root_system, to_doubled


def best_of(fn, args, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def same_rows(a, b):
    return np.array_equal(a, b)


def same_pair(a, b):
    return all(np.array_equal(x, y) for x, y in zip(a, b))


def same_set(a, b):
    # orbits are sets; row order depends on the traversal
    return np.array_equal(np.unique(a, axis=0), np.unique(b, axis=0))


def report(name, np_fn, nb_fn, args, repeat, same=same_rows):
    ref, t_np = best_of(np_fn, args, repeat)
    got, t_nb = best_of(nb_fn, args, repeat)
    ok = same(ref, got)
    print(f"  {name:<34} numpy {t_np * 1e3:9.2f} ms   numba {t_nb * 1e3:9.2f} ms"
          f"   x{t_np / t_nb:6.1f}   {'match' if ok else 'MISMATCH'}")
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed")

    t0 = time.perf_counter()
    kernels.warmup()
    print(f"numba warm-up / cache load: {time.perf_counter() - t0:.2f} s")
    ok = True

    print("\nFreudenthal multiplicities (dominant weights)")
    reps = [E(n) for n in range(1, opts.n_max + 1)]
    reps += [IrrepLabel("D5", (6, 0, 0, 0, 0)), IrrepLabel("B4", (3, 2, 1, 0))]
    for rep in reps:
        S, snorm, pos, rho = _kernel_arrays(rep.system)
        dom = to_doubled(dominant_weights(rep), len(rho))
        ok &= report(f"{rep} ({len(dom)} dominant)", kernels.freudenthal_numpy,
                     kernels.freudenthal_numba, (dom, pos, S, snorm, rho), opts.repeat)

    print("\nWeyl orbits of rho")
    for label in ("F4", "B4", "D5"):
        S, snorm, _, rho = _kernel_arrays(label)
        n = build_root_system(label).weyl_order
        ok &= report(f"{label} ({n} elements)", kernels.orbit_numpy, kernels.orbit_numba,
                     (rho, S, snorm), opts.repeat, same_set)

    print("\nDominant chamber reflection")
    rng = np.random.default_rng(0)
    for label in ("F4", "D5"):
        S, snorm, _, _ = _kernel_arrays(label)
        X = 2 * rng.integers(-12, 13, size=(200_000, S.shape[1])).astype(np.int64)
        ok &= report(f"{label} x {len(X)} weights", kernels.dominant_batch_numpy,
                     kernels.dominant_batch_numba, (X, S, snorm), opts.repeat, same_pair)

    print("\nall outputs identical" if ok else "\nOUTPUT MISMATCH")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
