"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The numba timings exclude compilation (each kernel is called once first).
Results from both paths are compared before timing.
"""

import argparse
import time

import numpy as np

from harmrad import _kernels
from harmrad.psi import PsiSpec, hpsi_coefficients


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    coeffs = hpsi_coefficients(PsiSpec.lemniscate(), 0.5, weight_power=2).astype(np.complex128)
    z = 0.45 * np.sqrt(rng.random((512, 512))) * np.exp(2j * np.pi * rng.random((512, 512)))
    rs = np.linspace(0.0, 0.5, 4096)
    a = np.zeros(1025, dtype=np.complex128)
    a[1:] = rng.standard_normal(1024) / np.arange(1, 1025) ** 2
    b = rng.standard_normal(1025) + 0j
    return {
        "horner 512x512": ("horner", (coeffs, z)),
        "horner_derivs 512x512": ("horner_derivs", (coeffs, z)),
        "real_power_sum 4096": ("real_power_sum", (coeffs.real.copy(), rs)),
        "exp_recurrence N=1024": ("exp_recurrence", (a,)),
        "cauchy N=1024": ("cauchy", (a, b, 1025)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.numba_impl is None:
        raise SystemExit("numba is not importable; nothing to compare")

    print(f"{'kernel':26s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>9s}")
    for label, (name, argv) in cases().items():
        np_fn = getattr(_kernels.numpy_impl, name)
        nb_fn = getattr(_kernels.numba_impl, name)
        ref, got = np.asarray(np_fn(*argv)), np.asarray(nb_fn(*argv))
        assert np.allclose(ref, got, rtol=1e-10, atol=1e-12), label
        t_np = best_of(lambda: np_fn(*argv), args.repeat)
        t_nb = best_of(lambda: nb_fn(*argv), args.repeat)
        print(f"{label:26s} {1e3 * t_np:12.3f} {1e3 * t_nb:12.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
