"""Hot numeric loops: polynomial evaluation on grids and series recurrences.

Every kernel exists twice, once as a numba ``@njit`` function and once as
plain numpy.  The numba versions are used when numba imports and the
environment variable ``HARMRAD_DISABLE_NUMBA`` is unset (or ``0``).  Both
paths are always importable as :data:`numba_impl` and :data:`numpy_impl` so
tests and ``benchmarks/bench_kernels.py`` can compare them directly.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _flag(name):
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _flag("HARMRAD_DISABLE_NUMBA")


# -- numpy reference path ---------------------------------------------------

def _np_horner(coeffs, z):
    out = np.zeros(z.shape, dtype=np.complex128)
    for c in coeffs[::-1]:
        out = out * z + c
    return out


def _np_horner_derivs(coeffs, z):
    """Value, first and second derivative of sum c_k z^k at every z."""
    f = np.zeros(z.shape, dtype=np.complex128)
    d1 = np.zeros_like(f)
    d2 = np.zeros_like(f)
    for c in coeffs[::-1]:
        d2 = d2 * z + 2.0 * d1
        d1 = d1 * z + f
        f = f * z + c
    return f, d1, d2


def _np_real_power_sum(coeffs, r):
    out = np.zeros(r.shape, dtype=np.float64)
    for c in coeffs[::-1]:
        out = out * r + c
    return out


def _np_exp_recurrence(a):
    # E_n = (1/n) sum_{k=1}^{n} k a_k E_{n-k}
    n_terms = a.shape[0]
    ka = np.arange(n_terms) * a
    e = np.zeros(n_terms, dtype=np.complex128)
    e[0] = 1.0
    for n in range(1, n_terms):
        e[n] = np.dot(ka[1:n + 1], e[n - 1::-1][:n]) / n
    return e


def _np_cauchy(a, b, n_terms):
    return np.convolve(a, b)[:n_terms]


numpy_impl = SimpleNamespace(
    horner=_np_horner,
    horner_derivs=_np_horner_derivs,
    real_power_sum=_np_real_power_sum,
    exp_recurrence=_np_exp_recurrence,
    cauchy=_np_cauchy,
)


# -- numba path ---------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_horner(coeffs, z):
        flat = z.ravel()
        out = np.empty(flat.shape[0], dtype=np.complex128)
        n = coeffs.shape[0]
        for i in range(flat.shape[0]):
            zi = flat[i]
            acc = 0j
            for k in range(n - 1, -1, -1):
                acc = acc * zi + coeffs[k]
            out[i] = acc
        return out.reshape(z.shape)

    @njit(cache=True)
    def _nb_horner_derivs(coeffs, z):
        flat = z.ravel()
        m = flat.shape[0]
        f = np.empty(m, dtype=np.complex128)
        d1 = np.empty(m, dtype=np.complex128)
        d2 = np.empty(m, dtype=np.complex128)
        n = coeffs.shape[0]
        for i in range(m):
            zi = flat[i]
            a0 = 0j
            a1 = 0j
            a2 = 0j
            for k in range(n - 1, -1, -1):
                a2 = a2 * zi + 2.0 * a1
                a1 = a1 * zi + a0
                a0 = a0 * zi + coeffs[k]
            f[i] = a0
            d1[i] = a1
            d2[i] = a2
        return f.reshape(z.shape), d1.reshape(z.shape), d2.reshape(z.shape)

    @njit(cache=True)
    def _nb_real_power_sum(coeffs, r):
        flat = r.ravel()
        out = np.empty(flat.shape[0], dtype=np.float64)
        n = coeffs.shape[0]
        for i in range(flat.shape[0]):
            ri = flat[i]
            acc = 0.0
            for k in range(n - 1, -1, -1):
                acc = acc * ri + coeffs[k]
            out[i] = acc
        return out.reshape(r.shape)

    @njit(cache=True)
    def _nb_exp_recurrence(a):
        n_terms = a.shape[0]
        e = np.zeros(n_terms, dtype=np.complex128)
        e[0] = 1.0
        for n in range(1, n_terms):
            acc = 0j
            for k in range(1, n + 1):
                acc += k * a[k] * e[n - k]
            e[n] = acc / n
        return e

    @njit(cache=True)
    def _nb_cauchy(a, b, n_terms):
        out = np.zeros(n_terms, dtype=np.complex128)
        for i in range(min(a.shape[0], n_terms)):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(b.shape[0], n_terms - i)):
                out[i + j] += ai * b[j]
        return out

    numba_impl = SimpleNamespace(
        horner=_nb_horner,
        horner_derivs=_nb_horner_derivs,
        real_power_sum=_nb_real_power_sum,
        exp_recurrence=_nb_exp_recurrence,
        cauchy=_nb_cauchy,
    )
else:  # pragma: no cover
    numba_impl = None


_impl = numba_impl if USE_NUMBA else numpy_impl


def backend():
    """Name of the active kernel backend, ``"numba"`` or ``"numpy"``."""
    return "numba" if _impl is numba_impl else "numpy"


def horner(coeffs, z):
    """Evaluate ``sum coeffs[k] * z**k`` elementwise on a complex array."""
    z = np.asarray(z, dtype=np.complex128)
    return _impl.horner(np.ascontiguousarray(coeffs, dtype=np.complex128), np.ascontiguousarray(z))


def horner_derivs(coeffs, z):
    z = np.asarray(z, dtype=np.complex128)
    return _impl.horner_derivs(np.ascontiguousarray(coeffs, dtype=np.complex128), np.ascontiguousarray(z))


def real_power_sum(coeffs, r):
    """Evaluate a real polynomial at an array of real points."""
    r = np.asarray(r, dtype=np.float64)
    return _impl.real_power_sum(np.ascontiguousarray(coeffs, dtype=np.float64), np.ascontiguousarray(r))


def exp_recurrence(a):
    return _impl.exp_recurrence(np.ascontiguousarray(a, dtype=np.complex128))


def cauchy(a, b, n_terms):
    return _impl.cauchy(
        np.ascontiguousarray(a, dtype=np.complex128),
        np.ascontiguousarray(b, dtype=np.complex128),
        n_terms,
    )
