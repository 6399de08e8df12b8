"""Independent reference computations for the test-suite.

Nothing here imports the package.  Coefficients come from the
Ma-Minda recurrence (n - 1) a_n = sum_{k<n} p_{n-k} a_k (from z h' = h psi),
from Bell numbers, or from mpmath Taylor expansions; roots come from a dense
uniform scan followed by plain bisection.
"""

import math

import mpmath
import numpy as np

mpmath.mp.dps = 40

# psi as mpmath callables; independent of harmrad.psi
MP_PSI = {
    "janowski:1,-1": lambda z: (1 + z) / (1 - z),
    "lemniscate": lambda z: mpmath.sqrt(1 + z),
    "exp": lambda z: mpmath.exp(z),
    "sine": lambda z: 1 + mpmath.sin(z),
    "bernoulli": lambda z: z + mpmath.sqrt(1 + z * z),
    "sigmoid": lambda z: 2 / (1 + mpmath.exp(-z)),
    "kappa-exp": lambda z: 1 + z * mpmath.exp(z),
    "power:0.5": lambda z: ((1 + z) / (1 - z)) ** mpmath.mpf("0.5"),
    "diskm:2": lambda z: (1 + z) / (1 - z / 2),
}


def taylor(fn, order):
    """First ``order + 1`` Taylor coefficients of an mpmath function at 0."""
    return np.array([float(c) for c in mpmath.taylor(fn, 0, order)])


def psi_coefficients(name, order):
    return taylor(MP_PSI[name], order)


def hpsi_by_recurrence(p, order):
    """Coefficients of h with z h'/h = psi, psi = sum p_j z^j, p_0 = 1."""
    a = np.zeros(order + 1)
    a[1] = 1.0
    for n in range(2, order + 1):
        a[n] = sum(p[n - k] * a[k] for k in range(1, n)) / (n - 1)
    return a


def bell_numbers(count):
    """B_0 .. B_{count-1} via the Bell triangle."""
    out, row = [1], [1]
    for _ in range(count - 1):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        out.append(row[0])
    return out


def kappa_exp_hpsi(order):
    """z exp(e^z - 1) = sum_n B_{n-1}/(n-1)! z^n."""
    b = bell_numbers(order)
    a = np.zeros(order + 1)
    for n in range(1, order + 1):
        a[n] = b[n - 1] / math.factorial(n - 1)
    return a


def dense_root(fn, lo=0.0, hi=1.0, step=1e-6, tol=1e-14):
    """First sign change of a vectorized ``fn`` on a uniform grid, refined by bisection."""
    n = int(round((hi - lo) / step))
    r = lo + step * np.arange(1, n + 1)
    v = fn(r)
    s = np.sign(v)
    idx = np.flatnonzero(s[:-1] * s[1:] <= 0)
    if idx.size == 0:
        raise ValueError("no sign change")
    i = idx[0]
    a, b = float(r[i]), float(r[i + 1])
    fa = float(fn(np.array([a]))[0])
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = float(fn(np.array([m]))[0])
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def poly_equation(coeffs, weights, rhs, k_max=None):
    """r -> sum_{n=2}^{K} w(n) c_n r^(n-1) - rhs with plain numpy."""
    c = np.asarray(coeffs, dtype=float)
    n = np.arange(c.size)
    terms = np.where(n >= 2, weights(n.astype(float)) * c, 0.0)
    if k_max is not None:
        terms[k_max + 2 :] = 0.0
    poly = terms[1:][::-1]  # term n sits at degree n - 1; polyval wants highest first

    def fn(r):
        return np.polyval(poly, r) - rhs

    return fn


def brute_hadamard(a, b):
    return np.array([a[i] * b[i] for i in range(min(len(a), len(b)))])


def winding_number(points, about=0j):
    w = np.asarray(points) - about
    d = np.angle(np.roll(w, -1) / w)
    return int(round(d.sum() / (2 * math.pi)))
