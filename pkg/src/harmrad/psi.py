"""Catalog of Ma–Minda generators and the quantities derived from them.

Each :class:`PsiSpec` names a generator ``psi`` with ``psi(0) = 1`` and
positive real part on the unit disk.  From it we build the extremal function
``h_psi(z) = z exp(int_0^z (psi(t) - 1)/t dt)``, circle minima of ``|psi|``
and ``Re psi``, and lower bounds for ``Re(1 + z h''/h')`` used for the
radius of convexity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy import integrate

from . import _kernels
from .results import CONVEXITY_RADIUS, RadiusResult
from .series import PowerSeries, integrate_log_kernel, reciprocal, series_exp
from .solve import CircleMinimum, NoBracketError, cis, RootQuery, minimize_on_circle, smallest_positive_root

KINDS = ("janowski", "lemniscate", "exp", "sine", "bernoulli", "sigmoid", "kappa-exp", "power", "diskm")
_ARITY = {"janowski": 2, "power": 1, "diskm": 1}

CLOSED_FORM_KINDS = frozenset({"janowski", "lemniscate", "kappa-exp", "bernoulli", "power", "diskm"})


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class PsiSpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown psi {self.kind!r}; choose from {', '.join(KINDS)}")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.params) != _ARITY.get(self.kind, 0):
            raise ValueError(f"{self.kind} takes {_ARITY.get(self.kind, 0)} parameter(s), got {len(self.params)}")
        if self.kind == "janowski":
            D, E = self.params
            if not -1.0 <= E < D <= 1.0:
                raise ValueError(f"janowski needs -1 <= E < D <= 1, got D={D}, E={E}")
        elif self.kind == "power":
            if not 0.0 < self.params[0] <= 1.0:
                raise ValueError(f"power needs 0 < eta <= 1, got {self.params[0]}")
        elif self.kind == "diskm":
            if not self.params[0] > 0.5:
                raise ValueError(f"diskm needs M > 1/2, got {self.params[0]}")
        if psi_eval(self, 0.0) != 1.0:
            raise ValueError(f"{self.name}: psi(0) != 1")

    # constructors mirroring the CLI names
    @classmethod
    def janowski(cls, D, E):
        return cls("janowski", (D, E))

    @classmethod
    def lemniscate(cls):
        return cls("lemniscate")

    @classmethod
    def exponential(cls):
        return cls("exp")

    @classmethod
    def sine(cls):
        return cls("sine")

    @classmethod
    def bernoulli(cls):
        return cls("bernoulli")

    @classmethod
    def sigmoid(cls):
        return cls("sigmoid")

    @classmethod
    def kappa_exp(cls):
        return cls("kappa-exp")

    @classmethod
    def power(cls, eta):
        return cls("power", (eta,))

    @classmethod
    def diskm(cls, M):
        return cls("diskm", (M,))

    @classmethod
    def parse(cls, name):
        """Parse ``janowski:1,-1``, ``power:0.5``, ``lemniscate`` and so on."""
        kind, _, rest = name.strip().partition(":")
        params = tuple(float(p) for p in rest.split(",")) if rest else ()
        return cls(kind, params)

    @property
    def name(self):
        if not self.params:
            return self.kind
        return self.kind + ":" + ",".join(f"{p:g}" for p in self.params)

    @property
    def m(self):
        """``1 - 1/M`` for the disk generator."""
        if self.kind != "diskm":
            raise AttributeError("m is only defined for diskm")
        return 1.0 - 1.0 / self.params[0]

    def janowski_params(self):
        """(D, E) for the generators of the form (1 + Dz)/(1 + Ez)."""
        if self.kind == "janowski":
            return self.params
        if self.kind == "diskm":
            return (1.0, -self.m)
        return None

    def __str__(self):
        return self.name




# -- evaluation ---------------------------------------------------------------

def _check_domain(z):
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("psi is only evaluated on the open unit disk |z| < 1")


def _scalar_or_array(fn):
    def wrapper(spec, z):
        scalar = np.ndim(z) == 0
        z = np.asarray(z, dtype=np.complex128)
        _check_domain(z)
        out = fn(spec, z)
        return complex(out) if scalar else out

    wrapper.__doc__ = fn.__doc__
    wrapper.__name__ = fn.__name__
    return wrapper


@_scalar_or_array
def psi_eval(spec, z):
    """psi(z) with principal branches; requires |z| < 1."""
    return _psi(spec, z)


def _psi(spec, z):
    # unchecked; works on numpy arrays and on Python/numpy scalars
    k = spec.kind
    jp = spec.janowski_params()
    if jp is not None:
        D, E = jp
        return (1 + D * z) / (1 + E * z)
    if k == "lemniscate":
        return np.sqrt(1 + z)
    if k == "exp":
        return np.exp(z)
    if k == "sine":
        return 1 + np.sin(z)
    if k == "bernoulli":
        return z + np.sqrt(1 + z * z)
    if k == "sigmoid":
        return 2.0 / (1.0 + np.exp(-z))
    if k == "kappa-exp":
        return 1 + z * np.exp(z)
    if k == "power":
        return np.exp(spec.params[0] * (np.log1p(z) - np.log1p(-z)))
    raise AssertionError(k)


@_scalar_or_array
def psi_prime(spec, z):
    """psi'(z), closed form per generator."""
    return _dpsi(spec, z)


def _dpsi(spec, z):
    k = spec.kind
    jp = spec.janowski_params()
    if jp is not None:
        D, E = jp
        return (D - E) / (1 + E * z) ** 2
    if k == "lemniscate":
        return 0.5 / np.sqrt(1 + z)
    if k == "exp":
        return np.exp(z)
    if k == "sine":
        return np.cos(z)
    if k == "bernoulli":
        return 1 + z / np.sqrt(1 + z * z)
    if k == "sigmoid":
        e = np.exp(-z)
        return 2.0 * e / (1.0 + e) ** 2
    if k == "kappa-exp":
        return (1 + z) * np.exp(z)
    if k == "power":
        eta = spec.params[0]
        return np.exp(eta * (np.log1p(z) - np.log1p(-z))) * 2 * eta / (1 - z * z)
    raise AssertionError(k)


CATALOG = (
    PsiSpec.janowski(1, -1),
    PsiSpec.lemniscate(),
    PsiSpec.exponential(),
    PsiSpec.sine(),
    PsiSpec.bernoulli(),
    PsiSpec.sigmoid(),
    PsiSpec.kappa_exp(),
    PsiSpec.power(0.5),
    PsiSpec.diskm(2.0),
)


def _binomial_half(n_terms):
    c = np.empty(n_terms)
    c[0] = 1.0
    for k in range(1, n_terms):
        c[k] = c[k - 1] * (0.5 - (k - 1)) / k
    return c


def _inv_factorials(n_terms):
    c = np.empty(n_terms)
    c[0] = 1.0
    for k in range(1, n_terms):
        c[k] = c[k - 1] / k
    return c


def psi_series(spec, order):
    """Taylor series of psi about 0, built from each generator's known expansion."""
    if order < 2:
        raise ValueError("order must be at least 2")
    n = order + 1
    k = spec.kind
    jp = spec.janowski_params()
    if jp is not None:
        D, E = jp
        geo = (-E) ** np.arange(n)
        c = geo.copy()
        c[1:] += D * geo[:-1]
        return PowerSeries(c)
    if k == "lemniscate":
        return PowerSeries(_binomial_half(n))
    if k == "exp":
        return PowerSeries(_inv_factorials(n))
    if k == "sine":
        c = np.zeros(n)
        inv = _inv_factorials(n)
        c[1::4] = inv[1::4]
        c[3::4] = -inv[3::4]
        c[0] = 1.0
        return PowerSeries(c)
    if k == "bernoulli":
        c = np.zeros(n)
        b = _binomial_half((n + 1) // 2)
        c[0::2] = b[: c[0::2].size]
        c[1] += 1.0
        return PowerSeries(c)
    if k == "sigmoid":
        inv = _inv_factorials(n) * (-1.0) ** np.arange(n)
        inv[0] += 1.0  # 1 + exp(-z)
        return reciprocal(PowerSeries(inv)).scale(2.0)
    if k == "kappa-exp":
        c = np.zeros(n)
        c[0] = 1.0
        c[1:] = _inv_factorials(n - 1)
        return PowerSeries(c)
    if k == "power":
        eta = spec.params[0]
        c = np.zeros(n)
        odd = np.arange(1, n, 2)
        c[odd] = 2.0 * eta / odd
        return series_exp(PowerSeries(c))
    raise AssertionError(k)


def extremal_hpsi(spec, order):
    """Series of h_psi(z) = z exp(int_0^z (psi(t) - 1)/t dt)."""
    return series_exp(integrate_log_kernel(psi_series(spec, order))).mul_z()


@lru_cache(maxsize=256)
def _hpsi_coeff_cache(spec, order):
    c = extremal_hpsi(spec, order).coeffs.real.copy()
    c.setflags(write=False)
    return c


MAX_ORDER = 4096


def hpsi_coefficients(spec, r_max, weight_power=3, rel_tol=1e-13, order=None):
    """Real coefficients of h_psi, truncated adaptively for sums up to ``r_max``.

    Starting from order 64 the order doubles until the last retained term of
    ``sum n**weight_power |a_n| r_max**(n-1)`` is below ``rel_tol`` times the
    partial sum.  Pass ``order`` to skip the adaptive choice.
    """
    if order is not None:
        return _hpsi_coeff_cache(spec, order)
    N = 64
    while True:
        c = _hpsi_coeff_cache(spec, N)
        n = np.arange(c.size, dtype=float)
        terms = n ** weight_power * np.abs(c) * r_max ** np.maximum(n - 1, 0)
        if terms[-1] <= rel_tol * max(terms.sum(), 1e-300):
            return c
        if N >= MAX_ORDER:
            raise ValueError(f"series for {spec.name} does not settle by order {MAX_ORDER} at r={r_max}")
        N *= 2


def hpsi_prime_series(spec, r):
    c = hpsi_coefficients(spec, max(float(np.max(r)), 1e-3), weight_power=1)
    d = np.arange(1, c.size) * c[1:]
    return _kernels.real_power_sum(d, np.asarray(r, dtype=float))


def hpsi_prime_closed(spec, r):
    """h_psi'(r) on [0, 1) from the generator's closed form.

    Generators without a closed form fall back to summing the series.
    """
    r = float(r)
    if r == 0.0:
        return 1.0
    k = spec.kind
    psi_r = psi_eval(spec, r).real
    jp = spec.janowski_params()
    if jp is not None:
        D, E = jp
        if E == 0.0:
            return psi_r * math.exp(D * r)
        return psi_r * (1 + E * r) ** ((D - E) / E)
    if k == "lemniscate":
        s = math.sqrt(1 + r)
        return 4 * s / (s + 1) ** 2 * math.exp(2 * (s - 1))
    if k == "kappa-exp":
        return (1 + r * math.exp(r)) * math.exp(math.exp(r) - 1)
    if k == "bernoulli":
        s = math.sqrt(1 + r * r)
        return 2 * (r + s) / (s + 1) * math.exp(r + s - 1)
    if k == "power":
        kernel, _ = integrate.quad(lambda t: (psi_eval(spec, t).real - 1.0) / t, 0.0, r, epsabs=1e-14, epsrel=1e-12)
        return psi_r * math.exp(kernel)
    return float(hpsi_prime_series(spec, np.array([r]))[0])


# -- circle minima -----------------------------------------------------------

def _circle(spec, r, fn, grid):
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    if r == 0.0:
        return CircleMinimum(0.0, 1.0)
    return minimize_on_circle(lambda th: fn(r * cis(th)), grid=grid)


def circle_min_modulus(spec, r, grid=4096):
    """min over |z| = r of |psi(z)|, with the minimizing angle."""
    return _circle(spec, r, lambda w: np.abs(_psi(spec, w)), grid)


def circle_min_real(spec, r, grid=4096):
    """min over |z| = r of Re psi(z), with the minimizing angle."""
    return _circle(spec, r, lambda w: _psi(spec, w).real, grid)


# -- convexity ---------------------------------------------------------------

CLOSED_FORM_SHARP = "closed_form_sharp"
NUMERIC_FALLBACK = "numeric_fallback"


class ConvexityBound(NamedTuple):
    kind: str
    value: float

    @property
    def sharp(self):
        return self.kind == CLOSED_FORM_SHARP


def _is_koebe(spec):
    return spec.kind == "janowski" and spec.params == (1.0, -1.0)


def has_closed_convexity_bound(spec):
    return spec.kind in ("lemniscate", "sigmoid") or _is_koebe(spec)


def extremal_convexity_function(spec, w):
    """Re(1 + z h_psi''/h_psi') at z = w, via 1 + z h''/h' = psi + z psi'/psi."""
    p = _psi(spec, w)
    return (p + w * _dpsi(spec, w) / p).real


def H_psi(spec, r, grid=4096):
    """Lower bound for Re(1 + z h''/h') on |z| = r over the class.

    Closed, sharp forms are used for the lemniscate, sigmoid and Koebe
    generators.  Everything else minimizes the extremal function's value on
    the circle, which is labelled ``numeric_fallback`` (not known to be
    sharp for the class).
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    if r == 0.0:
        return ConvexityBound(CLOSED_FORM_SHARP if has_closed_convexity_bound(spec) else NUMERIC_FALLBACK, 1.0)
    if spec.kind == "lemniscate":
        s = math.sqrt(1 - r)
        return ConvexityBound(CLOSED_FORM_SHARP, s - r / s)
    if spec.kind == "sigmoid":
        return ConvexityBound(CLOSED_FORM_SHARP, (2 - r * math.exp(r)) / (1 + math.exp(r)))
    if _is_koebe(spec):
        return ConvexityBound(CLOSED_FORM_SHARP, (1 - 4 * r + r * r) / (1 - r * r))
    cm = minimize_on_circle(lambda th: extremal_convexity_function(spec, r * cis(th)), grid=grid)
    return ConvexityBound(NUMERIC_FALLBACK, cm.value)


@lru_cache(maxsize=64)
def convexity_radius(spec):
    """Smallest positive root of H_psi(r) = 0 on (0, 1 - 1e-6)."""
    q = RootQuery(lambda r: H_psi(spec, r).value, search_max=1.0 - 1e-6, label="H_psi")
    try:
        root = smallest_positive_root(q)
    except NoBracketError as exc:
        raise NoBracketError("no convexity-radius bracket", exc.interval, exc.values) from None
    sharp = has_closed_convexity_bound(spec)
    return RadiusResult(
        value=root.root,
        branch=CONVEXITY_RADIUS,
        equation_id="convexity:H_psi=0",
        residual=root.residual,
        sharp=sharp,
        notes="closed-form sharp bound" if sharp else "estimate: extremal-function bound, not known sharp",
        theorem="convexity",
        psi=spec.name,
    )
