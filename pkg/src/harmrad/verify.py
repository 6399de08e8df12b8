"""Sampling verification of geometric predicates for harmonic maps f = h + conj(g).

Margins are evaluated on a polar grid ``rho_j = r*j/n_r`` (j = 1..n_r) by
``theta_k = 2*pi*k/n_theta`` and reduced to the smallest value.  A strict
predicate passes when that minimum exceeds :data:`STRICT_THRESHOLD`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple

import numpy as np

from . import _kernels
from .psi import PsiSpec, hpsi_coefficients
from .radii import (
    PROOF_CONSISTENT,
    TABLE_PRINTED,
    CoefficientEquation,
    close_to_convex_radius,
    fully_convex_radius,
    fully_starlike_radius,
    fully_starlike_radius_improved,
    univalence_radius,
)
from .results import VerificationReport
from .series import PowerSeries
from .solve import NumericalFailure, RootQuery, bisect, cis, smallest_positive_root, theta_grid

STRICT_THRESHOLD = 1e-9
DEFAULT_GRID = (512, 1024)
COUPLINGS = ("product", "derivative", "explicit")


class ZeroEncountered(NumericalFailure):
    """A quantity that must not vanish was (numerically) zero on the grid."""

    def __init__(self, what, z):
        super().__init__(f"zero encountered: {what} vanishes near z={complex(z):.12g} (|z|={abs(z):.6g})")
        self.location = complex(z)


# -- dilatations ---------------------------------------------------------------

@dataclass(frozen=True)
class DilatationSpec:
    """An analytic self-map phi of the disk.

    ``constant`` c with |c| <= 1, ``monomial`` e^{i theta0} z^n,
    ``mobius`` (z + a)/(1 + conj(a) z) with |a| < 1, and ``identity`` z.
    """

    kind: str
    c: complex = 0j
    n: int = 1
    theta0: float = 0.0

    def __post_init__(self):
        if self.kind not in ("constant", "monomial", "mobius", "identity"):
            raise ValueError(f"unknown dilatation {self.kind!r}")
        if self.kind == "constant" and abs(self.c) > 1.0:
            raise ValueError(f"constant dilatation needs |c| <= 1, got {self.c}")
        if self.kind == "mobius" and abs(self.c) >= 1.0:
            raise ValueError(f"mobius dilatation needs |a| < 1, got {self.c}")
        if self.kind == "monomial" and (int(self.n) != self.n or self.n < 1):
            raise ValueError(f"monomial dilatation needs a positive integer n, got {self.n}")

    @classmethod
    def constant(cls, c):
        return cls("constant", c=complex(c))

    @classmethod
    def monomial(cls, n, theta0=0.0):
        return cls("monomial", n=int(n), theta0=float(theta0))

    @classmethod
    def mobius(cls, a):
        return cls("mobius", c=complex(a))

    @classmethod
    def identity(cls):
        return cls("identity")

    @classmethod
    def parse(cls, text):
        """``identity``, ``constant:0.5j``, ``monomial:2,0.7``, ``mobius:0.3+0.2j``."""
        kind, _, arg = text.strip().partition(":")
        kind = kind.lower()
        try:
            if kind == "identity" and not arg:
                return cls.identity()
            if kind == "constant":
                return cls.constant(complex(arg.replace(" ", "")))
            if kind == "mobius":
                return cls.mobius(complex(arg.replace(" ", "")))
            if kind == "monomial":
                parts = arg.split(",")
                return cls.monomial(int(parts[0]), float(parts[1]) if len(parts) > 1 else 0.0)
        except (ValueError, IndexError) as exc:
            raise ValueError(f"cannot parse dilatation {text!r}: {exc}") from None
        raise ValueError(f"unknown dilatation {text!r}; use identity, constant:c, monomial:n[,theta0] or mobius:a")

    @property
    def name(self):
        if self.kind == "identity":
            return "identity"
        if self.kind == "monomial":
            return f"monomial:{self.n},{self.theta0:g}"
        return f"{self.kind}:{self.c.real:g}{self.c.imag:+g}j"

    def eval(self, z):
        """phi, phi' and phi'' at ``z``."""
        z = np.asarray(z, dtype=np.complex128)
        one = np.ones_like(z)
        if self.kind == "constant":
            return self.c * one, 0 * one, 0 * one
        if self.kind == "identity":
            return z.copy(), one, 0 * one
        if self.kind == "monomial":
            u, n = cmath.exp(1j * self.theta0), self.n
            d2 = u * n * (n - 1) * z ** (n - 2) if n >= 2 else 0 * one
            return u * z**n, u * n * z ** (n - 1), d2
        a = self.c
        den = 1.0 + np.conj(a) * z
        k = 1.0 - abs(a) ** 2
        return (z + a) / den, k / den**2, -2.0 * np.conj(a) * k / den**3

    def series(self, order):
        if self.kind == "constant":
            return PowerSeries.monomial(0, order, self.c)
        if self.kind == "identity":
            return PowerSeries.monomial(1, order)
        if self.kind == "monomial":
            return PowerSeries.monomial(self.n, order, cmath.exp(1j * self.theta0))
        a = self.c
        geo = PowerSeries.geometric(order, -np.conj(a))
        return geo.mul_z() + geo.scale(a)


DILATATION_MATRIX = (
    DilatationSpec.identity(),
    DilatationSpec.constant(0.5j),
    DilatationSpec.monomial(2, 0.7),
    DilatationSpec.mobius(0.3 + 0.2j),
)


# -- harmonic maps ---------------------------------------------------------------

Evaluator = Callable[[np.ndarray], tuple]


def _trimmed(c, r):
    """Drop trailing terms below double precision for |z| <= r (second derivative included)."""
    k = np.arange(c.size, dtype=float)
    with np.errstate(under="ignore", divide="ignore"):
        size = np.abs(c) * (k * k + 1.0) * r ** k
    keep = np.flatnonzero(size > 1e-18 * max(size.max(), 1e-300))
    return c[: int(keep[-1]) + 3] if keep.size else c[:3]


def _series_eval(s):
    def ev(z):
        z = np.asarray(z, dtype=np.complex128)
        r = float(np.abs(z).max()) if z.size else 0.0
        return _kernels.horner_derivs(_trimmed(s.coeffs, r), z)

    return ev


@dataclass(frozen=True)
class HarmonicMap:
    """f = h + conj(g) with h and g given by series or closed-form evaluators.

    A closed-form evaluator maps a complex array to (value, d1, d2); when
    present it takes precedence over the series.
    """

    h: PowerSeries | None
    g: PowerSeries | None
    coupling: str = "explicit"
    dilatation: DilatationSpec | None = None
    h_closed: Evaluator | None = field(default=None, compare=False)
    g_closed: Evaluator | None = field(default=None, compare=False)
    label: str = ""

    def __post_init__(self):
        if self.coupling not in COUPLINGS:
            raise ValueError(f"unknown coupling {self.coupling!r}")
        if self.h is None and self.h_closed is None:
            raise ValueError("h needs a series or a closed form")
        if self.g is None and self.g_closed is None:
            raise ValueError("g needs a series or a closed form")
        if self.h is not None and (abs(self.h[0]) > 1e-14 or abs(self.h[1] - 1) > 1e-14):
            raise ValueError("h must be normalized: a_0 = 0, a_1 = 1")
        if self.coupling != "explicit":
            if self.dilatation is None:
                raise ValueError(f"{self.coupling} coupling needs a dilatation")
            b1 = self.g[1] if self.g is not None else self.g_closed(np.zeros(1))[1][0]
            phi0 = self.dilatation.eval(np.zeros(1))[0][0]
            if abs(b1 - phi0) > 1e-12:
                raise ValueError(f"b_1 = {b1} differs from phi(0) = {phi0}")

    def parts(self, z):
        """((h, h', h''), (g, g', g'')) at ``z``."""
        z = np.asarray(z, dtype=np.complex128)
        hp = self.h_closed(z) if self.h_closed is not None else _series_eval(self.h)(z)
        gp = self.g_closed(z) if self.g_closed is not None else _series_eval(self.g)(z)
        return hp, gp

    def __call__(self, z):
        (h, _, _), (g, _, _) = self.parts(z)
        return h + np.conj(g)

    def dilatation_ratio(self, z):
        """|g'(z)/h'(z)|."""
        (_, h1, _), (_, g1, _) = self.parts(z)
        return np.abs(g1 / h1)


def build_harmonic(spec: PsiSpec, phi: DilatationSpec, coupling: str = "product", N: int | None = None, r_max: float = 0.9):
    """h = h_psi and g = phi h (product) or g' = phi h' (derivative).

    ``N`` is the truncation order; by default it is chosen so that the series
    for h, h' and h'' are converged on ``|z| <= r_max``.
    """
    if N is None:
        c = hpsi_coefficients(spec, r_max, weight_power=2)
        h = PowerSeries(c)
    else:
        if N < 8:
            raise ValueError("truncation order must be at least 8")
        h = PowerSeries(hpsi_coefficients(spec, 0.0, order=N))
    order = h.order
    if coupling == "product":
        g = phi.series(order) * h
    elif coupling == "derivative":
        g = (phi.series(order - 1) * h.derive()).integrate0()
    else:
        raise ValueError(f"coupling must be product or derivative, got {coupling!r}")
    return HarmonicMap(h, g, coupling, phi, label=f"{spec.name}|{phi.name}|{coupling}")


def identity_map():
    return HarmonicMap(PowerSeries.monomial(1, 8), PowerSeries.zero(8), label="identity")


def analytic_map(h):
    """f = h with g = 0; ``h`` is a series or a closed-form evaluator."""
    if isinstance(h, PowerSeries):
        return HarmonicMap(h, PowerSeries.zero(h.order), label="analytic")
    return HarmonicMap(None, PowerSeries.zero(8), h_closed=h, label="analytic")


# Closed forms in u = 1 - z: each returns (value, d1, d2) in z.

def _koebe(z):
    u = 1.0 - z
    return z / u**2, (1.0 + z) / u**3, (4.0 + 2.0 * z) / u**4


def koebe_map():
    """The analytic Koebe function z/(1-z)^2 as a harmonic map with g = 0."""
    return HarmonicMap(None, PowerSeries.zero(8), h_closed=_koebe, label="koebe")


def counterexample_F(variant="printed"):
    """Koebe h with a co-analytic part that keeps f sense-preserving but not univalent.

    ``printed``: g = log(1-z)/2 + z(1-2z)/(2(1-z)^2), whose dilatation is -z/2.
    ``stated``: g' = z(1+z)/2 h', the dilatation quoted alongside that g.
    """

    def g_printed(z):
        u = 1.0 - z
        w = -z * (1.0 + z) / 2.0
        return (
            np.log(u) / 2.0 + z * (1.0 - 2.0 * z) / (2.0 * u**2),
            w / u**3,
            -(1.0 + 2.0 * z) / (2.0 * u**3) + 3.0 * w / u**4,
        )

    def g_stated(z):
        u = 1.0 - z
        val = (1.0 / u**2 - 1.0) - 4.0 * (1.0 / u - 1.0) - 2.5 * np.log(u) - 0.5 * z
        return (
            val,
            z * (1.0 + z) ** 2 / (2.0 * u**3),
            (1.0 + z) * (1.0 + 3.0 * z) / (2.0 * u**3) + 3.0 * z * (1.0 + z) ** 2 / (2.0 * u**4),
        )

    if variant not in ("printed", "stated"):
        raise ValueError(f"unknown F variant {variant!r}")
    g = g_printed if variant == "printed" else g_stated
    return HarmonicMap(None, None, h_closed=_koebe, g_closed=g, label="F" if variant == "printed" else "F-stated")


def counterexample_G():
    """Koebe h with g = z/(2(1-z)): not sense-preserving."""

    def g(z):
        u = 1.0 - z
        return z / (2.0 * u), 1.0 / (2.0 * u**2), 1.0 / u**3

    return HarmonicMap(None, None, h_closed=_koebe, g_closed=g, label="G")


def harmonic_koebe():
    """K = h + conj(g) with dilatation z."""

    def h(z):
        u = 1.0 - z
        return 2.0 / (3.0 * u**3) - 1.0 / (2.0 * u**2) - 1.0 / 6.0, 2.0 / u**4 - 1.0 / u**3, 8.0 / u**5 - 3.0 / u**4

    def g(z):
        u = 1.0 - z
        return (
            2.0 / (3.0 * u**3) - 1.5 / u**2 + 1.0 / u - 1.0 / 6.0,
            2.0 / u**4 - 3.0 / u**3 + 1.0 / u**2,
            8.0 / u**5 - 9.0 / u**4 + 2.0 / u**3,
        )

    return HarmonicMap(None, None, h_closed=h, g_closed=g, label="K")


def bernardi_koebe():
    """Lambda_{0,1}[K]: H = int h/t, G = int g/t."""

    def H(z):
        u = 1.0 - z
        val = (1.0 / u**2 - 1.0) / 3.0 + (1.0 / u - 1.0) / 6.0 - np.log(u) / 6.0
        return val, 2.0 / (3.0 * u**3) + 1.0 / (6.0 * u**2) + 1.0 / (6.0 * u), 2.0 / u**4 + 1.0 / (3.0 * u**3) + 1.0 / (6.0 * u**2)

    def G(z):
        u = 1.0 - z
        val = (1.0 / u**2 - 1.0) / 3.0 - 5.0 * (1.0 / u - 1.0) / 6.0 - np.log(u) / 6.0
        return val, 2.0 / (3.0 * u**3) - 5.0 / (6.0 * u**2) + 1.0 / (6.0 * u), 2.0 / u**4 - 5.0 / (3.0 * u**3) + 1.0 / (6.0 * u**2)

    return HarmonicMap(None, None, h_closed=H, g_closed=G, label="Lambda01[K]")


# -- grids and pointwise quantities ----------------------------------------------------

def polar_grid(r, grid=DEFAULT_GRID):
    """Radii r*j/n_r (j = 1..n_r), angles 2*pi*k/n_theta and the points z."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"radius must lie in (0, 1), got {r}")
    n_r, n_t = int(grid[0]), int(grid[1])
    rho = r * np.arange(1, n_r + 1) / n_r
    theta = theta_grid(n_t) if n_t >= 512 else 2.0 * math.pi * np.arange(n_t) / n_t
    return rho, theta, rho[:, None] * cis(theta)[None, :]


def sense_margin(f, z):
    (_, h1, _), (_, g1, _) = f.parts(z)
    return np.abs(h1) - np.abs(g1)


def jacobian(f, z):
    (_, h1, _), (_, g1, _) = f.parts(z)
    return np.abs(h1) ** 2 - np.abs(g1) ** 2


def arg_derivative(f, z):
    """d/dtheta arg f(r e^{i theta}) = Re[(z h' - conj(z g'))/f]."""
    (h, h1, _), (g, g1, _) = f.parts(z)
    fz = h + np.conj(g)
    _check_nonzero(fz, z, "f")
    return ((z * h1 - np.conj(z * g1)) / fz).real


def tangent_turning(f, z):
    """d/dtheta arg(d/dtheta f) = Im(f_tt / f_t)."""
    (_, h1, h2), (_, g1, g2) = f.parts(z)
    ft = 1j * (z * h1 - np.conj(z * g1))
    _check_nonzero(ft, z, "d/dtheta f")
    ftt = -(z * (h1 + z * h2) + np.conj(z * (g1 + z * g2)))
    return (ftt / ft).imag


def arg_derivative_fd(f, z, step=1e-5):
    """Centered difference of arg f along the circle through ``z``.

    The phase difference is taken as the principal angle of
    f(theta + step)/f(theta - step), i.e. nearest-branch continuation.
    """
    z = np.asarray(z, dtype=np.complex128)
    rot = cmath.exp(1j * step)
    return np.angle(f(z * rot) / f(z / rot)) / (2.0 * step)


def _check_nonzero(values, z, what):
    scale = np.maximum(np.abs(z), 1e-300)
    bad = np.abs(values) <= 1e-14 * scale
    if np.any(bad):
        idx = np.flatnonzero(bad.ravel())[0]
        raise ZeroEncountered(what, np.asarray(z).ravel()[idx])


def _report(check_id, r, grid, field_, rho, theta, notes="", expect_pass=True):
    idx = int(np.argmin(field_))
    j, k = np.unravel_index(idx, field_.shape)
    m = float(field_[j, k])
    return VerificationReport(
        check_id=check_id,
        radius=float(r),
        grid=(int(grid[0]), int(grid[1])),
        min_margin=m,
        passed=m > STRICT_THRESHOLD,
        witness=(float(rho[j]), float(theta[k])),
        notes=notes,
        expect_pass=expect_pass,
    )


# -- margins ---------------------------------------------------------------------

def sense_preserving_margin(f: HarmonicMap, r: float, grid=DEFAULT_GRID, *, expect_pass=True) -> VerificationReport:
    """min |h'| - |g'| on |z| <= r; the notes carry min J_f."""
    rho, theta, z = polar_grid(r, grid)
    (_, h1, _), (_, g1, _) = f.parts(z)
    a, b = np.abs(h1), np.abs(g1)
    jac = a * a - b * b
    notes = f"min J_f={float(jac.min()):.6g}; jacobian_positive={bool(jac.min() > 0)}"
    return _report(f"sense-preserving[{f.label}]", r, grid, a - b, rho, theta, notes, expect_pass)


def fully_starlike_margin(f: HarmonicMap, r: float, beta: float = 0.0, grid=DEFAULT_GRID, *, expect_pass=True) -> VerificationReport:
    rho, theta, z = polar_grid(r, grid)
    return _report(f"fully-starlike[{f.label}]", r, grid, arg_derivative(f, z) - beta, rho, theta, f"beta={beta:g}", expect_pass)


def fully_convex_margin(f: HarmonicMap, r: float, beta: float = 0.0, grid=DEFAULT_GRID, *, expect_pass=True) -> VerificationReport:
    rho, theta, z = polar_grid(r, grid)
    return _report(f"fully-convex[{f.label}]", r, grid, tangent_turning(f, z) - beta, rho, theta, f"beta={beta:g}", expect_pass)


def close_to_convex_probe(f: HarmonicMap, r: float, delta_grid: int = 32, grid=DEFAULT_GRID, *, expect_pass=True) -> VerificationReport:
    """min over |delta| = 1 and |z| <= r of Re(1 + z Q''/Q') with Q = h - delta g."""
    rho, theta, z = polar_grid(r, grid)
    (_, h1, h2), (_, g1, g2) = f.parts(z)
    best = np.full(z.shape, np.inf)
    worst_delta = np.zeros(z.shape)
    for t in 2.0 * math.pi * np.arange(delta_grid) / delta_grid:
        d = cmath.exp(1j * t)
        q1 = h1 - d * g1
        _check_nonzero(q1, z, f"Q' (delta=e^{{i{t:.4g}}})")
        val = (1.0 + z * (h2 - d * g2) / q1).real
        better = val < best
        best[better] = val[better]
        worst_delta[better] = t
    idx = np.unravel_index(int(np.argmin(best)), best.shape)
    notes = f"delta_grid={delta_grid}; worst delta=e^(i*{float(worst_delta[idx]):.6g})"
    return _report(f"close-to-convex[{f.label}]", r, grid, best, rho, theta, notes, expect_pass)


# -- coefficient sums and the truncated root grid ---------------------------------------

LEMMAS = {
    # weight w(n) in the reduced sum, and the lemma bound for 2 * reduced sum
    "fully_starlike": (lambda n: n, lambda beta: 1.0 - beta),
    "fully_convex": (lambda n: n * n, lambda beta: 1.0 - beta),
    "uniform_starlike": (lambda n: n, lambda beta: 0.5),
    "uniform_convex": (lambda n: n * (2 * n - 1), lambda beta: 1.0),
}


class CoefficientCheck(NamedTuple):
    sum: float
    passed: bool
    lemma_sum: float
    bound: float


def coefficient_condition(spec: PsiSpec, lemma: str, r: float, k_max: int | None = None, beta: float = 0.0) -> CoefficientCheck:
    """Lemma sum with a_n and b_n replaced by |a_n(h_psi)| r^(n-1).

    ``sum`` is the reduced quantity sum_{n>=2} w(n) |a_n| r^(n-1) that the
    radius equations set equal to a constant; the lemma sum with a_n = b_n
    and its bound decide ``passed``.  ``k_max`` keeps n = 2 .. k_max + 1.
    """
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}")
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if k_max is not None and k_max < 2:
        raise ValueError("k_max must be at least 2")
    weight, bound_of = LEMMAS[lemma]
    c = np.abs(hpsi_coefficients(spec, max(r, 1e-3), weight_power=3))
    n = np.arange(c.size, dtype=float)
    terms = weight(n) * c * r ** np.maximum(n - 1, 0)
    terms[:2] = 0.0
    if k_max is not None:
        terms[k_max + 2 :] = 0.0
    s = float(terms.sum())
    # with |b_n| = |a_n| every lemma sum is twice the reduced one,
    # e.g. (n - beta)|a_n| + (n + beta)|b_n| = 2n|a_n|
    lemma_sum = 2.0 * s
    bound = bound_of(beta)
    return CoefficientCheck(s, lemma_sum <= bound, lemma_sum, bound)


TABLE1_BETAS = (0.0, 0.5, 0.9)
TABLE1_KS = (5, 10, 20, None)


def table1_roots(spec: PsiSpec, beta: float, k: int | None) -> float:
    """Smallest positive root of sum_{n=2}^{k+1} n^2 a_n r^(n-1) = (5 - beta)/4 (k=None: full sum)."""
    eq = CoefficientEquation(spec, lambda n: n * n, (5.0 - beta) / 4.0, k_max=k, r_max=0.5)
    return smallest_positive_root(RootQuery(eq, search_max=0.5, vectorized=True, label="table1")).root


def table1(spec: PsiSpec | None = None):
    """Rows (beta, [roots for k = 5, 10, 20, inf])."""
    spec = spec or PsiSpec.kappa_exp()
    return [(b, [table1_roots(spec, b, k) for k in TABLE1_KS]) for b in TABLE1_BETAS]


# -- counterexamples ---------------------------------------------------------------

def circle_minimum(quantity, f, r, n_theta=4096):
    """(min over theta, argmin theta) of ``quantity(f, z)`` on |z| = r."""
    theta = theta_grid(n_theta)
    vals = quantity(f, r * cis(theta))
    k = int(np.argmin(vals))
    return float(vals[k]), float(theta[k])


def first_failure_radius(quantity, f, r_lo=0.01, r_hi=0.99, step=1.0 / 256, tol=1e-10, n_theta=4096):
    """Smallest r in [r_lo, r_hi] where min_theta ``quantity`` reaches 0, or None."""
    m = lambda r: circle_minimum(quantity, f, r, n_theta)[0]  # noqa: E731
    prev_r, prev = r_lo, m(r_lo)
    if prev <= 0:
        return r_lo
    for r in np.arange(r_lo + step, r_hi + 0.5 * step, step):
        cur = m(float(r))
        if cur <= 0:
            return bisect(m, prev_r, float(r), prev, tol)
        prev_r, prev = float(r), cur
    return None


def injectivity_witness(f, r, n_theta=2048):
    """Two points z, conj(z) on |z| = r with f(z) = f(conj z), for maps with real coefficients.

    Such maps satisfy f(conj z) = conj f(z), so a zero of Im f on the upper
    half circle gives a collision.  Returns (z1, z2, |f(z1) - f(z2)|) or None.
    """
    probe = np.array([0.3 + 0.4j, -0.2 + 0.5j])
    if not np.allclose(f(np.conj(probe)), np.conj(f(probe)), rtol=1e-12, atol=1e-12):
        raise ValueError("injectivity_witness requires real coefficients")
    edge = 0.05
    theta = np.linspace(edge, math.pi - edge, n_theta)
    im = lambda t: float(np.imag(f(np.array([r * cmath.exp(1j * t)]))[0]))  # noqa: E731
    vals = np.imag(f(r * np.exp(1j * theta)))
    hits = np.flatnonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))
    for i in hits:
        t = bisect(im, float(theta[i]), float(theta[i + 1]), float(vals[i]), 1e-15)
        z1 = r * cmath.exp(1j * t)
        z2 = z1.conjugate()
        if abs(z1 - z2) > 0.1:
            gap = float(abs(f(np.array([z1]))[0] - f(np.array([z2]))[0]))
            return z1, z2, gap
    return None


def _injectivity_report(f, r):
    w = injectivity_witness(f, r)
    if w is None:
        return VerificationReport(f"injectivity[{f.label}]", r, (1, 2048), math.inf, True, (r, 0.0), "no collision found", expect_pass=False)
    z1, z2, gap = w
    return VerificationReport(
        check_id=f"injectivity[{f.label}]",
        radius=r,
        grid=(1, 2048),
        min_margin=gap - 1e-6,
        passed=gap - 1e-6 > STRICT_THRESHOLD,
        witness=(abs(z1), cmath.phase(z1)),
        notes=f"f(z1)=f(z2) for z1={z1:.12g}, z2={z2:.12g}; |z1-z2|={abs(z1 - z2):.6g}; |f(z1)-f(z2)|={gap:.3g}",
        expect_pass=False,
    )


def counterexample_suite(grid=(1024, 1024)):
    """Reports for F, G, K and Lambda_{0,1}[K]; ``expect_pass`` encodes the expected outcome."""
    reports = []
    F, G, K, LK = counterexample_F(), counterexample_G(), harmonic_koebe(), bernardi_koebe()

    reports.append(sense_preserving_margin(F, 0.99, grid))
    rho, theta, z = polar_grid(1.0 - 0.5 / grid[0], grid)
    dil = F.dilatation_ratio(z)
    j, k = np.unravel_index(int(np.argmax(dil)), dil.shape)
    reports.append(
        VerificationReport(
            check_id="dilatation-bound[F]",
            radius=float(rho[-1]),
            grid=tuple(grid),
            min_margin=float(1.0 - dil[j, k]),
            passed=float(1.0 - dil[j, k]) > STRICT_THRESHOLD,
            witness=(float(rho[j]), float(theta[k])),
            notes=f"max |g'/h'|={float(dil[j, k]):.12g}",
        )
    )
    reports.append(_injectivity_report(F, 0.9))
    reports.append(_injectivity_report(counterexample_F("stated"), 0.99))

    ratio = float(G.dilatation_ratio(np.array([-0.75 + 0j]))[0])
    g_rep = sense_preserving_margin(G, 0.99, grid, expect_pass=False)
    reports.append(replace(g_rep, notes=f"|g'/h'|(-3/4)={ratio:.15g}; {g_rep.notes}"))

    reports.append(sense_preserving_margin(K, 0.9, grid))

    r_fail = first_failure_radius(arg_derivative, LK)
    if r_fail is None:
        reports.append(VerificationReport("fully-starlike[Lambda01[K]]", 0.99, (1, 4096), 0.0, True, (0.99, 0.0), "no failure radius found", expect_pass=False))
    else:
        r_out = min(r_fail + 1e-3, 0.99)
        m, t = circle_minimum(arg_derivative, LK, r_out)
        reports.append(
            VerificationReport(
                check_id="fully-starlike[Lambda01[K]]",
                radius=r_out,
                grid=(1, 4096),
                min_margin=m,
                passed=m > STRICT_THRESHOLD,
                witness=(r_out, t),
                notes=f"failure radius={r_fail:.10f}",
                expect_pass=False,
            )
        )
    return reports


# -- the sufficiency matrix -----------------------------------------------------------

MATRIX_PSI = ("janowski:1,-1", "lemniscate", "kappa-exp")
SAFETY = 0.99


def _matrix_checks(spec):
    """(coupling, check name, radius) triples for one generator."""
    return [
        ("product", "sense-preserving", univalence_radius(spec).value),
        ("product", "fully-starlike", fully_starlike_radius(spec, 0.0).value),
        ("product", "fully-starlike-improved", fully_starlike_radius_improved(spec, 0.0).value),
        ("product", "fully-convex", fully_convex_radius(spec, 0.0, PROOF_CONSISTENT).value),
        ("derivative", "sense-preserving", close_to_convex_radius("general", spec=spec).value),
        ("derivative", "close-to-convex", close_to_convex_radius("general", spec=spec).value),
        ("derivative", "fully-starlike-sp", fully_starlike_radius_improved(spec, 0.0, sense_preserving=True).value),
    ]


def run_check(f, name, r, grid):
    if name == "sense-preserving":
        return sense_preserving_margin(f, r, grid)
    if name in ("fully-starlike", "fully-starlike-improved", "fully-starlike-sp"):
        return replace(fully_starlike_margin(f, r, 0.0, grid), check_id=f"{name}[{f.label}]")
    if name == "fully-convex":
        return fully_convex_margin(f, r, 0.0, grid)
    if name == "close-to-convex":
        return close_to_convex_probe(f, r, grid=grid)
    raise ValueError(f"unknown check {name!r}")


def verification_matrix(grid=(512, 512), psis=MATRIX_PSI, dilatations=DILATATION_MATRIX, safety=SAFETY):
    """Every margin at ``safety`` times its computed radius, for each (psi, phi, coupling)."""
    reports = []
    for name in psis:
        spec = PsiSpec.parse(name)
        checks = _matrix_checks(spec)
        for phi in dilatations:
            maps = {c: build_harmonic(spec, phi, c, r_max=0.5) for c in ("product", "derivative")}
            for coupling, check, radius in checks:
                reports.append(run_check(maps[coupling], check, safety * radius, grid))
    return reports


def sharpness_probe(spec: PsiSpec, factor: float = 1.05, grid=(256, 512), dilatations=DILATATION_MATRIX):
    """Margins just beyond each computed radius, reported as observations (no expectation)."""
    out = []
    for coupling, check, radius in _matrix_checks(spec):
        r = min(factor * radius, 0.95)
        for phi in dilatations:
            rep = run_check(build_harmonic(spec, phi, coupling, r_max=max(r, 0.5)), check, r, grid)
            out.append(replace(rep, expect_pass=None, notes=f"observation at {factor:g} x radius {radius:.6g}; {rep.notes}"))
    return out
