"""Radius computations, one function per radius theorem.

Coefficient-sum equations are written as polynomials in ``r``::

    sum_{n=2}^{K} w(n) c_n r**(n-1) = rhs

where ``c_n`` are the coefficients of the extremal function ``h_psi``.  By
default the signed coefficients are used, which is ``h_psi`` itself and
reproduces the printed closed-form equations; ``majorant=True`` switches to
``|c_n|`` (the dominating series ``z + sum |c_n| z**n``).  The two agree for
every generator whose extremal coefficients are nonnegative.

Theorems whose proofs rely on the coefficient bound ``|b_n| <= |a_n|`` are
only valid in ``|z| <= 1/3``; their radii are capped there.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import _kernels
from .psi import (
    PsiSpec,
    circle_min_modulus,
    circle_min_real,
    convexity_radius,
    H_psi,
    hpsi_coefficients,
    psi_eval,
)
from .results import (
    BETA_DEGENERATE_ZERO,
    CONVEXITY_RADIUS,
    EQUATION_ROOT,
    ONE_THIRD_CAP,
    RadiusResult,
)
from .solve import NoBracketError, RootQuery, smallest_positive_root

CAP = 1.0 / 3.0
PROOF_CONSISTENT = "proof_consistent"
TABLE_PRINTED = "table_printed"
READINGS = (PROOF_CONSISTENT, TABLE_PRINTED)


def _check_beta(beta):
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"beta must lie in [0, 1), got {beta}")


# -- coefficient-sum equations ------------------------------------------------

class CoefficientEquation:
    """Vectorized ``r -> sum_{n=2}^{K} w(n) c_n r**(n-1) - rhs``."""

    def __init__(self, spec, weights, rhs, *, majorant=False, k_max=None, r_max=0.5):
        c = hpsi_coefficients(spec, r_max, weight_power=3)
        if majorant:
            c = np.abs(c)
        n = np.arange(c.size, dtype=float)
        w = np.asarray(weights(n), dtype=float)
        terms = w * c
        terms[:2] = 0.0
        if k_max is not None:
            terms[k_max + 2 :] = 0.0
        # polynomial in r: degree j = n - 1
        poly = np.zeros(c.size - 1)
        poly[1:] = terms[2:]
        poly[0] = -rhs
        self.poly = poly
        self.rhs = rhs

    def __call__(self, r):
        return _kernels.real_power_sum(self.poly, np.asarray(r, dtype=float))

    def lhs(self, r):
        return float(self(np.array([r]))[0]) + self.rhs


def _capped(eq, label, cap=CAP):
    """Solve on (0, cap]; no sign change there means the cap is active."""
    q = RootQuery(eq, search_max=cap, vectorized=True, label=label)
    try:
        root = smallest_positive_root(q)
    except NoBracketError:
        return ONE_THIRD_CAP, CAP, abs(q(cap))
    if root.root == 0.0:
        return BETA_DEGENERATE_ZERO, 0.0, root.residual
    return EQUATION_ROOT, root.root, root.residual


def _coeff_note(majorant):
    return "coefficients=|a_n| (majorant)" if majorant else "coefficients=signed a_n of h_psi"


def _sum_radius(spec, weights, rhs, *, theorem, equation_id, parameters, majorant, k_max=None, notes=""):
    eq = CoefficientEquation(spec, weights, rhs, majorant=majorant, k_max=k_max)
    branch, value, residual = _capped(eq, equation_id)
    pieces = [_coeff_note(majorant)]
    if branch == ONE_THIRD_CAP:
        pieces.append("no root in (0, 1/3]; capped at 1/3")
    if notes:
        pieces.append(notes)
    return RadiusResult(
        value=value,
        branch=branch,
        equation_id=equation_id,
        residual=residual,
        sharp=False,
        notes="; ".join(pieces),
        theorem=theorem,
        psi=spec.name,
        parameters=dict(parameters, majorant=majorant),
    )


# -- univalence ---------------------------------------------------------------

def _sense_preserving_root(spec, circle_min, label):
    def objective(r):
        return (1.0 - r * r) * circle_min(spec, r).value - 2.0 * r

    return smallest_positive_root(RootQuery(objective, label=label))


@lru_cache(maxsize=64)
def _real_part_root(spec):
    # beta-independent second root of the improved theorem
    return _sense_preserving_root(spec, circle_min_real, "(1-r^2)m(r)-2r")


def diskm_equation_root(spec, variant="printed"):
    """Root of the printed S*[M] equation ``(1+r)(1-r)^2 - 2r(1+mr)`` or its ``1-mr`` variant."""
    if spec.kind != "diskm":
        raise ValueError("diskm_equation_root needs a diskm generator")
    m = spec.m
    sign = {"printed": 1.0, "alternate": -1.0}[variant]
    eq = lambda r: (1 + r) * (1 - r) ** 2 - 2 * r * (1 + sign * m * r)  # noqa: E731
    return smallest_positive_root(RootQuery(eq, vectorized=True, label=f"diskm-{variant}"))


def univalence_radius(spec: PsiSpec) -> RadiusResult:
    """R = min{r_psi, r_c} with r_psi the root of (1 - r^2) m(r) - 2r, m = min |psi|."""
    rp = _sense_preserving_root(spec, circle_min_modulus, "(1-r^2)m(r)-2r")
    notes = []
    try:
        rc = convexity_radius(spec)
    except NoBracketError:
        rc = None
        notes.append("H_psi has no sign change on (0,1): convexity radius taken as 1")

    m_at = circle_min_modulus(spec, rp.root).value
    extremal_min = abs(m_at - psi_eval(spec, -rp.root).real) < 1e-12
    if rc is None or rc.value >= rp.root:
        value, branch, residual, eq = rp.root, EQUATION_ROOT, rp.residual, "univalence:(1-r^2)m(r)-2r=0"
        sharp = extremal_min and rc is not None
    else:
        value, branch, residual, eq = rc.value, CONVEXITY_RADIUS, rc.residual, "univalence:r_c"
        sharp = False
    notes.append(f"r_psi={rp.root:.12g}")
    if rc is not None:
        notes.append(f"r_c={rc.value:.12g} ({'sharp' if rc.sharp else 'estimate'})")
    notes.append("m(r)=psi(-r)" if extremal_min else "m(r)!=psi(-r)")
    if spec.kind == "diskm":
        printed = diskm_equation_root(spec, "printed").root
        alternate = diskm_equation_root(spec, "alternate").root
        notes.append(f"printed (1+r)(1-r)^2-2r(1+mr) root={printed:.12g}; 1-mr variant root={alternate:.12g}")
    if spec.kind == "bernoulli":
        notes.append("printed value 0.358473 duplicates the sigmoid case; root of the printed equation reported")
    return RadiusResult(
        value=value,
        branch=branch,
        equation_id=eq,
        residual=residual,
        sharp=sharp,
        notes="; ".join(notes),
        theorem="univalence",
        psi=spec.name,
    )


# -- fully starlike -----------------------------------------------------------

def fully_starlike_radius(spec: PsiSpec, beta: float = 0.0, *, majorant: bool = False) -> RadiusResult:
    """min{1/3, r}: r solves 4 h_psi'(r) + beta = 5."""
    _check_beta(beta)
    return _sum_radius(
        spec,
        lambda n: n,
        (1.0 - beta) / 4.0,
        theorem="fully-starlike",
        equation_id="fully-starlike:4h'(r)+beta=5",
        parameters={"beta": beta},
        majorant=majorant,
    )


def fully_starlike_radius_improved(spec: PsiSpec, beta: float = 0.0, sense_preserving: bool = False) -> RadiusResult:
    """min{r1, r2} with m(r) = min Re psi; r1 alone for sense-preserving maps.

    r1 solves m(r) - r/(1-r) = beta and r2 solves (1 - r^2) m(r) = 2r.
    """
    _check_beta(beta)

    def first(r):
        return circle_min_real(spec, r).value - r / (1.0 - r) - beta

    r1 = smallest_positive_root(RootQuery(first, label="m(r)-r/(1-r)-beta"))
    theorem = "fully-starlike-sp" if sense_preserving else "fully-starlike-improved"
    params = {"beta": beta, "sense_preserving": sense_preserving}
    if sense_preserving:
        return RadiusResult(
            value=r1.root,
            branch=EQUATION_ROOT,
            equation_id="fully-starlike-sp:m(r)-r/(1-r)=beta",
            residual=r1.residual,
            sharp=False,
            notes=f"r1={r1.root:.12g}",
            theorem=theorem,
            psi=spec.name,
            parameters=params,
        )
    r2 = _real_part_root(spec)
    active, which = (r1, "r1") if r1.root <= r2.root else (r2, "r2")
    return RadiusResult(
        value=active.root,
        branch=EQUATION_ROOT,
        equation_id=f"fully-starlike-improved:{which}",
        residual=active.residual,
        sharp=False,
        notes=f"r1={r1.root:.12g}; r2={r2.root:.12g}; {which} active",
        theorem=theorem,
        psi=spec.name,
        parameters=params,
    )


# -- fully convex -------------------------------------------------------------

def _convex_rhs(beta, reading):
    if reading == PROOF_CONSISTENT:
        return (1.0 - beta) / 4.0
    if reading == TABLE_PRINTED:
        return (5.0 - beta) / 4.0
    raise ValueError(f"unknown reading {reading!r}; choose from {READINGS}")


def fully_convex_radius(
    spec: PsiSpec,
    beta: float = 0.0,
    reading: str = PROOF_CONSISTENT,
    *,
    majorant: bool = False,
    k_max: int | None = None,
) -> RadiusResult:
    """min{1/3, r}: r solves sum_{n>=2} n^2 a_n r^(n-1) = rhs.

    ``proof_consistent`` uses rhs = (1 - beta)/4; ``table_printed`` uses
    rhs = (5 - beta)/4, the reading that reproduces the published table.
    ``k_max`` truncates the sum to n = 2 .. k_max + 1.
    """
    _check_beta(beta)
    other = TABLE_PRINTED if reading == PROOF_CONSISTENT else PROOF_CONSISTENT
    alt = _sum_radius(
        spec,
        lambda n: n * n,
        _convex_rhs(beta, other),
        theorem="fully-convex",
        equation_id="",
        parameters={},
        majorant=majorant,
        k_max=k_max,
    )
    eq_id = "fully-convex:(G'-1)*(h'-1)=(1-beta)/4" if reading == PROOF_CONSISTENT else "fully-convex:sum n^2 a_n r^(n-1)=(5-beta)/4"
    params = {"beta": beta, "reading": reading}
    if k_max is not None:
        params["k_max"] = k_max
    return _sum_radius(
        spec,
        lambda n: n * n,
        _convex_rhs(beta, reading),
        theorem="fully-convex",
        equation_id=eq_id,
        parameters=params,
        majorant=majorant,
        k_max=k_max,
        notes=f"reading={reading}; {other}={alt.value:.12g}",
    )


# -- Bernardi (Lambda_{0,1}) transforms ----------------------------------------

BERNARDI_KINDS = ("fully_starlike", "fully_convex", "uniformly_starlike")


def bernardi_radius(spec: PsiSpec, beta: float = 0.0, kind: str = "fully_starlike", *, majorant: bool = False) -> RadiusResult:
    """Radii for F = Lambda_{0,1}[f].

    fully_starlike: 2/(1-beta) (h(r) - r)/r = 1;  fully_convex: 2h'(r) + beta = 3;
    uniformly_starlike: 4h(r) - 5r = 0 (beta unused).
    """
    if kind == "fully_starlike":
        _check_beta(beta)
        weights, rhs, eq = (lambda n: np.ones_like(n)), (1.0 - beta) / 2.0, "bernardi-fully-starlike:2(h(r)-r)/((1-beta)r)=1"
    elif kind == "fully_convex":
        _check_beta(beta)
        weights, rhs, eq = (lambda n: n), (1.0 - beta) / 2.0, "bernardi-fully-convex:2h'(r)+beta=3"
    elif kind == "uniformly_starlike":
        weights, rhs, eq = (lambda n: np.ones_like(n)), 0.25, "bernardi-uniformly-starlike:4h(r)-5r=0"
    else:
        raise ValueError(f"unknown Bernardi radius kind {kind!r}; choose from {BERNARDI_KINDS}")
    params = {"kind": kind}
    if kind != "uniformly_starlike":
        params["beta"] = beta
    return _sum_radius(
        spec,
        weights,
        rhs,
        theorem="bernardi-" + kind.replace("_", "-"),
        equation_id=eq,
        parameters=params,
        majorant=majorant,
    )


# -- uniform and strong starlikeness -----------------------------------------

def uniform_radius(spec: PsiSpec, kind: str = "starlike", *, majorant: bool = False) -> RadiusResult:
    """Uniformly starlike: h'(r) = 5/4.  Uniformly convex: sum n(2n-1) a_n r^(n-1) = 1/2."""
    if kind == "starlike":
        weights, rhs, eq = (lambda n: n), 0.25, "uniformly-starlike:h'(r)-5/4=0"
    elif kind == "convex":
        weights, rhs, eq = (lambda n: n * (2 * n - 1)), 0.5, "uniformly-convex:2(G'-1)*(h'-1)-(h'-1)=1/2"
    else:
        raise ValueError(f"unknown uniform radius kind {kind!r}")
    return _sum_radius(
        spec,
        weights,
        rhs,
        theorem=f"uniformly-{kind}",
        equation_id=eq,
        parameters={"kind": kind},
        majorant=majorant,
    )


def strong_weights(alpha):
    """n -> A_n(alpha) + B_n(alpha) with A_n = n-1+|n-e^{-i pi alpha}|, B_n = n+1+|n+e^{i pi alpha}|."""
    u = np.exp(1j * math.pi * alpha)

    def weights(n):
        n = np.asarray(n, dtype=float)
        return (n - 1 + np.abs(n - np.conj(u))) + (n + 1 + np.abs(n + u))

    return weights


def strongly_starlike_radius(spec: PsiSpec, alpha: float, *, majorant: bool = False) -> RadiusResult:
    """min{1/3, r}: r solves sum_{n>=2} a_n (A_n + B_n) r^(n-1) = 2 sin(pi alpha/2)."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return _sum_radius(
        spec,
        strong_weights(alpha),
        2.0 * math.sin(math.pi * alpha / 2.0),
        theorem="strongly-starlike",
        equation_id="strongly-starlike:((h(r)-r)/r)*M_alpha(r)=2sin(pi alpha/2)",
        parameters={"alpha": alpha},
        majorant=majorant,
    )


# -- close-to-convexity --------------------------------------------------------

def lemniscate_quartic(r):
    return 1 - 6 * r + 12 * r**2 - 11 * r**3 + 4 * r**4


def monomial_equation(n):
    def eq(r):
        return (
            (1 - 4 * r + 4 * r**2)
            - r**n * (2 - 8 * r + 8 * r**2)
            + r ** (2 * n) * (1 - n * n + (n * n - 4) * r + 4 * r**2)
        )

    return eq


def sigmoid_sg_equation(r):
    return (2 - r * np.exp(r)) / (1 + np.exp(r)) - r / (1 - r)


CLOSE_TO_CONVEX_VARIANTS = ("lemniscate", "monomial", "general", "sigmoid_sg")


def close_to_convex_radius(variant: str = "general", *, spec: PsiSpec | None = None, n: int | None = None) -> RadiusResult:
    """Univalence and close-to-convexity radius for g' = phi h'.

    ``lemniscate`` and ``sigmoid_sg`` solve the printed closed equations,
    ``monomial`` the equation for phi(z) = e^{i theta} z^n, and ``general``
    returns min{r0, r_c} with r0 the root of (1 - r) H_psi(r) - r = 0.
    """
    if variant == "lemniscate":
        return _plain(lemniscate_quartic, "close-to-convex:1-6r+12r^2-11r^3+4r^4=0", "lemniscate", {"variant": variant})
    if variant == "sigmoid_sg":
        return _plain(sigmoid_sg_equation, "close-to-convex:(2-re^r)/(1+e^r)-r/(1-r)=0", "sigmoid", {"variant": variant})
    if variant == "monomial":
        if n is None or int(n) != n or n < 1:
            raise ValueError("monomial variant needs a positive integer n")
        return _plain(monomial_equation(int(n)), f"close-to-convex:monomial(n={int(n)})", "lemniscate", {"variant": variant, "n": int(n)})
    if variant != "general":
        raise ValueError(f"unknown close-to-convex variant {variant!r}; choose from {CLOSE_TO_CONVEX_VARIANTS}")
    if spec is None:
        raise ValueError("general variant needs a psi spec")

    r0 = smallest_positive_root(RootQuery(lambda r: (1 - r) * H_psi(spec, r).value - r, label="(1-r)H_psi(r)-r"))
    bound_sharp = H_psi(spec, 0.5 * r0.root).sharp
    notes = [f"r0={r0.root:.12g}"]
    try:
        rc = convexity_radius(spec)
        notes.append(f"r_c={rc.value:.12g}")
    except NoBracketError:
        rc = None
        notes.append("convexity radius taken as 1")
    notes.append("H_psi closed-form sharp" if bound_sharp else "H_psi numeric fallback (estimate)")
    if rc is None or r0.root <= rc.value:
        value, branch, residual, eq = r0.root, EQUATION_ROOT, r0.residual, "close-to-convex:(1-r)H_psi(r)-r=0"
    else:
        value, branch, residual, eq = rc.value, CONVEXITY_RADIUS, rc.residual, "close-to-convex:r_c"
    return RadiusResult(
        value=value,
        branch=branch,
        equation_id=eq,
        residual=residual,
        sharp=bound_sharp,
        notes="; ".join(notes),
        theorem="close-to-convex",
        psi=spec.name,
        parameters={"variant": "general"},
    )


def _plain(eq, equation_id, psi_name, params):
    root = smallest_positive_root(RootQuery(eq, vectorized=True, label=equation_id))
    return RadiusResult(
        value=root.root,
        branch=EQUATION_ROOT,
        equation_id=equation_id,
        residual=root.residual,
        sharp=False,
        notes="",
        theorem="close-to-convex",
        psi=psi_name,
        parameters=params,
    )
