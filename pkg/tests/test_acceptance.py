"""One test per acceptance criterion, each at its stated tolerance.

Every test prints a single PASS/FAIL line (also repeated in the terminal
summary) listing the sub-checks that failed, then asserts.
"""

import json
import math

import numpy as np
import pytest

import acceptance_log
from harmrad import cli
from harmrad.psi import CATALOG, PsiSpec, extremal_hpsi, hpsi_prime_closed, hpsi_prime_series, psi_series
from harmrad.radii import (
    PROOF_CONSISTENT,
    READINGS,
    TABLE_PRINTED,
    bernardi_radius,
    close_to_convex_radius,
    fully_convex_radius,
    fully_starlike_radius,
    fully_starlike_radius_improved,
    lemniscate_quartic,
    monomial_equation,
    sigmoid_sg_equation,
    strongly_starlike_radius,
    uniform_radius,
    univalence_radius,
)
from harmrad.series import PowerSeries, hadamard, reciprocal
from harmrad.verify import (
    DILATATION_MATRIX,
    MATRIX_PSI,
    arg_derivative,
    arg_derivative_fd,
    build_harmonic,
    counterexample_suite,
    polar_grid,
)
from oracles import brute_hadamard, dense_root, hpsi_by_recurrence, kappa_exp_hpsi, poly_equation, psi_coefficients

KOEBE = PsiSpec.janowski(1, -1)
LEM = PsiSpec.lemniscate()
KEXP = PsiSpec.kappa_exp()
MATRIX_SPECS = [PsiSpec.parse(name) for name in MATRIX_PSI]


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.checks = []

    def close(self, label, got, want, tol):
        err = abs(got - want)
        self.checks.append((label, err <= tol, f"got {got:.10g}, want {want:.10g} +- {tol:g}"))

    def holds(self, label, ok, detail=""):
        self.checks.append((label, bool(ok), detail))

    def finish(self):
        bad = [c for c in self.checks if not c[1]]
        status = "PASS" if not bad else "FAIL"
        line = f"AC {self.number} {status} {self.title} [{len(self.checks) - len(bad)}/{len(self.checks)} checks]"
        if bad:
            line += "; failed: " + "; ".join(f"{label} ({detail})" for label, _, detail in bad)
        print(line)
        acceptance_log.LINES.append(line)
        assert not bad, line


def test_ac1_univalence_radii():
    c = Criterion(1, "univalence radii")
    c.close("janowski:1,-1 = 2 - sqrt 3", univalence_radius(KOEBE).value, 2 - math.sqrt(3), 1e-9)
    c.close("lemniscate", univalence_radius(LEM).value, 0.3524, 1e-4)
    c.close("exp", univalence_radius(PsiSpec.exponential()).value, 0.3237, 1e-4)
    c.close("sigmoid", univalence_radius(PsiSpec.sigmoid()).value, 0.358473, 1e-6)
    for name, eq in {
        "diskm:2": lambda r: (1 + r) * (1 - r) ** 2 - 2 * r * (1 + 0.5 * r),
        "bernoulli": lambda r: (1 - r * r) * (np.sqrt(1 + r * r) - r) - 2 * r,
    }.items():
        res = univalence_radius(PsiSpec.parse(name))
        c.holds(f"{name} residual", res.residual < 1e-9, f"residual {res.residual:.3g}")
        c.close(f"{name} vs dense-scan root", res.value, dense_root(eq, 0.0, 0.6), 1e-9)
    c.finish()


TABLE = {
    0.0: [0.1952, 0.195106, 0.195106, 0.195106],
    0.5: [0.181806, 0.181742, 0.181742, 0.181742],
    0.9: [0.17048, 0.170435, 0.170435, 0.170435],
}


def test_ac2_table1():
    c = Criterion(2, "truncated fully-convex grid (table_printed reading)")
    for beta, row in TABLE.items():
        for k, printed in zip((5, 10, 20, None), row):
            got = fully_convex_radius(KEXP, beta, TABLE_PRINTED, k_max=k).value
            c.close(f"beta={beta} k={k or 'inf'}", got, printed, 1e-4 if k == 5 else 1e-5)
    c.finish()


def test_ac3_figure_constants():
    c = Criterion(3, "figure constants (lemniscate, beta = 0)")
    c.close("fully starlike", fully_starlike_radius(LEM).value, 0.238778, 1e-5)
    c.close("improved", fully_starlike_radius_improved(LEM).value, 0.3524, 1e-4)
    c.close("sense-preserving variant", fully_starlike_radius_improved(LEM, sense_preserving=True).value, 0.43016, 1e-5)
    c.finish()


def test_ac4_bernardi_uniform():
    c = Criterion(4, "Bernardi uniformly-starlike radius (kappa-exp)")
    val = bernardi_radius(KEXP, kind="uniformly_starlike").value
    c.close("printed value", val, 0.201424, 1e-4)
    c.close("closed form ln(1 + ln 5/4)", val, math.log(1 + math.log(1.25)), 1e-9)
    c.finish()


def test_ac5_close_to_convex():
    c = Criterion(5, "close-to-convexity radii")
    c.close("lemniscate quartic", close_to_convex_radius("lemniscate").value, 0.3119, 1e-4)
    c.close("sigmoid SG", close_to_convex_radius("sigmoid_sg").value, 0.3729, 1e-4)
    c.close("general janowski:1,-1", close_to_convex_radius("general", spec=KOEBE).value, 0.2, 1e-9)
    for n in range(1, 5):
        oracle = dense_root(monomial_equation(n), 0.0, 0.6, step=1e-6)
        c.close(f"monomial n={n}", close_to_convex_radius("monomial", n=n).value, oracle, 1e-8)
    c.finish()


def test_ac6_counterexamples():
    c = Criterion(6, "counterexample suite")
    reports = {r.check_id: r for r in counterexample_suite(grid=(1024, 1024))}
    z = -0.75
    h1 = (1 + z) / (1 - z) ** 3
    g1 = 1 / (2 * (1 - z) ** 2)
    c.close("G ratio at -3/4 (closed form)", g1 / h1, 3.5, 1e-12)
    c.holds("G report quotes 3.5", "=3.5;" in reports["sense-preserving[G]"].notes, reports["sense-preserving[G]"].notes)
    dil = reports["dilatation-bound[F]"]
    c.holds("F max |dilatation| < 1 on 1024^2", dil.passed and tuple(dil.grid) == (1024, 1024), dil.notes)
    for key in ("injectivity[F]", "injectivity[F-stated]"):
        rep = reports[key]
        c.holds(f"{key} witness", not rep.passed and "|f(z1)-f(z2)|" in rep.notes, rep.notes)
    lam = reports["fully-starlike[Lambda01[K]]"]
    c.holds("Lambda01[K] fully-starlike failure radius", not lam.passed and 0 < lam.radius < 1, lam.notes)
    c.finish()


def test_ac7_series_identities():
    c = Criterion(7, "series identities")
    for spec in CATALOG:
        h = extremal_hpsi(spec, 32)
        ratio = h.derive() * reciprocal(PowerSeries(h.coeffs[1:]))
        err = float(np.max(np.abs(ratio.coeffs - psi_series(spec, 31).coeffs)))
        c.holds(f"z h'/h = psi [{spec.name}]", err <= 1e-11, f"max err {err:.3g}")
        rs = np.linspace(0.0, 0.5, 51)
        series = hpsi_prime_series(spec, rs)
        closed = np.array([hpsi_prime_closed(spec, r) for r in rs])
        err = float(np.max(np.abs(series - closed)))
        c.holds(f"h' closed vs series [{spec.name}]", err <= 1e-10, f"max err {err:.3g}")
    rng = np.random.default_rng(7)
    for n in range(1, 17):
        a, b = rng.standard_normal(n), rng.standard_normal(n)
        got = hadamard(PowerSeries(a), PowerSeries(b)).coeffs
        c.holds(f"Hadamard N={n}", np.allclose(got, brute_hadamard(a, b), rtol=0, atol=0))
    c.finish()


def oracle_coeffs(spec):
    if spec == KOEBE:
        return np.arange(401, dtype=float)
    if spec == KEXP:
        return kappa_exp_hpsi(60)
    return hpsi_by_recurrence(psi_coefficients(spec.name, 80), 80)


def test_ac8_property_suites(matrix_reports):
    c = Criterion(8, "property suites")
    betas = np.linspace(0.0, 0.95, 20)
    alphas = np.linspace(0.05, 0.95, 19)
    for spec in MATRIX_SPECS:
        for name, fn in {
            "fully-starlike": lambda b: fully_starlike_radius(spec, b).value,
            "improved": lambda b: fully_starlike_radius_improved(spec, b).value,
            "fully-convex proof": lambda b: fully_convex_radius(spec, b, PROOF_CONSISTENT).value,
            "fully-convex table": lambda b: fully_convex_radius(spec, b, TABLE_PRINTED).value,
            "bernardi fully-starlike": lambda b: bernardi_radius(spec, b, "fully_starlike").value,
            "bernardi fully-convex": lambda b: bernardi_radius(spec, b, "fully_convex").value,
        }.items():
            vals = np.array([fn(b) for b in betas])
            c.holds(f"beta non-increasing [{name}, {spec.name}]", np.all(np.diff(vals) <= 1e-12))
        vals = np.array([strongly_starlike_radius(spec, a).value for a in alphas])
        c.holds(f"alpha non-decreasing [strong, {spec.name}]", np.all(np.diff(vals) >= -1e-12))

    # dense-scan oracle; solver tolerance 1e-12, so 10x is 1e-11
    tol = 1e-11
    for spec in MATRIX_SPECS:
        a = oracle_coeffs(spec)
        for beta in (0.0, 0.5):
            checks = {
                "fully-starlike": (fully_starlike_radius(spec, beta).value, lambda n: n, (1 - beta) / 4),
                "fully-convex proof": (fully_convex_radius(spec, beta, PROOF_CONSISTENT).value, lambda n: n * n, (1 - beta) / 4),
                "fully-convex table": (fully_convex_radius(spec, beta, TABLE_PRINTED).value, lambda n: n * n, (5 - beta) / 4),
            }
            for name, (got, w, rhs) in checks.items():
                oracle = min(1 / 3, dense_root(poly_equation(a, w, rhs), 0.0, 0.9, step=1e-5))
                c.close(f"oracle {name} [{spec.name}, beta={beta}]", got, oracle, tol)
        oracle = min(1 / 3, dense_root(poly_equation(a, lambda n: n, 0.25), 0.0, 0.9, step=1e-5))
        c.close(f"oracle uniformly-starlike [{spec.name}]", uniform_radius(spec, "starlike").value, oracle, tol)
    c.close("oracle univalence koebe", univalence_radius(KOEBE).value, dense_root(lambda r: (1 - r * r) * (1 - r) / (1 + r) - 2 * r, 0, 0.6), tol)
    c.close("oracle lemniscate quartic", close_to_convex_radius("lemniscate").value, dense_root(lemniscate_quartic, 0, 0.6), tol)
    c.close("oracle sigmoid SG", close_to_convex_radius("sigmoid_sg").value, dense_root(sigmoid_sg_equation, 0, 0.6), tol)

    c.holds("matrix size 3x4x7", len(matrix_reports) == len(MATRIX_PSI) * len(DILATATION_MATRIX) * 7, str(len(matrix_reports)))
    bad = [r.check_id for r in matrix_reports if not (r.passed and r.min_margin > 1e-9)]
    c.holds("matrix margins positive at 0.99x", not bad, ", ".join(bad[:5]))

    worst = 0.0
    for spec in MATRIX_SPECS:
        r = 0.9 * univalence_radius(spec).value
        for phi in DILATATION_MATRIX:
            f = build_harmonic(spec, phi, "product", r_max=r)
            for rho in (0.5 * r, r):
                _, _, z = polar_grid(rho, (1, 256))
                z = z.ravel()
                worst = max(worst, float(np.max(np.abs(arg_derivative(f, z) - arg_derivative_fd(f, z)))))
    c.holds("finite-difference d/dtheta arg f", worst < 1e-6, f"max err {worst:.3g}")
    c.finish()


def test_ac9_determinism(tmp_path):
    c = Criterion(9, "byte-identical CLI output")
    runs = {
        "csv": ["plot", "--preset", "figure2-right", "--samples", "512"],
        "svg": ["plot", "--preset", "figure3", "--samples", "512", "--format", "svg"],
        "json": ["radius", "--theorem", "fully-convex", "--psi", "kappa-exp", "--format", "json"],
        "table1 csv": ["table1"],
    }
    for label, argv in runs.items():
        blobs = []
        for i in range(2):
            path = tmp_path / f"{label.replace(' ', '_')}_{i}"
            code = cli.main(argv + ["--output", str(path)])
            blobs.append(path.read_bytes() if code == 0 else b"")
        c.holds(label, blobs[0] == blobs[1] and len(blobs[0]) > 0)
    c.holds("json parses", "readings" in json.loads((tmp_path / "json_0").read_text()))
    c.finish()


@pytest.mark.parametrize("reading", READINGS)
def test_readings_always_reported(reading):
    # Not a numbered criterion: both readings must be computable for every matrix generator.
    for spec in MATRIX_SPECS:
        assert 0 < fully_convex_radius(spec, 0.0, reading).value <= 1 / 3
