"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are printed
straight to the terminal. Residuals are max-abs differences scaled by
``max(1, largest entry involved)``; for spin 1/2 and the oscillator the
absolute residual is held to the same tolerance.
"""

import time

import numpy as np
import pytest

from coloured_hopf import cmatrix as cm
from coloured_hopf.colour import GROUPS, H4Params, act_params, compose, inverse_colour, random_colour
from coloured_hopf.models import closed_form_R4, closed_form_R9, gl2_R_matrix, h4_R_matrix
from coloured_hopf.verify import (
    Setup,
    SuiteConfig,
    check_fixed_colour_hopf,
    hopf_axiom_parts,
    reports_to_json,
    run_suite,
    sample_params,
)

TOL = 1e-10
CLOSED_TOL = 1e-12
GROUP_TOL = 1e-14
TRIALS = 100
SEED = 42


@pytest.fixture
def verdict(capsys):
    def say(n, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        assert ok, f"criterion {n} failed: {detail}"

    return say


@pytest.fixture(scope="module")
def default_run():
    t0 = time.perf_counter()
    reports = run_suite(SuiteConfig(trials=TRIALS, seed=SEED))
    return reports, time.perf_counter() - t0


def summarise(reports, checks):
    picked = [r for r in reports if r.check in checks]
    draws = {m: len({r.trial for r in picked if r.model == m}) for m in sorted({r.model for r in picked})}
    bad = [r for r in picked if not r.passed]
    worst = max(r.residual for r in picked)
    worst_abs = max(r.abs_residual for r in picked)
    ok = bool(picked) and not bad and worst_abs < TOL
    detail = (f"{len(picked)} checks, draws per model {draws}, max residual {worst:.2e}, "
              f"max absolute {worst_abs:.2e}, failures {len(bad)}")
    if bad:
        r = bad[0]
        detail += f" (first: {r.check} {r.model} trial {r.trial} seed {r.seed})"
    return ok, detail


def test_criterion_01_gl2_closed_form(verdict):
    rng = np.random.default_rng([SEED, 1])
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        p = sample_params("gl2", rng)
        lam, mu = random_colour(GROUPS["gl2"], rng)[0], random_colour(GROUPS["gl2"], rng)[0]
        r = gl2_R_matrix(p.q, p.s, lam, mu, renormalize=True)
        worst = max(worst, cm.max_abs_diff(r, closed_form_R4(p.q, p.s, lam, mu)))
    dt = time.perf_counter() - t0
    verdict(1, "gl(2) series R equals the displayed 4x4 matrix", worst < CLOSED_TOL and dt < 1,
            f"50 draws, max |diff| {worst:.2e}, {dt:.2f} s")


def test_criterion_02_h4_closed_form(verdict):
    rng = np.random.default_rng([SEED, 2])
    g = GROUPS["h4"]
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        z = sample_params("h4", rng).z
        lam, mu = random_colour(g, rng), random_colour(g, rng)
        worst = max(worst, cm.max_abs_diff(h4_R_matrix(z, lam, mu), closed_form_R9(z, lam, mu)))
    dt = time.perf_counter() - t0
    verdict(2, "h(4) product of exponentials equals the 9x9 block matrix", worst < CLOSED_TOL and dt < 1,
            f"50 draws, max |diff| {worst:.2e}, {dt:.2f} s")


def test_criterion_03_coloured_ybe(verdict):
    t0 = time.perf_counter()
    reps = run_suite(SuiteConfig(trials=TRIALS, seed=SEED, spins=(0.5, 1, 1.5), suites=("ybe",)))
    dt = time.perf_counter() - t0
    bad = [r for r in reps if not r.passed]
    low = [r for r in reps if r.model == "h4" or r.spins == [0.5, 0.5, 0.5]]
    low_abs = max(r.abs_residual for r in low)
    triples = sorted({tuple(r.spins) for r in reps if r.model == "gl2"})
    ok = not bad and low_abs < TOL and dt < 30 and (0.5, 1, 1.5) in triples
    verdict(3, "coloured Yang-Baxter equation", ok,
            f"{len(reps)} checks, gl2 spin triples {triples}, max residual "
            f"{max(r.residual for r in reps):.2e}, spin-1/2 and h4 max absolute {low_abs:.2e}, "
            f"failures {len(bad)}, {dt:.1f} s")


def test_criterion_04_hopf_axioms(verdict, default_run):
    ok, detail = summarise(default_run[0], {"hopf_axioms", "colour_covariance"})
    verdict(4, "coassociativity, counit, antipode and colour covariance", ok, detail)


def test_criterion_05_bialgebra(verdict, default_run):
    ok, detail = summarise(default_run[0], {"bialgebra"})
    verdict(5, "coproduct and counit are algebra maps", ok, detail)


def test_criterion_06_almost_cocommutative(verdict, default_run):
    ok, detail = summarise(default_run[0], {"almost_cocommutative"})
    verdict(6, "R intertwines the flipped coproduct", ok, detail)


def test_criterion_07_quasitriangular(verdict, default_run):
    ok, detail = summarise(default_run[0], {"quasitriangular"})
    verdict(7, "quasitriangularity, both lines", ok, detail)


def test_criterion_08_r_identities(verdict, default_run):
    ok, detail = summarise(default_run[0], {"counit_on_R", "antipode_on_R"})
    verdict(8, "counit and antipode applied to R", ok, detail)


def test_criterion_09_fixed_colour(verdict):
    slots = ("alpha", "beta", "gamma", "lam", "mu", "nu", "lam_p", "mu_p")
    worst, fails, exact = 0.0, 0, True
    for idx, model in enumerate(("gl2", "h4")):
        rng = np.random.default_rng([SEED, 9, idx])
        setup = Setup(model, sample_params(model, rng))
        for _ in range(20):
            rep = check_fixed_colour_hopf(setup, random_colour(setup.group, rng))
            worst = max(worst, rep.residual)
            fails += not rep.passed or rep.abs_residual >= TOL
        one = setup.group.identity
        plain = hopf_axiom_parts(setup, dict.fromkeys(slots, one))
        exact &= check_fixed_colour_hopf(setup, one).details == dict(plain)
    verdict(9, "fixed-colour Hopf algebras", fails == 0 and exact,
            f"20 colours per model, max residual {worst:.2e}, failures {fails}, "
            f"identity colour reproduces the plain axioms exactly: {exact}")


def test_criterion_10_degenerate_limits(verdict):
    rng = np.random.default_rng([SEED, 10])
    worst_q, worst_z = 0.0, 0.0
    for _ in range(20):
        s, lam, mu = (random_colour(GROUPS["gl2"], rng)[0] for _ in range(3))
        worst_q = max(worst_q, cm.max_abs_diff(gl2_R_matrix(1, s, lam, mu), np.eye(4)))
        lam2, mu2 = random_colour(GROUPS["h4"], rng), random_colour(GROUPS["h4"], rng)
        worst_z = max(worst_z, cm.max_abs_diff(h4_R_matrix(1e-15, lam2, mu2), np.eye(9)))
    verdict(10, "q = 1 and z -> 0 give identity R-matrices", worst_q < CLOSED_TOL and worst_z < CLOSED_TOL,
            f"q = 1 max |R - I| {worst_q:.2e}, z = 1e-15 max |R - I| {worst_z:.2e}")


def test_criterion_11_colour_group_laws(verdict):
    rng = np.random.default_rng([SEED, 11])
    worst = 0.0

    def rel(a, b):
        return max(abs(x - y) / max(abs(x), abs(y)) for x, y in zip(a, b))

    for _ in range(1000):
        for g in GROUPS.values():
            a, b, c = (random_colour(g, rng) for _ in range(3))
            worst = max(
                worst,
                rel(compose(g, compose(g, a, b), c), compose(g, a, compose(g, b, c))),
                rel(compose(g, a, g.identity), a),
                rel(compose(g, g.identity, a), a),
                rel(compose(g, a, inverse_colour(g, a)), g.identity),
            )
        g = GROUPS["h4"]
        a, b = random_colour(g, rng), random_colour(g, rng)
        p = H4Params(sample_params("h4", rng).z)
        two = act_params("h4", act_params("h4", p, b), a).z
        one = act_params("h4", p, compose(g, a, b)).z
        worst = max(worst, abs(two - one) / abs(one))
    verdict(11, "colour group laws and parameter action", worst < GROUP_TOL,
            f"1000 triples per group, max relative error {worst:.2e}")


def test_criterion_12_determinism(verdict, default_run):
    reports, dt = default_run
    first = reports_to_json(reports)
    t0 = time.perf_counter()
    second = reports_to_json(run_suite(SuiteConfig(trials=TRIALS, seed=SEED)))
    dt2 = time.perf_counter() - t0
    small = reports_to_json(run_suite(SuiteConfig(trials=1, seed=7)))
    same = first == second and small == reports_to_json(run_suite(SuiteConfig(trials=1, seed=7)))
    verdict(12, "byte-identical reports and runtime", same and max(dt, dt2) < 60,
            f"{len(reports)} reports identical across runs: {same}, default suite {dt:.1f} s and {dt2:.1f} s")
