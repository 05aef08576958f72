"""Residual checks of the coloured Hopf identities, and the seeded suite runner.

Every check evaluates both sides of an identity as matrices in finite
dimensional representations. A residual is the max-abs difference divided
by ``max(1, scale)``, where the scale is the largest entry of either side, or
for a product compared with the identity, the product of the factors' largest
entries. The absolute difference is reported next to it.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass, field

import numpy as np

from coloured_hopf import cmatrix as cm
from coloured_hopf.colour import (
    GROUPS,
    Gl2Params,
    H4Params,
    act_params,
    inverse_colour,
    random_colour,
    two_index_colour,
)
from coloured_hopf.hopfsym import (
    AntipodeInverseMap,
    AntipodeMap,
    DeltaMap,
    EpsilonMap,
    RepMap,
    SigmaMap,
    Word,
    apply_pair,
    eval_element,
    eval_tensor_expr,
    extend_epsilon,
    map_element,
    map_pair_sum,
    map_word,
)
from coloured_hopf.models import gl2_rep, h4_rep, series_length, structure_maps

DEFAULT_TOL = 1e-10
SUITES = ("ybe", "quasi", "hopf", "bialgebra", "cocomm", "r-identities", "fixed-colour")


@dataclass
class CheckReport:
    check: str
    model: str
    params: dict
    colours: list
    residual: float
    tol: float
    abs_residual: float = 0.0
    seed: int | None = None
    trial: int | None = None
    spins: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.tol)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "model": self.model,
            "params": {k: _cjson(v) for k, v in self.params.items()},
            "colours": [[_cjson(c) for c in col] for col in self.colours],
            "residual": self.residual,
            "abs_residual": self.abs_residual,
            "tol": self.tol,
            "pass": self.passed,
            "seed": self.seed,
            "trial": self.trial,
            "spins": list(self.spins),
            "details": dict(self.details),
        }


def _cjson(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1)


class Setup:
    """A model at fixed parameters, with its representations and R-matrices."""

    def __init__(self, model: str, params, zeta: complex = 1.0):
        self.model = model
        self.params = params
        self.zeta = zeta
        self.maps = structure_maps(model, params)
        self.group = GROUPS[model]
        self._reps = {}

    def rep(self, j: float = 0.5):
        if self.model == "h4":
            j = None
        if j not in self._reps:
            self._reps[j] = h4_rep() if j is None else gl2_rep(j, self.zeta, self.params.q)
        return self._reps[j]

    def R_expr(self, lam, mu, j_left: float = 0.5, j_right: float = 0.5):
        """Universal R with the series cut where the target legs make it vanish.

        ``j_left``/``j_right`` bound the weight spread of each leg; for a leg that is
        itself a tensor product of spins ``a`` and ``b`` pass ``a + b``.
        """
        n_max = series_length(j_left, j_right) if self.model == "gl2" else None
        return self.maps.universal_R(lam, mu, n_max)

    def R(self, lam, mu, j_left: float = 0.5, j_right: float = 0.5) -> np.ndarray:
        return eval_tensor_expr(self.R_expr(lam, mu, j_left, j_right), self.rep(j_left), self.rep(j_right))

    def sigma(self, up, down, j: float = 0.5) -> SigmaMap:
        """Leg map for ``sigma^up_down``."""
        return SigmaMap(self.maps, two_index_colour(self.group, up, down), self.rep(j))

    def delta(self, lam, mu, nu, j: float = 0.5) -> DeltaMap:
        return DeltaMap(self.maps, lam, mu, nu, self.rep(j), self.rep(j))

    def report(self, check, colours, residual, tol, details=None, spins=()) -> CheckReport:
        return CheckReport(
            check=check,
            model=self.model,
            params=self.params.as_dict(),
            colours=[tuple(c) for c in colours],
            residual=float(residual),
            tol=tol,
            spins=list(spins) if self.model == "gl2" else [],
            details=details or {},
        )


class Residuals(dict):
    """Named sub-identity residuals: scaled residual per name, absolute alongside."""

    def __init__(self):
        super().__init__()
        self.absolute = {}

    def add(self, name: str, lhs, rhs, scale: float | None = None) -> None:
        lhs, rhs = cm.cmat(lhs), cm.cmat(rhs)
        self[name] = cm.scaled_diff(lhs, rhs, scale)
        self.absolute[name] = cm.max_abs_diff(lhs, rhs)


def _finish(setup: Setup, check: str, colours, parts: Residuals, tol: float, spins=()) -> CheckReport:
    rep = setup.report(check, colours, max(parts.values()), tol, details=dict(parts), spins=spins)
    rep.abs_residual = max(parts.absolute.values())
    return rep


# -- individual checks ---------------------------------------------------------


def check_coloured_ybe(setup: Setup, lam, mu, nu, spins=(0.5, 0.5, 0.5),
                       tol: float = DEFAULT_TOL, corrupt: float = 0.0, at: tuple = (0, 0)) -> CheckReport:
    """``R^{lam,mu}_12 R^{lam,nu}_13 R^{mu,nu}_23 = R^{mu,nu}_23 R^{lam,nu}_13 R^{lam,mu}_12``.

    ``corrupt`` adds that amount to entry ``at`` of ``R^{lam,mu}``, as a sensitivity control.
    """
    j1, j2, j3 = spins
    dims = (setup.rep(j1).dim, setup.rep(j2).dim, setup.rep(j3).dim)
    r12 = setup.R(lam, mu, j1, j2)
    if corrupt:
        r12 = r12.copy()
        r12[at] += corrupt
    r13 = setup.R(lam, nu, j1, j3)
    r23 = setup.R(mu, nu, j2, j3)
    e12 = cm.embed(r12, (1, 2), dims)
    e13 = cm.embed(r13, (1, 3), dims)
    e23 = cm.embed(r23, (2, 3), dims)
    parts = Residuals()
    parts.add("ybe", e12 @ e13 @ e23, e23 @ e13 @ e12)
    return _finish(setup, "coloured_ybe", [lam, mu, nu], parts, tol, spins)


def check_quasitriangular(setup: Setup, alpha, beta, gamma, lam, mu, j: float = 0.5,
                          tol: float = DEFAULT_TOL) -> CheckReport:
    rep = setup.rep(j)
    d = rep.dim
    dims = (d, d, d)
    r_ag = cm.embed(setup.R(alpha, gamma, j, j), (1, 3), dims)
    # (Delta^{a,b}_lam (x) sigma^g_mu)(R^{lam,mu}) = R^{a,g}_13 R^{b,g}_23
    lhs1 = apply_pair(setup.delta(alpha, beta, lam, j), setup.sigma(gamma, mu, j), setup.R_expr(lam, mu, 2 * j, j))
    rhs1 = r_ag @ cm.embed(setup.R(beta, gamma, j, j), (2, 3), dims)
    # (sigma^a_lam (x) Delta^{b,g}_mu)(R^{lam,mu}) = R^{a,g}_13 R^{a,b}_12
    lhs2 = apply_pair(setup.sigma(alpha, lam, j), setup.delta(beta, gamma, mu, j), setup.R_expr(lam, mu, j, 2 * j))
    rhs2 = r_ag @ cm.embed(setup.R(alpha, beta, j, j), (1, 2), dims)
    parts = Residuals()
    parts.add("delta_left", lhs1, rhs1)
    parts.add("delta_right", lhs2, rhs2)
    return _finish(setup, "quasitriangular", [alpha, beta, gamma, lam, mu], parts, tol, (j,))


def check_almost_cocommutative(setup: Setup, lam, mu, nu, j: float = 0.5,
                               tol: float = DEFAULT_TOL) -> CheckReport:
    """``tau o Delta^{mu,lam}_nu(a) = R^{lam,mu} Delta^{lam,mu}_nu(a) (R^{lam,mu})^-1``.

    Checked as ``tau Delta^{mu,lam}(a) R = R Delta^{lam,mu}(a)``.
    """
    d = setup.rep(j).dim
    r = setup.R(lam, mu, j, j)
    tau = cm.swap(d, d)
    flipped = setup.delta(mu, lam, nu, j)
    straight = setup.delta(lam, mu, nu, j)
    parts = Residuals()
    for a in setup.maps.generators:
        # intertwining form, free of a numerical inverse
        lhs = tau @ flipped.generator_matrix(a) @ tau.T @ r
        rhs = r @ straight.generator_matrix(a)
        scale = cm.max_abs(r) * max(cm.max_abs(flipped.generator_matrix(a)), cm.max_abs(straight.generator_matrix(a)))
        parts.add(a, lhs, rhs, scale)
    return _finish(setup, "almost_cocommutative", [lam, mu, nu], parts, tol, (j,))


def _leg_product(ps, f, g) -> np.ndarray:
    """``m o (f (x) g)`` applied to a word-pair sum: sum of ``f(u) g(v)``."""
    out = np.zeros((f.dim, f.dim), dtype=np.complex128)
    for c, u, v in ps.terms:
        out = out + c * (map_word(f, u) @ map_word(g, v))
    return out


def hopf_axiom_parts(setup: Setup, c: dict, j: float = 0.5) -> dict:
    """Residuals of coassociativity, counit and antipode axioms per generator.

    ``c`` maps slot names (alpha, beta, gamma, lam, mu, nu, lam_p, mu_p) to colours.
    """
    maps = setup.maps
    rep = setup.rep(j)
    eye = cm.identity(rep.dim)
    al, be, ga, lam, mu, nu, lp, mp = (c[k] for k in ("alpha", "beta", "gamma", "lam", "mu", "nu", "lam_p", "mu_p"))
    parts = Residuals()
    for a in maps.generators:
        d1 = maps.delta(lam, mu, nu, a)
        d2 = maps.delta(lp, mp, nu, a)
        coassoc_l = map_pair_sum(d1, setup.delta(al, be, lam, j), setup.sigma(ga, mu, j))
        coassoc_r = map_pair_sum(d2, setup.sigma(al, lp, j), setup.delta(be, ga, mp, j))
        parts.add(f"coassoc[{a}]", coassoc_l, coassoc_r)

        target = eval_element(maps.sigma(two_index_colour(setup.group, al, nu), a), rep)
        counit_l = map_pair_sum(d1, EpsilonMap(maps, lam), setup.sigma(al, mu, j))
        counit_r = map_pair_sum(d2, setup.sigma(al, lp, j), EpsilonMap(maps, mp))
        parts.add(f"counit_left[{a}]", counit_l, target)
        parts.add(f"counit_right[{a}]", counit_r, target)

        unit = maps.epsilon(nu, a) * eye
        anti_l = _leg_product(d1, AntipodeMap(maps, al, lam, rep), setup.sigma(al, mu, j))
        anti_r = _leg_product(d2, setup.sigma(al, lp, j), AntipodeMap(maps, al, mp, rep))
        parts.add(f"antipode_left[{a}]", anti_l, unit)
        parts.add(f"antipode_right[{a}]", anti_r, unit)
    return parts


def _slot_colours(c: dict) -> list:
    return [c[k] for k in ("alpha", "beta", "gamma", "lam", "mu", "nu", "lam_p", "mu_p")]


def check_hopf_axioms(setup: Setup, colours: dict, j: float = 0.5, tol: float = DEFAULT_TOL) -> CheckReport:
    parts = hopf_axiom_parts(setup, colours, j)
    return _finish(setup, "hopf_axioms", _slot_colours(colours), parts, tol, (j,))


def check_colour_covariance(setup: Setup, lam, mu, nu, alpha, beta, gamma, j: float = 0.5,
                            tol: float = DEFAULT_TOL) -> CheckReport:
    """How the coloured maps transform under ``sigma^x_y``, per generator."""
    maps, g = setup.maps, setup.group
    rep = setup.rep(j)
    parts = Residuals()
    for a in maps.generators:
        target = map_pair_sum(maps.delta(lam, mu, nu, a), RepMap(rep), RepMap(rep))
        moved = map_pair_sum(maps.delta(alpha, beta, nu, a), setup.sigma(lam, alpha, j), setup.sigma(mu, beta, j))
        pulled = map_element(setup.delta(lam, mu, gamma, j), maps.sigma(two_index_colour(g, gamma, nu), a))
        parts.add(f"delta_target[{a}]", moved, target)
        parts.add(f"delta_source[{a}]", pulled, target)

        pre = maps.sigma(two_index_colour(g, alpha, nu), a)
        eps = sum(extend_epsilon(maps, alpha, w) for w in pre.terms)
        parts.add(f"counit[{a}]", eps, maps.epsilon(nu, a))

        s_target = eval_element(maps.antipode(mu, nu, a), rep)
        s_moved = map_element(setup.sigma(mu, alpha, j), maps.antipode(alpha, nu, a))
        s_pulled = map_element(AntipodeMap(maps, mu, beta, rep), maps.sigma(two_index_colour(g, beta, nu), a))
        parts.add(f"antipode_target[{a}]", s_moved, s_target)
        parts.add(f"antipode_source[{a}]", s_pulled, s_target)
    return _finish(setup, "colour_covariance", [lam, mu, nu, alpha, beta, gamma], parts, tol, (j,))


def check_bialgebra(setup: Setup, lam, mu, nu, j: float = 0.5, tol: float = DEFAULT_TOL) -> CheckReport:
    """Delta and epsilon respect the defining relations of the source algebra.

    For each ordered generator pair ``(a, b)`` the product ``ab`` is rewritten as
    ``ba + [a, b]`` using the relations at the source parameters; its image must
    equal ``Delta(a) Delta(b)``. Same for the counit.
    """
    maps = setup.maps
    source = structure_maps(setup.model, act_params(setup.model, setup.params, nu))
    delta = setup.delta(lam, mu, nu, j)
    gens = maps.generators
    parts = Residuals()
    parts.add("delta_unit", map_word(delta, Word()), cm.identity(delta.dim))
    parts.add("counit_unit", extend_epsilon(maps, nu, Word()), 1)
    for a in gens:
        for b in gens:
            comm = source.commutator(a, b)
            da, db = delta.generator_matrix(a), delta.generator_matrix(b)
            rewritten = db @ da + map_element(delta, comm)
            parts.add(f"delta[{a},{b}]", da @ db, rewritten)
            ea, eb = maps.epsilon(nu, a), maps.epsilon(nu, b)
            e_comm = sum(extend_epsilon(maps, nu, w) for w in comm.terms)
            parts.add(f"counit[{a},{b}]", ea * eb, (eb * ea + e_comm))
    return _finish(setup, "bialgebra", [lam, mu, nu], parts, tol, (j,))


def check_counit_on_R(setup: Setup, lam, mu, alpha, lam_p, mu_p, j: float = 0.5,
                      tol: float = DEFAULT_TOL) -> CheckReport:
    maps = setup.maps
    eye = cm.identity(setup.rep(j).dim)
    left = apply_pair(EpsilonMap(maps, lam), setup.sigma(alpha, mu, j), setup.R_expr(lam, mu, j, j))
    right = apply_pair(setup.sigma(alpha, lam_p, j), EpsilonMap(maps, mu_p), setup.R_expr(lam_p, mu_p, j, j))
    parts = Residuals()
    parts.add("epsilon_left", left, eye)
    parts.add("epsilon_right", right, eye)
    return _finish(setup, "counit_on_R", [lam, mu, alpha, lam_p, mu_p], parts, tol, (j,))


def check_antipode_on_R(setup: Setup, lam, mu, alpha, beta, lam_p, mu_p, j: float = 0.5,
                        tol: float = DEFAULT_TOL) -> CheckReport:
    """``(S^a_lam (x) sigma^b_mu)(R^{lam,mu}) = (R^{a,b})^-1``, and the ``S^-1`` form.

    Compared as products with ``R^{a,b}`` against the identity rather than through
    a numerical inverse.
    """
    maps = setup.maps
    rep = setup.rep(j)
    r_ab = setup.R(alpha, beta, j, j)
    eye = cm.identity(rep.dim**2)
    s_left = apply_pair(AntipodeMap(maps, alpha, lam, rep), setup.sigma(beta, mu, j), setup.R_expr(lam, mu, j, j))
    s_right = apply_pair(setup.sigma(alpha, lam_p, j), AntipodeInverseMap(maps, mu_p, beta, rep),
                         setup.R_expr(lam_p, mu_p, j, j))
    parts = Residuals()
    scale_l = cm.max_abs(s_left) * cm.max_abs(r_ab)
    scale_r = cm.max_abs(s_right) * cm.max_abs(r_ab)
    parts.add("antipode_left", s_left @ r_ab, eye, scale_l)
    parts.add("antipode_left_twosided", r_ab @ s_left, eye, scale_l)
    parts.add("antipode_inverse_right", s_right @ r_ab, eye, scale_r)
    return _finish(setup, "antipode_on_R", [lam, mu, alpha, beta, lam_p, mu_p], parts, tol, (j,))


def fixed_colour_setup(setup: Setup, nu) -> Setup:
    """The base algebra at parameters ``q_nu = act(q, nu^-1)``, so coloured maps at ``nu`` land on ``H_q``."""
    p_nu = act_params(setup.model, setup.params, inverse_colour(setup.group, nu))
    return Setup(setup.model, p_nu, setup.zeta)


def check_fixed_colour_hopf(setup: Setup, nu, j: float = 0.5, tol: float = DEFAULT_TOL) -> CheckReport:
    shifted = fixed_colour_setup(setup, nu)
    slots = dict.fromkeys(("alpha", "beta", "gamma", "lam", "mu", "nu", "lam_p", "mu_p"), nu)
    parts = hopf_axiom_parts(shifted, slots, j)
    rep = _finish(shifted, "fixed_colour_hopf", [nu], parts, tol, (j,))
    rep.params = setup.params.as_dict()
    return rep


# -- sampling and the suite -----------------------------------------------------


@dataclass
class SuiteConfig:
    trials: int = 100
    seed: int = 42
    tol: float = DEFAULT_TOL
    models: tuple = ("gl2", "h4")
    spins: tuple = (0.5,)
    suites: tuple = SUITES

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suite(s): {sorted(unknown)}")


Q_PHASE = 0.3


def sample_params(model: str, rng: np.random.Generator):
    """|q|, |s|, |z| uniform in [0.5, 2]; q and s stay near the positive real axis."""
    if model == "gl2":
        q = cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-Q_PHASE, Q_PHASE))
        s = cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-Q_PHASE, Q_PHASE))
        return Gl2Params(q, s)
    return H4Params(cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0)))


def ybe_spin_triples(spins) -> list[tuple]:
    spins = list(spins)
    triples = [(j, j, j) for j in spins]
    if len(spins) > 1:
        mixed = tuple((spins * 3)[:3])
        if mixed not in triples:
            triples.append(mixed)
    return triples


def run_trial(model: str, trial: int, cfg: SuiteConfig) -> list[CheckReport]:
    rng = np.random.default_rng([cfg.seed, ("gl2", "h4").index(model), trial])
    params = sample_params(model, rng)
    setup = Setup(model, params)
    g = setup.group
    names = ("alpha", "beta", "gamma", "lam", "mu", "nu", "lam_p", "mu_p")
    c = {k: random_colour(g, rng) for k in names}
    spins = cfg.spins if model == "gl2" else (0.5,)
    tol = cfg.tol
    out = []
    suites = set(cfg.suites)
    if "ybe" in suites:
        triples = ybe_spin_triples(spins) if model == "gl2" else [(0.5, 0.5, 0.5)]
        for t in triples:
            out.append(check_coloured_ybe(setup, c["lam"], c["mu"], c["nu"], t, tol))
    for j in spins:
        if "quasi" in suites:
            out.append(check_quasitriangular(setup, c["alpha"], c["beta"], c["gamma"], c["lam"], c["mu"], j, tol))
        if "hopf" in suites:
            out.append(check_hopf_axioms(setup, c, j, tol))
            out.append(check_colour_covariance(setup, c["lam"], c["mu"], c["nu"], c["alpha"], c["beta"], c["gamma"], j, tol))
        if "bialgebra" in suites:
            out.append(check_bialgebra(setup, c["lam"], c["mu"], c["nu"], j, tol))
        if "cocomm" in suites:
            out.append(check_almost_cocommutative(setup, c["lam"], c["mu"], c["nu"], j, tol))
        if "r-identities" in suites:
            out.append(check_counit_on_R(setup, c["lam"], c["mu"], c["alpha"], c["lam_p"], c["mu_p"], j, tol))
            out.append(check_antipode_on_R(setup, c["lam"], c["mu"], c["alpha"], c["beta"], c["lam_p"], c["mu_p"], j, tol))
        if "fixed-colour" in suites:
            out.append(check_fixed_colour_hopf(setup, c["nu"], j, tol))
    for r in out:
        r.seed = cfg.seed
        r.trial = trial
    return out


def run_suite(cfg: SuiteConfig) -> list[CheckReport]:
    """Run every selected check for each model and trial; never stops on a failure.

    Each (model, trial) pair draws from its own seed stream, so results do not
    depend on execution order. Reports come back in canonical order.
    """
    reports = []
    for model in cfg.models:
        for trial in range(cfg.trials):
            reports.extend(run_trial(model, trial, cfg))
    reports.sort(key=lambda r: (r.check, r.model, r.trial, tuple(r.spins)))
    return reports


__all__ = [
    "CheckReport",
    "Setup",
    "SuiteConfig",
    "check_almost_cocommutative",
    "check_antipode_on_R",
    "check_bialgebra",
    "check_colour_covariance",
    "check_coloured_ybe",
    "check_counit_on_R",
    "check_fixed_colour_hopf",
    "check_hopf_axioms",
    "check_quasitriangular",
    "run_suite",
]
