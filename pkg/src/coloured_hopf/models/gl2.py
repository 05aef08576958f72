"""Two-parameter quantum algebra U_{q,s}(gl(2)) with colour group C*.

Generators ``J3``, ``J+``, ``J-``, ``Z``. Colours rescale the central
generator, ``sigma^nu(Z) = nu Z``, and leave ``(q, s)`` unchanged.

Powers are taken through principal logarithms of ``q`` and ``s`` only;
compound bases use ``log(q s) = log q + log s`` and ``log(s/q) = log s - log q``
so that the universal R-matrix and its closed form share one branch.
"""

from __future__ import annotations

import cmath

import numpy as np

from coloured_hopf import cmatrix as cm
from coloured_hopf.colour import Gl2Params
from coloured_hopf.errors import InvalidParameter, InvalidSpin
from coloured_hopf.hopfsym import (
    ZERO,
    Element,
    ExpBilinear,
    ExpGen,
    Representation,
    StructureMaps,
    TensorExpr,
    Word,
    WordPairSum,
    element,
    eval_tensor_expr,
    pair,
    word,
)
from coloured_hopf.models.qnumbers import Q_GUARD, Q_REJECT, q_factorial, q_number

GENERATORS = ("J3", "J+", "J-", "Z")
MAX_SPIN = 6


def _c(nu) -> complex:
    return complex(nu[0]) if isinstance(nu, tuple) else complex(nu)


def check_params(p: Gl2Params) -> None:
    if p.q == 0 or p.s == 0:
        raise InvalidParameter("q and s must be nonzero")
    gap = abs(p.q * p.q - 1)
    if Q_GUARD <= gap < Q_REJECT:
        raise InvalidParameter(f"|q^2 - 1| = {gap:.2e} is inside the cancellation band")


def gl2_rep(j: float, zeta: complex = 1.0, q: complex = 1.0) -> Representation:
    """Spin-``j`` representation with basis ordered ``m = j, j-1, ..., -j``."""
    two_j = 2 * j
    if two_j < 0 or abs(two_j - round(two_j)) > 1e-12:
        raise InvalidSpin(f"spin must be a nonnegative half-integer, got {j}")
    if j > MAX_SPIN:
        raise InvalidSpin(f"spin {j} above cap {MAX_SPIN}")
    n = int(round(two_j)) + 1
    ms = [j - k for k in range(n)]
    jp = np.zeros((n, n), dtype=np.complex128)
    for k in range(1, n):
        m = ms[k]
        jp[k - 1, k] = np.sqrt(complex(q_number(j - m, q) * q_number(j + m + 1, q)))
    return Representation(
        f"gl2[j={j}]",
        {
            "J3": np.diag(np.array(ms, dtype=np.complex128)),
            "J+": jp,
            "J-": jp.T.copy(),
            "Z": complex(zeta) * cm.identity(n),
        },
    )


def spin_of(rep: Representation) -> float:
    return (rep.dim - 1) / 2


class Gl2Maps(StructureMaps):
    generators = GENERATORS

    def __init__(self, params: Gl2Params):
        check_params(params)
        self.params = params
        self.q = params.q
        self.lq = cmath.log(params.q)
        self.ls = cmath.log(params.s)

    # sigma^nu(J3) = J3, sigma^nu(J+-) = J+-, sigma^nu(Z) = nu Z
    def sigma(self, nu, label):
        self._known(label)
        return element(word(label, coeff=_c(nu) if label == "Z" else 1.0))

    def delta(self, lam, mu, nu, label):
        self._known(label)
        lam, mu, nu = _c(lam), _c(mu), _c(nu)
        lq, ls = self.lq, self.ls
        if label == "J3":
            return pair(1, word("J3"), Word()) + pair(1, Word(), word("J3"))
        if label == "Z":
            return pair(lam / nu, word("Z"), Word()) + pair(mu / nu, Word(), word("Z"))
        sign = 1 if label == "J+" else -1
        # J+- (x) q^J3 (s/q)^{+-mu Z} + q^-J3 (q s)^{+-lam Z} (x) J+-
        right = word(ExpGen(lq, "J3"), ExpGen(sign * mu * (ls - lq), "Z"))
        left = word(ExpGen(-lq, "J3"), ExpGen(sign * lam * (lq + ls), "Z"))
        return pair(1, word(label), right) + pair(1, left, word(label))

    def epsilon(self, nu, label):
        self._known(label)
        return 0j

    def antipode(self, mu, nu, label):
        self._known(label)
        mu, nu = _c(mu), _c(nu)
        if label == "J3":
            return element(word("J3", coeff=-1))
        if label == "Z":
            return element(word("Z", coeff=-mu / nu))
        sign = 1 if label == "J+" else -1
        # -q^{+-1} s^{-+2 mu Z} J+-
        return element(word(ExpGen(-2 * sign * mu * self.ls, "Z"), label,
                            coeff=-cmath.exp(sign * self.lq)))

    def antipode_inverse(self, mu, nu, label):
        self._known(label)
        mu, nu = _c(mu), _c(nu)
        if label == "J3":
            return element(word("J3", coeff=-1))
        if label == "Z":
            return element(word("Z", coeff=-nu / mu))
        sign = 1 if label == "J+" else -1
        # -q^{-+1} s^{-+2 nu Z} J+-
        return element(word(ExpGen(-2 * sign * nu * self.ls, "Z"), label,
                            coeff=-cmath.exp(-sign * self.lq)))

    def q_bracket_2j3(self) -> Element:
        """``[2 J3]_q`` as an element."""
        if abs(self.q * self.q - 1) < Q_GUARD:
            return element(word("J3", coeff=2))
        d = self.q - 1 / self.q
        return element(word(ExpGen(2 * self.lq, "J3"), coeff=1 / d),
                       word(ExpGen(-2 * self.lq, "J3"), coeff=-1 / d))

    def commutator(self, a: str, b: str) -> Element:
        """``ab - ba`` from the defining relations."""
        self._known(a)
        self._known(b)
        if a == b or "Z" in (a, b):
            return ZERO
        if a == "J3":
            return element(word(b, coeff=1 if b == "J+" else -1))
        if b == "J3":
            return element(word(a, coeff=-1 if a == "J+" else 1))
        if a == "J+":
            return self.q_bracket_2j3()
        return self.q_bracket_2j3().scaled(-1)

    def universal_R(self, lam, mu, n_max: int) -> TensorExpr:
        lam, mu = _c(lam), _c(mu)
        lq, ls = self.lq, self.ls
        terms = []
        for n in range(n_max + 1):
            coeff = (1 - 1 / self.q**2) ** n * cmath.exp(n * (n - 1) / 2 * lq) / q_factorial(n, self.q)
            left = word(ExpGen(lq, "J3"), ExpGen(-lam * (lq + ls), "Z"), "J+") ** n
            right = word(ExpGen(-lq, "J3"), ExpGen(mu * (ls - lq), "Z"), "J-") ** n
            terms.append((coeff, left, right))
        return TensorExpr((
            ExpBilinear(2 * lq, "J3", "J3"),
            ExpBilinear(-2 * lam * lq, "Z", "J3"),
            ExpBilinear(2 * mu * lq, "J3", "Z"),
            WordPairSum(tuple(terms)),
        ))


def gl2_structure_maps(q: complex, s: complex) -> Gl2Maps:
    return Gl2Maps(Gl2Params(complex(q), complex(s)))


def series_length(j_left: float, j_right: float) -> int:
    """Highest surviving power of ``J+ (x) J-`` between spins ``j_left`` and ``j_right``."""
    return int(round(min(2 * j_left, 2 * j_right)))


def gl2_universal_R(q, s, lam, mu, j_left: float = 0.5, j_right: float = 0.5) -> TensorExpr:
    return gl2_structure_maps(q, s).universal_R(lam, mu, series_length(j_left, j_right))


def gl2_R_matrix(q, s, lam, mu, j_left: float = 0.5, j_right: float = 0.5,
                 zeta: complex = 1.0, renormalize: bool = False) -> np.ndarray:
    x = gl2_universal_R(q, s, lam, mu, j_left, j_right)
    r = eval_tensor_expr(x, gl2_rep(j_left, zeta, q), gl2_rep(j_right, zeta, q))
    if renormalize:
        r = cmath.exp(cmath.log(q) / 2) * r
    return r


def closed_form_R4(q, s, lam, mu) -> np.ndarray:
    q, s, lam, mu = (complex(x) for x in (q, s, lam, mu))
    lq, ls = cmath.log(q), cmath.log(s)
    r = np.zeros((4, 4), dtype=np.complex128)
    r[0, 0] = cmath.exp((1 - lam + mu) * lq)
    r[1, 1] = cmath.exp((lam + mu) * lq)
    r[1, 2] = (q - 1 / q) * cmath.exp((mu - lam) * ls)
    r[2, 2] = cmath.exp((-lam - mu) * lq)
    r[3, 3] = cmath.exp((1 + lam - mu) * lq)
    return r

