"""Standard quantum oscillator algebra U_z(h(4)) with colour group C* x C*.

Generators ``N``, ``M``, ``A+``, ``A-``. A colour ``(nu_+, nu_-)`` acts by
``M -> nu_+ nu_- M``, ``A+ -> nu_+ A+``, ``A- -> nu_- A-`` and moves the
deformation parameter to ``nu_+ nu_- z``. All coloured maps are written in
terms of the base parameter ``z``.
"""

from __future__ import annotations

import numpy as np

from coloured_hopf import cmatrix as cm
from coloured_hopf.colour import H4Params
from coloured_hopf.errors import InvalidParameter
from coloured_hopf.hopfsym import (
    ZERO,
    Element,
    ExpBilinear,
    ExpGen,
    Representation,
    StructureMaps,
    TensorExpr,
    Word,
    element,
    eval_tensor_expr,
    pair,
    word,
)

GENERATORS = ("N", "M", "A+", "A-")


def _unit(i: int, j: int) -> np.ndarray:
    e = np.zeros((3, 3), dtype=np.complex128)
    e[i, j] = 1.0
    return e


def h4_rep() -> Representation:
    return Representation(
        "h4[3]",
        {"N": _unit(1, 1), "M": _unit(0, 2), "A+": _unit(1, 2), "A-": _unit(0, 1)},
    )


class H4Maps(StructureMaps):
    generators = GENERATORS

    def __init__(self, params: H4Params):
        if params.z == 0:
            raise InvalidParameter("z must be nonzero")
        self.params = params
        self.z = params.z

    def sigma(self, nu, label):
        self._known(label)
        scale = {"N": 1.0, "M": nu[0] * nu[1], "A+": nu[0], "A-": nu[1]}[label]
        return element(word(label, coeff=scale))

    def delta(self, lam, mu, nu, label):
        self._known(label)
        z = self.z
        if label == "N":
            return pair(1, word("N"), Word()) + pair(1, Word(), word("N"))
        if label == "M":
            nn = nu[0] * nu[1]
            return pair(lam[0] * lam[1] / nn, word("M"), Word()) + pair(mu[0] * mu[1] / nn, Word(), word("M"))
        if label == "A+":
            return (pair(lam[0] / nu[0], word("A+"), Word())
                    + pair(mu[0] / nu[0], word(ExpGen(-lam[0] * lam[1] * z, "M")), word("A+")))
        return (pair(lam[1] / nu[1], word("A-"), word(ExpGen(mu[0] * mu[1] * z, "M")))
                + pair(mu[1] / nu[1], Word(), word("A-")))

    def epsilon(self, nu, label):
        self._known(label)
        return 0j

    def antipode(self, mu, nu, label):
        self._known(label)
        if label == "N":
            return element(word("N", coeff=-1))
        mm = mu[0] * mu[1]
        if label == "M":
            return element(word("M", coeff=-mm / (nu[0] * nu[1])))
        k, sign = (0, 1) if label == "A+" else (1, -1)
        return element(word(label, ExpGen(sign * mm * self.z, "M"), coeff=-mu[k] / nu[k]))

    def antipode_inverse(self, mu, nu, label):
        # S_z^-1(A+-) = -A+- e^{+-zM} coincides with S_z; only the colour labels swap roles
        self._known(label)
        if label == "N":
            return element(word("N", coeff=-1))
        nn = nu[0] * nu[1]
        if label == "M":
            return element(word("M", coeff=-nn / (mu[0] * mu[1])))
        k, sign = (0, 1) if label == "A+" else (1, -1)
        return element(word(label, ExpGen(sign * nn * self.z, "M"), coeff=-nu[k] / mu[k]))

    def sinh_term(self) -> Element:
        """``sinh(z M) / z`` as an element."""
        z = self.z
        return element(word(ExpGen(z, "M"), coeff=1 / (2 * z)),
                       word(ExpGen(-z, "M"), coeff=-1 / (2 * z)))

    def commutator(self, a: str, b: str) -> Element:
        self._known(a)
        self._known(b)
        if a == b or "M" in (a, b):
            return ZERO
        if a == "N":
            return element(word(b, coeff=1 if b == "A+" else -1))
        if b == "N":
            return element(word(a, coeff=-1 if a == "A+" else 1))
        if a == "A-":
            return self.sinh_term()
        return self.sinh_term().scaled(-1)

    def universal_R(self, lam, mu, n_max: int | None = None) -> TensorExpr:
        z = self.z
        return TensorExpr((
            ExpBilinear(-lam[0] * lam[1] * z, "M", "N"),
            ExpBilinear(-mu[0] * mu[1] * z, "N", "M"),
            ExpBilinear(2 * lam[1] * mu[0] * z, "A-", "A+"),
        ))


def h4_structure_maps(z: complex) -> H4Maps:
    return H4Maps(H4Params(complex(z)))


def h4_universal_R(z, lam, mu) -> TensorExpr:
    return h4_structure_maps(z).universal_R(lam, mu)


def h4_R_matrix(z, lam, mu) -> np.ndarray:
    rep = h4_rep()
    return eval_tensor_expr(h4_universal_R(z, lam, mu), rep, rep)


def closed_form_R9(z, lam, mu) -> np.ndarray:
    z = complex(z)
    d = h4_rep()
    i3, o3 = cm.identity(3), np.zeros((3, 3), dtype=np.complex128)
    return np.block([
        [i3, 2 * lam[1] * mu[0] * z * d["A+"], -lam[0] * lam[1] * z * d["N"]],
        [o3, i3 - mu[0] * mu[1] * z * d["M"], o3],
        [o3, o3, i3],
    ])

