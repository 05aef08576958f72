"""Colour parameters, colour groups and their action on deformation parameters.

Both concrete colour groups are abelian and multiplicative: ``C* `` for the
gl(2) model and ``C* x C*`` for the oscillator model. A colour is a tuple of
nonzero complex numbers; the group law is componentwise multiplication.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from coloured_hopf.errors import DimensionMismatch, InvalidParameter, ZeroColour

Colour = tuple[complex, ...]


@dataclass(frozen=True)
class ColourGroup:
    name: str
    arity: int

    @property
    def identity(self) -> Colour:
        return (1 + 0j,) * self.arity

    def _check(self, a: Colour) -> None:
        if len(a) != self.arity:
            raise DimensionMismatch(f"{self.name} colours have {self.arity} components, got {len(a)}")


GL2_GROUP = ColourGroup("gl2", 1)
H4_GROUP = ColourGroup("h4", 2)

GROUPS = {"gl2": GL2_GROUP, "h4": H4_GROUP}


def make_colour(*components) -> Colour:
    c = tuple(complex(x) for x in components)
    if any(x == 0 for x in c):
        raise ZeroColour(f"colour components must be nonzero: {c}")
    return c


def compose(g: ColourGroup, a: Colour, b: Colour) -> Colour:
    """The colour labelling ``sigma^a o sigma^b``."""
    g._check(a)
    g._check(b)
    out = tuple(complex(x) * complex(y) for x, y in zip(a, b))
    if any(x == 0 for x in out):
        raise ZeroColour(f"composition of {a} and {b} underflowed to zero")
    return out


def inverse_colour(g: ColourGroup, a: Colour) -> Colour:
    g._check(a)
    return tuple(1 / complex(x) for x in a)


def two_index_colour(g: ColourGroup, up: Colour, down: Colour) -> Colour:
    """Label of ``sigma^up o (sigma^down)^-1``."""
    return compose(g, up, inverse_colour(g, down))


@dataclass(frozen=True)
class Gl2Params:
    q: complex
    s: complex

    def as_dict(self) -> dict:
        return {"q": self.q, "s": self.s}


@dataclass(frozen=True)
class H4Params:
    z: complex

    def as_dict(self) -> dict:
        return {"z": self.z}


ModelParams = Gl2Params | H4Params


def make_params(model: str, **kw) -> ModelParams:
    if model == "gl2":
        p = Gl2Params(complex(kw["q"]), complex(kw["s"]))
        if p.q == 0 or p.s == 0:
            raise InvalidParameter("q and s must be nonzero")
        return p
    if model == "h4":
        p = H4Params(complex(kw["z"]))
        if p.z == 0:
            raise InvalidParameter("z must be nonzero")
        return p
    raise InvalidParameter(f"unknown model {model!r}")


def act_params(model: str, p: ModelParams, nu: Colour) -> ModelParams:
    """Parameters of the target algebra of ``sigma^nu``.

    gl(2) is a fixed-parameter family; the oscillator algebra sends
    ``z`` to ``nu_+ nu_- z``.
    """
    GROUPS[model]._check(nu)
    if model == "gl2":
        return p
    return H4Params(p.z * nu[0] * nu[1])


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"`` style scalars (``i`` or ``j`` accepted as the unit)."""
    t = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    if not t:
        raise ValueError("empty complex literal")
    if t in ("j", "+j", "-j"):
        t = t.replace("j", "1j")
    elif t.endswith("j") and t[-2:-1] in ("+", "-"):
        t = t[:-1] + "1j"
    try:
        return complex(t)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None


def parse_colour(text: str, arity: int | None = None) -> Colour:
    """Parse ``"a+bi"`` or ``"a+bi,c+di"``."""
    parts = [parse_complex(x) for x in text.split(",")]
    if arity is not None and len(parts) != arity:
        raise ValueError(f"expected {arity} colour component(s), got {len(parts)} in {text!r}")
    return make_colour(*parts)


def random_colour_component(rng: np.random.Generator) -> complex:
    """Modulus uniform in [0.5, 2], phase uniform in (-3, 3).

    The phase window stays clear of the negative real axis by more than the
    required 0.1 rad, so principal logarithms never jump branches.
    """
    r = rng.uniform(0.5, 2.0)
    phi = rng.uniform(-3.0, 3.0)
    return cmath.rect(r, phi)


def random_colour(g: ColourGroup, rng: np.random.Generator) -> Colour:
    return tuple(random_colour_component(rng) for _ in range(g.arity))
