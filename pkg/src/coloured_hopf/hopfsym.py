"""Words in generators, two-leg tensor expressions, and structure-map extension.

Algebra elements are kept semi-symbolic: a :class:`Word` is a scalar times an
ordered product of atoms, where an atom is either a generator ``X`` or an
exponential ``exp(t X)``. The structure maps of a model only need to be given
on generators; everything else is extended (anti-)multiplicatively and
evaluated numerically in matrix representations.

Leg maps (representation, sigma, Delta, epsilon, S, S^-1) all share one
interface: a target dimension, an ``anti`` flag and the matrix of the image of
each generator. Because each is an algebra (anti-)homomorphism, the image of
``exp(t X)`` is the matrix exponential of ``t`` times the image of ``X``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from coloured_hopf import cmatrix as cm
from coloured_hopf.errors import UnknownGenerator


@dataclass(frozen=True)
class Gen:
    label: str


@dataclass(frozen=True)
class ExpGen:
    """``exp(t * X)``; ``c**(u X)`` is stored as ``ExpGen(u * log(c), X)``."""

    t: complex
    label: str


Atom = Gen | ExpGen


@dataclass(frozen=True)
class Word:
    coeff: complex = 1.0
    atoms: tuple = ()

    def __mul__(self, other: Word) -> Word:
        return Word(self.coeff * other.coeff, self.atoms + other.atoms)

    def scaled(self, c: complex) -> Word:
        return Word(self.coeff * c, self.atoms)

    def __pow__(self, n: int) -> Word:
        return reduce(Word.__mul__, [self] * n, Word())


def word(*atoms, coeff: complex = 1.0) -> Word:
    """Build a word; bare strings are read as generators."""
    return Word(coeff, tuple(Gen(a) if isinstance(a, str) else a for a in atoms))


@dataclass(frozen=True)
class Element:
    terms: tuple = ()

    def __add__(self, other: Element) -> Element:
        return Element(self.terms + other.terms)

    def __sub__(self, other: Element) -> Element:
        return self + other.scaled(-1)

    def __mul__(self, other: Element) -> Element:
        return Element(tuple(u * v for u in self.terms for v in other.terms))

    def scaled(self, c: complex) -> Element:
        return Element(tuple(w.scaled(c) for w in self.terms))


def element(*words: Word) -> Element:
    return Element(tuple(words))


ONE = element(Word())
ZERO = Element()


@dataclass(frozen=True)
class ExpBilinear:
    """``exp(t * X (x) Y)``."""

    t: complex
    left: str
    right: str


@dataclass(frozen=True)
class WordPairSum:
    """Finite sum of ``coeff * u (x) v``."""

    terms: tuple = ()

    def __add__(self, other: WordPairSum) -> WordPairSum:
        return WordPairSum(self.terms + other.terms)


def pair(coeff: complex, left: Word, right: Word) -> WordPairSum:
    return WordPairSum(((coeff, left, right),))


@dataclass(frozen=True)
class TensorExpr:
    """Ordered (left-to-right) product of two-leg factors."""

    factors: tuple = ()


class StructureMaps:
    """Coloured structure maps of a model, given on generators.

    Colours are tuples (see :mod:`coloured_hopf.colour`). Subclasses implement
    the closed forms; the extension to words lives in this module.
    """

    generators: tuple[str, ...] = ()

    def sigma(self, nu, label: str) -> Element:
        raise NotImplementedError

    def delta(self, lam, mu, nu, label: str) -> WordPairSum:
        raise NotImplementedError

    def epsilon(self, nu, label: str) -> complex:
        raise NotImplementedError

    def antipode(self, mu, nu, label: str) -> Element:
        raise NotImplementedError

    def antipode_inverse(self, mu, nu, label: str) -> Element:
        """``(S^mu_nu)^-1``, mapping the algebra at colour ``mu`` to colour ``nu``."""
        raise NotImplementedError

    def _known(self, label: str) -> None:
        if label not in self.generators:
            raise UnknownGenerator(label)


@dataclass
class Representation:
    name: str
    matrices: dict

    @property
    def dim(self) -> int:
        return next(iter(self.matrices.values())).shape[0]

    def __getitem__(self, label: str) -> np.ndarray:
        try:
            return self.matrices[label]
        except KeyError:
            raise UnknownGenerator(label) from None


# -- leg maps -----------------------------------------------------------------


@dataclass
class LegMap:
    dim: int
    anti: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    def _image(self, label: str) -> np.ndarray:
        raise NotImplementedError

    def generator_matrix(self, label: str) -> np.ndarray:
        if label not in self._cache:
            self._cache[label] = self._image(label)
        return self._cache[label]


class RepMap(LegMap):
    def __init__(self, rep: Representation):
        super().__init__(rep.dim)
        self.rep = rep

    def _image(self, label):
        return self.rep[label]


class SigmaMap(LegMap):
    def __init__(self, maps: StructureMaps, nu, rep: Representation):
        super().__init__(rep.dim)
        self.maps, self.nu, self.rep = maps, nu, rep

    def _image(self, label):
        return eval_element(self.maps.sigma(self.nu, label), self.rep)


class DeltaMap(LegMap):
    def __init__(self, maps: StructureMaps, lam, mu, nu, rep_l: Representation, rep_r: Representation):
        super().__init__(rep_l.dim * rep_r.dim)
        self.maps, self.colours = maps, (lam, mu, nu)
        self.rep_l, self.rep_r = rep_l, rep_r

    def _image(self, label):
        ps = self.maps.delta(*self.colours, label)
        return eval_pair_sum(ps, RepMap(self.rep_l), RepMap(self.rep_r))


class EpsilonMap(LegMap):
    def __init__(self, maps: StructureMaps, nu):
        super().__init__(1)
        self.maps, self.nu = maps, nu

    def _image(self, label):
        return np.array([[self.maps.epsilon(self.nu, label)]], dtype=np.complex128)


class AntipodeMap(LegMap):
    def __init__(self, maps: StructureMaps, mu, nu, rep: Representation):
        super().__init__(rep.dim, anti=True)
        self.maps, self.mu, self.nu, self.rep = maps, mu, nu, rep

    def _image(self, label):
        return eval_element(self.maps.antipode(self.mu, self.nu, label), self.rep)


class AntipodeInverseMap(LegMap):
    def __init__(self, maps: StructureMaps, mu, nu, rep: Representation):
        super().__init__(rep.dim, anti=True)
        self.maps, self.mu, self.nu, self.rep = maps, mu, nu, rep

    def _image(self, label):
        return eval_element(self.maps.antipode_inverse(self.mu, self.nu, label), self.rep)


def map_atom(f: LegMap, atom) -> np.ndarray:
    x = f.generator_matrix(atom.label)
    if isinstance(atom, Gen):
        return x
    return cm.matexp(atom.t * x)


def map_word(f: LegMap, w: Word) -> np.ndarray:
    mats = [map_atom(f, a) for a in w.atoms]
    if f.anti:
        mats.reverse()
    out = w.coeff * cm.identity(f.dim)
    for m in mats:
        out = out @ m
    return out


def map_element(f: LegMap, e: Element) -> np.ndarray:
    out = np.zeros((f.dim, f.dim), dtype=np.complex128)
    for w in e.terms:
        out = out + map_word(f, w)
    return out


def map_pair_sum(ps: WordPairSum, f: LegMap, g: LegMap) -> np.ndarray:
    n = f.dim * g.dim
    out = np.zeros((n, n), dtype=np.complex128)
    for c, u, v in ps.terms:
        out = out + c * cm.kron(map_word(f, u), map_word(g, v))
    return out


def eval_word(w: Word, rep: Representation) -> np.ndarray:
    return map_word(RepMap(rep), w)


def eval_element(e: Element, rep: Representation) -> np.ndarray:
    return map_element(RepMap(rep), e)


def eval_pair_sum(ps: WordPairSum, f: LegMap, g: LegMap) -> np.ndarray:
    return map_pair_sum(ps, f, g)


def _factor_image(factor, f: LegMap, g: LegMap) -> np.ndarray:
    if isinstance(factor, ExpBilinear):
        return cm.matexp(factor.t * cm.kron(f.generator_matrix(factor.left), g.generator_matrix(factor.right)))
    return map_pair_sum(factor, f, g)


def apply_pair(f: LegMap, g: LegMap, x: TensorExpr) -> np.ndarray:
    """Image of ``x`` under ``f (x) g``, each leg a homomorphism or anti-homomorphism.

    An anti-homomorphic leg reverses the order in which factor images multiply
    on that leg, which is what ``rev1_product``/``rev2_product`` implement.
    """
    if f.anti and g.anti:
        raise ValueError("at most one leg may be an anti-homomorphism")
    d1, d2 = f.dim, g.dim
    out = cm.identity(d1 * d2)
    for factor in x.factors:
        img = _factor_image(factor, f, g)
        if f.anti:
            out = cm.rev1_product(out, img, d1, d2)
        elif g.anti:
            out = cm.rev2_product(out, img, d1, d2)
        else:
            out = out @ img
    return out


def apply_pair_hom(f: LegMap, g: LegMap, x: TensorExpr) -> np.ndarray:
    if f.anti or g.anti:
        raise ValueError("apply_pair_hom needs homomorphic legs")
    return apply_pair(f, g, x)


def apply_antipode_pair(maps: StructureMaps, mu, nu, sigma_colour, x: TensorExpr,
                        rep_l: Representation, rep_r: Representation) -> np.ndarray:
    """``(S^mu_nu (x) sigma^c)(x)`` evaluated on ``rep_l (x) rep_r``."""
    return apply_pair(AntipodeMap(maps, mu, nu, rep_l), SigmaMap(maps, sigma_colour, rep_r), x)


def eval_tensor_expr(x: TensorExpr, rep_l: Representation, rep_r: Representation) -> np.ndarray:
    return apply_pair(RepMap(rep_l), RepMap(rep_r), x)


# -- symbolic extension ---------------------------------------------------------


def _scaled_generator(e: Element) -> tuple[complex, str]:
    """Read ``e`` as ``c * X`` for a single generator ``X``."""
    if len(e.terms) == 1:
        (w,) = e.terms
        if len(w.atoms) == 1 and isinstance(w.atoms[0], Gen):
            return w.coeff, w.atoms[0].label
    raise ValueError(f"image {e} is not a multiple of a generator; exponential cannot stay symbolic")


def _extend(w: Word, image, reverse: bool) -> Element:
    parts = [image(a) for a in w.atoms]
    if reverse:
        parts.reverse()
    return reduce(Element.__mul__, parts, element(Word(w.coeff)))


def extend_sigma(maps: StructureMaps, nu, w: Word) -> Element:
    def image(a):
        img = maps.sigma(nu, a.label)
        if isinstance(a, Gen):
            return img
        c, label = _scaled_generator(img)
        return element(word(ExpGen(a.t * c, label)))

    return _extend(w, image, reverse=False)


def extend_antipode(maps: StructureMaps, mu, nu, w: Word) -> Element:
    def image(a):
        img = maps.antipode(mu, nu, a.label)
        if isinstance(a, Gen):
            return img
        c, label = _scaled_generator(img)
        return element(word(ExpGen(a.t * c, label)))

    return _extend(w, image, reverse=True)


def extend_epsilon(maps: StructureMaps, nu, w: Word) -> complex:
    out = complex(w.coeff)
    for a in w.atoms:
        e = maps.epsilon(nu, a.label)
        out *= e if isinstance(a, Gen) else cmath.exp(a.t * e)
    return out


def extend_element(f, e: Element) -> Element:
    """Apply a word-level symbolic map ``f`` termwise."""
    return reduce(Element.__add__, (f(w) for w in e.terms), ZERO)

