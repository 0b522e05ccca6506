"""Homogeneous quasi-symmetric functions with exact coefficients.

Elements are stored in the monomial basis M, keyed by subsets of [n-1];
the fundamental basis F is a Möbius-transform view.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from . import config
from .combinatorics import as_subset, co, co_inverse, mask, unmask, subsets, compositions
from .errors import CQSymError


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class QSymElem:
    """Degree-n quasi-symmetric function; ``coeffs`` maps subsets of [n-1] to M-coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        if n < 0:
            raise CQSymError("degree must be nonnegative")
        config.check_cap(n, config.MAX_DEGREE, "degree")
        clean = {}
        for J, c in (coeffs or {}).items():
            c = _frac(c)
            if c:
                J = as_subset(J, upper=max(n - 1, 0))
                clean[J] = clean.get(J, 0) + c
        self.n = n
        self.coeffs = {J: c for J, c in clean.items() if c}

    @classmethod
    def _raw(cls, n: int, coeffs: dict) -> "QSymElem":
        # trusted keys; only drops zeros
        obj = cls.__new__(cls)
        obj.n = n
        obj.coeffs = {J: c for J, c in coeffs.items() if c}
        return obj

    @classmethod
    def from_F(cls, n: int, fcoeffs) -> "QSymElem":
        if n < 0:
            raise CQSymError("degree must be nonnegative")
        config.check_cap(n, config.MAX_DEGREE, "degree")
        return cls._raw(n, _zeta_up(n, {as_subset(J, upper=max(n - 1, 0)): _frac(c) for J, c in fcoeffs.items()}))

    @property
    def f_coeffs(self) -> dict:
        return _mobius_up(self.n, self.coeffs)

    def coeff(self, J) -> Fraction:
        return self.coeffs.get(tuple(J), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        if other.n != self.n and self.coeffs and other.coeffs:
            raise CQSymError(f"degree mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for J, c in other.coeffs.items():
            out[J] = out.get(J, 0) + c
        return QSymElem._raw(self.n if self.coeffs else other.n, out)

    def __neg__(self):
        return QSymElem._raw(self.n, {J: -c for J, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSymElem):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return QSymElem._raw(self.n, {J: c * other for J, c in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*M{co(J, self.n)}" for J, c in sorted(self.coeffs.items()))

    def to_json(self, basis: str = "M") -> dict:
        if basis not in ("M", "F"):
            raise CQSymError(f"unknown basis {basis!r}")
        data = self.coeffs if basis == "M" else self.f_coeffs
        return {
            "n": self.n,
            "basis": basis,
            "terms": [{"set": list(J), "coeff": str(c)} for J, c in sorted(data.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QSymElem":
        terms = {tuple(t["set"]): Fraction(t["coeff"]) for t in data["terms"]}
        if data["basis"] == "F":
            return cls.from_F(data["n"], terms)
        return cls(data["n"], terms)


def _dense(n, coeffs):
    vec = [Fraction(0)] * (1 << max(n - 1, 0))
    for J, c in coeffs.items():
        vec[mask(J)] += c
    return vec


def _sparse(vec):
    return {unmask(m): c for m, c in enumerate(vec) if c}


def _zeta_up(n, fcoeffs):
    # F_J = sum over K containing J of M_K
    vec = _dense(n, fcoeffs)
    for b in range(max(n - 1, 0)):
        bit = 1 << b
        for m in range(len(vec)):
            if m & bit:
                vec[m] += vec[m ^ bit]
    return _sparse(vec)


def _mobius_up(n, mcoeffs):
    vec = _dense(n, mcoeffs)
    for b in range(max(n - 1, 0)):
        bit = 1 << b
        for m in range(len(vec)):
            if m & bit:
                vec[m] -= vec[m ^ bit]
    return _sparse(vec)


def zero(n: int) -> QSymElem:
    return QSymElem(n)


def one() -> QSymElem:
    return QSymElem(0, {(): 1})


def monomial(n: int, J=()) -> QSymElem:
    return QSymElem(n, {as_subset(J, upper=max(n - 1, 0)): 1})


def fundamental(n: int, J=()) -> QSymElem:
    return QSymElem.from_F(n, {as_subset(J, upper=max(n - 1, 0)): 1})


def monomial_comp(alpha) -> QSymElem:
    return QSymElem(sum(alpha), {co_inverse(alpha): 1})


def h(n: int) -> QSymElem:
    return fundamental(n, ())


def e(n: int) -> QSymElem:
    return fundamental(n, tuple(range(1, n)))


def h_comp(alpha) -> QSymElem:
    out = one()
    for a in alpha:
        out = out * h(a)
    return out


def monomial_sym(lam) -> QSymElem:
    """m_lambda: sum of M over all distinct rearrangements of lambda."""
    return QSymElem(sum(lam), {co_inverse(a): 1 for a in set(permutations(lam))})


# ---------------------------------------------------------------- product

@lru_cache(maxsize=None)
def quasi_shuffle(alpha: tuple, beta: tuple) -> tuple:
    """Quasi-shuffle of two compositions, as ((composition, multiplicity), ...)."""
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    out: dict = {}
    a, b = alpha[0], beta[0]
    for head, rest in (
        (a, quasi_shuffle(alpha[1:], beta)),
        (b, quasi_shuffle(alpha, beta[1:])),
        (a + b, quasi_shuffle(alpha[1:], beta[1:])),
    ):
        for gamma, c in rest:
            key = (head, *gamma)
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def multiply(f: QSymElem, g: QSymElem) -> QSymElem:
    n = f.n + g.n
    out: dict = {}
    for J, c in f.coeffs.items():
        alpha = co(J, f.n)
        for K, d in g.coeffs.items():
            cd = c * d
            for gamma, mult in quasi_shuffle(alpha, co(K, g.n)):
                key = co_inverse(gamma)
                out[key] = out.get(key, 0) + cd * mult
    config.check_cap(n, config.MAX_DEGREE, "degree")
    return QSymElem._raw(n, out)


def omega_qsym(f: QSymElem) -> QSymElem:
    """F_J -> F_{[n-1] minus J}."""
    full = set(range(1, f.n))
    return QSymElem.from_F(f.n, {tuple(sorted(full - set(J))): c for J, c in f.f_coeffs.items()})


# ---------------------------------------------------------------- truncation oracle

class TruncPoly:
    """Polynomial in x_1..x_k with exact coefficients, keyed by exponent vectors."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        self.terms = {}
        for ex, c in (terms or {}).items():
            if len(ex) != k:
                raise CQSymError("exponent vector has wrong length")
            c = _frac(c)
            if c:
                self.terms[tuple(ex)] = self.terms.get(tuple(ex), 0) + c
        self.terms = {ex: c for ex, c in self.terms.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for ex, c in other.terms.items():
            out[ex] = out.get(ex, 0) + c
        return TruncPoly(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TruncPoly(self.k, {ex: v * c for ex, v in self.terms.items()})

    def __mul__(self, other):
        if self.k != other.k:
            raise CQSymError("variable count mismatch")
        integral = all(c.denominator == 1 for c in self.terms.values()) and all(
            c.denominator == 1 for c in other.terms.values()
        )
        left = [(ex, int(c) if integral else c) for ex, c in self.terms.items()]
        right = [(ex, int(c) if integral else c) for ex, c in other.terms.items()]
        out: dict = {}
        for e1, c1 in left:
            for e2, c2 in right:
                ex = tuple(a + b for a, b in zip(e1, e2))
                out[ex] = out.get(ex, 0) + c1 * c2
        return TruncPoly(self.k, out)

    def __eq__(self, other):
        return isinstance(other, TruncPoly) and self.k == other.k and self.terms == other.terms

    def __repr__(self):
        return f"TruncPoly({self.k}, {dict(sorted(self.terms.items()))})"


def expand_truncated(f: QSymElem, k: int) -> TruncPoly:
    """Set x_{k+1} = x_{k+2} = ... = 0 and return a polynomial in x_1..x_k."""
    if k < 1:
        raise CQSymError("need at least one variable")
    out: dict = {}
    for J, c in f.coeffs.items():
        alpha = co(J, f.n)
        for pos in combinations(range(k), len(alpha)):
            ex = [0] * k
            for p, a in zip(pos, alpha):
                ex[p] = a
            ex = tuple(ex)
            out[ex] = out.get(ex, 0) + c
    return TruncPoly(k, out)


# ---------------------------------------------------------------- symmetry

def symmetry_witness(f: QSymElem):
    """A composition whose coefficient differs from its sorted rearrangement, or None."""
    for alpha in compositions(f.n):
        lam = tuple(sorted(alpha, reverse=True))
        if f.coeff(co_inverse(alpha)) != f.coeff(co_inverse(lam)):
            return alpha, lam
    return None


def is_symmetric(f: QSymElem) -> bool:
    return symmetry_witness(f) is None


def inner_h(f: QSymElem, lam) -> Fraction:
    """<f, h_lambda>, which is the coefficient of m_lambda in a symmetric f."""
    lam = tuple(lam)
    if sum(lam) != f.n and f.coeffs:
        raise CQSymError(f"partition {lam} has the wrong size for degree {f.n}")
    if not is_symmetric(f):
        raise CQSymError("inner_h needs a symmetric function")
    return f.coeff(co_inverse(lam))


__all__ = [
    "QSymElem", "TruncPoly", "monomial", "fundamental", "monomial_comp", "monomial_sym",
    "h", "e", "h_comp", "one", "zero", "multiply", "quasi_shuffle", "omega_qsym",
    "expand_truncated", "is_symmetric", "symmetry_witness", "inner_h", "subsets",
]
