"""The max-product specialization and (cyclic) descent counts over shuffles."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .combinatorics import binom, cdes_set, cyclic_shuffles, des_set, shuffles
from .errors import CQSymError
from .qsym import QSymElem, expand_truncated


class QPoly:
    """Series in q truncated after q^R."""

    __slots__ = ("R", "coeffs")

    def __init__(self, R: int, coeffs=()):
        if R < 0:
            raise CQSymError("truncation must be nonnegative")
        cs = [Fraction(c) for c in list(coeffs)[: R + 1]]
        self.R = R
        self.coeffs = tuple(cs + [Fraction(0)] * (R + 1 - len(cs)))

    @classmethod
    def monomial(cls, R: int, k: int, c=1) -> "QPoly":
        cs = [0] * (R + 1)
        if k <= R:
            cs[k] = c
        return cls(R, cs)

    def _same(self, other):
        if not isinstance(other, QPoly):
            raise CQSymError("expected a QPoly")
        if other.R != self.R:
            raise CQSymError(f"truncation mismatch: {self.R} vs {other.R}")

    def __add__(self, other):
        self._same(other)
        return QPoly(self.R, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same(other)
        return QPoly(self.R, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "QPoly":
        return QPoly(self.R, [a * c for a in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.R == other.R and self.coeffs == other.coeffs

    def __repr__(self):
        terms = [f"{c}q^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"R": self.R, "coeffs": [str(c) for c in self.coeffs]}


def odot(a: QPoly, b: QPoly) -> QPoly:
    """q^i (.) q^j = q^max(i,j), extended bilinearly."""
    a._same(b)
    out, pa, pb = [], Fraction(0), Fraction(0)
    for x, y in zip(a.coeffs, b.coeffs):
        # new pairs with max index k: (k, <=k) and (<k, k)
        out.append(x * (pb + y) + pa * y)
        pa += x
        pb += y
    return QPoly(a.R, out)


def ordinary_mul(a: QPoly, b: QPoly) -> QPoly:
    a._same(b)
    out = [Fraction(0)] * (a.R + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(a.R + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return QPoly(a.R, out)


def geometric(R: int, c: int, m: int) -> QPoly:
    """q^c / (1-q)^m."""
    if m == 0:
        return QPoly.monomial(R, c)
    return QPoly(R, [binom(r - c + m - 1, m - 1) if r >= c else 0 for r in range(R + 1)])


def one_minus_q_pow(R: int, m: int) -> QPoly:
    return QPoly(R, [(-1) ** k * binom(m, k) for k in range(R + 1)])


def psi(f: QSymElem, R: int) -> QPoly:
    """Psi on the monomial basis: M_{n,J} -> (q/(1-q))^(|J|+1); the constant 1 -> 1."""
    out = QPoly(R)
    for J, c in f.coeffs.items():
        term = QPoly.monomial(R, 0) if f.n == 0 else geometric(R, len(J) + 1, len(J) + 1)
        out = out + term.scale(c)
    return out


def psi_by_monomials(f: QSymElem, R: int) -> QPoly:
    """Psi evaluated monomial by monomial on the truncation to x_1..x_R."""
    if R == 0 or f.n == 0:
        return QPoly(R, [f.coeff(())] if f.n == 0 else [])
    poly = expand_truncated(f, R)
    out = [Fraction(0)] * (R + 1)
    for ex, c in poly.terms.items():
        top = max(i for i, e in enumerate(ex) if e) + 1
        out[top] += c
    return QPoly(R, out)


def psi_F_closed(n: int, j: int, R: int) -> QPoly:
    return geometric(R, j + 1, n)


def psi_M_closed(n: int, j: int, R: int) -> QPoly:
    return geometric(R, j + 1, j + 1)


def psi_Fcyc_closed(n: int, j: int, R: int) -> QPoly:
    return geometric(R, j, n).scale(j) + geometric(R, j + 1, n).scale(n - j)


def psi_Mcyc_closed(n: int, j: int, R: int) -> QPoly:
    return geometric(R, j, j).scale(j) if j else QPoly(R)


def psi_FF_closed(m: int, j: int, n: int, k: int, R: int) -> QPoly:
    """(1-q) sum_r C(r+m-j-1, m) C(r+n-k-1, n) q^r for Psi(F_{m,J} F_{n,K}), |J|=j, |K|=k."""
    s = QPoly(R, [binom(r + m - j - 1, m) * binom(r + n - k - 1, n) for r in range(R + 1)])
    return ordinary_mul(one_minus_q_pow(R, 1), s)


def psi_MM_closed(j: int, k: int, R: int) -> QPoly:
    s = QPoly(R, [binom(r, j + 1) * binom(r, k + 1) for r in range(R + 1)])
    return ordinary_mul(one_minus_q_pow(R, 1), s)


# ---------------------------------------------------------------- distributions

def des_shuffle_dist(m: int, n: int, i: int, j: int) -> list:
    """Entry k counts shuffles with k descents, given des(u)=i and des(v)=j."""
    if not (0 <= i <= m - 1 and 0 <= j <= n - 1):
        raise CQSymError("descent numbers out of range")
    return [binom(m + j - i, k - i) * binom(n + i - j, k - j) for k in range(m + n)]


def _cdes_realizable(m: int, i: int) -> bool:
    return i == 0 if m == 1 else 1 <= i <= m - 1


def cdes_two_term(m: int, n: int, i: int, j: int, k: int) -> int:
    return k * binom(m + j - i - 1, k - i) * binom(n + i - j - 1, k - j) + (m + n - k) * binom(
        m + j - i - 1, k - i - 1
    ) * binom(n + i - j - 1, k - j - 1)


def cdes_fraction_form(m: int, n: int, i: int, j: int, k: int) -> Fraction:
    num = k * (m - i) * (n - j) + (m + n - k) * i * j
    return Fraction(num, (m + j - i) * (n + i - j)) * binom(m + j - i, k - i) * binom(n + i - j, k - j)


def cdes_shuffle_dist(m: int, n: int, i: int, j: int, check: bool = True) -> list:
    """Entry k counts cyclic shuffles with k cyclic descents (k = 0..m+n)."""
    if not (_cdes_realizable(m, i) and _cdes_realizable(n, j)):
        raise CQSymError(f"cyclic descent numbers ({i},{j}) not realizable for lengths ({m},{n})")
    out = [cdes_two_term(m, n, i, j, k) for k in range(m + n + 1)]
    if check:
        alt = [cdes_fraction_form(m, n, i, j, k) for k in range(m + n + 1)]
        if alt != out:
            raise AssertionError(f"closed forms disagree: {out} vs {alt}")
    return out


def word_with(m: int, stat, value: int, alphabet=None):
    alphabet = tuple(alphabet or range(1, m + 1))
    for w in permutations(alphabet):
        if len(stat(w)) == value:
            return w
    raise CQSymError("no such word")


def des_dist_brute(u, v) -> list:
    out = [0] * (len(u) + len(v))
    for w in shuffles(u, v):
        out[len(des_set(w))] += 1
    return out


def cdes_dist_brute(u, v) -> list:
    out = [0] * (len(u) + len(v) + 1)
    for w in cyclic_shuffles(u, v):
        out[len(cdes_set(w))] += 1
    return out


def des_shuffle_genfun(m: int, n: int, i: int, j: int, R: int | None = None, u=None, v=None) -> dict:
    R = 2 * (m + n) if R is None else R
    u = u or word_with(m, des_set, i)
    v = v or word_with(n, des_set, j, range(m + 1, m + n + 1))
    series = QPoly(R, [binom(r + m - i, m) * binom(r + n - j, n) for r in range(R + 1)])
    formula = ordinary_mul(one_minus_q_pow(R, m + n + 1), series)
    brute = QPoly(R, des_dist_brute(u, v))
    return {"holds": formula == brute, "formula": formula, "brute": brute}


def cdes_shuffle_genfun(m: int, n: int, i: int, j: int, R: int | None = None, u=None, v=None) -> dict:
    R = 2 * (m + n) if R is None else R
    u = u or word_with(m, cdes_set, i)
    v = v or word_with(n, cdes_set, j, range(m + 1, m + n + 1))
    series = QPoly(R, [binom(r + m - i - 1, m - 1) * binom(r + n - j - 1, n - 1) * r for r in range(R + 1)])
    formula = ordinary_mul(one_minus_q_pow(R, m + n), series)
    brute = QPoly(R, cdes_dist_brute(u, v))
    return {"holds": formula == brute, "formula": formula, "brute": brute}


__all__ = [
    "QPoly", "odot", "ordinary_mul", "geometric", "one_minus_q_pow", "psi", "psi_by_monomials",
    "psi_F_closed", "psi_M_closed", "psi_Fcyc_closed", "psi_Mcyc_closed", "psi_FF_closed",
    "psi_MM_closed", "des_shuffle_dist", "cdes_shuffle_dist", "cdes_two_term", "cdes_fraction_form",
    "des_dist_brute", "cdes_dist_brute", "des_shuffle_genfun", "cdes_shuffle_genfun", "word_with",
]
