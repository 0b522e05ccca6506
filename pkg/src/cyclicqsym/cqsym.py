"""Cyclic quasi-symmetric functions.

A ``CQSymElem`` holds coordinates in one of two bases indexed by cyclic
classes: the normalized monomial family ``hMcyc`` (classes of nonempty
subsets) or the normalized fundamental family ``hFcyc`` with the class of the
empty set left out.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import config
from .combinatorics import (
    CyclicClass, all_classes, as_subset, cdes_set, check_word, co, co_inverse, cyclic_class,
    cyclic_shuffles, des_set, rotate, shift_into, subsets, table_order,
)
from .errors import CQSymError, NotCyclic
from .qsym import QSymElem, one

BASES = ("hMcyc", "hFcyc")


@lru_cache(maxsize=None)
def _mcyc(n: int, J: tuple) -> QSymElem:
    out: dict = {}
    for j in J:
        K = shift_into(J, j, n)
        out[K] = out.get(K, 0) + 1
    return QSymElem(n, out)


def mcyc_as_qsym(n: int, J) -> QSymElem:
    """M^cyc_{n,J} = sum over j in J of M_{n,(J-j) cap [n-1]}; zero for J empty."""
    if n == 0:
        return one()
    return _mcyc(n, as_subset(J, n))


@lru_cache(maxsize=None)
def _fcyc(n: int, J: tuple) -> QSymElem:
    out: dict = {}
    for i in range(1, n + 1):
        K = shift_into(J, i, n)
        out[K] = out.get(K, 0) + 1
    return QSymElem.from_F(n, out)


def fcyc_as_qsym(n: int, J) -> QSymElem:
    """F^cyc_{n,J} = sum over i in [n] of F_{n,(J-i) cap [n-1]}."""
    if n == 0:
        return one()
    return _fcyc(n, as_subset(J, n))


def d_AB(A: CyclicClass, B: CyclicClass) -> int:
    """Number of shifts i with J contained in K + i, for J in A and K in B."""
    if A.n != B.n:
        raise CQSymError("classes over different n")
    J, K = set(A.canonical), B.canonical
    return sum(1 for i in range(B.n) if J <= set(rotate(K, i, B.n)))


def _class_of_key(n: int, K) -> CyclicClass:
    # a subset K of [n-1] indexes the monomial M_{n,K}; it lies in the class of K + {n}
    return cyclic_class(n, K + (n,))


class CQSymElem:
    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs=None):
        if basis not in BASES:
            raise CQSymError(f"unknown basis {basis!r}")
        self.n, self.basis = n, basis
        clean: dict = {}
        for A, c in (coeffs or {}).items():
            if not isinstance(A, CyclicClass):
                A = cyclic_class(n, A) if n else A
            elif A.n != n:
                raise CQSymError("class over the wrong n")
            c = Fraction(c)
            if c:
                clean[A] = clean.get(A, 0) + c
        if n and basis == "hFcyc" and cyclic_class(n, ()) in clean:
            clean = _drop_empty_class(n, clean)
        if n and basis == "hMcyc":
            clean.pop(cyclic_class(n, ()), None)
        self.coeffs = {A: c for A, c in clean.items() if c}

    def coeff(self, J) -> Fraction:
        if not self.n:
            return self.coeffs.get(tuple(J), Fraction(0))
        A = J if isinstance(J, CyclicClass) else cyclic_class(self.n, J)
        return self.coeffs.get(A, Fraction(0))

    def to_qsym(self) -> QSymElem:
        if self.n == 0:
            return QSymElem(0, {(): self.coeffs.get((), 0)})
        out = QSymElem(self.n)
        for A, c in self.coeffs.items():
            out = out + c * basis_element_qsym(self.n, A, self.basis)
        return out

    def to_basis(self, basis: str) -> "CQSymElem":
        if basis == self.basis:
            return self
        return hfcyc_to_hmcyc(self) if basis == "hMcyc" else hmcyc_to_hfcyc(self)

    def _same(self, other):
        if not isinstance(other, CQSymElem):
            return NotImplemented
        if other.n != self.n:
            raise CQSymError("degree mismatch")
        return other.to_basis(self.basis)

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for A, c in other.coeffs.items():
            out[A] = out.get(A, 0) + c
        return CQSymElem(self.n, self.basis, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CQSymElem(self.n, self.basis, {A: c * other for A, c in self.coeffs.items()})
        if isinstance(other, CQSymElem):
            return from_qsym(self.to_qsym() * other.to_qsym()).to_basis(self.basis)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CQSymElem):
            return NotImplemented
        if self.n != other.n:
            return not self.coeffs and not other.coeffs
        return self.coeffs == other.to_basis(self.basis).coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.to_basis("hMcyc").coeffs.items())))

    def __repr__(self):
        name = "hM" if self.basis == "hMcyc" else "hF"
        parts = [f"{c}*{name}{A}" for A, c in self.sorted_terms()]
        return " + ".join(parts) or "0"

    def sorted_terms(self):
        if not self.n:
            return sorted(self.coeffs.items())
        return sorted(self.coeffs.items(), key=lambda t: t[0].canonical)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [
                {"class": list(A.canonical if self.n else A), "coeff": str(c)}
                for A, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CQSymElem":
        return cls(data["n"], data["basis"], {tuple(t["class"]): Fraction(t["coeff"]) for t in data["terms"]})


def _drop_empty_class(n: int, coeffs: dict) -> dict:
    """Rewrite hF of the empty class through the dependence sum_A (-1)^r(A) hF_A = 0."""
    out = dict(coeffs)
    c = out.pop(cyclic_class(n, ()))
    for A in all_classes(n):
        out[A] = out.get(A, 0) - c * (-1) ** A.rank
    return out


def basis_element_qsym(n: int, A: CyclicClass, basis: str) -> QSymElem:
    """hM^cyc or hF^cyc of a class, expanded in QSym."""
    J = A.canonical
    fam = mcyc_as_qsym if basis == "hMcyc" else fcyc_as_qsym
    return fam(n, J) * Fraction(1, A.d)


def normalize(n: int, J, family: str) -> CQSymElem:
    """hM^cyc_{n,J} (family 'M') or hF^cyc_{n,J} (family 'F') as a single-class element.

    hM of the empty set is zero; hF of the empty set is h_n and is written in the
    basis without the empty class, so it comes back as a signed sum.
    """
    if family not in ("M", "F"):
        raise CQSymError("family must be 'M' or 'F'")
    if n == 0:
        return CQSymElem(0, "h" + family + "cyc", {(): 1})
    return CQSymElem(n, "h" + family + "cyc", {cyclic_class(n, J): 1})


@lru_cache(maxsize=None)
def _hf_in_hm(n: int) -> dict:
    classes = all_classes(n)
    return {A: {B: Fraction(d_AB(A, B), A.d) for B in classes if d_AB(A, B)} for A in classes}


@lru_cache(maxsize=None)
def _hm_in_hf(n: int) -> dict:
    classes = all_classes(n)
    return {
        A: {B: Fraction((-1) ** (B.rank - A.rank) * d_AB(A, B), A.d) for B in classes if d_AB(A, B)}
        for A in classes
    }


def hfcyc_to_hmcyc(e: CQSymElem) -> CQSymElem:
    if e.basis == "hMcyc":
        return e
    if not e.n:
        return CQSymElem(0, "hMcyc", e.coeffs)
    table = _hf_in_hm(e.n)
    out: dict = {}
    for A, c in e.coeffs.items():
        for B, t in table[A].items():
            out[B] = out.get(B, 0) + c * t
    return CQSymElem(e.n, "hMcyc", out)


def hmcyc_to_hfcyc(e: CQSymElem) -> CQSymElem:
    if e.basis == "hFcyc":
        return e
    if not e.n:
        return CQSymElem(0, "hFcyc", e.coeffs)
    table = _hm_in_hf(e.n)
    out: dict = {}
    for A, c in e.coeffs.items():
        for B, t in table[A].items():
            out[B] = out.get(B, 0) + c * t
    return CQSymElem(e.n, "hFcyc", out)


def basis_matrix(n: int, normalized: bool = True):
    """Matrix of the F-type family in the M-type family over nonempty classes.

    Rows and columns follow ``table_order``. Column A holds the coordinates of
    hF_A (or F^cyc_A when not normalized) in hM_B (or M^cyc_B).
    """
    order = table_order(all_classes(n))
    rows = []
    for B in order:
        row = []
        for A in order:
            d = d_AB(A, B)
            row.append(Fraction(d, A.d) if normalized else Fraction(d, B.d))
        rows.append(row)
    return order, rows


def cyclic_witness(f: QSymElem):
    """Two rotated compositions with different M-coefficients, or None."""
    n = f.n
    for K in subsets(n - 1) if n else []:
        alpha = co(K, n)
        for r in range(1, len(alpha)):
            beta = alpha[r:] + alpha[:r]
            if f.coeff(K) != f.coeff(co_inverse(beta)):
                return (alpha, beta), (f.coeff(K), f.coeff(co_inverse(beta)))
    return None


def is_cyclic(f: QSymElem) -> bool:
    return cyclic_witness(f) is None


def from_qsym(f: QSymElem) -> CQSymElem:
    """hM^cyc coordinates of a cyclic quasi-symmetric function; raises NotCyclic otherwise."""
    if f.n == 0:
        return CQSymElem(0, "hMcyc", {(): f.coeff(())})
    bad = cyclic_witness(f)
    if bad:
        raise NotCyclic(*bad)
    # each monomial M_K lies in exactly one hM^cyc, with coefficient 1
    return CQSymElem(f.n, "hMcyc", {_class_of_key(f.n, K): c for K, c in f.coeffs.items()})


def is_non_escher(e: CQSymElem) -> bool:
    if e.n <= 1:
        return True
    return not e.to_basis("hFcyc").coeff(tuple(range(1, e.n + 1)))


def omega(e: CQSymElem) -> CQSymElem:
    """hF_A -> hF of the complementary class."""
    if e.n == 0:
        return e
    src = e.to_basis("hFcyc")
    full = set(range(1, e.n + 1))
    out = {cyclic_class(e.n, tuple(sorted(full - set(A.canonical)))): c for A, c in src.coeffs.items()}
    return CQSymElem(e.n, "hFcyc", out).to_basis(e.basis)


def fcyc_element(n: int, J) -> CQSymElem:
    """Unnormalized F^cyc_{n,J} = d_J * hF^cyc_{n,[J]} in the hFcyc basis."""
    if n == 0:
        return CQSymElem(0, "hFcyc", {(): 1})
    A = cyclic_class(n, J)
    return CQSymElem(n, "hFcyc", {A: A.d})


def fcyc_terms(e: CQSymElem) -> dict:
    """Coefficients of e on unnormalized F^cyc of each class (basis without [empty])."""
    src = e.to_basis("hFcyc")
    if not e.n:
        return dict(src.coeffs)
    return {A: c / A.d for A, c in src.coeffs.items()}


# ---------------------------------------------------------------- cyclic shuffle products

def realizable(a: int, J) -> bool:
    J = set(J)
    if a <= 1:
        return not J
    return bool(J) and J != set(range(1, a + 1))


def representative(a: int, J: tuple, offset: int = 0) -> tuple:
    """Lexicographically least permutation of offset+1..offset+a with cDes equal to J."""
    config.check_cap(a, config.MAX_REPRESENTATIVE_SEARCH, "word length")
    return _representative(a, J, offset)


@lru_cache(maxsize=None)
def _representative(a, J, offset):
    if not realizable(a, J):
        raise CQSymError(f"{set(J) or '{}'} is not the cyclic descent set of a word of length {a}")
    for w in permutations(range(offset + 1, offset + a + 1)):
        if cdes_set(w) == J:
            return w
    raise CQSymError("no representative found")


def cyclic_shuffle_expansion(a: int, J, b: int, K, u=None, v=None) -> Counter:
    """Multiset of cDes classes of the cyclic shuffles [u] and [v], as Counter over classes."""
    J, K = as_subset(J, a), as_subset(K, b)
    u = check_word(u) if u is not None else representative(a, J)
    v = check_word(v) if v is not None else representative(b, K, a)
    if cdes_set(u) != J or cdes_set(v) != K:
        raise CQSymError("representative words do not have the requested cyclic descents")
    n = a + b
    return Counter(cyclic_class(n, cdes_set(w)) for w in cyclic_shuffles(u, v))


def product_via_cyclic_shuffles(a: int, J, b: int, K, u=None, v=None) -> QSymElem:
    if a == 0 or b == 0:
        if (a == 0 and tuple(J)) or (b == 0 and tuple(K)):
            raise CQSymError("degree-0 factor must have the empty set")
        return fcyc_as_qsym(a, J) * fcyc_as_qsym(b, K)
    for m, S in ((a, J), (b, K)):
        if not realizable(m, as_subset(S, m)):
            raise CQSymError(f"{set(S) or '{}'} is not realizable in degree {m}")
    out = QSymElem(a + b)
    for A, cnt in cyclic_shuffle_expansion(a, J, b, K, u, v).items():
        out = out + cnt * fcyc_as_qsym(a + b, A.canonical)
    return out


def product_fcyc_terms(a: int, J, b: int, K, method: str = "shuffle") -> dict:
    """F^cyc_{a,J} * F^cyc_{b,K} as coefficients on unnormalized F^cyc classes."""
    if method == "shuffle":
        return dict(cyclic_shuffle_expansion(a, J, b, K))
    prod = fcyc_as_qsym(a, J) * fcyc_as_qsym(b, K)
    return fcyc_terms(from_qsym(prod))


# ---------------------------------------------------------------- cDes* and p

def _check_w_shape(w, a: int, b: int):
    w = check_word(w)
    if sorted(w) != list(range(1, a + b + 1)):
        raise CQSymError(f"{w} is not a permutation of [{a + b}]")
    small = [x for x in w if x <= a]
    if small != list(range(a, 0, -1)):
        raise CQSymError(f"letters 1..{a} of {w} are not in decreasing order")
    return w


def cdes_star(w, a: int, b: int) -> tuple:
    w = _check_w_shape(w, a, b)
    n = a + b
    extra = (n,) if w[-1] > w[0] or w[0] == a else ()
    return des_set(w) + extra


def promote_p(w, a: int, b: int) -> tuple:
    """Shift the letters above a one place to the right (cyclically), refill a..1."""
    w = _check_w_shape(w, a, b)
    n = a + b
    out = [0] * n
    for k, x in enumerate(w):
        if x > a:
            out[(k + 1) % n] = x
    fill = iter(range(a, 0, -1))
    return tuple(x if x else next(fill) for x in out)


def w_set(a: int, w0) -> list:
    """Shuffles of (a, a-1, ..., 1) with every rotation of w0 (letters above a)."""
    from .combinatorics import rotations, shuffles

    w0 = check_word(w0)
    down = tuple(range(a, 0, -1))
    return sorted(w for r in rotations(w0) for w in shuffles(down, r))


__all__ = [
    "CQSymElem", "mcyc_as_qsym", "fcyc_as_qsym", "normalize", "d_AB", "hfcyc_to_hmcyc",
    "hmcyc_to_hfcyc", "basis_matrix", "from_qsym", "is_cyclic", "cyclic_witness",
    "is_non_escher", "omega", "fcyc_element", "fcyc_terms", "realizable", "representative",
    "cyclic_shuffle_expansion", "product_via_cyclic_shuffles", "product_fcyc_terms",
    "cdes_star", "promote_p", "w_set", "basis_element_qsym",
]
