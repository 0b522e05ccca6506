"""Descent classes in the group ring of S_n and the internal coproduct on cyclic functions.

Permutations are one-line words. The product ``s2 * s1`` is composition with
s1 applied first: (s2 s1)(i) = s2(s1(i)).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np

from . import config
from .combinatorics import all_classes, cdes_set, cyclic_class, des_set, subsets
from .cqsym import from_qsym
from .errors import CQSymError, IdentityFailure
from .qsym import QSymElem

DENSE_LIMIT = 6


def compose(s2, s1) -> tuple:
    return tuple(s2[x - 1] for x in s1)


def inverse(p) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def non_escher_classes(n: int) -> tuple:
    full = tuple(range(1, n + 1))
    return tuple(A for A in all_classes(n) if A.canonical != full)


class SymmetricGroup:
    """Permutations of [n] in lex order with cached descent data and, for small n, a product table."""

    def __init__(self, n: int):
        config.check_cap(n, config.MAX_GROUP_RING, "group-ring n")
        self.n = n
        self.perms = list(permutations(range(1, n + 1)))
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.des_sets = subsets(n - 1) if n else [()]
        self.des_id = {J: k for k, J in enumerate(self.des_sets)}
        self.classes = non_escher_classes(n) if n >= 2 else ()
        self.class_id = {A: k for k, A in enumerate(self.classes)}
        self.des = np.array([self.des_id[des_set(p)] for p in self.perms], dtype=np.int64)
        if n >= 2:
            self.cdes = np.array([self.class_id[cyclic_class(n, cdes_set(p))] for p in self.perms], dtype=np.int64)
        self.inv = np.array([self.index[inverse(p)] for p in self.perms], dtype=np.int64)
        self._table = None

    @property
    def table(self) -> np.ndarray:
        """table[a, b] = index of perms[a] composed after perms[b]."""
        if self._table is None:
            if self.n > DENSE_LIMIT:
                raise CQSymError("product table only built for small n")
            P = np.array(self.perms, dtype=np.int64) - 1
            Q = P[:, P]  # Q[a, b, i] = P[a, P[b, i]]
            codes = (Q * (self.n ** np.arange(self.n))).sum(axis=2)
            lookup = {int(c): k for k, c in enumerate((P * (self.n ** np.arange(self.n))).sum(axis=1))}
            flat = np.array([lookup[int(c)] for c in codes.ravel()], dtype=np.int64)
            self._table = flat.reshape(len(self.perms), len(self.perms))
        return self._table


@lru_cache(maxsize=None)
def _build_group(n):
    return SymmetricGroup(n)


def symmetric_group(n: int) -> SymmetricGroup:
    # check here too: a cached group must still respect a lowered cap
    config.check_cap(n, config.MAX_GROUP_RING, "group-ring n")
    return _build_group(n)


class PermSum:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        target = tuple(range(1, n + 1))
        clean: dict = {}
        for p, c in (terms or {}).items():
            p = tuple(p)
            if tuple(sorted(p)) != target:
                raise CQSymError(f"{p} is not a permutation of [{n}]")
            if c:
                clean[p] = clean.get(p, 0) + int(c)
        self.terms = {p: c for p, c in clean.items() if c}

    def __add__(self, other):
        if other.n != self.n:
            raise CQSymError("size mismatch")
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return PermSum(self.n, out)

    def scale(self, c: int) -> "PermSum":
        return PermSum(self.n, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other):
        return gr_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, PermSum) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return " + ".join(f"{c}*{p}" for p, c in sorted(self.terms.items())) or "0"

    def support(self) -> set:
        return set(self.terms)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"perm": list(p), "coeff": c} for p, c in sorted(self.terms.items())]}

    def dense(self) -> np.ndarray:
        G = symmetric_group(self.n)
        vec = np.zeros(len(G.perms), dtype=np.int64)
        for p, c in self.terms.items():
            vec[G.index[p]] = c
        return vec

    @classmethod
    def from_dense(cls, n: int, vec) -> "PermSum":
        G = symmetric_group(n)
        return cls(n, {G.perms[k]: int(c) for k, c in enumerate(vec) if c})


def gr_multiply(x: PermSum, y: PermSum) -> PermSum:
    """Group-ring product: x * y = sum of x_s y_t (s after t)."""
    if x.n != y.n:
        raise CQSymError("size mismatch")
    config.check_cap(x.n, config.MAX_GROUP_RING, "group-ring n")
    if x.n <= DENSE_LIMIT and len(x.terms) * len(y.terms) > 20_000:
        G = symmetric_group(x.n)
        a, b = x.dense(), y.dense()
        ia, ib = np.nonzero(a)[0], np.nonzero(b)[0]
        idx = G.table[np.ix_(ia, ib)].ravel()
        w = np.outer(a[ia], b[ib]).ravel()
        return PermSum.from_dense(x.n, np.bincount(idx, weights=w, minlength=len(G.perms)).astype(np.int64))
    out: dict = {}
    for s, c in x.terms.items():
        for t, d in y.terms.items():
            p = compose(s, t)
            out[p] = out.get(p, 0) + c * d
    return PermSum(x.n, out)


def identity(n: int) -> PermSum:
    return PermSum(n, {tuple(range(1, n + 1)): 1})


def d_elem(n: int, I) -> PermSum:
    I = tuple(sorted(I))
    if I and (I[0] < 1 or I[-1] > n - 1):
        raise CQSymError(f"{I} is not a subset of [{n - 1}]")
    G = symmetric_group(n)
    return PermSum(n, {p: 1 for p in G.perms if des_set(p) == I})


def cd_elem(n: int, A) -> PermSum:
    A = A if not isinstance(A, tuple) else cyclic_class(n, A)
    if A.rank in (0, n):
        raise CQSymError("no permutation has an empty or full cyclic descent set")
    G = symmetric_group(n)
    return PermSum(n, {p: 1 for p in G.perms if cyclic_class(n, cdes_set(p)) == A})


# ---------------------------------------------------------------- structure constants

def _first_with(G: SymmetricGroup, pred):
    for k, p in enumerate(G.perms):
        if pred(p):
            return k
    raise CQSymError("no permutation with the required descent data")


def _pair_tally(G: SymmetricGroup, pi: int, left: np.ndarray, size: int) -> np.ndarray:
    """Counts of (left-stat of s1, Des of s2) over factorizations s2 s1 = pi."""
    s2 = np.arange(len(G.perms))
    s1 = np.array([G.index[compose(inverse(G.perms[k]), G.perms[pi])] for k in s2]) if G.n > DENSE_LIMIT \
        else G.table[G.inv, pi]
    keys = left[s1] * len(G.des_sets) + G.des[s2]
    return np.bincount(keys, minlength=size * len(G.des_sets)).reshape(size, len(G.des_sets))


def a_const(n: int, I, J, K) -> int:
    """#{(s1, s2) : Des s1 = I, Des s2 = J, s2 s1 = pi} for the first pi with Des pi = K."""
    G = symmetric_group(n)
    pi = _first_with(G, lambda p: des_set(p) == tuple(K))
    tally = _pair_tally(G, pi, G.des, len(G.des_sets))
    return int(tally[G.des_id[tuple(I)], G.des_id[tuple(J)]])


def a_table(n: int) -> dict:
    """All a_K^{IJ}, checking that every pi with Des pi = K gives the same counts."""
    G = symmetric_group(n)
    ref: dict = {}
    for pi in range(len(G.perms)):
        K = G.des_sets[G.des[pi]]
        tally = _pair_tally(G, pi, G.des, len(G.des_sets))
        if K in ref:
            if not np.array_equal(ref[K][1], tally):
                raise IdentityFailure(
                    "a-constants depend on the chosen permutation",
                    {"K": list(K), "pi": list(G.perms[ref[K][0]]), "other": list(G.perms[pi])},
                )
        else:
            ref[K] = (pi, tally)
    return {
        (G.des_sets[i], G.des_sets[j], K): int(t[i, j])
        for K, (_, t) in ref.items()
        for i, j in zip(*np.nonzero(t))
    }


def tilde_a(n: int, A, J, B) -> int:
    """#{(s1, s2): cDes s1 in A, Des s2 = J, s2 s1 = pi} for the first pi with cDes pi in B."""
    G = symmetric_group(n)
    A = A if not isinstance(A, tuple) else cyclic_class(n, A)
    B = B if not isinstance(B, tuple) else cyclic_class(n, B)
    pi = _first_with(G, lambda p: cyclic_class(n, cdes_set(p)) == B)
    tally = _pair_tally(G, pi, G.cdes, len(G.classes))
    return int(tally[G.class_id[A], G.des_id[tuple(J)]])


def tilde_a_table(n: int) -> dict:
    """All tilde-a constants keyed by (A, J, B), with well-definedness over pi checked."""
    G = symmetric_group(n)
    if n < 2:
        raise CQSymError("need n >= 2")
    ref: dict = {}
    for pi in range(len(G.perms)):
        B = G.classes[G.cdes[pi]]
        tally = _pair_tally(G, pi, G.cdes, len(G.classes))
        if B in ref:
            if not np.array_equal(ref[B][1], tally):
                raise IdentityFailure(
                    "tilde-a constants depend on the chosen permutation",
                    {"B": list(B.canonical), "pi": list(G.perms[ref[B][0]]), "other": list(G.perms[pi])},
                )
        else:
            ref[B] = (pi, tally)
    return {
        (G.classes[a], G.des_sets[j], B): int(t[a, j])
        for B, (_, t) in ref.items()
        for a, j in zip(*np.nonzero(t))
    }


# ---------------------------------------------------------------- coproduct

def _cauchy_left_factors(n: int, twist: bool) -> dict:
    """Group sum_s F_{Des(s w0 or s)} (x) F_{Des(s^-1)} by the right index."""
    G = symmetric_group(n)
    w0 = tuple(range(n, 0, -1))
    left: dict = {}
    for s in G.perms:
        L = des_set(compose(s, w0) if twist else s)
        R = des_set(inverse(s))
        left.setdefault(R, {})
        left[R][L] = left[R].get(L, 0) + 1
    return {R: QSymElem.from_F(n, d) for R, d in left.items()}


def coproduct_fcyc(n: int, B) -> dict:
    """Delta(hF^cyc_{n,B}) as {(A, J): coefficient} on hF^cyc_{n,A} (x) F_{n,J}."""
    B = B if not isinstance(B, tuple) else cyclic_class(n, B)
    if n == 1:
        return {(B, ()): Fraction(1)}
    if B.rank in (0, n):
        out: dict = {}
        for J, f in _cauchy_left_factors(n, B.rank == n).items():
            for A, c in from_qsym(f).to_basis("hFcyc").coeffs.items():
                out[(A, J)] = c
        return out
    G = symmetric_group(n)
    pi = _first_with(G, lambda p: cyclic_class(n, cdes_set(p)) == B)
    tally = _pair_tally(G, pi, G.cdes, len(G.classes))
    return {
        (G.classes[a], G.des_sets[j]): Fraction(G.classes[a].d * int(tally[a, j]), B.d)
        for a, j in zip(*np.nonzero(tally))
    }


def coproduct_qsym(n: int, K) -> dict:
    """Delta(F_{n,K}) = sum a_K^{IJ} F_I (x) F_J, from one pi with Des pi = K."""
    G = symmetric_group(n)
    K = tuple(K)
    pi = _first_with(G, lambda p: des_set(p) == K)
    tally = _pair_tally(G, pi, G.des, len(G.des_sets))
    return {(G.des_sets[i], G.des_sets[j]): int(tally[i, j]) for i, j in zip(*np.nonzero(tally))}


def coproduct_to_FF(n: int, terms: dict) -> dict:
    """Rewrite {(A, J): c} on hF_A (x) F_J as {(I, J): c} on F_I (x) F_J."""
    from .cqsym import basis_element_qsym

    out: dict = {}
    for (A, J), c in terms.items():
        for I, d in basis_element_qsym(n, A, "hFcyc").f_coeffs.items():
            out[(I, J)] = out.get((I, J), 0) + c * d
    return {k: v for k, v in out.items() if v}


def cauchy_schur_form(n: int, conjugate_right: bool) -> dict:
    """sum_lambda s_lambda (x) s_lambda (or s_lambda') in F (x) F coordinates."""
    from .combinatorics import partitions
    from .schur import SkewShape, conjugate, schur

    out: dict = {}
    for lam in partitions(n):
        left = schur(SkewShape(lam)).f_coeffs
        right = schur(SkewShape(conjugate(lam) if conjugate_right else lam)).f_coeffs
        for I, a in left.items():
            for J, b in right.items():
                out[(I, J)] = out.get((I, J), 0) + a * b
    return out


def cauchy_perm_form(n: int, twist: bool) -> dict:
    w0 = tuple(range(n, 0, -1))
    out: dict = {}
    for s in symmetric_group(n).perms:
        key = (des_set(compose(s, w0) if twist else s), des_set(inverse(s)))
        out[key] = out.get(key, 0) + 1
    return out


# ---------------------------------------------------------------- module structure

def left_module_check(n: int) -> dict:
    """D_J * cD_A against sum_B tilde-a cD_B for all J, A."""
    table = tilde_a_table(n)
    G = symmetric_group(n)
    cds = {A: cd_elem(n, A) for A in G.classes}
    failures = []
    checked = 0
    for J in G.des_sets:
        DJ = d_elem(n, J)
        for A in G.classes:
            lhs = gr_multiply(DJ, cds[A])
            rhs = PermSum(n)
            for B in G.classes:
                c = table.get((A, J, B), 0)
                if c:
                    rhs = rhs + cds[B].scale(c)
            checked += 1
            if lhs != rhs:
                failures.append({"J": list(J), "A": list(A.canonical)})
    return {"n": n, "holds": not failures, "checked": checked, "failures": failures}


def _in_cd_span(x: PermSum, n: int) -> bool:
    # the cD_C have disjoint supports covering S_n, so x is in their span
    # exactly when its coefficient is constant on each support
    G = symmetric_group(n)
    seen: dict = {}
    for k, p in enumerate(G.perms):
        c = x.terms.get(p, 0)
        cls = int(G.cdes[k])
        if seen.setdefault(cls, c) != c:
            return False
    return True


def non_algebra_witness(n: int):
    """First pair (A, B) with cD_A * cD_B outside the span of the cD's, or None."""
    G = symmetric_group(n)
    cds = [(A, cd_elem(n, A)) for A in G.classes]
    for A, x in cds:
        for B, y in cds:
            if not _in_cd_span(gr_multiply(x, y), n):
                return A, B
    return None


def non_right_module_witness(n: int):
    """First pair (A, J) with cD_A * D_J outside the span of the cD's, or None."""
    G = symmetric_group(n)
    for A in G.classes:
        x = cd_elem(n, A)
        for J in G.des_sets:
            if not _in_cd_span(gr_multiply(x, d_elem(n, J)), n):
                return A, J
    return None


def smallest_witness(search, start: int = 2, stop: int = DENSE_LIMIT):
    for n in range(start, stop + 1):
        w = search(n)
        if w is not None:
            return n, w
    return None


__all__ = [
    "PermSum", "SymmetricGroup", "symmetric_group", "compose", "inverse", "identity", "d_elem",
    "cd_elem", "gr_multiply", "a_const", "a_table", "tilde_a", "tilde_a_table", "coproduct_fcyc",
    "coproduct_qsym", "coproduct_to_FF", "cauchy_schur_form", "cauchy_perm_form",
    "left_module_check", "non_algebra_witness", "non_right_module_witness", "smallest_witness",
    "non_escher_classes",
]
