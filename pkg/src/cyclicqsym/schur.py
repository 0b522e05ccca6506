"""Skew shapes, standard tableaux, Schur functions and cyclic descent fibers."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from . import config
from .combinatorics import (
    all_classes, as_subset, cc, cdes_set, co_inverse, cyclic_class, cyclic_shuffles,
    partitions, rotations, subsets,
)
from .cqsym import CQSymElem, basis_element_qsym, fcyc_as_qsym
from .errors import CQSymError
from .qsym import QSymElem, h_comp, inner_h, is_symmetric, symmetry_witness


def _partition(p) -> tuple:
    p = tuple(x for x in p if x)
    if any(a < b for a, b in zip(p, p[1:])) or any(x < 0 for x in p):
        raise CQSymError(f"{p} is not a partition")
    return p


def conjugate(lam) -> tuple:
    lam = _partition(lam)
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0])) if lam else ()


@dataclass(frozen=True)
class SkewShape:
    lam: tuple
    mu: tuple = ()

    def __post_init__(self):
        lam, mu = _partition(self.lam), _partition(self.mu)
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise CQSymError(f"{mu} is not contained in {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    def mu_row(self, r: int) -> int:
        return self.mu[r] if r < len(self.mu) else 0

    @property
    def cells(self) -> tuple:
        return tuple((r, c) for r, l in enumerate(self.lam) for c in range(self.mu_row(r), l))

    @property
    def n(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def __str__(self):
        lam = "(" + ",".join(map(str, self.lam)) + ")"
        return lam if not self.mu else lam + "/(" + ",".join(map(str, self.mu)) + ")"

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.lam), conjugate(self.mu))

    def components(self) -> list:
        """Connected components, southwest to northeast, each trimmed to its own frame."""
        cells = set(self.cells)
        comps = []
        while cells:
            stack = [min(cells)]
            comp = set(stack)
            cells -= comp
            while stack:
                r, c = stack.pop()
                for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                    if nb in cells:
                        cells.discard(nb)
                        comp.add(nb)
                        stack.append(nb)
            comps.append(comp)
        comps.sort(key=lambda cs: -max(r for r, _ in cs))
        return [_shape_from_cells(cs) for cs in comps]

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    @property
    def is_ribbon(self) -> bool:
        cells = set(self.cells)
        return not any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells for r, c in cells)

    @property
    def is_connected_ribbon(self) -> bool:
        return self.n > 0 and self.is_connected and self.is_ribbon

    @property
    def is_hook(self) -> bool:
        return not self.mu and len(self.lam) > 0 and all(x == 1 for x in self.lam[1:])


def _shape_from_cells(cells) -> SkewShape:
    r0 = min(r for r, _ in cells)
    c0 = min(c for _, c in cells)
    rows: dict = {}
    for r, c in cells:
        lo, hi = rows.get(r - r0, (c - c0, c - c0))
        rows[r - r0] = (min(lo, c - c0), max(hi, c - c0))
    lam = tuple(rows[r][1] + 1 for r in range(len(rows)))
    mu = tuple(rows[r][0] for r in range(len(rows)))
    return SkewShape(lam, mu)


def oplus(*shapes) -> SkewShape:
    """Place shapes so that each is strictly southwest of the next."""
    shapes = [s if isinstance(s, SkewShape) else SkewShape(s) for s in shapes]
    shapes = [s for s in shapes if s.n]
    if not shapes:
        return SkewShape(())
    lam, mu = [], []
    offset = sum(s.lam[0] for s in shapes)
    for s in reversed(shapes):  # northeast first, on top
        offset -= s.lam[0]
        for r in range(len(s.lam)):
            lam.append(offset + s.lam[r])
            mu.append(offset + s.mu_row(r))
    return SkewShape(tuple(lam), tuple(mu))


def hook(n: int, k: int) -> SkewShape:
    """(n-k, 1^k)."""
    return SkewShape((n - k,) + (1,) * k)


def parse_shape(lam_text: str, mu_text: str | None = None) -> SkewShape:
    from .combinatorics import parse_tuple

    return SkewShape(parse_tuple(lam_text), parse_tuple(mu_text) if mu_text else ())


# ---------------------------------------------------------------- tableaux

@dataclass(frozen=True)
class Syt:
    shape: SkewShape
    entries: tuple  # ((cell, value), ...) sorted by cell

    def row_of(self) -> dict:
        return {v: r for (r, _), v in self.entries}

    def rows(self) -> list:
        out: dict = {}
        for (r, c), v in self.entries:
            out.setdefault(r, []).append(v)
        return [out.get(r, []) for r in range(len(self.shape.lam))]


@lru_cache(maxsize=None)
def _syt(shape: SkewShape) -> tuple:
    cells = shape.cells
    inside = set(cells)
    out = []
    filled: dict = {}

    def free(cell):
        r, c = cell
        return all(nb not in inside or nb in filled for nb in ((r - 1, c), (r, c - 1)))

    def grow(k):
        if k > shape.n:
            out.append(Syt(shape, tuple(sorted(filled.items()))))
            return
        for cell in cells:
            if cell not in filled and free(cell):
                filled[cell] = k
                grow(k + 1)
                del filled[cell]

    grow(1)
    return tuple(out)


def syt_list(shape) -> list:
    return list(_syt(shape if isinstance(shape, SkewShape) else SkewShape(shape)))


def des_of_tableau(T: Syt) -> tuple:
    row = T.row_of()
    return tuple(i for i in range(1, T.shape.n) if row[i + 1] > row[i])


@lru_cache(maxsize=None)
def _schur(shape: SkewShape) -> QSymElem:
    counts: dict = {}
    for T in _syt(shape):
        D = des_of_tableau(T)
        counts[D] = counts.get(D, 0) + 1
    return QSymElem.from_F(shape.n, counts)


def schur(shape) -> QSymElem:
    """Sum over standard tableaux T of F_{n, Des(T)}."""
    return _schur(shape if isinstance(shape, SkewShape) else SkewShape(shape))


def num_syt(shape) -> int:
    return len(syt_list(shape))


# ---------------------------------------------------------------- Schur basis

@lru_cache(maxsize=None)
def kostka(mu: tuple, lam: tuple) -> int:
    """<s_mu, h_lam>, the number of SSYT of shape mu and content lam."""
    return int(schur(SkewShape(mu)).coeff(co_inverse(lam)))


def schur_coordinates(f: QSymElem) -> dict:
    """Coefficients of a symmetric f in the Schur basis, by a unitriangular solve."""
    if not is_symmetric(f):
        raise CQSymError("not symmetric")
    parts = partitions(f.n)  # lexicographically decreasing
    out: dict = {}
    for i, lam in enumerate(parts):
        val = inner_h(f, lam) - sum(out.get(mu, 0) * kostka(mu, lam) for mu in parts[:i])
        if val:
            out[lam] = val
    return out


def from_schur(n: int, coords: dict) -> QSymElem:
    out = QSymElem(n)
    for lam, c in coords.items():
        out = out + Fraction(c) * schur(SkewShape(lam))
    return out


def inner(f: QSymElem, g: QSymElem) -> Fraction:
    """Hall inner product of two symmetric functions of the same degree."""
    a, b = schur_coordinates(f), schur_coordinates(g)
    return sum((c * b.get(lam, 0) for lam, c in a.items()), Fraction(0))


def cyclic_ribbon_schur(n: int, J) -> QSymElem:
    J = as_subset(J, n)
    if not J:
        raise CQSymError("cyclic ribbon Schur function needs a nonempty set")
    out = QSymElem(n)
    for r in range(1, len(J) + 1):
        for I in combinations(J, r):
            out = out + (-1) ** (len(J) - r) * h_comp(cc(I, n))
    return out


def hfcyc_coordinate(f: QSymElem, J) -> Fraction:
    """<f, cyclic ribbon Schur of cc(J)>, expanded through <f, h_cc(I)>."""
    n = f.n
    J = as_subset(J, n)
    if not J:
        raise CQSymError("need a nonempty set")
    wit = symmetry_witness(f)
    if wit:
        raise CQSymError(f"not symmetric: {wit}")
    total = Fraction(0)
    for r in range(1, len(J) + 1):
        sign = (-1) ** (len(J) - r)
        for I in combinations(J, r):
            lam = tuple(sorted(cc(I, n), reverse=True))
            total += sign * f.coeff(co_inverse(lam))
    return total


def sym_to_hfcyc(f: QSymElem) -> CQSymElem:
    """A symmetric function in the hF^cyc basis, one inner product per class."""
    if f.n == 0:
        return CQSymElem(0, "hFcyc", {(): f.coeff(())})
    return CQSymElem(f.n, "hFcyc", {A: hfcyc_coordinate(f, A.canonical) for A in all_classes(f.n)})


# ---------------------------------------------------------------- fibers

@dataclass(frozen=True)
class FiberTable:
    shape: SkewShape
    fibers: dict = field(hash=False)  # CyclicClass -> Fraction, nonzero entries only
    proper: bool = True

    def value(self, J) -> Fraction:
        return self.fibers.get(cyclic_class(self.shape.n, J), Fraction(0))

    def total(self) -> Fraction:
        return sum((A.orbit_size * m for A, m in self.fibers.items()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "shape": {"lambda": list(self.shape.lam), "mu": list(self.shape.mu)},
            "n": self.shape.n,
            "proper": self.proper,
            "fibers": [
                {"class": list(A.canonical), "orbit_size": A.orbit_size, "value": str(m)}
                for A, m in sorted(self.fibers.items(), key=lambda t: t[0].canonical)
            ],
        }


def cdes_fibers(shape) -> FiberTable:
    shape = shape if isinstance(shape, SkewShape) else SkewShape(shape)
    s = schur(shape)
    fibers = {A: c for A, c in sym_to_hfcyc(s).coeffs.items()} if shape.n else {}
    return FiberTable(shape, fibers, not shape.is_connected_ribbon)


def schur_in_hfcyc(shape) -> CQSymElem:
    shape = shape if isinstance(shape, SkewShape) else SkewShape(shape)
    if shape.is_connected_ribbon:
        raise CQSymError(
            f"{shape} is a connected ribbon; its expansion has signs. "
            "Use hook_expansion or the raw fiber table instead."
        )
    if shape.n == 0:
        return CQSymElem(0, "hFcyc", {(): 1})
    return CQSymElem(shape.n, "hFcyc", cdes_fibers(shape).fibers)


def skew_shapes(n: int) -> list:
    """All skew shapes with n cells and no empty rows or columns.

    Built bottom row first: each row above starts no further left and ends no
    further left, and starts no later than the row below ends.
    """
    out = []

    def grow(rows, left):
        a, b = rows[-1]
        if left == 0:
            top_down = rows[::-1]
            out.append(SkewShape(tuple(r[1] for r in top_down), tuple(r[0] for r in top_down)))
            return
        for a2 in range(a, b + 1):
            for length in range(max(1, b - a2), left + 1):
                grow(rows + [(a2, a2 + length)], left - length)

    for length in range(1, n + 1):
        grow([(0, length)], n - length)
    return sorted(set(out), key=lambda s: (s.lam, s.mu))


# ---------------------------------------------------------------- identities

def hook_expansion(n: int, k: int) -> dict:
    """Check both signed expansions of the hook (n-k, 1^k)."""
    if not 0 <= k <= n - 1:
        raise CQSymError(f"k must lie in 0..{n - 1}")
    s = schur(hook(n, k))
    raw = QSymElem(n)
    raw_terms = {}
    for J in subsets(n):
        if len(J) > k:
            sign = (-1) ** (len(J) - k - 1)
            raw = raw + sign * fcyc_as_qsym(n, J)
            raw_terms[J] = sign
    norm = QSymElem(n)
    norm_terms = {}
    for A in all_classes(n):
        if A.rank > k:
            sign = (-1) ** (A.rank - k - 1)
            norm = norm + sign * basis_element_qsym(n, A, "hFcyc")
            norm_terms[A] = sign
    return {
        "n": n,
        "k": k,
        "raw_holds": raw == n * s,
        "normalized_holds": norm == s,
        "raw_terms": raw_terms,
        "normalized_terms": norm_terms,
    }


def sn_cdes_identity(n: int) -> dict:
    if n < 2:
        raise CQSymError("need n >= 2")
    config.check_cap(n, config.MAX_SN_IDENTITY, "n")
    lhs = {J: 0 for J in subsets(n)}
    for p in permutations(range(1, n + 1)):
        lhs[cdes_set(p)] += 1
    rhs = {J: Fraction(0) for J in subsets(n)}
    for lam in partitions(n):
        sh = SkewShape(lam)
        if sh.is_hook:
            continue
        f = num_syt(sh)
        tab = cdes_fibers(sh)
        for J in rhs:
            if J:
                rhs[J] += f * tab.value(J)
    for k in range(1, n):
        tab = cdes_fibers(oplus((1,) * k, (n - k,)))
        for J in rhs:
            if J:
                rhs[J] += comb(n - 2, k - 1) * tab.value(J)
    bad = {J: (lhs[J], rhs[J]) for J in lhs if lhs[J] != rhs[J]}
    return {"n": n, "holds": not bad, "lhs": lhs, "rhs": rhs, "mismatches": bad}


def near_hook_difference(n: int, k: int) -> dict:
    if not 2 <= k <= n - 2:
        raise CQSymError(f"k must lie in 2..{n - 2}")
    left = cdes_fibers(oplus((n - k,) + (1,) * (k - 1), (1,)))
    right = cdes_fibers(SkewShape((n - k, 2) + (1,) * (k - 2)))
    full = tuple(range(1, n + 1))
    return {J: int(left.value(J) - right.value(J)) for J in subsets(n) if J and J != full}


def fiber_words(lam, alphabet) -> list:
    """Greedy choice: for each J, the lexicographically least m(J) words with cDes J."""
    sh = SkewShape(lam)
    m = sh.n
    tab = cdes_fibers(sh)
    need = {J: int(tab.value(J)) for J in subsets(m) if J}
    chosen = []
    for p in permutations(alphabet):
        J = cdes_set(p)
        if need.get(J, 0) > 0:
            chosen.append(p)
            need[J] -= 1
    short = {J: c for J, c in need.items() if c}
    if short:
        raise CQSymError(f"not enough permutations with prescribed cyclic descents: {short}")
    return chosen


def disconnected_shuffle_identity(lam, mu) -> dict:
    la, ma = SkewShape(lam), SkewShape(mu)
    if la.is_hook or ma.is_hook:
        raise CQSymError("both shapes must be non-hook partitions")
    m, n = la.n, ma.n
    config.check_cap(m + n, config.MAX_DISCONNECTED, "m + n")
    A_lam = fiber_words(la.lam, range(1, m + 1))
    A_mu = fiber_words(ma.lam, range(m + 1, m + n + 1))
    rhs = {J: Fraction(0) for J in subsets(m + n)}
    for sigma in A_lam:
        for tau in A_mu:
            for w in cyclic_shuffles(sigma, tau):
                for r in rotations(w):
                    rhs[cdes_set(r)] += Fraction(1, m * n)
    tab = cdes_fibers(oplus(la, ma))
    lhs = {J: tab.value(J) if J else Fraction(0) for J in rhs}
    bad = {J: (lhs[J], rhs[J]) for J in lhs if lhs[J] != rhs[J]}
    return {
        "lambda": la.lam,
        "mu": ma.lam,
        "holds": not bad,
        "lhs_total": sum(lhs.values()),
        "rhs_total": sum(rhs.values()),
        "mismatches": bad,
    }


def conjecture_check(n: int, J) -> dict:
    """Sum of F^cyc_{cDes(pi)} over pi whose inverse has cyclic descents in the class of J."""
    J = as_subset(J, n)
    if not J or len(J) == n:
        raise CQSymError("J must be a proper nonempty subset")
    config.check_cap(n, config.MAX_SN_IDENTITY, "n")
    A = cyclic_class(n, J)
    total = QSymElem(n)
    for p in permutations(range(1, n + 1)):
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x - 1] = i + 1
        if cyclic_class(n, cdes_set(inv)) == A:
            total = total + fcyc_as_qsym(n, cdes_set(p))
    sym = is_symmetric(total)
    coords = schur_coordinates(total) if sym else {}
    return {
        "n": n,
        "class": A.canonical,
        "symmetric": sym,
        "schur_positive": sym and all(c >= 0 for c in coords.values()),
        "expansion": coords,
        "element": total,
    }


__all__ = [
    "SkewShape", "Syt", "FiberTable", "conjugate", "oplus", "hook", "parse_shape", "syt_list",
    "des_of_tableau", "schur", "num_syt", "kostka", "schur_coordinates", "from_schur", "inner",
    "cyclic_ribbon_schur", "hfcyc_coordinate", "sym_to_hfcyc", "cdes_fibers", "schur_in_hfcyc",
    "skew_shapes", "hook_expansion", "sn_cdes_identity", "near_hook_difference", "fiber_words",
    "disconnected_shuffle_identity", "conjecture_check",
]
