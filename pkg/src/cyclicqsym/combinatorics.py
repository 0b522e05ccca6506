"""Subsets of [n], cyclic classes, compositions, words, descents and shuffles.

Subsets are plain sorted tuples of ints; the ambient ``n`` travels alongside
them. ``NSubset`` exists for the textual form ``{1,3,5}/7`` and validation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, gcd

from .errors import CQSymError

Subset = tuple  # sorted tuple of distinct positive ints
Word = tuple


def as_subset(J, n: int | None = None, upper: int | None = None) -> Subset:
    """Normalize an iterable to a sorted tuple, checking bounds 1..upper."""
    J = tuple(J)
    out = tuple(sorted(set(J)))
    if len(out) != len(J):
        raise CQSymError(f"repeated elements in {J}")
    hi = n if upper is None else upper
    if out and (out[0] < 1 or (hi is not None and out[-1] > hi)):
        raise CQSymError(f"{set(out) or '{}'} is not a subset of [{hi}]")
    return out


@dataclass(frozen=True)
class NSubset:
    n: int
    elements: Subset

    def __post_init__(self):
        if self.n < 0:
            raise CQSymError("ambient size must be nonnegative")
        object.__setattr__(self, "elements", as_subset(self.elements, self.n))

    def __str__(self):
        return format_set(self.elements) + f"/{self.n}"

    @classmethod
    def parse(cls, text: str) -> "NSubset":
        m = re.fullmatch(r"\s*(\{[^}]*\})\s*/\s*(\d+)\s*", text)
        if not m:
            raise CQSymError(f"malformed subset {text!r}; expected e.g. {{1,3,5}}/7")
        return cls(int(m.group(2)), parse_set(m.group(1)))


def parse_set(text: str) -> Subset:
    m = re.fullmatch(r"\s*\{([\d,\s]*)\}\s*", text)
    if not m:
        raise CQSymError(f"malformed set {text!r}; expected e.g. {{1,3,5}}")
    body = m.group(1).strip()
    items = [int(x) for x in body.split(",") if x.strip()] if body else []
    return as_subset(items)


def parse_tuple(text: str) -> tuple:
    """Parse ``(1,2,3)``; also accepts ``()`` and bare comma lists."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not re.fullmatch(r"[\d,\s]*", body):
        raise CQSymError(f"malformed tuple {text!r}")
    return tuple(int(x) for x in body.split(",") if x.strip())


def format_set(J) -> str:
    return "{" + ",".join(map(str, J)) + "}"


def mask(J) -> int:
    m = 0
    for j in J:
        m |= 1 << (j - 1)
    return m


def unmask(m: int) -> Subset:
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def subsets(n: int):
    """All subsets of [n] in lexicographic order of sorted tuples."""
    return sorted(unmask(m) for m in range(1 << n))


# ---------------------------------------------------------------- rotations

def rotate(J, i: int, n: int) -> Subset:
    """J + i with values kept in 1..n."""
    return tuple(sorted((j - 1 + i) % n + 1 for j in J))


def shift_into(J, i: int, n: int) -> Subset:
    """(J - i) intersected with [n-1], where n plays the role of 0."""
    return tuple(sorted(k for k in ((j - i) % n for j in J) if k != 0))


@dataclass(frozen=True, order=True)
class CyclicClass:
    n: int
    canonical: Subset
    orbit_size: int
    d: int

    @property
    def rank(self) -> int:
        return len(self.canonical)

    @property
    def members(self) -> tuple:
        return tuple(sorted({rotate(self.canonical, i, self.n) for i in range(self.n)}))

    def __contains__(self, J) -> bool:
        return cyclic_class(self.n, J) == self

    def __str__(self):
        return "[" + format_set(self.canonical) + f"/{self.n}]"


@lru_cache(maxsize=None)
def _cyclic_class(n: int, J: Subset) -> CyclicClass:
    rots = [rotate(J, i, n) for i in range(n)]
    d = sum(1 for r in rots if r == J)
    return CyclicClass(n, min(rots), n // d, d)


def cyclic_class(n: int, J) -> CyclicClass:
    if n < 1:
        raise CQSymError("cyclic classes need n >= 1")
    return _cyclic_class(n, as_subset(J, n))


@lru_cache(maxsize=None)
def all_classes(n: int, include_empty: bool = False) -> tuple:
    """Cyclic classes of subsets of [n], sorted by canonical representative."""
    seen = {cyclic_class(n, J) for J in subsets(n)}
    if not include_empty:
        seen.discard(cyclic_class(n, ()))
    return tuple(sorted(seen, key=lambda A: A.canonical))


def table_order(classes):
    """Rank descending, then canonical descending; the layout of the printed tables."""
    return sorted(classes, key=lambda A: (A.rank, A.canonical), reverse=True)


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def count_cyclic_classes(n: int) -> int:
    """Number of nonempty cyclic classes of subsets of [n] (Burnside)."""
    if n < 1:
        raise CQSymError("n must be positive")
    total = sum(totient(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n - 1


# ---------------------------------------------------------------- compositions

def co(J, n: int) -> tuple:
    J = as_subset(J, upper=n - 1 if n > 0 else 0)
    pts = (0, *J, n)
    return tuple(b - a for a, b in zip(pts, pts[1:])) if n > 0 else ()


def co_inverse(alpha) -> Subset:
    """Descent set of a composition: its partial sums except the total."""
    if any(a < 1 for a in alpha):
        raise CQSymError(f"{alpha} has a nonpositive part")
    out, s = [], 0
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return tuple(out)


def cc(J, n: int) -> tuple:
    J = as_subset(J, n)
    if not J:
        raise CQSymError("cc of the empty set is undefined")
    return tuple(b - a for a, b in zip(J, J[1:])) + (J[0] - J[-1] + n,)


def compositions(n: int):
    return [co(J, n) for J in subsets(n - 1)] if n > 0 else [()]


def partitions(n: int, largest: int | None = None):
    """Partitions of n in lexicographically decreasing order."""
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first, *rest) for rest in partitions(n - first, first))
    return out


# ---------------------------------------------------------------- words

def check_word(w) -> Word:
    w = tuple(w)
    if len(set(w)) != len(w):
        raise CQSymError(f"{w} has repeated letters")
    return w


def des_set(w) -> Subset:
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def cdes_set(w) -> Subset:
    if len(w) <= 1:
        return ()
    tail = (len(w),) if w[-1] > w[0] else ()
    return des_set(w) + tail


def cyclic_word(w) -> Word:
    """Canonical rotation: the one starting at the smallest letter."""
    w = tuple(w)
    if not w:
        return w
    k = w.index(min(w))
    return w[k:] + w[:k]


def rotations(w):
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))] or [w]


def shuffles(u, v) -> set:
    u, v = check_word(u), check_word(v)
    if set(u) & set(v):
        raise CQSymError("shuffled words must have disjoint supports")
    a, n = len(u), len(u) + len(v)
    out = set()
    for pos in combinations(range(n), a):
        w, iu, iv, ps = [], 0, 0, set(pos)
        for k in range(n):
            if k in ps:
                w.append(u[iu]); iu += 1
            else:
                w.append(v[iv]); iv += 1
        out.add(tuple(w))
    return out


def cyclic_shuffles(u, v) -> set:
    """Cyclic classes of shuffles of rotations of u with rotations of v."""
    u, v = check_word(u), check_word(v)
    if not u or not v:
        raise CQSymError("cyclic shuffles need two nonempty words")
    if set(u) & set(v):
        raise CQSymError("shuffled words must have disjoint supports")
    # rotating the whole shuffle lets one fix the rotation of u
    return {cyclic_word(w) for v2 in rotations(v) for w in shuffles(u, v2)}


def cyclic_shuffles_by_definition(u, v) -> set:
    return {cyclic_word(w) for u2 in rotations(u) for v2 in rotations(v) for w in shuffles(u2, v2)}


def num_cyclic_shuffles(a: int, b: int) -> int:
    return factorial(a + b - 1) // (factorial(a - 1) * factorial(b - 1))


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)
