"""Directed acyclic graphs up to flips, toric linear extensions and P-partitions."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import config
from .combinatorics import cdes_set, cyclic_word, rotations
from .cqsym import fcyc_as_qsym
from .errors import CQSymError
from .qsym import QSymElem, TruncPoly


@dataclass(frozen=True)
class Dag:
    vertices: tuple
    arcs: frozenset

    def __init__(self, vertices, arcs=()):
        vs = tuple(sorted(set(vertices)))
        if len(vs) != len(tuple(vertices)):
            raise CQSymError("repeated vertex labels")
        arcs = frozenset((int(i), int(j)) for i, j in arcs)
        for i, j in arcs:
            if i not in vs or j not in vs:
                raise CQSymError(f"arc {i}->{j} leaves the vertex set")
            if i == j:
                raise CQSymError("loops are not allowed")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arcs", arcs)
        if not self.is_acyclic():
            raise CQSymError("graph has a directed cycle")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def out_nbrs(self, v):
        return [j for i, j in self.arcs if i == v]

    def in_nbrs(self, v):
        return [i for i, j in self.arcs if j == v]

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for _, j in self.arcs:
            indeg[j] += 1
        queue = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for j in self.out_nbrs(v):
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        return seen == self.n

    def sources(self):
        heads = {j for _, j in self.arcs}
        return [v for v in self.vertices if v not in heads]

    def sinks(self):
        tails = {i for i, _ in self.arcs}
        return [v for v in self.vertices if v not in tails]

    def sort_key(self):
        return tuple(sorted(self.arcs))

    def __str__(self):
        arcs = ",".join(f"{i}->{j}" for i, j in sorted(self.arcs))
        if self.vertices == tuple(range(1, self.n + 1)):
            return f"{self.n};{arcs}"
        return "{" + ",".join(map(str, self.vertices)) + "};" + arcs

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arcs": [list(a) for a in sorted(self.arcs)]}

    @classmethod
    def parse(cls, text: str) -> "Dag":
        m = re.fullmatch(r"\s*(\d+|\{[\d,\s]*\})\s*;\s*(.*?)\s*", text)
        if not m:
            raise CQSymError(f"malformed DAG {text!r}; expected e.g. 3;1->2,2->3")
        head = m.group(1)
        if head.startswith("{"):
            vs = [int(x) for x in head[1:-1].split(",") if x.strip()]
        else:
            vs = list(range(1, int(head) + 1))
        arcs = []
        for part in filter(None, (p.strip() for p in m.group(2).split(","))):
            am = re.fullmatch(r"(\d+)\s*->\s*(\d+)", part)
            if not am:
                raise CQSymError(f"malformed arc {part!r}")
            arcs.append((int(am.group(1)), int(am.group(2))))
        return cls(vs, arcs)


def chain(w) -> Dag:
    """The path w_1 -> w_2 -> ... -> w_n."""
    return Dag(w, zip(w, w[1:]))


def total_order(w) -> Dag:
    """The transitive tournament of the word w."""
    return Dag(w, ((w[a], w[b]) for a in range(len(w)) for b in range(a + 1, len(w))))


def disjoint_union(*dags) -> Dag:
    vs = [v for d in dags for v in d.vertices]
    return Dag(vs, [a for d in dags for a in d.arcs])


def _reach(D: Dag) -> dict:
    """Reflexive-transitive reachability."""
    reach = {v: {v} for v in D.vertices}
    order = linear_extension(D)
    for v in reversed(order):
        for j in D.out_nbrs(v):
            reach[v] |= reach[j]
    return reach


def linear_extension(D: Dag) -> tuple:
    indeg = {v: 0 for v in D.vertices}
    for _, j in D.arcs:
        indeg[j] += 1
    out, ready = [], sorted(v for v, d in indeg.items() if d == 0)
    while ready:
        v = ready.pop(0)
        out.append(v)
        for j in D.out_nbrs(v):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return tuple(out)


def transitive_closure(D: Dag) -> Dag:
    reach = _reach(D)
    return Dag(D.vertices, [(i, j) for i in D.vertices for j in reach[i] if i != j])


def toric_transitive_closure(D: Dag) -> Dag:
    """Add x->y whenever x, y lie in this order on a path s ~> t with s->t an arc."""
    reach = _reach(D)
    arcs = set(D.arcs)
    for s, t in D.arcs:
        mid = [x for x in reach[s] if t in reach[x]]
        for x in mid:
            for y in mid:
                if x != y and y in reach[x]:
                    arcs.add((x, y))
    return Dag(D.vertices, arcs)


def is_toric_closed(D: Dag) -> bool:
    return toric_transitive_closure(D) == D


def flip(D: Dag, v) -> Dag:
    if v not in D.vertices:
        raise CQSymError(f"{v} is not a vertex")
    if v not in D.sources() and v not in D.sinks():
        raise CQSymError(f"{v} is neither a source nor a sink")
    return Dag(D.vertices, [(j, i) if v in (i, j) else (i, j) for i, j in D.arcs])


@dataclass(frozen=True)
class ToricClass:
    members: tuple  # sorted by arc list
    canonical: Dag

    @property
    def n(self) -> int:
        return self.canonical.n

    def __len__(self):
        return len(self.members)

    def __contains__(self, D):
        return D in set(self.members)


def toric_class(D: Dag, cap: int | None = None) -> ToricClass:
    config.check_cap(D.n, config.MAX_TORIC_VERTICES, "vertex count")
    cap = config.MAX_TORIC_CLASS if cap is None else cap
    seen = {D}
    queue = deque([D])
    while queue:
        cur = queue.popleft()
        for v in set(cur.sources()) | set(cur.sinks()):
            nxt = flip(cur, v)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CQSymError(f"toric class exceeds the cap of {cap} members")
                queue.append(nxt)
    members = tuple(sorted(seen, key=Dag.sort_key))
    return ToricClass(members, members[0])


def _as_class(T) -> ToricClass:
    return T if isinstance(T, ToricClass) else toric_class(T)


def linear_extensions(D: Dag) -> list:
    """All words listing the vertices so that every arc points forward, in lex order."""
    preds = {v: set(D.in_nbrs(v)) for v in D.vertices}
    out = []

    def grow(prefix, placed):
        if len(prefix) == D.n:
            out.append(tuple(prefix))
            return
        for v in D.vertices:
            if v not in placed and preds[v] <= placed:
                prefix.append(v)
                placed.add(v)
                grow(prefix, placed)
                placed.discard(v)
                prefix.pop()

    grow([], set())
    return out


def toric_extensions(T) -> list:
    """Total cyclic orders torically extending the class, as canonical cyclic words."""
    T = _as_class(T)
    return sorted({cyclic_word(w) for D in T.members for w in linear_extensions(D)})


def toric_extensions_by_definition(T) -> list:
    """Cyclic words [w] such that some rotation of w contains some member of the class."""
    from itertools import permutations

    T = _as_class(T)
    vs = T.canonical.vertices
    if not vs:
        return [()]
    first, rest = vs[0], vs[1:]
    out = []
    for tail in permutations(rest):
        w = (first, *tail)
        orders = [set(total_order(r).arcs) for r in rotations(w)]
        if any(D.arcs <= o for D in T.members for o in orders):
            out.append(cyclic_word(w))
    return sorted(out)


# ---------------------------------------------------------------- P-partitions

def _all_functions(vs, N):
    return np.array(list(product(range(1, N + 1), repeat=len(vs))), dtype=np.int64).reshape(-1, len(vs))


def _partition_mask(D: Dag, F: np.ndarray) -> np.ndarray:
    idx = {v: k for k, v in enumerate(D.vertices)}
    ok = np.ones(len(F), dtype=bool)
    for i, j in D.arcs:
        a, b = F[:, idx[i]], F[:, idx[j]]
        ok &= (a < b) if i > j else (a <= b)
    return ok


def _to_set(vs, F, mask):
    return {tuple(row) for row in F[mask].tolist()}


def d_partitions(D: Dag, N: int) -> set:
    """Functions f: V -> [N] (as value tuples in vertex order) that are D-partitions."""
    if N < 1:
        raise CQSymError("N must be positive")
    F = _all_functions(D.vertices, N)
    return _to_set(D.vertices, F, _partition_mask(D, F))


def toric_partitions(T, N: int) -> set:
    if N < 1:
        raise CQSymError("N must be positive")
    T = _as_class(T)
    vs = T.canonical.vertices
    F = _all_functions(vs, N)
    mask = np.zeros(len(F), dtype=bool)
    for D in T.members:
        mask |= _partition_mask(D, F)
    return _to_set(vs, F, mask)


def cyclic_order_partitions(w, N: int) -> set:
    """Toric partitions of the total cyclic order [w], with values in vertex order."""
    vs = tuple(sorted(w))
    F = _all_functions(vs, N)
    mask = np.zeros(len(F), dtype=bool)
    for r in rotations(w):
        mask |= _partition_mask(total_order(r), F)
    return _to_set(vs, F, mask)


def toric_enumerator(T) -> QSymElem:
    """Sum over toric linear extensions [w] of F^cyc_{n, cDes(w)}."""
    T = _as_class(T)
    n = T.n
    out = QSymElem(n)
    for w in toric_extensions(T):
        out = out + fcyc_as_qsym(n, cdes_set(w))
    return out


def partition_genfun(parts, k: int) -> TruncPoly:
    """Sum of x_{f(v)} over v, summed over the given functions, in k variables."""
    out: dict = {}
    for f in parts:
        ex = [0] * k
        for val in f:
            ex[val - 1] += 1
        ex = tuple(ex)
        out[ex] = out.get(ex, 0) + 1
    return TruncPoly(k, out)


def fundamental_decomposition(T, N: int) -> dict:
    """Check that toric partitions split disjointly over the toric linear extensions."""
    T = _as_class(T)
    whole = toric_partitions(T, N)
    pieces = {w: cyclic_order_partitions(w, N) for w in toric_extensions(T)}
    union = set()
    overlap = []
    for w, S in pieces.items():
        if union & S:
            overlap.append(list(w))
        union |= S
    return {
        "covered": union == whole,
        "disjoint": not overlap,
        "total": len(whole),
        "pieces": sum(len(S) for S in pieces.values()),
        "overlapping": overlap,
    }


def random_dag(rng, n: int, density: float = 0.5) -> Dag:
    """Random DAG on [n]: a random vertex order with each forward arc kept with the given chance."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    arcs = [(order[a], order[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    return Dag(range(1, n + 1), arcs)


__all__ = [
    "Dag", "ToricClass", "chain", "total_order", "disjoint_union", "transitive_closure",
    "toric_transitive_closure", "is_toric_closed", "flip", "toric_class", "linear_extensions",
    "toric_extensions", "toric_extensions_by_definition", "d_partitions", "toric_partitions",
    "cyclic_order_partitions", "toric_enumerator", "partition_genfun", "fundamental_decomposition",
    "random_dag", "linear_extension",
]
