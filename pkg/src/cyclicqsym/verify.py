"""Named invariant suites, runnable from the command line.

Each suite takes an optional size bound and returns a small summary dict, or
raises IdentityFailure carrying a JSON-ready counterexample.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from . import combinatorics as cb
from . import cqsym as cq
from . import descent as ds
from . import enumer as en
from . import qsym as qs
from . import schur as sc
from . import toric as tr
from .errors import IdentityFailure

SUITES: dict = {}


def suite(name: str, default: int):
    def wrap(fn):
        SUITES[name] = (fn, default)
        return fn

    return wrap


def need(cond, message, **counterexample):
    if not cond:
        raise IdentityFailure(message, {k: _jsonable(v) for k, v in counterexample.items()})


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, cb.CyclicClass):
        return list(v.canonical)
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def run(name: str, max_n: int | None = None) -> dict:
    fn, default = SUITES[name]
    return fn(default if max_n is None else max_n)


# ---------------------------------------------------------------- combinatorics

@suite("cyclic-classes", 10)
def _cyclic_classes(N):
    count = 0
    for n in range(1, N + 1):
        for J in cb.subsets(n):
            A = cb.cyclic_class(n, J)
            need(A.orbit_size * A.d == n, "orbit-stabilizer fails", n=n, J=J)
            need(A.canonical == min(A.members) and A.rank == len(J), "bad canonical data", n=n, J=J)
            count += 1
    return {"checked": count}


@suite("cc-rotation", 8)
def _cc_rotation(N):
    count = 0
    for n in range(1, N + 1):
        for J in cb.subsets(n):
            if not J:
                continue
            base = cb.cc(J, n)
            for i in range(n):
                r = cb.cc(cb.rotate(J, i, n), n)
                need(any(base[k:] + base[:k] == r for k in range(len(base))), "cc does not rotate", n=n, J=J, i=i)
                count += 1
    return {"checked": count}


@suite("co-roundtrip", 10)
def _co_roundtrip(N):
    count = 0
    for n in range(1, N + 1):
        for J in cb.subsets(n - 1):
            need(cb.co_inverse(cb.co(J, n)) == J, "co inverse fails", n=n, J=J)
            count += 1
        for alpha in cb.compositions(n):
            need(cb.co(cb.co_inverse(alpha), n) == alpha, "co fails on compositions", alpha=alpha)
    return {"checked": count}


@suite("burnside", 12)
def _burnside(N):
    for n in range(1, N + 1):
        need(cb.count_cyclic_classes(n) == len(cb.all_classes(n)), "class count mismatch", n=n)
    return {"checked": N}


@suite("cyclic-shuffle-count", 8)
def _cyclic_shuffle_count(N):
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            b = total - a
            for u_tail in permutations(range(2, a + 1)):
                u = (1, *u_tail)
                for v_tail in permutations(range(a + 2, total + 1)):
                    v = (a + 1, *v_tail)
                    got = len(cb.cyclic_shuffles(u, v))
                    need(got == cb.num_cyclic_shuffles(a, b), "cyclic shuffle count", u=u, v=v, got=got)
                    count += 1
    return {"checked": count}


@suite("cyclic-shuffle-definition", 6)
def _cyclic_shuffle_definition(N):
    rng = random.Random(7)
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            letters = list(range(1, total + 1))
            rng.shuffle(letters)
            u, v = tuple(letters[:a]), tuple(letters[a:])
            need(cb.cyclic_shuffles(u, v) == cb.cyclic_shuffles_by_definition(u, v), "shuffle shortcut", u=u, v=v)
            count += 1
    return {"checked": count}


# ---------------------------------------------------------------- qsym

@suite("fm-roundtrip", 8)
def _fm_roundtrip(N):
    count = 0
    for n in range(0, N + 1):
        for J in cb.subsets(max(n - 1, 0)):
            F = qs.fundamental(n, J)
            need(qs.QSymElem.from_F(n, F.f_coeffs) == F and F.f_coeffs == {J: 1}, "F/M round trip", n=n, J=J)
            count += 1
    return {"checked": count}


def _random_qsym(rng, n, terms=3):
    keys = cb.subsets(max(n - 1, 0))
    return qs.QSymElem(n, {rng.choice(keys): Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(terms)})


@suite("qsym-product-laws", 3)
def _qsym_laws(N):
    rng = random.Random(11)
    for _ in range(30):
        f, g, h = (_random_qsym(rng, rng.randint(0, N)) for _ in range(3))
        need(f * g == g * f, "commutativity", f=f, g=g)
        need((f * g) * h == f * (g * h), "associativity", f=f, g=g, h=h)
    return {"checked": 30}


def _word_with_des(letters, I):
    return next(w for w in permutations(letters) if cb.des_set(w) == I)


@suite("noncyclic-product", 7)
def _noncyclic_product(N):
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            for I in cb.subsets(a - 1):
                u = _word_with_des(range(1, a + 1), I)
                for K in cb.subsets(total - a - 1):
                    v = _word_with_des(range(a + 1, total + 1), K)
                    lhs = qs.fundamental(a, I) * qs.fundamental(total - a, K)
                    rhs = qs.QSymElem(total)
                    for w in cb.shuffles(u, v):
                        rhs = rhs + qs.fundamental(total, cb.des_set(w))
                    need(lhs == rhs, "shuffle rule for F", a=a, I=I, K=K)
                    count += 1
    return {"checked": count}


@suite("truncation-ring-map", 6)
def _truncation(N):
    rng = random.Random(3)
    for _ in range(20):
        a = rng.randint(0, N // 2)
        b = rng.randint(0, N - a)
        f, g = _random_qsym(rng, a), _random_qsym(rng, b)
        need(qs.expand_truncated(f * g, 6) == qs.expand_truncated(f, 6) * qs.expand_truncated(g, 6),
             "truncation is not multiplicative", f=f, g=g)
    return {"checked": 20}


@suite("inner-h", 6)
def _inner_h(N):
    count = 0
    for n in range(1, N + 1):
        for lam in cb.partitions(n):
            f = sc.schur(sc.SkewShape(lam))
            poly = qs.expand_truncated(f, n)
            for mu in cb.partitions(n):
                ex = tuple(mu) + (0,) * (n - len(mu))
                need(qs.inner_h(f, mu) == poly.terms.get(ex, 0), "inner_h vs monomial coefficient", lam=lam, mu=mu)
                count += 1
    return {"checked": count}


# ---------------------------------------------------------------- cqsym

@suite("cyclic-invariance", 8)
def _cyclic_invariance(N):
    count = 0
    for n in range(1, N + 1):
        for J in cb.subsets(n):
            M, F = cq.mcyc_as_qsym(n, J), cq.fcyc_as_qsym(n, J)
            for i in range(1, n):
                R = cb.rotate(J, i, n)
                need(cq.mcyc_as_qsym(n, R) == M and cq.fcyc_as_qsym(n, R) == F, "rotation changes value", n=n, J=J)
                count += 1
    return {"checked": count}


@suite("linear-dependence", 8)
def _linear_dependence(N):
    for n in range(1, N + 1):
        total = qs.QSymElem(n)
        for J in cb.subsets(n):
            total = total + (-1) ** len(J) * cq.fcyc_as_qsym(n, J)
        need(total.is_zero(), "alternating sum of F^cyc is not zero", n=n)
        norm = qs.QSymElem(n)
        for A in cb.all_classes(n, include_empty=True):
            norm = norm + (-1) ** A.rank * cq.basis_element_qsym(n, A, "hFcyc")
        need(norm.is_zero(), "normalized alternating sum is not zero", n=n)
    return {"checked": N}


def _det(rows):
    m = [list(map(Fraction, r)) for r in rows]
    size, det = len(m), Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@suite("unimodular-basis", 8)
def _unimodular(N):
    for n in range(1, N + 1):
        order, rows = cq.basis_matrix(n)
        need(all(x.denominator == 1 for r in rows for x in r), "non-integral change of basis", n=n)
        need(abs(_det(rows)) == 1, "determinant is not a unit", n=n)
        for A in order:
            e = cq.CQSymElem(n, "hFcyc", {A: 1})
            back = cq.hmcyc_to_hfcyc(cq.hfcyc_to_hmcyc(e))
            need(back == e and all(c.denominator == 1 for c in cq.hfcyc_to_hmcyc(e).coeffs.values()),
                 "round trip fails", n=n, A=A)
            need(e.to_qsym() == cq.hfcyc_to_hmcyc(e).to_qsym(), "change of basis changes the function", n=n, A=A)
    return {"checked": N}


def _realizable_sets(a):
    return [J for J in cb.subsets(a) if cq.realizable(a, J)]


@suite("product-theorem", 7)
def _product_theorem(N):
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            b = total - a
            for J in _realizable_sets(a):
                for K in _realizable_sets(b):
                    via = cq.product_via_cyclic_shuffles(a, J, b, K)
                    need(via == cq.fcyc_as_qsym(a, J) * cq.fcyc_as_qsym(b, K), "product theorem", a=a, J=J, b=b, K=K)
                    count += 1
    return {"checked": count}


@suite("structure-constants", 7)
def _structure_constants(N):
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            b = total - a
            for A in cb.all_classes(a):
                for B in cb.all_classes(b):
                    full = A.rank == a or B.rank == b
                    if full and total > min(N, 6):
                        continue
                    prod = cq.basis_element_qsym(a, A, "hFcyc") * cq.basis_element_qsym(b, B, "hFcyc")
                    coords = cq.from_qsym(prod).to_basis("hFcyc").coeffs
                    need(all(c >= 0 and c.denominator == 1 for c in coords.values()),
                         "structure constant not a nonnegative integer", A=A, B=B)
                    if not full:
                        need(cq.is_non_escher(cq.from_qsym(prod)), "product leaves the non-Escher part", A=A, B=B)
                    count += 1
    return {"checked": count}


@suite("representative-independence", 5)
def _rep_independence(N):
    count = 0
    for a in range(1, N + 1):
        for J in _realizable_sets(a):
            words = [w for w in permutations(range(1, a + 1)) if cb.cdes_set(w) == J]
            for b, K in ((1, ()), (2, (1,))):
                v = cq.representative(b, K, a)
                ref = cq.product_via_cyclic_shuffles(a, J, b, K)
                for u in words:
                    need(cq.product_via_cyclic_shuffles(a, J, b, K, u=u, v=v) == ref, "depends on representative",
                         u=u, v=v)
                    count += 1
    return {"checked": count}


@suite("omega-ring-map", 6)
def _omega(N):
    rng = random.Random(5)
    for _ in range(15):
        a = rng.randint(1, N - 1)
        b = rng.randint(1, N - a)
        f = cq.CQSymElem(a, "hFcyc", {rng.choice(cb.all_classes(a)): rng.randint(1, 3)})
        g = cq.CQSymElem(b, "hFcyc", {rng.choice(cb.all_classes(b)): rng.randint(1, 3)})
        need(cq.omega(f * g) == cq.omega(f) * cq.omega(g), "omega is not multiplicative", f=f, g=g)
        need(cq.omega(cq.omega(f)) == f, "omega is not an involution", f=f)
        need(cq.omega(f).to_qsym() == qs.omega_qsym(f.to_qsym()), "omega disagrees with QSym", f=f)
    return {"checked": 15}


@suite("cdes-star", 7)
def _cdes_star(N):
    count = 0
    for total in range(3, N + 1):
        for a in range(1, total - 1):
            b = total - a
            for tail in permutations(range(a + 2, total + 1)):
                W = cq.w_set(a, (a + 1, *tail))
                Wset = set(W)
                images = {cq.promote_p(w, a, b) for w in W}
                need(images == Wset, "p is not a bijection of W", a=a, w0=(a + 1, *tail))
                for w in W:
                    S = cq.cdes_star(w, a, b)
                    need(0 < len(S) < total, "cDes* is Escher", w=w)
                    T = cq.cdes_star(cq.promote_p(w, a, b), a, b)
                    need(T == cb.rotate(S, 1, total), "cDes* is not equivariant", w=w)
                    count += 1
    return {"checked": count}


# ---------------------------------------------------------------- toric

@suite("toric-closure-flips", 6)
def _toric_flips(N):
    rng = random.Random(13)
    count = 0
    for _ in range(60):
        D = tr.random_dag(rng, rng.randint(1, N), rng.random())
        for v in set(D.sources()) | set(D.sinks()):
            need(tr.is_toric_closed(D) == tr.is_toric_closed(tr.flip(D, v)), "toric closedness not flip invariant",
                 dag=str(D), v=v)
            count += 1
        C = tr.toric_transitive_closure(D)
        need(tr.toric_transitive_closure(C) == C, "toric closure not idempotent", dag=str(D))
        need(C.arcs <= tr.transitive_closure(D).arcs, "toric closure exceeds transitive closure", dag=str(D))
    return {"checked": count}


@suite("toric-fundamental-lemma", 6)
def _toric_lemma(N):
    rng = random.Random(17)
    for _ in range(60):
        D = tr.random_dag(rng, rng.randint(1, N), rng.random())
        rep = tr.fundamental_decomposition(D, rng.randint(1, 4))
        need(rep["covered"] and rep["disjoint"], "toric decomposition fails", dag=str(D), report=rep)
    return {"checked": 60}


@suite("ordinary-fundamental-lemma", 6)
def _ordinary_lemma(N):
    rng = random.Random(19)
    for _ in range(60):
        D = tr.random_dag(rng, rng.randint(1, N), rng.random())
        K = rng.randint(1, 4)
        whole = tr.d_partitions(D, K)
        pieces = [tr.d_partitions(tr.chain(w), K) for w in tr.linear_extensions(D)]
        need(sum(map(len, pieces)) == len(whole) and set().union(*pieces) == whole, "ordinary decomposition fails",
             dag=str(D))
    return {"checked": 60}


@suite("toric-shuffle-extensions", 7)
def _toric_shuffles(N):
    count = 0
    for total in range(2, N + 1):
        for a in range(1, total):
            u = tuple(range(1, a + 1))[::-1]
            v = tuple(range(a + 1, total + 1))
            D = tr.disjoint_union(tr.total_order(u), tr.total_order(v))
            need(set(tr.toric_extensions(D)) == cb.cyclic_shuffles(u, v), "toric extensions vs cyclic shuffles",
                 u=u, v=v)
            count += 1
    return {"checked": count}


@suite("toric-enumerator", 5)
def _toric_enum(N):
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(1, N)
        D = tr.random_dag(rng, n, rng.random())
        T = tr.toric_class(D)
        lhs = qs.expand_truncated(tr.toric_enumerator(T), n)
        rhs = tr.partition_genfun(tr.toric_partitions(T, n), n)
        need(lhs == rhs, "toric enumerator differs from partition count", dag=str(D))
        if n <= 5:
            need(tr.toric_extensions(T) == tr.toric_extensions_by_definition(T), "toric extension definitions",
                 dag=str(D))
    return {"checked": 30}


# ---------------------------------------------------------------- schur

def _proper_shapes(N):
    for n in range(1, N + 1):
        for sh in sc.skew_shapes(n):
            if not sh.is_connected_ribbon:
                yield sh


@suite("fiber-sum", 6)
def _fiber_sum(N):
    count = 0
    for sh in _proper_shapes(N):
        tab = sc.cdes_fibers(sh)
        n = sh.n
        need(all(m >= 0 and m.denominator == 1 for m in tab.fibers.values()), "negative or fractional fiber",
             shape=str(sh))
        need(tab.total() == sc.num_syt(sh), "fiber total differs from f", shape=str(sh))
        full = tuple(range(1, n + 1))
        if n >= 2:
            need(tab.value(full) == 0, "[[n]] has a nonzero fiber", shape=str(sh))
        lhs = qs.QSymElem(n)
        for J in cb.subsets(n):
            if J:
                lhs = lhs + tab.value(J) * cq.fcyc_as_qsym(n, J)
        rhs = n * sc.schur(sh)
        need(lhs == rhs, "cyclic vs ordinary F-expansion", shape=str(sh))
        need(cq.from_qsym(sc.schur(sh)).to_basis("hFcyc").coeffs == tab.fibers, "two routes to hF coordinates",
             shape=str(sh))
        count += 1
    return {"checked": count}


@suite("fiber-rotation", 5)
def _fiber_rotation(N):
    count = 0
    for sh in _proper_shapes(N):
        s = sc.schur(sh)
        for J in cb.subsets(sh.n):
            if J:
                vals = {sc.hfcyc_coordinate(s, cb.rotate(J, i, sh.n)) for i in range(sh.n)}
                need(len(vals) == 1, "fiber not rotation invariant", shape=str(sh), J=J)
                count += 1
    return {"checked": count}


@suite("integrality", 6)
def _integrality(N):
    rng = random.Random(29)
    for _ in range(20):
        n = rng.randint(2, N)
        parts = cb.partitions(n)
        coords = {lam: rng.randint(-3, 3) for lam in rng.sample(parts, min(3, len(parts)))}
        f = sc.from_schur(n, coords)
        hf = sc.sym_to_hfcyc(f)
        need(all(c.denominator == 1 for c in hf.coeffs.values()), "integral Schur gives fractional hF", coords=coords)
        lam = rng.choice(parts)
        g = f + Fraction(1, 2) * sc.schur(sc.SkewShape(lam))
        need(any(c.denominator != 1 for c in sc.sym_to_hfcyc(g).coeffs.values()), "fractional Schur gives integral hF",
             coords=coords, lam=lam)
    return {"checked": 20}


@suite("omega-duality", 6)
def _omega_duality(N):
    count = 0
    for sh in _proper_shapes(N):
        tab, dual = sc.cdes_fibers(sh), sc.cdes_fibers(sh.conjugate())
        n = sh.n
        for J in cb.subsets(n):
            comp = tuple(x for x in range(1, n + 1) if x not in J)
            if J and comp:
                need(dual.value(J) == tab.value(comp), "conjugate fibers are not complementary", shape=str(sh), J=J)
        count += 1
    return {"checked": count}


@suite("hooks", 8)
def _hooks(N):
    for n in range(1, N + 1):
        for k in range(n):
            rep = sc.hook_expansion(n, k)
            need(rep["raw_holds"] and rep["normalized_holds"], "hook expansion fails", n=n, k=k)
        for k in range(n + 1):
            tab = sc.cdes_fibers(sc.oplus((1,) * k, (n - k,)))
            if 0 < k < n:
                need(all(tab.value(J) == (len(J) == k) for J in cb.subsets(n) if J), "column-row fibers", n=n, k=k)
    return {"checked": N}


@suite("near-hooks", 7)
def _near_hooks(N):
    count = 0
    for n in range(4, N + 1):
        for k in range(2, n - 1):
            for J, d in sc.near_hook_difference(n, k).items():
                need(d == (len(J) == k), "near-hook difference", n=n, k=k, J=J, got=d)
                count += 1
    return {"checked": count}


@suite("eulerian", 6)
def _eulerian(N):
    for n in range(2, N + 1):
        rep = sc.sn_cdes_identity(n)
        need(rep["holds"], "cyclic Eulerian identity", n=n, mismatches=rep["mismatches"])
    return {"checked": N - 1}


@suite("disconnected-shuffle", 9)
def _disconnected(N):
    nonhooks = [lam for m in range(4, N - 3) for lam in cb.partitions(m) if not sc.SkewShape(lam).is_hook]
    count = 0
    for lam in nonhooks:
        for mu in nonhooks:
            if sum(lam) + sum(mu) <= N:
                rep = sc.disconnected_shuffle_identity(lam, mu)
                need(rep["holds"], "disconnected shape identity", lam=lam, mu=mu)
                count += 1
    return {"checked": count}


# ---------------------------------------------------------------- enumer

def _basis_list(max_deg):
    out = [(0, "F", ())]
    for a in range(1, max_deg + 1):
        out += [(a, "F", J) for J in cb.subsets(a - 1)]
        out += [(a, "Fcyc", A.canonical) for A in cb.all_classes(a, include_empty=True)]
    return out


def _elem(a, kind, J):
    return qs.fundamental(a, J) if kind == "F" else cq.fcyc_as_qsym(a, J)


@suite("psi-homomorphism", 6)
def _psi_hom(N):
    R = 12
    count = 0
    items = _basis_list(N)
    for a, k1, J in items:
        for b, k2, K in items:
            if a + b <= N:
                f, g = _elem(a, k1, J), _elem(b, k2, K)
                need(en.psi(f * g, R) == en.odot(en.psi(f, R), en.psi(g, R)), "psi is not multiplicative",
                     f=(a, k1, J), g=(b, k2, K))
                count += 1
    return {"checked": count}


@suite("psi-lemmas", 7)
def _psi_lemmas(N):
    R = 14
    count = 0
    for m in range(1, N):
        for n in range(1, N - m + 1):
            for J in cb.subsets(m - 1):
                for K in cb.subsets(n - 1):
                    ff = en.psi(qs.fundamental(m, J) * qs.fundamental(n, K), R)
                    need(ff == en.psi_FF_closed(m, len(J), n, len(K), R), "Psi(FF) closed form", m=m, J=J, n=n, K=K)
                    mm = en.psi(qs.monomial(m, J) * qs.monomial(n, K), R)
                    need(mm == en.psi_MM_closed(len(J), len(K), R), "Psi(MM) closed form", m=m, J=J, n=n, K=K)
                    count += 1
    return {"checked": count}


@suite("psi-closed-forms", 5)
def _psi_closed(N):
    R = 7
    count = 0
    for n in range(1, N + 1):
        for J in cb.subsets(n - 1):
            for f, closed in ((qs.fundamental(n, J), en.psi_F_closed(n, len(J), R)),
                              (qs.monomial(n, J), en.psi_M_closed(n, len(J), R))):
                need(en.psi(f, R) == closed == en.psi_by_monomials(f, R), "Psi closed form", n=n, J=J)
        for J in cb.subsets(n):
            for f, closed in ((cq.fcyc_as_qsym(n, J), en.psi_Fcyc_closed(n, len(J), R)),
                              (cq.mcyc_as_qsym(n, J), en.psi_Mcyc_closed(n, len(J), R))):
                need(en.psi(f, R) == closed == en.psi_by_monomials(f, R), "cyclic Psi closed form", n=n, J=J)
            count += 1
    return {"checked": count}


@suite("cdes-closed-forms", 12)
def _cdes_closed(N):
    count = 0
    for m in range(1, N):
        for n in range(1, N - m + 1):
            for i in ([0] if m == 1 else range(1, m)):
                for j in ([0] if n == 1 else range(1, n)):
                    vec = en.cdes_shuffle_dist(m, n, i, j)
                    need(sum(vec) == cb.num_cyclic_shuffles(m, n), "cyclic shuffle total", m=m, n=n, i=i, j=j)
                    need(vec == en.cdes_shuffle_dist(n, m, j, i), "symmetry", m=m, n=n, i=i, j=j)
                    count += 1
    return {"checked": count}


@suite("des-distribution", 9)
def _des_dist(N):
    rng = random.Random(31)
    count = 0
    for m in range(1, N):
        for n in range(1, N - m + 1):
            for i in range(m):
                for j in range(n):
                    letters = list(range(1, m + n + 1))
                    rng.shuffle(letters)
                    u = en.word_with(m, cb.des_set, i, sorted(letters[:m]))
                    v = en.word_with(n, cb.des_set, j, sorted(letters[m:]))
                    vec = en.des_shuffle_dist(m, n, i, j)
                    need(vec == en.des_dist_brute(u, v), "descent distribution", u=u, v=v)
                    need(en.des_shuffle_genfun(m, n, i, j, u=u, v=v)["holds"], "descent generating function", u=u, v=v)
                    count += 1
    return {"checked": count}


@suite("cdes-distribution", 9)
def _cdes_dist(N):
    rng = random.Random(37)
    count = 0
    for m in range(1, N):
        for n in range(1, N - m + 1):
            for i in ([0] if m == 1 else range(1, m)):
                for j in ([0] if n == 1 else range(1, n)):
                    letters = list(range(1, m + n + 1))
                    rng.shuffle(letters)
                    u = en.word_with(m, cb.cdes_set, i, sorted(letters[:m]))
                    v = en.word_with(n, cb.cdes_set, j, sorted(letters[m:]))
                    need(en.cdes_shuffle_dist(m, n, i, j) == en.cdes_dist_brute(u, v), "cyclic descent distribution",
                         u=u, v=v)
                    need(en.cdes_shuffle_genfun(m, n, i, j, u=u, v=v)["holds"], "cyclic generating function", u=u, v=v)
                    count += 1
    return {"checked": count}


# ---------------------------------------------------------------- descent

@suite("a-well-defined", 6)
def _a_well_defined(N):
    for n in range(1, N + 1):
        table = ds.a_table(n)
        sizes = {J: len(ds.d_elem(n, J).terms) for J in cb.subsets(n - 1)}
        for I in sizes:
            for J in sizes:
                mass = sum(table.get((I, J, K), 0) * sizes[K] for K in sizes)
                need(mass == sizes[I] * sizes[J], "a-constant mass", n=n, I=I, J=J)
        if n >= 2:
            ds.tilde_a_table(n)
    return {"checked": N}


@suite("coproduct-integrality", 6)
def _coproduct_integrality(N):
    count = 0
    for n in range(2, N + 1):
        for B in ds.non_escher_classes(n):
            if B.rank == 0:
                continue
            for (A, J), c in ds.coproduct_fcyc(n, B).items():
                need(c >= 0 and c.denominator == 1, "coproduct coefficient", n=n, A=A, J=J, B=B)
                need(A.rank not in (0, n), "coproduct leaves the non-Escher part", n=n, A=A, B=B)
                count += 1
    return {"checked": count}


@suite("cauchy", 5)
def _cauchy(N):
    for n in range(1, N + 1):
        for twist in (False, True):
            need(ds.cauchy_perm_form(n, twist) == ds.cauchy_schur_form(n, twist), "Cauchy identity", n=n, twist=twist)
            B = cb.cyclic_class(n, tuple(range(1, n + 1)) if twist else ())
            got = ds.coproduct_to_FF(n, ds.coproduct_fcyc(n, B))
            want = {k: Fraction(v) for k, v in ds.cauchy_perm_form(n, twist).items()}
            need(got == want, "coproduct of h_n or e_n", n=n, twist=twist)
    return {"checked": N}


def _two_alphabet(f, k):
    out: dict = {}
    for ex, c in qs.expand_truncated(f, k * k).terms.items():
        x, y = [0] * k, [0] * k
        for idx, v in enumerate(ex):
            x[idx // k] += v
            y[idx % k] += v
        key = (tuple(x), tuple(y))
        out[key] = out.get(key, 0) + c
    return {key: v for key, v in out.items() if v}


def _tensor_expand(n, terms, k):
    out: dict = {}
    for (A, J), c in terms.items():
        L = qs.expand_truncated(cq.basis_element_qsym(n, A, "hFcyc"), k)
        R = qs.expand_truncated(qs.fundamental(n, J), k)
        for e1, a in L.terms.items():
            for e2, b in R.terms.items():
                out[(e1, e2)] = out.get((e1, e2), 0) + c * a * b
    return {key: v for key, v in out.items() if v}


@suite("coproduct-two-alphabet", 4)
def _coproduct_two_alphabet(N):
    count = 0
    for n in range(1, N + 1):
        for B in cb.all_classes(n, include_empty=True):
            lhs = _two_alphabet(cq.basis_element_qsym(n, B, "hFcyc"), 3)
            need(lhs == _tensor_expand(n, ds.coproduct_fcyc(n, B), 3), "coproduct vs two alphabets", n=n, B=B)
            count += 1
    return {"checked": count}


@suite("comodule-coassociativity", 4)
def _coassociativity(N):
    count = 0
    for n in range(2, N + 1):
        for B in cb.all_classes(n, include_empty=True):
            first = ds.coproduct_fcyc(n, B)
            lhs: dict = {}
            rhs: dict = {}
            for (A, J), c in first.items():
                for (A2, J2), c2 in ds.coproduct_fcyc(n, A).items():
                    key = (A2, J2, J)
                    lhs[key] = lhs.get(key, 0) + c * c2
                for (I, I2), a in ds.coproduct_qsym(n, J).items():
                    key = (A, I, I2)
                    rhs[key] = rhs.get(key, 0) + c * a
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            need(lhs == rhs, "comodule coassociativity", n=n, B=B)
            count += 1
    return {"checked": count}


@suite("left-module", 6)
def _left_module(N):
    for n in range(2, N + 1):
        rep = ds.left_module_check(n)
        need(rep["holds"], "left module expansion", n=n, failures=rep["failures"])
    return {"checked": N - 1}


__all__ = ["SUITES", "run", "need"]
