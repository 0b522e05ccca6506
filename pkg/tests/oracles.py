"""Brute-force reference implementations used only by the tests.

Nothing here calls the library's algorithms; results are plain dicts from
exponent vectors to integer counts.
"""
from collections import Counter
from itertools import permutations, product


def pcyc_genfun(n, J, k):
    """F^cyc_{n,J} in k variables, straight from the pairs (w, idx) definition."""
    J = set(J)
    out = Counter()
    for w in product(range(1, k + 1), repeat=n):
        for idx in range(1, n + 1):
            order = list(range(idx - 1, n)) + list(range(0, idx - 1))
            if any(w[order[t]] > w[order[t + 1]] for t in range(n - 1)):
                continue
            skip = (idx - 1) % n or n
            ok = True
            for j in J:
                if j == skip:
                    continue
                if not w[j - 1] < w[j % n]:
                    ok = False
                    break
            if ok:
                out[_exponent(w, k)] += 1
    return dict(out)


def fundamental_genfun(n, J, k):
    """F_{n,J}: weakly increasing words, strict at the positions in J."""
    out = Counter()
    for w in product(range(1, k + 1), repeat=n):
        if all(w[t] <= w[t + 1] for t in range(n - 1)) and all(w[j - 1] < w[j] for j in J):
            out[_exponent(w, k)] += 1
    return dict(out)


def schur_genfun(lam, mu, k):
    """Skew Schur function in k variables by enumerating semistandard fillings."""
    mu = list(mu) + [0] * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    out = Counter()
    for vals in product(range(1, k + 1), repeat=len(cells)):
        T = dict(zip(cells, vals))
        if all(T[(r, c)] <= T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T) and all(
            T[(r, c)] < T[(r + 1, c)] for (r, c) in cells if (r + 1, c) in T
        ):
            out[_exponent(vals, k)] += 1
    return dict(out)


def _exponent(w, k):
    ex = [0] * k
    for x in w:
        ex[x - 1] += 1
    return tuple(ex)


def cdes(w):
    n = len(w)
    return tuple(sorted(i + 1 for i in range(n) if w[i] > w[(i + 1) % n])) if n > 1 else ()


def des(w):
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def rotation_orbits(n):
    """Rotation orbits of nonempty subsets of [n], by direct closure."""
    seen, orbits = set(), []
    for m in range(1, 2 ** n):
        J = frozenset(i + 1 for i in range(n) if m >> i & 1)
        if J in seen:
            continue
        orbit = {frozenset((j - 1 + s) % n + 1 for j in J) for s in range(n)}
        seen |= orbit
        orbits.append(orbit)
    return orbits


def cyclic_shuffle_classes(u, v):
    """Cyclic shuffles: shuffle every rotation pair, then identify rotations."""
    def shuffles(x, y):
        if not x:
            yield tuple(y)
            return
        if not y:
            yield tuple(x)
            return
        for s in shuffles(x[1:], y):
            yield (x[0],) + s
        for s in shuffles(x, y[1:]):
            yield (y[0],) + s

    def canon(w):
        return min(w[i:] + w[:i] for i in range(len(w)))

    rots = lambda w: [w[i:] + w[:i] for i in range(len(w))]
    return {canon(w) for a in rots(tuple(u)) for b in rots(tuple(v)) for w in shuffles(a, b)}


def cdes_fiber_counts(n):
    out = Counter()
    for p in permutations(range(1, n + 1)):
        out[cdes(p)] += 1
    return out
