from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from cyclicqsym import combinatorics as cb
from cyclicqsym import cqsym as cq
from cyclicqsym import enumer as en
from cyclicqsym import qsym as qs
from cyclicqsym.errors import CQSymError

import oracles


def _basis(max_deg):
    out = [qs.one()]
    for a in range(1, max_deg + 1):
        out += [qs.fundamental(a, J) for J in cb.subsets(a - 1)]
        out += [cq.fcyc_as_qsym(a, J) for J in cb.subsets(a)]
    return out


BASIS4 = _basis(4)


def test_qpoly_basics():
    p = en.QPoly(3, [1, 2])
    assert p.coeffs == (1, 2, 0, 0)
    assert (p + p).coeffs == (2, 4, 0, 0)
    assert p.to_json() == {"R": 3, "coeffs": ["1", "2", "0", "0"]}
    with pytest.raises(CQSymError):
        p + en.QPoly(4)


def test_odot_is_max_product():
    R = 5
    for i in range(R + 1):
        for j in range(R + 1):
            got = en.odot(en.QPoly.monomial(R, i), en.QPoly.monomial(R, j))
            assert got == en.QPoly.monomial(R, max(i, j))


@given(st.sampled_from(BASIS4), st.sampled_from(BASIS4))
@settings(max_examples=60, deadline=None)
def test_psi_homomorphism(f, g):
    R = 10
    assert en.psi(f * g, R) == en.odot(en.psi(f, R), en.psi(g, R))


@pytest.mark.parametrize("n", range(1, 5))
def test_psi_closed_forms_against_monomials(n):
    R = 6
    for J in cb.subsets(n - 1):
        assert en.psi_by_monomials(qs.fundamental(n, J), R) == en.psi_F_closed(n, len(J), R)
        assert en.psi_by_monomials(qs.monomial(n, J), R) == en.psi_M_closed(n, len(J), R)
    for J in cb.subsets(n):
        assert en.psi_by_monomials(cq.fcyc_as_qsym(n, J), R) == en.psi_Fcyc_closed(n, len(J), R)
        assert en.psi_by_monomials(cq.mcyc_as_qsym(n, J), R) == en.psi_Mcyc_closed(n, len(J), R)


def test_psi_products_closed_forms():
    R = 10
    for m, n in [(1, 1), (2, 3), (3, 3)]:
        for J in cb.subsets(m - 1):
            for K in cb.subsets(n - 1):
                f = qs.fundamental(m, J) * qs.fundamental(n, K)
                assert en.psi(f, R) == en.psi_FF_closed(m, len(J), n, len(K), R)
                g = qs.monomial(m, J) * qs.monomial(n, K)
                assert en.psi(g, R) == en.psi_MM_closed(len(J), len(K), R)


# --- distributions

def test_worked_cyclic_distribution():
    dist = en.cdes_shuffle_dist(3, 2, 1, 1)
    assert dist == [0, 1, 7, 4, 0, 0]
    assert sum(dist) == 12
    assert dist == en.cdes_dist_brute((3, 1, 2), (5, 4))


def test_trivial_descent_distribution():
    assert en.des_shuffle_dist(1, 1, 0, 0) == [1, 1]


def _word(letters, stat, value):
    return next(w for w in permutations(letters) if len(stat(w)) == value)


@st.composite
def des_args(draw, max_total=8, cyclic=False):
    m = draw(st.integers(1, max_total - 1))
    n = draw(st.integers(1, max_total - m))
    if cyclic:
        i = 0 if m == 1 else draw(st.integers(1, m - 1))
        j = 0 if n == 1 else draw(st.integers(1, n - 1))
    else:
        i = draw(st.integers(0, m - 1))
        j = draw(st.integers(0, n - 1))
    return m, n, i, j


@given(des_args())
@settings(max_examples=40, deadline=None)
def test_des_distribution_brute(args):
    m, n, i, j = args
    u = _word(range(1, m + 1), oracles.des, i)
    v = _word(range(m + 1, m + n + 1), oracles.des, j)
    brute = [0] * (m + n)
    for w in cb.shuffles(u, v):
        brute[len(oracles.des(w))] += 1
    assert en.des_shuffle_dist(m, n, i, j) == brute


@given(des_args(cyclic=True))
@settings(max_examples=40, deadline=None)
def test_cdes_distribution_brute(args):
    m, n, i, j = args
    u = _word(range(1, m + 1), oracles.cdes, i)
    v = _word(range(m + 1, m + n + 1), oracles.cdes, j)
    brute = [0] * (m + n + 1)
    for w in oracles.cyclic_shuffle_classes(u, v):
        brute[len(oracles.cdes(w))] += 1
    assert en.cdes_shuffle_dist(m, n, i, j) == brute


@given(des_args(12, cyclic=True))
@settings(max_examples=80)
def test_two_closed_forms_agree(args):
    m, n, i, j = args
    two = [en.cdes_two_term(m, n, i, j, k) for k in range(m + n + 1)]
    frac = [en.cdes_fraction_form(m, n, i, j, k) for k in range(m + n + 1)]
    assert two == frac


@pytest.mark.parametrize("m,n,i,j", [(1, 1, 0, 0), (2, 2, 1, 0), (3, 2, 1, 1), (3, 3, 2, 1)])
def test_generating_functions(m, n, i, j):
    assert en.des_shuffle_genfun(m, n, i, j)["holds"]


@pytest.mark.parametrize("m,n,i,j", [(1, 1, 0, 0), (2, 2, 1, 1), (3, 2, 1, 1), (3, 3, 2, 1), (4, 2, 2, 1)])
def test_cyclic_generating_functions(m, n, i, j):
    assert en.cdes_shuffle_genfun(m, n, i, j)["holds"]


def test_unrealizable_cyclic_arguments():
    with pytest.raises(CQSymError):
        en.cdes_shuffle_dist(3, 2, 0, 1)
    with pytest.raises(CQSymError):
        en.des_shuffle_dist(3, 2, 3, 0)
