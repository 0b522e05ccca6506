from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cyclicqsym import combinatorics as cb
from cyclicqsym import descent as ds
from cyclicqsym import verify
from cyclicqsym.errors import CapExceeded, CQSymError

import oracles


def perm_sum(n, perms):
    return ds.PermSum(n, {p: 1 for p in perms})


def test_compose_convention():
    s1, s2 = (2, 1, 3), (1, 3, 2)
    # apply s1 first, then s2
    assert ds.compose(s2, s1) == tuple(s2[s1[i] - 1] for i in range(3))
    assert ds.compose(ds.inverse(s1), s1) == (1, 2, 3)


def test_small_descent_elements():
    assert ds.d_elem(2, ()) == perm_sum(2, [(1, 2)])
    assert ds.d_elem(2, (1,)) == perm_sum(2, [(2, 1)])
    A = cb.cyclic_class(3, (1,))
    assert ds.cd_elem(3, A) == perm_sum(3, [(1, 2, 3), (2, 3, 1), (3, 1, 2)])


def test_escher_classes_rejected():
    with pytest.raises(CQSymError):
        ds.cd_elem(3, cb.cyclic_class(3, ()))
    with pytest.raises(CQSymError):
        ds.cd_elem(3, cb.cyclic_class(3, (1, 2, 3)))


@pytest.mark.parametrize("n", range(2, 7))
def test_cd_supports_partition(n):
    seen = set()
    for A in ds.non_escher_classes(n):
        supp = ds.cd_elem(n, A).support()
        assert not (seen & supp)
        seen |= supp
    assert len(seen) == factorial(n)


@given(st.permutations(list(range(1, 5))), st.permutations(list(range(1, 5))), st.permutations(list(range(1, 5))))
@settings(max_examples=30)
def test_group_ring_associative(a, b, c):
    x, y, z = (ds.PermSum(4, {tuple(p): 1}) for p in (a, b, c))
    assert ds.gr_multiply(ds.gr_multiply(x, y), z) == ds.gr_multiply(x, ds.gr_multiply(y, z))
    assert ds.gr_multiply(ds.identity(4), x) == x


@pytest.mark.parametrize("n", range(1, 6))
def test_solomon_expansion(n):
    table = ds.a_table(n)
    for I in cb.subsets(n - 1):
        for J in cb.subsets(n - 1):
            lhs = ds.gr_multiply(ds.d_elem(n, J), ds.d_elem(n, I))
            rhs = ds.PermSum(n)
            for K in cb.subsets(n - 1):
                c = table.get((I, J, K), 0)
                if c:
                    rhs = rhs + ds.d_elem(n, K).scale(c)
            assert lhs == rhs


def test_a_constant_with_empty_descent():
    n = 4
    for J in cb.subsets(n - 1):
        for K in cb.subsets(n - 1):
            assert ds.a_const(n, (), J, K) == (J == K)


@pytest.mark.parametrize("n", range(2, 7))
def test_coproduct_integral_and_non_escher(n):
    for B in ds.non_escher_classes(n):
        for (A, J), c in ds.coproduct_fcyc(n, B).items():
            assert c >= 0 and c.denominator == 1
            assert 0 < A.rank < n


@pytest.mark.parametrize("n", range(1, 6))
def test_cauchy_forms(n):
    for twist in (False, True):
        assert ds.cauchy_perm_form(n, twist) == ds.cauchy_schur_form(n, twist)


@pytest.mark.parametrize("n", range(2, 6))
def test_left_module(n):
    assert ds.left_module_check(n)["holds"]


def test_identity_acts_trivially():
    n = 4
    for A in ds.non_escher_classes(n):
        cd = ds.cd_elem(n, A)
        assert ds.gr_multiply(ds.d_elem(n, ()), cd) == cd


def test_smallest_witnesses():
    n, (A, B) = ds.smallest_witness(ds.non_algebra_witness)
    assert n == 5 and A.canonical == (1,) and B.canonical == (1, 2)
    n, (A, J) = ds.smallest_witness(ds.non_right_module_witness)
    assert n == 4 and A.canonical == (1,) and J == (1,)


def test_no_witness_below_threshold():
    assert ds.non_algebra_witness(4) is None
    assert ds.non_right_module_witness(3) is None


def test_two_alphabet_and_coassociativity():
    assert verify.run("coproduct-two-alphabet", 3)["checked"] > 0
    assert verify.run("comodule-coassociativity", 4)["checked"] > 0


def test_cdes_tally_matches_oracle():
    G = ds.symmetric_group(5)
    for k, p in enumerate(G.perms):
        assert G.classes[int(G.cdes[k])] == cb.cyclic_class(5, oracles.cdes(p))


def test_group_ring_cap():
    with pytest.raises(CapExceeded):
        ds.symmetric_group(9)


def test_permsum_json():
    assert ds.d_elem(2, (1,)).to_json() == {"n": 2, "terms": [{"perm": [2, 1], "coeff": 1}]}
