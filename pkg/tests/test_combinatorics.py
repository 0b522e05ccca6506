from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cyclicqsym import combinatorics as cb
from cyclicqsym.errors import CQSymError

import oracles


@st.composite
def subset_of(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    J = draw(st.frozensets(st.integers(1, n)))
    return n, tuple(sorted(J))


@st.composite
def two_words(draw, max_total=7):
    total = draw(st.integers(2, max_total))
    a = draw(st.integers(1, total - 1))
    letters = draw(st.permutations(list(range(1, total + 1))))
    return tuple(letters[:a]), tuple(letters[a:])


# --- parsing and formatting

def test_parse_set_and_nsubset():
    assert cb.parse_set("{1, 3,5}") == (1, 3, 5)
    assert cb.parse_set("{}") == ()
    s = cb.NSubset.parse("{1,3,5}/7")
    assert (s.n, s.elements) == (7, (1, 3, 5))
    assert str(s) == "{1,3,5}/7"


@pytest.mark.parametrize("bad", ["1,2", "{1,a}", "{1,1}"])
def test_parse_set_rejects(bad):
    with pytest.raises(CQSymError):
        cb.parse_set(bad)


def test_subset_bounds():
    with pytest.raises(CQSymError):
        cb.as_subset((0, 2), 3)
    with pytest.raises(CQSymError):
        cb.NSubset.parse("{4}/3")


# --- cyclic classes

def test_class_examples():
    A = cb.cyclic_class(4, (2, 4))
    assert A.canonical == (1, 3) and A.d == 2 and A.orbit_size == 2 and A.rank == 2
    assert cb.cyclic_class(4, (1, 2, 3, 4)).d == 4
    assert cb.cyclic_class(5, (1, 3)).orbit_size == 5
    assert cb.cyclic_class(6, (2, 4, 6)).canonical == (1, 3, 5)


def test_table_order_n4():
    order = cb.table_order(cb.all_classes(4))
    assert [A.canonical for A in order] == [(1, 2, 3, 4), (1, 2, 3), (1, 3), (1, 2), (1,)]


@given(subset_of())
def test_orbit_stabilizer(nJ):
    n, J = nJ
    A = cb.cyclic_class(n, J)
    assert A.orbit_size * A.d == n
    assert all(cb.cyclic_class(n, M) == A for M in A.members)


@pytest.mark.parametrize("n", range(1, 13))
def test_burnside_against_enumeration(n):
    assert cb.count_cyclic_classes(n) == len(oracles.rotation_orbits(n))


def test_burnside_small_values():
    # nonempty subsets up to rotation: necklaces minus the empty one
    assert [cb.count_cyclic_classes(n) for n in range(1, 7)] == [1, 2, 3, 5, 7, 13]


# --- compositions

def test_co_examples():
    assert cb.co((2, 3), 5) == (2, 1, 2)
    assert cb.co((), 3) == (3,)
    assert cb.co_inverse((2, 1, 2)) == (2, 3)


def test_cc_examples():
    assert cb.cc((1, 3), 5) == (2, 3)
    assert cb.cc((2,), 4) == (4,)
    with pytest.raises(CQSymError):
        cb.cc((), 4)


@given(subset_of(8), st.integers(0, 20))
def test_cc_rotates(nJ, i):
    n, J = nJ
    if not J:
        return
    base, moved = cb.cc(J, n), cb.cc(cb.rotate(J, i, n), n)
    assert any(base[k:] + base[:k] == moved for k in range(len(base)))


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.frozensets(st.integers(1, n - 1)) if n > 1 else st.just(frozenset()))))
def test_co_roundtrip(nJ):
    n, J = nJ
    J = tuple(sorted(J))
    assert cb.co_inverse(cb.co(J, n)) == J
    assert sum(cb.co(J, n)) == n


def test_partitions_listing():
    assert cb.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(cb.compositions(5)) == 16


# --- words and shuffles

def test_des_cdes():
    assert cb.des_set((3, 1, 2)) == (1,)
    assert cb.cdes_set((3, 1, 2)) == (1,)
    assert cb.cdes_set((3, 1, 2, 5, 4)) == (1, 4, 5)
    assert cb.cdes_set((1,)) == ()


@given(st.permutations(list(range(1, 8))))
def test_cdes_matches_oracle_and_rotates(w):
    w = tuple(w)
    assert cb.cdes_set(w) == oracles.cdes(w)
    assert cb.cdes_set(w[1:] + w[:1]) == cb.rotate(cb.cdes_set(w), -1, len(w))


def test_cyclic_word_canonical():
    assert cb.cyclic_word((3, 1, 2)) == (1, 2, 3)
    assert cb.cyclic_word((5, 4)) == (4, 5)


def test_cyclic_shuffles_singletons():
    # [1] and [2] give a single class on two letters
    assert cb.cyclic_shuffles((1,), (2,)) == {(1, 2)}


def test_cyclic_shuffle_worked_example():
    classes = cb.cyclic_shuffles((3, 1, 2), (5, 4))
    assert len(classes) == 12


@given(two_words())
@settings(max_examples=60)
def test_cyclic_shuffles_against_oracle(uv):
    u, v = uv
    got = cb.cyclic_shuffles(u, v)
    assert got == oracles.cyclic_shuffle_classes(u, v)
    assert got == cb.cyclic_shuffles_by_definition(u, v)
    a, b = len(u), len(v)
    assert len(got) == factorial(a + b - 1) // (factorial(a - 1) * factorial(b - 1))


def test_binom_edges():
    assert cb.binom(5, 2) == 10
    assert cb.binom(3, 5) == 0
    assert cb.binom(3, -1) == 0


def test_check_word_rejects_repeats():
    with pytest.raises(CQSymError):
        cb.check_word((1, 1))
