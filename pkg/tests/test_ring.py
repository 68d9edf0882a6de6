import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comaxdim.errors import CapExceededError, EmptyGraphError, SpecMismatchError, SpecParseError
from comaxdim.ring import (
    RingSpec,
    enumerate_ideals,
    enumerate_maximal_ideals,
    enumerate_vertices,
    ideal_meet,
    ideal_sum,
    is_comaximal,
    is_contained,
    nil_class,
    nzc,
    parse_ring_spec,
    prime_reduction,
)

from conftest import spec

chains = st.lists(st.integers(1, 4), min_size=2, max_size=4).map(lambda ls: RingSpec.from_lengths(ls))


@pytest.mark.parametrize(
    "text, lengths",
    [
        ("F x F", (1, 1)),
        ("Z4 x Z4 x Z8", (2, 2, 3)),
        ("C5", (5,)),
        ("C2 x C2 x C3", (2, 2, 3)),
        ("z2^3 × f(4)", (3, 1)),
        ("  Z9xZ2 ", (2, 1)),
        ("Z2 X Z2 X Z2", (1, 1, 1)),
    ],
)
def test_parse_ring_spec(text, lengths):
    assert parse_ring_spec(text).chain == lengths


@pytest.mark.parametrize("text", ["", "   ", "F x", "Z6", "Z1", "C0", "Q", "F x x F", "Z2^0"])
def test_parse_rejects(text):
    with pytest.raises(SpecParseError):
        parse_ring_spec(text)


def test_field_order_is_ignored_with_warning(caplog):
    assert parse_ring_spec("F(4) x F(2)") == parse_ring_spec("F x F")
    assert "ignored" in caplog.text


def test_prime_kept_for_labels():
    s = parse_ring_spec("Z4 x Z4 x Z8")
    assert s.format_ideal(s.ideal((2, 1, 1))) == "(Z4,(2),(4))"
    assert s.format_ideal(s.ideal((0, 2, 0))) == "(0,Z4,0)"


def test_enumerate_ideals_counts():
    assert [I.levels for I in enumerate_ideals(spec(1, 1))] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(enumerate_ideals(spec(2, 2, 3))) == 3 * 3 * 4
    assert len(enumerate_ideals(spec(1, 1, 1))) == 8


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_ideals(spec(3, 3, 3), cap=63)
    assert len(enumerate_ideals(spec(3, 3, 3), cap=64)) == 64


def test_enumerate_vertices_examples():
    assert len(enumerate_vertices(spec(1, 1, 1))) == 6
    assert len(enumerate_vertices(spec(2, 2, 3))) == 23
    assert [I.levels for I in enumerate_vertices(spec(1, 1))] == [(0, 1), (1, 0)]


def test_local_ring_has_no_vertices():
    with pytest.raises(EmptyGraphError):
        enumerate_vertices(spec(4))


@given(chains)
def test_vertex_count_identity(s):
    # brute force: proper, and some component at the top (i.e. not inside J(R))
    brute = [
        levels for levels in product(*(range(k + 1) for k in s.chain))
        if levels != s.chain and any(l == k for l, k in zip(levels, s.chain))
    ]
    vs = enumerate_vertices(s)
    assert [I.levels for I in vs] == brute
    assert len(vs) == s.vertex_count() == math.prod(k + 1 for k in s.chain) - math.prod(s.chain) - 1
    assert vs == sorted(vs)


def test_sum_and_meet_examples():
    s = spec(1, 1, 1)
    assert ideal_sum(s.ideal((1, 0, 0)), s.ideal((0, 1, 1))).levels == (1, 1, 1)
    t = spec(2, 2, 3)
    assert ideal_sum(t.ideal((2, 0, 0)), t.ideal((0, 2, 1))).levels == (2, 2, 1)
    assert ideal_meet(s.ideal((1, 1, 0)), s.ideal((0, 1, 1))).levels == (0, 1, 0)
    assert ideal_meet(s.ideal((1, 0, 0)), s.ideal((0, 1, 0))).is_zero


def test_mismatched_rings_rejected():
    with pytest.raises(SpecMismatchError):
        ideal_sum(spec(1, 1).ideal((1, 0)), spec(2, 1).ideal((1, 0)))
    with pytest.raises(SpecMismatchError):
        spec(1, 1).format_ideal(spec(1, 2).ideal((0, 0)))


@settings(max_examples=60)
@given(chains, st.data())
def test_lattice_laws(s, data):
    ideals = enumerate_ideals(s)
    I, J, K = (data.draw(st.sampled_from(ideals)) for _ in range(3))
    assert ideal_sum(I, J) == ideal_sum(J, I)
    assert ideal_meet(I, J) == ideal_meet(J, I)
    assert ideal_sum(ideal_sum(I, J), K) == ideal_sum(I, ideal_sum(J, K))
    assert ideal_meet(ideal_meet(I, J), K) == ideal_meet(I, ideal_meet(J, K))
    assert ideal_sum(I, I) == I == ideal_meet(I, I)
    assert ideal_sum(I, ideal_meet(I, J)) == I == ideal_meet(I, ideal_sum(I, J))
    assert is_contained(I, J) == (ideal_sum(I, J) == J) == (ideal_meet(I, J) == I)


def test_is_comaximal():
    s = spec(1, 1, 1)
    assert is_comaximal(s.ideal((1, 0, 0)), s.ideal((0, 1, 1)))
    assert not is_comaximal(s.ideal((1, 1, 0)), s.ideal((1, 0, 0)))
    t = spec(2, 2, 3)
    assert is_comaximal(t.ideal((2, 2, 0)), t.ideal((0, 0, 3)))
    with pytest.raises(ValueError):
        is_comaximal(s.ideal((1, 0, 0)), s.ideal((1, 0, 0)))


def test_nzc():
    assert nzc(spec(1, 1, 1).ideal((1, 0, 0))) == 1
    assert nzc(spec(1, 1, 1, 1).ideal((1, 1, 0, 0))) == 2
    assert nzc(spec(1, 1, 1).zero) == 0


def test_nil_class_examples():
    t = spec(2, 2, 3)
    assert nil_class(t.ideal((2, 2, 1))).mask == (True, True, False)
    assert nil_class(t.ideal((2, 1, 3))).mask == (True, False, True)


def test_prime_reduction_examples():
    t = spec(2, 2, 3)
    assert prime_reduction(t.ideal((2, 1, 0))).levels == (2, 0, 0)
    assert prime_reduction(t.ideal((1, 2, 2))).levels == (0, 2, 0)


@given(chains)
def test_class_and_reduction_properties(s):
    vs = enumerate_vertices(s)
    for I in vs:
        red = prime_reduction(I)
        assert prime_reduction(red) == red
        assert nil_class(red) == nil_class(I)
        if s.is_reduced:
            assert red == I
            assert nil_class(I).mask == tuple(l > 0 for l in I.levels)
            assert 1 <= nzc(I) <= len(s) - 1
            assert nzc(red) == nzc(I)


def test_maximal_ideals():
    assert [I.levels for I in enumerate_maximal_ideals(spec(1, 1, 1))] == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert [I.levels for I in enumerate_maximal_ideals(spec(1, 1))] == [(0, 1), (1, 0)]
    t = spec(2, 2, 3)
    got = enumerate_maximal_ideals(t)
    assert {I.levels for I in got} == {(1, 2, 3), (2, 1, 3), (2, 2, 2)}


@given(chains)
def test_maximal_ideals_are_the_coatoms(s):
    ideals = enumerate_ideals(s)
    whole = s.whole
    # brute force: proper ideals with no proper ideal strictly above them
    coatoms = {
        I for I in ideals
        if I != whole and not any(J != whole and J != I and is_contained(I, J) for J in ideals)
    }
    assert coatoms == set(enumerate_maximal_ideals(s))
