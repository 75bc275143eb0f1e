"""Neighbourhood membership, inversion coherence, intersections, and the
line-local character of order neighbourhoods."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elems, small_elems
from realbicyclic import (
    Elem,
    NbhdAc1,
    NbhdAc2,
    NbhdOrder,
    NbhdUsual,
    ZERO,
    classify_line,
    inv,
    inv_ext,
    line_point,
    mul_ext,
    nbhd_intersect_ac2,
    nbhd_invert,
    nbhd_member,
)

ext_elems = st.one_of(st.just(ZERO), elems)


def test_threshold_membership_examples():
    n4 = NbhdAc1(4)
    assert nbhd_member(n4, Elem(5, 1))
    assert nbhd_member(n4, Elem(1, 5))
    assert not nbhd_member(n4, Elem(4, 4))
    assert nbhd_member(n4, ZERO)


def test_segment_complement_membership_examples():
    nb = NbhdAc2((Elem(2, 3),))
    assert not nbhd_member(nb, Elem(1, 2))  # above (2,3)
    assert nbhd_member(nb, Elem(3, 4))
    assert nbhd_member(nb, ZERO)


def test_zero_in_every_zero_neighbourhood():
    assert nbhd_member(NbhdAc1("1/7"), ZERO)
    assert nbhd_member(NbhdAc2((Elem(0, 0),)), ZERO)


def test_positive_parameters_required():
    with pytest.raises(ValueError):
        NbhdAc1(0)
    with pytest.raises(ValueError):
        NbhdUsual(Elem(1, 1), 0)
    with pytest.raises(ValueError):
        NbhdOrder(Elem(1, 1), F(0))
    with pytest.raises(ValueError):
        NbhdAc2(())


def test_usual_box_membership():
    nb = NbhdUsual(Elem(2, 3), F(1, 2))
    assert nbhd_member(nb, Elem("9/4", "13/4"))
    assert not nbhd_member(nb, Elem("5/2", 3))  # boundary excluded
    assert not nbhd_member(nb, Elem(2, 4))
    assert not nbhd_member(nb, ZERO)


def test_order_neighbourhood_is_line_local():
    center = Elem(2, 5)
    nb = NbhdOrder(center, F(3, 4))
    line, x = classify_line(center)
    assert nbhd_member(nb, line_point(line, x + F(1, 2)))
    assert nbhd_member(nb, line_point(line, x - F(1, 2)))
    assert not nbhd_member(nb, line_point(line, x + F(3, 4)))  # radius excluded
    assert not nbhd_member(nb, Elem(2, 6))  # different line
    assert not nbhd_member(nb, ZERO)


@given(small_elems, st.fractions(min_value="1/8", max_value=4, max_denominator=8), small_elems)
def test_order_neighbourhood_members_share_the_line(center, eps, probe):
    nb = NbhdOrder(center, eps)
    if nbhd_member(nb, probe):
        assert classify_line(probe)[0] == classify_line(center)[0]


def test_invert_examples():
    assert nbhd_invert(NbhdAc1(7)) == NbhdAc1(7)
    assert nbhd_invert(NbhdAc2((Elem(2, 3), Elem(5, 1)))) == NbhdAc2(
        (Elem(3, 2), Elem(1, 5))
    )
    with pytest.raises(TypeError):
        nbhd_invert(NbhdUsual(Elem(1, 1), 1))


@given(ext_elems)
def test_invert_threshold_pointwise(e):
    nb = NbhdAc1(F(7, 2))
    assert nbhd_member(nbhd_invert(nb), e) == nbhd_member(nb, inv_ext(e))


@given(ext_elems)
def test_invert_segments_pointwise(e):
    nb = NbhdAc2((Elem(2, 3), Elem(5, 1), Elem("1/2", 4)))
    assert nbhd_member(nbhd_invert(nb), e) == nbhd_member(nb, inv_ext(e))


def test_intersect_examples():
    n1 = NbhdAc2((Elem(1, 1),))
    n2 = NbhdAc2((Elem(2, 3),))
    assert nbhd_intersect_ac2(n1, n2) == NbhdAc2((Elem(1, 1), Elem(2, 3)))
    assert nbhd_intersect_ac2(n1, n1) == n1


@given(ext_elems)
def test_intersect_membership_is_conjunction(e):
    n1 = NbhdAc2((Elem(1, 1), Elem(3, 0)))
    n2 = NbhdAc2((Elem(2, 3),))
    both = nbhd_intersect_ac2(n1, n2)
    assert nbhd_member(both, e) == (nbhd_member(n1, e) and nbhd_member(n2, e))


@given(ext_elems)
def test_zero_absorption_lands_in_every_neighbourhood(e):
    img = mul_ext(ZERO, e)
    assert img is ZERO
    assert nbhd_member(NbhdAc1(3), img)
    assert nbhd_member(NbhdAc2((Elem(4, 2),)), img)
    assert mul_ext(e, ZERO) is ZERO
