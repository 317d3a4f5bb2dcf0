import pytest
from hypothesis import given, strategies as st

from oracles import perm_inv, perm_mul
from smallquot.errors import CarrierMismatchError
from smallquot.groups import compose, conjugate, inverse
from smallquot.perm import Permutation, parse_cycles


def perms(max_degree=9):
    return st.integers(1, max_degree).flatmap(
        lambda d: st.permutations(list(range(d))).map(Permutation)
    )


def same_degree(k, max_degree=9):
    return st.integers(1, max_degree).flatmap(
        lambda d: st.tuples(*[st.permutations(list(range(d))).map(Permutation)] * k)
    )


def P(text, n):
    return Permutation.from_cycles(text, n)


def test_product_applies_left_factor_first():
    assert P("(1,2)", 3) * P("(2,3)", 3) == P("(1,3,2)", 3)


def test_identity_and_inverse_examples():
    p = P("(1,3)(2,4,5)", 5)
    assert p * Permutation.identity(5) == p
    assert P("(1,2,3,4)", 4).inverse() == P("(1,4,3,2)", 4)


def test_cycle_string_round_trip():
    p = P("(1,5,2)(3,4)", 6)
    assert str(p) == "(1,5,2)(3,4)"
    assert Permutation.from_cycles(str(p), 6) == p
    assert str(Permutation.identity(4)) == "()"


def test_parse_cycles_accepts_spaces_and_commas():
    assert parse_cycles("(1 2 3)(4,5)") == [[1, 2, 3], [4, 5]]
    with pytest.raises(ValueError):
        parse_cycles("(1,2")
    with pytest.raises(ValueError):
        parse_cycles("(1,a)")


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,2)(2,3)", 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,4)", 3)


def test_compose_rejects_degree_mismatch():
    with pytest.raises(CarrierMismatchError):
        compose(P("(1,2)", 3), P("(1,2)", 4))


def test_conjugate_convention():
    x, g = P("(1,2)", 4), P("(2,3,4)", 4)
    assert conjugate(x, g) == g * x * g.inverse()
    # conjugating (1,2) by g relabels by g^-1 under apply-left-first
    assert conjugate(x, g) == P("(1,4)", 4)


def test_cycle_type_order_sign():
    p = P("(1,2,3)(4,5)", 6)
    assert p.cycle_type() == (3, 2, 1)
    assert p.order() == 6
    assert p.sign() == -1


@given(same_degree(2))
def test_product_matches_oracle(pq):
    p, q = pq
    assert (p * q).images == perm_mul(p.images, q.images)


@given(perms())
def test_inverse_matches_oracle(p):
    assert p.inverse().images == perm_inv(p.images)
    assert (p * inverse(p)).is_identity()
    assert (p.inverse() * p).is_identity()


@given(same_degree(3))
def test_associativity(pqr):
    p, q, r = pqr
    assert (p * q) * r == p * (q * r)


@given(same_degree(2))
def test_key_order_is_lexicographic_image_order(pq):
    p, q = pq
    assert (p.key == q.key) == (p == q)
    assert (p.key < q.key) == (p.images < q.images)


@given(perms(20))
def test_key_round_trip(p):
    assert Permutation.from_key(p.key, p.degree) == p


@given(perms(), st.integers(-7, 7))
def test_power_consistent_with_products(p, k):
    expected = Permutation.identity(p.degree)
    step = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = expected * step
    assert p**k == expected


@given(perms())
def test_cycles_rebuild_the_permutation(p):
    assert Permutation.from_cycles(p.cycles(), p.degree) == p
    assert (p ** p.order()).is_identity()
