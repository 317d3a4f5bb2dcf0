import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import centralizer_size, conj_class, generated, perm_from_cycles, perm_inv, perm_mul, symmetric
from smallquot.errors import (
    CarrierMismatchError,
    CeilingExceededError,
    DomainError,
    NotInGroupError,
    TrivialGroupError,
)
from smallquot.groups import (
    centralizer,
    class_representatives,
    closure,
    conjugacy_class,
    conjugacy_classes_keys,
    conjugate,
    is_simple,
    normal_closure,
    orbit_stabilizer,
    proper_normal_subgroup,
)
from smallquot.named import alternating_group, builtin_group, symmetric_group
from smallquot.perm import Permutation


def P(text, n):
    return Permutation.from_cycles(text, n)


@pytest.mark.parametrize("gens,n,order", [
    ([[(1, 2)], [(2, 3)]], 3, 6),
    ([[(1, 2)], [(1, 2, 3, 4, 5)]], 5, 120),
    ([[(1, 2), (3, 4)], [(1, 3), (2, 4)]], 4, 4),
])
def test_closure_examples(backend, gens, n, order):
    G = closure([Permutation.from_cycles(g, n) for g in gens])
    brute = generated([perm_from_cycles(g, n) for g in gens], perm_mul)
    assert G.order == len(brute) == order
    assert {x.images for x in G} == brute


def test_closure_table_structure(backend):
    G = symmetric_group(4)
    elems = G.elements
    assert len(set(elems)) == G.order == 24
    assert elems[0].is_identity()
    assert all(G.index(x) == i for i, x in enumerate(elems))
    assert all(x * y in G and x.inverse() in G for x in elems for y in elems[::5])


def test_closure_deterministic_and_idempotent(backend):
    gens = [P("(1,3,5)", 6), P("(1,2)(4,6)", 6)]
    a, b = closure(gens), closure(gens)
    assert np.array_equal(a.keys, b.keys)
    assert closure(a.elements).order == a.order


def test_closure_errors():
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(CarrierMismatchError):
        closure([P("(1,2)", 3), P("(1,2)", 4)])


def test_conjugacy_class_examples(backend):
    S4 = symmetric_group(4)
    assert len(conjugacy_class(S4, P("(1,2)", 4))) == 6
    assert conjugacy_class(S4, S4.identity) == frozenset({S4.identity})
    assert len(conjugacy_class(S4, P("(1,2)(3,4)", 4))) == 3
    with pytest.raises(NotInGroupError):
        conjugacy_class(alternating_group(4), P("(1,2)", 4))


def test_centralizer_examples(backend):
    assert centralizer(symmetric_group(5), P("(1,2)", 5)).order == 12
    assert centralizer(symmetric_group(4), Permutation.identity(4)).order == 24
    with pytest.raises(NotInGroupError):
        centralizer(alternating_group(5), P("(1,2)", 5))
    with pytest.raises(CarrierMismatchError):
        centralizer(symmetric_group(5), P("(1,2)", 6))


@pytest.mark.parametrize("n", [4, 5])
def test_class_and_centralizer_against_brute_force(backend, n):
    G = symmetric_group(n)
    raw = symmetric(n)
    for x in G.elements[::3]:
        cls = conjugacy_class(G, x)
        assert {p.images for p in cls} == conj_class(raw, x.images, perm_mul, perm_inv)
        assert centralizer(G, x).order == centralizer_size(raw, x.images, perm_mul)
        assert len(cls) * centralizer(G, x).order == G.order


@pytest.mark.parametrize("name", ["S5", "A6", "sp4", "D4", "Q8"])
def test_class_equation(name):
    G = builtin_group(name)
    classes = conjugacy_classes_keys(G)
    assert sum(k.size for k in classes) == G.order
    for k in classes:
        x = G.carrier.decode(k[0])
        assert k.size * centralizer(G, x).order == G.order


def test_normal_closure_examples(backend):
    S5 = symmetric_group(5)
    assert normal_closure(S5, [P("(1,2)", 5)]).order == 120
    N = normal_closure(S5, [P("(1,2,3)", 5)])
    assert N.order == 60
    assert np.array_equal(N.sorted_keys, alternating_group(5).sorted_keys)
    assert normal_closure(S5, [S5.identity]).order == 1
    with pytest.raises(NotInGroupError):
        normal_closure(alternating_group(5), [P("(1,2)", 5)])


def test_normal_closure_is_normal(backend):
    G = symmetric_group(4)
    N = normal_closure(G, [P("(1,2)(3,4)", 4)])
    assert N.order == 4
    for x in N:
        for g in G.generators:
            assert conjugate(x, g) in N


def test_is_simple_examples(backend):
    assert is_simple(alternating_group(5))
    assert not is_simple(symmetric_group(5))
    assert not is_simple(builtin_group("Z6"))
    assert is_simple(builtin_group("Z5"))
    with pytest.raises(TrivialGroupError):
        is_simple(builtin_group("Z1"))


@pytest.mark.parametrize("name", ["S4", "S5", "A4", "D4", "sp4"])
def test_proper_normal_witness_divides_order(name):
    G = builtin_group(name)
    N = proper_normal_subgroup(G)
    assert N is not None
    assert 1 < N.order < G.order and G.order % N.order == 0
    for x in N.elements[:20]:
        for g in G.generators:
            assert conjugate(x, g) in N


def test_workers_do_not_change_results():
    G = symmetric_group(6)
    a = proper_normal_subgroup(G, workers=1)
    b = proper_normal_subgroup(G, workers=3)
    assert np.array_equal(a.sorted_keys, b.sorted_keys)
    assert is_simple(alternating_group(6), workers=2)


def test_class_representatives_are_minimal(backend):
    G = symmetric_group(4)
    reps = class_representatives(G)
    assert len(reps) == 5
    for r in reps:
        assert r == min(conjugacy_class(G, r), key=lambda p: p.key)


def test_orbit_stabilizer_examples(backend):
    S6 = symmetric_group(6)
    assert orbit_stabilizer(S6, "conjugation", P("(1,2)", 6)) == (15, 48)
    assert orbit_stabilizer(S6, "conjugation_pairs", (P("(1,2)", 6), P("(2,3)", 6))) == (120, 6)


def test_orbit_stabilizer_errors():
    S4 = symmetric_group(4)
    with pytest.raises(DomainError):
        orbit_stabilizer(S4, "left", P("(1,2)", 4))
    with pytest.raises(DomainError):
        orbit_stabilizer(S4, "conjugation_pairs", (P("(1,2)", 4),))
    with pytest.raises(NotInGroupError):
        orbit_stabilizer(alternating_group(4), "conjugation", P("(1,2)", 4))
    with pytest.raises(NotInGroupError):
        orbit_stabilizer(S4, "conjugation", P("(1,2)", 5))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 719), st.integers(0, 719))
def test_orbit_stabilizer_pairs_match_brute_force(i, j):
    G = symmetric_group(6)
    x, y = G[i], G[j]
    orbit, stab = orbit_stabilizer(G, "conjugation_pairs", (x, y))
    brute = {(conjugate(x, g), conjugate(y, g)) for g in G}
    assert orbit == len(brute)
    assert orbit * stab == 720


def test_ceiling_applies_to_cached_tables():
    from smallquot.groups import set_default_ceiling

    assert builtin_group("S5").order == 120
    set_default_ceiling(100)
    try:
        with pytest.raises(CeilingExceededError):
            builtin_group("S5")
        assert builtin_group("S4").order == 24
    finally:
        set_default_ceiling(None)
