from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetalie.root_system import (
    SYSTEMS,
    build_root_system,
    dominant_representative,
    dot,
    is_dominant,
    parse_weight,
    reflect,
    weight,
    weyl_orbit,
)

h = Fraction(1, 2)


def _weyl_group_closure(sys):
    """Independent order count: close the group of 0/1 reflection matrices.

    Elements are stored as the images of a regular test vector together with
    the images of the simple roots, which determines the element.
    """
    probe = tuple(Fraction(17 * (i + 1) ** 2, 3) + Fraction(1, 7 * (i + 1)) for i in range(sys.rank))
    basis = [probe] + list(sys.simple_roots)
    start = tuple(basis)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for el in frontier:
            for a in sys.simple_roots:
                img = tuple(reflect(v, a) for v in el)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize("label,npos,order", [("F4", 24, 1152), ("B4", 16, 384),
                                              ("D5", 20, 1920), ("A1", 1, 2)])
def test_counts(label, npos, order):
    sys = build_root_system(label)
    assert len(sys.positive_roots) == npos
    assert sys.weyl_order == order


@pytest.mark.parametrize("label", ["B4", "A1", "F4"])
def test_weyl_order_by_group_closure(label):
    sys = build_root_system(label)
    assert _weyl_group_closure(sys) == sys.weyl_order


def test_unknown_system():
    with pytest.raises(ValueError, match="unknown system"):
        build_root_system("E8")


def test_a1():
    a1 = build_root_system("A1")
    (alpha,) = a1.simple_roots
    assert a1.positive_roots == {alpha}
    assert a1.rho == tuple(c / 2 for c in alpha)
    assert a1.weyl_order == 2


def test_rho_values():
    assert build_root_system("F4").rho == weight(Fraction(11, 2), Fraction(5, 2), Fraction(3, 2), h)
    b4 = build_root_system("B4")
    assert b4.rho == weight(Fraction(7, 2), Fraction(5, 2), Fraction(3, 2), h)


def test_f4_fourth_fundamental_weight_is_e1():
    assert build_root_system("F4").fundamental_weights[3] == weight(1, 0, 0, 0)


@pytest.mark.parametrize("label", SYSTEMS)
def test_invariants(label):
    sys = build_root_system(label)
    # positive roots are nonnegative integer combinations of simple roots
    for r in sys.positive_roots:
        coeffs = sys.simple_coordinates(r)
        assert all(c >= 0 and c.denominator == 1 for c in coeffs)
    # rho = half the sum of positive roots and 2 rho lies in the positive cone
    total = tuple(sum(c) for c in zip(*sys.positive_roots))
    assert sys.rho == tuple(c / 2 for c in total)
    assert all(c >= 0 and c.denominator == 1 for c in sys.simple_coordinates(total))
    # fundamental weights are dual to simple coroots
    for i, w in enumerate(sys.fundamental_weights):
        for j, a in enumerate(sys.simple_roots):
            assert 2 * dot(w, a) / dot(a, a) == (1 if i == j else 0)


def test_orbit_examples():
    b4 = build_root_system("B4")
    orbit = weyl_orbit(b4, weight(h, h, h, h))
    assert orbit == {tuple(Fraction(s, 2) for s in signs) for signs in product((1, -1), repeat=4)}
    f4 = build_root_system("F4")
    short = weyl_orbit(f4, weight(1, 0, 0, 0))
    assert len(short) == 24
    assert all(dot(x, x) == 1 for x in short)
    for label in SYSTEMS:
        sys = build_root_system(label)
        z = (Fraction(0),) * sys.rank
        assert weyl_orbit(sys, z) == {z}


def test_dominant_examples():
    b4 = build_root_system("B4")
    f4 = build_root_system("F4")
    assert dominant_representative(b4, weight(-h, h, h, h)) == weight(h, h, h, h)
    assert dominant_representative(f4, weight(0, 0, 0, 1)) == weight(1, 0, 0, 0)
    assert weight(1, 0, 0, 0) in weyl_orbit(f4, weight(0, 0, 0, 1))
    assert is_dominant(f4, f4.rho)
    assert not is_dominant(b4, weight(0, 1, 0, 0))
    for m in range(6):
        for n in range(6):
            assert is_dominant(b4, weight(Fraction(2 * m + n, 2), Fraction(n, 2), Fraction(n, 2), Fraction(n, 2)))


@pytest.mark.parametrize("label,w", [("F4", (2, 1, 0, 0)), ("B4", (Fraction(3, 2), h, h, h)),
                                     ("D5", (1, 1, 0, 0, 0)), ("F4", (1, 0, 0, 0))])
def test_orbit_stabilizer(label, w):
    sys = build_root_system(label)
    orbit = weyl_orbit(sys, weight(w))
    assert sys.weyl_order % len(orbit) == 0
    doms = [x for x in orbit if is_dominant(sys, x)]
    assert doms == [weight(w)]


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SYSTEMS), st.lists(rationals, min_size=5, max_size=5),
       st.lists(rationals, min_size=5, max_size=5))
def test_form_is_weyl_invariant(label, xs, ys):
    sys = build_root_system(label)
    x, y = tuple(xs[: sys.rank]), tuple(ys[: sys.rank])
    for a in sys.simple_roots:
        assert dot(reflect(x, a), reflect(y, a)) == dot(x, y)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SYSTEMS), st.lists(st.integers(-6, 6), min_size=5, max_size=5))
def test_dominant_representative_in_orbit(label, xs):
    sys = build_root_system(label)
    x = tuple(Fraction(v, 2) for v in xs[: sys.rank])
    d = dominant_representative(sys, x)
    assert is_dominant(sys, d)
    assert dot(d, d) == dot(x, x)
    assert dominant_representative(sys, d) == d


def test_parse_weight():
    assert parse_weight("11/2,5/2,3/2,1/2") == build_root_system("F4").rho
    with pytest.raises(ValueError):
        parse_weight("1,,2")
    with pytest.raises(ValueError):
        parse_weight("1,x")
