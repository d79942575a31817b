from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from thetalie.characters import (
    E,
    IrrepLabel,
    InvalidHighestWeight,
    character_product,
    freudenthal_character,
    infinitesimal_character,
    is_self_dual,
    tensor_decompose,
    tensor_decompose_by_peeling,
    theta_infchar_transfer,
    weyl_dim,
)
from thetalie.root_system import (
    build_root_system,
    dominant_representative,
    dot,
    reflect,
    weight,
    weyl_orbit,
)

h = Fraction(1, 2)


def B4(*w):
    return IrrepLabel("B4", weight(*w))


def test_dimension_triple():
    assert weyl_dim(E(1)) == 26
    assert weyl_dim(B4(h, h, h, h)) == 16
    assert weyl_dim(B4(1, 0, 0, 0)) == 9
    for label in ("F4", "B4", "D5", "A1"):
        assert weyl_dim(IrrepLabel(label, (0,) * build_root_system(label).rank)) == 1


@pytest.mark.parametrize("bad", [("B4", (0, 1, 0, 0)), ("F4", (0, 0, 0, 1)), ("B4", (h, 0, 0, 0)),
                                 ("B4", (1, 0, 0))])
def test_invalid_highest_weight(bad):
    with pytest.raises(InvalidHighestWeight, match="invalid highest weight"):
        weyl_dim(IrrepLabel(*bad))


def test_e_n_dimensions():
    # classical values for the F4 family n * (fourth fundamental weight)
    assert [weyl_dim(E(n)) for n in range(5)] == [1, 26, 324, 2652, 16302]


def _brute_force_sl2(n):
    return {(Fraction(k),): 1 for k in range(-n, n + 1, 2)}


@pytest.mark.parametrize("n", range(7))
def test_a1_strings(n):
    ch = freudenthal_character(IrrepLabel("A1", (n,)))
    assert ch.mults == _brute_force_sl2(n)


def test_b4_standard():
    ch = freudenthal_character(B4(1, 0, 0, 0)).mults
    want = {weight(0, 0, 0, 0): 1}
    for i in range(4):
        for s in (1, -1):
            w = [0] * 4
            w[i] = s
            want[weight(w)] = 1
    assert ch == want


def test_f4_26():
    ch = freudenthal_character(E(1)).mults
    zero = weight(0, 0, 0, 0)
    assert ch[zero] == 2
    nonzero = {w: m for w, m in ch.items() if w != zero}
    assert len(nonzero) == 24 and set(nonzero.values()) == {1}
    assert set(nonzero) == weyl_orbit(build_root_system("F4"), weight(1, 0, 0, 0))


CASES = [E(n) for n in range(4)] + [
    B4(1, 0, 0, 0), B4(h, h, h, h), B4(2, 1, 0, 0), B4(Fraction(5, 2), h, h, h),
    IrrepLabel("D5", (2, 1, 0, 0, 0)), IrrepLabel("D5", (h, h, h, h, -h)),
    IrrepLabel("F4", (1, 1, 0, 0)), IrrepLabel("F4", (Fraction(3, 2), h, h, h)),
]


@pytest.mark.parametrize("rep", CASES, ids=str)
def test_freudenthal_matches_weyl(rep):
    ch = freudenthal_character(rep)
    assert ch.dim == weyl_dim(rep) == sum(ch.mults.values())


@pytest.mark.parametrize("rep", CASES[:6], ids=str)
def test_character_weyl_invariant(rep):
    sys = build_root_system(rep.system)
    full = freudenthal_character(rep).mults
    for w, m in list(full.items())[:40]:
        for x in weyl_orbit(sys, w):
            assert full[x] == m
        assert full[dominant_representative(sys, w)] == m


def _weyl_character_oracle(rep):
    """Multiplicities by the Weyl character formula, as an integer division.

    The alternating sum A(L+rho) is divided by A(rho) via exact division of
    sparse Laurent polynomials, with the Weyl denominator written as
    prod over positive roots of (e^{a/2} - e^{-a/2}).  Exponents are stored
    as quadrupled integer vectors so that a/2 shifts stay integral.
    """
    sys = build_root_system(rep.system)

    def alt(x):
        seen = {x: 1}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for a in sys.simple_roots:
                    z = reflect(y, a)
                    if z not in seen:
                        seen[z] = -seen[y]
                        nxt.append(z)
            frontier = nxt
        return seen

    def quad(w):
        return tuple(int(4 * c) for c in w)

    num = {quad(w): s for w, s in alt(tuple(a + b for a, b in zip(rep.highest_weight, sys.rho))).items()}
    for a in sys.positive_list:
        step = quad(a)
        half = tuple(c // 2 for c in step)
        norm = sum(c * c for c in step)
        # group exponents into lines parallel to a; divide each line separately
        lines = {}
        for w, c in num.items():
            t = sum(u * v for u, v in zip(w, step))
            base = tuple(u * norm - t * v for u, v in zip(w, step))
            lines.setdefault(base, []).append((t // norm, w, c))
        quot = {}
        for pts in lines.values():
            pts.sort(reverse=True)
            _, top, _ = pts[0]
            coeff = dict(((w, c) for _, w, c in pts))
            k_low = pts[-1][0]
            run = 0
            cur = top
            k = pts[0][0]
            while k > k_low:
                run += coeff.get(cur, 0)
                q = tuple(u - v for u, v in zip(cur, half))
                if run:
                    quot[q] = run
                cur = tuple(u - v for u, v in zip(cur, step))
                k -= 1
            run += coeff.get(cur, 0)
            assert run == 0, "remainder in Laurent division"
        num = quot
    return {tuple(Fraction(c, 4) for c in w): m for w, m in num.items() if m}


@pytest.mark.parametrize("rep", [E(1), E(2), B4(2, 1, 0, 0), B4(Fraction(3, 2), h, h, h),
                                 IrrepLabel("D5", (1, 1, 0, 0, 0))], ids=str)
def test_freudenthal_against_weyl_character_formula(rep):
    assert freudenthal_character(rep).mults == _weyl_character_oracle(rep)


def test_tensor_examples():
    dec = tensor_decompose(B4(1, 0, 0, 0), B4(1, 0, 0, 0))
    assert dec.as_dict() == {B4(2, 0, 0, 0): 1, B4(1, 1, 0, 0): 1, B4(0, 0, 0, 0): 1}
    assert [weyl_dim(lab) for lab, _ in dec.entries] == [44, 36, 1]
    assert dec == tensor_decompose_by_peeling(B4(1, 0, 0, 0), B4(1, 0, 0, 0))
    sq = tensor_decompose(E(1), E(1))
    assert sq.as_dict()[E(2)] == 1
    assert sq == tensor_decompose_by_peeling(E(1), E(1))
    assert sq.dim == 26 * 26


@pytest.mark.parametrize("rep", CASES[:8], ids=str)
def test_tensor_with_trivial(rep):
    triv = IrrepLabel(rep.system, (0,) * len(rep.highest_weight))
    assert tensor_decompose(rep, triv).as_dict() == {rep: 1}


SMALL_B4 = [B4(0, 0, 0, 0), B4(1, 0, 0, 0), B4(h, h, h, h), B4(1, 1, 0, 0), B4(2, 0, 0, 0)]


@pytest.mark.parametrize("a,b", list(product(SMALL_B4, SMALL_B4)), ids=str)
def test_tensor_commutative_and_oracle(a, b):
    ab = tensor_decompose(a, b)
    assert ab == tensor_decompose(b, a)
    assert ab.dim == weyl_dim(a) * weyl_dim(b)
    assert ab == tensor_decompose_by_peeling(a, b)


def test_tensor_system_mismatch():
    with pytest.raises(ValueError):
        tensor_decompose(E(1), B4(1, 0, 0, 0))


def test_character_product_dimension():
    prod = character_product(freudenthal_character(B4(h, h, h, h)), freudenthal_character(B4(1, 0, 0, 0)))
    assert sum(prod.values()) == 144


def test_infinitesimal_characters():
    for n in range(21):
        assert infinitesimal_character(E(n)) == tuple(Fraction(x, 2) for x in (2 * n + 11, 5, 3, 1))
    for label in ("F4", "B4", "D5", "A1"):
        sys = build_root_system(label)
        assert infinitesimal_character(IrrepLabel(label, (0,) * sys.rank)) == sys.rho
    assert infinitesimal_character(B4(h, h, h, h)) == weight(4, 3, 2, 1)


def test_infchar_transfer():
    f4 = build_root_system("F4")
    t = theta_infchar_transfer(11)
    assert t.weight == f4.rho and not t.singular and t.normalized
    for n in range(21):
        assert theta_infchar_transfer(2 * n + 11).weight == infinitesimal_character(E(n))
    wall = theta_infchar_transfer(5)
    assert wall.weight == weight(Fraction(5, 2), Fraction(5, 2), Fraction(3, 2), h)
    assert wall.singular
    neg = theta_infchar_transfer(-3)
    assert not neg.normalized and neg.weight[0] == Fraction(-3, 2)


@pytest.mark.parametrize("rep", SMALL_B4 + [B4(Fraction(3, 2), h, h, h), B4(2, 1, 1, 0)], ids=str)
def test_b4_self_dual(rep):
    assert is_self_dual(rep)
