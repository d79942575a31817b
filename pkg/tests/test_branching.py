from fractions import Fraction

import pytest

from thetalie.branching import (
    EMBEDDINGS,
    InconsistentEmbedding,
    TauLabel,
    branch,
    classify_tau,
    d5_vector_power,
    interlacing_branch,
    make_embedding,
    spin_weights_in_f4_roots,
    tau_of,
)
from thetalie.characters import DecompositionList, E, IrrepLabel, weyl_dim
from thetalie.root_system import build_root_system, weight

h = Fraction(1, 2)
F4 = make_embedding("B4_in_F4")
D5 = make_embedding("B4_in_D5")


def test_e0_and_e1():
    assert classify_tau(branch(E(0), F4)).taus == ((TauLabel(0, 0), 1),)
    dec = branch(E(1), F4)
    cls = classify_tau(dec)
    assert cls.ok
    assert cls.taus == ((TauLabel(0, 0), 1), (TauLabel(0, 1), 1), (TauLabel(1, 0), 1))
    assert sorted(weyl_dim(t.irrep) for t, _ in cls.taus) == [1, 9, 16]


@pytest.mark.parametrize("n", range(4))
def test_e_n_tau_closed(n):
    dec = branch(E(n), F4)
    cls = classify_tau(dec)
    assert cls.ok and dec.dim == weyl_dim(E(n))
    assert {t for t, _ in cls.taus} == {TauLabel(m, k) for m in range(n + 1) for k in range(n + 1 - m)}
    assert all(mult == 1 for _, mult in cls.taus)


@pytest.mark.parametrize("m", range(0, 7))
def test_d5_vector_powers(m):
    cls = classify_tau(branch(d5_vector_power(m), D5))
    assert cls.ok
    assert cls.taus == tuple((TauLabel(k, 0), 1) for k in range(m + 1))


D5_WEIGHTS = [(1, 0, 0, 0, 0), (1, 1, 0, 0, 0), (2, 1, 0, 0, 0), (2, 2, 0, 0, 0), (3, 1, 0, 0, 0),
              (h, h, h, h, h), (h, h, h, h, -h), (3 * h, h, h, h, -h), (1, 1, 1, 0, 0),
              (1, 1, 1, 1, 1), (1, 1, 1, 1, -1)]


@pytest.mark.parametrize("w", D5_WEIGHTS, ids=str)
def test_branch_matches_interlacing(w):
    rep = IrrepLabel("D5", weight(w))
    assert weyl_dim(rep) <= 5000
    assert branch(rep, D5).as_dict() == interlacing_branch(rep.highest_weight)


def test_interlacing_dimension_sum():
    for m in range(1, 7):
        rep = d5_vector_power(m)
        assert sum(weyl_dim(lab) for lab in interlacing_branch(rep.highest_weight)) == weyl_dim(rep)


def test_tau_of():
    assert tau_of(weight(1, 1, 0, 0)) is None
    assert tau_of(weight(1, 0, 0, 0)) == TauLabel(1, 0)
    assert tau_of(weight(h, h, h, h)) == TauLabel(0, 1)
    assert tau_of(weight(Fraction(5, 2), h, h, h)) == TauLabel(2, 1)
    assert tau_of(weight(1, 0, 0)) is None
    for m in range(4):
        for n in range(4):
            assert tau_of(TauLabel(m, n).highest_weight) == TauLabel(m, n)


def test_classify_reports_failures():
    bad = IrrepLabel("B4", weight(1, 1, 0, 0))
    cls = classify_tau(DecompositionList.from_counts({bad: 1, TauLabel(1, 0).irrep: 2}))
    assert not cls.ok and cls.failures == ((bad, 1),)
    assert cls.taus == ((TauLabel(1, 0), 2),)


def test_tau_label_validation():
    with pytest.raises(ValueError):
        TauLabel(-1, 0)
    assert str(TauLabel(2, 3)) == "tau(2,3)"
    assert TauLabel(0, 1) < TauLabel(1, 0)


def test_root_split():
    long_short, spin = spin_weights_in_f4_roots()
    assert len(long_short) == 16 and len(spin) == 8
    assert set(long_short) == build_root_system("B4").positive_roots
    assert all(all(abs(c) == h for c in w) for w in spin)


def test_embeddings():
    assert EMBEDDINGS == ("B4_in_F4", "B4_in_D5")
    assert F4.apply(weight(1, 2, 3, 4)) == weight(1, 2, 3, 4)
    assert D5.apply(weight(1, 2, 3, 4, 5)) == weight(1, 2, 3, 4)
    with pytest.raises(ValueError, match="unknown embedding"):
        make_embedding("G2_in_F4")


def test_wrong_source_system():
    with pytest.raises(ValueError):
        branch(E(1), D5)


def test_inconsistent_embedding_detected():
    # swapping two coordinates is not compatible with the B4 chamber choice
    one, nil = Fraction(1), Fraction(0)
    perm = (1, 0, 2, 3)
    mat = tuple(tuple(one if j == perm[i] else nil for j in range(4)) for i in range(4))
    bogus = type(F4)("bogus", "F4", "B4", tuple(row for row in mat))
    # a permutation is a Weyl symmetry, so this one still works
    assert branch(E(1), bogus) == branch(E(1), F4)
    scaled = type(F4)("scaled", "F4", "B4", tuple(tuple(2 * c for c in row) for row in mat))
    with pytest.raises(InconsistentEmbedding, match="inconsistent embedding"):
        branch(E(1), scaled)
