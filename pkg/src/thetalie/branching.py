"""Restriction of irreducible characters to B4 and the tau(m, n) families.

Two embeddings are supported: ``B4_in_F4`` (the compact subgroup of the
noncompact F4, identity on coordinates) and ``B4_in_D5`` (so(9) in so(10),
dropping the fifth coordinate).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    DecompositionList,
    IrrepLabel,
    freudenthal_character,
    peel,
    weyl_dim,
)
from .root_system import Weight, build_root_system


class InconsistentEmbedding(ArithmeticError):
    pass


@dataclass(frozen=True)
class EmbeddingMap:
    name: str
    source_system: str
    target_system: str
    matrix: tuple  # rows indexed by target coordinate

    def apply(self, w: Weight) -> Weight:
        return tuple(sum((r * c for r, c in zip(row, w)), Fraction(0)) for row in self.matrix)


EMBEDDINGS = ("B4_in_F4", "B4_in_D5")


def make_embedding(name: str) -> EmbeddingMap:
    one, nil = Fraction(1), Fraction(0)
    if name == "B4_in_F4":
        mat = tuple(tuple(one if i == j else nil for j in range(4)) for i in range(4))
        return EmbeddingMap(name, "F4", "B4", mat)
    if name == "B4_in_D5":
        mat = tuple(tuple(one if i == j else nil for j in range(5)) for i in range(4))
        return EmbeddingMap(name, "D5", "B4", mat)
    raise ValueError(f"unknown embedding {name!r}")


def branch(rep: IrrepLabel, emb: EmbeddingMap) -> DecompositionList:
    """Decompose the restriction of ``rep`` along ``emb``.

    The full weight multiset is pushed through the embedding and peeled from
    the lexicographically greatest residual weight downward.

    Raises
    ------
    InconsistentEmbedding
        On a negative residual multiplicity or a dimension mismatch.
    """
    if rep.system != emb.source_system:
        raise ValueError(f"{rep.system} representation cannot be restricted along {emb.name}")
    restricted = Counter()
    for w, m in freudenthal_character(rep).mults.items():
        restricted[emb.apply(w)] += m
    try:
        dec = peel(emb.target_system, restricted)
    except ArithmeticError as exc:
        raise InconsistentEmbedding(f"inconsistent embedding: {exc}") from exc
    if dec.dim != weyl_dim(rep):
        raise InconsistentEmbedding("inconsistent embedding: dimension mismatch")
    return dec


@dataclass(frozen=True, order=True)
class TauLabel:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("tau(m, n) needs m, n >= 0")

    @property
    def highest_weight(self) -> Weight:
        """``m*(1,0,0,0) + n*(1,1,1,1)/2 = ((2m+n)/2, n/2, n/2, n/2)``."""
        h = Fraction(self.n, 2)
        return (Fraction(self.m) + h, h, h, h)

    @property
    def irrep(self) -> IrrepLabel:
        return IrrepLabel("B4", self.highest_weight)

    def __str__(self):
        return f"tau({self.m},{self.n})"


@dataclass(frozen=True)
class TauClassification:
    taus: tuple       # ((TauLabel, multiplicity), ...)
    failures: tuple   # ((IrrepLabel, multiplicity), ...) not of tau shape

    @property
    def ok(self) -> bool:
        return not self.failures


def tau_of(hw: Weight):
    """Return the TauLabel with highest weight ``hw``, or None."""
    if len(hw) != 4:
        return None
    a, b, c, d = (Fraction(x) for x in hw)
    if not (b == c == d):
        return None
    n, m = 2 * b, a - b
    if n.denominator != 1 or m.denominator != 1 or n < 0 or m < 0:
        return None
    return TauLabel(int(m), int(n))


def classify_tau(dec: DecompositionList) -> TauClassification:
    taus, failures = [], []
    for lab, mult in dec.entries:
        t = tau_of(lab.highest_weight) if lab.system == "B4" else None
        if t is None:
            failures.append((lab, mult))
        else:
            taus.append((t, mult))
    return TauClassification(tuple(sorted(taus)), tuple(failures))


def interlacing_branch(hw: Weight) -> dict:
    """so(10) -> so(9) branching by brute-force Gelfand-Tsetlin interlacing.

    A D5 highest weight ``(a1..a5)`` restricts to the sum, each with
    multiplicity one, of the B4 highest weights ``(b1..b4)`` satisfying
    ``a1 >= b1 >= a2 >= b2 >= a3 >= b3 >= a4 >= b4 >= |a5|`` with every ``b_i``
    congruent to ``a1`` modulo 1.
    """
    a = [Fraction(x) for x in hw]
    if len(a) != 5:
        raise ValueError("expected a D5 weight")
    frac = a[0] - (a[0].numerator // a[0].denominator)
    uppers = a[:4]
    lowers = a[1:4] + [abs(a[4])]
    ranges = []
    for hi, lo in zip(uppers, lowers):
        start = lo if (lo - frac).denominator == 1 else lo + Fraction(1, 2)
        vals = []
        v = start
        while v <= hi:
            vals.append(v)
            v += 1
        ranges.append(vals)
    out = {}
    for b in itertools.product(*ranges):
        out[IrrepLabel("B4", b)] = 1
    return out


def d5_vector_power(m: int) -> IrrepLabel:
    """D5 irrep with highest weight ``(m, 0, 0, 0, 0)``."""
    return IrrepLabel("D5", (Fraction(m),) + (Fraction(0),) * 4)


def spin_weights_in_f4_roots() -> tuple:
    """Split the F4 positive roots into B4 positive roots and spin weights."""
    f4, b4 = build_root_system("F4"), build_root_system("B4")
    emb = make_embedding("B4_in_F4")
    images = [emb.apply(r) for r in f4.positive_list]
    long_short = [r for r in images if r in b4.positive_roots]
    spin = [r for r in images if r not in b4.positive_roots]
    return long_short, spin
