"""Finite-dimensional representations: dimensions, characters, tensor products.

Characters are stored on dominant weights only and expanded to full Weyl
orbits on demand.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple

import numpy as np

from . import kernels
from .root_system import (
    Weight,
    add,
    build_root_system,
    dominant_representative,
    dot,
    from_doubled,
    is_dominant,
    is_integral,
    is_regular,
    scale,
    to_doubled,
    weyl_orbit,
)


class InvalidHighestWeight(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IrrepLabel:
    system: str
    highest_weight: Weight

    def __post_init__(self):
        object.__setattr__(self, "highest_weight",
                           tuple(Fraction(c) for c in self.highest_weight))

    def validate(self) -> None:
        sys = build_root_system(self.system)
        hw = self.highest_weight
        if len(hw) != sys.rank or not is_dominant(sys, hw) or not is_integral(sys, hw):
            raise InvalidHighestWeight(
                f"invalid highest weight ({','.join(map(str, hw))}) for {self.system}")

    def __str__(self):
        return f"{self.system}[{','.join(str(c) for c in self.highest_weight)}]"


@dataclass(frozen=True)
class FormalCharacter:
    """Weight multiplicities, kept on dominant weights.

    ``dominant`` maps each dominant weight to its multiplicity; every Weyl
    conjugate carries the same multiplicity.
    """

    system: str
    dominant: Mapping
    _full: dict = field(default=None, repr=False, compare=False)

    def __getitem__(self, w: Weight) -> int:
        sys = build_root_system(self.system)
        return self.dominant.get(dominant_representative(sys, tuple(Fraction(c) for c in w)), 0)

    @property
    def mults(self) -> dict:
        """Full sparse map weight -> multiplicity (orbit expansion, cached)."""
        if self._full is None:
            sys = build_root_system(self.system)
            full = {}
            for w, m in self.dominant.items():
                for x in _orbit_cached(sys.label, w):
                    full[x] = m
            object.__setattr__(self, "_full", full)
        return self._full

    @property
    def dim(self) -> int:
        sys = build_root_system(self.system)
        return sum(m * len(_orbit_cached(sys.label, w)) for w, m in self.dominant.items())


@dataclass(frozen=True)
class DecompositionList:
    entries: tuple  # ((IrrepLabel, multiplicity), ...), highest weights descending

    @classmethod
    def from_counts(cls, counts: Mapping) -> "DecompositionList":
        items = [(lab, m) for lab, m in counts.items() if m != 0]
        if any(m < 0 for _, m in items):
            raise ArithmeticError("negative multiplicity in decomposition")
        items.sort(key=lambda e: e[0].highest_weight, reverse=True)
        return cls(tuple(items))

    @property
    def dim(self) -> int:
        return sum(m * weyl_dim(lab) for lab, m in self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)


@lru_cache(maxsize=4096)
def _orbit_cached(label: str, w: Weight) -> frozenset:
    sys = build_root_system(label)
    if not is_integral(sys, w):
        return weyl_orbit(sys, w)
    S, snorm, _, _ = _kernel_arrays(label)
    rows = kernels.orbit(to_doubled([w], sys.rank)[0], S, snorm)
    return frozenset(from_doubled(r) for r in rows.tolist())


def orbit_size(system: str, w: Weight) -> int:
    return len(_orbit_cached(system, tuple(Fraction(c) for c in w)))


@lru_cache(maxsize=None)
def _kernel_arrays(label: str):
    sys = build_root_system(label)
    S = to_doubled(sys.simple_roots, sys.rank)
    snorm = (S * S).sum(axis=1)
    pos = to_doubled(sys.positive_list, sys.rank)
    rho = to_doubled([sys.rho], sys.rank)[0]
    return S, snorm, pos, rho


def weyl_dim(rep: IrrepLabel) -> int:
    """Weyl dimension formula, product of ``(L+rho, a)/(rho, a)`` over a > 0."""
    rep.validate()
    sys = build_root_system(rep.system)
    lr = add(rep.highest_weight, sys.rho)
    num = Fraction(1)
    for a in sys.positive_list:
        num *= dot(lr, a) / dot(sys.rho, a)
    if num.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")
    return int(num)


def dominant_weights(rep: IrrepLabel) -> list:
    """Dominant weights of the irreducible module, in Freudenthal order.

    Every dominant weight below the top is reached from a larger dominant
    weight by subtracting one positive root, so the closure of
    ``nu -> dom(nu - a)`` (for ``(nu, a) > 0``) finds them all.
    """
    rep.validate()
    sys = build_root_system(rep.system)
    S, snorm, pos, rho = _kernel_arrays(rep.system)
    top = to_doubled([rep.highest_weight], sys.rank)[0]
    seen = {tuple(top.tolist())}
    frontier = [top]
    while frontier:
        cands = []
        for nu in frontier:
            pairing = pos @ nu
            cands.append(nu[None, :] - pos[pairing > 0])
        X = np.concatenate(cands) if cands else np.zeros((0, sys.rank), np.int64)
        D, _ = kernels.dominant_batch(X, S, snorm)
        frontier = []
        for row in D:
            key = tuple(row.tolist())
            if key not in seen:
                seen.add(key)
                frontier.append(row)
    rows = sorted(seen, key=lambda t: (-int(np.dot(t, rho)), tuple(-v for v in t)))
    return [from_doubled(r) for r in rows]


@lru_cache(maxsize=512)
def _freudenthal_cached(rep: IrrepLabel) -> FormalCharacter:
    sys = build_root_system(rep.system)
    S, snorm, pos, rho = _kernel_arrays(rep.system)
    dom = dominant_weights(rep)
    mult = kernels.freudenthal(to_doubled(dom, sys.rank), pos, S, snorm, rho)
    return FormalCharacter(rep.system, {w: int(m) for w, m in zip(dom, mult) if m})


def freudenthal_character(rep: IrrepLabel) -> FormalCharacter:
    """Character of the irreducible module by Freudenthal's recursion."""
    rep.validate()
    return _freudenthal_cached(rep)


def peel(system: str, full: Mapping) -> DecompositionList:
    """Decompose a W-invariant weight multiset into irreducible characters.

    Repeatedly takes the lexicographically greatest weight with nonzero
    residual multiplicity (lexicographic order refines dominance in all
    supported realizations, so that weight is dominant and maximal) and
    subtracts the corresponding irreducible character.
    """
    residual = Counter({w: m for w, m in full.items() if m})
    counts = {}
    while residual:
        top = max(residual)
        m = residual[top]
        lab = IrrepLabel(system, top)
        if m < 0:
            raise ArithmeticError(f"negative residual multiplicity at {top}")
        try:
            lab.validate()
        except InvalidHighestWeight as exc:
            raise ArithmeticError(f"residual top weight {top} is not dominant integral") from exc
        counts[lab] = m
        for w, k in freudenthal_character(lab).mults.items():
            residual[w] -= m * k
            if residual[w] < 0:
                raise ArithmeticError(f"negative residual multiplicity at {w}")
            if residual[w] == 0:
                del residual[w]
    return DecompositionList.from_counts(counts)


def character_product(a: FormalCharacter, b: FormalCharacter) -> dict:
    """Pointwise convolution of two full characters."""
    if a.system != b.system:
        raise ValueError("system mismatch")
    out = Counter()
    bm = b.mults
    for x, m in a.mults.items():
        for y, k in bm.items():
            out[add(x, y)] += m * k
    return dict(out)


def tensor_decompose(a: IrrepLabel, b: IrrepLabel) -> DecompositionList:
    """Brauer-Klimyk decomposition of ``a (x) b``.

    Each weight ``mu`` of ``b`` contributes ``sign(w) m_b(mu)`` to the irrep
    with highest weight ``w(L_a + mu + rho) - rho``; singular terms vanish.
    """
    if a.system != b.system:
        raise ValueError(f"system mismatch: {a.system} vs {b.system}")
    a.validate()
    b.validate()
    sys = build_root_system(a.system)
    S, snorm, _, rho2 = _kernel_arrays(a.system)
    chb = freudenthal_character(b).mults
    weights = list(chb)
    shift = add(a.highest_weight, sys.rho)
    X = to_doubled([add(shift, mu) for mu in weights], sys.rank)
    D, parity = kernels.dominant_batch(X, S, snorm)
    regular = ((D @ S.T) != 0).all(axis=1)
    counts = Counter()
    for row, p, ok, mu in zip(D, parity, regular, weights):
        if not ok:
            continue
        hw = from_doubled(row - rho2)
        counts[IrrepLabel(a.system, hw)] += (-1 if p else 1) * chb[mu]
    counts = {k: v for k, v in counts.items() if v}
    if any(v < 0 for v in counts.values()):
        raise ArithmeticError("Brauer-Klimyk produced a negative multiplicity")
    return DecompositionList.from_counts(counts)


def tensor_decompose_by_peeling(a: IrrepLabel, b: IrrepLabel) -> DecompositionList:
    """Independent route: multiply characters, then peel."""
    return peel(a.system, character_product(freudenthal_character(a), freudenthal_character(b)))


def infinitesimal_character(rep: IrrepLabel) -> Weight:
    """Dominant representative of ``L + rho``."""
    rep.validate()
    sys = build_root_system(rep.system)
    return dominant_representative(sys, add(rep.highest_weight, sys.rho))


class InfCharTransfer(NamedTuple):
    weight: Weight
    singular: bool     # orthogonal to some F4 root (a chamber wall)
    normalized: bool   # False when x <= 0: returned as is, outside the chamber


def theta_infchar_transfer(x) -> InfCharTransfer:
    """Send an sl2 infinitesimal character ``x`` to ``(x, 5, 3, 1)/2`` for F4."""
    x = Fraction(x)
    w = scale(Fraction(1, 2), (x, Fraction(5), Fraction(3), Fraction(1)))
    f4 = build_root_system("F4")
    return InfCharTransfer(w, not is_regular(f4, w), x > 0)


def E(n: int) -> IrrepLabel:
    """``E_n``: the F4 irrep with highest weight ``n`` times the fourth fundamental weight."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f4 = build_root_system("F4")
    return IrrepLabel("F4", scale(n, f4.fundamental_weights[3]))


def is_self_dual(rep: IrrepLabel) -> bool:
    ch = freudenthal_character(rep)
    return all(ch[tuple(-c for c in w)] == m for w, m in ch.dominant.items())


__all__ = [
    "IrrepLabel", "FormalCharacter", "DecompositionList", "InvalidHighestWeight",
    "weyl_dim", "freudenthal_character", "dominant_weights", "tensor_decompose",
    "tensor_decompose_by_peeling", "character_product", "peel",
    "infinitesimal_character", "theta_infchar_transfer", "InfCharTransfer", "E",
    "is_self_dual", "orbit_size",
]
