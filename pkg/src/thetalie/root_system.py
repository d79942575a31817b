"""Root systems F4, B4, D5 and A1 in their standard coordinate realizations.

Weights are plain tuples of :class:`fractions.Fraction`.  Every coordinate in
the supported systems is an integer or half-integer, so the numeric kernels can
work on doubled integer coordinates (see :func:`to_doubled`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels

Weight = tuple  # tuple[Fraction, ...]

SYSTEMS = ("F4", "B4", "D5", "A1")


def weight(*coords) -> Weight:
    """Build a weight from ints, Fractions or strings like ``"5/2"``."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    return tuple(Fraction(c) for c in coords)


def parse_weight(text: str) -> Weight:
    """Parse the CLI syntax ``"11/2,5/2,3/2,1/2"``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed weight {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed weight {text!r}") from exc


def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w)


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * a for a in x)


def dot(x: Weight, y: Weight) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def zero(rank: int) -> Weight:
    return (Fraction(0),) * rank


def reflect(x: Weight, alpha: Weight) -> Weight:
    """Simple reflection ``x - 2(x,a)/(a,a) a``."""
    c = 2 * dot(x, alpha) / dot(alpha, alpha)
    if c == 0:
        return x
    return tuple(a - c * b for a, b in zip(x, alpha))


def to_doubled(weights: Iterable[Weight], rank: int) -> np.ndarray:
    """Stack weights as an ``int64`` array of doubled coordinates."""
    rows = []
    for w in weights:
        row = []
        for c in w:
            d = 2 * c
            if d.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            row.append(int(d))
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), rank)


def from_doubled(row) -> Weight:
    return tuple(Fraction(int(v), 2) for v in row)


def _simple_roots(label: str) -> list[Weight]:
    h = Fraction(1, 2)
    if label == "F4":
        return [weight(0, 1, -1, 0), weight(0, 0, 1, -1), weight(0, 0, 0, 1),
                weight(h, -h, -h, -h)]
    if label == "B4":
        return [weight(1, -1, 0, 0), weight(0, 1, -1, 0), weight(0, 0, 1, -1),
                weight(0, 0, 0, 1)]
    if label == "D5":
        roots = []
        for i in range(4):
            r = [0] * 5
            r[i], r[i + 1] = 1, -1
            roots.append(weight(r))
        roots.append(weight(0, 0, 0, 1, 1))
        return roots
    if label == "A1":
        # h-eigenvalue normalization: the coordinate of a weight equals its
        # pairing with the coroot.
        return [weight(2)]
    raise ValueError(f"unknown system {label!r}")


def _solve(matrix: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs`` exactly (square, nonsingular)."""
    n = len(matrix)
    a = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [u - f * v for u, v in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _positive_roots(simple: list[Weight]) -> frozenset:
    """Close the simple roots under simple reflections; keep the positive ones.

    A root is positive when its coordinates in the simple-root basis are
    nonnegative; these coordinates are found by solving against the simple
    roots (all four realizations have simple roots spanning the ambient space).
    """
    rank = len(simple)
    roots = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for a in simple:
            s = reflect(r, a)
            if s not in roots:
                roots.add(s)
                queue.append(s)
    gram = [[simple[j][i] for j in range(rank)] for i in range(rank)]
    pos = set()
    for r in roots:
        coeffs = [row[0] for row in _solve(gram, [[c] for c in r])]
        if all(c >= 0 for c in coeffs):
            if any(c.denominator != 1 for c in coeffs):
                raise AssertionError("root outside the simple-root lattice")
            pos.add(r)
    return frozenset(pos)


@dataclass(frozen=True)
class RootSystemData:
    label: str
    rank: int
    simple_roots: tuple
    positive_roots: frozenset
    rho: Weight
    fundamental_weights: tuple
    weyl_order: int
    # positive roots in a fixed order, for kernels and deterministic loops
    positive_list: tuple = field(repr=False, compare=False)

    def form(self, x: Weight, y: Weight) -> Fraction:
        """Invariant bilinear form (the Euclidean dot product)."""
        return dot(x, y)

    def coroot_pairing(self, x: Weight, alpha: Weight) -> Fraction:
        return 2 * dot(x, alpha) / dot(alpha, alpha)

    def simple_coordinates(self, x: Weight) -> tuple:
        """Coefficients of ``x`` in the basis of simple roots."""
        gram = [[self.simple_roots[j][i] for j in range(self.rank)]
                for i in range(self.rank)]
        return tuple(row[0] for row in _solve(gram, [[c] for c in x]))


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystemData:
    """Return the root datum for ``label`` in ``{"F4", "B4", "D5", "A1"}``.

    Raises
    ------
    ValueError
        If the label is not one of the supported systems ("unknown system").
    """
    if label not in SYSTEMS:
        raise ValueError(f"unknown system {label!r}")
    simple = _simple_roots(label)
    rank = len(simple)
    pos = _positive_roots(simple)
    rho = scale(Fraction(1, 2), tuple(sum(c) for c in zip(*pos)))

    # 2(w_i, a_j)/(a_j, a_j) = delta_ij  <=>  W @ C = I with C_kj = 2 a_jk/(a_j,a_j)
    coroots = [scale(2 / dot(a, a), a) for a in simple]
    ct = [[coroots[j][k] for k in range(rank)] for j in range(rank)]
    ident = [[Fraction(int(i == j)) for j in range(rank)] for i in range(rank)]
    sol = _solve(ct, ident)  # columns are fundamental weights
    fund = tuple(tuple(sol[k][i] for k in range(rank)) for i in range(rank))

    # rho is regular, so its orbit is in bijection with W
    S = to_doubled(simple, rank)
    order = len(kernels.orbit(to_doubled([rho], rank)[0], S, (S * S).sum(axis=1)))
    return RootSystemData(
        label=label,
        rank=rank,
        simple_roots=tuple(simple),
        positive_roots=pos,
        rho=rho,
        fundamental_weights=fund,
        weyl_order=order,
        positive_list=tuple(sorted(pos, reverse=True)),
    )


def _orbit(simple: Sequence[Weight], w: Weight) -> set:
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for a in simple:
            y = reflect(x, a)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _check_length(sys: RootSystemData, w: Weight) -> None:
    if len(w) != sys.rank:
        raise ValueError(f"weight of length {len(w)} for {sys.label} (rank {sys.rank})")


def weyl_orbit(sys: RootSystemData, w: Weight) -> frozenset:
    """Full Weyl orbit of ``w`` by breadth-first closure under simple reflections."""
    _check_length(sys, w)
    return frozenset(_orbit(sys.simple_roots, tuple(Fraction(c) for c in w)))


def is_dominant(sys: RootSystemData, w: Weight) -> bool:
    _check_length(sys, w)
    return all(dot(w, a) >= 0 for a in sys.simple_roots)


def dominant_representative(sys: RootSystemData, w: Weight) -> Weight:
    w, _ = dominant_with_parity(sys, w)
    return w


def dominant_with_parity(sys: RootSystemData, w: Weight) -> tuple:
    """Reflect ``w`` into the dominant chamber.

    Returns the dominant weight and the parity (0 or 1) of the number of simple
    reflections used, i.e. the sign ``det(w)`` of the Weyl element.
    """
    _check_length(sys, w)
    w = tuple(Fraction(c) for c in w)
    parity = 0
    while True:
        for a in sys.simple_roots:
            if dot(w, a) < 0:
                w = reflect(w, a)
                parity ^= 1
                break
        else:
            return w, parity


def is_integral(sys: RootSystemData, w: Weight) -> bool:
    return all(sys.coroot_pairing(w, a).denominator == 1 for a in sys.simple_roots)


def is_regular(sys: RootSystemData, w: Weight) -> bool:
    """True when ``w`` is orthogonal to no root."""
    return all(dot(w, a) != 0 for a in sys.positive_roots)
