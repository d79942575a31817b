"""Truncated models of lowest- and highest-weight sl2 modules.

``delta(n)`` has basis ``v_a = e^a v_0`` with ``h v_a = (n + 2a) v_a``;
its conjugate ``delta_bar(m)`` has basis ``w_b = f^b w_0`` with
``h w_b = -(m + 2b) w_b``.  Only the first ``depth + 1`` basis vectors are
kept, so identities are trusted only on the interior block (vectors whose
images under ``e`` and ``f`` stay inside the truncation).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .linalg import exact_rank


@dataclass(frozen=True, eq=False)
class TruncatedSl2Module:
    basis_labels: tuple
    depth: int
    e: np.ndarray  # object arrays of Python ints, acting on column vectors
    h: np.ndarray
    f: np.ndarray
    kind: tuple    # ("lowest", n) | ("highest", m) | ("tensor", n, m)
    interior: tuple  # basis indices of the interior block

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def weights(self) -> list:
        return [int(self.h[i, i]) for i in range(self.dim)]

    def basis_vector(self, label) -> np.ndarray:
        v = np.zeros(self.dim, dtype=object)
        v[:] = 0
        v[self.basis_labels.index(label)] = 1
        return v


def _zeros(n):
    a = np.empty((n, n), dtype=object)
    a[:] = 0
    return a


def build_lowest_weight_module(n: int, depth: int) -> TruncatedSl2Module:
    """``delta(n)`` truncated to ``v_0 .. v_depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    d = depth + 1
    e, h, f = _zeros(d), _zeros(d), _zeros(d)
    for a in range(d):
        h[a, a] = n + 2 * a
        if a + 1 < d:
            e[a + 1, a] = 1
        if a > 0:
            f[a - 1, a] = -a * (n + a - 1)
    return TruncatedSl2Module(tuple(range(d)), depth, e, h, f, ("lowest", n),
                              tuple(range(depth)))


def build_highest_weight_module(m: int, depth: int) -> TruncatedSl2Module:
    """``delta_bar(m)``: highest weight ``-m``, truncated to ``w_0 .. w_depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    d = depth + 1
    e, h, f = _zeros(d), _zeros(d), _zeros(d)
    for b in range(d):
        h[b, b] = -m - 2 * b
        if b + 1 < d:
            f[b + 1, b] = 1
        if b > 0:
            e[b - 1, b] = -b * (m + b - 1)
    return TruncatedSl2Module(tuple(range(d)), depth, e, h, f, ("highest", m),
                              tuple(range(depth)))


def _kron(a, b):
    return np.kron(a, b).astype(object)


def _eye(n):
    i = _zeros(n)
    for k in range(n):
        i[k, k] = 1
    return i


def tensor_modules(A: TruncatedSl2Module, B: TruncatedSl2Module) -> TruncatedSl2Module:
    """Tensor product with ``x`` acting as ``x (x) 1 + 1 (x) x``."""
    if A.kind[0] != "lowest" or B.kind[0] != "highest":
        raise ValueError("tensor_modules expects a lowest-weight then a highest-weight module")
    ia, ib = _eye(A.dim), _eye(B.dim)
    e = _kron(A.e, ib) + _kron(ia, B.e)
    h = _kron(A.h, ib) + _kron(ia, B.h)
    f = _kron(A.f, ib) + _kron(ia, B.f)
    labels = tuple((a, b) for a in A.basis_labels for b in B.basis_labels)
    inner_a, inner_b = set(A.interior), set(B.interior)
    interior = tuple(i for i, (a, b) in enumerate(labels) if a in inner_a and b in inner_b)
    return TruncatedSl2Module(labels, min(A.depth, B.depth), e, h, f,
                              ("tensor", A.kind[1], B.kind[1]), interior)


def bracket_defects(M: TruncatedSl2Module) -> dict:
    """Number of nonzero interior-column entries of each bracket defect.

    All three counts are zero exactly when ``[h,e]=2e``, ``[h,f]=-2f`` and
    ``[e,f]=h`` hold on the interior block.
    """
    e, h, f = _sparse(M.e), _sparse(M.h), _sparse(M.f)
    out = {"he": 0, "hf": 0, "ef": 0}
    for j in M.interior:
        v = {j: 1}
        ev, hv, fv = _apply(e, v), _apply(h, v), _apply(f, v)
        checks = {
            "he": _combine(_apply(h, ev), _apply(e, hv), ev, -1, -2),
            "hf": _combine(_apply(h, fv), _apply(f, hv), fv, -1, 2),
            "ef": _combine(_apply(e, fv), _apply(f, ev), hv, -1, -1),
        }
        for name, d in checks.items():
            out[name] += len(d)
    return out


def _combine(x: dict, y: dict, z: dict, cy: int, cz: int) -> dict:
    out = dict(x)
    for vec, c in ((y, cy), (z, cz)):
        for i, a in vec.items():
            out[i] = out.get(i, 0) + c * a
    return {i: a for i, a in out.items() if a != 0}


def brackets_hold(M: TruncatedSl2Module) -> bool:
    return not any(bracket_defects(M).values())


def filtration_rank(M: TruncatedSl2Module, gen, N: int) -> int:
    """Dimension of the span of ``e^a f^b h^c gen`` over ``a + b + c <= N``.

    ``gen`` is a basis label (e.g. ``(0, 0)`` for ``v_0 (x) w_0``) or a vector.

    Raises
    ------
    ValueError
        If ``N > depth/2 - 1`` ("truncation too shallow").
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if 2 * (N + 1) > M.depth:
        raise ValueError(f"truncation too shallow: N={N} needs depth >= {2 * (N + 1)}")
    v = M.basis_vector(gen) if not isinstance(gen, np.ndarray) else gen
    e, f, h = _sparse(M.e), _sparse(M.f), _sparse(M.h)
    vecs = []
    hc = {i: x for i, x in enumerate(v) if x != 0}
    for c in range(N + 1):
        fb = hc
        for b in range(N + 1 - c):
            ea = fb
            for a in range(N + 1 - c - b):
                vecs.append(ea)
                ea = _apply(e, ea)
            fb = _apply(f, fb)
        hc = _apply(h, hc)
    dim = M.dim
    return exact_rank([_dense(x, dim) for x in vecs])


def _sparse(mat) -> dict:
    """Column-major sparse form: ``{j: [(i, mat[i, j]), ...]}``."""
    cols = {}
    for i, j in zip(*np.nonzero(mat != 0)):
        cols.setdefault(int(j), []).append((int(i), mat[i, j]))
    return cols


def _apply(cols: dict, vec: dict) -> dict:
    out = {}
    for j, x in vec.items():
        for i, a in cols.get(j, ()):
            out[i] = out.get(i, 0) + a * x
    return {i: x for i, x in out.items() if x != 0}


def _dense(vec: dict, dim: int) -> list:
    out = [0] * dim
    for i, x in vec.items():
        out[i] = x
    return out


def casimir_eigenvalue(M: TruncatedSl2Module) -> Fraction:
    """Eigenvalue of ``h^2/2 + ef + fe`` on the generating vector."""
    v = M.basis_vector(M.basis_labels[0])
    om = Fraction(1, 2) * M.h.dot(M.h.dot(v)) + M.e.dot(M.f.dot(v)) + M.f.dot(M.e.dot(v))
    c = Fraction(om[0])
    if any(x != 0 for x in om[1:]):
        raise ArithmeticError("generator is not a Casimir eigenvector")
    return c


def hc_parameter(M: TruncatedSl2Module) -> Fraction:
    """Nonnegative ``p`` with Casimir eigenvalue ``(p^2 - 1)/2``.

    For ``delta(k)`` this is ``|k - 1|``; for ``delta_bar(m)`` it is ``|m - 1|``.
    """
    if M.kind[0] not in ("lowest", "highest"):
        raise ValueError("hc_parameter needs a lowest- or highest-weight module")
    sq = 2 * casimir_eigenvalue(M) + 1
    if sq < 0:
        raise ArithmeticError(f"Casimir parameter squared {sq} is negative")
    num, den = isqrt(sq.numerator), isqrt(sq.denominator)
    if num * num != sq.numerator or den * den != sq.denominator:
        raise ArithmeticError(f"Casimir parameter squared {sq} is not a rational square")
    return Fraction(num, den)


@dataclass(frozen=True)
class So2Support:
    """SO(2)-weight support of an (sl2, SO(2))-module; all weights even.

    kind ``lowest`` = {k, k+2, ...}, ``highest`` = {k, k-2, ...},
    ``full_parity`` = all even integers, ``finite`` = an explicit set.
    """

    kind: str
    k: int = 0
    elements: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in ("lowest", "highest", "full_parity", "finite"):
            raise ValueError(f"unknown support kind {self.kind!r}")
        if self.kind in ("lowest", "highest") and self.k % 2:
            raise ValueError("odd SO(2) weight excluded")
        if self.kind == "full_parity" and self.k != 0:
            raise ValueError("odd SO(2) weight excluded")
        if self.kind == "finite":
            object.__setattr__(self, "elements", frozenset(int(x) for x in self.elements))
            if any(x % 2 for x in self.elements):
                raise ValueError("odd SO(2) weight excluded")

    @classmethod
    def lowest(cls, k: int) -> "So2Support":
        return cls("lowest", k)

    @classmethod
    def highest(cls, k: int) -> "So2Support":
        return cls("highest", k)

    @classmethod
    def full(cls) -> "So2Support":
        return cls("full_parity", 0)

    @classmethod
    def finite(cls, elements) -> "So2Support":
        return cls("finite", 0, frozenset(elements))

    def __contains__(self, w: int) -> bool:
        return support_membership(self, w)

    def min_at_least(self, t: int):
        """Smallest member ``>= t`` (``t`` even), or None."""
        if self.kind == "lowest":
            return max(self.k, t)
        if self.kind == "highest":
            return t if t <= self.k else None
        if self.kind == "full_parity":
            return t
        cands = [x for x in self.elements if x >= t]
        return min(cands) if cands else None

    def negated(self) -> "So2Support":
        if self.kind == "lowest":
            return So2Support.highest(-self.k)
        if self.kind == "highest":
            return So2Support.lowest(-self.k)
        if self.kind == "finite":
            return So2Support.finite(-x for x in self.elements)
        return self

    def __str__(self):
        if self.kind == "finite":
            return "finite{" + ",".join(str(x) for x in sorted(self.elements)) + "}"
        if self.kind == "full_parity":
            return "full_parity(even)"
        return f"{self.kind}({self.k})"

    @classmethod
    def parse(cls, text: str) -> "So2Support":
        """Parse ``lowest(4)``, ``highest(-2)``, ``full``, ``finite{2,6}``."""
        t = text.strip().replace(" ", "")
        if t in ("full", "full_parity", "full_parity(even)", "full_parity(0)"):
            return cls.full()
        for kind in ("lowest", "highest"):
            if t.startswith(kind + "(") and t.endswith(")"):
                return cls(kind, int(t[len(kind) + 1:-1]))
        if t.startswith("finite{") and t.endswith("}"):
            body = t[len("finite{"):-1]
            return cls.finite(int(x) for x in body.split(",") if x)
        raise ValueError(f"cannot parse SO(2) support {text!r}")


def support_membership(s: So2Support, w: int) -> bool:
    if w % 2:
        raise ValueError("odd SO(2) weight excluded")
    if s.kind == "lowest":
        return w >= s.k
    if s.kind == "highest":
        return w <= s.k
    if s.kind == "full_parity":
        return True
    return w in s.elements
