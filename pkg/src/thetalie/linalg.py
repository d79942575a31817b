"""Exact rank of integer/rational vectors by sparse fraction-free elimination."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable


def _to_int_row(vec) -> dict:
    """Sparse integer row proportional to ``vec`` (denominators cleared)."""
    items = [(i, Fraction(v)) for i, v in enumerate(vec) if v != 0]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // gcd(den, v.denominator)
    return {i: int(v * den) for i, v in items}


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def exact_rank(vectors: Iterable) -> int:
    """Rank over Q of a family of vectors with int or Fraction entries."""
    pivots: dict[int, dict] = {}
    for vec in vectors:
        row = _to_int_row(vec)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(row)
                break
            a, b = p[c], row[c]
            new = {}
            for k in row.keys() | p.keys():
                v = a * row.get(k, 0) - b * p.get(k, 0)
                if v:
                    new[k] = v
            row = _primitive(new)
    return len(pivots)
