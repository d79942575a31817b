"""Type-level bookkeeping for the theta correspondence between SL2(R) and F4.

Lifts are never built as modules.  What is computed are the quantities the
see-saw and Frobenius reciprocity arguments reduce to: SO(2) generator
weights, K-type bounds, Hom dimensions and K-type supports.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .branching import (
    TauLabel,
    branch,
    classify_tau,
    d5_vector_power,
    make_embedding,
)
from .characters import E, infinitesimal_character, weyl_dim
from .root_system import Weight
from .sl2 import (
    So2Support,
    build_highest_weight_module,
    build_lowest_weight_module,
    filtration_rank,
    hc_parameter,
    support_membership,
    tensor_modules,
)

DEFAULT_MAX_DIM = 20_000


@dataclass(frozen=True)
class ThetaKTypeLift:
    """Lift of the K-type tau(m, n): ``delta(2m+n+8) (x) delta_bar(n+4)``."""

    m: int
    n: int

    @property
    def lowest_label(self) -> int:
        return 2 * self.m + self.n + 8

    @property
    def highest_label(self) -> int:
        return self.n + 4

    @property
    def sl2sl2_pair(self) -> tuple:
        return (self.lowest_label, -self.highest_label)

    @property
    def generator_so2_weight(self) -> int:
        return self.lowest_label - self.highest_label


def lift_ktype(m: int, n: int) -> ThetaKTypeLift:
    if m < 0 or n < 0:
        raise ValueError("lift_ktype needs m, n >= 0")
    return ThetaKTypeLift(m, n)


def lift_model(lift: ThetaKTypeLift, depth: int):
    """Truncated tensor model of the lift, generated by ``v_0 (x) w_0``."""
    return tensor_modules(build_lowest_weight_module(lift.lowest_label, depth),
                          build_highest_weight_module(lift.highest_label, depth))


def validate_ktype_lift(lift: ThetaKTypeLift, n_max: int) -> dict:
    """Check the tensor model is freely generated up to PBW degree ``n_max``.

    Returns the generator weight seen by ``h`` and the list of
    ``(N, filtration_rank, (N+1)(N+2)/2)`` triples.
    """
    M = lift_model(lift, 2 * (n_max + 1))
    gen = (0, 0)
    h_weight = int(M.h[0, 0])
    ranks = [(N, filtration_rank(M, gen, N), (N + 1) * (N + 2) // 2) for N in range(n_max + 1)]
    return {
        "generator_weight": h_weight,
        "ranks": ranks,
        "ok": h_weight == lift.generator_so2_weight and all(r == x for _, r, x in ranks),
    }


@dataclass(frozen=True)
class ThetaSo2Lift:
    m: int
    ktype_bound: tuple  # TauLabels of F_m
    d5_label: Weight | None
    in_theorem_scope: bool  # False for m < 0

    @property
    def so2_weight(self) -> int:
        return 2 * self.m + 4


def lift_so2type(k: int, *, verify: bool = True) -> ThetaSo2Lift:
    """Lift of the SO(2)-type ``k = 2m + 4``.

    For ``m > 0`` the bound is ``tau(0,0) + ... + tau(m,0)``, the restriction
    of the D5 irrep ``(m,0,0,0,0)``; with ``verify`` the restriction is
    recomputed by branching and must agree.  For ``m <= 0`` the bound is the
    trivial type; negative ``m`` is flagged as outside the theorem's range.
    """
    if k % 2:
        raise ValueError("odd SO(2) weight excluded")
    m = (k - 4) // 2
    if m <= 0:
        return ThetaSo2Lift(m, (TauLabel(0, 0),), None, m >= 0)
    bound = tuple(TauLabel(j, 0) for j in range(m + 1))
    d5 = d5_vector_power(m)
    if verify:
        got = classify_tau(branch(d5, make_embedding("B4_in_D5")))
        if got.failures or got.taus != tuple((t, 1) for t in bound):
            raise ArithmeticError(f"D5 restriction disagrees with F_{m}: {got}")
    return ThetaSo2Lift(m, bound, d5.highest_weight, True)


def dual_support(s: So2Support) -> So2Support:
    """Support of the contragredient: SO(2) weights are negated."""
    return s.negated()


def hom_dim_ktype(sigma: So2Support, m: int, n: int) -> int:
    """``dim Hom_K(Theta(sigma), tau(m,n)) = dim Hom_SO(2)((2m+4), sigma)``."""
    if m < 0 or n < 0:
        raise ValueError("m, n must be nonnegative")
    return int(support_membership(sigma, 2 * m + 4))


@dataclass(frozen=True)
class ThetaSupport:
    """K-types of Theta(sigma): ``tau(m, n)`` for ``m`` in ``m_values``, all ``n >= 0``.

    ``m_values`` is a finite tuple, or ``(m0, None)`` meaning every ``m >= m0``.
    Each type has multiplicity one.
    """

    sigma: So2Support
    m_values: tuple

    @property
    def empty(self) -> bool:
        return not self.m_values

    def __contains__(self, t: TauLabel) -> bool:
        if self.empty:
            return False
        if len(self.m_values) == 2 and self.m_values[1] is None:
            return t.m >= self.m_values[0]
        return t.m in self.m_values

    def multiplicity(self, t: TauLabel) -> int:
        return int(t in self)

    def describe(self) -> str:
        if self.empty:
            return "empty (Theta = 0)"
        if self.m_values[1:] == (None,):
            return f"tau(m,n): m >= {self.m_values[0]}, n >= 0, multiplicity 1"
        return "tau(m,n): m in {" + ",".join(map(str, self.m_values)) + "}, n >= 0, multiplicity 1"


def theta_support(sigma: So2Support) -> ThetaSupport:
    if sigma.kind == "lowest":
        return ThetaSupport(sigma, (max(0, (sigma.k - 4) // 2), None))
    if sigma.kind == "full_parity":
        return ThetaSupport(sigma, (0, None))
    if sigma.kind == "highest":
        if sigma.k < 4:
            return ThetaSupport(sigma, ())
        return ThetaSupport(sigma, tuple(range((sigma.k - 4) // 2 + 1)))
    ms = sorted((w - 4) // 2 for w in sigma.elements if w >= 4)
    return ThetaSupport(sigma, tuple(ms))


@dataclass
class PairingReport:
    sigma: So2Support
    minimal_m: int | None
    lowest_ktype: TauLabel | None
    hom_chain_dims: list = field(default_factory=list)
    lower_type_dims: list = field(default_factory=list)
    ktype_support_rule: str = ""
    verdict: bool = False
    reasons: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "minimal_m": self.minimal_m,
            "lowest_ktype": str(self.lowest_ktype) if self.lowest_ktype else None,
            "hom_chain_dims": list(self.hom_chain_dims),
            "lower_type_dims": list(self.lower_type_dims),
            "ktype_support_rule": self.ktype_support_rule,
            "verdict": "pass" if self.verdict else "fail",
            "reasons": list(self.reasons),
        }


def match_lowest_types(sigma: So2Support) -> PairingReport:
    """Lowest-type matching for an irreducible ``sigma``.

    Finds the smallest ``m >= 0`` with ``2m+4`` a type of ``sigma`` and
    evaluates both Hom chains at that level:

    * chain 1: ``Hom_K(Theta(sigma), tau(m,0)) = Hom_SO(2)((2m+4), sigma)``,
      with all smaller ``2n'+4`` absent (so no ``tau(n',0)``, ``n' < m``);
    * chain 2: ``Hom_SO(2)(sigma, (2m+4))`` and the Frobenius bound
      ``Hom_K(F_m, pi)``, which with no ``tau(n',0)`` below ``m`` reduces to
      the ``tau(m,0)`` slot of ``F_m``.

    Uniqueness of the quotient follows when every dimension is 1: a split
    ``pi = pi1 + pi2`` would need ``1 + 1 = 1``.
    """
    support = theta_support(sigma)
    rule = support.describe()
    top = sigma.min_at_least(4)
    if top is None:
        return PairingReport(sigma, None, None, ktype_support_rule=rule, verdict=True,
                             reasons=["sigma has no type 2m+4 with m >= 0: Theta(sigma) = 0"])
    m = (top - 4) // 2
    reasons = []
    lower = [hom_dim_ktype(sigma, j, 0) for j in range(m)]
    if any(lower):
        reasons.append("a smaller type 2n'+4 is present")

    d_k = hom_dim_ktype(sigma, m, 0)
    d_so2 = int(support_membership(sigma, 2 * m + 4))
    d_so2_dual = int(support_membership(dual_support(sigma), -(2 * m + 4)))
    bound = lift_so2type(2 * m + 4).ktype_bound
    surviving = [t for t in bound if not (t.n == 0 and t.m < m)]
    d_frob = sum(1 for t in surviving if t == TauLabel(m, 0))
    if len(surviving) != d_frob:
        reasons.append("Frobenius bound has slots other than tau(m,0)")
    chain = [d_k, d_so2, d_so2_dual, d_frob]
    if any(d != 1 for d in chain):
        reasons.append(f"Hom chain dimensions {chain} are not all 1")
    split = 1 + 1
    if split == d_k:
        reasons.append("a two-part quotient would be consistent with the Hom count")
    if TauLabel(m, 0) not in support or any(TauLabel(j, 0) in support for j in range(m)):
        reasons.append("K-type support disagrees with the lowest type")
    verdict = not reasons
    if verdict:
        reasons.append(f"unique irreducible quotient; lowest K-type tau({m},0), multiplicity one")
    return PairingReport(sigma, m, TauLabel(m, 0), chain, lower, rule, verdict, reasons)


def match_from_ktype(m: int) -> dict:
    """Converse direction: ``pi`` with lowest ``tau(m,0)`` lifts to lowest SO(2)-type ``2m+4``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    lift = lift_ktype(m, 0)
    bound = lift_so2type(2 * m + 4).ktype_bound
    return {
        "ktype": str(TauLabel(m, 0)),
        "so2_type": lift.generator_so2_weight,
        "smaller_types_excluded": all(TauLabel(j, 0) in bound for j in range(m)),
        "ok": lift.generator_so2_weight == 2 * m + 4 and bound[-1] == TauLabel(m, 0),
    }


@dataclass(frozen=True)
class PiRow:
    n: int
    sl2_factor: int           # lowest weight 2n+12 of the discrete series factor
    hc_parameter: Fraction
    dim: int
    infchar: Weight
    taus: tuple               # ((TauLabel, multiplicity), ...)
    tau_closed: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "sl2_factor": f"delta({self.sl2_factor})",
            "hc_parameter": str(self.hc_parameter),
            "dim": self.dim,
            "infchar": ",".join(str(c) for c in self.infchar),
            "taus": [[str(t), m] for t, m in self.taus],
            "tau_closed": self.tau_closed,
        }


def _pi_row(n: int) -> PiRow:
    rep = E(n)
    dec = branch(rep, make_embedding("B4_in_F4"))
    cls = classify_tau(dec)
    ok = cls.ok and dec.dim == weyl_dim(rep)
    return PiRow(n, 2 * n + 12, hc_parameter(build_lowest_weight_module(2 * n + 12, 2)),
                 weyl_dim(rep), infinitesimal_character(rep), cls.taus, ok)


def pi_compact_table(n_max: int, max_dim: int = DEFAULT_MAX_DIM, workers: int = 1) -> list:
    """Rows ``n = 0..n_max`` of the compact-case decomposition sum of delta(2n+12) x E_n."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    for n in range(n_max + 1):
        d = weyl_dim(E(n))
        if d > max_dim:
            raise ValueError(f"dim E_{n} = {d} exceeds the cap {max_dim}")
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(_pi_row, range(n_max + 1)))
    return [_pi_row(n) for n in range(n_max + 1)]
