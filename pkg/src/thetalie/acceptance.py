"""End-to-end verification suite behind ``thetalie verify-paper``.

Every check is exact; a check passes when its assertion holds and it finishes
inside its time budget.  The ``quick`` profile caps E_n at n <= 2 and the sl2
truncation depth at 12 (so the filtration check stops at N = 5); ``full`` runs
the stated maxima.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import kernels
from .branching import (
    InconsistentEmbedding,
    TauLabel,
    branch,
    classify_tau,
    d5_vector_power,
    interlacing_branch,
    make_embedding,
)
from .characters import (
    E,
    IrrepLabel,
    infinitesimal_character,
    tensor_decompose,
    tensor_decompose_by_peeling,
    weyl_dim,
)
from .root_system import build_root_system
from .sl2 import (
    So2Support,
    brackets_hold,
    build_highest_weight_module,
    build_lowest_weight_module,
    filtration_rank,
    hc_parameter,
    tensor_modules,
)
from .theta import (
    lift_ktype,
    lift_so2type,
    match_lowest_types,
    theta_support,
    validate_ktype_lift,
)

PROFILES = ("quick", "full")


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    elapsed: float
    budget: float
    details: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ok and self.elapsed < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.elapsed < self.budget else " (over time budget)"
        return (f"[{status}] {self.number}. {self.name}: "
                f"{self.elapsed:.3f}s / {self.budget:g}s{extra}")

    def as_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "ok": self.ok, "elapsed_s": round(self.elapsed, 4),
                "budget_s": self.budget, "details": self.details}


class _Log:
    def __init__(self):
        self.ok = True
        self.details = []

    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.ok = False
            self.details.append(msg)


def _b4(*w):
    return IrrepLabel("B4", tuple(Fraction(x) for x in w))


def check_dimensions(profile, log):
    f4 = build_root_system("F4")
    half = Fraction(1, 2)
    log.expect(weyl_dim(IrrepLabel("F4", f4.fundamental_weights[3])) == 26, "dim E_1 != 26")
    log.expect(weyl_dim(_b4(half, half, half, half)) == 16, "dim spin != 16")
    log.expect(weyl_dim(_b4(1, 0, 0, 0)) == 9, "dim standard != 9")


def check_infchar(profile, log):
    for n in range(21):
        got = infinitesimal_character(E(n))
        want = tuple(Fraction(x, 2) for x in (2 * n + 11, 5, 3, 1))
        log.expect(got == want, f"infchar E_{n} = {got}, expected {want}")
        p = hc_parameter(build_lowest_weight_module(2 * n + 12, 2))
        log.expect(p == 2 * n + 11, f"hc parameter of delta({2 * n + 12}) = {p}")
        log.expect(p == 2 * got[0], f"first coordinate mismatch at n={n}")


def check_d5_branching(profile, log):
    emb = make_embedding("B4_in_D5")
    for m in range(1, 7):
        cls = classify_tau(branch(d5_vector_power(m), emb))
        want = tuple((TauLabel(k, 0), 1) for k in range(m + 1))
        log.expect(not cls.failures and cls.taus == want, f"D5 ({m},0,0,0,0) -> {cls}")
        bound = lift_so2type(2 * m + 4, verify=False).ktype_bound
        log.expect(tuple((t, 1) for t in bound) == cls.taus, f"F_{m} bound mismatch")


def check_tau_closure(profile, log):
    n_max = 2 if profile == "quick" else 3
    emb = make_embedding("B4_in_F4")
    for n in range(n_max + 1):
        dec = branch(E(n), emb)
        cls = classify_tau(dec)
        log.expect(cls.ok, f"E_{n}: non-tau constituents {cls.failures}")
        log.expect(dec.dim == weyl_dim(E(n)), f"E_{n}: dimension not conserved")
        if n == 1:
            want = {TauLabel(0, 0), TauLabel(1, 0), TauLabel(0, 1)}
            log.expect({t for t, _ in cls.taus} == want and all(k == 1 for _, k in cls.taus),
                       f"E_1 -> {cls.taus}")


SL2_PAIRS = ((8, 4), (10, 4), (9, 5), (12, 4))


def check_sl2_isomorphism(profile, log):
    n_max = 5 if profile == "quick" else 12
    depth = 12 if profile == "quick" else 2 * (n_max + 1)
    for n, m in SL2_PAIRS:
        M = tensor_modules(build_lowest_weight_module(n, depth),
                           build_highest_weight_module(m, depth))
        for N in range(n_max + 1):
            r = filtration_rank(M, (0, 0), N)
            log.expect(r == (N + 1) * (N + 2) // 2, f"rank({n},{m},N={N}) = {r}")


KTYPE_SAMPLES = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 2), (5, 0), (10, 10))


def check_ktype_lifts(profile, log):
    for m in range(11):
        for n in range(11):
            lift = lift_ktype(m, n)
            log.expect(lift.generator_so2_weight == 2 * m + 4, f"generator weight tau({m},{n})")
    n_max = 5 if profile == "quick" else 8
    for m, n in KTYPE_SAMPLES:
        res = validate_ktype_lift(lift_ktype(m, n), n_max)
        log.expect(res["ok"], f"tensor model of tau({m},{n}) lift: {res}")


def check_main_matching(profile, log):
    for sigma, m in ((So2Support.lowest(4), 0), (So2Support.lowest(6), 1),
                     (So2Support.lowest(8), 2), (So2Support.lowest(12), 4),
                     (So2Support.full(), 0)):
        rep = match_lowest_types(sigma)
        log.expect(rep.verdict and rep.minimal_m == m and rep.lowest_ktype == TauLabel(m, 0)
                   and rep.hom_chain_dims and all(d == 1 for d in rep.hom_chain_dims)
                   and not any(rep.lower_type_dims), f"{sigma}: {rep.as_dict()}")
        log.expect(not theta_support(sigma).empty, f"{sigma}: support unexpectedly empty")
    for sigma in (So2Support.highest(-2), So2Support.highest(-6)):
        log.expect(theta_support(sigma).empty, f"{sigma}: support should vanish")
        log.expect(match_lowest_types(sigma).minimal_m is None, f"{sigma}: minimal m found")


def tensor_oracle_cases() -> list:
    h = Fraction(1, 2)
    f4 = build_root_system("F4")
    b4 = [_b4(0, 0, 0, 0), _b4(1, 0, 0, 0), _b4(h, h, h, h), _b4(1, 1, 0, 0), _b4(2, 0, 0, 0),
          _b4(3 * h, h, h, h)]
    d5 = [IrrepLabel("D5", w) for w in ((1, 0, 0, 0, 0), (h, h, h, h, h), (h, h, h, h, -h),
                                        (1, 1, 0, 0, 0))]
    a1 = [IrrepLabel("A1", (k,)) for k in range(5)]
    f4s = [IrrepLabel("F4", (0, 0, 0, 0)), IrrepLabel("F4", f4.fundamental_weights[3])]
    cases = []
    for group in (b4, d5, a1, f4s):
        for i, a in enumerate(group):
            for b in group[i:]:
                if weyl_dim(a) * weyl_dim(b) <= 10_000:
                    cases.append((a, b))
    return cases


def check_oracles(profile, log):
    for a, b in tensor_oracle_cases():
        bk = tensor_decompose(a, b)
        log.expect(bk == tensor_decompose_by_peeling(a, b), f"{a} x {b}: BK != peeling")
        log.expect(bk.dim == weyl_dim(a) * weyl_dim(b), f"{a} x {b}: dimension")
    emb = make_embedding("B4_in_D5")
    for m in range(1, 7):
        rep = d5_vector_power(m)
        got = branch(rep, emb).as_dict()
        log.expect(got == interlacing_branch(rep.highest_weight), f"D5 ({m},0,...) vs interlacing")


def check_structure(profile, log):
    for label, order in (("F4", 1152), ("B4", 384), ("D5", 1920), ("A1", 2)):
        got = build_root_system(label).weyl_order
        log.expect(got == order, f"|W({label})| = {got}")
    depth = 12 if profile == "quick" else 20
    models = [build_lowest_weight_module(n, depth) for n in (1, 2, 4, 8, 12)]
    models += [build_highest_weight_module(m, depth) for m in (1, 4, 5, 6)]
    models += [tensor_modules(build_lowest_weight_module(n, depth),
                              build_highest_weight_module(m, depth)) for n, m in SL2_PAIRS]
    for M in models:
        log.expect(brackets_hold(M), f"bracket identities fail on {M.kind}")
    n_max = 2 if profile == "quick" else 3
    try:
        for n in range(n_max + 1):
            branch(E(n), make_embedding("B4_in_F4"))
        for m in range(1, 7):
            branch(d5_vector_power(m), make_embedding("B4_in_D5"))
    except InconsistentEmbedding as exc:
        log.expect(False, str(exc))


CHECKS: list[tuple[int, str, float, Callable]] = [
    (1, "dimension triple 26 / 16 / 9", 1.0, check_dimensions),
    (2, "infinitesimal character of E_n", 1.0, check_infchar),
    (3, "D5 -> B4 branching of (m,0,0,0,0)", 10.0, check_d5_branching),
    (4, "tau-closure of the K-types of E_n", 120.0, check_tau_closure),
    (5, "sl2 induced-module isomorphism at truncation", 30.0, check_sl2_isomorphism),
    (6, "K-type lift generator weight", 30.0, check_ktype_lifts),
    (7, "lowest-type matching and nonvanishing", 1.0, check_main_matching),
    (8, "oracle equivalences", 60.0, check_oracles),
    (9, "structural invariants", 30.0, check_structure),
]


def run_check(number: int, profile: str = "quick") -> CheckResult:
    num, name, budget, fn = next(c for c in CHECKS if c[0] == number)
    log = _Log()
    t0 = time.perf_counter()
    try:
        fn(profile, log)
    except Exception as exc:  # a crash is a failed check, reported with its message
        log.expect(False, f"{type(exc).__name__}: {exc}")
    return CheckResult(num, name, log.ok, time.perf_counter() - t0, budget, log.details)


def verify(profile: str = "quick") -> list:
    """Run every check in order; JIT warm-up happens before timing starts."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    kernels.warmup()
    return [run_check(c[0], profile) for c in CHECKS]
