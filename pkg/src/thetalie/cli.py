"""Command-line front end: ``thetalie VERB ...``.

Exit codes: 0 success, 1 failed check or internal-consistency error, 2 usage
error.  ``--format structured`` prints one JSON document per invocation with
top-level keys ``verb, args, result, notes, elapsed_ms, engine_version,
cached``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import __version__, kernels
from .acceptance import PROFILES, verify
from .branching import EMBEDDINGS, TauLabel, branch, classify_tau, make_embedding
from .cache import ResultCache, canonical
from .characters import (
    E,
    IrrepLabel,
    freudenthal_character,
    infinitesimal_character,
    orbit_size,
    tensor_decompose,
    tensor_decompose_by_peeling,
    theta_infchar_transfer,
    weyl_dim,
)
from .root_system import SYSTEMS, build_root_system, format_weight, parse_weight, scale
from .sl2 import So2Support, build_highest_weight_module, build_lowest_weight_module
from .sl2 import filtration_rank, tensor_modules
from .theta import (
    DEFAULT_MAX_DIM,
    lift_ktype,
    lift_so2type,
    match_lowest_types,
    pi_compact_table,
    theta_support,
    validate_ktype_lift,
)

NOTES = {
    "dim": "Weyl dimension formula",
    "weights": "Freudenthal multiplicities on dominant weights; orbit sizes give the full character",
    "tensor": "Brauer-Klimyk; --check compares with character multiplication and peeling",
    "branch": "restriction by weight pushforward and peeling; constituents classified as tau(m,n)",
    "infchar": "dominant representative of highest weight + rho; --transfer maps x to (x,5,3,1)/2",
    "lift-ktype": "lift of tau(m,n) is delta(2m+n+8) (x) delta_bar(n+4), generated in SO(2)-weight 2m+4",
    "lift-so2": "lift of SO(2)-type 2m+4 is a quotient of U(g) (x)_U(k) F_m, F_m = tau(0,0)+...+tau(m,0)",
    "theta-support": "K-types of Theta(sigma): tau(m,n) with 2m+4 a type of sigma, multiplicity one",
    "match": "lowest-type matching: Hom chains through see-saw and Frobenius reciprocity all one-dimensional",
    "pi-table": "compact-case decomposition into delta(2n+12) (x) E_n with K-types of E_n",
    "sl2-rank": "rank of e^a f^b h^c (v_0 x w_0), a+b+c <= N, against the free count (N+1)(N+2)/2",
    "verify-paper": "full verification suite",
}


class UsageError(Exception):
    pass


def parse_highest_weight(system: str, text: str, dynkin: bool = False) -> IrrepLabel:
    t = text.strip().replace(" ", "")
    m = re.fullmatch(r"(?:E_?|n=)(\d+)", t)
    if m:
        if system != "F4":
            raise UsageError(f"{text!r} names an F4 representation, not {system}")
        return E(int(m.group(1)))
    m = re.fullmatch(r"tau\((\d+),(\d+)\)", t)
    if m:
        if system != "B4":
            raise UsageError(f"{text!r} names a B4 representation, not {system}")
        return TauLabel(int(m.group(1)), int(m.group(2))).irrep
    try:
        coords = parse_weight(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sys_ = build_root_system(system)
    if len(coords) != sys_.rank:
        raise UsageError(f"{system} weights have {sys_.rank} coordinates")
    if dynkin:
        w = (Fraction(0),) * sys_.rank
        for c, fw in zip(coords, sys_.fundamental_weights):
            w = tuple(a + b for a, b in zip(w, scale(c, fw)))
        coords = w
    lab = IrrepLabel(system, coords)
    try:
        lab.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return lab


def _dec_rows(dec) -> list:
    return [[format_weight(lab.highest_weight), mult, weyl_dim(lab)] for lab, mult in dec.entries]


def _system_for(args) -> str:
    if args.system not in SYSTEMS:
        raise UsageError(f"unknown system {args.system!r}")
    return args.system


def cmd_dim(args):
    rep = parse_highest_weight(_system_for(args), args.weight, args.dynkin)
    return {"system": rep.system, "highest_weight": format_weight(rep.highest_weight),
            "dim": weyl_dim(rep)}, 0


def cmd_weights(args):
    rep = parse_highest_weight(_system_for(args), args.weight, args.dynkin)
    ch = freudenthal_character(rep)
    dom = sorted(ch.dominant.items(), reverse=True)
    out = {"system": rep.system, "highest_weight": format_weight(rep.highest_weight),
           "dim": ch.dim,
           "dominant": [[format_weight(w), m, orbit_size(rep.system, w)] for w, m in dom]}
    if args.all:
        out["weights"] = [[format_weight(w), m] for w, m in sorted(ch.mults.items(), reverse=True)]
    return out, 0


def cmd_tensor(args):
    system = _system_for(args)
    a = parse_highest_weight(system, args.a, args.dynkin)
    b = parse_highest_weight(system, args.b, args.dynkin)
    dec = tensor_decompose(a, b)
    out = {"system": system, "a": format_weight(a.highest_weight),
           "b": format_weight(b.highest_weight), "dim": dec.dim,
           "decomposition": _dec_rows(dec)}
    status = 0
    if args.check:
        agree = dec == tensor_decompose_by_peeling(a, b)
        out["oracle_agrees"] = agree
        status = 0 if agree else 1
    return out, status


def cmd_branch(args):
    if args.embedding not in EMBEDDINGS:
        raise UsageError(f"unknown embedding {args.embedding!r}")
    emb = make_embedding(args.embedding)
    rep = parse_highest_weight(emb.source_system, args.weight, args.dynkin)
    if weyl_dim(rep) > args.max_dim:
        raise UsageError(f"dimension {weyl_dim(rep)} exceeds --max-dim {args.max_dim}")
    dec = branch(rep, emb)
    cls = classify_tau(dec)
    return {"embedding": emb.name, "highest_weight": format_weight(rep.highest_weight),
            "dim": weyl_dim(rep), "decomposition": _dec_rows(dec),
            "taus": [[str(t), m] for t, m in cls.taus],
            "failures": [[format_weight(lab.highest_weight), m] for lab, m in cls.failures]}, 0


def cmd_infchar(args):
    if args.transfer is not None:
        res = theta_infchar_transfer(Fraction(args.transfer))
        return {"x": str(Fraction(args.transfer)), "infchar": format_weight(res.weight),
                "singular": res.singular, "normalized": res.normalized}, 0
    if args.system is None or args.weight is None:
        raise UsageError("infchar needs SYSTEM WEIGHT or --transfer X")
    rep = parse_highest_weight(_system_for(args), args.weight, args.dynkin)
    return {"system": rep.system, "highest_weight": format_weight(rep.highest_weight),
            "infchar": format_weight(infinitesimal_character(rep))}, 0


def cmd_lift_ktype(args):
    try:
        lift = lift_ktype(args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"ktype": str(TauLabel(args.m, args.n)), "sl2sl2_pair": list(lift.sl2sl2_pair),
           "generator_so2_weight": lift.generator_so2_weight}
    status = 0
    if args.validate is not None:
        res = validate_ktype_lift(lift, args.validate)
        out["validation"] = {"generator_weight": res["generator_weight"],
                             "ranks": [list(r) for r in res["ranks"]], "ok": res["ok"]}
        status = 0 if res["ok"] else 1
    return out, status


def cmd_lift_so2(args):
    try:
        lift = lift_so2type(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"k": args.k, "m": lift.m, "ktype_bound": [str(t) for t in lift.ktype_bound],
            "d5_label": format_weight(lift.d5_label) if lift.d5_label else None,
            "in_theorem_scope": lift.in_theorem_scope}, 0


def _sigma(text):
    try:
        return So2Support.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_theta_support(args):
    sigma = _sigma(args.sigma)
    sup = theta_support(sigma)
    return {"sigma": str(sigma), "empty": sup.empty, "rule": sup.describe()}, 0


def cmd_match(args):
    rep = match_lowest_types(_sigma(args.sigma))
    return rep.as_dict(), 0 if rep.verdict else 1


def cmd_pi_table(args):
    try:
        rows = pi_compact_table(args.n_max, args.max_dim)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"rows": [r.as_dict() for r in rows],
            "all_tau_closed": all(r.tau_closed for r in rows)}, 0 if all(r.tau_closed for r in rows) else 1


def cmd_sl2_rank(args):
    depth = args.depth if args.depth is not None else 2 * (args.N + 1)
    M = tensor_modules(build_lowest_weight_module(args.n, depth),
                       build_highest_weight_module(args.m, depth))
    try:
        r = filtration_rank(M, (0, 0), args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    expected = (args.N + 1) * (args.N + 2) // 2
    return {"n": args.n, "m": args.m, "N": args.N, "depth": depth, "rank": r,
            "free_count": expected, "generator_weight": args.n - args.m}, 0


def cmd_verify(args):
    results = verify(args.profile)
    ok = all(r.passed for r in results)
    return {"profile": args.profile, "backend": kernels.backend(), "passed": ok,
            "checks": [r.as_dict() for r in results]}, 0 if ok else 1


COMMANDS = {
    "dim": cmd_dim, "weights": cmd_weights, "tensor": cmd_tensor, "branch": cmd_branch,
    "infchar": cmd_infchar, "lift-ktype": cmd_lift_ktype, "lift-so2": cmd_lift_so2,
    "theta-support": cmd_theta_support, "match": cmd_match, "pi-table": cmd_pi_table,
    "sl2-rank": cmd_sl2_rank, "verify-paper": cmd_verify,
}
UNCACHED = {"verify-paper"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS)
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS)
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS)

    p = _Parser(prog="thetalie", description="Exact Lie theory for the SL2 x F4 theta correspondence.",
                parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    def hw_args(sp, system=True):
        if system:
            sp.add_argument("system", help="F4 | B4 | D5 | A1")
        sp.add_argument("weight", help='coordinates "a,b,..", E_n, n=N or tau(m,n)')
        sp.add_argument("--dynkin", action="store_true",
                        help="read coordinates as fundamental-weight coefficients")

    hw_args(add("dim", "dimension of an irreducible representation"))
    sp = add("weights", "weight multiplicities")
    hw_args(sp)
    sp.add_argument("--all", action="store_true", help="list every weight, not just dominant ones")
    sp = add("tensor", "tensor product decomposition")
    sp.add_argument("system")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--dynkin", action="store_true")
    sp.add_argument("--check", action="store_true", help="cross-check against character peeling")
    sp = add("branch", "restrict to B4")
    sp.add_argument("embedding", help="B4_in_F4 | B4_in_D5")
    hw_args(sp, system=False)
    sp = add("infchar", "infinitesimal character")
    sp.add_argument("system", nargs="?")
    sp.add_argument("weight", nargs="?")
    sp.add_argument("--dynkin", action="store_true")
    sp.add_argument("--transfer", help="sl2 infinitesimal character x to transfer to F4")
    sp = add("lift-ktype", "lift of the K-type tau(m,n)")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--validate", type=int, metavar="N",
                    help="check the tensor model up to PBW degree N")
    sp = add("lift-so2", "lift of the SO(2)-type k = 2m+4")
    sp.add_argument("k", type=int)
    sp = add("theta-support", "K-type support of Theta(sigma)")
    sp.add_argument("sigma", help="lowest(k) | highest(k) | full | finite{a,b,..}")
    sp = add("match", "lowest-type matching report")
    sp.add_argument("sigma")
    sp = add("pi-table", "compact-case decomposition table")
    sp.add_argument("--n-max", type=int, default=3)
    sp = add("sl2-rank", "filtration rank of delta(n) (x) delta_bar(m)")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("N", type=int)
    sp.add_argument("--depth", type=int)
    sp = add("verify-paper", "run the verification suite")
    sp.add_argument("--profile", choices=PROFILES, default="quick")
    return p


def _args_dict(ns) -> dict:
    skip = {"verb", "format", "cache_dir", "no_cache"}
    return {k: v for k, v in sorted(vars(ns).items()) if k not in skip}


def render_text(verb: str, result) -> str:
    if verb == "verify-paper":
        lines = []
        for c in result["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"[{status}] {c['number']}. {c['name']} ({c['elapsed_s']:.3f}s)")
            lines.extend(f"    {d}" for d in c["details"])
        lines.append(f"{'all checks passed' if result['passed'] else 'FAILED'} "
                     f"(profile {result['profile']}, backend {result['backend']})")
        return "\n".join(lines)
    lines = []
    for k, v in result.items():
        if isinstance(v, list) and v and isinstance(v[0], (list, dict)):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(x) if isinstance(x, dict) else '  '.join(map(str, x))}"
                         for x in v)
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"thetalie: error: {exc}", file=sys.stderr)
        return 2
    fmt = getattr(ns, "format", "text")
    if not hasattr(ns, "max_dim"):
        ns.max_dim = DEFAULT_MAX_DIM
    verb = ns.verb
    args = _args_dict(ns)
    cache = None
    if verb not in UNCACHED and not getattr(ns, "no_cache", False):
        cache = ResultCache.from_config(getattr(ns, "cache_dir", None), __version__)
    t0 = time.perf_counter()
    hit = cache.get(verb, args) if cache else None
    try:
        if hit is not None:
            result, status = hit["result"], hit["status"]
        else:
            result, status = COMMANDS[verb](ns)
            # round-trip so cached and fresh results are the same JSON values
            result = json.loads(canonical(result))
            if cache:
                cache.put(verb, args, {"result": result, "status": status})
    except (UsageError, ValueError) as exc:
        print(f"thetalie: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"thetalie: internal consistency error: {exc}", file=sys.stderr)
        return 1
    elapsed = round((time.perf_counter() - t0) * 1000, 3)
    if fmt == "structured":
        doc = {"verb": verb, "args": args, "result": result, "notes": NOTES[verb],
               "elapsed_ms": elapsed, "engine_version": __version__, "cached": hit is not None}
        print(canonical(doc), file=out)
    else:
        print(render_text(verb, result), file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
