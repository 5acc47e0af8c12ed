"""Command line front end.

Every run prints one JSON envelope to stdout: command echo, config,
payload, verdicts, conjecture flags, and the wall time.  The payload is
deterministic for identical argv + seed (wall time lives outside it),
so runs can be diffed byte for byte.  Exit codes: 0 when every verdict
passes, 2 when a theorem check fails, 1 on usage or guard errors.

Commands with a natural dimension or component table export it as CSV
via --csv PATH.  Specialize mode requires --seed and certifies results
at two sampled evaluation points; exact mode ignores the seed except
where a command is explicitly randomized (convex-certify).
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from fractions import Fraction
from math import comb

from . import acceptance
from .braided import (
    admissible_triples,
    braided_power,
    conjectural_sym_dim,
    decompose_power_subspace,
    dim_sym_cube,
    ext_cube_closed,
    flat_lower_bound,
    flatness_check,
    hilbert_table,
    koszul_series_probe,
    module_square,
    power_dims,
    sample_points,
    square_gl2,
    sym_cube_closed,
    triple_product,
)
from .classical import poisson_closure_dims, valuation_cover_check
from .convexopt import certify_max, random_feasibility_class
from .errors import GuardError, InfeasibleError, TheoremViolation
from .gl3canon import dcb_module, degree_recursion_check, genericity_check
from .qmat import check_qmatrix_relations, howe_dim_check
from .uqmod import outer, simple_gl2, specialize_module, standard_gld


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _ints(text: str, want: int, flag: str) -> tuple:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise _UsageError(f"{flag} expects comma-separated integers")
    if len(parts) != want:
        raise _UsageError(f"{flag} expects exactly {want} integers")
    return parts


def _components(ms) -> list:
    return [[list(w), m] for w, m in sorted(ms.items(), reverse=True)]


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# command handlers: each returns (payload, verdicts, conjecture_flags, table)


def _power_module(args):
    if (args.l is None) == (args.d is None):
        raise _UsageError("pass exactly one of --l (gl_2 simple) or --d")
    if args.d is None and args.k is not None:
        raise _UsageError("--k needs --d")
    if args.l is not None:
        if args.l < 0:
            raise _UsageError("--l must be nonnegative")
        return "simple", f"simple_gl2({args.l},0)"
    if args.k is not None:
        return "matrix", f"matrix({args.d},{args.k})"
    return "standard", f"standard_gld({args.d})"


def _build_module(args, family, q0=None):
    if family == "simple":
        V = simple_gl2(args.l, 0)
    elif family == "matrix":
        V = outer(standard_gld(args.d), standard_gld(args.k))
    else:
        V = standard_gld(args.d)
    return specialize_module(V, q0) if q0 is not None else V


def _power_guard(args, family):
    if args.override_guards:
        return
    if family == "simple":
        if args.n > 4 or args.l > 6:
            raise GuardError(
                "exact powers of gl_2 simples are guarded to n <= 4 and "
                "l <= 6; use --mode specialize or --override-guards"
            )
    else:
        dim = args.d * (args.k if args.k is not None else 1)
        if dim**args.n > 4096:
            raise GuardError(
                f"ambient dimension {dim}**{args.n} exceeds 4096; "
                "pass --override-guards to force"
            )


def _decompose_power(args, family, kind, q0=None):
    V = _build_module(args, family, q0)
    pair = module_square(V)
    side = pair.sym if kind == "sym" else pair.ext
    sub = braided_power(side, V, args.n)
    return sub.dim, decompose_power_subspace(V, args.n, sub)


def _cmd_power(args, kind):
    family, name = _power_module(args)
    n = args.n
    if n < 0:
        raise _UsageError("--n must be nonnegative")
    samples = []
    if args.mode == "specialize":
        if family != "simple":
            raise _UsageError("specialize mode supports --l modules only")
        pts = sample_points(args.seed)
        runs = [_decompose_power(args, family, kind, q0) for q0 in pts]
        if (runs[0][0], dict(runs[0][1])) != (runs[1][0], dict(runs[1][1])):
            raise ArithmeticError(
                "specialization samples disagree; rerun in exact mode"
            )
        dim, dec = runs[0]
        samples = [str(q0) for q0 in pts]
    else:
        _power_guard(args, family)
        dim, dec = _decompose_power(args, family, kind)
    payload = {
        "module": name,
        "kind": kind,
        "n": n,
        "dim": dim,
        "components": _components(dec),
        "mode": args.mode,
        "samples": samples,
    }
    verdicts = {}
    flags = []
    if family == "simple" and n == 3:
        closed = sym_cube_closed(args.l) if kind == "sym" else ext_cube_closed(args.l)
        verdicts["matches_cube_closed_form"] = (
            "pass" if dict(dec) == dict(closed) else "fail"
        )
    if family == "standard" and kind == "sym":
        want = comb(args.d + n - 1, n)
        verdicts["polynomial_growth"] = "pass" if dim == want else "fail"
    if family == "simple" and kind == "sym" and n >= 4:
        predicted = conjectural_sym_dim(args.l, n)
        flags.append(
            {
                "l": args.l,
                "n": n,
                "computed": dim,
                "predicted": predicted,
                "agree": dim == predicted,
            }
        )
    table = (
        ["component", "multiplicity"],
        [[" ".join(str(x) for x in w), m] for w, m in _components(dec)],
    )
    return payload, verdicts, flags, table


def _cmd_sym_power(args):
    return _cmd_power(args, "sym")


def _cmd_ext_power(args):
    return _cmd_power(args, "ext")


def _cmd_triple_product(args):
    beta = _ints(args.beta, 3, "--beta")
    if any(b < 0 for b in beta):
        raise _UsageError("--beta entries must be nonnegative")
    dec = triple_product(beta, args.eps, mode=args.mode, seed=args.seed)
    admissible = admissible_triples(beta, args.eps)
    payload = {
        "beta": list(beta),
        "eps": args.eps,
        "mode": args.mode,
        "dim": dec.total_dim(),
        "components": _components(dec),
        "admissible": _components(admissible),
    }
    verdicts = {"matches_admissibility": "pass"}
    table = (
        ["l1", "l2", "multiplicity"],
        [[w[0], w[1], m] for (w, m) in sorted(dec.items(), reverse=True)],
    )
    return payload, verdicts, [], table


def _cmd_flatness(args):
    l = args.l
    flat, report = flatness_check(simple_gl2(l, 0))
    bound = flat_lower_bound((l, 0))
    payload = dict(report)
    payload["l"] = l
    payload["lower_bound"] = bound
    payload["certified_by_bound"] = bound == comb(l + 3, 3)
    verdicts = {
        "matches_classification": "pass" if flat == (l <= 2) else "fail",
        "lower_bound_valid": (
            "pass" if bound <= report["sym_cube_dim"] else "fail"
        ),
    }
    table = (
        ["quantity", "value"],
        [[k, payload[k]] for k in sorted(payload) if k != "module"],
    )
    return payload, verdicts, [], table


def _cmd_hilbert(args):
    table_obj = hilbert_table(
        args.l,
        args.n,
        "sym",
        mode=args.mode,
        seed=args.seed,
        override_guards=args.override_guards,
    )
    payload = table_obj.as_dict()
    payload["upto"] = args.n
    verdicts = {}
    if args.n >= 3:
        verdicts["cube_matches_closed_form"] = (
            "pass" if table_obj.dims[3] == dim_sym_cube(args.l) else "fail"
        )
    flags = [dict(c, l=args.l) for c in table_obj.conjecture]
    table = (
        ["n", "dim"],
        [[n, d] for n, d in enumerate(table_obj.dims)],
    )
    return payload, verdicts, flags, table


def _cmd_koszul_probe(args):
    coeffs = koszul_series_probe(args.l, args.n)
    negatives = [i for i, c in enumerate(coeffs) if c < 0]
    payload = {
        "l": args.l,
        "terms": args.n,
        "coefficients": coeffs,
        "first_negative": negatives[0] if negatives else None,
    }
    if args.l >= 3:
        verdicts = {"series_goes_negative": "pass" if negatives else "fail"}
    else:
        verdicts = {"series_nonnegative": "fail" if negatives else "pass"}
    table = (["n", "coefficient"], [[n, c] for n, c in enumerate(coeffs)])
    return payload, verdicts, [], table


def _gl3_grid(args):
    if args.lam is not None:
        lam = _ints(args.lam, 3, "--lam")
        return [lam]
    return [(a, b, 0) for a in range(6) for b in range(a + 1)]


def _cmd_gl3(args, check, verdict_name):
    rows = []
    all_ok = True
    for lam in _gl3_grid(args):
        report = check(lam, dcb_module(lam))
        all_ok = all_ok and report["ok"]
        rows.append(report)
    payload = {"weights": len(rows), "rows": rows}
    verdicts = {verdict_name: "pass" if all_ok else "fail"}
    count_key = "minors" if "minors" in rows[0] else "comparisons"
    table = (
        ["lam", "blocks", count_key, "ok"],
        [
            [
                " ".join(str(x) for x in r["lam"]),
                r["blocks"],
                r[count_key],
                r["ok"],
            ]
            for r in rows
        ],
    )
    return payload, verdicts, [], table


def _cmd_gl3_generic(args):
    return _cmd_gl3(args, genericity_check, "minors_generic")


def _cmd_gl3_degrees(args):
    return _cmd_gl3(args, degree_recursion_check, "degrees_match")


def _cmd_convex_certify(args):
    if args.m < 1 or args.n < 1:
        raise _UsageError("--m and --n must be positive")
    if args.trials < 1:
        raise _UsageError("--trials must be positive")
    rng = random.Random(args.seed)
    instances = []
    certified = 0
    for _ in range(args.trials):
        lam = tuple(sorted(rng.randint(0, args.n) for _ in range(args.m)))
        km, kp = random_feasibility_class(lam, args.n, rng)
        report = certify_max(
            lam,
            km,
            kp,
            trials=2,
            seed=rng.randrange(2**30),
            override_guards=args.override_guards,
        )
        certified += 1
        instances.append(
            {
                "lam": list(lam),
                "kminus": list(km),
                "kplus": list(kp),
                "kappa_star": list(report["kappa_star"]),
                "class_size": report["class_size"],
            }
        )
    payload = {
        "m": args.m,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "certified": certified,
        "instances": instances,
    }
    verdicts = {"all_certified": "pass" if certified == args.trials else "fail"}
    table = (
        ["lam", "kminus", "kplus", "kappa_star", "class_size"],
        [
            [
                " ".join(str(x) for x in r["lam"]),
                " ".join(str(x) for x in r["kminus"]),
                " ".join(str(x) for x in r["kplus"]),
                " ".join(str(x) for x in r["kappa_star"]),
                r["class_size"],
            ]
            for r in instances
        ],
    )
    return payload, verdicts, [], table


def _cmd_poisson_closure(args):
    upto = args.n
    sym = poisson_closure_dims(args.l, upto, "sym", args.override_guards)
    ext = poisson_closure_dims(args.l, upto, "ext", args.override_guards)
    formula = [1] + [conjectural_sym_dim(args.l, n) for n in range(1, upto + 1)]
    payload = {
        "l": args.l,
        "upto": upto,
        "sym": sym,
        "ext": ext,
        "formula": formula,
    }
    verdicts = {}
    if upto >= 3:
        verdicts["cube_matches_closed_form"] = (
            "pass" if sym[3] == dim_sym_cube(args.l) else "fail"
        )
    if upto >= 4:
        verdicts["exterior_vanishes_from_degree_4"] = (
            "pass" if all(d == 0 for d in ext[4:]) else "fail"
        )
    flags = [
        {
            "l": args.l,
            "n": n,
            "computed": sym[n],
            "predicted": formula[n],
            "agree": sym[n] == formula[n],
        }
        for n in range(4, upto + 1)
    ]
    table = (
        ["n", "sym", "ext", "formula"],
        [[n, sym[n], ext[n], formula[n]] for n in range(upto + 1)],
    )
    return payload, verdicts, flags, table


def _cmd_ext_four(args):
    l = args.l
    dims = poisson_closure_dims(l, 4, "ext", args.override_guards)
    payload = {"l": l, "classical_dims": dims, "braided_dims": None}
    verdicts = {"classical_vanishes": "pass" if dims[4] == 0 else "fail"}
    if l <= 5 or args.override_guards:
        pair = square_gl2(l)
        bdims = power_dims(pair.ext, pair.module, 4)
        payload["braided_dims"] = bdims
        verdicts["braided_vanishes"] = "pass" if bdims[4] == 0 else "fail"
    table = (
        ["n", "classical_dim"],
        [[n, d] for n, d in enumerate(dims)],
    )
    return payload, verdicts, [], table


def _cmd_valuation_cover(args):
    payload = valuation_cover_check(args.l)
    verdicts = {"cover_complete": "pass" if payload["covered"] else "fail"}
    table = (
        ["quantity", "value"],
        [[k, payload[k]] for k in sorted(payload)],
    )
    return payload, verdicts, [], table


def _cmd_qmatrix_check(args):
    payload = check_qmatrix_relations(args.d, args.k, args.override_guards)
    verdicts = {"relations_hold": "pass" if payload["ok"] else "fail"}
    table = (
        ["quantity", "value"],
        [[k, payload[k]] for k in sorted(payload)],
    )
    return payload, verdicts, [], table


def _cmd_howe_check(args):
    report = howe_dim_check(args.d, args.k, args.n)
    payload = dict(report)
    payload["terms"] = [
        [list(lam), dl, dr] for lam, dl, dr in report["terms"]
    ]
    verdicts = {"dimension_identity": "pass" if report["ok"] else "fail"}
    table = (
        ["lam", "dim_left", "dim_right"],
        [
            [" ".join(str(x) for x in lam), dl, dr]
            for lam, dl, dr in report["terms"]
        ],
    )
    return payload, verdicts, [], table


def _cmd_audit_all(args):
    report = acceptance.run_all(mode=args.mode, seed=args.seed)
    payload = {
        "stages": report["stages"],
        "passed": sum(1 for s in report["stages"] if s["ok"]),
        "total": len(report["stages"]),
    }
    verdicts = {
        s["stage"]: "pass" if s["ok"] else "fail" for s in report["stages"]
    }
    table = (
        ["stage", "ok"],
        [[s["stage"], s["ok"]] for s in report["stages"]],
    )
    return payload, verdicts, report["conjecture_flags"], table


_HANDLERS = {
    "sym-power": _cmd_sym_power,
    "ext-power": _cmd_ext_power,
    "triple-product": _cmd_triple_product,
    "flatness": _cmd_flatness,
    "hilbert": _cmd_hilbert,
    "koszul-probe": _cmd_koszul_probe,
    "gl3-generic": _cmd_gl3_generic,
    "gl3-degrees": _cmd_gl3_degrees,
    "convex-certify": _cmd_convex_certify,
    "poisson-closure": _cmd_poisson_closure,
    "ext-four": _cmd_ext_four,
    "valuation-cover": _cmd_valuation_cover,
    "qmatrix-check": _cmd_qmatrix_check,
    "howe-check": _cmd_howe_check,
    "audit-all": _cmd_audit_all,
}


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="braidpow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *groups):
        p = sub.add_parser(name, help=help_text)
        if "l" in groups:
            p.add_argument("--l", type=int, help="gl_2 highest weight (l, 0)")
        if "dk" in groups:
            p.add_argument("--d", type=int)
            p.add_argument("--k", type=int)
        if "mode" in groups:
            p.add_argument(
                "--mode", choices=("exact", "specialize"), default="exact"
            )
            p.add_argument("--seed", type=int, default=None)
        if "guards" in groups:
            p.add_argument("--override-guards", action="store_true")
        p.add_argument("--csv", metavar="PATH", default=None)
        return p

    for name in ("sym-power", "ext-power"):
        p = add(name, f"{name.split('-')[0]} side braided power", "l", "dk", "mode", "guards")
        p.add_argument("--n", type=int, required=True)

    p = add("triple-product", "three-factor braided product", "mode")
    p.add_argument("--beta", required=True, metavar="a,b,c")
    p.add_argument("--eps", required=True, choices=("+", "-"))

    p = add("flatness", "flat square classification for one weight")
    p.add_argument("--l", type=int, required=True)

    p = add("hilbert", "symmetric power dimension table", "mode", "guards")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("koszul-probe", "inverse exterior Hilbert series")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    for name, help_text in (
        ("gl3-generic", "maximal-minor genericity of paired bases"),
        ("gl3-degrees", "degree recursion on paired bases"),
    ):
        p = add(name, help_text)
        p.add_argument("--lam", metavar="a,b,c", default=None)

    p = add("convex-certify", "extremal maps on random staircases", "guards")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = add("poisson-closure", "classical closure dimension table", "guards")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("ext-four", "fourth exterior power vanishing", "guards")
    p.add_argument("--l", type=int, required=True)

    p = add("valuation-cover", "leading-monomial cover of 4-subsets")
    p.add_argument("--l", type=int, required=True)

    p = add("qmatrix-check", "quantum matrix relations", "guards")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("howe-check", "bigraded dimension identity")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    add("audit-all", "run every verification stage", "mode", "guards")
    return parser


def _write_csv(path: str, table) -> None:
    header, rows = table
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "mode", "exact") == "specialize" and args.seed is None:
            raise _UsageError("specialize mode requires --seed")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    t0 = time.perf_counter()
    flags: list = []
    table = None
    try:
        payload, verdicts, flags, table = _HANDLERS[args.command](args)
        code = 2 if "fail" in verdicts.values() else 0
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (GuardError, InfeasibleError, ValueError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        verdicts = {}
        code = 1
    except (TheoremViolation, ArithmeticError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        verdicts = {"run": "fail"}
        code = 2

    envelope = {
        "command": args.command,
        "argv": argv,
        "config": {
            "mode": getattr(args, "mode", "exact"),
            "seed": getattr(args, "seed", None),
            "override_guards": bool(getattr(args, "override_guards", False)),
            "csv": args.csv,
        },
        "payload": payload,
        "verdicts": verdicts,
        "conjecture_flags": flags,
        "wall_time_s": round(time.perf_counter() - t0, 3),
    }
    print(json.dumps(envelope, indent=2, sort_keys=True, default=_plain))
    if table is not None and args.csv:
        _write_csv(args.csv, table)
    return code


def main() -> None:
    sys.exit(run())
