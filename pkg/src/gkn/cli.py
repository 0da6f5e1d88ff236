"""Command-line front end.

Exit status: 0 when a result or verdict was produced, 1 on bad input, 2 when
an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import criteria as cr
from . import lattice as lt
from . import oracle as orc

SCHEMA_VERSION = 1


class InvariantViolation(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# argument types

def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def default_seed() -> int:
    env = os.environ.get("GKN_SEED")
    return int(env) if env else orc.DEFAULT_SEED


def load_surface(spec: str) -> lt.SurfaceModel:
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        return lt.parse_surface(json.loads(path.read_text()))
    return lt.parse_surface(spec)


# ---------------------------------------------------------------------------
# handlers: each returns (payload dict, human-readable text)

def _surface_and_divisor(args):
    S = load_surface(args.surface)
    return S, lt.parse_divisor(S, args.divisor)


def cmd_invariants(args):
    S, D = _surface_and_divisor(args)
    out = {"surface": lt.surface_to_dict(S), "divisor": list(D.coords),
           "D2": lt.intersect(S, D, D), "DH": lt.intersect(S, D, S.hyperplane),
           "DK": lt.intersect(S, D, S.canonical), "p_a": lt.arithmetic_genus(S, D)}
    text = (f"{S.name}, D={list(D.coords)}: D^2 = {out['D2']}, D.H = {out['DH']}, "
            f"D.K = {out['DK']}, p_a = {out['p_a']}")
    return out, text


def _trace_lines(trace):
    return [f"  {e.tag}: {e.lhs} {e.relation} {e.rhs}  {'pass' if e.passed else 'FAIL'}"
            for e in trace]


def _bound_text(b: cr.BoundReport) -> str:
    exact = str(b.bound)
    approx = "" if b.bound.is_rational else f" (approx {float(b.bound):.6f})"
    top = "none" if b.max_admissible_delta is None else b.max_admissible_delta
    return f"f = {b.surd_text} = {exact}{approx}; max delta = {top}"


def cmd_gkn_check(args):
    S, D = _surface_and_divisor(args)
    v = cr.gkn_sufficient(S, D, args.k, args.delta)
    lines = [f"verdict: {v.outcome.value}"]
    if v.failed:
        lines.append("failed: " + ", ".join(v.failed))
    if v.reason:
        lines.append(f"reason: {v.reason}")
    lines += _trace_lines(v.trace)
    if v.bound:
        lines.append(_bound_text(v.bound))
    if v.outcome is not cr.Outcome.SUFFICIENT:
        lines.append("(no conclusion: the criterion is only sufficient)")
    return v.to_dict(), "\n".join(lines)


def cmd_gkn_bound(args):
    S, D = _surface_and_divisor(args)
    b = cr.delta_bound(S, D, args.k)
    return b.to_dict(), _bound_text(b)


def cmd_gkn_ci(args):
    c = cr.ci_bound(args.n, args.k, args.deg)
    text = (f"delta < n(n-2k)deg/4 = {c.bound}; max delta = {c.max_delta}; "
            f"preconditions {'hold' if c.admissible else 'FAIL'}")
    return c.to_dict(), text


def cmd_gkn_quadratic(args):
    S, D = _surface_and_divisor(args)
    q = cr.instability_quadratic(S, D, args.k)
    a, b, c = q.coefficients
    text = (f"F(x) = {a}x^2 + ({b})x + {c}; negative on ({q.alpha}, {q.beta}); "
            f"integer witness: {q.integer_witness}")
    return q.to_dict(), text


def cmd_gkn_bogomolov(args):
    S, D = _surface_and_divisor(args)
    val = cr.bogomolov_discriminant(S, D, args.k, args.delta0)
    return ({"discriminant": val, "unstable": val > 0},
            f"(D-kH)^2 - 4 delta0 = {val}" + (" > 0: unstable" if val > 0 else ""))


def cmd_gkn_regularity(args):
    S, D = _surface_and_divisor(args)
    r = cr.zero_regularity_equiv(S, D, args.k)
    text = "applies" if r.applies else "does not apply: " + "; ".join(r.failures)
    return r.to_dict(), text


def cmd_bn_rho(args):
    rho = cr.brill_noether_rho(args.g, args.r, args.d)
    return {"g": args.g, "r": args.r, "d": args.d, "rho": rho}, str(rho)


def cmd_bn_obstruct(args):
    S, D = _surface_and_divisor(args)
    v = cr.obstruction_2normal(S, D, args.delta)
    text = f"{v.outcome.value}: " + "; ".join(v.reasons)
    if v.rho is not None:
        text += f" (g={v.g}, r={v.r}, d={v.d}, rho={v.rho})"
    return v.to_dict(), text


def cmd_severi_regular(args):
    S, D = _surface_and_divisor(args)
    v = cr.severi_regularity_sufficient(S, D, args.delta)
    if v.regular_point_guaranteed:
        text = f"regular point guaranteed (K = {v.k}H)"
    else:
        text = f"no guarantee: {v.reason}"
    return v.to_dict(), text


def cmd_severi_plane_bound(args):
    b = cr.plane_severi_bound(args.n, args.k)
    return b.to_dict(), str(b.bound)


def cmd_severi_verify(args):
    seed = default_seed() if args.seed is None else args.seed
    v = orc.verify_plane_severi(args.n, args.k, args.trials, seed, args.coord_bound)
    d = v.to_dict()
    text = (f"delta = {v.delta} simple points on degree {v.degree}: {d['summary']} "
            f"[{orc.GENERATOR}, seed {seed}]; with {v.delta + 1} points max rank = "
            f"{d['overflow_max_rank']}")
    return d, text


def cmd_castelnuovo(args):
    pi = cr.castelnuovo_max_genus(args.degree, args.ambient)
    return {"d": args.degree, "r": args.ambient, "max_genus": pi}, str(pi)


def cmd_oracle_rank(args):
    if args.file:
        scheme = orc.parse_scheme(Path(args.file).read_text())
        extra = {}
    else:
        if args.degree is None or args.random is None:
            raise ValueError("give --file, or --degree with --random")
        seed = default_seed() if args.seed is None else args.seed
        scheme = orc.random_configuration(args.random, args.mult, args.coord_bound, seed,
                                          args.degree)
        extra = {"seed": seed, "generator": orc.GENERATOR}
    r = orc.independent_conditions(scheme)
    out = {**r.to_dict(), **extra}
    text = (f"{r.rows}x{r.cols} matrix, rank {r.rank}, {r.expected_conditions} conditions, "
            f"h0 = {r.h0}: {'independent' if r.independent else 'NOT independent'}; "
            f"residual dimension {r.residual_dimension}")
    return out, text


# ---------------------------------------------------------------------------
# worked examples

def paper_examples() -> list[dict]:
    """Recompute the canonical worked examples and compare with stored values."""
    checks = []

    def check(name, got, want):
        checks.append({"name": name, "got": str(got), "expected": str(want),
                       "ok": got == want})

    sextic = lt.complete_intersection(3, [6])
    D = 8 * sextic.hyperplane
    b = cr.delta_bound(sextic, D, 2)
    check("sextic 8H k=2: t", b.t, 192)
    check("sextic 8H k=2: s", b.s, 36864)
    check("sextic 8H k=2: f", b.bound, 48)
    check("sextic 8H k=2: max delta", b.max_admissible_delta, 47)
    check("sextic 8H k=2, delta=47", cr.gkn_sufficient(sextic, D, 2, 47).outcome.value,
          "SufficientGkn")
    check("sextic 8H k=2, delta=48", cr.gkn_sufficient(sextic, D, 2, 48).outcome.value,
          "BoundFailed")
    check("ci_bound(8,2,6)", cr.ci_bound(8, 2, 6).bound, 48)

    p2, quad = lt.projective_plane(), lt.smooth_quadric()
    pa = lt.arithmetic_genus(p2, 8 * p2.hyperplane)
    g = lt.arithmetic_genus(quad, quad.divisor([4, 4]))
    check("p_a(8H on P2)", pa, 21)
    check("p_a((4,4) on quadric)", g, 9)
    check("nodes of the projection", pa - g, 12)
    check("castelnuovo(8,3)", cr.castelnuovo_max_genus(8, 3), 9)

    C = quad.divisor([3, 3])
    gg = lt.geometric_genus(quad, C, 1)
    check("g((3,3), delta=1)", gg, 3)
    check("rho(3,3,6)", cr.brill_noether_rho(gg, 3, lt.intersect(quad, C, quad.hyperplane)), 3)
    ob = cr.obstruction_2normal(quad, C, 1)
    check("obstruction on quadric (3,3)", (ob.outcome.value, "D−3H not big and nef" in ob.reasons),
          ("Inapplicable", True))
    return checks


def cmd_paper_examples(args):
    checks = paper_examples()
    lines = [f"{'ok ' if c['ok'] else 'BAD'} {c['name']}: {c['got']}"
             + ("" if c["ok"] else f" (expected {c['expected']})") for c in checks]
    if not all(c["ok"] for c in checks):
        raise InvariantViolation("worked example mismatch:\n" + "\n".join(lines))
    return {"checks": checks, "all_ok": True}, "\n".join(lines)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's copy from resetting a flag given earlier
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--dump-surface", metavar="PATH", default=argparse.SUPPRESS,
                        help="write the parsed surface spec as JSON to PATH")

    def surf(p, delta=False, k=False):
        p.add_argument("--surface", required=True,
                       help="p2, quadric, ci:r=3,deg=6, a JSON object or a JSON file")
        p.add_argument("--divisor", required=True, help='"8H", "3,3" or {"coords": [...]}')
        if k:
            p.add_argument("--k", type=_pos_int, required=True)
        if delta:
            p.add_argument("--delta", type=_nonneg_int, required=True)

    parser = argparse.ArgumentParser(prog="gkn", parents=[common],
                                     description="Geometric k-normality criteria and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common])
    surf(p)
    p.set_defaults(func=cmd_invariants)

    gkn = sub.add_parser("gkn", parents=[common]).add_subparsers(dest="sub", required=True)
    p = gkn.add_parser("check", parents=[common])
    surf(p, delta=True, k=True)
    p.set_defaults(func=cmd_gkn_check)
    p = gkn.add_parser("bound", parents=[common])
    surf(p, k=True)
    p.set_defaults(func=cmd_gkn_bound)
    p = gkn.add_parser("quadratic", parents=[common])
    surf(p, k=True)
    p.set_defaults(func=cmd_gkn_quadratic)
    p = gkn.add_parser("bogomolov", parents=[common])
    surf(p, k=True)
    p.add_argument("--delta0", type=int, required=True)
    p.set_defaults(func=cmd_gkn_bogomolov)
    p = gkn.add_parser("regularity", parents=[common])
    surf(p, k=True)
    p.set_defaults(func=cmd_gkn_regularity)
    p = gkn.add_parser("ci", parents=[common])
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.add_argument("--deg", type=_pos_int, required=True)
    p.set_defaults(func=cmd_gkn_ci)

    bn = sub.add_parser("bn", parents=[common]).add_subparsers(dest="sub", required=True)
    p = bn.add_parser("rho", parents=[common])
    p.add_argument("--g", type=_nonneg_int, required=True)
    p.add_argument("--r", type=_pos_int, required=True)
    p.add_argument("--d", type=_pos_int, required=True)
    p.set_defaults(func=cmd_bn_rho)
    p = bn.add_parser("obstruct", parents=[common])
    surf(p, delta=True)
    p.set_defaults(func=cmd_bn_obstruct)

    sev = sub.add_parser("severi", parents=[common]).add_subparsers(dest="sub", required=True)
    p = sev.add_parser("regular", parents=[common])
    surf(p, delta=True)
    p.set_defaults(func=cmd_severi_regular)
    p = sev.add_parser("plane-bound", parents=[common])
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.set_defaults(func=cmd_severi_plane_bound)
    p = sev.add_parser("verify", parents=[common])
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.add_argument("--trials", type=_pos_int, default=20)
    p.add_argument("--seed", type=_nonneg_int, default=None)
    p.add_argument("--coord-bound", type=_pos_int, default=orc.DEFAULT_COORD_BOUND)
    p.set_defaults(func=cmd_severi_verify)

    p = sub.add_parser("castelnuovo", parents=[common])
    p.add_argument("--degree", type=_pos_int, required=True)
    p.add_argument("--ambient", type=_pos_int, required=True)
    p.set_defaults(func=cmd_castelnuovo)

    ora = sub.add_parser("oracle", parents=[common]).add_subparsers(dest="sub", required=True)
    p = ora.add_parser("rank", parents=[common])
    p.add_argument("--file")
    p.add_argument("--degree", type=_nonneg_int)
    p.add_argument("--random", type=_pos_int, metavar="COUNT")
    p.add_argument("--mult", type=_pos_int, default=1)
    p.add_argument("--seed", type=_nonneg_int, default=None)
    p.add_argument("--coord-bound", type=_pos_int, default=orc.DEFAULT_COORD_BOUND)
    p.set_defaults(func=cmd_oracle_rank)

    p = sub.add_parser("paper-examples", parents=[common])
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    as_json = getattr(args, "json", False)
    dump = getattr(args, "dump_surface", None)
    command = " ".join(x for x in (args.command, getattr(args, "sub", None)) if x)
    status = 0
    try:
        if dump:
            if not getattr(args, "surface", None):
                raise ValueError("--dump-surface needs --surface")
            S = load_surface(args.surface)
            Path(dump).write_text(json.dumps(lt.surface_to_dict(S)) + "\n")
        payload, text = args.func(args)
    except InvariantViolation as exc:
        status, payload, text = 2, {"error": str(exc)}, f"internal error: {exc}"
    except AssertionError as exc:
        status, payload, text = 2, {"error": str(exc)}, f"internal error: {exc}"
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        status, payload, text = 1, {"error": str(exc)}, f"error: {exc}"

    if as_json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": command,
                          "status": status, "result": payload}, sort_keys=True))
    else:
        print(text, file=sys.stderr if status else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
