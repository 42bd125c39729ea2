"""Command line surface.

Subcommands drive every verifier; exit codes are scriptable:
0 all checks passed, 1 a mathematical check failed (witness in the output),
2 usage or parse error.  ``--format json`` wraps every result in the
envelope {tool_version, command, config, result}; identical inputs produce
byte-identical output.
"""

import argparse
import json
import sys

from . import __version__
from .algebra import verify_algebra_axioms
from .bialgebra import (
    CobracketTable,
    bialgebra_axiom_check,
    cobracket_decompose,
    cybe_defect,
    drinfeld_identity_check,
    drinfeld_sides,
    mybe_check,
    sigma_cobracket,
    triangular_pair,
)
from .derivations import DerivationTable, derivation_check, h1_probe, solve_inner
from .errors import HvlabError, UsageError
from .parser import format_value, parse_element, parse_tensor
from .rationals import parse_rational
from .reports import CheckReport
from .runconfig import make_runconfig


def _build_parser():
    top = argparse.ArgumentParser(
        prog="hvlab",
        description="Exact checks for the generalized Heisenberg-Virasoro algebra "
        "and its Lie bialgebra structures.",
    )
    top.add_argument("--config", metavar="FILE", help="flat key=value config file")
    top.add_argument("--variant", choices=["full", "centerless"])
    top.add_argument("--seed", type=int)
    top.add_argument("--format", choices=["text", "json"], dest="fmt")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-axioms", help="exhaustive skew-symmetry and Jacobi scan")
    p.add_argument("--radius", type=int, required=True)

    p = sub.add_parser("bracket", help="bracket of two elements")
    p.add_argument("e1")
    p.add_argument("e2")

    p = sub.add_parser("cybe", help="classical Yang-Baxter defect of r")
    p.add_argument("--r", required=True)

    p = sub.add_parser("mybe", help="modified Yang-Baxter probe of r")
    p.add_argument("--r", required=True)
    p.add_argument("--probes", type=int, required=True)

    p = sub.add_parser("bialgebra", help="cobracket axiom suite for a table")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--r", help="coboundary table of an antisymmetric tensor")
    src.add_argument("--sigma", metavar="LAM,C[,ETA]", help="central outer family table")
    src.add_argument("--table", metavar="FILE", help="explicit table (JSON)")
    p.add_argument("--radius", type=int, required=True)

    p = sub.add_parser("drinfeld", help="coboundary co-Jacobi identity at x")
    p.add_argument("--r", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("triangular", help="certify r = wedge(a,b) from [a,b] = b")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("decompose", help="split a cobracket table into x.r + outer family")
    p.add_argument("--table", metavar="FILE", required=True)
    p.add_argument("--support", type=int, required=True)
    p.add_argument("--probes", type=int)

    p = sub.add_parser("derivation-check", help="derivation identity over a window")
    p.add_argument("--table", metavar="FILE", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = sub.add_parser("solve-inner", help="exact inner-preimage solve for a table")
    p.add_argument("--table", metavar="FILE", required=True)
    p.add_argument("--support", type=int, required=True)
    p.add_argument("--probes", type=int)

    p = sub.add_parser("h1", help="window statistics for homogeneous derivations")
    p.add_argument("--degree", required=True)
    p.add_argument("--radius", type=int, required=True)
    return top


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _render(report_dict, args, rc):
    if rc.fmt == "json":
        envelope = {
            "tool_version": __version__,
            "command": args.command,
            "config": rc.to_dict(),
            "result": report_dict,
        }
        return json.dumps(envelope, indent=2, ensure_ascii=False)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}." if prefix else f"{k}.", v) if isinstance(
                    v, (dict, list)
                ) else lines.append(f"{prefix}{k} = {v}")
        elif isinstance(value, list):
            for i, v in enumerate(value):
                if isinstance(v, (dict, list)):
                    walk(f"{prefix}{i}.", v)
                else:
                    lines.append(f"{prefix}{i} = {v}")

    walk("", report_dict)
    return "\n".join(lines)


def _exit_code(report_dict):
    status = report_dict.get("status", "pass")
    return 0 if status in ("pass", "feasible", "ok") else 1


def _run(args):
    rc = make_runconfig(
        args.config,
        variant=args.variant,
        seed=args.seed,
        format=args.fmt,
    )
    cfg = rc.algebra_config()
    cmd = args.command

    if cmd == "verify-axioms":
        report = verify_algebra_axioms(cfg, args.radius).to_dict()
    elif cmd == "bracket":
        a = parse_element(args.e1, cfg)
        b = parse_element(args.e2, cfg)
        report = {
            "check": "bracket",
            "variant": cfg.variant,
            "window": None,
            "status": "ok",
            "result": format_value(a.bracket(b)),
        }
    elif cmd == "cybe":
        r = parse_tensor(args.r, cfg, 2)
        defect = cybe_defect(r)
        report = CheckReport(
            check="cybe",
            variant=cfg.variant,
            window=None,
            status="pass" if not defect else "fail",
            lhs=format_value(defect),
            rhs="0",
        ).to_dict()
    elif cmd == "mybe":
        r = parse_tensor(args.r, cfg, 2)
        report = mybe_check(r, args.probes).to_dict()
    elif cmd == "bialgebra":
        table = _bialgebra_table(args, cfg)
        report = bialgebra_axiom_check(table, args.radius).to_dict()
    elif cmd == "drinfeld":
        r = parse_tensor(args.r, cfg, 2)
        x = parse_element(args.x, cfg)
        lhs, rhs = drinfeld_sides(r, x)
        ok = drinfeld_identity_check(r, x)
        report = CheckReport(
            check="drinfeld",
            variant=cfg.variant,
            window=None,
            status="pass" if ok else "fail",
            lhs=format_value(lhs),
            rhs=format_value(rhs),
        ).to_dict()
    elif cmd == "triangular":
        a = parse_element(args.a, cfg)
        b = parse_element(args.b, cfg)
        r = triangular_pair(a, b)
        report = {
            "check": "triangular",
            "variant": cfg.variant,
            "window": None,
            "status": "pass",
            "r": format_value(r),
            "defect": "0",
        }
    elif cmd == "decompose":
        table = CobracketTable.from_json(_load_json(args.table))
        result = cobracket_decompose(table, args.support, args.probes)
        report = result.report().to_dict()
    elif cmd == "derivation-check":
        table = DerivationTable.from_json(_load_json(args.table), cfg)
        report = derivation_check(table, args.radius).to_dict()
    elif cmd == "solve-inner":
        table = DerivationTable.from_json(_load_json(args.table), cfg)
        result = solve_inner(table, args.support, args.probes)
        report = result.report().to_dict()
    elif cmd == "h1":
        degree = parse_rational(args.degree)
        report = h1_probe(cfg, args.radius, degree).to_dict()
        report["status"] = "pass"
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown command {cmd!r}")

    print(_render(report, args, rc))
    return _exit_code(report)


def _bialgebra_table(args, cfg):
    if args.r is not None:
        return CobracketTable.from_r(parse_tensor(args.r, cfg, 2))
    if args.sigma is not None:
        parts = args.sigma.split(",")
        if len(parts) not in (2, 3):
            raise UsageError("--sigma expects LAM,C or LAM,C,ETA")
        lam = parse_rational(parts[0])
        C = parse_element(parts[1], cfg)
        eta = parse_rational(parts[2]) if len(parts) == 3 else None
        return sigma_cobracket(lam, C, eta)
    return CobracketTable.from_json(_load_json(args.table))


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HvlabError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
