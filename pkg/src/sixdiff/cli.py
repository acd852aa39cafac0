"""Command-line front end.

Exit codes: 0 success, 1 domain error (or an "invalid" verdict from
``verify``, or an unexpected claim outcome), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import replace

from .arith import as_rat, format_rat
from .claims import check_all, render_report, unexpected
from .curves import Point, WeierstrassCurve
from .errors import DomainError
from .families import FAMILIES, enumerate_family, family_params, generate
from .pipelines import DEFAULT_CONFIGS, PIPELINE_IDS, PipelineConfig, run_pipeline
from .quartic import QuarticInfinity, QuarticPoint
from .search import SearchSpec, brute_search
from .solution import residual, verify


def _rat(text: str):
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _int_or_range(text: str):
    """``5`` or an inclusive range ``lo:hi``."""
    if ":" in text:
        lo, _, hi = text.partition(":")
        return (_int(lo), _int(hi))
    return _int(text)


def _solution_line(s, as_json: bool) -> str:
    if as_json:
        return json.dumps(s.to_json())
    return f"n={s.n} X={s.X} Y={s.Y} W={s.W} Z={s.Z}"


# ---------------------------------------------------------------- subcommands


def cmd_family(args, out) -> int:
    names = family_params(args.id)
    given = {k: getattr(args, k) for k in ("a", "b", "t", "p") if getattr(args, k) is not None}
    missing = [k for k in names if k not in given]
    if missing:
        raise DomainError(f"{args.id} needs --{' --'.join(missing)}")
    extra = [k for k in given if k not in names]
    if extra:
        raise DomainError(f"{args.id} does not take --{' --'.join(extra)}")
    if any(isinstance(v, tuple) for v in given.values()) or args.reduce:
        sols = enumerate_family(args.id, given, reduce=args.reduce)
    else:
        sols = [generate(args.id, **given)]
    # one JSON object per line, with or without --json
    for s in sols:
        print(_solution_line(s, True), file=out)
    return 0


def _pipeline_config(args) -> PipelineConfig:
    cfg = DEFAULT_CONFIGS[args.id]
    params = dict(cfg.params)
    overrides = {k: getattr(args, k) for k in ("u", "a", "b", "c") if getattr(args, k) is not None}
    unknown = set(overrides) - set(params)
    if unknown:
        raise DomainError(f"{args.id} does not take --{' --'.join(sorted(unknown))}")
    params.update(overrides)
    changed = params != cfg.params
    seed, base, conic_seed = cfg.seed, cfg.base, cfg.conic_seed
    if (args.seed_x is None) != (args.seed_v is None):
        raise DomainError("--seed-x and --seed-v go together")
    if args.seed_x is not None:
        seed = QuarticPoint(args.seed_x, args.seed_v)
        base = None
    elif changed:
        raise DomainError("changed parameters need an explicit --seed-x/--seed-v")
    if args.conic_seed_t is not None or args.conic_seed_u is not None:
        if args.conic_seed_t is None or args.conic_seed_u is None:
            raise DomainError("--conic-seed-t and --conic-seed-u go together")
        conic_seed = (args.conic_seed_t, args.conic_seed_u)
    if args.base is not None:
        if args.base in ("infinity", "+infinity"):
            base = QuarticInfinity(1)
        elif args.base == "-infinity":
            base = QuarticInfinity(-1)
        else:
            x, _, v = args.base.partition(",")
            try:
                base = QuarticPoint(as_rat(x), as_rat(v))
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"--base must be 'infinity', '-infinity' or 'x,v', got {args.base!r}") from None
    elif args.seed_x is not None:
        base = None
    return replace(
        cfg,
        params=params,
        seed=seed,
        base=base,
        multiples=args.multiples,
        conic_seed=conic_seed,
    )


def cmd_pipeline(args, out) -> int:
    run = run_pipeline(_pipeline_config(args))
    if args.json:
        print(json.dumps(run.to_json(), indent=2), file=out)
        return 0
    for m, p, s in run.emitted:
        print(f"m={m} point=({format_rat(p.x)}, {format_rat(p.v)})", file=out)
        print(f"    {_solution_line(s, False)}", file=out)
    for m, reason in run.skipped:
        print(f"m={m} skipped: {reason}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    ok = verify(args.n, args.x, args.y, args.w, args.z)
    if args.json:
        r = residual(args.n, args.x, args.y, args.w, args.z)
        print(json.dumps({"n": args.n, "valid": ok, "residual": format_rat(r)}), file=out)
    else:
        print("valid" if ok else "invalid", file=out)
    return 0 if ok else 1


def cmd_claims(args, out) -> int:
    verdicts = check_all()
    out.write(render_report(verdicts, "json" if args.json else "text"))
    if args.json:
        out.write("\n")
    return 1 if unexpected(verdicts) else 0


def cmd_search(args, out) -> int:
    spec = SearchSpec(args.n, args.xy_bound, args.wz_bound, args.include_trivial, args.primitive_only)
    for s in brute_search(spec, workers=args.workers):
        print(_solution_line(s, args.json), file=out)
    return 0


def cmd_curve_info(args, out) -> int:
    E = WeierstrassCurve(args.a2, args.a4, args.a6)
    inv = E.invariants()
    info = {
        "curve": E.to_json(),
        "c4": format_rat(inv.c4),
        "c6": format_rat(inv.c6),
        "discriminant": format_rat(inv.discriminant),
        "j": format_rat(inv.j),
    }
    if (args.x is None) != (args.y is None):
        raise DomainError("--x and --y go together")
    if args.x is not None:
        P = Point(args.x, args.y)
        info["point"] = {"x": format_rat(P.x), "y": format_rat(P.y), "on_curve": E.on_curve(P)}
    if args.json:
        print(json.dumps(info, indent=2), file=out)
        return 0
    print(str(E), file=out)
    for k in ("c4", "c6", "discriminant", "j"):
        print(f"{k}: {info[k]}", file=out)
    if "point" in info:
        p = info["point"]
        print(f"point ({p['x']}, {p['y']}) on curve: {p['on_curve']}", file=out)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--json", action="store_true", help="JSON output")

    parser = argparse.ArgumentParser(
        prog="sixdiff",
        description="Generate and verify integer solutions of X^6 - Y^6 = W^n - Z^n, n = 2, 3, 4.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common], allow_abbrev=False)

    p = add("family", "closed-form families; integer or lo:hi range per parameter")
    p.add_argument("--id", required=True, choices=sorted(FAMILIES), metavar="FAMILY")
    for k in ("a", "b", "t", "p"):
        p.add_argument(f"--{k}", type=_int_or_range)
    p.add_argument("--reduce", action="store_true", help="canonical primitive forms, deduplicated")
    p.set_defaults(func=cmd_family)

    p = add("pipeline", "elliptic-curve pipelines")
    p.add_argument("--id", required=True, choices=PIPELINE_IDS)
    p.add_argument("--multiples", type=_int, default=1)
    for k in ("u", "a", "b", "c"):
        p.add_argument(f"--{k}", type=_int)
    p.add_argument("--seed-x", type=_rat)
    p.add_argument("--seed-v", type=_rat)
    p.add_argument("--base", help="'infinity', '-infinity' or 'x,v'")
    p.add_argument("--conic-seed-t", type=_rat)
    p.add_argument("--conic-seed-u", type=_rat)
    p.set_defaults(func=cmd_pipeline)

    p = add("verify", "check X^6 - Y^6 = W^n - Z^n exactly")
    p.add_argument("--n", required=True, type=_int, choices=(2, 3, 4))
    for k in ("x", "y", "w", "z"):
        p.add_argument(f"--{k}", required=True, type=_rat)
    p.set_defaults(func=cmd_verify)

    p = add("claims", "check every registered printed value")
    p.set_defaults(func=cmd_claims)

    p = add("search", "bounded exhaustive search")
    p.add_argument("--n", required=True, type=_int, choices=(2, 3, 4))
    p.add_argument("--xy-bound", required=True, type=_int)
    p.add_argument("--wz-bound", required=True, type=_int)
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--workers", type=_int, help="worker processes (default: DIO_THREADS or 1)")
    p.set_defaults(func=cmd_search)

    p = add("curve-info", "invariants of y^2 = x^3 + a2 x^2 + a4 x + a6")
    for k in ("a2", "a4", "a6"):
        p.add_argument(f"--{k}", required=True, type=_rat)
    p.add_argument("--x", type=_rat, help="optional point to test")
    p.add_argument("--y", type=_rat)
    p.set_defaults(func=cmd_curve_info)
    return parser


_NEGATIVE = re.compile(r"-\d[\d./:-]*")


def _attach_negatives(argv: list[str]) -> list[str]:
    """Turn ``--x -14/15`` into ``--x=-14/15``; argparse would read the value as a flag."""
    out: list[str] = []
    for tok in argv:
        if _NEGATIVE.fullmatch(tok) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1


run = main


if __name__ == "__main__":
    sys.exit(main())
