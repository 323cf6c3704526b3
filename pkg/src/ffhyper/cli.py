"""Command-line front end.

    ffhyper field-info --q 9
    ffhyper eval f1double q=3 A=1 B=1 Bp=1 C=0 x=1 y=2
    ffhyper verify thm2.1 --q 3,4,5 --format json --out reports.jsonl
    ffhyper verify all --q 3 --mode sample --count 200 --seed 7
    ffhyper cache build --q 2-16 --cache-dir ~/.cache/ffhyper

Characters are integers modulo q-1: character j sends g**k to
exp(2*pi*i*j*k/(q-1)), where g is the generator printed by ``field-info``.
Field elements are integers in [0, q); for q = p**n they are base-p digit
encodings of polynomials in x modulo the printed modulus.

Exit codes: 0 when every checked identity holds, 1 when a counterexample
was found, 2 on usage errors (bad q, unknown identity, empty domain, ...).
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import appell, characters, hypergeometric
from .cyclo import CycVal
from .errors import EmptyDomain, FFHyperError, UnknownIdentity
from .field import CACHE_ENV, build_field, clear_cache, prime_power, save_field_cache
from .verify import REGISTRY, get_identity, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# evaluator kind -> (character parameters, point parameters, function)
EVAL_KINDS = {
    "f21": (("A", "B", "C"), ("x",), hypergeometric.f21_point),
    "f1double": (("A", "B", "Bp", "C"), ("x", "y"), appell.f1_double),
    "f1single": (("A", "B", "Bp", "C"), ("x", "y"), appell.f1_single),
    "jacobi": (("A", "B"), (), characters.jacobi),
    "binom": (("A", "B"), (), characters.binom),
}


class UsageError(Exception):
    pass


def parse_q_list(text: str) -> list[int]:
    """``"3,4,5"`` or ``"2-16"`` (ranges keep only prime powers)."""
    qs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                lo, hi = (int(s) for s in part.split("-", 1))
                qs.extend(q for q in range(lo, hi + 1) if _is_prime_power(q))
            else:
                qs.append(int(part))
        except ValueError:
            raise UsageError(f"bad --q value {part!r}") from None
    if not qs:
        raise UsageError("--q names no field")
    return qs


def _is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except FFHyperError:
        return False
    return True


def format_value(v: CycVal) -> str:
    """Reduced exact value, e.g. ``(1 - 2*z^2)/4`` with z = exp(2 pi i/n)."""
    num, den = v.reduced()
    parts = []
    for k, c in enumerate(num):
        if not c:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    if den == 1:
        return text
    return f"({text})/{den}" if len(parts) > 1 else f"{text}/{den}"


# -- subcommands -----------------------------------------------------------------

def cmd_field_info(args, out) -> int:
    for q in parse_q_list(args.q):
        info = build_field(q).describe()
        if args.format == "json":
            out.write(json.dumps(info) + "\n")
            continue
        mod = info["modulus_str"] or "(prime field)"
        out.write(f"F_{q}: p={info['p']} n={info['n']}\n")
        out.write(f"  modulus   {mod}\n")
        out.write(f"  generator {info['generator']}\n")
        out.write(f"  exp[:16]  {info['exp_table_head']}\n")
        out.write(f"  log[:16]  {info['log_table_head']}  (log 0 = -1)\n")
    return EXIT_OK


def parse_assignments(items: list[str]) -> dict[str, int]:
    vals = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"expected NAME=VALUE, got {item!r}")
        try:
            vals[key] = int(val)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {val!r}") from None
    return vals


def cmd_eval(args, out) -> int:
    chars, points, fn = EVAL_KINDS[args.kind]
    vals = parse_assignments(args.params)
    q = vals.pop("q", None) if args.q is None else int(args.q)
    vals.pop("q", None)
    if q is None:
        raise UsageError("eval needs q (as --q Q or q=Q)")
    F = build_field(q)
    wanted = set(chars) | set(points)
    missing = [k for k in chars + points if k not in vals]
    extra = sorted(set(vals) - wanted)
    if missing or extra:
        raise UsageError(f"{args.kind} takes {', '.join(chars + points)}"
                         + (f"; missing {', '.join(missing)}" if missing else "")
                         + (f"; unexpected {', '.join(extra)}" if extra else ""))
    for k in points:
        if not 0 <= vals[k] < q:
            raise UsageError(f"point {k}={vals[k]} is not in [0, {q})")
    call = [vals[k] % (q - 1) for k in chars] + [vals[k] for k in points]
    v = fn(F, *call)
    z = v.to_complex()
    out.write(f"{args.kind} q={q} " + " ".join(f"{k}={vals[k]}" for k in chars + points) + "\n")
    out.write(f"  exact   {format_value(v)}   (z = exp(2*pi*i/{q - 1}))\n")
    out.write(f"  coeffs  {[int(c) for c in v.coeffs]} / {v.den}\n")
    out.write(f"  approx  {z.real:.12g} {'+' if z.imag >= 0 else '-'} {abs(z.imag):.12g}i\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    qs = parse_q_list(args.q)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.mode == "sample" and (args.count is None or args.count < 1):
        raise UsageError("--mode sample needs --count >= 1")
    run_all = args.ids == ["all"]
    ids = list(REGISTRY) if run_all else args.ids
    specs = [get_identity(i) for i in ids]
    for q in qs:
        build_field(q)

    reports = []
    skipped = []
    for spec in specs:
        for q in qs:
            if spec.cardinality(q) == 0 and run_all:
                skipped.append(f"{spec.id} q={q} skipped: empty domain")
                continue
            reports.append(sweep(spec, q, mode=args.mode, count=args.count,
                                 seed=args.seed, jobs=args.jobs))

    target = open(args.out, "w", newline="") if args.out else out
    # the summary goes to stderr when the report itself is on stdout
    log = out if (args.out or args.format == "human") else sys.stderr
    try:
        if args.format == "json":
            for r in reports:
                target.write(r.dumps() + "\n")
        elif args.format == "csv":
            w = csv.writer(target, lineterminator="\n")
            w.writerow(["identity", "q", "param_json", "lhs", "rhs"])
            for r in reports:
                for f in r.failures:
                    w.writerow([r.identity, r.q, json.dumps(f.params, sort_keys=True),
                                json.dumps(f.lhs.to_json()), json.dumps(f.rhs.to_json())])
        elif args.out:
            for r in reports:
                target.write(r.summary() + "\n")
    finally:
        if args.out:
            target.close()
    for r in reports:
        log.write(r.summary() + "\n")
    for line in skipped:
        log.write(line + "\n")
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK


def cmd_cache(args, out) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir:
        raise UsageError(f"cache needs --cache-dir or ${CACHE_ENV}")
    if args.action == "clear":
        qs = parse_q_list(args.q) if args.q else None
        for path in clear_cache(cache_dir, qs):
            out.write(f"removed {path}\n")
        return EXIT_OK
    if not args.q:
        raise UsageError("cache build needs --q")
    qs = parse_q_list(args.q)
    for q in qs:
        F = build_field(q)
        try:
            path = save_field_cache(F, cache_dir)
        except OSError as exc:
            raise UsageError(f"cannot write cache: {exc}") from None
        out.write(f"wrote {path}\n")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ffhyper",
        description="Exact finite-field hypergeometric and Appell F1 evaluation.",
        epilog="Character j sends g^k to exp(2 pi i j k/(q-1)) for the generator g "
               "shown by field-info.",
    )
    ap.add_argument("--cache-dir", help=f"field table cache (default ${CACHE_ENV})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="modulus, generator and table heads of F_q")
    p.add_argument("--q", required=True, help="field order(s), e.g. 9 or 2-16")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("kind", choices=sorted(EVAL_KINDS))
    p.add_argument("params", nargs="*", help="NAME=VALUE pairs, e.g. q=5 A=1 B=0")
    p.add_argument("--q", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check identities exhaustively or on a sample")
    p.add_argument("ids", nargs="+", help="identity ids, or 'all'")
    p.add_argument("--q", required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="build or clear cached field tables")
    p.add_argument("action", choices=("build", "clear"))
    p.add_argument("--q")
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # NAME=VALUE pairs may follow --q in eval
        if extra and args.command == "eval" and all("=" in e and not e.startswith("-") for e in extra):
            args.params += extra
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.cache_dir:
        # worker processes pick the directory up from the environment
        os.environ[CACHE_ENV] = args.cache_dir
    try:
        return args.func(args, out)
    except (UsageError, FFHyperError) as exc:
        msg = str(exc)
        if isinstance(exc, EmptyDomain):
            msg = f"empty domain: {msg}"
        elif isinstance(exc, UnknownIdentity):
            msg = f"unknown identity {exc.args[0]!r}; known: {', '.join(REGISTRY)}"
        print(f"ffhyper: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ffhyper: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
