"""
Command-line front end.

    iwahori-lattice whittaker --r 3 --lam 2,1,2 --w1 s2 --w2 s2
    iwahori-lattice partition --r 3 --lam 5,2,0 --w1 1,2,3 --w2 1,2,3
    iwahori-lattice macdonald hall-littlewood --lam 2,1,0
    iwahori-lattice verify ybe --mode monochrome --r 5
    iwahori-lattice verify theorem coloredwhittaker --r 3 --max-parts 5

Exit status is 0 on success, 1 on invalid input and 2 when a verification
finds a counterexample.  Output is deterministic; --timing adds elapsed_ms to
the JSON metadata.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .exactpoly import LaurentPoly
from .lattice import (
    build_system, count_states, partition_function, verify_fused_ybe, verify_monochrome_ybe,
)
from .macdonald import e_inf, hall_littlewood, levi_character, prescribed_symmetry_sum, schur, theta
from .weylgroup import identity, parse_int_list, parse_permutation
from .verify import THEOREMS, run_theorem
from .whittaker import (
    iwahori_value, li_value, parahoric_cs_value, parahoric_value, spherical_value,
)

EXIT_OK, EXIT_INVALID, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out", metavar="FILE", help="also write the JSON result to FILE")
    p.add_argument("--timing", action="store_true", help="record elapsed_ms in JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iwahori-lattice", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("whittaker", help="Whittaker values by operator recursion")
    p.add_argument("--kind", choices=("iwahori", "parahoric", "cs", "spherical", "li"), default=None)
    p.add_argument("--r", type=int)
    p.add_argument("--lam", required=True)
    p.add_argument("--w1", default=None)
    p.add_argument("--w2", default=None)
    p.add_argument("--J", default=None)
    _common(p)

    p = sub.add_parser("partition", help="lattice-model partition functions")
    p.add_argument("--r", type=int)
    p.add_argument("--lam", required=True)
    p.add_argument("--w1", default=None)
    p.add_argument("--w2", default=None)
    p.add_argument("--J", default=None)
    p.add_argument("--flag", default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--mode", choices=("fused", "monochrome"), default="fused")
    _common(p)

    p = sub.add_parser("macdonald", help="Schur, Levi, Hall-Littlewood and related polynomials")
    p.add_argument("kind", choices=("schur", "levi", "theta", "hall-littlewood", "e-inf", "prescribed"))
    p.add_argument("--r", type=int)
    p.add_argument("--lam", required=True)
    p.add_argument("--J", default=None)
    p.add_argument("--t-inverse", action="store_true", help="use t = 1/v for hall-littlewood")
    _common(p)

    p = sub.add_parser("verify", help="symbolic verifications")
    vsub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    y = vsub.add_parser("ybe", help="Yang-Baxter equation over all boundaries")
    y.add_argument("--mode", choices=("fused", "monochrome"), default="fused")
    y.add_argument("--r", type=int, default=2)
    _common(y)
    t = vsub.add_parser("theorem", help="exhaustive lattice/operator comparisons")
    t.add_argument("name", choices=tuple(THEOREMS))
    t.add_argument("--r", type=int, default=None)
    t.add_argument("--max-parts", type=int, default=None)
    t.add_argument("--mode", choices=("fused", "monochrome"), default=None)
    _common(t)
    return parser


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(parse_int_list(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _rank(args, lam: Sequence[int]) -> int:
    r = len(lam) if args.r is None else args.r
    if r < 1:
        raise UsageError("--r must be positive")
    if len(lam) != r:
        raise UsageError(f"--lam has {len(lam)} entries but r = {r}")
    return r


def _perm(text: str | None, r: int, what: str):
    if text is None:
        return identity(r)
    try:
        return parse_permutation(text, r)
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _parabolic(text: str | None, r: int) -> frozenset:
    if text is None or not text.strip():
        return frozenset()
    J = frozenset(_ints(text, "--J"))
    if any(not 1 <= j < r for j in J):
        raise UsageError(f"--J indices must lie in 1..{r - 1}")
    return J


def _poly_output(query: dict, value: LaurentPoly, meta: dict | None = None):
    return query, value.to_json(), str(value), meta or {}


def _cmd_whittaker(args):
    lam = _ints(args.lam, "--lam")
    r = _rank(args, lam)
    w1, w2 = _perm(args.w1, r, "--w1"), _perm(args.w2, r, "--w2")
    J = _parabolic(args.J, r)
    kind = args.kind or ("parahoric" if J else "iwahori")
    query = {"command": "whittaker", "kind": kind, "r": r, "lam": list(lam),
             "w1": str(w1), "w2": str(w2), "J": sorted(J)}
    if kind == "iwahori":
        value = iwahori_value(lam, w1, w2)
    elif kind == "parahoric":
        value = parahoric_value(J, lam, w1, w2)
    elif kind == "cs":
        value = parahoric_cs_value(J, lam)
    elif kind == "spherical":
        value = spherical_value(lam)
    else:
        value = li_value(lam)
    return _poly_output(query, value)


def _cmd_partition(args):
    lam = _ints(args.lam, "--lam")
    r = _rank(args, lam)
    w1, w2 = _perm(args.w1, r, "--w1"), _perm(args.w2, r, "--w2")
    J = _parabolic(args.J, r) if args.J is not None else None
    flag = _ints(args.flag, "--flag") if args.flag is not None else None
    spec = build_system(r, lam, w1, w2, flag=flag, J=J, N=args.N, mode=args.mode)
    value = partition_function(spec)
    query = {"command": "partition", "r": r, "lam": list(lam), "w1": str(w1), "w2": str(w2),
             "flag": list(spec.flag), "N": spec.N, "mode": spec.mode}
    meta = {"states": count_states(spec) if spec.admissible else 0,
            "admissible": spec.admissible}
    return _poly_output(query, value, meta)


def _cmd_macdonald(args):
    lam = _ints(args.lam, "--lam")
    r = _rank(args, lam)
    J = _parabolic(args.J, r)
    query = {"command": "macdonald", "kind": args.kind, "r": r, "lam": list(lam)}
    if args.kind == "schur":
        value = schur(lam)
    elif args.kind == "levi":
        query["J"] = sorted(J)
        value = levi_character(J, lam)
    elif args.kind == "theta":
        value = theta(lam)
    elif args.kind == "hall-littlewood":
        query["t"] = "1/v" if args.t_inverse else "v"
        value = hall_littlewood(lam, t_inverted=args.t_inverse)
    elif args.kind == "e-inf":
        value = e_inf(lam)
    else:
        query["J"] = sorted(J)
        value = prescribed_symmetry_sum(J, lam)
    return _poly_output(query, value)


def _cmd_verify(args):
    if args.target == "ybe":
        if args.r < 1:
            raise UsageError("--r must be positive")
        rep = verify_fused_ybe(args.r) if args.mode == "fused" else verify_monochrome_ybe(args.r)
        query = {"command": "verify", "target": "ybe", "mode": args.mode, "r": args.r}
        result = {"passed": rep.passed, "boundaries": rep.boundaries,
                  "counterexample": rep.counterexample}
        text = rep.summary()
        if args.mode == "monochrome" and rep.passed:
            text += f" over colors {','.join(map(str, rep.checked_colors))}"
        if rep.counterexample:
            text += "\n" + json.dumps(rep.counterexample, sort_keys=True)
        return query, result, text, {}, rep.passed
    if args.r is not None and args.r < 2:
        raise UsageError("--r must be at least 2")
    rep = run_theorem(args.name, r=args.r, max_parts=args.max_parts, mode=args.mode)
    query = {"command": "verify", "target": "theorem", "name": args.name, "r": args.r,
             "max_parts": args.max_parts}
    text = rep.summary()
    if rep.counterexample:
        text += "\n" + json.dumps(rep.counterexample, sort_keys=True)
    return query, rep.to_json(), text, {}, rep.passed


_COMMANDS = {
    "whittaker": _cmd_whittaker,
    "partition": _cmd_partition,
    "macdonald": _cmd_macdonald,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command line; returns (exit status, text for stdout or stderr)."""
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return EXIT_INVALID, str(exc)
    start = time.perf_counter()
    try:
        out = _COMMANDS[args.command](args)
    except UsageError as exc:
        return EXIT_INVALID, str(exc)
    except (ValueError, NotImplementedError) as exc:
        return EXIT_INVALID, f"invalid input: {exc}"
    query, result, text, meta = out[:4]
    passed = out[4] if len(out) > 4 else True
    if args.timing:
        meta["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    envelope = {"query": query, "result": result, "meta": meta}
    rendered = json.dumps(envelope, sort_keys=True, indent=2)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(rendered + "\n")
        except OSError as exc:
            return EXIT_INVALID, f"cannot write {args.out}: {exc}"
    body = rendered if args.format == "json" else text
    return (EXIT_OK if passed else EXIT_COUNTEREXAMPLE), body


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == EXIT_INVALID else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
