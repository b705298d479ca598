"""``weylchar`` command line.

Exit status: 0 on success or a verified identity, 1 on a mismatch, 2 on a
usage error (bad arguments, out-of-bound oracle sizes without ``--force``).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import oracle
from .characters import (
    GradedCharacter,
    NonCharacter,
    VerificationReport,
    compare_characters,
    decompose,
    global_weyl_character,
    local_weyl_character,
    projective_character,
    symmetric_algebra_character,
    verify_projective_expansion,
    verify_reciprocity,
    verify_theorem2,
)
from .kostka import kostka_poly, paper_kostka
from .rootdata import Partition, Weight
from .series import Series, compare, hilbert_A


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> Partition:
    parts = _ints(text)
    try:
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(args, required: bool = True) -> Optional[Weight]:
    if args.weight is None:
        if required:
            raise UsageError("--weight is required")
        return None
    w = Weight(args.weight)
    if args.rank is not None and w.rank != args.rank:
        raise UsageError(f"weight {w} has {w.rank} coordinates but --rank is {args.rank}")
    return w


# -- output ------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _character_text(c: GradedCharacter) -> str:
    lines = [f"rank {c.rank}" + ("" if c.trunc is None else f", known up to u^{c.trunc}")]
    lines += [f"  {w}: {s}" for w, s in c]
    return "\n".join(lines)


def _character_payload(c: GradedCharacter) -> dict:
    out = c.to_dict()
    try:
        out["decomposition"] = decompose(c).to_list()
    except NonCharacter as exc:
        out["decomposition"] = None
        out["decomposition_error"] = str(exc)
    return out


def _character_output(c: GradedCharacter, as_json: bool) -> str:
    if as_json:
        return _dump(_character_payload(c))
    text = _character_text(c)
    try:
        parts = [f"  V{w}: {s}" for w, s in sorted(decompose(c).items())]
        text += "\nirreducible multiplicities:\n" + "\n".join(parts)
    except NonCharacter as exc:
        text += f"\nnot a sum of irreducibles: {exc}"
    return text


def _report_output(r: VerificationReport, as_json: bool) -> str:
    if as_json:
        return _dump(r.to_dict())
    lines = [r.summary(), f"  identity: {r.statement}"]
    for k, v in r.checks.items():
        if isinstance(v, bool):
            lines.append(f"  {k}: {'pass' if v else 'FAIL'}")
    if r.first_mismatch:
        lines.append(f"  first mismatch: {_dump(r.first_mismatch)}")
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------------

def cmd_kostka(args) -> tuple[str, int]:
    if args.weight is not None:
        if args.xi is None:
            raise UsageError("--weight needs --xi")
        s = paper_kostka(_weight(args), args.xi)
    else:
        if args.shape is None or args.content is None:
            raise UsageError("kostka needs --shape and --content (or --weight and --xi)")
        s = kostka_poly(args.shape, args.content)
    return (str(s) if args.text else _dump(s.to_dict())), 0


def cmd_hilbert(args) -> tuple[str, int]:
    s = hilbert_A(_weight(args), args.degree)
    return (_dump(s.to_dict()) if args.json else str(s)), 0


def cmd_char(args) -> tuple[str, int]:
    kind = args.kind
    if kind == "symalg":
        if args.rank is None:
            raise UsageError("char symalg needs --rank")
        c = symmetric_algebra_character(args.rank, args.degree)
    else:
        lam = _weight(args)
        if kind == "local":
            c = local_weyl_character(lam, args.shift)
        elif kind == "global":
            c = global_weyl_character(lam, args.shift, args.degree)
        else:
            c = projective_character(lam, args.shift, args.degree)
    return _character_output(c, args.json), 0


def cmd_verify(args) -> tuple[str, int]:
    if args.kind == "reciprocity":
        r = verify_reciprocity(args.m, args.degree)
    elif args.kind == "theorem2":
        r = verify_theorem2(args.degree)
    else:
        r = verify_projective_expansion(_weight(args), args.degree)
    return _report_output(r, args.json), 0 if r.passed else 1


def cmd_oracle(args) -> tuple[str, int]:
    kind = args.kind
    if kind == "tensor-char":
        return _character_output(oracle.tensor_character(args.ell, args.degree, force=args.force), args.json), 0
    if kind == "local-weyl":
        return _character_output(oracle.local_weyl_oracle(args.ell, force=args.force), args.json), 0
    if kind == "m-module":
        s = oracle.m_module_hilbert(args.k, args.ell, args.degree, force=args.force)
        return (_dump(s.to_dict()) if args.json else str(s)), 0
    r = oracle.theta_module_check(args.degree, force=args.force)
    return _report_output(r, args.json), 0 if r.passed else 1


def _load(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    if isinstance(data, dict) and data.get("kind") == "graded_character":
        return GradedCharacter.from_dict(data)
    if isinstance(data, dict) and "min_deg" in data and "coeffs" in data:
        return Series.from_dict(data)
    raise UsageError(f"{path} is neither a Series nor a GradedCharacter")


def cmd_diff(args) -> tuple[str, int]:
    a, b = _load(args.a), _load(args.b)
    if type(a) is not type(b):
        raise UsageError("schema mismatch: cannot compare a Series with a GradedCharacter")
    if isinstance(a, GradedCharacter):
        if a.rank != b.rank:
            raise UsageError(f"schema mismatch: rank {a.rank} vs rank {b.rank}")
        upto = a.trunc if b.trunc is None else (b.trunc if a.trunc is None else min(a.trunc, b.trunc))
        mismatch = compare_characters(a, b)
    else:
        cmp = compare(a, b)
        upto = cmp.upto
        mismatch = None if cmp.equal else dict(zip(("degree", "lhs", "rhs"), cmp.first_mismatch))
    if a.trunc != b.trunc:
        scope = f"compared up to u^{upto} (truncations {a.trunc} and {b.trunc})"
    else:
        scope = "compared exactly" if upto is None else f"compared up to u^{upto}"
    if mismatch is None:
        out = {"equal": True, "scope": scope, "first_mismatch": None}
        return (_dump(out) if args.json else f"equal; {scope}"), 0
    out = {"equal": False, "scope": scope, "first_mismatch": mismatch}
    return (_dump(out) if args.json else f"DIFFER; {scope}; first mismatch {_dump(mismatch)}"), 1


# -- parser ------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, json_default: bool = False):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="json", action="store_true", default=json_default, help="JSON output")
    fmt.add_argument("--text", dest="json", action="store_false", help="plain text output")
    p.add_argument("--output", "-o", help="write to this file instead of standard output")


def _weight_args(p: argparse.ArgumentParser, rank_required: bool = False):
    p.add_argument("--rank", type=int, required=rank_required, help="n for sl_{n+1}")
    p.add_argument("--weight", type=_ints, help="fundamental coordinates, e.g. 1,0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylchar", description="Graded characters for current algebras of type A.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial (charge statistic)")
    p.add_argument("--shape", type=_partition)
    p.add_argument("--content", type=_partition)
    _weight_args(p)
    p.add_argument("--xi", type=_partition, help="partition xi; uses the local Weyl module indexing")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", default=False, help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", help="plain text output")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("hilbert", help="Hilbert series of A_lambda")
    _weight_args(p)
    p.add_argument("--degree", "-D", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("char", help="graded characters")
    p.add_argument("kind", choices=["local", "global", "projective", "symalg"])
    _weight_args(p)
    p.add_argument("--shift", type=int, default=0, help="grade shift r")
    p.add_argument("--degree", "-D", type=int)
    _common(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("verify", help="check an identity up to a degree")
    p.add_argument("kind", choices=["reciprocity", "theorem2", "conjecture"])
    _weight_args(p)
    p.add_argument("--m", type=int, default=0, help="m for reciprocity")
    p.add_argument("--degree", "-D", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force sl2 computations")
    p.add_argument("kind", choices=["tensor-char", "local-weyl", "m-module", "theta"])
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--degree", "-D", type=int)
    p.add_argument("--force", action="store_true", help="ignore desk-scale bounds (factorial growth)")
    _common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("diff", help="compare two JSON outputs")
    p.add_argument("a")
    p.add_argument("b")
    _common(p)
    p.set_defaults(func=cmd_diff)
    return parser


_NEEDS = {
    ("char", "local"): (), ("char", "global"): ("degree",), ("char", "projective"): ("degree",),
    ("char", "symalg"): ("degree",),
    ("oracle", "tensor-char"): ("ell", "degree"), ("oracle", "local-weyl"): ("ell",),
    ("oracle", "m-module"): ("ell", "degree"), ("oracle", "theta"): ("degree",),
}


def run(argv: Optional[list[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in _NEEDS.get((args.command, getattr(args, "kind", None)), ()):
        if getattr(args, name) is None:
            print(f"weylchar: error: --{name} is required here", file=sys.stderr)
            return 2
    try:
        text, status = args.func(args)
    except (UsageError, oracle.OracleBoundsError, ValueError) as exc:
        print(f"weylchar: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
