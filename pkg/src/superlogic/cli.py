"""Command-line interface.

Exit codes: 0 success, 1 a check failed or the law suite differs from the
expectation file, 2 a parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import characters, laws
from .algebra import SumSemantics, parse_value, semantics
from .formula import (
    GRAMMAR,
    ParseError,
    ReservedWordError,
    TooManyAtoms,
    UnboundAtom,
    atoms,
    canonicalize,
    evaluate,
    parse,
    truth_table,
)
from .gf2 import CochainComplex, InvalidComplex, betti
from .twoslit import OutOfRangeProbability, TwoSlitScenario, two_slit
from .vector_fields import closure_report, enumerate_vector_fields


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _valuation(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise ValueError(f"--assign expects name=value, got {item!r}")
        if name == "n":
            raise ReservedWordError("'n' is reserved for the nilpotent constant and cannot be assigned")
        out[name] = parse_value(value)
    return out


def cmd_eval(args) -> int:
    f = parse(args.expr)
    val = _valuation(args.assign)
    value = evaluate(f, val, args.semantics)
    payload = {
        "expression": str(f),
        "semantics": args.semantics.value,
        "valuation": {k: str(val[k]) for k in atoms(f)},
        "value": str(value),
    }
    _emit(args, payload, str(value))
    return 0


def cmd_table(args) -> int:
    table = truth_table(parse(args.expr), args.semantics)
    width = max([len(a) for a in table.atoms] + [3])
    header = " ".join(a.rjust(width) for a in table.atoms) + " | out"
    lines = [header, "-" * len(header)]
    for ins, out in table.rows:
        lines.append(" ".join(str(v).rjust(width) for v in ins) + f" | {out}")
    _emit(args, table.to_json(), "\n".join(lines))
    return 0


def cmd_canon(args) -> int:
    f = parse(args.expr)
    pair = canonicalize(f, args.semantics, split_atoms=args.split_atoms)
    payload = {"expression": str(f), "semantics": args.semantics.value, "p": str(pair.p), "q": str(pair.q)}
    _emit(args, payload, f"P: {pair.p}\nQ: {pair.q}")
    return 0


def cmd_check(args) -> int:
    verdict = laws.check_identity(
        parse(args.lhs), parse(args.rhs), args.semantics, classical_atoms=args.classical_atoms
    )
    if verdict.holds:
        text = f"holds ({args.semantics.value})"
    else:
        witness = ", ".join(f"{k}={v}" for k, v in verdict.witness.items())
        text = f"fails ({args.semantics.value}) at {witness}: lhs={verdict.lhs_value} rhs={verdict.rhs_value}"
    payload = verdict.to_json()
    payload["semantics"] = args.semantics.value
    _emit(args, payload, text)
    return 0 if verdict.holds else 1


def cmd_laws(args) -> int:
    report = laws.run_suite(args.semantics)
    expected = laws.load_expectations(args.expect)
    ok = laws.matches_expectation(report, expected)
    lines = []
    for v in report.entries:
        mark = "holds" if v.holds else "FAILS"
        line = f"{v.section:16} {v.identity_name:32} {mark}"
        if not v.holds:
            witness = ", ".join(f"{k}={w}" for k, w in v.witness.items())
            line += f"  [{witness}: {v.lhs_value} vs {v.rhs_value}]"
        lines.append(line)
    lines.append(f"matches expectation: {'yes' if ok else 'no'}")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if ok else 1


def cmd_chars(args) -> int:
    found = characters.enumerate_characters(args.semantics, args.char_sum)
    payload = {
        "semantics": args.semantics.value,
        "char_sum": args.char_sum.value,
        "candidates": 16,
        "count": len(found),
        "characters": [t.to_json() for t in found],
    }
    if found:
        text = "\n".join(str(t) for t in found)
    else:
        text = "no characters exist for this mode"
    text += f"\n({len(found)} of 16 tables; bits listed at 0, 1, n, 1+n)"
    _emit(args, payload, text)
    return 0


def cmd_vfields(args) -> int:
    found = enumerate_vector_fields(args.semantics)
    payload = {
        "semantics": args.semantics.value,
        "candidates": 256,
        "count": len(found),
        "fields": [x.to_json() for x in found],
        "closure": closure_report(found, args.semantics),
    }
    if found:
        text = "\n".join(str(x) for x in found)
    else:
        text = "no vector fields exist for this mode"
    text += f"\n({len(found)} of 256 endomaps)"
    _emit(args, payload, text)
    return 0


def _generators(spec: str, args) -> list:
    if spec == "chars":
        return characters.enumerate_characters(args.semantics, args.char_sum)
    if spec in ("", "unit"):
        return []
    return [characters.Table.parse(part) for part in spec.split(",")]


def cmd_cohomology(args) -> int:
    if args.complex:
        cx = CochainComplex.load(args.complex)
        source = "file"
        truncated = False
    else:
        gens = _generators(args.generators, args)
        cx = characters.bar_complex(gens, args.max_degree)
        source = "bar"
        truncated = True
    if args.save:
        cx.dump(args.save)
    numbers = betti(cx)
    payload = {
        "source": source,
        "label": cx.label,
        "dims": list(cx.dims),
        "betti": numbers,
        "top_degree_truncated": truncated,
    }
    lines = [cx.label] if cx.label else []
    for k, (dim, b) in enumerate(zip(cx.dims, numbers)):
        note = "  (truncated)" if truncated and k == len(cx.dims) - 1 else ""
        lines.append(f"H^{k}: dim {b}  (C^{k} has dim {dim}){note}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_two_slit(args) -> int:
    result = two_slit(TwoSlitScenario(args.p1, args.p2, args.q12, args.q21), args.semantics)
    text = (
        f"(P1 + n(Q12)) & (P2 + n(Q21)) = {result.symbolic}\n"
        f"body weight:         {result.body_weight:.12g}\n"
        f"interference weight: {result.interference_weight:.12g}\n"
        "(weights are an interpretation: independent products at first order in n)"
    )
    _emit(args, result.to_json(), text)
    return 0


def cmd_epr(args) -> int:
    print(
        "epr: not implemented. The construction only asserts that the two-slit "
        "treatment carries over to entanglement and gives no procedure to compute.",
        file=sys.stderr,
    )
    return 2


def _sem(text: str) -> SumSemantics:
    try:
        return semantics(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is outside [0, 1]")
    return value


def _common(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--semantics", type=_sem, default=default if suppress else SumSemantics.XOR,
                   help="reading of the same-grade '+': xor or or (default xor)")
    p.add_argument("--char-sum", type=_sem, default=default if suppress else SumSemantics.XOR,
                   help="'+' in the character additivity clause: xor or or (default xor)")
    p.add_argument("--json", action="store_true", default=default if suppress else False,
                   help="machine-readable output")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlogic",
        description="Boolean logic with a nilpotent n (n^2 = 0): evaluation, canonical form, law checks.",
        epilog="formula grammar:\n" + GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[_common(False)],
    )
    common = [_common(True)]
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("eval", parents=common, help="evaluate a formula under a valuation")
    p.add_argument("expr")
    p.add_argument("--assign", action="append", default=[], metavar="NAME=VALUE",
                   help="atom value, one of 0, 1, n, 1+n (repeatable)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=common, help="exhaustive truth table")
    p.add_argument("expr")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("canon", parents=common, help="rewrite to P + n(Q) form")
    p.add_argument("expr")
    p.add_argument("--split-atoms", action="store_true",
                   help="treat each atom a as a + n(a_soul) instead of a classical proposition")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("check", parents=common, help="check an identity exhaustively")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--classical-atoms", action="store_true", help="let atoms range over 0 and 1 only")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("laws", parents=common, help="run the identity suite")
    p.add_argument("--expect", metavar="FILE", help="expectation file (default: the shipped one)")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("chars", parents=common, help="enumerate characters")
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("vfields", parents=common, help="enumerate vector fields")
    p.set_defaults(func=cmd_vfields)

    p = sub.add_parser("cohomology", parents=common, help="Betti numbers over F2")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--complex", metavar="FILE", help="user-supplied cochain complex (JSON)")
    src.add_argument("--generators", default="chars", metavar="SPEC",
                     help="'chars' (default), 'unit', or comma-separated 4-bit tables such as 0101,1111")
    p.add_argument("--max-degree", type=int, default=2, help="top cochain degree of the bar complex (<= 3)")
    p.add_argument("--save", metavar="FILE", help="write the complex as JSON")
    p.set_defaults(func=cmd_cohomology)

    demo = sub.add_parser("demo", help="worked examples")
    demo_sub = demo.add_subparsers(dest="demo", metavar="DEMO")
    demo_sub.required = True
    p = demo_sub.add_parser("two-slit", parents=common, help="(P1 + n(Q12)) & (P2 + n(Q21))")
    for name in ("p1", "p2", "q12", "q21"):
        p.add_argument(f"--{name}", type=_probability, required=True)
    p.set_defaults(func=cmd_two_slit)
    p = demo_sub.add_parser("epr", parents=common, help="not implemented")
    p.set_defaults(func=cmd_epr)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}\n\ngrammar:\n{GRAMMAR}", file=sys.stderr)
        return 2
    except (ReservedWordError, UnboundAtom, TooManyAtoms, OutOfRangeProbability, InvalidComplex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
