"""Command-line front end.

Subcommands: ``exists``, ``count``, ``enumerate``, ``construct``,
``verify``, ``check``.  Output is line oriented; ``--format json`` emits
one compact JSON document per result so pipelines can stream.  Exit codes:
0 success (including a definite NotExists), 1 failed check or operational
error, 2 Unknown verdict, 64 bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .budget import DEFAULT_COUNT_BUDGET, DEFAULT_EXISTENCE_BUDGET, SearchBudget
from .classify import (
    UNKNOWN,
    ClassificationVerdict,
    decide_antiautomorphism,
    decide_biantiautomorphism,
    run_check,
)
from .construct import elementary2_antiauto, homogeneous2_antiauto, klein_antiauto
from .construct import z2_z4_antiauto, z2cubed_antiauto
from .errors import AntiautoError, MethodInapplicable, ParseError
from .groups import AbelianGroup, count_involutions, parse_group_spec
from .linalg import multiplication_map
from .maps import (
    TableMap,
    is_antiautomorphism,
    is_antimorphism,
    is_bijection,
    is_linear,
    negation_map,
    translate_map,
)
from .search import (
    count_antiautomorphisms,
    count_biantiautomorphisms_bruteforce,
    enumerate_antiautomorphisms,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


def _dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _print_verdict(verdict: ClassificationVerdict, fmt: str, group: AbelianGroup) -> None:
    if fmt == "json":
        doc = {"group": group.spec(), **verdict.to_json_dict()}
        print(_dumps(doc))
        return
    bits = [f"group {group.spec()}: {verdict.status}"]
    if verdict.method:
        bits.append(f"method={verdict.method}")
    if verdict.reason:
        bits.append(f"reason={verdict.reason}")
    if verdict.budget_note:
        bits.append(f"note={verdict.budget_note}")
    print("  ".join(bits))
    if verdict.witness is not None:
        print(verdict.witness.pair_listing())


def _budget(args: argparse.Namespace, default: SearchBudget) -> SearchBudget:
    if getattr(args, "budget", None) is None:
        return default
    return SearchBudget(max_group_order=args.budget, max_solutions=default.max_solutions)


def cmd_exists(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    budget = _budget(args, DEFAULT_EXISTENCE_BUDGET)
    decide = decide_biantiautomorphism if args.mode == "bianti" else decide_antiautomorphism
    verdict = decide(group, budget)
    _print_verdict(verdict, args.format, group)
    return EXIT_UNKNOWN if verdict.status == UNKNOWN else EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    if args.mode == "bianti":
        budget = _budget(args, DEFAULT_EXISTENCE_BUDGET)
        value = count_biantiautomorphisms_bruteforce(group, budget)
    else:
        budget = _budget(args, DEFAULT_COUNT_BUDGET)
        value = count_antiautomorphisms(group, budget, jobs=args.jobs)
    if args.format == "json":
        print(_dumps({"group": group.spec(), "mode": args.mode, "count": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    base = _budget(args, DEFAULT_COUNT_BUDGET)
    budget = SearchBudget(max_group_order=base.max_group_order, max_solutions=args.limit)
    for i, witness in enumerate(enumerate_antiautomorphisms(group, budget)):
        if args.format == "json":
            print(_dumps(witness.to_json_dict()))
        else:
            print(f"# witness {i}")
            print(witness.pair_listing())
    return EXIT_OK


def _construct_witness(group: AbelianGroup, method: str) -> TableMap:
    moduli = group.moduli
    if method == "negation":
        if count_involutions(group) != 0:
            raise MethodInapplicable("negation needs a group without involutions")
        return negation_map(group)
    if method == "elementary2":
        if any(d != 2 for d in moduli) or len(moduli) < 2:
            raise MethodInapplicable("elementary2 needs Z2^r with r >= 2")
        return elementary2_antiauto(len(moduli))
    if method == "companion2":
        first = moduli[0]
        if len(set(moduli)) != 1 or len(moduli) < 2 or first & (first - 1) or first < 2:
            raise MethodInapplicable("companion2 needs (Z_{2^m})^n with n >= 2")
        return homogeneous2_antiauto(first.bit_length() - 1, len(moduli))
    if method == "table":
        tables = {
            (2, 2): klein_antiauto,
            (2, 2, 2): z2cubed_antiauto,
            (2, 4): z2_z4_antiauto,
        }
        if moduli not in tables:
            raise MethodInapplicable("no built-in table for this group")
        return tables[moduli]()
    if method.startswith("multiplier:"):
        if len(moduli) != 1:
            raise MethodInapplicable("multiplier needs a cyclic group")
        raw = method.split(":", 1)[1]
        try:
            parts = [int(p) for p in raw.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad multiplier spec {raw!r}") from exc
        if len(parts) not in (1, 2):
            raise ParseError(f"multiplier takes a or a,b, got {raw!r}")
        a = parts[0]
        shift = parts[1] if len(parts) == 2 else 0
        witness = multiplication_map(group, a)
        if shift:
            witness = translate_map(witness, (shift % moduli[0],))
        if not is_antiautomorphism(witness):
            raise MethodInapplicable(
                f"t -> {a}t+{shift} is not an antiautomorphism of Z{moduli[0]}"
            )
        return witness
    raise ParseError(f"unknown construction method {method!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    witness = _construct_witness(group, args.method)
    if not is_antiautomorphism(witness):
        raise MethodInapplicable("constructed map failed verification")
    if args.format == "json":
        print(_dumps(witness.to_json_dict()))
    else:
        print(witness.pair_listing())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_check(args.proposition, args.max_order)
    if args.format == "json":
        for line in report.lines:
            print(
                _dumps(
                    {
                        "check": report.check_id,
                        "label": line.label,
                        "passed": line.passed,
                        "detail": line.detail,
                    }
                )
            )
        print(
            _dumps(
                {
                    "check": report.check_id,
                    "summary": report.summary(),
                    "passed": report.passed,
                }
            )
        )
    else:
        print(f"{report.check_id}: {report.description}")
        for line in report.lines:
            status = "PASS" if line.passed else "FAIL"
            detail = f"  [{line.detail}]" if line.detail and not line.passed else ""
            print(f"{status}  {line.label}{detail}")
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_check(args: argparse.Namespace) -> int:
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            raw = handle.read()
    results = []
    for chunk in raw.splitlines():
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            doc = json.loads(chunk)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON document: {exc}") from exc
        witness = TableMap.from_json_dict(doc)
        results.append(
            {
                "group": witness.group.spec(),
                "bijection": is_bijection(witness),
                "antimorphism": is_antimorphism(witness),
                "antiautomorphism": is_antiautomorphism(witness),
                "linear": is_linear(witness),
            }
        )
    if not results:
        raise ParseError("no map documents found")
    all_good = all(r["antiautomorphism"] for r in results)
    for r in results:
        if args.format == "json":
            print(_dumps(r))
        else:
            verdict = "antiautomorphism" if r["antiautomorphism"] else "NOT an antiautomorphism"
            extra = " (linear)" if r["linear"] else ""
            print(f"group {r['group']}: {verdict}{extra}")
    return EXIT_OK if all_good else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiauto",
        description="Antiautomorphisms of finite abelian groups: decide, count, enumerate, construct, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("exists", help="decide existence for a group")
    p.add_argument("group", help="comma-separated moduli, e.g. 2,4")
    p.add_argument("--mode", choices=("anti", "bianti"), default="anti")
    p.add_argument("--budget", type=int, default=None, help="max group order searched")
    add_format(p)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("count", help="exact count for a group")
    p.add_argument("group")
    p.add_argument("--mode", choices=("anti", "bianti"), default="anti")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker threads for counting")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream all antiautomorphisms")
    p.add_argument("group")
    p.add_argument("--limit", type=int, default=None, help="stop after this many")
    p.add_argument("--budget", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="build one verified witness")
    p.add_argument("group")
    p.add_argument(
        "--method",
        required=True,
        help="negation | elementary2 | companion2 | table | multiplier:a[,b]",
    )
    add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument(
        "proposition",
        help="P2 | P5 | P6 | L7 | P9 | P10 | P11 | P12 | T-formula | T-classification",
    )
    p.add_argument("--max-order", type=int, default=12, dest="max_order")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="re-verify serialized map documents")
    p.add_argument("--file", default="-", help="JSON documents, one per line ('-' = stdin)")
    add_format(p)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 0
        return EXIT_USAGE if code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AntiautoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
