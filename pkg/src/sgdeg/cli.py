"""Command-line front end: ``sgdeg analyze|herzog|mm|search``.

Exit codes: 0 success (also when the search finds violations), 2 invalid
input or unwritable output, 3 symmetric input given to ``herzog``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .degrees import TSV_COLUMNS, augmented_predictions, classify, mm_analysis
from .errors import GorensteinCase, SemigroupError
from .herzog import (
    agl_from_matrix,
    bideg_closed_form,
    canonical_ideal_candidates,
    cdeg_closed_form,
    herzog_matrix,
    three_agl_patterns,
)
from .ideals import canonical_ideal
from .search import PREDICATES, Predicate, SearchSpec, header, run_search
from .semigroup import NumericalSemigroup


def parse_generators(text: str) -> list[int]:
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}") from None


def _gens_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("generators", nargs="+", help="generators, e.g. 5,7,9 or 5 7 9")


def _gens(ns: argparse.Namespace) -> list[int]:
    return [g for chunk in ns.generators for g in parse_generators(chunk)]


def cmd_analyze(ns: argparse.Namespace) -> int:
    h = NumericalSemigroup(_gens(ns))
    report = classify(h)
    if ns.json:
        print(report.to_json())
        return 0
    print(report.table())
    aug = augmented_predictions(h)
    if aug.cdeg is not None:
        b = "n/a (R Gorenstein)" if aug.bideg is None else aug.bideg
        print(f"R x| m predicted  cdeg {aug.cdeg}, type {aug.type}, bideg {b}")
    return 0


def cmd_herzog(ns: argparse.Namespace) -> int:
    gens = _gens(ns)
    if len(gens) != 3:
        print("herzog needs exactly three generators", file=sys.stderr)
        return 2
    try:
        m = herzog_matrix(*gens)
    except GorensteinCase:
        print(f"<{','.join(map(str, gens))}> is symmetric (Gorenstein): no Herzog matrix")
        return 3
    is_agl, is_2agl = agl_from_matrix(m)
    k = canonical_ideal(NumericalSemigroup(gens))
    k_ok = all(cand.shift(-cand.min) == k for cand in canonical_ideal_candidates(m))
    out = {
        "matrix": m.to_json(),
        "cdeg": cdeg_closed_form(m),
        "bideg": bideg_closed_form(m),
        "agl": is_agl,
        "2agl": is_2agl,
        "3agl_question_patterns": three_agl_patterns(m),
        "canonical_ideal_matches": k_ok,
    }
    if ns.json:
        print(json.dumps(out, sort_keys=True))
        return 0
    print(m.pretty())
    print(f"exponent rows  {m.top} / {m.bottom}")
    print(f"cdeg   {out['cdeg']}")
    print(f"bideg  {out['bideg']}")
    print(f"AGL    {is_agl}")
    print(f"2-AGL  {is_2agl}")
    for name, hit in out["3agl_question_patterns"].items():
        print(f"pattern {name}  {hit}")
    print(f"(x^a1, y^b2) ~ K  {k_ok}")
    return 0


def cmd_mm(ns: argparse.Namespace) -> int:
    h = NumericalSemigroup(_gens(ns))
    res = mm_analysis(h)
    if ns.json:
        print(json.dumps({
            "overring": list(res.overring.generators),
            "cdeg": res.cdeg,
            "predicted": res.predicted,
            "matches": res.matches,
            "bideg": res.bideg,
        }, sort_keys=True))
        return 0
    print(f"(m:m)      {res.overring}")
    print(f"cdeg(A)    {res.cdeg}")
    print(f"formula    {res.predicted}  (cdeg(R) + e0(m) - 2 r(R))")
    print(f"matches    {res.matches}")
    print(f"bideg(A)   {res.bideg}")
    return 0


def cmd_search(ns: argparse.Namespace) -> int:
    spec = SearchSpec(
        max_genus=ns.max_genus,
        predicate=Predicate.parse(ns.predicate),
        type_min=ns.type_min,
        type_max=ns.type_max,
        fmt=ns.format,
        threads=ns.threads,
    )
    if ns.out:
        try:
            fh = open(ns.out, "w", encoding="utf-8", newline="\n")
        except OSError as exc:
            print(f"cannot write {ns.out}: {exc}", file=sys.stderr)
            return 2
    result = run_search(spec)
    lines = result.rows
    head = header(spec.fmt)
    if head is not None:
        lines = [head] + lines
    text = "".join(line + "\n" for line in lines)
    if ns.out:
        with fh:
            fh.write(text)
        print(result.summary())
    else:
        sys.stdout.write(text)
        print(result.summary(), file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgdeg",
        description="Canonical and bi-canonical degrees of numerical semigroup rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="all invariants of one semigroup")
    _gens_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("herzog", help="Herzog matrix and closed-form degrees of <a,b,c>")
    _gens_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_herzog)

    p = sub.add_parser("mm", help="(m:m) overring and its canonical degree")
    _gens_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mm)

    p = sub.add_parser(
        "search",
        help="walk the semigroup tree and test bideg <= cdeg",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "TSV columns (tab separated, header line first):\n  "
            + " | ".join(TSV_COLUMNS)
            + "\nRows are sorted by genus, then generator list.  The totals"
            "\nline goes to stdout with --out, to stderr otherwise."
        ),
    )
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--type-min", type=int)
    p.add_argument("--type-max", type=int)
    p.add_argument("--predicate", default="violations-only",
                   help="one of: " + ", ".join(PREDICATES))
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (SemigroupError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
