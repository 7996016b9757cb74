"""Command-line interface.

Exit codes: 0 when the queried property holds (or the requested output
was produced), 1 when the property fails (a witness is printed), 2 for
unusable input (unreadable file, parse error, label mismatch, or a
command whose precondition the input violates).

Every subcommand accepts --json, which emits one structured document on
stdout carrying the same verdict and witness as the text output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .amicability import ElementFlags, TolerancePair
from .enumeration import MAX_N_CAP, PosetCorpus, verify_theorem
from .enumeration import enumerate_2uniform
from .files import ParseError, parse_poset, parse_tolerance
from .order import Poset, PosetError
from .relation import Relation
from .tolerance import Tolerance, ToleranceError, Verdict, check_tolerance


class CliError(Exception):
    """Input or usage problem; maps to exit code 2."""


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror or e}") from e


def _load_poset(path: str) -> Poset:
    try:
        return parse_poset(_read(path))
    except (ParseError, PosetError) as e:
        raise CliError(f"{path}: {e}") from e


def _load_relation(path: str, poset: Poset) -> Relation:
    try:
        return parse_tolerance(_read(path), poset)
    except ParseError as e:
        raise CliError(f"{path}: {e}") from e


def _load_tolerance(path: str, poset: Poset) -> Tolerance:
    rel = _load_relation(path, poset)
    try:
        return Tolerance.validate(poset, rel)
    except ToleranceError as e:
        raise CliError(f"{path}: {e}") from e


def _verdict_json(v: Verdict) -> dict:
    return {
        "holds": v.holds,
        "violated": v.violated,
        "witness": list(v.witness) if v.witness is not None else None,
    }


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _verdict_exit(args, command: str, v: Verdict, yes: str, no: str) -> int:
    text = f"{yes}" if v else f"{no}\n{v.describe()}"
    _emit(args, {"command": command, **_verdict_json(v)}, text)
    return 0 if v else 1


def cmd_validate_poset(args) -> int:
    text = _read(args.poset)
    try:
        poset = parse_poset(text)
    except PosetError as e:
        _emit(args, {"command": "validate-poset", "ok": False, "reason": str(e)},
              f"not a poset: {e}")
        return 1
    except ParseError as e:
        raise CliError(f"{args.poset}: {e}") from e
    _emit(args,
          {"command": "validate-poset", "ok": True,
           "elements": poset.n, "covers": len(poset.covers)},
          f"poset ok: {poset.n} elements, {len(poset.covers)} cover pairs")
    return 0


def cmd_validate_tolerance(args) -> int:
    poset = _load_poset(args.poset)
    rel = _load_relation(args.tolerance, poset)
    verdict = check_tolerance(poset, rel)
    return _verdict_exit(args, "validate-tolerance", verdict,
                         "tolerance ok", "not a tolerance")


def cmd_blocks(args) -> int:
    poset = _load_poset(args.poset)
    tol = _load_tolerance(args.tolerance, poset)
    labels = tol.block_labels()
    _emit(args,
          {"command": "blocks", "blocks": [list(b) for b in labels]},
          "blocks: " + " ".join("{%s}" % ",".join(b) for b in labels))
    return 0


def cmd_neighbors(args) -> int:
    poset = _load_poset(args.poset)
    tol = _load_tolerance(args.tolerance, poset)
    uniform = tol.is_2_uniform()
    if not uniform:
        raise CliError(f"{args.tolerance}: not 2-uniform ({uniform.describe()})")
    nm = tol.neighbor_map
    lab = poset.labels

    def name(i: int | None) -> str | None:
        return None if i is None else lab[i]

    doc = {
        "command": "neighbors",
        "elements": {
            lab[i]: {"lower": name(nm.lower[i]), "upper": name(nm.upper[i])}
            for i in range(poset.n)
        },
    }
    lines = [
        f"{lab[i]}: lower={name(nm.lower[i]) or '-'} upper={name(nm.upper[i]) or '-'}"
        for i in range(poset.n)
    ]
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_compose(args) -> int:
    poset = _load_poset(args.poset)
    r1 = _load_relation(args.first, poset)
    r2 = _load_relation(args.second, poset)
    composed = r1.compose(r2)
    lab = poset.labels
    pairs = [(lab[a], lab[b]) for a, b in composed.pairs()]
    _emit(args,
          {"command": "compose", "pairs": [list(p) for p in pairs]},
          "pairs: " + " ".join(f"({a},{b})" for a, b in pairs))
    return 0


def _load_pair(args) -> TolerancePair:
    poset = _load_poset(args.poset)
    t = _load_tolerance(args.first, poset)
    s = _load_tolerance(args.second, poset)
    try:
        return TolerancePair(t, s)
    except ValueError as e:
        raise CliError(str(e)) from e


def cmd_permute(args) -> int:
    pair = _load_pair(args)
    return _verdict_exit(args, "permute", pair.permute(),
                         "permute: yes", "permute: no")


def _flag_names(flags: ElementFlags) -> list[str]:
    names = []
    if flags.split_bottom:
        names.append("split-bottom")
    if flags.adherent_bottom:
        names.append("adherent-bottom")
    if flags.split_top:
        names.append("split-top")
    if flags.adherent_top:
        names.append("adherent-top")
    if flags.t_top:
        names.append("T-top")
    if flags.t_bottom:
        names.append("T-bottom")
    if flags.s_top:
        names.append("S-top")
    if flags.s_bottom:
        names.append("S-bottom")
    return names


def cmd_amicable(args) -> int:
    pair = _load_pair(args)
    verdict = pair.is_amicable()
    doc = {"command": "amicable", **_verdict_json(verdict)}
    lines = ["amicable: yes" if verdict else "amicable: no"]
    if not verdict:
        lines.append(verdict.describe())
    if args.explain:
        conditions = pair.conditions()
        doc["conditions"] = {tag: _verdict_json(v) for tag, v in conditions.items()}
        lines.append("conditions:")
        for tag, v in conditions.items():
            if v:
                lines.append(f"  {tag} ok")
            else:
                lines.append(f"  {tag} fail: " + ",".join(v.witness or ()))
        cls = pair.classification
        lab = pair.poset.labels
        doc["classification"] = {
            lab[i]: _flag_names(cls.elements[i]) for i in range(pair.poset.n)
        }
        lines.append("classification:")
        for i in range(pair.poset.n):
            names = _flag_names(cls.elements[i])
            lines.append(f"  {lab[i]}: " + (" ".join(names) if names else "-"))
    _emit(args, doc, "\n".join(lines))
    return 0 if verdict else 1


def cmd_enumerate(args) -> int:
    poset = _load_poset(args.poset)
    tolerances = enumerate_2uniform(poset)
    if args.count_only:
        _emit(args,
              {"command": "enumerate", "count": len(tolerances)},
              str(len(tolerances)))
        return 0
    doc = {
        "command": "enumerate",
        "count": len(tolerances),
        "tolerances": [[list(b) for b in t.block_labels()] for t in tolerances],
    }
    lines = [f"count: {len(tolerances)}"]
    for t in tolerances:
        lines.append("blocks: " + " ".join("{%s}" % ",".join(b) for b in t.block_labels()))
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_verify_theorem(args) -> int:
    try:
        corpus = PosetCorpus(args.max_n, args.dedup)
    except ValueError as e:
        raise CliError(str(e)) from e
    if args.jobs < 1:
        raise CliError("--jobs must be at least 1")
    report = verify_theorem(corpus, jobs=args.jobs)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render_text())
    print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetol",
        description="Tolerances on finite posets: validation, blocks, "
                    "2-uniformity, amicability, permutability, and an "
                    "exhaustive amicable-iff-permute theorem check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(func=func)
        return p

    p = add("validate-poset", cmd_validate_poset, "check that a file describes a poset")
    p.add_argument("poset")

    p = add("validate-tolerance", cmd_validate_tolerance,
            "check a relation against the tolerance axioms (1)-(4)")
    p.add_argument("poset")
    p.add_argument("tolerance")

    p = add("blocks", cmd_blocks, "print the blocks (maximal cliques) of a tolerance")
    p.add_argument("poset")
    p.add_argument("tolerance")

    p = add("neighbors", cmd_neighbors,
            "print lower/upper neighbor maps of a 2-uniform tolerance")
    p.add_argument("poset")
    p.add_argument("tolerance")

    p = add("compose", cmd_compose, "print the relational composition of two relations")
    p.add_argument("poset")
    p.add_argument("first")
    p.add_argument("second")

    p = add("permute", cmd_permute, "decide whether two 2-uniform tolerances permute")
    p.add_argument("poset")
    p.add_argument("first")
    p.add_argument("second")

    p = add("amicable", cmd_amicable,
            "decide conditions (5)-(8) for two 2-uniform tolerances")
    p.add_argument("poset")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--explain", action="store_true",
                   help="print per-condition verdicts and the bottom/top classification")

    p = add("enumerate", cmd_enumerate, "list all 2-uniform tolerances on a poset")
    p.add_argument("poset")
    p.add_argument("--count-only", action="store_true", help="print only the count")

    p = add("verify-theorem", cmd_verify_theorem,
            "exhaustively check amicable iff permute over all small posets")
    p.add_argument("--max-n", type=int, required=True,
                   help=f"largest carrier size to generate (1..{MAX_N_CAP})")
    p.add_argument("--dedup", action="store_true",
                   help="skip isomorphic duplicate posets")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes (default 1; report content identical)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
