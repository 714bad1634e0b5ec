"""Command-line interface.

Exit codes: 0 success or verified, 1 verification mismatch, 2 usage or
input error.  All output is sorted and free of timestamps so that repeated
runs are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .characters import CharacterSystem, mv_weight_multiplicity, verify_twining, weyl_character
from .folding import (
    CONVENTIONS,
    FoldingInconsistency,
    NotSigmaInvariant,
    build_folding,
    fold_datum,
    folded_transport,
    is_sigma_invariant,
    parse_sigma,
    unfold_datum,
)
from .lusztig import LusztigDatum, UnsupportedMove, default_word, transport
from .polytope import DEFAULT_DATA_CAP, build_polytope, enumerate_data, lies_in_weyl_hull
from .records import export_json, record_from_polytope
from .root_datum import UnsupportedType, parse_type, weights_of
from .weyl import CapExceeded, braid_path, replay

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

# options whose values may start with "-"
_INT_LIST_OPTIONS = {"--coweight", "--lambda", "--datum", "--word", "--to", "--from"}


class InputError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"malformed integer list {text!r}") from None


def _fmt(values: Sequence) -> str:
    return ",".join(str(v) for v in values)


def _root(args):
    try:
        return parse_type(args.type)
    except UnsupportedType as exc:
        raise InputError(str(exc)) from None


def _folding(args, root):
    if not args.sigma:
        raise InputError("--sigma is required")
    try:
        return build_folding(root, parse_sigma(root, args.sigma))
    except ValueError as exc:
        raise InputError(f"unsupported (type, sigma) pair: {exc}") from None


def _coweight(root, text: str, what: str) -> tuple[int, ...]:
    mu = _ints(text)
    if len(mu) != root.rank:
        raise InputError(f"{what} needs {root.rank} coordinates, got {len(mu)}")
    return mu


def _dominant(root, text: str) -> tuple[int, ...]:
    lam = _coweight(root, text, "--lambda")
    for i, x in zip(root.nodes, root.labels(lam)):
        if x < 0:
            raise InputError(f"lambda {_fmt(lam)} is not dominant: <lambda, alpha_{i}> = {x}")
    return lam


def _word(root, text: str | None) -> tuple[int, ...]:
    word = default_word(root) if text is None else _ints(text)
    try:
        LusztigDatum.zero(root, word).validate()
    except (ValueError, IndexError) as exc:
        raise InputError(str(exc)) from None
    return word


def _datum(root, word, text: str) -> LusztigDatum:
    try:
        return LusztigDatum(root, word, _ints(text))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    root = _root(args)
    word = _word(root, args.word)
    nu = _coweight(root, args.coweight, "--coweight")
    lam = _dominant(root, args.lam) if args.lam else None
    folding = _folding(args, root) if args.sigma else None
    try:
        data = enumerate_data(root, word, nu, cap=args.cap)
    except CapExceeded as exc:
        raise InputError(str(exc)) from None
    print(f"type {root.name} word {_fmt(word)} coweight {_fmt(nu)}", file=out)
    print(f"count {len(data)}", file=out)
    for d in data:
        flags = []
        if folding is not None or lam is not None:
            polytope = build_polytope(d)
            if folding is not None:
                flags.append(f"sigma_invariant={str(is_sigma_invariant(folding, polytope)).lower()}")
            if lam is not None:
                flags.append(f"in_vlambda={str(lies_in_weyl_hull(polytope, lam)).lower()}")
        print(" ".join([_fmt(d.values)] + flags), file=out)
    return EXIT_OK


def cmd_fold(args, out) -> int:
    root = _root(args)
    folding = _folding(args, root)
    word = _word(root, args.word)
    try:
        folded = fold_datum(folding, _datum(root, word, args.datum), args.convention)
    except (ValueError, NotSigmaInvariant) as exc:
        raise InputError(str(exc)) from None
    print(f"folded_type {folding.folded.name}", file=out)
    print(f"word {_fmt(folded.word)}", file=out)
    print(f"datum {_fmt(folded.values)}", file=out)
    return EXIT_OK


def cmd_unfold(args, out) -> int:
    root = _root(args)
    folding = _folding(args, root)
    word_sigma = _word(folding.folded, args.word)
    lifted = unfold_datum(folding, _datum(folding.folded, word_sigma, args.datum), args.convention)
    print(f"type {root.name}", file=out)
    print(f"word {_fmt(lifted.word)}", file=out)
    print(f"datum {_fmt(lifted.values)}", file=out)
    return EXIT_OK


def cmd_transport(args, out) -> int:
    root = _root(args)
    if args.sigma:
        folding = _folding(args, root)
        folded = folding.folded
        datum = _datum(folded, _word(folded, args.word), args.datum)
        target = _word(folded, args.to)
        try:
            result = folded_transport(folding, datum, target, args.convention)
        except FoldingInconsistency as exc:
            print(f"inconsistency: {exc}", file=out)
            return EXIT_MISMATCH
    else:
        datum = _datum(root, _word(root, args.word), args.datum)
        target = _word(root, args.to)
        try:
            result = transport(datum, target)
        except UnsupportedMove as exc:
            raise InputError(f"{exc} (give --sigma with a folded type)") from None
    print(f"word {_fmt(result.word)}", file=out)
    print(f"datum {_fmt(result.values)}", file=out)
    return EXIT_OK


def cmd_braid_path(args, out) -> int:
    root = _root(args)
    src, dst = _word(root, args.src), _word(root, args.to)
    try:
        moves = braid_path(root, src, dst)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(f"length {len(moves)}", file=out)
    word = src
    for move in moves:
        word = replay(word, [move])
        print(f"position {move.position} order {move.order} nodes {_fmt(move.nodes)} -> {_fmt(word)}", file=out)
    return EXIT_OK


def cmd_verify_weights(args, out) -> int:
    root = _root(args)
    lam = _dominant(root, args.lam)
    word = _word(root, args.word)
    system = CharacterSystem.of_group(root)
    freud = weyl_character(system, lam)
    print(f"type {root.name} lambda {_fmt(lam)} word {_fmt(word)}", file=out)
    print("weight mv freudenthal", file=out)
    equal = True
    for mu in weights_of(root, lam):
        mv = mv_weight_multiplicity(root, lam, mu, word)
        equal &= mv == freud[mu]
        print(f"{_fmt(mu)} {mv} {freud[mu]}", file=out)
    print(f"equal {str(equal).lower()}", file=out)
    return EXIT_OK if equal else EXIT_MISMATCH


def cmd_verify_twining(args, out) -> int:
    root = _root(args)
    folding = _folding(args, root)
    lam = _dominant(root, args.lam)
    if not folding.is_invariant(lam):
        raise InputError(f"lambda {_fmt(lam)} is not sigma-invariant")
    report = verify_twining(folding, lam, convention=args.convention)
    print(f"type {root.name} sigma {args.sigma} folded {folding.folded.name} lambda {_fmt(lam)}", file=out)
    print("weight twining folded multiplicity", file=out)
    for row in report.rows:
        print(f"{_fmt(row.weight)} {row.twining} {row.folded} {row.multiplicity}", file=out)
    print(f"equal {str(report.equal).lower()}", file=out)
    return EXIT_OK if report.equal else EXIT_MISMATCH


def cmd_export(args, out) -> int:
    root = _root(args)
    word = _word(root, args.word)
    sigma = parse_sigma(root, args.sigma) if args.sigma else None
    if sigma is not None:
        _folding(args, root)
    lam = _dominant(root, args.lam) if args.lam else None
    if args.coweight is not None:
        try:
            data = enumerate_data(root, word, _coweight(root, args.coweight, "--coweight"), cap=args.cap)
        except CapExceeded as exc:
            raise InputError(str(exc)) from None
    elif args.datum is not None:
        data = [_datum(root, word, args.datum)]
    else:
        raise InputError("export needs --datum or --coweight")
    records = [record_from_polytope(build_polytope(d), sigma, lam) for d in data]
    payload = export_json(records)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        out.write(payload.decode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foldmv", description="MV polytopes under diagram folding")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sigma=False, convention=False):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A4 or D4")
        p.add_argument("--sigma", required=sigma, default=None,
                       help="flip, triality, or cycle notation such as '(1 4)(2 3)'")
        if convention:
            p.add_argument("--convention", choices=CONVENTIONS, default="ascending")
        return p

    p = common(sub.add_parser("enumerate", help="list Lusztig data of a coweight"))
    p.add_argument("--word")
    p.add_argument("--coweight", required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--cap", type=int, default=DEFAULT_DATA_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("fold", help="fold a block-constant datum"), sigma=True, convention=True)
    p.add_argument("--word")
    p.add_argument("--datum", required=True)
    p.set_defaults(func=cmd_fold)

    p = common(sub.add_parser("unfold", help="unfold a folded datum"), sigma=True, convention=True)
    p.add_argument("--word", help="folded word (orbit indices)")
    p.add_argument("--datum", required=True)
    p.set_defaults(func=cmd_unfold)

    p = common(sub.add_parser("transport", help="Lusztig transform to another word"), convention=True)
    p.add_argument("--word")
    p.add_argument("--datum", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_transport)

    p = common(sub.add_parser("braid-path", help="shortest braid-move path"))
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_braid_path)

    p = common(sub.add_parser("verify-weights", help="MV counts against Freudenthal"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--word")
    p.set_defaults(func=cmd_verify_weights)

    p = common(sub.add_parser("verify-twining", help="twining character against folded character"),
               sigma=True, convention=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_verify_twining)

    p = common(sub.add_parser("export", help="write polytope records as JSON"))
    p.add_argument("--word")
    p.add_argument("--datum")
    p.add_argument("--coweight")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--cap", type=int, default=DEFAULT_DATA_CAP)
    p.add_argument("--output")
    p.set_defaults(func=cmd_export)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for token in it:
        if token in _INT_LIST_OPTIONS:
            value = next(it, None)
            if value is None:
                out.append(token)
            else:
                out.append(f"{token}={value}")
        else:
            out.append(token)
    return out


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
