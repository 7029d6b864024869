"""Command-line interface.

Exit codes: 0 success, 1 property failure (JSON report on stdout), 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import bounds, constructions, lempel, verify
from .euler import os2_maximal
from .periods import period_general, period_order3
from .registry import EXAMPLES
from .seq import SequenceFormatError, format_json, format_text, read_sequence

EXIT_OK, EXIT_PROPERTY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_sequence(args, seq, n) -> None:
    text = format_json(seq, n) if args.format == "json" else format_text(seq, n)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, pretty=False) -> None:
    print(json.dumps(obj, indent=2 if pretty else None))


def _load(path):
    try:
        return read_sequence(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except SequenceFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _fail_report(seq, n) -> int:
    _emit_json(verify.report(seq, n).to_dict())
    return EXIT_PROPERTY


# --------------------------------------------------------------------------
# subcommands

def cmd_gen_os2(args) -> int:
    xyz = _ints(args.xyz)
    if len(xyz) != 3:
        raise UsageError("--xyz takes exactly three residues")
    seq = os2_maximal(args.q, *xyz, lead_zero=args.lead_zero)
    _emit_sequence(args, seq, 2)
    return EXIT_OK


def cmd_construct(args) -> int:
    params = constructions.ConstructionParams(args.q, args.qprime, args.n, args.variant)
    starter = None
    if args.starter:
        starter, _ = _load(args.starter)
    seq = constructions.construct(params, starter)
    _emit_sequence(args, seq, args.n)
    return EXIT_OK


def cmd_lift(args) -> int:
    seq, n = _load(args.input)
    for _ in range(args.steps):
        if args.tower:
            seq = lempel.tower(seq, n, n + 1)
        else:
            seq = lempel.d_inverse(seq, args.start)
        n += 1
    if not verify.check_special(seq, n):
        return _fail_report(seq, n)
    _emit_sequence(args, seq, n)
    return EXIT_OK


def cmd_sos(args) -> int:
    q, n = args.q, args.n
    if n == 2 and q >= 11 and not args.good:
        seq = constructions.make_U_star(*_ustar_params(q))
    elif n == 3 and q >= 11 and not args.good and (q < 12 or period_order3(q) >= period_general(q, 3)):
        seq = lempel.sos3(q)
    elif q >= 12:
        seq = lempel.sos_general(q, n)
    else:
        raise UsageError(f"no construction for q={q}, n={n} (need q >= 11 for n <= 3, q >= 12 otherwise)")
    _emit_sequence(args, seq, n)
    return EXIT_OK


def _ustar_params(qprime):
    return ((qprime - 1) // 2 if qprime % 2 else (qprime - 2) // 2), qprime


def cmd_verify(args) -> int:
    seq, file_n = _load(args.file)
    n = args.n if args.n is not None else file_n
    rep = verify.report(seq, n)
    if args.pretty:
        for key, val in rep.to_dict().items():
            if key != "violations":
                print(f"{key:24s} {val}")
        for v in rep.violations:
            print(f"violation {v.kind:18s} i={v.i} j={v.j} window={v.window}")
    else:
        _emit_json(rep.to_dict())
    flag = {
        "window": rep.is_window,
        "orientable": rep.is_orientable,
        "negative": rep.is_negative_orientable,
        "special": rep.is_special,
        "good": rep.is_special and rep.is_good,
        "none": True,
    }[args.require]
    return EXIT_OK if flag else EXIT_PROPERTY


def cmd_bound(args) -> int:
    out = {"q": args.q, "n": args.n, "closed_form": bounds.sos_bound(args.q, args.n), "oracle": None}
    try:
        out["oracle"] = bounds.sos_bound_oracle(args.q, args.n).to_dict()
    except bounds.ResourceGuardError as exc:
        out["oracle_skipped"] = str(exc)
    if args.pretty:
        print(f"closed form  {out['closed_form']}")
        if out["oracle"]:
            for key, val in out["oracle"].items():
                print(f"{key:22s} {val}")
    else:
        _emit_json(out)
    if out["oracle"] and out["oracle"]["bound"] != out["closed_form"]:
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.id is None:
        ids = list(EXAMPLES)
        if not args.check:
            for rid in ids:
                rec = EXAMPLES[rid]
                print(f"{rid:22s} q'={rec.qprime:<3d} period={rec.expected_period:<3d} {rec.title}")
            return EXIT_OK
    else:
        if args.id not in EXAMPLES:
            raise UsageError(f"unknown example id {args.id!r}; try one of {', '.join(EXAMPLES)}")
        ids = [args.id]
    if not args.check:
        rec = EXAMPLES[ids[0]]
        _emit_sequence(args, rec.expected_output, rec.n)
        return EXIT_OK
    results = []
    for rid in ids:
        rec = EXAMPLES[rid]
        got = rec.run()
        results.append({"id": rid, "match": got == rec.expected_output, "period": got.period})
    _emit_json(results if len(results) > 1 else results[0], args.pretty)
    return EXIT_OK if all(r["match"] for r in results) else EXIT_PROPERTY


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orientseq", description="Special orientable sequences over Z_q.")
    sub = p.add_subparsers(dest="command", required=True)

    def out_opts(sp):
        sp.add_argument("--out", help="write the sequence file here instead of stdout")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("gen-os2", help="maximal order-2 orientable starter with a forced prefix")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--xyz", required=True, help="anchor residues x,y,z")
    sp.add_argument("--lead-zero", action="store_true", help="ring starts 0,x,y,z,x")
    out_opts(sp)
    sp.set_defaults(func=cmd_gen_os2)

    sp = sub.add_parser("construct", help="run one construction pipeline")
    sp.add_argument("--variant", choices=constructions.VARIANTS, required=True)
    sp.add_argument("--q", type=int, required=True, help="starter alphabet size")
    sp.add_argument("--qprime", type=int, required=True, help="output alphabet size")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--starter", help="sequence file holding the starter")
    out_opts(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("lift", help="apply the inverse difference map K times")
    sp.add_argument("--input", required=True)
    sp.add_argument("--steps", type=int, default=1)
    sp.add_argument("--start", type=int, default=0, help="initial term of each lift")
    sp.add_argument("--tower", action="store_true", help="insert the weight-fixing symbol after each lift")
    out_opts(sp)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("sos", help="full pipeline: special orientable sequence over Z_q of order n")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--good", action="store_true", help="require the good route")
    out_opts(sp)
    sp.set_defaults(func=cmd_sos)

    sp = sub.add_parser("verify", help="property report for a sequence file")
    sp.add_argument("file")
    sp.add_argument("--n", type=int, help="window length (defaults to the file header)")
    sp.add_argument("--require", default="special",
                    choices=("window", "orientable", "negative", "special", "good", "none"))
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bound", help="period bound, closed form and enumeration")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("examples", help="list or replay the worked examples")
    sp.add_argument("--id")
    sp.add_argument("--check", action="store_true", help="recompute from the starter and compare")
    sp.add_argument("--pretty", action="store_true")
    out_opts(sp)
    sp.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args)
    except UsageError as exc:
        print(f"orientseq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, constructions.ConstructionError) as exc:
        print(f"orientseq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except verify.CertificationError as exc:
        print(f"orientseq: {exc}", file=sys.stderr)
        _emit_json(exc.report.to_dict())
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
