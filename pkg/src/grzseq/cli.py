"""Command-line front end.

Subcommands map straight onto the library: ``repr`` and ``shift`` expose the
codec, ``seq`` the sequence engine, ``ord`` the ordinal correspondence,
``gn`` the descending assignment, ``chain`` the slowdown compressor and
verifier.  Every command takes ``--json`` for machine-readable output in the
module schemas.

Exit codes: 0 success, 1 overflow or step-limit outcomes, 2 usage errors,
3 validation rejections.  The cap defaults to 10^7 and can be overridden by
the GRZ_CAP environment variable or a ``--cap`` flag.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .correspond import Coding, CodingError, NotInDError, Q_pred, g, in_D, o_map
from .frep import (
    ParseError,
    RepError,
    encode,
    print_rep,
    rep_to_json,
    shift_total_value,
    shift_value,
    to_total,
)
from .grzeval import CapExceededError, Exact
from .ordinals import (
    coeff_measure,
    compare,
    ordinal_to_json,
    parse_ordinal,
    print_ordinal,
)
from .seq import run, trace_to_json
from .slowdown import chain_to_text, compress, parse_chain_text, verify_slow

DEFAULT_CAP = 10**7
DEFAULT_MAX_STEPS = 10**4

EXIT_OK = 0
EXIT_OVERFLOW = 1
EXIT_USAGE = 2
EXIT_REJECTED = 3


def _fmt_nat(v: int) -> str:
    s = str(v)
    return s if len(s) <= 40 else f"≈10^{len(s) - 1}"


def _fmt_bounded(b) -> str:
    if isinstance(b, Exact):
        return _fmt_nat(b.value)
    return f">cap({b.cap})"


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _default_cap() -> int:
    raw = os.environ.get("GRZ_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"grzseq: GRZ_CAP must be an integer, got {raw!r}")
    if cap < 2:
        raise SystemExit("grzseq: GRZ_CAP must be at least 2")
    return cap


def _coding(name: str) -> Coding:
    return Coding.REPAIRED if name == "repaired" else Coding.LITERAL


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_repr(args) -> int:
    r = to_total(args.x, args.base) if args.total else encode(args.x, args.base)
    if args.json:
        _emit(rep_to_json(r))
    else:
        print(print_rep(r))
    return EXIT_OK


def _cmd_shift(args) -> int:
    shift = shift_total_value if args.hereditary else shift_value
    out = shift(args.x, args.src, args.dst, args.cap)
    if args.json:
        _emit({"value": str(out.value)} if isinstance(out, Exact) else {"exceeds_cap": str(out.cap)})
    else:
        print(_fmt_bounded(out))
    return EXIT_OK if isinstance(out, Exact) else EXIT_OVERFLOW


def _cmd_seq(args) -> int:
    trace = run(
        args.z,
        hereditary=args.hereditary,
        cap=args.cap,
        max_steps=args.max_steps,
        with_shadow=args.shadow,
    )
    if args.json:
        _emit(trace_to_json(trace))
    else:
        for s in trace.steps:
            line = f"k={s.k} base={s.base} value={_fmt_bounded(s.value)}"
            if s.rep is not None:
                line += f" rep={print_rep(s.rep)}"
            if s.shadow is not None:
                line += f" shadow={print_ordinal(s.shadow)}"
            print(f"{line} {s.phase.value.upper()}")
        print(f"outcome: {trace.outcome.kind} at k={trace.outcome.at}")
        if trace.overflow_desc:
            print(f"overflow: {trace.overflow_desc}")
    return EXIT_OK if trace.outcome.kind == "terminated" else EXIT_OVERFLOW


def _cmd_ord_encode(args) -> int:
    a = o_map(args.x, args.base, _coding(args.coding))
    if args.json:
        _emit({"ordinal": ordinal_to_json(a), "text": print_ordinal(a)})
    else:
        print(print_ordinal(a))
    return EXIT_OK


def _cmd_ord_compare(args) -> int:
    rel = compare(args.a, args.b)
    if args.json:
        _emit({"ordering": rel.name})
    else:
        print(rel.name)
    return EXIT_OK


def _cmd_ord_C(args) -> int:
    m = coeff_measure(args.a)
    if args.json:
        _emit({"value": str(m)})
    else:
        print(m)
    return EXIT_OK


def _cmd_ord_inD(args) -> int:
    report = in_D(args.a, args.base, _coding(args.coding))
    if args.json:
        skel = None
        if report.skeleton is not None:
            skel = [
                [str(v.value) if isinstance(v, Exact) else {"exceeds_cap": str(v.cap)}, str(c)]
                for v, c in report.skeleton
            ]
        _emit({"member": report.member, "skeleton": skel, "reason": report.reason})
    elif report.member:
        print("member")
    else:
        print(f"non-member: {report.reason}")
    return EXIT_OK


def _cmd_ord_Q(args) -> int:
    out = Q_pred(args.a, args.base, _coding(args.coding), args.cap)
    if args.json:
        _emit({"ordinal": ordinal_to_json(out), "text": print_ordinal(out)})
    else:
        print(print_ordinal(out))
    return EXIT_OK


def _cmd_gn(args) -> int:
    out = g(args.n, args.k, args.x)
    if args.json:
        _emit({"ordinal": ordinal_to_json(out), "text": print_ordinal(out)})
    else:
        print(print_ordinal(out))
    return EXIT_OK


def _read_chain(path: str):
    with open(path, encoding="utf-8") as handle:
        return parse_chain_text(handle.read())


def _cmd_chain_slowdown(args) -> int:
    alphas = _read_chain(args.input)
    out = compress(alphas, args.index, args.const)
    report = verify_slow(out)
    if args.json:
        _emit(
            {
                "entries": [ordinal_to_json(a) for a in out.entries],
                "entries_text": [print_ordinal(a) for a in out.entries],
                "tower_prefix_len": out.tower_prefix_len,
                "tower_height_base": out.tower_height_base,
                "note": out.note,
                "verified": report.ok,
            }
        )
    else:
        sys.stdout.write(chain_to_text(out.entries) if out.entries else "")
        print(f"# ell={out.tower_prefix_len} N={out.tower_height_base} entries={len(out.entries)}")
        if out.note:
            print(f"# note: {out.note}")
        print(f"# verified: {'ok' if report.ok else 'FAILED'}")
    return EXIT_OK if report.ok else EXIT_REJECTED


def _cmd_chain_verify(args) -> int:
    entries = _read_chain(args.input)
    report = verify_slow(entries)
    if args.json:
        _emit({"ok": report.ok, "violations": list(report.violations)})
    else:
        if report.ok:
            print(f"ok: {len(entries)} entries descend with C(entry_i) <= i+1")
        else:
            for v in report.violations:
                print(f"violation: {v}")
    return EXIT_OK if report.ok else EXIT_REJECTED


# ---------------------------------------------------------------------------
# Argument plumbing


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return v


def _base(text: str) -> int:
    v = _nat(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"base must be at least 2, got {v}")
    return v


def _ordinal_arg(text: str):
    try:
        return parse_ordinal(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def build_parser(default_cap: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grzseq",
        description="Exact arithmetic for fast-growing-hierarchy numerals, "
        "base-shift sequences, and ordinal descent bookkeeping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cap=False, steps=False):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if cap:
            p.add_argument("--cap", type=_nat, default=default_cap, help="value cutoff")
        if steps:
            p.add_argument("--max-steps", type=_nat, default=DEFAULT_MAX_STEPS)

    p = sub.add_parser("repr", help="representation of a number at a base")
    p.add_argument("x", type=_nat)
    p.add_argument("--base", type=_base, required=True)
    p.add_argument("--total", action="store_true", help="hereditary representation")
    add_common(p)
    p.set_defaults(fn=_cmd_repr)

    p = sub.add_parser("shift", help="base-shift a value")
    p.add_argument("x", type=_nat)
    p.add_argument("--from", dest="src", type=_base, required=True)
    p.add_argument("--to", dest="dst", type=_base, required=True)
    p.add_argument("--hereditary", action="store_true")
    add_common(p, cap=True)
    p.set_defaults(fn=_cmd_shift)

    p = sub.add_parser("seq", help="run a base-shift countdown sequence")
    p.add_argument("z", type=_nat)
    p.add_argument("--hereditary", action="store_true")
    p.add_argument("--shadow", action="store_true", help="record ordinal shadows")
    add_common(p, cap=True, steps=True)
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("ord", help="ordinal correspondence operations")
    osub = p.add_subparsers(dest="ord_command", required=True)

    q = osub.add_parser("encode", help="ordinal of a number at a base")
    q.add_argument("x", type=_nat)
    q.add_argument("--base", type=_base, required=True)
    q.add_argument("--coding", choices=["repaired", "literal"], default="repaired")
    add_common(q)
    q.set_defaults(fn=_cmd_ord_encode)

    q = osub.add_parser("compare", help="compare two ordinal terms")
    q.add_argument("a", type=_ordinal_arg)
    q.add_argument("b", type=_ordinal_arg)
    add_common(q)
    q.set_defaults(fn=_cmd_ord_compare)

    q = osub.add_parser("C", help="hereditary maximal coefficient")
    q.add_argument("a", type=_ordinal_arg)
    add_common(q)
    q.set_defaults(fn=_cmd_ord_C)

    q = osub.add_parser("inD", help="membership in the image set at a base")
    q.add_argument("a", type=_ordinal_arg)
    q.add_argument("--base", type=_base, required=True)
    q.add_argument("--coding", choices=["repaired", "literal"], default="repaired")
    add_common(q)
    q.set_defaults(fn=_cmd_ord_inD)

    q = osub.add_parser("Q", help="predecessor inside the image set")
    q.add_argument("a", type=_ordinal_arg)
    q.add_argument("--base", type=_base, required=True)
    q.add_argument("--coding", choices=["repaired", "literal"], default="repaired")
    add_common(q, cap=True)
    q.set_defaults(fn=_cmd_ord_Q)

    p = sub.add_parser("gn", help="the windowed descending assignment g_n(k, x)")
    p.add_argument("n", type=_nat)
    p.add_argument("k", type=_base)
    p.add_argument("x", type=_nat)
    add_common(p)
    p.set_defaults(fn=_cmd_gn)

    p = sub.add_parser("chain", help="descending-chain tools")
    csub = p.add_subparsers(dest="chain_command", required=True)

    q = csub.add_parser("slowdown", help="compress a chain file")
    q.add_argument("--input", required=True)
    q.add_argument("--index", type=_nat, required=True, help="hierarchy index n")
    q.add_argument("--const", type=_nat, required=True, help="prefix constant c")
    add_common(q)
    q.set_defaults(fn=_cmd_chain_slowdown)

    q = csub.add_parser("verify", help="check descent and coefficient bounds")
    q.add_argument("--input", required=True)
    add_common(q)
    q.set_defaults(fn=_cmd_chain_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        default_cap = _default_cap()
    except SystemExit as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_cap)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        code = err.code if isinstance(err.code, int) else EXIT_USAGE
        return code
    try:
        return args.fn(args)
    except CapExceededError as err:
        print(f"grzseq: {err}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (NotInDError, CodingError) as err:
        print(f"grzseq: {err}", file=sys.stderr)
        return EXIT_REJECTED
    except (ParseError, FileNotFoundError) as err:
        print(f"grzseq: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (RepError, ValueError) as err:
        print(f"grzseq: {err}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    raise SystemExit(main())
