"""Command line front end.

Exit codes: 0 success, 1 a checked condition failed (a witness is
reported), 2 a hypothesis of the requested check does not hold, 3 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .blockcode import parse_rule
from .core import (
    AlphabetError,
    ConstantLengthError,
    DuplicateError,
    FormatError,
    HypothesisError,
    PrimitivityError,
    RangeError,
    SupportError,
    block,
    show,
)
from .presentation import check_symbol_bound, k_block_presentation
from .recognizability import UNIQUE, BlockCode, parse_window, recognizability_window
from .substitution import (
    apply,
    default_probe_bound,
    format_substitution,
    incidence,
    is_infinite,
    is_one_to_one,
    is_primitive,
    language,
    parse_substitution,
    power,
)
from .verifier import build_certificate, build_theorem2_certificate

OK, FAILED, HYPOTHESIS, BAD_INPUT = 0, 1, 2, 3
DEFAULT_NMAX = 8
DEFAULT_DEPTH = 4
DEFAULT_KMAX = 64


class _Input:
    def __init__(self, path: str):
        self.path = path
        data = Path(path).read_bytes()
        self.text = data.decode("utf-8")
        self.digest = hashlib.sha256(data).hexdigest()


def _report(command, inputs, result, bounds=None) -> dict:
    return {
        "command": command,
        "inputs": {i.path: i.digest for i in inputs},
        "result": result,
        "bounds": bounds or {},
    }


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    out.write(f"command: {report['command']}\n")
    for path, digest in report["inputs"].items():
        out.write(f"input: {path} sha256={digest}\n")
    for key in sorted(report["bounds"]):
        out.write(f"bound {key}: {report['bounds'][key]}\n")
    for key in sorted(report["result"]):
        value = report["result"][key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        out.write(f"{key}: {value}\n")


def cmd_language(args, out) -> int:
    sub = _Input(args.sub_file)
    theta = parse_substitution(sub.text)
    lang = language(theta, args.n)
    _emit(_report("language", [sub], {"n": args.n, "count": len(lang), "blocks": lang.strings()}), args.json, out)
    return OK


def cmd_check(args, out) -> int:
    sub = _Input(args.sub_file)
    theta = parse_substitution(sub.text)
    probe = args.probe_bound or default_probe_bound(theta)
    primitive = is_primitive(theta)
    result = {
        "alphabet": list(theta.alphabet),
        "length": theta.L,
        "primitive": primitive,
        "one_to_one": is_one_to_one(theta),
        "incidence": incidence(theta).tolist(),
    }
    bounds = {"probe_bound": probe}
    if primitive:
        verdict = is_infinite(theta, probe)
        result["infinite"] = str(verdict)
        if verdict.kind == "infinite":
            K = recognizability_window(theta, args.kmax)
            result["recognizability_window"] = K
            bounds["K_max"] = args.kmax
    else:
        result["infinite"] = "not decided (not primitive)"
    _emit(_report("check", [sub], result, bounds), args.json, out)
    return OK


def cmd_parse(args, out) -> int:
    sub = _Input(args.sub_file)
    theta = parse_substitution(sub.text)
    if args.word is not None:
        word = block(args.word)
    else:
        word = apply(power(theta, args.expand), theta.alphabet[:1])
    code = BlockCode.images(theta, args.power)
    cert = parse_window(code, word)
    result = cert.to_dict()
    result["code"] = [show(b) for b in code.blocks]
    _emit(_report("parse", [sub], result, {"power": args.power}), args.json, out)
    return OK if cert.status == UNIQUE else FAILED


def _verify(args, out, builder, name) -> int:
    sub, rule_in = _Input(args.sub_file), _Input(args.rule_file)
    theta = parse_substitution(sub.text)
    f = parse_rule(rule_in.text)
    cert = builder(theta, f, N_max=args.nmax, depth=args.depth)
    result = cert.to_dict()
    result.pop("bounds", None)
    _emit(_report(name, [sub, rule_in], result, {"N_max": args.nmax, "depth": args.depth}), args.json, out)
    return OK if cert.ok else FAILED


def cmd_verify_t1(args, out) -> int:
    return _verify(args, out, build_certificate, "verify-t1")


def cmd_verify_t2(args, out) -> int:
    return _verify(args, out, build_theorem2_certificate, "verify-t2")


def cmd_present(args, out) -> int:
    sub = _Input(args.sub_file)
    theta = parse_substitution(sub.text)
    spec = k_block_presentation(theta, args.k)
    out.write(format_substitution(spec.presented))
    return OK


def cmd_bound(args, out) -> int:
    sub, zeta_in = _Input(args.sub_file), _Input(args.zeta_file)
    theta = parse_substitution(sub.text)
    zeta = parse_substitution(zeta_in.text)
    report = check_symbol_bound(theta, zeta)
    _emit(_report("bound", [sub, zeta_in], report.to_dict()), args.json, out)
    return OK if report.satisfied else FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subconj", description="Constant-length substitution systems and conjugacy checks.")
    sp = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        q = sp.add_parser(name, help=help)
        q.add_argument("--json", action="store_true", help="emit a JSON report")
        q.set_defaults(func=func)
        return q

    q = add("language", cmd_language, "list the n-blocks of X_theta")
    q.add_argument("sub_file")
    q.add_argument("--n", type=int, required=True)

    q = add("check", cmd_check, "primitive / one-to-one / infinite / incidence matrix")
    q.add_argument("sub_file")
    q.add_argument("--probe-bound", type=int, default=None)
    q.add_argument("--kmax", type=int, default=DEFAULT_KMAX)

    q = add("parse", cmd_parse, "parse a word into blocks theta^N(s)")
    q.add_argument("sub_file")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--expand", type=int, help="parse theta^k of the first symbol")
    q.add_argument("--power", type=int, default=1)

    for name, func in (("verify-t1", cmd_verify_t1), ("verify-t2", cmd_verify_t2)):
        q = add(name, func, "check a proposed conjugacy given by a local rule")
        q.add_argument("sub_file")
        q.add_argument("rule_file")
        q.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
        q.add_argument("--depth", type=int, default=DEFAULT_DEPTH)

    q = add("present", cmd_present, "print the k-block presentation substitution")
    q.add_argument("sub_file")
    q.add_argument("--k", type=int, required=True)

    q = add("bound", cmd_bound, "compare |alphabet(zeta)| with the number of 3-blocks")
    q.add_argument("sub_file")
    q.add_argument("zeta_file")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (HypothesisError, PrimitivityError) as exc:
        print(f"hypothesis error: {exc}", file=sys.stderr)
        return HYPOTHESIS
    except (
        FormatError,
        AlphabetError,
        ConstantLengthError,
        DuplicateError,
        RangeError,
        SupportError,
        OSError,
        UnicodeDecodeError,
    ) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
