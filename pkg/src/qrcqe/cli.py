"""Command-line front end.

Exit codes: 0 success (a false sentence is still a success), 1 semantic
failure (mismatch or axiom violation), 2 usage or syntax error, 3 the
input lies outside the supported fragments or budget.

``--format structured`` prints one JSON object per result with the keys
``input``, ``branch``, ``result`` and ``stats``.  The environment variable
``QRC_SEED`` overrides ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .errors import BudgetExceeded, EvenBound, FormulaSyntaxError, QRCError, UnsupportedFragment
from .formula import count_atoms, normalize, quantifier_depth, render, term_to_poly
from .fuzz import FUZZERS
from .models.conformance import check_axioms_sampled
from .models.core import model_by_name
from .oracles.newton import newton_polygon
from .oracles.sturm import Base, sturm_tarski
from .parser import parse, parse_term
from .qe.engine import EliminationConfig, decide_sentence, eliminate_guarded, eliminate_with_stats
from .theory import Branch, CompletionConfig, sigma_qo, sigma_qrc

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    branch: str = "guarded"
    degree: int = 2
    samples: int = 500
    seed: int = 1
    precision: int = 24
    output_format: str = "text"


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, text: str, input_=None, branch=None, result=None, stats=None):
        if self.fmt == "structured":
            rec = {"input": input_, "branch": branch, "result": result if result is not None else text,
                   "stats": stats or {}}
            self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _seed(args) -> int:
    env = os.environ.get("QRC_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"QRC_SEED must be an integer, got {env!r}") from None
    return args.seed


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text", dest="output_format")
    p = argparse.ArgumentParser(prog="qrcqe", description="Quantifier elimination and decision toolkit "
                                "for quasi-real closed valued fields.", parents=[common])
    sub = p.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("parse", parents=[common], help="echo the normalized form of a formula")
    s.add_argument("formula")

    s = sub.add_parser("qe", parents=[common], help="eliminate quantifiers")
    s.add_argument("--branch", choices=("rcvf", "acvf", "guarded"), default="guarded")
    s.add_argument("--degree", type=int, choices=(1, 2), default=2)
    s.add_argument("formula")

    s = sub.add_parser("decide", parents=[common], help="decide a sentence in a completion")
    s.add_argument("--branch", choices=("rcvf", "acvf", "guarded"), default="guarded")
    s.add_argument("--char", type=int, default=0, dest="char")
    s.add_argument("--res-char", type=int, default=0, dest="res_char")
    s.add_argument("--degree", type=int, choices=(1, 2), default=2)
    s.add_argument("sentence")

    s = sub.add_parser("axioms", parents=[common], help="list an axiom set")
    s.add_argument("--theory", choices=("qo", "qrc"), default="qo")
    s.add_argument("--odd-bound", type=int, default=3, dest="odd_bound")

    s = sub.add_parser("check-axioms", parents=[common], help="sample axioms in a built-in model")
    s.add_argument("--model", choices=("mr", "ma"), action="append")
    s.add_argument("--n", type=_positive, default=500)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--precision", type=_positive, default=24)

    s = sub.add_parser("fuzz", parents=[common], help="differential fuzzing of the eliminators")
    s.add_argument("--fragment", choices=("a", "b", "c"), action="append")
    s.add_argument("--cases", type=_positive, default=500)
    s.add_argument("--seed", type=int, default=1)

    s = sub.add_parser("oracle", parents=[common], help="run an independent oracle")
    osub = s.add_subparsers(dest="oracle", required=True)
    o = osub.add_parser("sturm", parents=[common], help="Tarski query of G on the roots of F")
    o.add_argument("f")
    o.add_argument("--g", default="1")
    o.add_argument("--lo", default="-inf")
    o.add_argument("--hi", default="inf")
    o.add_argument("--base", choices=("q", "qt"), default="q")
    o.add_argument("--var", default="x")
    o = osub.add_parser("polygon", parents=[common], help="Newton polygon of F in x over Q((t))")
    o.add_argument("f")
    o.add_argument("--var", default="x")
    return p


# -- subcommands ------------------------------------------------------------------

def _cfg(args) -> EliminationConfig:
    return EliminationConfig(max_degree=getattr(args, "degree", 2))


def cmd_parse(args, out: _Out) -> int:
    f = normalize(parse(args.formula))
    out.emit(render(f), args.formula, None, None,
             {"atoms": count_atoms(f), "quantifier_depth": quantifier_depth(f)})
    return EXIT_OK


def cmd_qe(args, out: _Out) -> int:
    f = parse(args.formula)
    if args.branch == "guarded":
        g = eliminate_guarded(f, _cfg(args))
        out.emit(g.render(), args.formula, "guarded", None,
                 {"acvf_atoms": count_atoms(g.acvf_part), "rcvf_atoms": count_atoms(g.rcvf_part)})
        return EXIT_OK
    res, st = eliminate_with_stats(f, Branch(args.branch), _cfg(args))
    out.emit(render(res), args.formula, args.branch, None, st.as_dict())
    return EXIT_OK


def cmd_decide(args, out: _Out) -> int:
    s = parse(args.sentence)
    if args.branch == "rcvf" and (args.char or args.res_char):
        raise ValueError("--char and --res-char apply to the acvf branch only")
    completions = []
    if args.branch in ("rcvf", "guarded"):
        completions.append(("rcvf", CompletionConfig(Branch.RCVF)))
    if args.branch in ("acvf", "guarded"):
        completions.append(("acvf", CompletionConfig(Branch.ACVF, args.char, args.res_char)))
    for label, cc in completions:
        verdict = "true" if decide_sentence(s, cc, _cfg(args)) else "false"
        text = verdict if len(completions) == 1 else f"{label}: {verdict}"
        out.emit(text, args.sentence, label, verdict,
                 {"characteristic": cc.characteristic, "residue_characteristic": cc.residue_characteristic})
    return EXIT_OK


def cmd_axioms(args, out: _Out) -> int:
    axioms = sigma_qo() if args.theory == "qo" else sigma_qrc(args.odd_bound)
    for i, ax in enumerate(axioms):
        out.emit(render(ax), None, None, None, {"index": i, "theory": args.theory})
    return EXIT_OK


def cmd_check_axioms(args, out: _Out) -> int:
    seed = _seed(args)
    status = EXIT_OK
    for tag in args.model or ["mr", "ma"]:
        m = model_by_name(tag).with_precision(args.precision)
        report = check_axioms_sampled(m, sigma_qo(), n=args.n, seed=seed)
        for r in report.results:
            verdict = "pass" if r.ok else "FAIL"
            text = f"{m.name} {verdict} {r.axiom}"
            if r.first_counterexample:
                text += f"  counterexample {r.first_counterexample}"
            out.emit(text, r.axiom, m.name, verdict,
                     {"samples": r.samples, "violations": r.violations,
                      "indeterminate": r.indeterminate, "witness_missing": r.witness_missing})
        for c in report.checks:
            verdict = "pass" if c.ok else "FAIL"
            out.emit(f"{m.name} {verdict} {c.name}", c.name, m.name, verdict,
                     {"samples": c.samples, "violations": c.violations})
        summary = f"{m.name}: {report.violations} violations in {args.n} samples per axiom"
        out.emit(summary, None, m.name, "pass" if report.ok else "FAIL", {"violations": report.violations})
        if not report.ok:
            status = EXIT_FAIL
    return status


def cmd_fuzz(args, out: _Out) -> int:
    seed = _seed(args)
    status = EXIT_OK
    for frag in args.fragment or ["a", "b", "c"]:
        report = FUZZERS[frag](args.cases, seed=seed)
        for m in report.mismatches:
            out.emit(f"mismatch: {m}", m.get("formula"), frag, "mismatch", m)
        line = report.summary()
        if not args.fragment or len(args.fragment) > 1:
            line = f"fragment {frag}: {line}"
        out.emit(line, None, frag, "pass" if report.ok else "FAIL",
                 {"cases": report.cases, "agree": report.agree, "mismatches": len(report.mismatches),
                  "indeterminate": report.indeterminate, "unsupported": report.unsupported})
        if not report.ok:
            status = EXIT_FAIL
    return status


def cmd_oracle(args, out: _Out) -> int:
    f = term_to_poly(parse_term(args.f))
    if args.oracle == "sturm":
        g = term_to_poly(parse_term(args.g))
        base = Base.Q if args.base == "q" else Base.QT
        value = sturm_tarski(f, g, (args.lo, args.hi), base, args.var)
        out.emit(str(value), args.f, None, value, {"g": args.g, "lo": args.lo, "hi": args.hi, "base": base.value})
        return EXIT_OK
    poly = newton_polygon(f, args.var)
    segments = [[str(s), n] for s, n in poly.segments]
    out.emit(str(poly), args.f, None, {"segments": segments, "zero_roots": poly.zero_root_multiplicity},
             {"degree": poly.degree})
    return EXIT_OK


COMMANDS = {
    "parse": cmd_parse, "qe": cmd_qe, "decide": cmd_decide, "axioms": cmd_axioms,
    "check-axioms": cmd_check_axioms, "fuzz": cmd_fuzz, "oracle": cmd_oracle,
}


def cli_run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    out = _Out(args.output_format, stdout)
    try:
        return COMMANDS[args.subcommand](args, out)
    except FormulaSyntaxError as e:
        stderr.write(f"syntax error: {e.args[0]}\n")
        return EXIT_USAGE
    except (UnsupportedFragment, BudgetExceeded) as e:
        stderr.write(f"unsupported: {e}\n")
        return EXIT_UNSUPPORTED
    except (EvenBound, ValueError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except QRCError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
