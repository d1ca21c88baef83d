"""Command-line entry point: ``betwixt <subcommand> ...``.

Every subcommand prints one JSON document.  Boolean verdicts are also
reported through the exit status: 0 true, 1 false.  Usage errors exit
with 2 and malformed input with 3.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import constructions, fo2, games, monoid, satgen, tl
from .regex import RegexSyntaxError, parse_regex, to_text as regex_text
from .words import Alphabet, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Malformed user input (exit status 3)."""


class UsageError(Exception):
    """Valid syntax but unusable combination of arguments (exit status 2)."""


def _alphabet(text: str | None) -> Alphabet | None:
    if text is None:
        return None
    try:
        return Alphabet.of(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _word(text: str, alphabet: Alphabet | None = None):
    try:
        return parse_word(text, alphabet)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _json_arg(text: str):
    """Inline JSON, or the path of a JSON file."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _fo2(text: str, alphabet: Alphabet | None = None) -> fo2.Formula:
    try:
        return fo2.parse_fo2(text, alphabet)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _tl(text: str, alphabet: Alphabet | None = None) -> tl.TlFormula:
    try:
        return tl.parse_tl(text, alphabet)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _sentence_alphabet(f: fo2.Formula, given: Alphabet | None) -> Alphabet:
    if given is not None:
        return given
    letters = sorted(fo2.letters_in(f))
    if not letters:
        raise UsageError("the formula mentions no letters; pass --alphabet")
    return Alphabet(letters)


# --- subcommands ----------------------------------------------------------------------

def cmd_analyze(args) -> tuple:
    try:
        report = monoid.definability_report(parse_regex(args.regex, _alphabet(args.alphabet)),
                                            _alphabet(args.alphabet))
    except RegexSyntaxError as exc:
        raise InputError(str(exc)) from exc
    return report.to_json(), EXIT_OK


def cmd_monoid(args) -> tuple:
    from .dfa import compile_min_dfa
    alphabet = _alphabet(args.alphabet)
    try:
        d = compile_min_dfa(parse_regex(args.regex, alphabet), alphabet)
    except RegexSyntaxError as exc:
        raise InputError(str(exc)) from exc
    m = monoid.syntactic_monoid(d)
    out = m.to_json()
    out["regex"] = args.regex
    return out, EXIT_OK


def _assignment(text: str | None) -> dict:
    asg = {}
    if not text:
        return asg
    for part in text.split(","):
        name, sep, val = part.partition("=")
        if not sep or name.strip() not in fo2.VARS:
            raise InputError(f"bad assignment {part!r}; expected x=1,y=2")
        try:
            asg[name.strip()] = int(val)
        except ValueError as exc:
            raise InputError(f"bad position {val!r}") from exc
    return asg


def cmd_eval(args) -> tuple:
    alphabet = _alphabet(args.alphabet)
    word = _word(args.word, alphabet)
    try:
        if args.logic == "fo2":
            f = _fo2(args.formula, alphabet)
            value = fo2.eval_fo2(f, word, _assignment(args.assign))
            text = fo2.to_text(f)
        else:
            f = _tl(args.formula, alphabet)
            if args.position is None:
                value = tl.accepts_tl(f, word)
            else:
                value = tl.eval_tl(f, word, args.position)
            text = tl.to_text(f)
    except (KeyError, IndexError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    out = {"logic": args.logic, "formula": text, "word": format_word(word), "value": bool(value)}
    if args.logic == "tl":
        out["position"] = args.position or 1
    return out, EXIT_OK if value else EXIT_FALSE


def cmd_equiv(args) -> tuple:
    try:
        theta = games.parse_theta(args.theta)
        cfg = games.GameConfig(args.depth, theta)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    w1, w2 = _word(args.w1), _word(args.w2)
    try:
        verdict = games.equiv_k(w1, w2, cfg, max_len=args.max_len)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"equivalent": verdict, "depth": args.depth}
    if theta:
        out["theta"] = theta
    return out, EXIT_OK if verdict else EXIT_FALSE


def cmd_translate(args) -> tuple:
    alphabet = _alphabet(args.alphabet)
    pair = (args.source, args.target)
    try:
        if pair == ("btl-inv", "utl-inv"):
            f = _tl(args.formula, alphabet)
            out_text = tl.to_text(tl.btlinv_to_utlinv(f, alphabet))
        elif pair == ("tl", "fo2"):
            f = _tl(args.formula, alphabet)
            g = tl.tl_to_fo2_sentence(f, alphabet) if args.sentence else tl.tl_to_fo2(f, "x", alphabet)
            out_text = fo2.to_text(g)
        elif pair == ("fo2-th", "fo2-bet"):
            f = _fo2(args.formula, alphabet)
            red = satgen.reduce_th_to_bet(f, _sentence_alphabet(f, alphabet))
            return {"from": args.source, "to": args.target, "input": args.formula,
                    "output": fo2.to_text(red.formula), "alphabet": list(red.alphabet),
                    "size": fo2.formula_size(red.formula)}, EXIT_OK
        else:
            raise UsageError(f"unsupported translation {args.source} -> {args.target}")
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"from": args.source, "to": args.target, "input": args.formula,
            "output": out_text}, EXIT_OK


def cmd_sat(args) -> tuple:
    alphabet = _alphabet(args.alphabet)
    f = _fo2(args.sentence, alphabet)
    if fo2.free_vars(f):
        raise InputError("sat expects a sentence (no free variables)")
    alphabet = _sentence_alphabet(f, alphabet)
    witness = satgen.bounded_sat(f, alphabet, args.max_len, workers=args.parallel)
    out = {"satisfiable": witness is not None, "max_len": args.max_len,
           "alphabet": list(alphabet),
           "witness": None if witness is None else format_word(witness)}
    return out, EXIT_OK if witness is not None else EXIT_FALSE


def _instance(text: str) -> satgen.TilingInstance:
    try:
        return satgen.TilingInstance.from_json(_json_arg(text))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad tiling instance: {exc}") from exc


def cmd_tiling(args) -> tuple:
    inst = _instance(args.instance)
    if args.action == "encode":
        families = satgen.tiling_conjuncts(inst)
        f = satgen.encode_tiling(inst)
        return {"alphabet": list(satgen.tiling_alphabet(inst)), "size": fo2.formula_size(f),
                "conjuncts": {k: fo2.formula_size(v) for k, v in families.items()},
                "formula": fo2.to_text(f)}, EXIT_OK
    if args.solution is None:
        raise UsageError("tiling witness needs a solution")
    try:
        sol = satgen.TilingSolution.from_json(_json_arg(args.solution))
        word = satgen.tiling_witness(inst, sol)
        valid = satgen.check_solution(inst, sol)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad tiling solution: {exc}") from exc
    holds = fo2.eval_fo2(satgen.encode_tiling(inst), word, {})
    return {"word": format_word(word), "length": len(word), "valid": valid,
            "satisfies": holds}, EXIT_OK if holds else EXIT_FALSE


def cmd_generate(args) -> tuple:
    try:
        if args.family == "xst":
            p = constructions.XstParams(args.r, args.s, args.S, args.T)
            return constructions.xst_words(p).to_json(), EXIT_OK
        C, T = constructions.circuit_langs(args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"m": args.m, "alphabet": constructions.circuit_alphabet(args.m),
            "C": regex_text(C), "T": regex_text(T)}, EXIT_OK


def cmd_congruence(args) -> tuple:
    words = [_word(w) for w in args.words]
    try:
        sigs = [constructions.block_signature(w, args.threshold) for w in words]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"threshold": args.threshold, "signatures": [s.to_json() for s in sigs]}
    if len(sigs) == 2:
        same = sigs[0] == sigs[1]
        out["congruent"] = same
        return out, EXIT_OK if same else EXIT_FALSE
    return out, EXIT_OK


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="betwixt",
                                description="Definability, games and satisfiability for "
                                            "two-variable logic with between predicates.")
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_alphabet(sp):
        sp.add_argument("--alphabet", help='letters, e.g. "abc" or "a,b,g1"')
        return sp

    sp = with_alphabet(sub.add_parser("analyze", help="definability report for a regex"))
    sp.add_argument("regex")
    sp.set_defaults(run=cmd_analyze)

    sp = with_alphabet(sub.add_parser("monoid", help="syntactic monoid of a regex"))
    sp.add_argument("regex")
    sp.set_defaults(run=cmd_monoid)

    sp = with_alphabet(sub.add_parser("eval", help="evaluate a formula on a word"))
    sp.add_argument("--logic", choices=("fo2", "tl"), required=True)
    sp.add_argument("--assign", help="free-variable positions for fo2, e.g. x=1,y=3")
    sp.add_argument("--position", type=int, help="evaluation position for tl (default 1)")
    sp.add_argument("formula")
    sp.add_argument("word")
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("equiv", help="decide the k-round game on two words")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--theta", help="thresholds, e.g. a=2,b=1")
    sp.add_argument("--max-len", type=int, default=games.MAX_WORD_LEN)
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp.set_defaults(run=cmd_equiv)

    sp = with_alphabet(sub.add_parser("translate", help="formula translations"))
    sp.add_argument("--from", dest="source", choices=("btl-inv", "tl", "fo2-th"), required=True)
    sp.add_argument("--to", dest="target", choices=("utl-inv", "fo2", "fo2-bet"), required=True)
    sp.add_argument("--sentence", action="store_true",
                    help="tl -> fo2: produce a sentence evaluated at the first position")
    sp.add_argument("formula")
    sp.set_defaults(run=cmd_translate)

    sp = with_alphabet(sub.add_parser("sat", help="bounded model search"))
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    sp.add_argument("sentence")
    sp.set_defaults(run=cmd_sat)

    sp = sub.add_parser("tiling", help="corridor tiling encoder")
    sp.add_argument("action", choices=("encode", "witness"))
    sp.add_argument("instance", help="instance JSON or path")
    sp.add_argument("solution", nargs="?", help="solution JSON or path (witness only)")
    sp.set_defaults(run=cmd_tiling)

    sp = sub.add_parser("generate", help="word families")
    gen = sp.add_subparsers(dest="family", required=True)
    gx = gen.add_parser("xst")
    for name in ("r", "s", "S", "T"):
        gx.add_argument(f"--{name}", type=int, default=1)
    gc = gen.add_parser("circuit")
    gc.add_argument("--m", type=int, required=True)
    sp.set_defaults(run=cmd_generate)

    sp = sub.add_parser("congruence", help="threshold block signatures over {a,b}")
    sp.add_argument("--threshold", type=int, required=True)
    sp.add_argument("words", nargs="+")
    sp.set_defaults(run=cmd_congruence)
    return p


def run_cli(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    indent = 2 if args.pretty else None
    try:
        out, code = args.run(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(json.dumps({"error": str(exc)}), file=stderr)
        return EXIT_INPUT
    print(json.dumps(out, indent=indent, sort_keys=False), file=stdout)
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
