"""Command line front end. ``python3 -m supercrystal <verb> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import alphabet as al
from .alphabet import AlphabetError, GradedAlphabet
from .characters import Poly, qsym_membership, tableau_character
from .crystal import DEFAULT_CAP, Word, decompose, explore_component
from .insertion import MatrixError, SuperMatrix, bold_P, qr_PQ, rsk
from .ppartition import component_types, kite_typer, qr_typer
from .tableaux import KINDS, KiteShape, ShapeError, enumerate_tableaux, enumerate_words, highest_tableau

EXIT_OK, EXIT_FAIL, EXIT_BAD = 0, 1, 2


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _ints(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _infer_alphabet(word_text: str) -> GradedAlphabet:
    """Smallest truncation of N(m) that holds every letter of the word."""
    vals = [al.parse_letter_value(t) for t in word_text.split()]
    if not vals:
        raise UsageError("empty word")
    m = max([0] + [-int(v) for v in vals if v < 0])
    top = max([Fraction(1, 2)] + [v for v in vals if v > 0])
    return al.mixed_trunc(m, top) if m else al.half_trunc(top)


def _alphabet(args, required: bool = True) -> GradedAlphabet | None:
    if args.alphabet:
        return al.parse_alphabet(args.alphabet)
    if getattr(args, "word", None):
        return _infer_alphabet(args.word)
    if required:
        raise UsageError("--alphabet is required")
    return None


def _negatives(A: GradedAlphabet) -> int:
    return sum(1 for x in A.displays if x.startswith("-"))


def _shape(args, A: GradedAlphabet):
    """(kind, shape) from --shape/--kind or --body/--tail."""
    if args.body is not None or args.tail is not None:
        m = args.m if args.m is not None else _negatives(A)
        return "kite", KiteShape(_ints(args.body), _ints(args.tail), m)
    if args.shape is None:
        raise UsageError("give --shape or --body/--tail")
    kind = args.kind or "qr"
    if kind == "kite":
        raise UsageError("kites take --body and --tail")
    return kind, _ints(args.shape)


def _type_label(t) -> str:
    return str(t) if isinstance(t, KiteShape) else ",".join(map(str, t))


def _typer(A: GradedAlphabet, m: int | None):
    m = _negatives(A) if m is None else m
    return kite_typer(A, m) if m else qr_typer(A)


# ---------------------------------------------------------------- verbs


def cmd_enumerate(args) -> str:
    A = _alphabet(args)
    kind, shape = _shape(args, A)
    tabs = enumerate_tableaux(kind, shape, A)
    if args.out == "text":
        return "\n\n".join("\n".join(" ".join(r) for r in T.display_rows()) for T in tabs) + "\n"
    return _dump([T.to_json() for T in tabs])


def cmd_component(args) -> str:
    A = _alphabet(args)
    if args.word:
        seed = Word.parse(A, args.word)
    else:
        kind, shape = _shape(args, A)
        seed = Word(A, highest_tableau(kind, shape, A).reading())
    comp = explore_component(seed, cap=args.cap)
    if comp.truncated:
        raise UsageError(f"component has more than {args.cap} elements; raise --cap")
    if args.out == "json":
        fmt = A.format_word
        return _dump(
            {
                "alphabet": A.name,
                "elements": [fmt(e) for e in comp.elements],
                "edges": [[fmt(s), A.roots[r].label, fmt(d)] for s, r, d in comp.edges],
                "highest": [fmt(h) for h in comp.highest],
            }
        )
    if args.out == "text":
        return f"{comp.size} elements, {len(comp.edges)} edges, highest: " + "; ".join(map(A.format_word, comp.highest)) + "\n"
    return comp.to_dot()


def cmd_decompose(args) -> str:
    A = _alphabet(args)
    if args.word:
        raise UsageError("decompose takes a shape, not a word")
    kind, shape = _shape(args, A)
    words = enumerate_words(kind, shape, A)
    if args.times:
        words = [a + b for a in words for b in enumerate_words("qr", _ints(args.times), A)]
    comps = decompose(words, A)
    types = component_types(comps, _typer(A, args.m))
    rows = sorted((_type_label(t), k) for t, k in types.items())
    if args.out == "text":
        return "".join(f"{k} x {t}\n" for t, k in rows)
    return _dump({"alphabet": A.name, "total": len(words), "components": [{"type": t, "multiplicity": k} for t, k in rows]})


def cmd_insert(args) -> str:
    if not args.word:
        raise UsageError("--word is required")
    A = _alphabet(args)
    w = Word.parse(A, args.word)
    P, Q = qr_PQ(w)
    out = {"P": P.to_json(), "Q": Q.to_json(), "shape": list(P.shape)}
    if args.kind == "ssyt":
        B = bold_P(w)
        out["bold_P"] = B.to_json()
    if args.out == "text":
        lines = ["P:"] + [" ".join(r) for r in P.display_rows()] + ["Q:"] + [" ".join(map(str, r)) for r in Q.rows()]
        return "\n".join(lines) + "\n"
    return _dump(out)


def cmd_rsk(args) -> str:
    if not args.matrix:
        raise UsageError("--matrix is required")
    with open(args.matrix) as fh:
        data = json.load(fh)
    A = _alphabet(args, required=False)
    M = SuperMatrix.from_json(data, A)
    P1, P2 = rsk(M)
    return _dump({"P1": P1.to_json(), "P2": P2.to_json(), "shape": list(P1.shape)})


def cmd_character(args) -> str:
    A = _alphabet(args)
    kind, shape = _shape(args, A)
    f = tableau_character(kind, shape, A)
    if args.out == "json":
        return _dump({"alphabet": A.name, "shape": _type_label(shape), "poly": f.to_json()})
    return f"{f}\n"


def cmd_membership(args) -> str:
    if args.poly is None or args.m is None or args.n is None:
        raise UsageError("membership needs --poly, --m and --n")
    f = Poly.parse(args.poly)
    ok, witness = qsym_membership(f, args.m, al.parse_letter_value(args.n))
    if args.out == "text":
        return ("member\n" if ok else f"not a member: {witness}\n")
    return _dump({"member": ok, "witness": witness})


def cmd_verify(args) -> tuple[str, int]:
    from .verify import SUITES, run_suite

    names = [args.suite] if args.suite else list(SUITES)
    if args.suite and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = [run_suite(n) for n in names]
    lines = [r.line() for r in results]
    for r in results:
        lines += [f"  {f}" for f in r.failures[:10]]
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    return "\n".join(lines) + "\n", code


VERBS = {
    "enumerate": cmd_enumerate,
    "component": cmd_component,
    "decompose": cmd_decompose,
    "insert": cmd_insert,
    "rsk": cmd_rsk,
    "character": cmd_character,
    "membership": cmd_membership,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supercrystal", description="Crystals for gl(m|n) over graded alphabets.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--alphabet", help="mn:M,N  half:N  mixed:M,N  perm:<base>:omega")
    p.add_argument("--shape", help="composition or partition, e.g. 2,1")
    p.add_argument("--kind", choices=[k for k in KINDS if k != "kite"], help="tableau model for --shape (default qr)")
    p.add_argument("--body", help="kite body partition")
    p.add_argument("--tail", help="kite tail composition")
    p.add_argument("--m", type=int, help="number of even letters below 1/2 (kites, membership)")
    p.add_argument("--n", help="top odd letter for membership, e.g. 2 or 3/2")
    p.add_argument("--times", help="second quasi-ribbon shape for a tensor product")
    p.add_argument("--word", help='space separated letters, e.g. "1 1/2 2"')
    p.add_argument("--poly", help="polynomial text, e.g. \"z[1/2] + 2*z[1]^2\"")
    p.add_argument("--matrix", help="JSON file with alphabet and entries")
    p.add_argument("--suite", help="verification suite name")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest component to explore")
    p.add_argument("--out", choices=["dot", "json", "text"], help="output format")
    return p


DEFAULT_OUT = {"component": "dot", "character": "text", "verify": "text"}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD if exc.code else EXIT_OK
    args.out = args.out or DEFAULT_OUT.get(args.verb, "json")
    try:
        result = VERBS[args.verb](args)
    except (UsageError, AlphabetError, ShapeError, MatrixError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_BAD
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if not result.endswith("\n"):
        result += "\n"
    stdout.write(result)
    return code


def main() -> None:
    sys.exit(run())
