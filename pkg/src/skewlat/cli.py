"""Command line front end and the on-disk structure format.

A structure file is whitespace-separated tokens with ``#`` comments:

    skewlat 1
    n 3
    zero 0          # optional
    meet
    0 0 0
    0 1 1
    0 1 2
    join
    0 1 2
    1 1 2
    2 2 2
    labels          # optional, one quoted string per element
    "bottom"
    "mid"
    "top"

Sections appear in exactly that order; rows of a table are the left
operand.  The format is plain enough to diff and emitting is bit-exact,
so ``parse(emit(S))`` reproduces the structure.

Exit codes: 0 for a true verdict or successful emission, 1 for a false
verdict (the certificate is printed), 2 for usage, parse and
precondition errors.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .core import (
    FiniteSkewLattice,
    PreconditionError,
    SkewLatticeError,
    StructureError,
    Table,
    check_identity,
    check_symmetric,
    detect_zero,
    is_commutative,
    quotient,
)
from .completeness import (
    check_bounded_above,
    check_join_complete,
    check_section_exists,
    check_section_extension,
    lattice_sections,
    sup_natural,
)
from .census import CensusFilter, enumerate_skew_lattices
from .frames import check_theorem_ncframes, is_ncframe
from .models import (
    build_pfn_algebra,
    fi_one_point_chain,
    is_boolean_lattice,
    om_verify_no_infimum_of_infs,
    om_verify_no_join_of_naturals,
    om_window,
)

__all__ = ["ParseError", "StructureFile", "parse", "emit", "main", "entry"]

FORMAT_TAG = "skewlat"
FORMAT_VERSION = 1


class ParseError(SkewLatticeError):
    """Structure file rejected, with the offending line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    col: int
    quoted: bool


_ESCAPES = {"\\": "\\", '"': '"', "n": "\n"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        i = 0
        while i < len(raw):
            ch = raw[i]
            if ch in " \t\r":
                i += 1
                continue
            if ch == "#":
                break
            col = i + 1
            if ch == '"':
                i += 1
                parts: list[str] = []
                while True:
                    if i >= len(raw):
                        raise ParseError("unterminated quoted string", lineno, col)
                    ch = raw[i]
                    if ch == '"':
                        i += 1
                        break
                    if ch == "\\":
                        if i + 1 >= len(raw) or raw[i + 1] not in _ESCAPES:
                            raise ParseError("unknown escape in quoted string", lineno, i + 1)
                        parts.append(_ESCAPES[raw[i + 1]])
                        i += 2
                        continue
                    parts.append(ch)
                    i += 1
                tokens.append(_Token("".join(parts), lineno, col, quoted=True))
                continue
            j = i
            while j < len(raw) and raw[j] not in ' \t\r#"':
                j += 1
            tokens.append(_Token(raw[i:j], lineno, col, quoted=False))
            i = j
    return tokens


@dataclass(frozen=True)
class StructureFile:
    """Parsed structure file: order, tables, optional zero and labels."""

    order: int
    meet_table: Table
    join_table: Table
    zero: int | None = None
    labels: tuple[str, ...] | None = None

    def to_structure(self) -> FiniteSkewLattice:
        return FiniteSkewLattice(
            self.order, self.meet_table, self.join_table, zero=self.zero, labels=self.labels
        )

    @classmethod
    def from_structure(cls, S: FiniteSkewLattice) -> "StructureFile":
        return cls(S.order, S.meet_table, S.join_table, zero=S.zero, labels=S.labels)


class _Cursor:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, what: str) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", 1, 1, False)
            raise ParseError(f"expected {what}, got end of file", last.line, last.col)
        self.pos += 1
        return tok

    def expect_word(self, word: str) -> _Token:
        tok = self.take(f"'{word}'")
        if tok.quoted or tok.text != word:
            raise ParseError(f"expected '{word}', got {tok.text!r}", tok.line, tok.col)
        return tok

    def at_word(self, word: str) -> bool:
        tok = self.peek()
        return tok is not None and not tok.quoted and tok.text == word

    def take_int(self, what: str, lo: int, hi: int) -> int:
        tok = self.take(what)
        if tok.quoted:
            raise ParseError(f"expected {what}, got quoted string", tok.line, tok.col)
        try:
            value = int(tok.text)
        except ValueError:
            raise ParseError(f"expected {what}, got {tok.text!r}", tok.line, tok.col) from None
        if not lo <= value <= hi:
            raise ParseError(f"{what} {value} out of range [{lo}, {hi}]", tok.line, tok.col)
        return value


def parse(text: str) -> StructureFile:
    """Parse structure-file text; raises :class:`ParseError` with position."""
    cur = _Cursor(_tokenize(text))
    cur.expect_word(FORMAT_TAG)
    tok = cur.take("format version")
    if tok.quoted or tok.text != str(FORMAT_VERSION):
        raise ParseError(f"unsupported format version {tok.text!r}", tok.line, tok.col)
    cur.expect_word("n")
    order = cur.take_int("order", 1, 10**6)
    zero = None
    if cur.at_word("zero"):
        cur.take("'zero'")
        zero = cur.take_int("zero id", 0, order - 1)
    tables: list[Table] = []
    for section in ("meet", "join"):
        cur.expect_word(section)
        rows = []
        for _ in range(order):
            rows.append(
                tuple(cur.take_int(f"{section} entry", 0, order - 1) for _ in range(order))
            )
        tables.append(tuple(rows))
    labels: tuple[str, ...] | None = None
    if cur.at_word("labels"):
        cur.take("'labels'")
        got = []
        for _ in range(order):
            tok = cur.take("label string")
            if not tok.quoted:
                raise ParseError(f"labels must be quoted, got {tok.text!r}", tok.line, tok.col)
            got.append(tok.text)
        labels = tuple(got)
    stray = cur.peek()
    if stray is not None:
        raise ParseError(f"unexpected token {stray.text!r}", stray.line, stray.col)
    return StructureFile(order, tables[0], tables[1], zero=zero, labels=labels)


def _quote(label: str) -> str:
    out = label.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{out}"'


def emit(source: FiniteSkewLattice | StructureFile) -> str:
    """Render a structure in the file format; inverse of :func:`parse`."""
    sf = source if isinstance(source, StructureFile) else StructureFile.from_structure(source)
    lines = [f"{FORMAT_TAG} {FORMAT_VERSION}", f"n {sf.order}"]
    if sf.zero is not None:
        lines.append(f"zero {sf.zero}")
    for section, table in (("meet", sf.meet_table), ("join", sf.join_table)):
        lines.append(section)
        lines.extend(" ".join(str(v) for v in row) for row in table)
    if sf.labels is not None:
        lines.append("labels")
        lines.extend(_quote(lab) for lab in sf.labels)
    return "\n".join(lines) + "\n"


def _load(path: str) -> FiniteSkewLattice:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read()).to_structure()


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _print_invalid(S: FiniteSkewLattice) -> int:
    law, where = S.validity.witness
    print(f"not a skew lattice: {law} fails at {where}")
    return 1


# --- subcommand handlers --------------------------------------------------

def _cmd_check(args: argparse.Namespace) -> int:
    S = _load(args.file)
    if not S.validity.ok:
        return _print_invalid(S)
    tail = f", zero {S.zero}" if S.zero is not None else ""
    print(f"valid skew lattice (order {S.order}{tail})")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    S = _load(args.file)
    if not S.validity.ok:
        return _print_invalid(S)
    print(f"order {S.order}")
    z = detect_zero(S)
    print(f"zero {z if z is not None else 'none'}")
    print(f"commutative {_yesno(is_commutative(S))}")
    for name in ("regular", "normal", "distributive", "strongly_distributive", "left_handed", "right_handed"):
        print(f"{name.replace('_', '-')} {_yesno(check_identity(S, name).ok)}")
    print(f"symmetric {_yesno(check_symmetric(S).ok)}")
    for label, checker in (
        ("join-complete", check_join_complete),
        ("bounded-above", check_bounded_above),
        ("extends-to-sections", check_section_extension),
        ("lattice-section-exists", check_section_exists),
    ):
        try:
            print(f"{label} {_yesno(checker(S).ok)}")
        except PreconditionError:
            print(f"{label} n/a (needs normal and symmetric)")
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    S = _load(args.file)
    text = emit(quotient(S).lattice)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_sup(args: argparse.Namespace) -> int:
    S = _load(args.file)
    members = args.elements
    s = sup_natural(S, members)
    if s is None:
        leq = S._leq
        ubs = [u for u in range(S.order) if all(leq[c, u] for c in members)]
        print(f"no supremum of {{{', '.join(str(c) for c in sorted(set(members)))}}};"
              f" upper bounds {{{', '.join(str(u) for u in ubs)}}} have no least element")
        return 1
    tail = f' "{S.labels[s]}"' if S.labels is not None else ""
    print(f"sup {s}{tail}")
    return 0


def _cmd_sections(args: argparse.Namespace) -> int:
    S = _load(args.file)
    found = lattice_sections(S)
    if not found:
        print("no lattice section")
        return 1
    for sec in found:
        print("section " + " ".join(str(i) for i in sec.members))
    return 0


_FILTER_KEYS = {
    "has-zero": "has_zero",
    "strongly-distributive": "strongly_distributive",
    "left-handed": "left_handed",
    "normal": "normal",
    "symmetric": "symmetric",
    "commutative": "commutative",
}


def _parse_filter(parts: list[str]) -> CensusFilter:
    values: dict[str, bool] = {}
    for chunk in parts:
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, val = item.partition("=")
            field = _FILTER_KEYS.get(key.strip().replace("_", "-"))
            if not sep or field is None:
                known = ", ".join(sorted(_FILTER_KEYS))
                raise PreconditionError(f"bad filter {item!r}; use key=yes|no with keys: {known}")
            val = val.strip().lower()
            if val in ("yes", "true"):
                values[field] = True
            elif val in ("no", "false"):
                values[field] = False
            else:
                raise PreconditionError(f"bad filter value {val!r} for {key!r}; use yes or no")
    return CensusFilter(**values)


def _cmd_census(args: argparse.Namespace) -> int:
    filt = _parse_filter(args.filter)
    found = list(enumerate_skew_lattices(args.order, filt))
    if args.count_only:
        print(len(found))
        return 0
    for i, S in enumerate(found, start=1):
        print(f"# structure {i} of {len(found)}, order {args.order}")
        sys.stdout.write(emit(S))
    return 0


def _print_certificate(cert) -> None:
    print(f"{cert.checked}: {'ok' if cert.ok else 'violated'}")
    if cert.witness is not None:
        print(f"  witness {cert.witness}")


def _cmd_paper_pfn(args: argparse.Namespace) -> int:
    m, b = args.sizes
    S = build_pfn_algebra(m, b)
    if not args.verify:
        sys.stdout.write(emit(S))
        return 0
    print(f"partial functions {m} -> {b}: order {S.order}")
    failures = 0
    for line, ok in (
        ("axioms", S.validity.ok),
        ("strongly-distributive", check_identity(S, "strongly_distributive").ok),
        ("left-handed", check_identity(S, "left_handed").ok),
        ("zero", detect_zero(S) is not None),
    ):
        print(f"{line} {'ok' if ok else 'FAILED'}")
        failures += not ok
    shadow = quotient(S).lattice
    boolean = is_boolean_lattice(shadow) and shadow.order == 2**m
    print(f"commutative image boolean of size {2 ** m} {'ok' if boolean else 'FAILED'}")
    failures += not boolean
    return 1 if failures else 0


def _cmd_paper_omega(args: argparse.Namespace) -> int:
    k = args.window
    S = om_window(k)
    if not args.verify:
        sys.stdout.write(emit(S))
        return 0
    print(f"chain with two tops, window depth {k} (order {S.order})")
    print(f"window axioms {'ok' if S.validity.ok else 'FAILED'}")
    no_join = om_verify_no_join_of_naturals(k)
    no_inf = om_verify_no_infimum_of_infs(k)
    _print_certificate(no_join)
    _print_certificate(no_inf)
    return 0 if S.validity.ok and no_join.ok and no_inf.ok else 1


def _cmd_paper_finimg(args: argparse.Namespace) -> int:
    k = args.window
    steps = fi_one_point_chain(k)
    print(f"one-point joins, chain length {k}")
    for step, size in steps:
        print(f"step {step} image-size {size}")
    if not args.verify:
        return 0
    expected = [(i, i + 1) for i in range(k)]
    ok = steps == expected
    print(f"image sizes strictly increasing, size k+1 at step k: {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_paper(args: argparse.Namespace) -> int:
    return {"pfn": _cmd_paper_pfn, "omega": _cmd_paper_omega, "finimg": _cmd_paper_finimg}[
        args.family
    ](args)


def _cmd_theorem(args: argparse.Namespace) -> int:
    S = _load(args.file)
    res = check_theorem_ncframes(S)
    evidence = dict(res.witness)
    print(f"noncommutative frame: {_yesno(evidence['ncframe'])}")
    if evidence["ncframe_evidence"] is not None:
        print(f"  evidence {evidence['ncframe_evidence']}")
    print(f"commutative image is a frame: {_yesno(evidence['shadow_is_frame'])}")
    if evidence["shadow_evidence"] is not None:
        print(f"  evidence {evidence['shadow_evidence']}")
    if res.ok:
        print("verdict: equivalence holds")
        return 0
    print("verdict: equivalence FAILS on this structure")
    return 1


# --- argument parsing ------------------------------------------------------

def _ids_arg(text: str) -> list[int]:
    try:
        ids = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}") from None
    if not ids:
        raise argparse.ArgumentTypeError("expected at least one id")
    return ids


def _sizes_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated sizes, got {text!r}")
    try:
        m, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer sizes, got {text!r}") from None
    return m, b


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlat",
        description="Check, transform and enumerate finite skew lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate the axioms of a structure file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("classify", help="print the full predicate table of a structure")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("quotient", help="emit the maximal commutative image")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_quotient)

    p = sub.add_parser("sup", help="supremum of elements in the natural order")
    p.add_argument("file")
    p.add_argument("--elements", type=_ids_arg, required=True, metavar="i,j,k")
    p.set_defaults(handler=_cmd_sup)

    p = sub.add_parser("sections", help="list all lattice sections")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_sections)

    p = sub.add_parser("census", help="enumerate structures of one order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument(
        "--filter",
        action="append",
        default=[],
        metavar="key=yes|no,...",
        help="require or forbid properties: " + ", ".join(sorted(_FILTER_KEYS)),
    )
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("paper", help="rebuild the worked example families")
    p.add_argument("family", choices=("pfn", "omega", "finimg"))
    p.add_argument("--window", type=int, default=None, help="depth for omega, chain length for finimg")
    p.add_argument("--sizes", type=_sizes_arg, default=(2, 2), metavar="A,B", help="domain,codomain for pfn")
    p.add_argument("--verify", action="store_true", help="run the certificates instead of emitting")
    p.set_defaults(handler=_cmd_paper)

    p = sub.add_parser("theorem", help="frame equivalence between a structure and its image")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_theorem)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "paper" and args.window is None:
        args.window = 6 if args.family == "omega" else 50
    try:
        return args.handler(args)
    except (ParseError, StructureError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
