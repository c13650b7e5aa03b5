"""Textual term language: parser and canonical printer.

Grammar:

    term  := comp ;  comp := atom ( "." atom )* ;
    atom  := "id(" nat ")" | "unit" | "counit" | "swap" | "h" | "hbar"
           | "nabla(" nat ")" | "delta(" nat ")" | "unitk(" nat ")" | "counitk(" nat ")"
           | "pad(" nat "," term "," nat ")" | "plus(" term "," term ")"
           | "eta(" nat "," nat "," nat ")" | "etabar(" nat "," nat "," nat ")"
           | "iota(" nat "," nat ";" nat "," nat ")" | "zero(" nat "," nat ")"
           | "union(" term "," term ")" | "(" term ")"

`g . f` applies f first.  An optional header line "%category PF|EF|RB"
pins the signature; an explicit `category=` argument overrides the
header.  Otherwise the least signature covering the atoms is used:
relational atoms force RB, `h`/`eta` force PF, `hbar`/`etabar` force EF
unless PF is already forced (then they expand through the directed
bridge), and purely neutral text defaults to PF.

Shared atoms are reinterpreted per signature: in RB files `unit`,
`counit` and `swap` stand for the one-point insertion, deletion and
the derived transposition.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from splitrel.terms import (
    ArrowTerm,
    Category,
    Comp,
    Counit,
    CounitK,
    DeltaK,
    H,
    HBar,
    Id,
    NablaK,
    Pad,
    Swap,
    Unit,
    UnitK,
    eta_term,
    etabar_term,
    hbar_in_pf,
    iota_term,
    pad,
    plus,
    tau_rb,
    type_of,
    union_term,
    zero_term,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, NAT, DOT, COMMA, SEMI, LP, RP, EOF
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<WS>\s+)|(?P<NAT>\d+)|(?P<NAME>[a-z]+)|(?P<DOT>\.)"
    r"|(?P<COMMA>,)|(?P<SEMI>;)|(?P<LP>\()|(?P<RP>\))"
)

_DIRECTIVE_RE = re.compile(r"%category\s+(PF|EF|RB)\s*$")

_RB_ATOMS = {"nabla", "delta", "unitk", "counitk", "iota", "union"}
_PF_ATOMS = {"h", "eta"}
_EF_ATOMS = {"hbar", "etabar"}


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    start = text.rfind("\n", 0, pos) + 1
    return line, pos - start + 1


def _extract_header(text: str) -> tuple[str, Category | None]:
    # Directive lines are blanked in place so token offsets keep
    # pointing into the original text.
    lines = text.split("\n")
    header: Category | None = None
    seen_term = False
    for idx, line in enumerate(lines):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("%"):
            lno = idx + 1
            if seen_term:
                raise ParseError("header directive after term text", lno, 1)
            m = _DIRECTIVE_RE.fullmatch(stripped)
            if not m:
                raise ParseError(f"unknown directive {stripped!r}", lno, 1)
            if header is not None:
                raise ParseError("duplicate %category directive", lno, 1)
            header = Category[m.group(1)]
            lines[idx] = " " * len(line)
        else:
            seen_term = True
    return "\n".join(lines), header


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        pos = m.end()
        kind = m.lastgroup
        if kind != "WS":
            tokens.append(_Token(kind, m.group(), m.start()))
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


def _resolve_category(
    tokens: list[_Token],
    declared: Category | None,
    text: str,
) -> Category:
    names = {t.text for t in tokens if t.kind == "NAME"}
    wants_rb = names & _RB_ATOMS
    wants_pf = names & _PF_ATOMS
    wants_ef = names & _EF_ATOMS
    if declared is not None:
        return declared
    if wants_rb:
        if wants_pf or wants_ef:
            bad = sorted(wants_pf | wants_ef)[0]
            tok = next(t for t in tokens if t.text == bad)
            line, col = _line_col(text, tok.pos)
            raise ParseError(
                f"{bad!r} cannot appear in a relational term", line, col
            )
        return Category.RB
    if wants_pf:
        return Category.PF
    if wants_ef:
        return Category.EF
    return Category.PF


class _Parser:
    def __init__(self, text: str, tokens: list[_Token], category: Category):
        self.text = text
        self.tokens = tokens
        self.category = category
        self.index = 0

    def error(self, message: str, token: _Token | None = None) -> ParseError:
        token = token or self.tokens[self.index]
        line, col = _line_col(self.text, token.pos)
        return ParseError(message, line, col)

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise self.error(f"expected {what}, found {token.text or 'end of input'!r}")
        return self.advance()

    def nat(self) -> int:
        return int(self.expect("NAT", "a number").text)

    def term(self) -> ArrowTerm:
        factors = [self.atom()]
        while self.peek().kind == "DOT":
            self.advance()
            factors.append(self.atom())
        result = factors[-1]
        for f in reversed(factors[:-1]):
            result = Comp(f, result)
        return result

    def atom(self) -> ArrowTerm:
        token = self.peek()
        if token.kind == "LP":
            self.advance()
            inner = self.term()
            self.expect("RP", "')'")
            return inner
        if token.kind != "NAME":
            raise self.error(
                f"expected a term, found {token.text or 'end of input'!r}"
            )
        self.advance()
        try:
            return self.named_atom(token)
        except ParseError:
            raise
        except ValueError as exc:
            raise self.error(str(exc), token) from exc

    def args(self, count: int) -> list[int]:
        self.expect("LP", "'('")
        values = [self.nat()]
        for _ in range(count - 1):
            self.expect("COMMA", "','")
            values.append(self.nat())
        self.expect("RP", "')'")
        return values

    def named_atom(self, token: _Token) -> ArrowTerm:
        name = token.text
        cat = self.category
        if name == "id":
            (n,) = self.args(1)
            return Id(n)
        if name == "unit":
            return UnitK(1) if cat is Category.RB else Unit()
        if name == "counit":
            return CounitK(1) if cat is Category.RB else Counit()
        if name == "swap":
            return tau_rb() if cat is Category.RB else Swap()
        if name == "h":
            if cat is not Category.PF:
                raise self.error(
                    f"'h' is not a {cat.value} generator", token
                )
            return H()
        if name == "hbar":
            if cat is Category.RB:
                raise self.error("'hbar' is not a RB generator", token)
            return hbar_in_pf() if cat is Category.PF else HBar()
        if name in ("nabla", "delta", "unitk", "counitk"):
            if cat is not Category.RB:
                raise self.error(
                    f"{name!r} is not a {cat.value} generator", token
                )
            (k,) = self.args(1)
            leaf = {
                "nabla": NablaK,
                "delta": DeltaK,
                "unitk": UnitK,
                "counitk": CounitK,
            }[name]
            return leaf(k)
        if name == "pad":
            self.expect("LP", "'('")
            left = self.nat()
            self.expect("COMMA", "','")
            body = self.term()
            self.expect("COMMA", "','")
            right = self.nat()
            self.expect("RP", "')'")
            return pad(left, body, right)
        if name == "plus":
            self.expect("LP", "'('")
            f = self.term()
            self.expect("COMMA", "','")
            g = self.term()
            self.expect("RP", "')'")
            return plus(f, g)
        if name == "eta":
            if cat is not Category.PF:
                raise self.error(f"'eta' is not a {cat.value} generator", token)
            i, j, n = self.args(3)
            return eta_term(i, j, n)
        if name == "etabar":
            if cat is Category.RB:
                raise self.error("'etabar' is not a RB generator", token)
            i, j, n = self.args(3)
            if cat is Category.PF:
                return Comp(eta_term(i, j, n), eta_term(j, i, n))
            return etabar_term(i, j, n)
        if name == "iota":
            if cat is not Category.RB:
                raise self.error(
                    f"'iota' is not a {cat.value} generator", token
                )
            self.expect("LP", "'('")
            i = self.nat()
            self.expect("COMMA", "','")
            j = self.nat()
            self.expect("SEMI", "';'")
            n = self.nat()
            self.expect("COMMA", "','")
            m = self.nat()
            self.expect("RP", "')'")
            return iota_term(i, j, n, m)
        if name == "zero":
            n, m = self.args(2)
            return zero_term(n, m, cat)
        if name == "union":
            if cat is not Category.RB:
                raise self.error(
                    f"'union' is not a {cat.value} generator", token
                )
            self.expect("LP", "'('")
            f = self.term()
            self.expect("COMMA", "','")
            g = self.term()
            self.expect("RP", "')'")
            return union_term(f, g)
        raise self.error(f"unknown atom {name!r}", token)


def parse_with_category(
    text: str, category: Category | str | None = None
) -> tuple[ArrowTerm, Category]:
    """Parse a term and resolve its signature.

    `category` (a `Category` or its name) overrides any `%category`
    header; with neither, the signature is inferred from the atoms.
    """
    if isinstance(category, str):
        try:
            category = Category[category.upper()]
        except KeyError:
            raise ParseError(f"unknown category {category!r}") from None
    body, header = _extract_header(text)
    tokens = _tokenize(body)
    if tokens[0].kind == "EOF":
        raise ParseError("empty input")
    resolved = _resolve_category(tokens, category or header, body)
    parser = _Parser(body, tokens, resolved)
    term = parser.term()
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise parser.error(f"unexpected trailing input {trailing.text!r}")
    type_of(term)
    return term, resolved


def parse(text: str, category: Category | str | None = None) -> ArrowTerm:
    """Parse a term; see `parse_with_category`."""
    return parse_with_category(text, category)[0]


def print_term(t: ArrowTerm) -> str:
    """Canonical text: right-nested bare chains, parens only where needed.

    Structural round-trip `parse(print_term(t)) == t` holds for terms in
    the canonical shape produced by the builders (`Pad` only above
    non-identity generator leaves, no sugar nodes).
    """
    match t:
        case Id(n):
            return f"id({n})"
        case Unit():
            return "unit"
        case Counit():
            return "counit"
        case Swap():
            return "swap"
        case H():
            return "h"
        case HBar():
            return "hbar"
        case NablaK(k):
            return f"nabla({k})"
        case DeltaK(k):
            return f"delta({k})"
        case UnitK(k):
            return f"unitk({k})"
        case CounitK(k):
            return f"counitk({k})"
        case Pad(left, body, right):
            return f"pad({left}, {print_term(body)}, {right})"
        case Comp(after, before):
            head = print_term(after)
            if isinstance(after, Comp):
                head = f"({head})"
            return f"{head} . {print_term(before)}"
        case _:
            raise TypeError(f"not an arrow term: {t!r}")
