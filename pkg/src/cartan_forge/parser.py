"""Recursive-descent parser for differential polynomials and forms.

Grammar (``*`` and ``&`` are both the exterior product, which for functions
is ordinary multiplication)::

    sum     := term (("+" | "-") term)*
    term    := unary (("*" | "&" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" INT)?
    atom    := INT | NAME | NAME "_" SUB | FAMILY "[" LABEL "]" ("_" SUB)?
             | "d" NAME | "th" "[" NAME | FAMILY "[" LABEL "]" (";" SUB)? "]"
             | "d" "(" sum ")" | "(" sum ")"
    SUB     := "{" letters "}" | letters      (concatenated independent names)

Division is only by non-zero constants; powers only of functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import Expr
from .forms import DForm, de_rham, wedge
from .jet import AUX_FAMILIES, AUX_PHI, BASE, FIBER, JetSpace, Q, var_id

RESERVED = {"d", "th", "phi", "G", "psi"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class Token:
    kind: str  # INT NAME OP SUB EOF
    text: str
    line: int
    column: int


def _is_name_start(ch: str) -> bool:
    return ch.isascii() and ch.isalpha()


def _is_name_char(ch: str) -> bool:
    return ch.isascii() and ch.isalnum()


def tokenize(text: str, line0: int = 1) -> list[Token]:
    tokens = []
    i = 0
    line, col = line0, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if _is_name_start(ch):
            j = i
            while j < n and _is_name_char(text[j]):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch == "_":
            j = i + 1
            if j < n and text[j] == "{":
                k = text.find("}", j)
                if k < 0:
                    raise ParseError("unterminated jet index '{'", line, start_col)
                sub = text[j + 1:k]
                if not sub or not all(_is_name_char(c) for c in sub):
                    raise ParseError(f"malformed jet index '{{{sub}}}'", line, start_col)
                tokens.append(Token("SUB", sub, line, start_col))
                col += k + 1 - i
                i = k + 1
                continue
            k = j
            while k < n and _is_name_char(text[k]):
                k += 1
            if k == j:
                raise ParseError("malformed jet index: empty subscript", line, start_col)
            tokens.append(Token("SUB", text[j:k], line, start_col))
            col += k - i
            i = k
            continue
        if ch in "+-*/^&()[];":
            tokens.append(Token("OP", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


def split_subscript(space: JetSpace, sub: str) -> tuple | None:
    """Multi-index for a concatenation of independent names (greedy)."""
    alpha = [0] * space.n
    names = sorted(((name, k) for k, name in enumerate(space.independent)),
                   key=lambda p: -len(p[0]))
    i = 0
    while i < len(sub):
        for name, k in names:
            if sub.startswith(name, i):
                alpha[k] += 1
                i += len(name)
                break
        else:
            return None
    return tuple(alpha)


class Parser:
    def __init__(self, space: JetSpace, text: str, line0: int = 1):
        self.space = space
        self.tokens = tokenize(text, line0)
        self.pos = 0
        self._dnames = {"d" + name: k for k, name in enumerate(space.independent)}

    # helpers ----------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "OP" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")

    # grammar ----------------------------------------------------------
    def parse(self) -> DForm:
        if self.tok.kind == "EOF":
            self.error("empty expression")
        value = self.sum()
        if self.tok.kind != "EOF":
            self.error(f"unexpected token {self.tok.text!r}")
        return value

    def sum(self) -> DForm:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> DForm:
        value = self.unary()
        while True:
            if self.accept("*") or self.accept("&"):
                value = wedge(value, self.unary())
            elif self.tok.kind == "OP" and self.tok.text == "/":
                tok = self.tok
                self.pos += 1
                rhs = self.unary()
                c = _constant(rhs)
                if c is None:
                    self.error("division is only defined by non-zero constants", tok)
                if not c:
                    self.error("division by zero", tok)
                value = value * (1 / c)
            else:
                return value

    def unary(self) -> DForm:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> DForm:
        base_tok = self.tok
        value = self.atom()
        if self.tok.kind == "OP" and self.tok.text == "^":
            self.pos += 1
            if self.tok.kind != "INT":
                self.error("exponent must be a non-negative integer literal")
            e = int(self.tok.text)
            self.pos += 1
            if value.degrees() - {0}:
                self.error("only functions can be raised to a power", base_tok)
            f = value.coefficient(())
            value = DForm.function(f ** e)
        return value

    def atom(self) -> DForm:
        tok = self.tok
        sp = self.space
        if tok.kind == "INT":
            self.pos += 1
            return DForm.constant(sp, Q(int(tok.text)))
        if self.accept("("):
            value = self.sum()
            self.expect(")")
            return value
        if tok.kind != "NAME":
            self.error(f"unexpected token {tok.text or 'end of input'!r}")
        self.pos += 1
        name = tok.text
        if name == "d" and self.tok.kind == "OP" and self.tok.text == "(":
            self.pos += 1
            value = self.sum()
            self.expect(")")
            return de_rham(value)
        if name == "th":
            return self._theta(tok)
        if name in AUX_FAMILIES:
            kind, j = self._aux_head(name, tok)
            alpha = self._optional_sub(tok)
            return DForm.function(Expr.var(sp, var_id(kind, j, alpha)))
        if name in sp.independent:
            if self.tok.kind == "SUB":
                self.error(f"independent variable {name!r} cannot carry a jet index")
            return DForm.function(Expr.x(sp, sp.independent.index(name)))
        if name in sp.dependent:
            alpha = self._optional_sub(tok)
            return DForm.function(Expr.var(sp, var_id(FIBER, sp.dependent.index(name), alpha)))
        if name in self._dnames:
            return DForm.dx(sp, self._dnames[name])
        self.error(f"unknown variable name {name!r}", tok)

    def _optional_sub(self, tok: Token) -> tuple:
        if self.tok.kind != "SUB":
            return self.space.zero_index()
        sub_tok = self.tok
        self.pos += 1
        alpha = split_subscript(self.space, sub_tok.text)
        if alpha is None:
            self.error(f"malformed jet index {sub_tok.text!r}", sub_tok)
        return alpha

    def _aux_head(self, family: str, tok: Token) -> tuple[int, int]:
        kind = AUX_FAMILIES[family]
        self.expect("[")
        label = self.tok
        if label.kind not in ("NAME", "INT"):
            self.error("expected a component label")
        self.pos += 1
        self.expect("]")
        if kind == AUX_PHI:
            if label.text not in self.space.dependent:
                self.error(f"phi component must name a dependent variable, got {label.text!r}", label)
            return kind, self.space.dependent.index(label.text)
        if label.kind != "INT" or int(label.text) < 1:
            self.error(f"{family} component must be a positive integer", label)
        return kind, int(label.text) - 1

    def _theta(self, tok: Token) -> DForm:
        sp = self.space
        self.expect("[")
        head = self.tok
        if head.kind != "NAME":
            self.error("expected a dependent variable inside th[...]")
        self.pos += 1
        if head.text in AUX_FAMILIES:
            kind, j = self._aux_head(head.text, head)
        elif head.text in sp.dependent:
            kind, j = FIBER, sp.dependent.index(head.text)
        else:
            self.error(f"unknown dependent variable {head.text!r}", head)
        alpha = sp.zero_index()
        if self.accept(";"):
            sub = self.tok
            if sub.kind != "NAME":
                self.error("malformed jet index in th[...]")
            self.pos += 1
            alpha = split_subscript(sp, sub.text)
            if alpha is None:
                self.error(f"malformed jet index {sub.text!r}", sub)
        self.expect("]")
        return DForm.covector(sp, var_id(kind, j, alpha))


def _constant(value: DForm):
    if value.degrees() - {0}:
        return None
    f = value.coefficient(())
    return f.constant_value() if f.is_constant() else None


def parse_form(space: JetSpace, text: str, line0: int = 1) -> DForm:
    return Parser(space, text, line0).parse()


def parse(space: JetSpace, text: str, line0: int = 1) -> Expr:
    """Parse a differential polynomial; covectors are rejected."""
    p = Parser(space, text, line0)
    value = p.parse()
    if value.degrees() - {0}:
        raise ParseError("expected a function, found a differential form", line0, 1)
    return value.coefficient(())


def check_names(space: JetSpace) -> None:
    """Reject names that collide with reserved tokens or make jet indices ambiguous."""
    dnames = {"d" + x for x in space.independent}
    for name in space.independent + space.dependent:
        if not name or not _is_name_start(name[0]) or not all(_is_name_char(c) for c in name):
            raise ValueError(f"invalid variable name {name!r}")
        if name in RESERVED or name in dnames:
            raise ValueError(f"variable name {name!r} collides with a reserved token")
    for a in space.independent:
        for b in space.independent:
            if a != b and b.startswith(a):
                raise ValueError(f"independent names {a!r} and {b!r} make jet indices ambiguous")


__all__ = ["ParseError", "parse", "parse_form", "check_names", "split_subscript", "BASE"]
