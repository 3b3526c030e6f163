"""Recursive-descent parser for the ASCII formula syntax.

::

    formula := quant | impl
    quant   := ("E" | "A") IDENT "." formula
    impl    := disj [ ("->" | "<->") impl ]
    disj    := conj ( "|" conj )*
    conj    := neg ( "&" neg )*
    neg     := "!" neg | "(" formula ")" | "true" | "false" | atom
    atom    := term RELOP term
    term    := prod (("+" | "-") prod)*
    prod    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := primary ["^" NAT]
    primary := INT | IDENT | "(" term ")"

An unparenthesized power ``a^n`` inside a product contributes ``n`` copies
of ``a`` to that product, so ``x^2*y`` and ``x*x*y`` give the same tree.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormulaSyntaxError
from .formula import (
    FALSE, TRUE, Add, And, Atom, Const, Exists, FalseF, Forall, Iff, Implies,
    Mul, Neg, Not, Or, Rel, TrueF, Var,
)

KEYWORDS = {"E", "A", "true", "false"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<relv><=v|<v|~v)(?![A-Za-z0-9_$])
  | (?P<op><->|->|<=|!=|[-+*^().&|!=<~])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_$]*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "kw", "end"
    text: str
    pos: int


def tokenize(text: str) -> list:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[i]!r}", text, i)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group(kind)
            if kind == "relv":
                kind = "op"
            elif kind == "ident" and tok in KEYWORDS:
                kind = "kw"
            out.append(Token(kind, tok, i))
        i = m.end()
    out.append(Token("end", "", len(text)))
    return out


RELOPS = {r.value: r for r in Rel}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.furthest = (0, "unexpected token", set())

    # -- helpers ------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected):
        tok = self.tok
        msg = "unexpected end of input" if tok.kind == "end" else f"unexpected token {tok.text!r}"
        if tok.pos >= self.furthest[0]:
            exp = set(expected) | (self.furthest[2] if tok.pos == self.furthest[0] else set())
            self.furthest = (tok.pos, msg, exp)
        raise FormulaSyntaxError(self.furthest[1], self.text, self.furthest[0], self.furthest[2])

    def at(self, *texts) -> bool:
        return self.tok.kind in ("op", "kw") and self.tok.text in texts

    def expect(self, text):
        if not self.at(text):
            self.fail([repr(text)])
        tok = self.tok
        self.i += 1
        return tok

    # -- formulas -----------------------------------------------------
    def formula(self):
        if self.at("E", "A"):
            q = self.tok
            self.i += 1
            if self.tok.kind != "ident":
                self.fail(["variable"])
            var = self.tok.text
            self.i += 1
            self.expect(".")
            body = self.formula()
            cls = Exists if q.text == "E" else Forall
            return cls(var, body, pos=q.pos)
        return self.impl()

    def impl(self):
        left = self.disj()
        if self.at("->", "<->"):
            op = self.tok
            self.i += 1
            right = self.impl()
            cls = Implies if op.text == "->" else Iff
            return cls(left, right, pos=op.pos)
        return left

    def disj(self):
        first = self.conj()
        args = [first]
        while self.at("|"):
            self.i += 1
            args.append(self.conj())
        return first if len(args) == 1 else Or(tuple(args), pos=getattr(first, "pos", None))

    def conj(self):
        first = self.neg()
        args = [first]
        while self.at("&"):
            self.i += 1
            args.append(self.neg())
        return first if len(args) == 1 else And(tuple(args), pos=getattr(first, "pos", None))

    def neg(self):
        tok = self.tok
        if self.at("!"):
            self.i += 1
            return Not(self.neg(), pos=tok.pos)
        if self.at("true"):
            self.i += 1
            return TrueF(pos=tok.pos)
        if self.at("false"):
            self.i += 1
            return FalseF(pos=tok.pos)
        if self.at("("):
            save = self.i
            try:
                return self.atom()
            except FormulaSyntaxError:
                self.i = save
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        return self.atom()

    def atom(self):
        start = self.tok.pos
        left = self.term()
        if not (self.tok.kind == "op" and self.tok.text in RELOPS):
            self.fail(["relation"] + ["+", "-", "*", "^"])
        rel = RELOPS[self.tok.text]
        self.i += 1
        right = self.term()
        return Atom(left, rel, right, pos=start)

    # -- terms --------------------------------------------------------
    def term(self):
        start = self.tok.pos
        args = [self.prod()]
        while self.at("+", "-"):
            op = self.tok
            self.i += 1
            p = self.prod()
            args.append(Neg(p, pos=op.pos) if op.text == "-" else p)
        return args[0] if len(args) == 1 else Add(tuple(args), pos=start)

    def prod(self):
        start = self.tok.pos
        factors = self.unary_factors()
        while self.at("*"):
            self.i += 1
            factors.extend(self.unary_factors())
        if len(factors) == 1:
            return factors[0]
        if not factors:
            return Const(1, pos=start)
        return Mul(tuple(factors), pos=start)

    def unary_factors(self) -> list:
        """Factors contributed by one ``unary``; bare powers are expanded."""
        if self.at("-"):
            tok = self.tok
            self.i += 1
            return [Neg(self.unary_term(), pos=tok.pos)]
        base, n = self.power()
        return [base] * n

    def unary_term(self):
        if self.at("-"):
            tok = self.tok
            self.i += 1
            return Neg(self.unary_term(), pos=tok.pos)
        base, n = self.power()
        if n == 0:
            return Const(1, pos=base.pos)
        return base if n == 1 else Mul((base,) * n, pos=base.pos)

    def power(self):
        base = self.primary()
        if self.at("^"):
            self.i += 1
            if self.tok.kind != "int":
                self.fail(["natural number"])
            n = int(self.tok.text)
            self.i += 1
            return base, n
        return base, 1

    def primary(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Const(int(tok.text), pos=tok.pos)
        if tok.kind == "ident":
            self.i += 1
            return Var(tok.text, pos=tok.pos)
        if self.at("("):
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        self.fail(["integer", "variable", "'('", "'-'"])


def parse(text: str):
    """Parse a formula; raises :class:`FormulaSyntaxError` with position."""
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "end":
        p.fail(["'&'", "'|'", "'->'", "'<->'", "end of input"])
    return f


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    if p.tok.kind != "end":
        p.fail(["end of input"])
    return t


__all__ = ["parse", "parse_term", "tokenize", "TRUE", "FALSE"]
