"""Parsers for scalar expressions, noncommutative polynomials and input files.

Polynomial grammar (whitespace is insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := NUMBER | NAME ['^' INT] | '(' scalar ')' ['^' INT]

A NAME is a letter of the alphabet or a declared parameter; letters may not
appear inside parentheses or after '/'.  Input files are line oriented::

    % comment
    vars x > y          (descending precedence)
    params q            (optional)
    degbound 10
    order right         (optional: left | right)
    variant std         (optional: std | noc | bas)
    gens:
    x^2 - 1
    ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeff import ParamRing, Scalar, param_ring
from .errors import ParseError
from .ordering import HOMOGENIZER, OrderingSpec

__all__ = ["parse_scalar", "parse_poly", "parse_input", "ParsedInput"]

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str):
    toks = []
    for m in _TOKEN.finditer(text):
        col = m.start() + 1
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), col))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", col=col)
            toks.append((ch, ch, col))
    toks.append(("end", None, len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ring: ParamRing, spec: OrderingSpec | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.spec = spec
        self.letters = set(spec.letters) if spec else set()

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", col=tok[2])
        self.i += 1
        return tok

    def expect_end(self):
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", col=tok[2])

    def exponent(self) -> int:
        if self.peek()[0] == "^":
            self.take()
            return self.take("num")[1]
        return 1

    # -- scalars ------------------------------------------------------------
    def scalar_expr(self) -> Scalar:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        val = self.scalar_term()
        val = -val if sign < 0 else val
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.scalar_term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def scalar_term(self) -> Scalar:
        val = self.scalar_factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.scalar_factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def scalar_factor(self) -> Scalar:
        kind, value, col = self.peek()
        if kind == "-":
            self.take()
            return -self.scalar_factor()
        if kind == "num":
            self.take()
            base = self.ring(value)
        elif kind == "name":
            self.take()
            if value not in self.ring.params:
                what = "letter" if value in self.letters else "name"
                raise ParseError(f"{what} {value!r} is not a declared parameter", col=col)
            base = self.ring.gen(value)
        elif kind == "(":
            self.take()
            base = self.scalar_expr()
            self.take(")")
        else:
            what = "end of input" if kind == "end" else repr(value)
            raise ParseError(f"expected a scalar, found {what}", col=col)
        k = self.exponent()
        out = self.ring.one
        for _ in range(k):
            out = out * base
        return out

    # -- polynomials --------------------------------------------------------
    def poly_expr(self):
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.poly_term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.poly_term(sign))
        return terms

    def poly_term(self, sign: int):
        coeff = self.ring(sign)
        word: list[str] = []
        first = True
        while True:
            if not first:
                if self.peek()[0] not in ("*", "/"):
                    break
                op = self.take()[0]
            else:
                op = "*"
            first = False
            kind, value, col = self.peek()
            if kind == "name" and value in self.letters:
                if op == "/":
                    raise ParseError(f"cannot divide by letter {value!r}", col=col)
                self.take()
                word.extend([value] * self.exponent())
            elif kind == "name" and value == HOMOGENIZER and self.spec is not None:
                raise ParseError(f"{HOMOGENIZER!r} is reserved for the homogenizer", col=col)
            elif kind == "name" and value not in self.ring.params:
                raise ParseError(f"unknown letter or parameter {value!r}", col=col)
            else:
                if kind == "num":
                    self.take()
                    f = self.ring(value)
                    f_exp = self.exponent()
                    val = self.ring.one
                    for _ in range(f_exp):
                        val = val * f
                else:
                    val = self.scalar_factor()
                coeff = coeff * val if op == "*" else coeff / val
        return tuple(word), coeff


def parse_scalar(text: str, ring: ParamRing | None = None) -> Scalar:
    p = _Parser(text, ring or param_ring(), None)
    val = p.scalar_expr()
    p.expect_end()
    return val


def parse_poly(text: str, spec: OrderingSpec, ring: ParamRing | None = None):
    from .freealg import FreePoly

    ring = ring or param_ring()
    p = _Parser(text, ring, spec)
    terms = p.poly_expr()
    p.expect_end()
    return FreePoly(terms, spec, ring)


@dataclass
class ParsedInput:
    presentation: object  # corpus.Presentation
    spec: OrderingSpec
    config: object  # engine.EngineConfig, or None when no degbound was given


def parse_input(text: str, name: str = "input") -> ParsedInput:
    from .corpus import Presentation
    from .engine import EngineConfig

    letters: list[str] | None = None
    params: tuple[str, ...] = ()
    bound = None
    order = "right"
    variant = "std"
    gens_lines: list[tuple[int, str]] = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if in_gens:
            gens_lines.append((lineno, line))
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if line.startswith("gens:"):
            in_gens = True
            tail = line[len("gens:"):].strip()
            if tail:
                gens_lines.append((lineno, tail))
        elif head == "vars":
            letters = [a.strip() for a in rest.split(">")]
            if not all(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", a) for a in letters):
                raise ParseError(f"malformed vars directive {rest!r}", line=lineno)
            if HOMOGENIZER in letters:
                raise ParseError(f"letter {HOMOGENIZER!r} is reserved", line=lineno)
            dup = {a for a in letters if letters.count(a) > 1}
            if dup:
                raise ParseError(f"duplicate letter {sorted(dup)[0]!r}", line=lineno)
        elif head == "params":
            params = tuple(rest.split())
            if len(set(params)) != len(params):
                raise ParseError("duplicate parameter", line=lineno)
        elif head == "degbound":
            if not rest.isdigit():
                raise ParseError(f"degbound expects a natural number, got {rest!r}", line=lineno)
            bound = int(rest)
        elif head == "order":
            if rest not in ("left", "right"):
                raise ParseError(f"order must be left or right, got {rest!r}", line=lineno)
            order = rest
        elif head == "variant":
            if rest not in ("std", "noc", "bas"):
                raise ParseError(f"variant must be std, noc or bas, got {rest!r}", line=lineno)
            variant = rest
        elif head == "name":
            name = rest
        else:
            raise ParseError(f"unknown directive {head!r}", line=lineno)
    if letters is None:
        raise ParseError("missing 'vars' directive")
    if set(letters) & set(params):
        raise ParseError(f"names used both as letters and parameters: {sorted(set(letters) & set(params))}")
    if not gens_lines:
        raise ParseError("no generators")
    spec = OrderingSpec(tuple(letters), "direct" if order == "right" else "reverse")
    ring = param_ring(params)
    gens = []
    for lineno, line in gens_lines:
        try:
            gens.append(parse_poly(line, spec, ring))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    pres = Presentation(name, tuple(letters), params, tuple(gens), spec, bound)
    cfg = EngineConfig(weight_bound=bound, variant=variant) if bound is not None else None
    return ParsedInput(pres, spec, cfg)
