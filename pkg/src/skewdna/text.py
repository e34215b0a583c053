"""Text syntax for field, ring and skew-polynomial values.

Grammar (whitespace is ignored, ``-`` means ``+`` in characteristic 2)::

    expr   := term (('+' | '-') term)*
    term   := factor (['*'] factor)*
    factor := 'b' ['^' uint] | 'u' uint | '0' | '1' | '(' expr ')'
            | 'crt' '(' expr (',' expr)* ')'

Polynomials add ``x ['^' uint]`` as a factor, or use the list form
``poly[c0; c1; ...; ct]``.  In the sparse form every top-level term must
have a distinct degree, so multi-term coefficients need parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import Field
from .ring import Ring, RingElement
from .skewpoly import SkewPoly, skew_mul


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<HERE>>{text[pos:]}")


_TOKEN = re.compile(
    r"\s*(?:(?P<crt>crt)|(?P<poly>poly)|(?P<u>u_?\d+)|(?P<num>\d+)|(?P<name>[bx])|(?P<op>[-+*^()\[\];,]))"
)


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ring: Ring, allow_x: bool):
        self.text = text
        self.ring = ring
        self.field: Field = ring.field
        self.allow_x = allow_x
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        return ParseError(msg, self.text, (tok or self.tok).pos)

    def accept(self, value: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            got = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, got {got!r}")

    def uint(self) -> int:
        if self.tok.kind != "num":
            raise self.error("expected an unsigned integer exponent")
        v = int(self.tok.value)
        self.i += 1
        return v

    def starts_factor(self) -> bool:
        t = self.tok
        if t.kind in ("u", "num", "crt"):
            return True
        if t.kind == "name":
            return t.value == "b" or self.allow_x
        return t.kind == "op" and t.value == "("

    # ring expressions -------------------------------------------------

    def expr(self) -> RingElement:
        acc = self.term()
        while self.accept("+") or self.accept("-"):
            acc = acc + self.term()
        return acc

    def term(self) -> RingElement:
        acc = self.factor()
        while True:
            if self.accept("*"):
                acc = acc * self.factor()
            elif self.starts_factor() and not self._at_x():
                acc = acc * self.factor()
            else:
                return acc

    def _at_x(self) -> bool:
        return self.tok.kind == "name" and self.tok.value == "x"

    def factor(self) -> RingElement:
        t = self.tok
        ring = self.ring
        if t.kind == "name" and t.value == "b":
            self.i += 1
            e = self.uint() if self.accept("^") else 1
            return ring.constant(self.field.exp(e))
        if t.kind == "u":
            self.i += 1
            idx = int(t.value.lstrip("u_"))
            if not 1 <= idx <= ring.s:
                raise self.error(f"variable u{idx} is undefined for s={ring.s}", t)
            return ring.variable(idx)
        if t.kind == "num":
            if t.value not in ("0", "1"):
                raise self.error(f"only the constants 0 and 1 are allowed, got {t.value}", t)
            self.i += 1
            return ring.one if t.value == "1" else ring.zero
        if t.kind == "crt":
            self.i += 1
            self.expect("(")
            comps = [self.constant_expr()]
            while self.accept(","):
                comps.append(self.constant_expr())
            close = self.tok
            self.expect(")")
            if len(comps) != ring.size:
                raise self.error(f"crt(...) needs {ring.size} components, got {len(comps)}", close)
            return ring.element(comps)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self._at_x():
            raise self.error("x is not allowed inside a coefficient")
        raise self.error(f"unexpected {t.value or 'end of input'!r}")

    def constant_expr(self) -> int:
        start = self.tok
        v = self.expr()
        if len(set(v.c)) != 1:
            raise self.error("crt components must be field constants", start)
        return v.c[0]

    # polynomials ------------------------------------------------------

    def poly(self) -> SkewPoly:
        ring = self.ring
        if self.tok.kind == "poly":
            self.i += 1
            self.expect("[")
            coeffs: list[RingElement] = []
            if not self.accept("]"):
                coeffs.append(self.expr())
                while self.accept(";"):
                    coeffs.append(self.expr())
                self.expect("]")
            return SkewPoly(ring, coeffs)
        terms: dict[int, SkewPoly] = {}
        while True:
            start = self.tok
            deg, p = self.poly_term()
            if deg in terms:
                raise self.error(f"duplicate term of degree {deg}", start)
            terms[deg] = p
            if not (self.accept("+") or self.accept("-")):
                break
        out = SkewPoly(ring, [])
        for p in terms.values():
            out = out + p
        return out

    def poly_term(self) -> tuple[int, SkewPoly]:
        ring = self.ring
        acc = SkewPoly.monomial(ring, 0)
        deg = 0
        first = True
        while first or self.accept("*") or self.starts_factor():
            first = False
            if self._at_x():
                self.i += 1
                e = self.uint() if self.accept("^") else 1
                acc = skew_mul(acc, SkewPoly.monomial(ring, e))
                deg += e
            else:
                acc = skew_mul(acc, SkewPoly.constant(ring, self.factor()))
        return deg, acc

    def finish(self) -> None:
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")


def parse_ring_expr(text: str, ring: Ring) -> RingElement:
    p = _Parser(text, ring, allow_x=False)
    v = p.expr()
    p.finish()
    return v


def parse_poly_expr(text: str, ring: Ring) -> SkewPoly:
    p = _Parser(text, ring, allow_x=True)
    v = p.poly()
    p.finish()
    return v


def parse_field_expr(text: str, field: Field) -> int:
    """Parse a constant such as ``b^7 + 1`` into a field element."""
    from .ring import build_ring

    v = parse_ring_expr(text, build_ring(field, 1))
    if v.c[0] != v.c[1]:
        raise ValueError(f"{text!r} is not a field constant")
    return v.c[0]


# printing -----------------------------------------------------------------


def format_ring(a: RingElement, compact: bool = False) -> str:
    """Monomial-basis rendering, e.g. ``b^7 + b*u2 + b*u3``."""
    ring = a.ring
    fmt = ring.field.format
    terms = []
    for b, t in zip(ring.to_monomial(a), ring.tuples):
        if not b:
            continue
        mono = "*".join(f"u{e + 1}" for e, r in enumerate(t) if r)
        coef = fmt(b)
        if not mono:
            terms.append(coef)
        elif coef == "1":
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    if not terms:
        return "0"
    return ("+" if compact else " + ").join(terms)


def format_crt(a: RingElement) -> str:
    fmt = a.ring.field.format
    return "crt(" + ", ".join(fmt(x) for x in a.c) + ")"


def format_poly(f: SkewPoly, compact: bool = False) -> str:
    """Lowest degree first: ``1 + (b^7 + b*u2)*x + x^3``."""
    plus = "+" if compact else " + "
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        body = format_ring(c, compact)
        if "+" in body:
            body = f"({body})"
        if i == 0:
            terms.append(body)
            continue
        xp = "x" if i == 1 else f"x^{i}"
        terms.append(xp if body == "1" else f"{body}*{xp}")
    return plus.join(terms) if terms else "0"


def format_message(msg, compact: bool = True) -> str:
    return "[" + ";".join(format_ring(m, compact) for m in msg) + "]"
