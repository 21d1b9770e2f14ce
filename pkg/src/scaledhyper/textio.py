"""Text and JSON encodings for complex numbers, elements and matrices.

Complex literals use an ``i`` suffix: ``3``, ``-2.5i``, ``1+3i``, ``1e-3-4i``,
``i``. Elements are written ``(a,b)``; a bare complex literal ``a`` means
``(a,0)``.
"""
from __future__ import annotations

import re

from . import ring
from .errors import NonFiniteError, ParseError
from .realization import Matrix2C
from .ring import Hypercomplex, as_complex

DEFAULT_PRECISION = 12

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_NUM})(?:(?P<isign>[+-])(?P<im>{_NUM})?i)?   # a, a+bi, a-i
      | (?P<pure>[+-]?(?:{_NUM})?)i                               # bi, -i, i
    )\s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ParseError(f"not a complex literal: {text!r}")
    if m.group("pure") is not None:
        coeff = m.group("pure")
        if coeff in ("", "+"):
            im = 1.0
        elif coeff == "-":
            im = -1.0
        else:
            im = float(coeff)
        value = complex(0.0, im)
    else:
        re_part = float(m.group("re"))
        im = 0.0
        if m.group("isign"):
            im = float(m.group("im")) if m.group("im") else 1.0
            if m.group("isign") == "-":
                im = -im
        value = complex(re_part, im)
    try:
        return as_complex(value)
    except NonFiniteError as exc:
        raise ParseError(str(exc)) from exc


def parse_hypercomplex(text: str) -> Hypercomplex:
    """Parse ``(a,b)`` or a bare complex literal ``a``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError(f"expected (a,b), got {text!r}")
        return Hypercomplex(parse_complex(parts[0]), parse_complex(parts[1]))
    return Hypercomplex(parse_complex(s), 0)


def _fmt(v: float, precision: int) -> str:
    s = f"{v:.{precision}g}"
    return "0" if s == "-0" else s


def render_complex(z: complex, precision: int = DEFAULT_PRECISION) -> str:
    """``x+yi`` with ``precision`` significant digits; pure reals have no ``i``."""
    re_s = _fmt(z.real, precision)
    if z.imag == 0:
        return re_s
    im_s = _fmt(abs(z.imag), precision)
    sign = "-" if z.imag < 0 else "+"
    return f"{re_s}{sign}{im_s}i"


def render_hypercomplex(x: Hypercomplex, precision: int = DEFAULT_PRECISION) -> str:
    return f"({render_complex(x.a, precision)},{render_complex(x.b, precision)})"


def _round(v: float, precision: int | None) -> float:
    if precision is None:
        return v
    return float(f"{v:.{precision}g}")


def complex_to_json(z: complex, precision: int | None = None) -> list[float]:
    return [_round(z.real, precision), _round(z.imag, precision)]


def complex_from_json(pair) -> complex:
    try:
        re_part, im_part = pair
        return as_complex(complex(float(re_part), float(im_part)))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"expected [re, im], got {pair!r}") from exc


def hypercomplex_to_json(x: Hypercomplex, precision: int | None = None) -> dict:
    return {"a": complex_to_json(x.a, precision), "b": complex_to_json(x.b, precision)}


def hypercomplex_from_json(obj) -> Hypercomplex:
    if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
        raise ParseError(f'expected {{"a": [re, im], "b": [re, im]}}, got {obj!r}')
    return Hypercomplex(complex_from_json(obj["a"]), complex_from_json(obj["b"]))


def matrix_to_json(M: Matrix2C, precision: int | None = None) -> list:
    return [[complex_to_json(z, precision) for z in row] for row in M.rows()]


def matrix_from_json(rows) -> Matrix2C:
    try:
        (p, q), (r, s) = rows
    except (TypeError, ValueError) as exc:
        raise ParseError(f"expected a 2x2 row-major matrix, got {rows!r}") from exc
    return Matrix2C(*(complex_from_json(e) for e in (p, q, r, s)))


# Expressions for the ``eval`` command:
#   expr   := term (("+" | "-") term)*
#   term   := unary ("*" unary)*
#   unary  := "-" unary | atom
#   atom   := "(" a "," b ")" | "(" expr ")" | "inv(" expr ")" | number
# ``*`` binds tighter than ``+``/``-``; operators of equal rank group left.

_NUMBER_RE = re.compile(rf"(?:{_NUM})i?|i")


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self):
        node = self.expr()
        if self.peek():
            raise self.error("unexpected trailing input")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() == "*":
            self.pos += 1
            node = ("*", node, self.unary())
        return node

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return ("neg", self.unary())
        return self.atom()

    def atom(self):
        ch = self.peek()
        if not ch:
            raise self.error("unexpected end of input")
        if self.text.startswith("inv(", self.pos):
            self.pos += 3
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return ("inv", inner)
        if ch == "(":
            close = self._matching_paren(self.pos)
            body = self.text[self.pos + 1 : close]
            if "," in body and "(" not in body:
                self.pos = close + 1
                return ("lit", parse_hypercomplex("(" + body + ")"))
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        m = _NUMBER_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected a literal")
        self.pos = m.end()
        return ("lit", Hypercomplex(parse_complex(m.group(0)), 0))

    def _matching_paren(self, start: int) -> int:
        depth = 0
        for k in range(start, len(self.text)):
            if self.text[k] == "(":
                depth += 1
            elif self.text[k] == ")":
                depth -= 1
                if depth == 0:
                    return k
        raise self.error("unbalanced parentheses")


def parse_expression(text: str):
    """Parse an ``eval`` expression into a small tuple tree."""
    return _ExprParser(text).parse()


def evaluate_expression(t: float, node, tol: float | None = None) -> Hypercomplex:
    """Evaluate a tree from :func:`parse_expression` in ``H_t``."""
    kind = node[0]
    if kind == "lit":
        return node[1]
    if kind == "neg":
        return -evaluate_expression(t, node[1], tol)
    if kind == "inv":
        x = evaluate_expression(t, node[1], tol)
        return ring.inverse(t, x) if tol is None else ring.inverse(t, x, tol)
    left = evaluate_expression(t, node[1], tol)
    right = evaluate_expression(t, node[2], tol)
    if kind == "+":
        return left + right
    if kind == "-":
        return left - right
    return ring.mul(t, left, right)
