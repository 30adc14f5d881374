"""Reading and writing integer polynomials as text.

Two input grammars are accepted:

* a bracketed ascending coefficient list, ``[c0, c1, ..., cn]``;
* a sum of terms in ``x``: ``k``, ``k*x^e``, ``kx^e``, ``x^e``, ``x``, each
  with an optional sign.  Repeated exponents are summed.

Whitespace is ignored.  Errors report the byte offset and the set of
tokens that would have been accepted there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .zpoly import IntPoly


class ParseError(ValueError):
    def __init__(self, position: int, expected: set[str], text: str = ""):
        self.position = position
        self.expected = frozenset(expected)
        got = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(
            f"at offset {position}: expected one of {sorted(self.expected)}, got {got}"
        )


@dataclass(frozen=True)
class PolyExpr:
    source: str
    poly: IntPoly


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def number(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(start, {"digit"}, self.text)
        return int(self.text[start : self.pos])

    def fail(self, expected: set[str]):
        raise ParseError(self.pos, expected, self.text)


def _signed_int(r: _Reader) -> int:
    sign = 1
    if r.take("-"):
        sign = -1
    elif r.take("+"):
        pass
    if not r.peek().isdigit():
        r.fail({"digit", "+", "-"} if sign == 1 else {"digit"})
    return sign * r.number()


def _parse_list(r: _Reader) -> list[int]:
    out: list[int] = []
    if r.take("]"):
        return out
    while True:
        out.append(_signed_int(r))
        if r.take("]"):
            return out
        if not r.take(","):
            r.fail({",", "]"})


def _parse_var_power(r: _Reader) -> int:
    r.pos += 1  # the variable
    if r.take("^"):
        if not r.peek().isdigit():
            r.fail({"digit"})
        return r.number()
    return 1


def _parse_expr(r: _Reader) -> list[int]:
    terms: dict[int, int] = {}
    first = True
    while True:
        sign = 1
        ch = r.peek()
        if ch in "+-" and ch:
            r.pos += 1
            sign = -1 if ch == "-" else 1
        elif not first:
            r.fail({"+", "-", "end of input"})
        ch = r.peek()
        if ch.isdigit():
            coef = r.number()
            explicit = r.take("*")
            if r.peek() in ("x", "X") and r.peek():
                e = _parse_var_power(r)
            elif explicit:
                r.fail({"x"})
            else:
                e = 0
        elif ch in ("x", "X") and ch:
            coef = 1
            e = _parse_var_power(r)
        else:
            r.fail({"digit", "x"} if not first or ch in "+-" else {"digit", "x", "+", "-", "["})
        terms[e] = terms.get(e, 0) + sign * coef
        first = False
        if r.peek() == "":
            break
    if not terms:
        return []
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] += c
    return out


def parse_poly(text: str) -> PolyExpr:
    r = _Reader(text)
    if r.peek() == "":
        r.fail({"digit", "x", "+", "-", "["})
    if r.take("["):
        cs = _parse_list(r)
        if r.peek() != "":
            r.fail({"end of input"})
    else:
        cs = _parse_expr(r)
    return PolyExpr(text, IntPoly(cs))


def render(p: IntPoly) -> str:
    """Descending sparse form, e.g. ``x^3-7x^2+14x-7``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "x" if e == 1 else f"x^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out
