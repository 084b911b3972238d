"""Family expression language.

    expr := "T(" ints ")" | "T[" int "," int ";" int "," int "]"
          | "BT^(" int ")(" ints ")" | "BS*(" ints ")"
          | "C3(" int ";" int "," int ";" int "," int ")"
          | "C3(" int "," int "," int ")" | "L(" expr ")"

Whitespace is ignored everywhere.  ``render`` emits the canonical spelling.
"""

from __future__ import annotations

from .families import (
    BiStarlikeBSStar,
    BiStarlikeBT,
    BrokenUnitArithmetic,
    FamilyError,
    FamilySpec,
    LineOf,
    Starlike,
    TriangleFiveArm,
    TriangleThreeArm,
)


class FamilySyntaxError(FamilyError):
    def __init__(self, offset: int, message: str) -> None:
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def offset(self) -> int:
        return len(self.text[: self.pos].encode())

    def fail(self, message: str):
        raise FamilySyntaxError(self.offset(), message)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            self.fail(f"expected {literal!r}, found {found!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if not digits.lstrip("+-"):
            self.pos = start
            self.fail("expected an integer")
        return int(digits)

    def int_list(self, close: str) -> list[int]:
        values = [self.integer()]
        while self.peek(","):
            self.expect(",")
            values.append(self.integer())
        self.expect(close)
        return values

    def expr(self) -> FamilySpec:
        if self.peek("L("):
            self.expect("L(")
            inner = self.expr()
            self.expect(")")
            return LineOf(inner)
        if self.peek("BT^("):
            self.expect("BT^(")
            shoulder = self.integer()
            self.expect(")")
            self.expect("(")
            return BiStarlikeBT(shoulder, tuple(self.int_list(")")))
        if self.peek("BS*("):
            self.expect("BS*(")
            values = self.int_list(")")
            if any(y - x != 1 for x, y in zip(values, values[1:])):
                raise FamilyError("BS* arm lengths must be consecutive increasing integers")
            return BiStarlikeBSStar(values[0], len(values) - 1)
        if self.peek("C3("):
            self.expect("C3(")
            first = self.integer()
            if self.peek(";"):
                self.expect(";")
                k2 = self.integer()
                self.expect(",")
                k3 = self.integer()
                self.expect(";")
                k4 = self.integer()
                self.expect(",")
                k5 = self.integer()
                self.expect(")")
                return TriangleFiveArm(first, (k2, k3), (k4, k5))
            self.expect(",")
            second = self.integer()
            self.expect(",")
            third = self.integer()
            self.expect(")")
            return TriangleThreeArm((first, second, third))
        if self.peek("T["):
            self.expect("T[")
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect(";")
            c = self.integer()
            self.expect(",")
            d = self.integer()
            self.expect("]")
            return BrokenUnitArithmetic(a, b, c, d)
        if self.peek("T("):
            self.expect("T(")
            return Starlike(tuple(self.int_list(")")))
        self.fail("expected one of T( T[ BT^( BS*( C3( L(")


def parse_family(text: str) -> FamilySpec:
    p = _Parser(text)
    spec = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        p.fail("unexpected trailing input")
    return spec


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


def render(spec: FamilySpec) -> str:
    if isinstance(spec, Starlike):
        return f"T({_ints(spec.arms)})"
    if isinstance(spec, BrokenUnitArithmetic):
        return f"T[{spec.a},{spec.b};{spec.c},{spec.d}]"
    if isinstance(spec, BiStarlikeBT):
        return f"BT^({spec.shoulder})({_ints(spec.arms)})"
    if isinstance(spec, BiStarlikeBSStar):
        return f"BS*({_ints(spec.arms)})"
    if isinstance(spec, TriangleFiveArm):
        return f"C3({spec.k1};{_ints(spec.pair1)};{_ints(spec.pair2)})"
    if isinstance(spec, TriangleThreeArm):
        return f"C3({_ints(spec.arms)})"
    if isinstance(spec, LineOf):
        return f"L({render(spec.inner)})"
    raise TypeError(f"not a family spec: {spec!r}")
