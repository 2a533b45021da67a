"""Polynomials with Gaussian-integer coefficients.

Input syntax (whitespace insignificant, variable fixed to "x"):

    poly    := term (("+"|"-") term)*
    term    := coeff? ("x" ("^" uint)?)?     at least one of coeff, "x"
    coeff   := uint | "i" | uint "i" | "(" gauss ")"
    gauss   := int (("+"|"-") uint? "i")?
    int     := "-"? uint
    uint    := digit+

A coefficient-list alternative "[a0, a1, ..., am]" of gauss literals is also
accepted (descending powers).  Gauss literals additionally accept the bare
imaginary forms "i", "-i", "2i" so that lists and CLI flags read naturally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import I, ONE, ZERO, GaussInt, gauss_to_text


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegreeZero(ValueError):
    """The parsed polynomial is constant."""


class LeadingZero(ValueError):
    """The leading coefficient summed to zero."""


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Coefficients a0..am in descending powers, a0 nonzero, degree >= 1."""

    coeffs: tuple[GaussInt, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise DegreeZero("polynomial must have degree >= 1")
        if self.coeffs[0].is_zero():
            raise LeadingZero("leading coefficient is zero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return polynomial_to_text(self)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected '{ch}'", self.pos)
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""


def _parse_uint(sc: _Scanner) -> int:
    if not sc.peek().isdigit():
        raise ParseError("expected digits", sc.pos)
    start = sc.pos
    while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        sc.pos += 1
    return int(sc.text[start:sc.pos])


def _parse_gauss(sc: _Scanner) -> GaussInt:
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    if sc.peek() == "i":
        sc.take()
        return GaussInt(0, sign)
    value = sign * _parse_uint(sc)
    if sc.peek() == "i":
        sc.take()
        return GaussInt(0, value)
    if sc.peek() in "+-":
        imag_sign = -1 if sc.take() == "-" else 1
        imag = _parse_uint(sc) if sc.peek().isdigit() else 1
        sc.expect("i")
        return GaussInt(value, imag_sign * imag)
    return GaussInt(value, 0)


def parse_gauss_literal(text: str) -> GaussInt:
    """Parse a standalone Gaussian-integer literal such as "i" or "1-2i"."""
    sc = _Scanner(text)
    z = _parse_gauss(sc)
    if not sc.at_end():
        raise ParseError("trailing input after Gaussian integer", sc.pos)
    return z


def _parse_coeff(sc: _Scanner) -> GaussInt:
    ch = sc.peek()
    if ch == "(":
        sc.take()
        z = _parse_gauss(sc)
        sc.expect(")")
        return z
    if ch == "i":
        sc.take()
        return I
    value = _parse_uint(sc)
    if sc.peek() == "i":
        sc.take()
        return GaussInt(0, value)
    return GaussInt(value, 0)


def _parse_term(sc: _Scanner) -> tuple[GaussInt, int]:
    coeff = None
    ch = sc.peek()
    if ch.isdigit() or ch == "i" or ch == "(":
        coeff = _parse_coeff(sc)
    power = 0
    has_x = False
    if sc.peek() == "x":
        sc.take()
        has_x = True
        power = 1
        if sc.peek() == "^":
            sc.take()
            power = _parse_uint(sc)
    if coeff is None and not has_x:
        raise ParseError("expected a term", sc.pos)
    return (coeff if coeff is not None else ONE), power


def _parse_coeff_list(sc: _Scanner) -> Polynomial:
    sc.expect("[")
    coeffs = [_parse_gauss(sc)]
    while sc.peek() == ",":
        sc.take()
        coeffs.append(_parse_gauss(sc))
    sc.expect("]")
    if not sc.at_end():
        raise ParseError("trailing input after coefficient list", sc.pos)
    if len(coeffs) < 2:
        raise DegreeZero("coefficient list describes a constant")
    if coeffs[0].is_zero():
        raise LeadingZero("leading coefficient is zero")
    return Polynomial(tuple(coeffs))


def parse_polynomial(text: str) -> Polynomial:
    """Parse expression or coefficient-list syntax into a Polynomial.

    Missing powers get coefficient 0, repeated powers are summed.  Raises
    ParseError, DegreeZero or LeadingZero.
    """
    sc = _Scanner(text)
    if sc.peek() == "[":
        return _parse_coeff_list(sc)
    sums: dict[int, GaussInt] = {}
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        coeff, power = _parse_term(sc)
        if sign < 0:
            coeff = -coeff
        sums[power] = sums.get(power, ZERO) + coeff
        if sc.at_end():
            break
        op = sc.peek()
        if op not in "+-":
            raise ParseError("expected '+' or '-' between terms", sc.pos)
        sc.take()
        sign = -1 if op == "-" else 1
    m = max(sums)
    if m == 0:
        raise DegreeZero("polynomial is constant")
    coeffs = tuple(sums.get(p, ZERO) for p in range(m, -1, -1))
    if coeffs[0].is_zero():
        raise LeadingZero("leading coefficient summed to zero")
    return Polynomial(coeffs)


def _term_text(c: GaussInt, power: int) -> tuple[str, str]:
    if power == 0:
        xpart = ""
    elif power == 1:
        xpart = "x"
    else:
        xpart = f"x^{power}"
    if c.re != 0 and c.im != 0:
        return "+", f"({gauss_to_text(c)}){xpart}"
    value = c.re if c.im == 0 else c.im
    sign = "+" if value > 0 else "-"
    mag = abs(value)
    if c.im != 0:
        body = ("i" if mag == 1 else f"{mag}i") + xpart
    elif mag == 1 and xpart:
        body = xpart
    else:
        body = str(mag) + xpart
    return sign, body


def polynomial_to_text(p: Polynomial) -> str:
    """Render in the expression syntax; parse(polynomial_to_text(p)) == p."""
    parts = []
    for idx, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        parts.append(_term_text(c, p.degree - idx))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def evaluate_residual(p: Polynomial, z: complex) -> float:
    """|p(z)| by Horner evaluation in floating arithmetic."""
    acc = p.coeffs[0].to_complex()
    for c in p.coeffs[1:]:
        acc = acc * z + c.to_complex()
    return abs(acc)
