"""Polynomial expression parsing and canonical printing.

Grammar:
    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := integer ['/' integer] | variable ['^' nat] | '(' expr ')' ['^' nat]

Variables are exactly x, y, z; whitespace is ignored; '*' is explicit.
The '/' form is a leniency for exact rational coefficients; canonical
output never emits it for integer-normalized polynomials.
"""

from fractions import Fraction

from .errors import ParseError
from .fields import QQ
from .poly import Polynomial, grevlex, mono_deg

VARIABLES = {"x": 0, "y": 1, "z": 2}


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.pos = 0
        self.field = field

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self):
        p = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return p

    def expr(self):
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        p = self.term()
        if negate:
            p = -p
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                p = p + self.term()
            elif ch == "-":
                self.take()
                p = p - self.term()
            else:
                return p

    def term(self):
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.take()
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                if self.field.char:
                    value = self.field.div(self.field.from_int(num),
                                           self.field.from_int(den))
                else:
                    value = Fraction(num, den)
                return Polynomial.constant(value, 3, self.field)
            return Polynomial.constant(self.field.from_int(num), 3, self.field)
        if ch == "(":
            self.take()
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return self._maybe_power(p)
        if ch.isalpha():
            if ch not in VARIABLES:
                self.error("unknown variable %r" % ch)
            self.take()
            p = Polynomial.variable(VARIABLES[ch], 3, self.field)
            return self._maybe_power(p)
        self.error("expected factor")

    def _maybe_power(self, p):
        if self.peek() == "^":
            self.take()
            return p ** self.integer()
        return p


def parse_polynomial(text, field=QQ):
    """Parse an expression into a 3-variable polynomial over the field."""
    return _Parser(text, field).parse()


def _coeff_parts(c, field):
    """(negative, magnitude-string) for a coefficient."""
    if field.char == 0:
        neg = c < 0
        mag = -c if neg else c
        if mag.denominator == 1:
            return neg, str(mag.numerator)
        return neg, "%d/%d" % (mag.numerator, mag.denominator)
    return False, str(c)


def format_polynomial(poly, varnames=None, order=None):
    """Canonical string: terms descending under grevlex, explicit * and ^."""
    if poly.is_zero():
        return "0"
    if varnames is None:
        varnames = ("x", "y", "z")[: poly.arity] if poly.arity <= 3 else tuple(
            "x%d" % i for i in range(poly.arity))
    if order is None:
        order = grevlex(poly.arity)
    pieces = []
    for exp, c in poly.sorted_terms(order):
        neg, mag = _coeff_parts(c, poly.field)
        factors = []
        for i, k in enumerate(exp):
            if k == 1:
                factors.append(varnames[i])
            elif k > 1:
                factors.append("%s^%d" % (varnames[i], k))
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = mag + "*" + "*".join(factors)
        pieces.append(("-" if neg else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


def integer_normalized(poly, order=None):
    """Scale a QQ polynomial to primitive integer coefficients, positive lead.

    Prime-field polynomials are returned unchanged.
    """
    from math import gcd, lcm

    if poly.is_zero() or poly.field.char != 0:
        return poly
    dens = [c.denominator for c in poly.terms.values()]
    nums = [abs(c.numerator) for c in poly.terms.values()]
    scale = Fraction(lcm(*dens) if len(dens) > 1 else dens[0],
                     gcd(*nums) if len(nums) > 1 else nums[0])
    out = poly.scalar_mul(scale)
    if order is None:
        order = grevlex(poly.arity)
    _, lead = out.leading_term(order)
    if lead < 0:
        out = -out
    return out
