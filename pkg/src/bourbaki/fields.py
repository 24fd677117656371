"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Field elements are plain Python values (Fraction for the rationals, int
residues in [0, p) for a prime field).  A field object supplies the
arithmetic so polynomial code stays generic; zero is always falsy, which
the polynomial layer relies on.
"""

from fractions import Fraction

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rationals; elements are Fraction values."""

    name = "qq"
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def coerce(x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def div(a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    @staticmethod
    def pow(a, n):
        return a ** n

    @staticmethod
    def sort_key(a):
        return a

    @staticmethod
    def to_str(a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")

    def __repr__(self):
        return "QQ"


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """F_p with int residues in [0, p)."""

    char_nonzero = True

    def __init__(self, p=DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.char = p
        self.name = "fp=%d" % p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        raise TypeError("cannot coerce %r into %s" % (x, self.name))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        return pow(a, n, self.p)

    @staticmethod
    def sort_key(a):
        return a

    @staticmethod
    def to_str(a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def field_from_name(text):
    """Parse a field selector: 'qq' or 'fp=<p>' (bare 'fp' uses the default)."""
    text = text.strip().lower()
    if text == "qq":
        return QQ
    if text == "fp":
        return PrimeField()
    if text.startswith("fp="):
        return PrimeField(int(text[3:]))
    raise ValueError("unknown field %r (expected qq or fp=<p>)" % text)
