"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples; a polynomial is an immutable-by-convention
mapping {exponents: coefficient} tagged with its arity and field.  All
operations return new objects, so values are safe to share.
"""

import itertools


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector a - b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def monomials_of_degree(arity, n):
    """All exponent tuples of total degree n, deterministically ordered."""
    if arity == 1:
        return [(n,)]
    out = []
    for head in range(n, -1, -1):
        for tail in monomials_of_degree(arity - 1, n - head):
            out.append((head,) + tail)
    return out


class MonomialOrder:
    """A term order given as a sort key; the leading term is the maximum.

    kind is one of 'grevlex', 'lex', 'elim'.  precedence lists variable
    indices from most to least significant.  For 'elim', block is the
    number of leading precedence entries forming the eliminated block.
    """

    def __init__(self, kind, arity, precedence=None, block=0):
        if precedence is None:
            precedence = tuple(range(arity))
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(arity)):
            raise ValueError("precedence must be a permutation of variables")
        self.kind = kind
        self.arity = arity
        self.precedence = precedence
        self.block = block
        if kind == "grevlex":
            self.key = self._grevlex_key
        elif kind == "lex":
            self.key = self._lex_key
        elif kind == "elim":
            if not 0 < block < arity:
                raise ValueError("elimination block must split the variables")
            self.key = self._elim_key
        else:
            raise ValueError("unknown order kind %r" % kind)

    def _grevlex_key(self, exp):
        pe = [exp[i] for i in self.precedence]
        return (sum(exp), tuple(-e for e in reversed(pe)))

    def _lex_key(self, exp):
        return tuple(exp[i] for i in self.precedence)

    def _elim_key(self, exp):
        head = [exp[i] for i in self.precedence[: self.block]]
        tail = [exp[i] for i in self.precedence[self.block:]]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )

    def __repr__(self):
        return "MonomialOrder(%r, %d, %r)" % (self.kind, self.arity, self.precedence)


def grevlex(arity, precedence=None):
    return MonomialOrder("grevlex", arity, precedence)


def lex(arity, precedence=None):
    return MonomialOrder("lex", arity, precedence)


def elimination_order(arity, eliminate):
    """Block order eliminating the given variables (grevlex within blocks)."""
    eliminate = tuple(eliminate)
    keep = tuple(i for i in range(arity) if i not in eliminate)
    return MonomialOrder("elim", arity, eliminate + keep, block=len(eliminate))


class Polynomial:
    __slots__ = ("terms", "arity", "field")

    def __init__(self, terms, arity, field):
        self.terms = {e: c for e, c in terms.items() if c}
        self.arity = arity
        self.field = field

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity, field):
        return cls({}, arity, field)

    @classmethod
    def constant(cls, value, arity, field):
        return cls({(0,) * arity: field.coerce(value)}, arity, field)

    @classmethod
    def variable(cls, index, arity, field):
        exp = tuple(1 if i == index else 0 for i in range(arity))
        return cls({exp: field.one}, arity, field)

    @classmethod
    def from_terms(cls, pairs, arity, field):
        terms = {}
        for exp, c in pairs:
            c = field.coerce(c)
            if exp in terms:
                c = field.add(terms[exp], c)
            terms[exp] = c
        return cls(terms, arity, field)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_deg(e) == 0 for e in self.terms)

    def total_degree(self):
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {mono_deg(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))
        if self.field != other.field:
            raise ValueError("coefficient field mismatch")

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = add(terms[e], c)
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return Polynomial(terms, self.arity, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        return Polynomial({e: neg(c) for e, c in self.terms.items()},
                          self.arity, self.field)

    def __mul__(self, other):
        self._check(other)
        field = self.field
        add, mul = field.add, field.mul
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = mul(ca, cb)
                if e in out:
                    s = add(out[e], c)
                    if s:
                        out[e] = s
                    else:
                        del out[e]
                else:
                    out[e] = c
        return Polynomial(out, self.arity, self.field)

    def scalar_mul(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial.zero(self.arity, self.field)
        mul = self.field.mul
        return Polynomial({e: mul(co, c) for e, co in self.terms.items()},
                          self.arity, self.field)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.arity, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.arity == other.arity
                and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- calculus and substitution -------------------------------------

    def differentiate(self, var):
        field = self.field
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            ne = e[:var] + (k - 1,) + e[var + 1:]
            nc = field.mul(c, field.from_int(k))
            if nc:
                out[ne] = field.add(out[ne], nc) if ne in out else nc
                if not out[ne]:
                    del out[ne]
        return Polynomial(out, self.arity, field)

    def evaluate(self, point):
        if len(point) != self.arity:
            raise ValueError("point arity mismatch")
        field = self.field
        point = [field.coerce(v) for v in point]
        total = field.zero
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = field.mul(v, field.pow(point[i], k))
            total = field.add(total, v)
        return total

    def substitute_value(self, var, value):
        """Substitute a field element for one variable; arity unchanged."""
        field = self.field
        value = field.coerce(value)
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                c = field.mul(c, field.pow(value, k))
            if not c:
                continue
            ne = e[:var] + (0,) + e[var + 1:]
            if ne in out:
                s = field.add(out[ne], c)
                if s:
                    out[ne] = s
                else:
                    del out[ne]
            else:
                out[ne] = c
        return Polynomial(out, self.arity, field)

    def substitute(self, values):
        """Substitute a polynomial for every variable (same target ring)."""
        if len(values) != self.arity:
            raise ValueError("substitution arity mismatch")
        target_arity = values[0].arity
        field = self.field
        powers = [{0: Polynomial.constant(1, target_arity, field)} for _ in values]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * values[i]
            return cache[k]

        result = Polynomial.zero(target_arity, field)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, target_arity, field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def dehomogenize(self, var):
        """Set the chosen variable to 1 and drop it from the ring."""
        out = {}
        field = self.field
        for e, c in self.terms.items():
            ne = e[:var] + e[var + 1:]
            if ne in out:
                s = field.add(out[ne], c)
                if s:
                    out[ne] = s
                else:
                    del out[ne]
            else:
                out[ne] = c
        return Polynomial(out, self.arity - 1, field)

    def homogenize(self, var, target_degree):
        """Insert a new variable at index var, homogenizing to target_degree."""
        if target_degree < self.total_degree():
            raise ValueError("target degree %d below degree %d"
                             % (target_degree, self.total_degree()))
        out = {}
        for e, c in self.terms.items():
            ne = e[:var] + (target_degree - mono_deg(e),) + e[var:]
            out[ne] = c
        return Polynomial(out, self.arity + 1, self.field)

    def translate(self, point):
        """Shift of variables: result(x) = self(x + point)."""
        if len(point) != self.arity:
            raise ValueError("point arity mismatch")
        field = self.field
        values = []
        for i, a in enumerate(point):
            v = Polynomial.variable(i, self.arity, field)
            a = field.coerce(a)
            if a:
                v = v + Polynomial.constant(a, self.arity, field)
            values.append(v)
        return self.substitute(values)

    # -- order-dependent views ----------------------------------------

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def leading_term(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        if c == self.field.one:
            return self
        return self.scalar_mul(self.field.inv(c))

    def __repr__(self):
        from .parsing import format_polynomial
        return format_polynomial(self)


def poly_arith(op, f, g):
    """Dispatch form of the basic arithmetic, for callers driven by tags."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scalar_mul":
        return f.scalar_mul(g)
    raise ValueError("unknown op %r" % op)


def default_varnames(arity):
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple("x%d" % i for i in range(arity))


def random_polynomial(rng, arity, degree, field, terms=6, homogeneous=False):
    """Deterministic random polynomial for tests (seeded rng)."""
    pairs = []
    for _ in range(terms):
        if homogeneous:
            exps = monomials_of_degree(arity, degree)
            e = exps[rng.randrange(len(exps))]
        else:
            d = rng.randint(0, degree)
            exps = monomials_of_degree(arity, d)
            e = exps[rng.randrange(len(exps))]
        c = rng.randint(-5, 5)
        if c == 0:
            c = 1
        pairs.append((e, field.from_int(c)))
    return Polynomial.from_terms(pairs, arity, field)
