"""Univariate helpers: coefficient lists, Euclid, and rational root finding.

Used by the projective point finder.  Coefficient lists are dense,
index = degree, over the ambient field.
"""

from fractions import Fraction

from .poly import mono_deg


def univariate_coeffs(poly, var=0):
    """Dense coefficient list of a polynomial involving only one variable."""
    coeffs = [poly.field.zero] * (poly.total_degree() + 1)
    for e, c in poly.terms.items():
        if mono_deg(e) != e[var]:
            raise ValueError("polynomial is not univariate in the chosen variable")
        coeffs[e[var]] = c
    return _trim(coeffs)


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _u_monic(f, field):
    inv = field.inv(f[-1])
    return [field.mul(c, inv) for c in f]


def _u_mod(f, g, field):
    """Remainder of f modulo g (g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lg_inv = field.inv(g[-1])
    while len(f) - 1 >= dg and f:
        q = field.mul(f[-1], lg_inv)
        shift = len(f) - 1 - dg
        for i, c in enumerate(g):
            f[shift + i] = field.sub(f[shift + i], field.mul(q, c))
        f = _trim(f)
    return f


def _u_gcd(f, g, field):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _u_mod(f, g, field)
    return _u_monic(f, field) if f else f


def univariate_gcd_many(polys, field):
    acc = []
    for f in polys:
        f = _trim(list(f))
        if not f:
            continue
        acc = _u_gcd(acc, f, field) if acc else _u_monic(f, field)
        if len(acc) == 1:
            break
    return acc


def _u_mulmod(a, b, m, field):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _u_mod(_trim(out), m, field)


def _u_powmod(base, exp, m, field):
    result = [field.one]
    base = _u_mod(list(base), m, field)
    while exp:
        if exp & 1:
            result = _u_mulmod(result, base, m, field)
        exp >>= 1
        if exp:
            base = _u_mulmod(base, base, m, field)
    return result


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _roots_qq(coeffs):
    """All rational roots, by the rational root theorem."""
    roots = []
    coeffs = list(coeffs)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(coeffs) <= 1:
        return sorted(set(roots))
    from math import lcm
    scale = lcm(*[c.denominator for c in coeffs])
    ints = [int(c * scale) for c in coeffs]
    a0, an = ints[0], ints[-1]
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _roots_fp(coeffs, field):
    """All roots in F_p via x^p - x splitting; deterministic."""
    p = field.char
    roots = []
    coeffs = _trim(list(coeffs))
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        if 0 not in roots:
            roots.append(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    f = _u_monic(coeffs, field)
    if p <= 17:
        # tiny fields: direct scan
        for a in range(p):
            acc = 0
            for c in reversed(f):
                acc = field.add(field.mul(acc, a), c)
            if not acc:
                roots.append(a)
        return sorted(set(roots))
    xp = _u_powmod([0, 1], p, f, field)
    # gcd(x^p - x, f): the product of the distinct linear factors
    diff = list(xp)
    while len(diff) < 2:
        diff.append(field.zero)
    diff[1] = field.sub(diff[1], field.one)
    lin = _u_gcd(f, _trim(diff), field)

    def split(g):
        if len(g) <= 1:
            return
        if len(g) == 2:
            roots.append(field.neg(g[0]))
            return
        for b in range(p):
            shifted = _u_powmod([b % p, 1], (p - 1) // 2, g, field)
            shifted = list(shifted)
            if not shifted:
                shifted = [field.zero]
            shifted[0] = field.sub(shifted[0], field.one)
            d = _u_gcd(g, _trim(shifted), field)
            if 1 < len(d) < len(g):
                split(d)
                # exact cofactor via repeated remainder-free division
                split(_u_quotient(g, d, field))
                return
        raise RuntimeError("equal-degree splitting failed")

    split(lin)
    return sorted(set(roots))


def _u_quotient(f, g, field):
    f = list(f)
    dg = len(g) - 1
    lg_inv = field.inv(g[-1])
    q = [field.zero] * (len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = field.mul(f[-1], lg_inv)
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = field.sub(f[shift + i], field.mul(c, gc))
        f = _trim(f)
    return _trim(q)


def univariate_roots(coeffs, field):
    """All base-field roots of the coefficient list, sorted."""
    coeffs = _trim(list(coeffs))
    if not coeffs:
        raise ValueError("zero polynomial has every element as a root")
    if field.char == 0:
        return _roots_qq(coeffs)
    return _roots_fp(coeffs, field)
