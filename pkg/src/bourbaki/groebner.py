"""Groebner-basis engine: ideals, modules, syzygies, and derived invariants.

The core works on "vector polynomials": dicts mapping (position, exponents)
to coefficients, covering both ideals (single position) and submodules of a
free module.  Public wrappers speak Polynomial / ModuleVector.
"""

from .errors import NotZeroDimensional, SaturationCapExceeded
from .poly import (Polynomial, elimination_order, grevlex, mono_deg,
                   mono_div, mono_divides, mono_lcm, mono_mul)


# ---------------------------------------------------------------------------
# core on vector polynomials
# ---------------------------------------------------------------------------

def _module_key(order):
    """Position-over-term key; lower positions dominate, max = leading."""
    mkey = order.key

    def key(term):
        pos, exp = term
        return (-pos, mkey(exp))

    return key


def _vp_lead(vp, key):
    return max(vp, key=key)


def _vp_monic(vp, lead, field):
    c = vp[lead]
    if c == field.one:
        return vp
    inv = field.inv(c)
    mul = field.mul
    return {t: mul(co, inv) for t, co in vp.items()}


def _vp_reduce(vp, basis, key, field):
    """Full normal form of vp against basis entries (lead, terms), made monic."""
    sub, mul = field.sub, field.mul
    result = {}
    work = dict(vp)
    while work:
        t = max(work, key=key)
        pos, exp = t
        c = work.pop(t)
        reducer = None
        for (lpos, lexp), terms in basis:
            if lpos == pos and mono_divides(lexp, exp):
                reducer = ((lpos, lexp), terms)
                break
        if reducer is None:
            result[t] = c
            continue
        (lpos, lexp), terms = reducer
        shift = mono_div(exp, lexp)
        for (gpos, gexp), gc in terms.items():
            if gpos == lpos and gexp == lexp:
                continue
            nt = (gpos, mono_mul(gexp, shift))
            nc = mul(c, gc)
            if nt in work:
                s = sub(work[nt], nc)
                if s:
                    work[nt] = s
                else:
                    del work[nt]
            else:
                work[nt] = field.neg(nc)
    return result


def _vp_spair(f, flead, g, glead, field):
    """S-vector of monic f, g whose leads share a position."""
    pos = flead[0]
    lcm = mono_lcm(flead[1], glead[1])
    sf = mono_div(lcm, flead[1])
    sg = mono_div(lcm, glead[1])
    sub = field.sub
    out = {}
    for (p, e), c in f.items():
        out[(p, mono_mul(e, sf))] = c
    for (p, e), c in g.items():
        t = (p, mono_mul(e, sg))
        if t in out:
            s = sub(out[t], c)
            if s:
                out[t] = s
            else:
                del out[t]
        else:
            out[t] = field.neg(c)
    return out


def _vp_buchberger(vectors, key, field, is_ideal):
    """Reduced Groebner basis of the submodule generated by the vectors."""
    G = []       # monic vector polynomials
    leads = []   # their leading terms
    for v in vectors:
        if v:
            lead = _vp_lead(v, key)
            G.append(_vp_monic(v, lead, field))
            leads.append(lead)

    pending = set()
    for i in range(len(G)):
        for j in range(i):
            if leads[i][0] == leads[j][0]:
                pending.add((j, i))

    def pair_key(pair):
        i, j = pair
        lcm = mono_lcm(leads[i][1], leads[j][1])
        return (mono_deg(lcm), key((leads[i][0], lcm)), i, j)

    while pending:
        i, j = min(pending, key=pair_key)
        pending.discard((i, j))
        pos = leads[i][0]
        lcm = mono_lcm(leads[i][1], leads[j][1])
        # product criterion (ideals only; invalid for general modules)
        if is_ideal and lcm == mono_mul(leads[i][1], leads[j][1]):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or leads[k][0] != pos:
                continue
            if (mono_divides(leads[k][1], lcm)
                    and (min(i, k), max(i, k)) not in pending
                    and (min(j, k), max(j, k)) not in pending):
                skip = True
                break
        if skip:
            continue
        s = _vp_spair(G[i], leads[i], G[j], leads[j], field)
        h = _vp_reduce(s, list(zip(leads, G)), key, field)
        if not h:
            continue
        lead = _vp_lead(h, key)
        h = _vp_monic(h, lead, field)
        n = len(G)
        G.append(h)
        leads.append(lead)
        for m in range(n):
            if leads[m][0] == lead[0]:
                pending.add((m, n))

    # minimalize: drop entries whose lead is divisible by another lead
    order_idx = sorted(range(len(G)), key=lambda i: key(leads[i]))
    kept = []
    for i in order_idx:
        pos, exp = leads[i]
        if any(leads[k][0] == pos and mono_divides(leads[k][1], exp)
               for k in kept):
            continue
        kept.append(i)
    # tail-reduce each survivor against the others
    reduced = []
    for i in kept:
        others = [(leads[k], G[k]) for k in kept if k != i]
        h = _vp_reduce(G[i], others, key, field)
        reduced.append(_vp_monic(h, _vp_lead(h, key), field))
    reduced.sort(key=lambda v: key(_vp_lead(v, key)))
    return reduced


# ---------------------------------------------------------------------------
# polynomial <-> vector polynomial conversions
# ---------------------------------------------------------------------------

def _poly_to_vp(p, pos=0):
    return {(pos, e): c for e, c in p.terms.items()}

def _vp_to_polys(vp, ncomp, arity, field):
    comps = [{} for _ in range(ncomp)]
    for (pos, e), c in vp.items():
        comps[pos][e] = c
    return tuple(Polynomial(t, arity, field) for t in comps)


# ---------------------------------------------------------------------------
# ideal-level API
# ---------------------------------------------------------------------------

class GroebnerBasis:
    """A reduced Groebner basis with its order."""

    def __init__(self, elements, order, field, arity):
        self.elements = list(elements)
        self.order = order
        self.field = field
        self.arity = arity
        self.reduced = True
        self._basis = [((0, g.leading_term(order)[0]), _poly_to_vp(g))
                       for g in self.elements]
        self._key = _module_key(order)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def normal_form(self, f):
        vp = _vp_reduce(_poly_to_vp(f), self._basis, self._key, self.field)
        return _vp_to_polys(vp, 1, self.arity, self.field)[0]

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self):
        return (len(self.elements) == 1
                and self.elements[0].is_constant()
                and not self.elements[0].is_zero())


def buchberger(gens, order=None):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("empty generator set")
    arity, field = gens[0].arity, gens[0].field
    for g in gens:
        if g.arity != arity or g.field != field:
            raise ValueError("mixed rings in generator set")
    if order is None:
        order = grevlex(arity)
    key = _module_key(order)
    out = _vp_buchberger([_poly_to_vp(g) for g in gens], key, field, True)
    elements = [_vp_to_polys(vp, 1, arity, field)[0] for vp in out]
    return GroebnerBasis(elements, order, field, arity)


def normal_form(f, gb):
    return gb.normal_form(f)


def ideal_contains(gens_or_gb, f):
    gb = gens_or_gb if isinstance(gens_or_gb, GroebnerBasis) else buchberger(gens_or_gb)
    return gb.contains(f)


def ideal_equal(A, B):
    """Two-sided membership equality of ideals given by generator lists."""
    gba = A if isinstance(A, GroebnerBasis) else buchberger(A)
    gbb = B if isinstance(B, GroebnerBasis) else buchberger(B)
    return (all(gbb.contains(g) for g in gba.elements)
            and all(gba.contains(g) for g in gbb.elements))


def _extend_arity(p, at_end=True):
    return Polynomial({e + (0,): c for e, c in p.terms.items()},
                      p.arity + 1, p.field)


def _contract_arity(p):
    return Polynomial({e[:-1]: c for e, c in p.terms.items() if e[-1] == 0},
                      p.arity - 1, p.field)


def elimination_ideal(gens, keep):
    """Generators of the ideal intersected with k[keep variables]."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    arity = gens[0].arity
    keep = set(keep)
    eliminate = [i for i in range(arity) if i not in keep]
    if not eliminate:
        return list(buchberger(gens).elements)
    order = elimination_order(arity, eliminate)
    gb = buchberger(gens, order)
    out = [g for g in gb.elements
           if all(e[i] == 0 for e in g.terms for i in eliminate)]
    return out


def ideal_intersect(A, B):
    """Intersection of two ideals via the one-tag elimination construction."""
    A = [g for g in A if not g.is_zero()]
    B = [g for g in B if not g.is_zero()]
    if not A or not B:
        return []
    arity, field = A[0].arity, A[0].field
    t = Polynomial.variable(arity, arity + 1, field)
    one = Polynomial.constant(1, arity + 1, field)
    gens = [t * _extend_arity(a) for a in A]
    gens += [(one - t) * _extend_arity(b) for b in B]
    order = elimination_order(arity + 1, [arity])
    gb = buchberger(gens, order)
    return [_contract_arity(g) for g in gb.elements
            if all(e[-1] == 0 for e in g.terms)]


def exact_divide(f, g, order=None):
    """Quotient f/g, raising if the division is not exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    if order is None:
        order = grevlex(f.arity)
    field = f.field
    glead, gc = g.leading_term(order)
    quotient = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        if not mono_divides(glead, e):
            raise ValueError("division is not exact")
        shift = mono_div(e, glead)
        q = field.div(c, gc)
        quotient[shift] = q
        for ge, co in g.terms.items():
            if ge == glead:
                continue
            ne = mono_mul(ge, shift)
            nc = field.mul(q, co)
            if ne in work:
                s = field.sub(work[ne], nc)
                if s:
                    work[ne] = s
                else:
                    del work[ne]
            else:
                work[ne] = field.neg(nc)
    return Polynomial(quotient, f.arity, field)


def ideal_quotient(I, J):
    """(I : J) for J a polynomial or a generator list."""
    if isinstance(J, Polynomial):
        if J.is_zero():
            raise ValueError("quotient by the zero polynomial")
        if J.is_constant():
            return list(buchberger(I).elements)
        inter = ideal_intersect(I, [J])
        return [exact_divide(h, J) for h in inter]
    J = [g for g in J if not g.is_zero()]
    if not J:
        raise ValueError("quotient by the zero ideal")
    result = None
    for g in J:
        Q = ideal_quotient(I, g)
        result = Q if result is None else ideal_intersect(result, Q)
    return result


def saturation(I, J, cap=64):
    """(I : J^infinity) with the smallest stabilizing exponent."""
    current = buchberger(I)
    exponent = 0
    for _ in range(cap):
        nxt_gens = ideal_quotient(current.elements, J)
        nxt = buchberger(nxt_gens) if nxt_gens else None
        if nxt is None:
            return list(current.elements), exponent
        if (all(current.contains(g) for g in nxt.elements)
                and all(nxt.contains(g) for g in current.elements)):
            return list(current.elements), exponent
        current = nxt
        exponent += 1
    raise SaturationCapExceeded("saturation did not stabilize in %d steps" % cap)


def saturate_variable(gens, var):
    """(I : var^infinity) for homogeneous I, by the grevlex division trick."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    arity = gens[0].arity
    precedence = [i for i in range(arity) if i != var] + [var]
    gb = buchberger(gens, grevlex(arity, precedence))
    out = []
    for g in gb.elements:
        k = min(e[var] for e in g.terms)
        if k:
            g = Polynomial({e[:var] + (e[var] - k,) + e[var + 1:]: c
                            for e, c in g.terms.items()}, arity, g.field)
        out.append(g)
    return out


def irrelevant_saturation(gens):
    """(I : m^infinity) for homogeneous I, m the irrelevant maximal ideal."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    arity = gens[0].arity
    result = None
    for var in range(arity):
        sat = saturate_variable(gens, var)
        result = sat if result is None else ideal_intersect(result, sat)
    return list(buchberger(result).elements)


def multivariate_gcd(f, g):
    """Monic gcd, via lcm = generator of the principal intersection ideal."""
    order = grevlex(f.arity if not f.is_zero() else g.arity)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic(order)
    if g.is_zero():
        return f.monic(order)
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(1, f.arity, f.field)
    inter = ideal_intersect([f], [g])
    gb = buchberger(inter)
    assert len(gb.elements) == 1, "intersection of principal ideals is principal"
    lcm = gb.elements[0]
    return exact_divide(f * g, lcm).monic(order)


# ---------------------------------------------------------------------------
# dimensions and degrees
# ---------------------------------------------------------------------------

def standard_monomials(gb, cap=None):
    """Standard monomials (outside the leading-term ideal), if finitely many.

    Returns None when the staircase is unbounded.
    """
    arity = gb.arity
    leads = [g.leading_term(gb.order)[0] for g in gb.elements]
    caps = []
    for i in range(arity):
        pure = [e[i] for e in leads
                if all(e[j] == 0 for j in range(arity) if j != i)]
        if not pure:
            return None
        caps.append(min(pure))
    out = []
    def rec(prefix):
        if len(prefix) == arity:
            out.append(tuple(prefix))
            return
        for k in range(caps[len(prefix)]):
            rec(prefix + [k])
    rec([])
    return sorted(e for e in out
                  if not any(mono_divides(l, e) for l in leads))


def vector_space_dimension(gens):
    """(dim_k of the quotient, standard monomials); (inf, None) if unbounded."""
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens)
    if gb.is_unit_ideal():
        return 0, []
    mons = standard_monomials(gb)
    if mons is None:
        return float("inf"), None
    return len(mons), mons


def _minimalize_monomials(exps):
    exps = sorted(set(exps), key=lambda e: (mono_deg(e), e))
    out = []
    for e in exps:
        if not any(mono_divides(m, e) for m in out):
            out.append(e)
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub_int(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
            for i in range(n)]


def _hilbert_numerator(exps, arity, memo):
    """Numerator of the Hilbert series of R/(monomial ideal), over (1-t)^arity."""
    exps = _minimalize_monomials(exps)
    key = frozenset(exps)
    if key in memo:
        return memo[key]
    if not exps:
        result = [1]
    elif any(mono_deg(e) == 0 for e in exps):
        result = [0]
    else:
        pures = [e for e in exps
                 if sum(1 for k in e if k) == 1]
        if len(pures) == len(exps):
            result = [1]
            for e in exps:
                factor = [1] + [0] * (mono_deg(e) - 1) + [-1]
                result = _poly_mul_int(result, factor)
        else:
            # pivot on the variable hitting the most mixed generators
            counts = [0] * arity
            for e in exps:
                if sum(1 for k in e if k) > 1:
                    for i, k in enumerate(e):
                        if k:
                            counts[i] += 1
            piv = max(range(arity), key=lambda i: counts[i])
            pivot = tuple(1 if i == piv else 0 for i in range(arity))
            plus = [e for e in exps if e[piv] == 0] + [pivot]
            colon = [tuple(k - 1 if i == piv and k else k
                           for i, k in enumerate(e)) for e in exps]
            n_plus = _hilbert_numerator(plus, arity, memo)
            n_colon = _hilbert_numerator(colon, arity, memo)
            # N(I) = N(I + <x>) + t * N(I : x)
            result = _poly_sub_int(n_plus, [0] + [-c for c in n_colon])
    memo[key] = result
    return result


def hilbert_numerator(gens_or_gb):
    gb = gens_or_gb if isinstance(gens_or_gb, GroebnerBasis) else buchberger(gens_or_gb)
    leads = [g.leading_term(gb.order)[0] for g in gb.elements]
    return _hilbert_numerator(leads, gb.arity, {})


def hilbert_degree(gens_or_gb):
    """Constant value of the Hilbert polynomial of R/I for zero-dimensional
    homogeneous I in three variables (0 when V(I) is empty in P^2)."""
    gb = gens_or_gb if isinstance(gens_or_gb, GroebnerBasis) else buchberger(gens_or_gb)
    num = hilbert_numerator(gb)
    if sum(num) != 0:
        raise NotZeroDimensional("Hilbert polynomial is not constant")
    # divide twice by (1 - t); Q_j = sum_{i<=j} N_i
    q1 = []
    acc = 0
    for c in num:
        acc += c
        q1.append(acc)
    while q1 and q1[-1] == 0:
        q1.pop()
    if sum(q1) != 0:
        raise NotZeroDimensional("Hilbert polynomial is not constant")
    acc = 0
    q2 = []
    for c in q1:
        acc += c
        q2.append(acc)
    while q2 and q2[-1] == 0:
        q2.pop()
    return sum(q2)


def graded_dimension(gb, n):
    """dim_k (R/I)_n from the staircase of the leading-term ideal."""
    from .poly import monomials_of_degree
    leads = [g.leading_term(gb.order)[0] for g in gb.elements]
    count = 0
    for e in monomials_of_degree(gb.arity, n):
        if not any(mono_divides(l, e) for l in leads):
            count += 1
    return count


# ---------------------------------------------------------------------------
# modules and syzygies
# ---------------------------------------------------------------------------

class ModuleVector:
    """Element of a graded free module R(-s_1) + ... + R(-s_m)."""

    __slots__ = ("components", "shifts")

    def __init__(self, components, shifts=None):
        self.components = tuple(components)
        if shifts is None:
            shifts = (0,) * len(self.components)
        self.shifts = tuple(shifts)

    @property
    def arity(self):
        return self.components[0].arity

    @property
    def field(self):
        return self.components[0].field

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def degree(self):
        """Degree of a homogeneous vector; -1 for zero."""
        degs = [c.total_degree() + s
                for c, s in zip(self.components, self.shifts)
                if not c.is_zero()]
        return max(degs) if degs else -1

    def is_homogeneous(self):
        degs = set()
        for c, s in zip(self.components, self.shifts):
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                return False
            degs.add(c.total_degree() + s)
        return len(degs) <= 1

    def dot(self, gens):
        """Sum of component-wise products against polynomials or vectors."""
        if isinstance(gens[0], ModuleVector):
            acc = None
            for c, g in zip(self.components, gens):
                contrib = [c * gc for gc in g.components]
                if acc is None:
                    acc = contrib
                else:
                    acc = [a + b for a, b in zip(acc, contrib)]
            return ModuleVector(acc, gens[0].shifts)
        acc = Polynomial.zero(self.arity, self.field)
        for c, g in zip(self.components, gens):
            acc = acc + c * g
        return acc

    def scalar_mul(self, c):
        return ModuleVector([p.scalar_mul(c) for p in self.components],
                            self.shifts)

    def __eq__(self, other):
        return (isinstance(other, ModuleVector)
                and self.components == other.components)

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self.components) + ")"


def _vec_to_vp(v):
    out = {}
    for pos, comp in enumerate(v.components):
        for e, c in comp.terms.items():
            out[(pos, e)] = c
    return out


def _vp_to_vec(vp, ncomp, arity, field, shifts=None):
    return ModuleVector(_vp_to_polys(vp, ncomp, arity, field), shifts)


def module_buchberger(vectors, order=None):
    """Reduced module Groebner basis under position-over-term."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    ncomp = len(vectors[0].components)
    arity, field = vectors[0].arity, vectors[0].field
    shifts = vectors[0].shifts
    if order is None:
        order = grevlex(arity)
    key = _module_key(order)
    out = _vp_buchberger([_vec_to_vp(v) for v in vectors], key, field, False)
    return [_vp_to_vec(vp, ncomp, arity, field, shifts) for vp in out]


def module_normal_form(v, gb_vectors, order=None):
    if not gb_vectors:
        return v
    arity, field = v.arity, v.field
    if order is None:
        order = grevlex(arity)
    key = _module_key(order)
    basis = []
    for g in gb_vectors:
        vp = _vec_to_vp(g)
        basis.append((_vp_lead(vp, key), vp))
    red = _vp_reduce(_vec_to_vp(v), basis, key, field)
    return _vp_to_vec(red, len(v.components), arity, field, v.shifts)


def module_contains(gb_vectors, v, order=None):
    return module_normal_form(v, gb_vectors, order).is_zero()


def module_equal(A, B, order=None):
    gba = module_buchberger(A, order)
    gbb = module_buchberger(B, order)
    return (all(module_contains(gbb, v, order) for v in gba)
            and all(module_contains(gba, v, order) for v in gbb))


def syzygy_basis(gens, out_shifts=None):
    """Generating set of the first syzygy module of the given generators.

    gens are Polynomials or ModuleVectors; every returned v satisfies
    v . gens = 0.  out_shifts sets the grading of the ambient R^k the
    syzygies live in (default: all zero).
    """
    gens = list(gens)
    if not gens:
        return []
    as_vectors = isinstance(gens[0], ModuleVector)
    if as_vectors:
        m = len(gens[0].components)
        arity, field = gens[0].arity, gens[0].field
        base = [_vec_to_vp(g) for g in gens]
    else:
        m = 1
        arity, field = gens[0].arity, gens[0].field
        base = [_poly_to_vp(g) for g in gens]
    k = len(gens)
    if out_shifts is None:
        out_shifts = (0,) * k
    # embed: w_i = g_i (+) e_i in R^m (+) R^k, generator block dominating
    order = grevlex(arity)
    key = _module_key(order)
    embedded = []
    zero_exp = (0,) * arity
    for i, vp in enumerate(base):
        w = dict(vp)
        w[(m + i, zero_exp)] = field.one
        embedded.append(w)
    gb = _vp_buchberger(embedded, key, field, False)
    syz = []
    for vp in gb:
        if any(pos < m for pos, _ in vp):
            continue
        shifted = {(pos - m, e): c for (pos, e), c in vp.items()}
        syz.append(_vp_to_vec(shifted, k, arity, field, out_shifts))
    return syz


def minimalize_generators(vecs, order=None):
    """Minimal homogeneous generating set, degrees ascending (graded Nakayama)."""
    vecs = [v for v in vecs if not v.is_zero()]
    if not vecs:
        return []
    arity = vecs[0].arity
    if order is None:
        order = grevlex(arity)
    key = _module_key(order)

    def sort_key(v):
        vp = _vec_to_vp(v)
        pos, exp = _vp_lead(vp, key)
        return (v.degree(), pos, order.key(exp))

    survivors = sorted(vecs, key=sort_key)
    i = 0
    while i < len(survivors):
        others = survivors[:i] + survivors[i + 1:]
        if others and module_contains(module_buchberger(others, order),
                                      survivors[i], order):
            survivors.pop(i)
        else:
            i += 1
    return sorted(survivors, key=sort_key)


class PresentationMatrix:
    """Rows generate all relations among a module's generators."""

    def __init__(self, rows, ncols, col_degrees, row_degrees, arity, field):
        self.rows = list(rows)          # each row: tuple of Polynomials
        self.ncols = ncols
        self.col_degrees = tuple(col_degrees)
        self.row_degrees = tuple(row_degrees)
        self.arity = arity
        self.field = field

    def __len__(self):
        return len(self.rows)


def presentation(gens, modulo=()):
    """Presentation of the submodule generated by gens inside ambient/<modulo>.

    Rows r satisfy sum_j r_j * gens_j = 0 modulo the given vectors.
    """
    gens = list(gens)
    modulo = list(modulo)
    col_degrees = [g.degree() for g in gens]
    all_gens = modulo + gens
    syz = syzygy_basis(all_gens,
                       out_shifts=tuple(g.degree() for g in all_gens))
    nmod = len(modulo)
    rows = []
    row_degrees = []
    for v in syz:
        row = v.components[nmod:]
        if all(c.is_zero() for c in row):
            continue
        rows.append(tuple(row))
        row_degrees.append(ModuleVector(row, tuple(col_degrees)).degree())
    return PresentationMatrix(rows, len(gens), col_degrees, row_degrees,
                              gens[0].arity, gens[0].field)


def kernel_of_presentation(C):
    """Generators of {v : C.v = 0}, as ModuleVectors.

    An empty matrix yields the standard basis of the free module.
    """
    if not C.rows:
        out = []
        for j in range(C.ncols):
            comps = [Polynomial.constant(1, C.arity, C.field) if i == j
                     else Polynomial.zero(C.arity, C.field)
                     for i in range(C.ncols)]
            out.append(ModuleVector(comps, tuple(-d for d in C.col_degrees)))
        return out
    columns = []
    for j in range(C.ncols):
        comps = [row[j] for row in C.rows]
        columns.append(ModuleVector(comps, tuple(-d for d in C.row_degrees)))
    return syzygy_basis(columns,
                        out_shifts=tuple(-d for d in C.col_degrees))
