"""Independent brute-force verifiers: exact dense linear algebra only.

Nothing here touches the Groebner engine; dimensions come from ranks of
degree-slice matrices, so these routines can certify the main pipeline.
"""

from fractions import Fraction
from math import lcm

from .errors import NotStabilized
from .poly import mono_deg, mono_mul, monomials_of_degree


def _rank_bareiss(rows):
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        for r in range(row + 1, len(m)):
            for c in range(col + 1, ncols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = p
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def _rank_mod_p(rows, p):
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        for r in range(row + 1, len(m)):
            if m[r][col]:
                f = (m[r][col] * inv) % p
                for c in range(col, ncols):
                    m[r][c] = (m[r][c] - f * m[row][c]) % p
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def matrix_rank(rows, field):
    """Exact rank; rationals are cleared to integers for Bareiss."""
    if not rows:
        return 0
    if field.char:
        return _rank_mod_p(rows, field.char)
    cleared = []
    for r in rows:
        den = lcm(*[Fraction(x).denominator for x in r]) if r else 1
        cleared.append([int(Fraction(x) * den) for x in r])
    return _rank_bareiss(cleared)


def degree_slice_rows(gens, n, arity):
    """Coefficient rows of every (monomial * generator) landing in degree n."""
    cols = monomials_of_degree(arity, n)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        d = g.total_degree()
        if d > n:
            continue
        for m in monomials_of_degree(arity, n - d):
            row = [0 if g.field.char else Fraction(0)] * len(cols)
            ok = True
            for e, c in g.terms.items():
                t = mono_mul(e, m)
                if t not in index:
                    ok = False
                    break
                row[index[t]] = c
            if ok:
                rows.append(row)
    return rows, len(cols)


def graded_dim_bruteforce(gens, n):
    """dim_k (R/I)_n for homogeneous generators, by rank of a slice matrix."""
    gens = [g for g in gens if not g.is_zero()]
    field = gens[0].field
    arity = gens[0].arity
    rows, ncols = degree_slice_rows(gens, n, arity)
    return ncols - matrix_rank(rows, field)


def degree_bruteforce(gens, window=3, cap=40):
    """Stabilized value of the graded dimension (the degree of R/I)."""
    gens = [g for g in gens if not g.is_zero()]
    start = 2 * max(g.total_degree() for g in gens) + 2
    dims = []
    n = start
    while n <= cap:
        dims.append(graded_dim_bruteforce(gens, n))
        if len(dims) >= window and len(set(dims[-window:])) == 1:
            return dims[-1]
        n += 1
    raise NotStabilized("graded dimension did not stabilize by degree %d" % cap)


def local_dim_bruteforce(gens, cap=30):
    """dim of the origin-local factor of k[x,y]/J, by truncation ranks.

    The point must already be translated to the origin; the value is the
    stabilized dim of k[x,y]/(J + m^D) over growing D.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NotStabilized("zero ideal has no finite local dimension")
    field = gens[0].field

    def dim_at(D):
        cols = []
        for d in range(D):
            cols.extend(monomials_of_degree(2, d))
        index = {m: i for i, m in enumerate(cols)}
        rows = []
        for g in gens:
            for d in range(D):
                for m in monomials_of_degree(2, d):
                    row = [0 if field.char else Fraction(0)] * len(cols)
                    for e, c in g.terms.items():
                        t = mono_mul(e, m)
                        if mono_deg(t) < D:
                            row[index[t]] = c
                    rows.append(row)
        return len(cols) - matrix_rank(rows, field)

    prev = None
    D = 1
    while D <= cap:
        cur = dim_at(D)
        if prev is not None and cur == prev:
            return cur
        prev = cur
        D += 1
    raise NotStabilized("local dimension did not stabilize by order %d" % cap)


def syzygy_verify(vector, gens):
    """True iff the vector is a syzygy of gens, by direct expansion."""
    comps = vector.components if hasattr(vector, "components") else vector
    if len(comps) != len(gens):
        raise ValueError("length mismatch")
    acc = None
    for c, g in zip(comps, gens):
        term = c * g
        acc = term if acc is None else acc + term
    return acc.is_zero()
