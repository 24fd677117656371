"""Plane-curve pipeline: Jacobian syzygies, Bourbaki ideal, local degrees,
Tjurina numbers, and free / nearly-free classification."""

import random
import time
from dataclasses import dataclass, field as dc_field, replace

from .errors import (BadCharacteristic, InconsistentClassification,
                     InfiniteLocalDimension, NoSyzygyQuotient, NotASyzygy,
                     NotHomogeneous, NotReduced, NotZeroDimensional)
from .groebner import (GroebnerBasis, ModuleVector, buchberger, hilbert_degree,
                       ideal_equal, ideal_quotient, irrelevant_saturation,
                       kernel_of_presentation, minimalize_generators,
                       multivariate_gcd, presentation, saturation,
                       syzygy_basis, vector_space_dimension)
from .poly import Polynomial, grevlex, lex, mono_deg
from .roots import univariate_coeffs, univariate_gcd_many, univariate_roots


@dataclass(frozen=True)
class Curve:
    F: Polynomial
    d: int          # deg F = d + 1

    @property
    def field(self):
        return self.F.field

    def partials(self):
        return tuple(self.F.differentiate(i) for i in range(3))


def validate_curve(F):
    """Check the standing hypotheses: homogeneous, reduced, good characteristic."""
    if F.is_zero():
        raise ValueError("curve polynomial must be nonzero")
    if F.arity != 3:
        raise ValueError("curve must live in three variables")
    if not F.is_homogeneous() or F.is_constant():
        raise NotHomogeneous("curve polynomial must be homogeneous of positive degree")
    deg = F.total_degree()
    p = F.field.char
    if p and (deg % p == 0):
        raise BadCharacteristic("characteristic %d divides deg F = %d" % (p, deg))
    partials = [F.differentiate(i) for i in range(3)]
    g = F
    for q in partials:
        if not q.is_zero():
            g = multivariate_gcd(g, q)
    if g.total_degree() > 0:
        raise NotReduced("curve has a repeated factor")
    return Curve(F, deg - 1)


def jacobian_ideal(curve):
    return [p for p in curve.partials() if not p.is_zero()]


@dataclass(frozen=True)
class SyzygyAnalysis:
    minimal_generators: tuple     # ModuleVectors in R^3
    degrees: tuple                # ascending
    chosen: int                   # index of epsilon in minimal_generators
    e: int
    partials: tuple

    @property
    def epsilon(self):
        return self.minimal_generators[self.chosen]

    def quotient_generators(self):
        return tuple(g for i, g in enumerate(self.minimal_generators)
                     if i != self.chosen)


def syzygy_analysis(curve):
    gens = list(curve.partials())
    syz = syzygy_basis(gens)
    minimal = minimalize_generators(syz)
    degrees = tuple(v.degree() for v in minimal)
    return SyzygyAnalysis(tuple(minimal), degrees, 0, degrees[0], tuple(gens))


@dataclass(frozen=True)
class BourbakiIdealData:
    generators: tuple             # nonzero Polynomials
    kernel_vector: tuple          # phi(delta_i), including zeros
    gcd_divided: Polynomial
    degree_offset: int
    epsilon_index: int            # position of epsilon in the minimal basis


def _bourbaki_for(epsilon, deltas):
    """Bourbaki ideal from the kernel of the presentation of Syz/<epsilon>."""
    C = presentation(deltas, modulo=[epsilon])
    kernel = kernel_of_presentation(C)
    kernel = [v for v in kernel if not v.is_zero()]
    if not kernel:
        raise NoSyzygyQuotient("presentation kernel is trivial")
    order = grevlex(3)

    def vec_key(v):
        head = next(c for c in v.components if not c.is_zero())
        return (v.degree(), min(i for i, c in enumerate(v.components)
                                if not c.is_zero()),
                order.key(head.leading_term(order)[0]))

    v = min(kernel, key=vec_key)
    entries = list(v.components)
    nonzero = [c for c in entries if not c.is_zero()]
    g = nonzero[0]
    for c in nonzero[1:]:
        g = multivariate_gcd(g, c)
        if g.is_constant():
            break
    if g.total_degree() > 0:
        entries = [c if c.is_zero() else _exact_div(c, g) for c in entries]
        nonzero = [c for c in entries if not c.is_zero()]
    offsets = {c.total_degree() - delta.degree()
               for c, delta in zip(entries, deltas) if not c.is_zero()}
    if len(offsets) != 1:
        raise NoSyzygyQuotient("kernel vector is not homogeneous")
    return tuple(nonzero), tuple(entries), g, offsets.pop()


def bourbaki_ideal(analysis):
    """Bourbaki ideal of the curve, with a canonical choice of epsilon.

    Every generator of least degree is a legitimate epsilon, but the
    resulting ideals need not coincide, so we compute each candidate and
    keep the one whose zero locus splits as far as possible over the base
    field: fewest leftover (non-rational) degrees first, then fewest
    points, then the smallest point list and generator list.  This makes
    the report deterministic without privileging a monomial-order
    accident of the syzygy basis.
    """
    gens = analysis.minimal_generators
    if len(gens) < 2:
        raise NoSyzygyQuotient("syzygy module has fewer than two generators")
    e = min(v.degree() for v in gens)
    scored = []
    failure = None
    for i, eps in enumerate(gens):
        if eps.degree() != e:
            continue
        deltas = tuple(g for j, g in enumerate(gens) if j != i)
        try:
            generators, kernel_vec, g, offset = _bourbaki_for(eps, deltas)
        except NoSyzygyQuotient as exc:
            failure = exc
            continue
        points, residual = projective_points(generators)
        scored.append(((residual, len(points)),
                       (tuple(p.sort_key() for p in points),
                        tuple(repr(q) for q in generators), -i),
                       BourbakiIdealData(generators, kernel_vec, g,
                                         offset, i)))
    if not scored:
        raise failure or NoSyzygyQuotient("no usable minimal syzygy")
    least = min(s[0] for s in scored)
    return max((s for s in scored if s[0] == least),
               key=lambda s: s[1])[2]


def _exact_div(f, g):
    from .groebner import exact_divide
    return exact_divide(f, g)


class ProjectivePoint:
    """Point of P^2, normalized so the last nonzero coordinate is 1."""

    __slots__ = ("coords", "chart", "field")

    def __init__(self, coords, field):
        coords = [field.coerce(c) for c in coords]
        chart = max(i for i, c in enumerate(coords) if c)
        inv = field.inv(coords[chart])
        self.coords = tuple(field.mul(c, inv) for c in coords)
        self.chart = chart
        self.field = field

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return (self.chart,) + tuple(self.field.sort_key(c) for c in self.coords)

    def __repr__(self):
        return "(" + ":".join(self.field.to_str(c) for c in self.coords) + ")"


def _affine_points_2var(gens, field):
    """All base-field points of V(gens) for a zero-dimensional 2-variable ideal."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NotZeroDimensional("zero ideal in two variables")
    if any(g.is_constant() for g in gens):
        return []
    gb = buchberger(gens, lex(2, (1, 0)))   # eliminate the second variable
    if gb.is_unit_ideal():
        return []
    elim = [g for g in gb.elements if all(e[1] == 0 for e in g.terms)]
    if not elim:
        raise NotZeroDimensional("no eliminant: ideal is not zero-dimensional")
    elim_coeffs = univariate_gcd_many(
        [univariate_coeffs(g, 0) for g in elim], field)
    points = []
    for a in univariate_roots(elim_coeffs, field):
        fibers = []
        for g in gb.elements:
            h = g.substitute_value(0, a)
            if h.is_zero():
                continue
            fibers.append([h.terms.get((0, k), field.zero)
                           for k in range(h.total_degree() + 1)])
        if not fibers:
            raise NotZeroDimensional("fiber over a root is positive-dimensional")
        fiber_gcd = univariate_gcd_many(fibers, field)
        if len(fiber_gcd) <= 1:
            continue
        for b in univariate_roots(fiber_gcd, field):
            if all(not g.evaluate((a, b)) for g in gens):
                points.append((a, b))
    return points


def projective_points(gens, compute_residual=True):
    """Base-field-rational points of V(I) for zero-dimensional homogeneous I.

    Returns (points, residual_degree); residual 0 means the rational points
    account for the whole degree.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NotZeroDimensional("zero ideal")
    field = gens[0].field
    gb = buchberger(gens)
    if gb.is_unit_ideal():
        return [], 0
    total = hilbert_degree(gb)
    points = []
    # chart z = 1
    affine = [g.dehomogenize(2) for g in gens]
    for (a, b) in _affine_points_2var(affine, field):
        points.append(ProjectivePoint((a, b, field.one), field))
    # chart y = 1, z = 0
    slice_y = []
    for g in gens:
        h = g.substitute_value(2, 0).dehomogenize(2).dehomogenize(1)
        if not h.is_zero():
            slice_y.append([h.terms.get((k,), field.zero)
                            for k in range(h.total_degree() + 1)])
    if slice_y:
        g1 = univariate_gcd_many(slice_y, field)
        if len(g1) > 1:
            for a in univariate_roots(g1, field):
                points.append(ProjectivePoint((a, field.one, field.zero), field))
    else:
        raise NotZeroDimensional("ideal vanishes on the line z = 0")
    # chart x = 1, y = z = 0
    if all(not g.evaluate((field.one, field.zero, field.zero)) for g in gens):
        points.append(ProjectivePoint((field.one, field.zero, field.zero), field))
    points = sorted(set(points), key=lambda p: p.sort_key())
    if not compute_residual:
        return points, None
    residual = total - sum(local_degree(gens, P) for P in points)
    return points, residual


def affine_local_generators(gens, point):
    """Ideal generators dehomogenized in the point's chart, point at origin."""
    gens = [g for g in gens if not g.is_zero()]
    chart = point.chart
    rest = [i for i in range(3) if i != chart]
    coords = [point.coords[i] for i in rest]
    affine = []
    for g in gens:
        h = g.dehomogenize(chart).translate(coords)
        if not h.is_zero():
            affine.append(h)
    return affine


def local_degree(gens, point):
    """Local dimension contribution of V(I) at a rational point.

    Dehomogenize in the point's chart, translate to the origin, and return
    dim k[u,v]/J minus the dimension of the part away from the origin.
    """
    gens = [g for g in gens if not g.is_zero()]
    field = gens[0].field
    affine = affine_local_generators(gens, point)
    if not affine or any(h.is_constant() for h in affine):
        return 0
    total, _ = vector_space_dimension(affine)
    if total == float("inf"):
        raise InfiniteLocalDimension("dehomogenized ideal is not zero-dimensional")
    u = Polynomial.variable(0, 2, field)
    v = Polynomial.variable(1, 2, field)
    away, _ = saturation(affine, [u, v])
    dim_away, _ = vector_space_dimension(away)
    return total - dim_away


def global_degrees(curve, analysis, bourbaki, tau_global):
    """(bour_hilbert, bour_formula)."""
    gens = list(bourbaki.generators)
    gb = buchberger(gens)
    bour_hilbert = 0 if gb.is_unit_ideal() else hilbert_degree(gb)
    d, e = curve.d, analysis.e
    bour_formula = d * d + e * (e - d) - tau_global
    return bour_hilbert, bour_formula


def random_coordinate_change(obj, seed):
    """Projective change z' = a*x + b*y + c*z with seeded, nonzero c.

    obj is a Curve, a Polynomial, or a list of generators; returns
    (transformed object, (a, b, c)).
    """
    if isinstance(obj, Curve):
        F, (a, b, c) = random_coordinate_change(obj.F, seed)
        return validate_curve(F), (a, b, c)
    single = isinstance(obj, Polynomial)
    gens = [obj] if single else list(obj)
    field = gens[0].field
    rng = random.Random(seed)
    a = field.from_int(rng.randint(0, 7))
    b = field.from_int(rng.randint(0, 7))
    c = field.zero
    while not c:
        c = field.from_int(rng.randint(1, 11))
    # substitute z -> (z - a*x - b*y) / c so points map by z' = ax + by + cz
    x = Polynomial.variable(0, 3, field)
    y = Polynomial.variable(1, 3, field)
    z = Polynomial.variable(2, 3, field)
    zsub = (z - x.scalar_mul(a) - y.scalar_mul(b)).scalar_mul(field.inv(c))
    out = [g.substitute([x, y, zsub]) for g in gens]
    return (out[0] if single else out), (a, b, c)


def tjurina(curve):
    """(tau_global, [(point, tau_P)], complete flag)."""
    J = jacobian_ideal(curve)
    points, residual = projective_points(J)
    table = [(P, local_degree(J, P)) for P in points]
    tau_global = sum(t for _, t in table)
    sat = irrelevant_saturation(J)
    sat_gb = buchberger(sat)
    sat_degree = 0 if sat_gb.is_unit_ideal() else hilbert_degree(sat_gb)
    return tau_global, table, tau_global == sat_degree


CLASS_FREE = "Free"
CLASS_NEARLY_FREE = "NearlyFree"
CLASS_OTHER = "Other"


def classify(bour, n_syzygy_generators, local_table, residual):
    """Free / NearlyFree / Other with structural cross-checks."""
    if bour == 0:
        if n_syzygy_generators != 2:
            raise InconsistentClassification(
                "Bour = 0 but Syz(J_F) has %d minimal generators"
                % n_syzygy_generators)
        return CLASS_FREE
    if bour == 1:
        ok = (residual == 0 and len(local_table) == 1
              and local_table[0][1] == 1)
        if not ok:
            raise InconsistentClassification(
                "Bour = 1 but the local table is not a single simple point")
        return CLASS_NEARLY_FREE
    return CLASS_OTHER


def saito_check(curve, theta1, theta2):
    """Saito's criterion: det((x,y,z), theta1, theta2) = c*F, c nonzero scalar."""
    partials = list(curve.partials())
    if not isinstance(theta1, ModuleVector):
        theta1 = ModuleVector(tuple(theta1), (0, 0, 0))
    if not isinstance(theta2, ModuleVector):
        theta2 = ModuleVector(tuple(theta2), (0, 0, 0))
    for theta in (theta1, theta2):
        if not theta.dot(partials).is_zero():
            raise NotASyzygy("vector is not a syzygy of the Jacobian ideal")
    if theta1.degree() + theta2.degree() + 1 != curve.d + 1:
        return False
    field = curve.field
    euler = [Polynomial.variable(i, 3, field) for i in range(3)]
    rows = [euler, list(theta1.components), list(theta2.components)]
    det = Polynomial.zero(3, field)
    for sgn, perm in ((1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
                      (-1, (0, 2, 1)), (-1, (2, 1, 0)), (-1, (1, 0, 2))):
        term = rows[0][perm[0]] * rows[1][perm[1]] * rows[2][perm[2]]
        det = det + (term if sgn > 0 else -term)
    if det.is_zero():
        return False
    order = grevlex(3)
    _, cd = det.leading_term(order)
    _, cf = curve.F.leading_term(order)
    c = field.div(cd, cf)
    return (det - curve.F.scalar_mul(c)).is_zero()


@dataclass
class CurveReport:
    curve: Curve
    d: int
    e: int
    syzygy_degrees: tuple
    bourbaki_generators: tuple
    tau_global: int
    tau_table: list
    tau_complete: bool
    bour_hilbert: int
    bour_formula: int
    bour_local_sum: int
    residual: int
    points: list
    local_table: list
    ell: int
    classification: str
    flags: dict
    timings_ms: dict = dc_field(default_factory=dict)

    @property
    def consistent(self):
        return all(self.flags.values())


def analyze(curve, seed=0):
    """Full pipeline: every invariant plus consistency flags."""
    timings = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = (time.perf_counter() - t0) * 1000.0
        return out

    analysis = stage("syzygy", lambda: syzygy_analysis(curve))
    bdata = stage("bourbaki_ideal", lambda: bourbaki_ideal(analysis))
    analysis = replace(analysis, chosen=bdata.epsilon_index)
    tau_global, tau_table, tau_complete = stage("tjurina", lambda: tjurina(curve))
    bour_hilbert, bour_formula = stage(
        "global_degrees",
        lambda: global_degrees(curve, analysis, bdata, tau_global))
    gens = list(bdata.generators)
    unit = any(g.is_constant() for g in gens)
    if unit:
        points, residual = [], 0
    else:
        points, residual = stage("points", lambda: projective_points(gens))
    local_table = stage(
        "local_degrees",
        lambda: [(P, local_degree(gens, P)) for P in points])
    bour_local_sum = sum(t for _, t in local_table)

    flags = {}
    flags["hilbert_eq_formula"] = (bour_hilbert == bour_formula
                                   if tau_complete else True)
    flags["local_sum_plus_residual"] = bour_local_sum + residual == bour_hilbert
    flags["bour_ge_ell"] = bour_hilbert >= len(points)
    flags["local_degrees_positive"] = all(t >= 1 for _, t in local_table)
    eps_gcd = _components_gcd(analysis.epsilon)
    flags["epsilon_gcd_one"] = eps_gcd.is_constant()
    flags["e_le_d"] = analysis.e <= curve.d
    try:
        label = classify(bour_hilbert, len(analysis.minimal_generators),
                         local_table, residual)
        flags["classification_consistent"] = True
    except InconsistentClassification:
        label = CLASS_FREE if bour_hilbert == 0 else (
            CLASS_NEARLY_FREE if bour_hilbert == 1 else CLASS_OTHER)
        flags["classification_consistent"] = False

    return CurveReport(
        curve=curve,
        d=curve.d,
        e=analysis.e,
        syzygy_degrees=analysis.degrees,
        bourbaki_generators=tuple(gens),
        tau_global=tau_global,
        tau_table=tau_table,
        tau_complete=tau_complete,
        bour_hilbert=bour_hilbert,
        bour_formula=bour_formula,
        bour_local_sum=bour_local_sum,
        residual=residual,
        points=points,
        local_table=local_table,
        ell=len(points),
        classification=label,
        flags=flags,
        timings_ms=timings,
    )


def _components_gcd(vec):
    nonzero = [c for c in vec.components if not c.is_zero()]
    g = nonzero[0]
    for c in nonzero[1:]:
        g = multivariate_gcd(g, c)
        if g.is_constant():
            break
    return g
