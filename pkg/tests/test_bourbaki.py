"""Curve pipeline: validation, syzygies, Bourbaki ideals, local degrees."""

import pytest

from bourbaki.curve import (CLASS_FREE, CLASS_NEARLY_FREE, CLASS_OTHER,
                            ProjectivePoint, analyze, bourbaki_ideal, classify,
                            jacobian_ideal, local_degree, projective_points,
                            random_coordinate_change, saito_check,
                            syzygy_analysis, tjurina, validate_curve)
from bourbaki.errors import (BadCharacteristic, InconsistentClassification,
                             NotASyzygy, NotHomogeneous, NotReduced)
from bourbaki.fields import QQ, PrimeField
from bourbaki.groebner import ideal_equal
from bourbaki.oracle import syzygy_verify
from bourbaki.parsing import parse_polynomial


def P(text, field=QQ):
    return parse_polynomial(text, field)


def curve(text, field=QQ):
    return validate_curve(P(text, field))


class TestValidation:
    def test_accepts_reduced_homogeneous(self):
        c = curve("y^2*z - x^3 - x^2*z")
        assert c.d == 2

    def test_rejects_inhomogeneous(self):
        with pytest.raises(NotHomogeneous):
            curve("x^2 + y")

    def test_rejects_repeated_factor(self):
        with pytest.raises(NotReduced):
            curve("x^2*y")

    def test_rejects_degree_divisible_by_characteristic(self):
        with pytest.raises(BadCharacteristic):
            curve("x^3 + y^3 + x*y*z", PrimeField(3))


class TestSyzygyAnalysis:
    def test_nodal_cubic_four_generators(self):
        s = syzygy_analysis(curve("y^2*z - x^3 - x^2*z"))
        assert sorted(s.degrees) == [2, 2, 2, 2]
        assert s.e == 2
        for v in s.minimal_generators:
            assert syzygy_verify(v, list(s.partials))

    def test_quartic_degrees(self):
        s = syzygy_analysis(curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2"))
        assert sorted(s.degrees) == [2, 2, 3]

    def test_symmetric_family_degrees(self):
        s = syzygy_analysis(curve("x^5*z + x^3*y^3 + y^5*z"))
        assert sorted(s.degrees) == [4, 4, 4, 4, 4]
        s = syzygy_analysis(curve("x^7*z + x^4*y^4 + y^7*z"))
        assert sorted(s.degrees) == [5, 5, 5, 5, 6]

    def test_epsilon_has_coprime_components(self):
        from bourbaki.curve import _components_gcd
        s = syzygy_analysis(curve("y^2*z - x^3 - x^2*z"))
        b = bourbaki_ideal(s)
        eps = s.minimal_generators[b.epsilon_index]
        assert _components_gcd(eps).is_constant()


class TestBourbakiIdeal:
    def test_nodal_cubic_ideal(self):
        s = syzygy_analysis(curve("y^2*z - x^3 - x^2*z"))
        b = bourbaki_ideal(s)
        target = [P("2*z^2"), P("y*z"), P("2*x*z + 3*y^2")]
        assert ideal_equal(list(b.generators), target)
        assert b.degree_offset == b.degree_offset  # homogeneous offset exists

    def test_quartic_ideal(self):
        s = syzygy_analysis(curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2"))
        b = bourbaki_ideal(s)
        assert ideal_equal(list(b.generators), [P("2*x*y - y*z"), P("z")])

    def test_cusp_family_ideal(self):
        for text in ("y^2*z - x^3", "y^3*z - x^4", "y^4*z - x^5"):
            s = syzygy_analysis(curve(text))
            b = bourbaki_ideal(s)
            assert ideal_equal(list(b.generators), [P("y"), P("z")])

    def test_free_curve_gives_unit_ideal(self):
        s = syzygy_analysis(curve("x^5 + x^2*y^3 + y^4*z"))
        assert len(s.minimal_generators) == 2
        b = bourbaki_ideal(s)
        assert any(g.is_constant() for g in b.generators)

    def test_degree_invariant_under_epsilon_choice(self):
        # every minimal-degree generator is a legitimate epsilon; the
        # Bourbaki degree must not depend on which one is used
        from bourbaki.curve import _bourbaki_for
        from bourbaki.groebner import buchberger, hilbert_degree
        s = syzygy_analysis(curve("y^2*z - x^3 - x^2*z"))
        gens = s.minimal_generators
        e = min(v.degree() for v in gens)
        degrees = set()
        for i, eps in enumerate(gens):
            if eps.degree() != e:
                continue
            deltas = tuple(g for j, g in enumerate(gens) if j != i)
            ideal, _, _, _ = _bourbaki_for(eps, deltas)
            degrees.add(hilbert_degree(buchberger(list(ideal))))
        assert degrees == {3}


class TestProjectivePoints:
    def test_normalization(self):
        p = ProjectivePoint([QQ.from_int(2), QQ.from_int(4), QQ.from_int(2)], QQ)
        q = ProjectivePoint([QQ.from_int(1), QQ.from_int(2), QQ.from_int(1)], QQ)
        assert p == q
        assert repr(p) == "(1:2:1)"

    def test_known_zero_locus(self):
        gens = [P("y*z^2"), P("x^2*z"), P("x*y*z"), P("5*y^2*z - 3*x^3")]
        points, residual = projective_points(gens)
        assert {repr(p) for p in points} == {"(0:1:0)", "(0:0:1)"}
        assert residual == 0

    def test_irrational_points_show_as_residual(self):
        # z = 0 and x^2 + 2*y^2 = 0 has no rational solutions
        points, residual = projective_points([P("z"), P("x^2 + 2*y^2")])
        assert points == []
        assert residual == 2

    def test_local_degree_away_from_locus_is_zero(self):
        gens = [P("y"), P("z")]
        away = ProjectivePoint([QQ.zero, QQ.zero, QQ.one], QQ)
        assert local_degree(gens, away) == 0


class TestTjurina:
    def test_quartic_table(self):
        tau, table, complete = tjurina(curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2"))
        assert tau == 5 and complete
        assert {repr(p): t for p, t in table} == {
            "(0:0:1)": 1, "(0:1:0)": 3, "(1:0:1)": 1}

    def test_cusp_values(self):
        for m, n in ((2, 3), (3, 4), (4, 5)):
            tau, _, complete = tjurina(
                curve("y^%d*z^%d - x^%d" % (m, n - m, n)))
            assert complete and tau == (n - 1) * (n - 2)

    def test_smooth_curve(self):
        tau, table, complete = tjurina(curve("x^2 + y^2 - z^2"))
        assert tau == 0 and table == [] and complete

    def test_invariant_under_coordinate_change(self):
        c = curve("y^2*z - x^3 - x^2*z")
        moved, _ = random_coordinate_change(c, seed=5)
        assert tjurina(moved)[0] == tjurina(c)[0]


class TestClassification:
    def test_free(self):
        assert classify(0, 2, [], 0) == CLASS_FREE

    def test_free_requires_two_generators(self):
        with pytest.raises(InconsistentClassification):
            classify(0, 3, [], 0)

    def test_nearly_free(self):
        pt = ProjectivePoint([QQ.one, QQ.zero, QQ.zero], QQ)
        assert classify(1, 3, [(pt, 1)], 0) == CLASS_NEARLY_FREE

    def test_other(self):
        pt = ProjectivePoint([QQ.one, QQ.zero, QQ.zero], QQ)
        assert classify(3, 4, [(pt, 3)], 0) == CLASS_OTHER


class TestSaito:
    @pytest.mark.parametrize("a", [2, 3])
    def test_free_family_passes(self, a):
        c = curve("x^%d + x^%d*y^%d + y^%d*z" % (2 * a + 1, a, a + 1, 2 * a))
        th1 = [P("0"), P("-y^%d" % a),
               P("%d*x^%d + %d*y^%d*z" % (a + 1, a, 2 * a, a - 1))]
        th2 = [P("-%d*y^%d" % ((a + 1) ** 2, a)),
               P("%d*x^%d - %d*y^%d*z" % ((a + 1) * (2 * a + 1), a,
                                          2 * a * (2 * a + 1), a - 1)),
               P("%d*x^%d*y + %d*y^%d*z^2" % (a * (a + 1) ** 2, a - 1,
                                              4 * a * a * (2 * a + 1), a - 2))]
        assert saito_check(c, th1, th2)

    def test_rejects_non_syzygy(self):
        c = curve("y^2*z - x^3 - x^2*z")
        with pytest.raises(NotASyzygy):
            saito_check(c, [P("1"), P("0"), P("0")], [P("0"), P("1"), P("0")])

    def test_degree_mismatch_fails(self):
        # both vectors are genuine syzygies of the nodal cubic, but their
        # degrees cannot witness freeness of a cubic
        c = curve("y^2*z - x^3 - x^2*z")
        s = syzygy_analysis(c)
        v1, v2 = s.minimal_generators[0], s.minimal_generators[1]
        assert saito_check(c, list(v1.components), list(v2.components)) is False


class TestAnalyze:
    def test_smooth_conic(self):
        r = analyze(curve("x^2 + y^2 - z^2"))
        assert r.tau_global == 0
        assert r.bour_hilbert == r.bour_formula == 1
        assert r.classification == CLASS_NEARLY_FREE
        assert r.consistent

    def test_prime_field_run(self):
        r = analyze(curve("y^2*z - x^3 - x^2*z", PrimeField(32003)))
        assert r.bour_hilbert == 3 and r.consistent

    def test_flags_cover_the_three_methods(self):
        r = analyze(curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2"))
        assert r.bour_hilbert == r.bour_formula == r.bour_local_sum + r.residual
        assert set(r.flags) >= {"hilbert_eq_formula", "local_sum_plus_residual",
                                "bour_ge_ell", "epsilon_gcd_one"}
