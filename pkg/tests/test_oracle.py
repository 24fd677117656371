"""Linear-algebra oracle: independent checks of the Groebner machinery."""

import random

import pytest

from bourbaki.curve import (affine_local_generators, bourbaki_ideal,
                            jacobian_ideal, local_degree, projective_points,
                            syzygy_analysis, validate_curve)
from bourbaki.errors import NotStabilized
from bourbaki.fields import QQ, PrimeField
from bourbaki.groebner import buchberger, hilbert_degree
from bourbaki.oracle import (degree_bruteforce, graded_dim_bruteforce,
                             local_dim_bruteforce, matrix_rank, syzygy_verify)
from bourbaki.parsing import parse_polynomial
from bourbaki.poly import Polynomial, random_polynomial


def P(text, field=QQ):
    return parse_polynomial(text, field)


class TestMatrixRank:
    def test_rational_rank(self):
        q = QQ.from_int
        rows = [[q(1), q(2), q(3)], [q(2), q(4), q(6)], [q(0), q(1), q(1)]]
        assert matrix_rank(rows, QQ) == 2

    def test_prime_field_rank(self):
        fp = PrimeField(7)
        rows = [[fp.from_int(1), fp.from_int(3)],
                [fp.from_int(8), fp.from_int(3)]]  # 8 = 1 mod 7
        assert matrix_rank(rows, fp) == 1

    def test_full_rank_random(self):
        rng = random.Random(3)
        q = QQ.from_int
        rows = [[q(rng.randint(-9, 9)) for _ in range(5)] for _ in range(5)]
        k = matrix_rank(rows, QQ)
        assert 0 <= k <= 5

    def test_zero_matrix(self):
        assert matrix_rank([[QQ.zero, QQ.zero]], QQ) == 0


class TestGradedDims:
    def test_against_groebner_staircase(self):
        rng = random.Random(11)
        fp = PrimeField(32003)
        for _ in range(5):
            gens = [random_polynomial(rng, 3, rng.randint(1, 3), fp,
                                      homogeneous=True)
                    for _ in range(2)]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            gb = buchberger(gens)
            from bourbaki.groebner import graded_dimension
            for n in range(7):
                assert (graded_dim_bruteforce(gens, n)
                        == graded_dimension(gb, n))

    def test_principal_ideal(self):
        # dim of degree-n part of k[x,y,z]/(f), deg f = 2: C(n+2,2)-C(n,2)
        gens = [P("x^2 + y*z")]
        assert graded_dim_bruteforce(gens, 0) == 1
        assert graded_dim_bruteforce(gens, 3) == 10 - 3
        assert graded_dim_bruteforce(gens, 5) == 21 - 10


class TestDegreeBruteforce:
    def test_known_ideal(self):
        gens = [P("2*z^2"), P("y*z"), P("2*x*z + 3*y^2")]
        assert degree_bruteforce(gens) == 3
        assert hilbert_degree(buchberger(gens)) == 3

    def test_complete_intersection(self):
        assert degree_bruteforce([P("x^2 - y*z"), P("y^3 - z^3")]) == 6

    def test_point_ideal(self):
        assert degree_bruteforce([P("y"), P("z")]) == 1

    def test_positive_dimensional_raises(self):
        with pytest.raises(NotStabilized):
            degree_bruteforce([P("x")], cap=12)


class TestLocalDims:
    def test_matches_local_degree_on_quartic(self):
        c = validate_curve(P("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2"))
        b = bourbaki_ideal(syzygy_analysis(c))
        gens = list(b.generators)
        points, _ = projective_points(gens)
        assert points
        for pt in points:
            affine = affine_local_generators(gens, pt)
            assert local_dim_bruteforce(affine) == local_degree(gens, pt)

    def test_fat_point(self):
        # (u, v)^2 at the origin has local dimension 3
        u, v = (Polynomial.variable(i, 2, QQ) for i in range(2))
        assert local_dim_bruteforce([u * u, u * v, v * v]) == 3


class TestSyzygyVerify:
    def test_accepts_true_syzygy(self):
        c = validate_curve(P("y^2*z - x^3 - x^2*z"))
        s = syzygy_analysis(c)
        for vec in s.minimal_generators:
            assert syzygy_verify(vec, jacobian_ideal(c))

    def test_rejects_non_syzygy(self):
        c = validate_curve(P("y^2*z - x^3 - x^2*z"))
        s = syzygy_analysis(c)
        from bourbaki.groebner import ModuleVector
        one = Polynomial.constant(QQ.one, 3, QQ)
        zero = Polynomial.zero(3, QQ)
        bad = ModuleVector((one, zero, zero), (0, 0, 0))
        assert not syzygy_verify(bad, jacobian_ideal(c))
