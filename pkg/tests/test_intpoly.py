"""Exact polynomial core: arithmetic, Sturm certification, surds, matrices.

sympy and numpy serve as independent oracles; every certified claim made
by specturan.intpoly is cross-checked against them here.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from specturan import intpoly as ip

try:
    from hypothesis import given, settings, strategies as st
except ImportError:
    pytest.skip("hypothesis not installed", allow_module_level=True)


def to_sympy(p):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in ip.trim(p) or (0,)])), x)


def random_poly(rng, max_deg=6, span=9):
    deg = rng.randrange(0, max_deg + 1)
    coeffs = [rng.randrange(-span, span + 1) for _ in range(deg)] + [rng.choice([1, -1, 2, -3])]
    return tuple(coeffs)


class TestArithmetic:
    def test_trim_and_degree(self):
        assert ip.trim((1, 2, 0, 0)) == (1, 2)
        assert ip.degree(()) == -1
        assert ip.degree((5,)) == 0
        assert ip.degree((0, 0, 3)) == 2

    def test_evaluate_horner(self):
        p = (6, -8, -1, 1)  # x^3 - x^2 - 8x + 6
        assert ip.evaluate(p, 3) == 0
        assert ip.evaluate(p, 0) == 6
        assert ip.evaluate(p, Fraction(1, 2)) == Fraction(6, 1) - 4 - Fraction(1, 4) + Fraction(1, 8)

    def test_mul_add_sub_against_sympy(self):
        rng = random.Random(7)
        for _ in range(50):
            p, q = random_poly(rng), random_poly(rng)
            assert to_sympy(ip.mul(p, q)) == to_sympy(p) * to_sympy(q)
            assert to_sympy(ip.add(p, q)) == to_sympy(p) + to_sympy(q)
            assert to_sympy(ip.sub(p, q)) == to_sympy(p) - to_sympy(q)

    def test_sub_x_times(self):
        rng = random.Random(11)
        for _ in range(20):
            p, q = random_poly(rng), random_poly(rng)
            expect = ip.sub(p, ip.mul((0, 1), q))
            assert ip.sub_x_times(p, q) == expect

    def test_derivative(self):
        assert ip.derivative((6, -8, -1, 1)) == (-8, -2, 3)
        assert ip.derivative((5,)) == ()

    def test_divmod_exact(self):
        rng = random.Random(13)
        for _ in range(40):
            p, q = random_poly(rng, 7), random_poly(rng, 4)
            quo, rem = ip.divmod_exact(p, q)
            assert ip.trim(ip.add(ip.mul(quo, q), rem)) == ip.trim(p)
            assert ip.degree(rem) < ip.degree(q)

    def test_divides(self):
        p = ip.mul((-3, 1), (2, 0, 1))  # (x-3)(x^2+2)
        assert ip.divides((-3, 1), p)
        assert ip.divides((2, 0, 1), p)
        assert not ip.divides((1, 1), p)

    def test_gcd_matches_sympy(self):
        rng = random.Random(17)
        for _ in range(30):
            common = random_poly(rng, 3)
            p = ip.mul(common, random_poly(rng, 3))
            q = ip.mul(common, random_poly(rng, 3))
            ours = ip.poly_gcd(p, q)
            x = sympy.Symbol("x")
            theirs = sympy.gcd(to_sympy(p).as_expr(), to_sympy(q).as_expr(), x)
            theirs_poly = sympy.Poly(theirs, x)
            # both primitive with positive leading coefficient
            coeffs = tuple(reversed([int(c) for c in theirs_poly.all_coeffs()]))
            if coeffs[-1] < 0:
                coeffs = tuple(-c for c in coeffs)
            assert ours == ip.primitive(coeffs)

    def test_squarefree(self):
        p = ip.mul(ip.mul((-1, 1), (-1, 1)), (1, 1))  # (x-1)^2 (x+1)
        sf = ip.squarefree(p)
        assert ip.divides((-1, 1), sf)
        assert ip.divides((1, 1), sf)
        assert ip.degree(sf) == 2

    def test_format_poly(self):
        assert ip.format_poly((6, -8, -1, 1)) == "x^3 - x^2 - 8*x + 6"
        assert ip.format_poly(()) == "0"
        assert ip.format_poly((-2,)) == "-2"
        assert ip.format_poly((0, 1)) == "x"


class TestSturm:
    def test_count_real_roots_matches_sympy(self):
        rng = random.Random(23)
        for _ in range(40):
            p = random_poly(rng, 6)
            if ip.degree(p) < 1:
                continue
            ours = ip.count_real_roots(p)
            theirs = len(set(to_sympy(p).real_roots()))
            assert ours == theirs, ip.format_poly(p)

    def test_count_roots_above(self):
        p = ip.mul(ip.mul((-1, 1), (-2, 1)), (3, 1))  # roots 1, 2, -3
        assert ip.count_roots_above(p, 0) == 2
        assert ip.count_roots_above(p, 1) == 1  # interval is open at 1
        assert ip.count_roots_above(p, 2) == 0
        assert ip.count_roots_above(p, -4) == 3

    def test_largest_root_bracket_against_numpy(self):
        rng = random.Random(29)
        checked = 0
        while checked < 30:
            p = random_poly(rng, 6)
            if ip.degree(p) < 1 or ip.count_real_roots(p) == 0:
                continue
            br = ip.largest_root_bracket(p, tol=Fraction(1, 10**12))
            roots = np.roots(list(reversed(p)))
            real = [r.real for r in roots if abs(r.imag) < 1e-9]
            assert real, ip.format_poly(p)
            assert abs(float(br) - max(real)) < 1e-8
            assert br.width <= Fraction(1, 10**12)
            assert br.lo < br.hi or ip.evaluate(p, br.hi) == 0
            checked += 1

    def test_no_real_root_raises(self):
        with pytest.raises(ip.NoRealRootError):
            ip.largest_root_bracket((1, 0, 1))  # x^2 + 1

    def test_exact_integer_root(self):
        p = (6, -8, -1, 1)  # largest root exactly 3
        assert ip.compare_root_to(p, 3) == 0
        assert ip.compare_root_to(p, Fraction(29, 10)) == 1
        assert ip.compare_root_to(p, Fraction(31, 10)) == -1
        br = ip.largest_root_bracket(p, tol=Fraction(1, 10**10))
        assert br.lo < 3 <= br.hi

    def test_compare_root_to_surd(self):
        p = (-2, 0, 1)  # x^2 - 2
        assert ip.compare_root_to(p, ip.Surd.sqrt(2)) == 0
        assert ip.compare_root_to(p, ip.Surd.sqrt(3)) == -1
        assert ip.compare_root_to(p, 1) == 1

    def test_compare_largest_roots_equalities(self):
        base = (-2, 0, 1)  # sqrt(2)
        p = ip.mul(base, (-1, 1))   # roots sqrt2, -sqrt2, 1
        q = ip.mul(base, (5, 1))    # roots sqrt2, -sqrt2, -5
        assert ip.compare_largest_roots(p, q) == 0
        assert ip.compare_largest_roots(p, (-3, 0, 1)) == -1  # vs sqrt(3)
        assert ip.compare_largest_roots((-3, 0, 1), p) == 1

    def test_compare_largest_roots_close_calls(self):
        # roots sqrt(2) vs the rational 1.4142136 close by
        p = (-2, 0, 1)
        r = Fraction(14142136, 10**7)
        q = (-r, 1)
        expect = 1 if ip.Surd.sqrt(2) > r else -1
        assert ip.compare_largest_roots(p, q) == expect

    def test_compare_largest_roots_against_sympy(self):
        rng = random.Random(31)
        done = 0
        while done < 20:
            p, q = random_poly(rng, 5), random_poly(rng, 5)
            if ip.degree(p) < 1 or ip.degree(q) < 1:
                continue
            if ip.count_real_roots(p) == 0 or ip.count_real_roots(q) == 0:
                continue
            rp = max(to_sympy(p).real_roots())
            rq = max(to_sympy(q).real_roots())
            expect = 0 if sympy.simplify(rp - rq) == 0 else (1 if (rp - rq).is_positive else -1)
            assert ip.compare_largest_roots(p, q) == expect
            done += 1


class TestSurd:
    def test_normalisation(self):
        assert ip.Surd(0, 1, 8) == ip.Surd(0, 2, 2)
        assert ip.Surd(0, 3, 4) == ip.Surd(6)
        assert ip.Surd(1, 0, 7) == ip.Surd(1)

    def test_sqrt_of_fraction(self):
        s = ip.Surd.sqrt(Fraction(9, 4))
        assert s == Fraction(3, 2)
        t = ip.Surd.sqrt(Fraction(1, 2))
        assert abs(float(t) - math.sqrt(0.5)) < 1e-15

    def test_golden_ratio_identity(self):
        phi = (1 + ip.Surd.sqrt(5)) / 2
        assert phi * phi == phi + 1

    def test_sign_near_ties(self):
        # 99^2 = 9801 vs 70^2*2 = 9800: 99 - 70*sqrt(2) is tiny but positive
        s = ip.Surd(99, -70, 2)
        assert s.sign() == 1
        assert ip.Surd(-99, 70, 2).sign() == -1
        assert (ip.Surd.sqrt(2) * ip.Surd.sqrt(2) - 2).sign() == 0

    def test_arithmetic_matches_float(self):
        rng = random.Random(37)
        for _ in range(50):
            a, b = rng.randrange(-9, 10), rng.randrange(-9, 10)
            c, d = rng.randrange(-9, 10), rng.randrange(-9, 10)
            rad = rng.choice([2, 3, 5, 7])
            s = ip.Surd(a, b, rad)
            t = ip.Surd(c, d, rad)
            for op in ("add", "sub", "mul"):
                got = getattr(s, f"__{op}__")(t)
                want = getattr(float(s), f"__{op}__")(float(t))
                assert abs(float(got) - want) < 1e-9

    def test_division(self):
        s = ip.Surd(1, 1, 2)
        assert s / s == 1
        assert (s * 3) / 3 == s
        inv = 1 / s
        assert inv * s == 1

    def test_incompatible_radicands(self):
        with pytest.raises(ValueError):
            ip.Surd(0, 1, 2) + ip.Surd(0, 1, 3)

    def test_order_against_float(self):
        rng = random.Random(41)
        for _ in range(60):
            s = ip.Surd(rng.randrange(-5, 6), rng.randrange(-5, 6), 7)
            t = ip.Surd(rng.randrange(-5, 6), rng.randrange(-5, 6), 7)
            if abs(float(s) - float(t)) > 1e-9:
                assert (s < t) == (float(s) < float(t))

    @given(
        a=st.integers(-50, 50),
        b=st.integers(-50, 50),
        d=st.integers(0, 60),
    )
    def test_sign_agrees_with_high_precision(self, a, b, d):
        s = ip.Surd(a, b, d)
        approx = a + b * math.sqrt(d)
        if abs(approx) > 1e-6:
            assert s.sign() == (1 if approx > 0 else -1)
        else:
            # near-zero: decide by squaring, which is exact for this shape
            assert (s.sign() == 0) == (a * a == b * b * d and a * b <= 0)

    def test_polynomial_evaluation_at_surd(self):
        phi = (1 + ip.Surd.sqrt(5)) / 2
        assert ip.evaluate((-1, -1, 1), phi) == 0  # x^2 - x - 1


class TestMatrices:
    def test_bareiss_against_sympy(self):
        rng = random.Random(43)
        for n in (1, 2, 3, 4, 5, 6):
            for _ in range(8):
                mat = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
                assert ip.bareiss_det(mat) == int(sympy.Matrix(mat).det())

    def test_bareiss_singular(self):
        mat = [[1, 2, 3], [2, 4, 6], [0, 1, 5]]
        assert ip.bareiss_det(mat) == 0

    def test_charpoly_against_sympy(self):
        rng = random.Random(47)
        x = sympy.Symbol("x")
        for n in (1, 2, 3, 4, 5):
            for _ in range(6):
                mat = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
                ours = ip.charpoly_int(mat)
                theirs = sympy.Matrix(mat).charpoly(x).all_coeffs()
                assert list(reversed(ours)) == [int(c) for c in theirs]

    def test_charpoly_adjacency_matches_dense(self):
        rng = random.Random(53)
        for n in (2, 4, 6, 8):
            for _ in range(5):
                masks = [0] * n
                for i in range(n):
                    for j in range(i + 1, n):
                        if rng.random() < 0.4:
                            masks[i] |= 1 << j
                            masks[j] |= 1 << i
                dense = [[(masks[i] >> j) & 1 for j in range(n)] for i in range(n)]
                assert ip.charpoly_adjacency(masks) == ip.charpoly_int(dense)

    def test_charpoly_value_is_det(self):
        rng = random.Random(59)
        for _ in range(10):
            n = rng.randrange(2, 6)
            mat = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
            p = ip.charpoly_int(mat)
            for k in (-2, 0, 1, 3):
                shifted = [[k * (i == j) - mat[i][j] for j in range(n)] for i in range(n)]
                assert ip.evaluate(p, k) == ip.bareiss_det(shifted)
