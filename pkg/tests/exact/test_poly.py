import unittest
import hypothesis as h
import sympy
import freemaps.exact.poly as po
import freemaps.exact.rational as ra
import tests.strategies as s


class RatPolyTestCase(unittest.TestCase):
    def test_strip(self):
        sut = po.RatPoly.of(1, 2, 0, 0)
        self.assertEqual(sut.degree, 1)
        self.assertEqual(po.RatPoly().degree, -1)
        self.assertTrue(po.RatPoly.of(0, 0).is_zero())

    def test_call(self):
        self.assertEqual(po.RatPoly.of(-1, 0, 1)(ra.Rational(3)), 8)

    def test_divmod(self):
        quotient, remainder = divmod(
            po.RatPoly.of(-1, 0, 1), po.RatPoly.of(-1, 1)
        )
        self.assertEqual(quotient, po.RatPoly.of(1, 1))
        self.assertTrue(remainder.is_zero())

    def test_divide_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            divmod(po.X, po.RatPoly())

    def test_exact_div(self):
        with self.assertRaises(RuntimeError):
            po.RatPoly.of(1, 0, 1).exact_div(po.RatPoly.of(1, 1))

    def test_derivative(self):
        self.assertEqual(
            po.RatPoly.of(1, 2, 3).derivative(), po.RatPoly.of(2, 6)
        )

    def test_pow_and_compose(self):
        self.assertEqual(po.RatPoly.of(1, 1) ** 2, po.RatPoly.of(1, 2, 1))
        self.assertEqual(
            po.RatPoly.of(0, 0, 1).compose(po.RatPoly.of(1, 1)),
            po.RatPoly.of(1, 2, 1),
        )
        with self.assertRaises(ValueError):
            po.X ** -1

    def test_content(self):
        sut = po.RatPoly.of("1/2", "3/4")
        self.assertEqual(sut.content(), ra.Rational(1, 4))
        self.assertEqual(sut.primitive(), po.RatPoly.of(2, 3))
        self.assertEqual(
            po.RatPoly.of(-2, -4).primitive(), po.RatPoly.of(-1, -2)
        )

    def test_integer_coefficients(self):
        self.assertEqual(po.RatPoly.of(1, -2).integer_coefficients(), [1, -2])
        with self.assertRaises(ValueError):
            po.RatPoly.of("1/2").integer_coefficients()

    def test_display(self):
        sut = po.RatPoly.of(1, -2, 0, 18, -31)
        self.assertEqual(sut.display(), "-31t⁴ + 18t³ - 2t + 1")
        self.assertEqual(po.RatPoly().display(), "0")
        self.assertEqual(po.RatPoly.of(0, 1).display("u"), "u")

    def test_descending(self):
        self.assertEqual(
            po.RatPoly.descending([1, 0, -1]), po.RatPoly.of(-1, 0, 1)
        )

    def test_sympy_view(self):
        sut = po.RatPoly.of("1/2", 0, -3)
        self.assertEqual(
            sut.as_poly,
            sympy.Poly(
                -3 * po.T**2 + sympy.Rational(1, 2), po.T, domain=sympy.QQ
            ),
        )
        self.assertEqual(po.RatPoly.from_sympy(sut.as_poly), sut)
        self.assertTrue(po.RatPoly.from_sympy(po.RatPoly().as_poly).is_zero())

    def test_content_of_negative(self):
        sut = po.RatPoly.of("-3/2", "-9/4")
        self.assertEqual(sut.content(), ra.Rational(3, 4))
        self.assertEqual(sut.primitive(), po.RatPoly.of(-2, -3))


class GcdTestCase(unittest.TestCase):
    def test_gcd(self):
        self.assertEqual(
            po.gcd(po.RatPoly.of(-1, 0, 1), po.RatPoly.of(2, 2)),
            po.RatPoly.of(1, 1),
        )

    def test_squarefree_part(self):
        self.assertEqual(
            po.squarefree_part(po.RatPoly.of(1, 2, 1)), po.RatPoly.of(1, 1)
        )
        # 3(t - 1)²(t + 2) has the monic squarefree part (t - 1)(t + 2).
        self.assertEqual(
            po.squarefree_part(
                po.RatPoly.of(-1, 1) ** 2 * po.RatPoly.of(2, 1).scale(3)
            ),
            po.RatPoly.of(-2, 1, 1),
        )


class RatPolyPropertyTestCase(unittest.TestCase):
    @s.settings
    @h.given(s.polys(), s.nonzero_polys(3))
    def test_division(self, p, q):
        quotient, remainder = divmod(p, q)
        self.assertEqual(quotient * q + remainder, p)
        self.assertLess(remainder.degree, q.degree)

    @s.settings
    @h.given(s.polys(), s.polys(), s.rationals)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        self.assertEqual((p * q)(x), p(x) * q(x))
        self.assertEqual((p - q)(x), p(x) - q(x))

    @s.settings
    @h.given(s.nonzero_polys())
    def test_primitive_keeps_signs(self, p):
        sut = p.primitive()
        self.assertTrue(all(c.denominator == 1 for c in sut.coefficients))
        self.assertEqual(ra.sign(sut.leading_coefficient), ra.sign(
            p.leading_coefficient
        ))
        self.assertEqual(p, sut.scale(p.content()))
