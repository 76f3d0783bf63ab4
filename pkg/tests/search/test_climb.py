import unittest
import freemaps.ansatz.family as f
import freemaps.ansatz.weights as w
import freemaps.errors as e
import freemaps.exact.rational as ra
import freemaps.exact.trig as tr
import freemaps.search.climb as cl
import freemaps.serialize as se
import freemaps.verify.registry as rg

COS, SIN = tr.TrigPoly.cosine(), tr.TrigPoly.sine()

# The determinant of (a cos z, sin z) is the constant a.
CIRCLE = f.AnsatzSpec(w.WeightSet(0, ((),)), (COS, SIN), label="circle")


def config(**kwargs) -> cl.SearchConfig:
    free = [cl.FreeCoefficient(0, "cos1", ra.Rational(1), ra.Rational(2))]
    return cl.SearchConfigFactory().create(
        CIRCLE, free, denominator=10, **kwargs
    )


class FreeCoefficientTestCase(unittest.TestCase):
    def test_read_write(self):
        poly = tr.TrigPoly.of(1, {2: 3}, {1: 4})
        for term, value in (("const", 1), ("cos2", 3), ("sin1", 4)):
            with self.subTest(term=term):
                sut = cl.FreeCoefficient(0, term, -9, 9)
                self.assertEqual(sut.read(poly), value)
                self.assertEqual(
                    sut.read(sut.write(poly, ra.Rational(7))), 7
                )
        self.assertEqual(
            cl.FreeCoefficient(0, "sin3", -1, 1).read(poly), 0
        )

    def test_unknown_term(self):
        with self.assertRaises(ValueError):
            cl.FreeCoefficient(0, "tan1", -1, 1).read(COS)


class SearchConfigFactoryTestCase(unittest.TestCase):
    def test_defaults(self):
        sut = cl.SearchConfigFactory().create(CIRCLE)
        self.assertEqual(sut.grid_size, 256)
        self.assertEqual(sut.max_iters, 200)
        self.assertEqual(sut.seed, 0)
        self.assertEqual(sut.objective, cl.SIGN_MARGIN)
        self.assertEqual(sut.restarts, 4)
        self.assertEqual(sut.denominator, 1000)
        self.assertEqual(sut.keep_uncertified, 3)
        self.assertEqual(sut.problems(), [])

    def test_problems(self):
        sut = cl.SearchConfigFactory().create(
            CIRCLE,
            [cl.FreeCoefficient(3, "const", ra.Rational(1), ra.Rational(0))],
            grid_size=3,
            objective="max",
            restarts=0,
        )
        self.assertEqual(
            sut.problems(),
            [
                "grid_size 3 < 5",
                "unknown objective 'max'",
                "free component 3 missing",
                "empty bounds [1, 0] on component 3",
                "no multiple of 1/1000 in [1, 0]",
                "restarts 0 must be positive",
            ],
        )
        with self.assertRaises(e.DimensionMismatch):
            cl.search(sut)

    def test_unknown_term(self):
        sut = cl.SearchConfigFactory().create(
            CIRCLE, [cl.FreeCoefficient(0, "tan1", ra.Rational(0), 1)]
        )
        self.assertEqual(sut.problems(), ["unknown term 'tan1'"])


class SearchTestCase(unittest.TestCase):
    def test_climbs_to_the_bound(self):
        sut = cl.search(config(restarts=2))
        self.assertEqual(len(sut), 1)
        self.assertEqual(sut[0].coefficients, (ra.Rational(2),))
        self.assertAlmostEqual(sut[0].float_score, 2.0)
        self.assertIsNotNone(sut[0].certified)
        self.assertEqual(
            sut[0].certified.determinant, tr.TrigPoly.of(2)
        )

    def test_deterministic(self):
        first = cl.search(config(restarts=3, seed=7))
        second = cl.search(config(restarts=3, seed=7))
        self.assertEqual(
            [x.coefficients for x in first], [x.coefficients for x in second]
        )

    def test_two_torus_streams_are_identical(self):
        def stream(seed):
            spec = rg.load_spec("t2")
            free = [
                cl.FreeCoefficient(1, "sin1", ra.Rational(0), ra.Rational(2)),
                cl.FreeCoefficient(
                    3, "const", ra.Rational(-1), ra.Rational(1)
                ),
            ]
            sut = cl.SearchConfigFactory().create(
                spec,
                free,
                grid_size=64,
                max_iters=20,
                seed=seed,
                restarts=2,
                denominator=10,
            )
            return "".join(
                se.dump_line(se.candidate_to_json(x)) for x in cl.search(sut)
            )

        first = stream(11)
        self.assertTrue(first)
        self.assertEqual(stream(11), first)

    def test_min_abs(self):
        sut = cl.search(config(restarts=1, objective=cl.MIN_ABS))
        self.assertEqual(sut[0].coefficients, (ra.Rational(2),))

    def test_below_threshold_is_not_certified(self):
        sut = cl.search(config(restarts=1, threshold=10.0))
        self.assertEqual(len(sut), 1)
        self.assertIsNone(sut[0].certified)

    def test_certify_all(self):
        sut = cl.search(config(restarts=1, threshold=10.0), certify_all=True)
        self.assertIsNotNone(sut[0].certified)


class CompleteLoopTestCase(unittest.TestCase):
    def test(self):
        # (cos z, c + a cos z + b sin z) has determinant b.
        base = cl.SearchConfigFactory().create(CIRCLE, restarts=1)
        sut = cl.complete_loop([COS], base)
        self.assertEqual(len(sut), 1)
        self.assertEqual(len(sut[0].coefficients), 3)
        self.assertEqual(sut[0].coefficients[2], 10)
        self.assertTrue(sut[0].certified.is_free)

    def test_prefix_too_long(self):
        base = cl.SearchConfigFactory().create(CIRCLE)
        with self.assertRaises(e.DimensionMismatch):
            cl.complete_loop([COS, SIN, COS], base)
