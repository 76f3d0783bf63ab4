import unittest
import hypothesis as h
import hypothesis.strategies as hs
import sympy
import freemaps.ansatz.determinant as d
import freemaps.ansatz.family as f
import freemaps.ansatz.weights as w
import freemaps.errors as e
import freemaps.exact.poly as po
import freemaps.exact.trig as tr
import freemaps.verify.registry as rg
import tests.strategies as s

COS, SIN = tr.TrigPoly.cosine(), tr.TrigPoly.sine()

TWO_TORUS = f.AnsatzSpec(
    w.WeightSet(1, ((1,), (2,)), fixed=True),
    (
        tr.TrigPoly.of(2),
        tr.TrigPoly.of(1, sin={1: 1}),
        COS,
        tr.TrigPoly.of("1/2", sin={1: 1}),
        COS,
    ),
    label="t2",
)


class DerivativeWordsTestCase(unittest.TestCase):
    def test_graded(self):
        sut = f.derivative_words(1, 2)
        self.assertEqual(
            [x.label for x in sut], ["x1", "z", "x1x1", "x1z", "zz"]
        )
        self.assertEqual([x.order for x in sut], [1, 1, 2, 2, 2])

    def test_grlex(self):
        sut = f.derivative_words(2, 2, f.GRLEX)
        self.assertEqual(
            [x.label for x in sut],
            ["x1", "x2", "z", "x1x1", "x1x2", "x1z", "x2x2", "x2z", "zz"],
        )

    def test_graded_two_variables(self):
        sut = f.derivative_words(2, 2)
        self.assertEqual(
            [x.label for x in sut],
            ["x1", "x2", "z", "x1x1", "x1x2", "x2x2", "x1z", "x2z", "zz"],
        )

    def test_circle(self):
        self.assertEqual(
            [x.label for x in f.derivative_words(0, 2)], ["z", "zz"]
        )

    def test_count_is_critical_dimension(self):
        for ordering in f.ORDERINGS:
            for k in range(5):
                for order in range(1, 5):
                    with self.subTest(ordering=ordering, k=k, order=order):
                        self.assertEqual(
                            len(f.derivative_words(k, order, ordering)),
                            w.critical_dimension(k + 1, order),
                        )

    def test_unknown_ordering(self):
        with self.assertRaises(ValueError):
            f.derivative_words(1, 2, "lex")


class AnsatzSpecTestCase(unittest.TestCase):
    def test_valid(self):
        self.assertEqual(TWO_TORUS.problems(), [])
        self.assertEqual(TWO_TORUS.m, 2)
        self.assertEqual(TWO_TORUS.target_dim, 5)

    def test_problems(self):
        sut = f.AnsatzSpec(
            w.WeightSet(1, ((1,),), fixed=True), (COS, SIN), ordering="lex"
        )
        self.assertEqual(
            sut.problems(),
            [
                "loop length 2 ≠ target_dim 3",
                "target_dim 3 ≠ q_(m,k) 5 for m=2, k=2",
                "unknown ordering 'lex'",
            ],
        )

    def test_with_loop(self):
        sut = TWO_TORUS.with_loop([SIN] * 5)
        self.assertEqual(sut.loop, (SIN,) * 5)
        self.assertEqual(sut.label, "t2")


class DerivativeFamilyTestCase(unittest.TestCase):
    def test_two_torus(self):
        sut = f.derivative_family(TWO_TORUS)
        self.assertEqual(sut.ordering, ("x1", "z", "x1x1", "x1z", "zz"))
        self.assertEqual(sut.dimension, 5)
        # z column is v'.
        self.assertEqual(
            sut.columns[1], tuple(x.derivative() for x in TWO_TORUS.loop)
        )
        # X v rotates block j by its weight and kills the fixed entry.
        self.assertEqual(
            sut.columns[0],
            (
                tr.TrigPoly.of(-1, sin={1: -1}),
                tr.TrigPoly.of(2),
                tr.TrigPoly.of(-1, sin={1: -2}),
                COS.scale(2),
                tr.TrigPoly(),
            ),
        )

    def test_rows(self):
        sut = f.derivative_family(TWO_TORUS)
        rows = sut.rows()
        self.assertEqual(len(rows), 5)
        self.assertEqual(rows[4][1], SIN.scale(-1))

    def test_permuted(self):
        sut = f.derivative_family(TWO_TORUS).permuted([4, 3, 2, 1, 0])
        self.assertEqual(sut.ordering, ("zz", "x1z", "x1x1", "z", "x1"))

    def test_not_square(self):
        spec = f.AnsatzSpec(
            w.WeightSet(1, ((1,),), fixed=True), (COS, SIN, COS)
        )
        with self.assertRaises(e.DimensionMismatch):
            f.derivative_family(spec)

    def test_loop_length(self):
        with self.assertRaises(e.DimensionMismatch):
            f.derivative_family(TWO_TORUS.with_loop([COS]))


class OsculatingColumnsTestCase(unittest.TestCase):
    def test_numbers(self):
        weight_set = w.WeightSet(1, ((1,), (2,)), fixed=True)
        jets = [[1, 0, 0, 1, 5], [0, 1, 1, 0, 0], [0, 0, 0, 0, 1]]
        sut = f.osculating_columns(
            weight_set, jets, f.derivative_words(1, 2)
        )
        self.assertEqual(
            sut,
            [
                [0, 1, -2, 0, 0],
                [0, 1, 1, 0, 0],
                [-1, 0, 0, -4, 0],
                [-1, 0, 0, 2, 0],
                [0, 0, 0, 0, 1],
            ],
        )


def full_map(spec: f.AnsatzSpec, xs, z) -> list:
    """R(x) v(z) with every block rotated by the angle <w_j, x>."""
    result = [s.trig_expression(p, z) for p in spec.loop]
    weights = spec.weight_set.weights
    for weight, (a, b) in zip(weights, spec.weight_set.blocks()):
        angle = sum(c * x for c, x in zip(weight, xs))
        va, vb = result[a], result[b]
        result[a] = sympy.cos(angle) * va - sympy.sin(angle) * vb
        result[b] = sympy.sin(angle) * va + sympy.cos(angle) * vb
    return result


def full_det(spec: f.AnsatzSpec, x0, t0) -> sympy.Float:
    """Determinant of the full osculating matrix at (x0, z = 2 atan t0)."""
    xs = sympy.symbols(f"x1:{spec.weight_set.k + 1}")
    z = sympy.Symbol("z")
    values = {x: po.to_sympy_rational(v) for x, v in zip(xs, x0)}
    values[z] = 2 * sympy.atan(po.to_sympy_rational(t0))
    mapping = full_map(spec, xs, z)
    columns = []
    for word in f.derivative_words(
        spec.weight_set.k, spec.order, spec.ordering
    ):
        symbols = [xs[i] for i in word.variables] + [z] * word.z
        columns.append(
            [
                sympy.diff(entry, *symbols).subs(values).evalf(60)
                for entry in mapping
            ]
        )
    return sympy.Matrix(columns).det(method="berkowitz")


class FullMatrixTestCase(unittest.TestCase):
    def assert_x_independent(self, spec, x0, t0):
        exact = tr.eval_weierstrass(
            d.osculating_det(f.derivative_family(spec)), t0
        )
        sut = full_det(spec, x0, t0)
        scale = po.to_sympy_rational(max(1, abs(exact)))
        tolerance = sympy.Float(10) ** -30 * scale
        self.assertLess(abs(sut - po.to_sympy_rational(exact)), tolerance)

    @h.settings(max_examples=5, deadline=None)
    @h.given(hs.lists(s.rationals, min_size=1, max_size=1), s.rationals)
    def test_two_torus(self, x0, t0):
        self.assert_x_independent(TWO_TORUS, x0, t0)

    @h.settings(max_examples=3, deadline=None)
    @h.given(hs.lists(s.rationals, min_size=2, max_size=2), s.rationals)
    def test_three_torus(self, x0, t0):
        self.assert_x_independent(rg.load_spec("t3"), x0, t0)


class ColumnOrderTestCase(unittest.TestCase):
    @h.settings(max_examples=20, deadline=None)
    @h.given(
        hs.sampled_from([TWO_TORUS, rg.load_spec("t3")]),
        hs.data(),
    )
    def test_swapping_two_columns_negates(self, spec, data):
        family = f.derivative_family(spec)
        n = family.dimension
        i = data.draw(hs.integers(min_value=0, max_value=n - 1))
        j = data.draw(hs.integers(min_value=0, max_value=n - 1))
        h.assume(i != j)
        permutation = list(range(n))
        permutation[i], permutation[j] = j, i
        sut = d.family_form(family.permuted(permutation))
        expected = d.family_form(family)
        self.assertEqual(sut.denom_power, expected.denom_power)
        self.assertEqual(sut.numerator, -expected.numerator)
