import math
import unittest
import torch
import torch.testing as te
import freemaps.ansatz.determinant as d
import freemaps.ansatz.family as f
import freemaps.ansatz.weights as w
import freemaps.exact.trig as tr
import freemaps.search.scan as sc
import freemaps.verify.registry as rg

COS, SIN = tr.TrigPoly.cosine(), tr.TrigPoly.sine()


class GridTestCase(unittest.TestCase):
    def test(self):
        te.assert_close(
            sc.grid(4),
            torch.tensor(
                [0, math.pi / 2, math.pi, 3 * math.pi / 2],
                dtype=torch.float64,
            ),
        )

    def test_too_small(self):
        with self.assertRaises(ValueError):
            sc.grid(1)


class EvaluateTestCase(unittest.TestCase):
    def test(self):
        z = torch.tensor([0, math.pi / 2, math.pi], dtype=torch.float64)
        res = sc.evaluate(tr.TrigPoly.of("1/2", {1: 2}, {2: 1}), z)
        te.assert_close(
            res, torch.tensor([2.5, 0.5, -1.5], dtype=torch.float64)
        )


class DeterminantSamplesTestCase(unittest.TestCase):
    def test_circle(self):
        spec = f.AnsatzSpec(w.WeightSet(0, ((),)), (COS.scale(3), SIN))
        res = sc.determinant_samples(spec, 16)
        te.assert_close(res, torch.full((16,), 3.0, dtype=torch.float64))
        self.assertAlmostEqual(sc.scan_determinant(spec, 16), 3.0)

    def test_family_tensor_shape(self):
        spec = f.AnsatzSpec(w.WeightSet(0, ((),)), (COS, SIN))
        sut = sc.family_tensor(f.derivative_family(spec), sc.grid(8))
        self.assertEqual(sut.shape, torch.Size([8, 2, 2]))


class SignMarginTestCase(unittest.TestCase):
    def test(self):
        self.assertEqual(
            sc.sign_margin(torch.tensor([1.0, 2.0, -0.5])), -0.5
        )
        self.assertEqual(
            sc.sign_margin(torch.tensor([-1.0, -2.0, 0.5])), -0.5
        )
        self.assertEqual(sc.sign_margin(torch.tensor([-1.0, -3.0])), 1.0)


class ExactAgreementTestCase(unittest.TestCase):
    def assert_agrees(self, name: str, n: int):
        spec = rg.load_spec(name)
        exact = d.osculating_det(f.derivative_family(spec))
        samples = sc.determinant_samples(spec, n)
        expected = sc.evaluate(exact, sc.grid(n))
        te.assert_close(samples, expected, rtol=1e-9, atol=1e-9)
        self.assertTrue(torch.equal(torch.sign(samples), torch.sign(expected)))

    def test_two_torus(self):
        self.assert_agrees("t2", 64)
        self.assertLess(
            sc.determinant_samples(rg.load_spec("t2"), 64).max().item(), 0
        )

    def test_three_torus(self):
        self.assert_agrees("t3", 32)
