# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest
from fractions import Fraction

import mpmath as mp
import pypolyzeta.identify as identify
import pypolyzeta.numcheck as numcheck
from pypolyzeta.symbols import CPoly, GAMMA, Rule, zs, zsigma
from pypolyzeta.words import x_word, y_word

F = Fraction


class TestHarmonicSums(unittest.TestCase):
    def test_small_values(self) -> None:
        self.assertEqual(numcheck.harmonic_sum((1, 1), 3), 1)
        self.assertEqual(numcheck.harmonic_sum((2,), 2), F(5, 4))
        self.assertEqual(numcheck.harmonic_sum((1,), 4), F(25, 12))
        self.assertEqual(numcheck.harmonic_sum((2, 1), 0), 0)
        self.assertEqual(numcheck.harmonic_sum((2, 1), 1), 0)

    def test_index_forms(self) -> None:
        expected = numcheck.harmonic_sum((2, 1), 20)
        self.assertEqual(numcheck.harmonic_sum("2,1", 20), expected)
        self.assertEqual(numcheck.harmonic_sum(y_word(2, 1), 20), expected)
        self.assertEqual(numcheck.harmonic_sum(x_word("011"), 20), expected)
        self.assertIsInstance(expected, Fraction)

    def test_float_mode_matches_exact(self) -> None:
        for parts in ((2,), (2, 1), (3, 1, 2), (1, 1)):
            exact = numcheck.harmonic_sum(parts, 50, exact=True)
            with mp.workdps(60):
                approx = numcheck.harmonic_sum(parts, 50, exact=False)
                difference = approx - mp.mpf(exact.numerator) / exact.denominator
                self.assertLess(abs(difference), mp.mpf(10) ** -40)

    def test_stuffle_identity(self) -> None:
        # Truncated sums obey the quasi-shuffle product exactly.
        for n in (1, 7, 50):

            def h(*s: int) -> Fraction:
                return numcheck.harmonic_sum(s, n)

            self.assertEqual(h(2) * h(1), h(2, 1) + h(1, 2) + h(3))
            self.assertEqual(h(1) * h(1), 2 * h(1, 1) + h(2))
            self.assertEqual(h(2, 1) * h(3), h(2, 1, 3) + h(2, 3, 1) + h(3, 2, 1) + h(2, 4) + h(5, 1))

    def test_bad_index(self) -> None:
        with self.assertRaises(ValueError):
            numcheck.harmonic_sum((), 3)
        with self.assertRaises(ValueError):
            numcheck.harmonic_sum((2, 0), 3)
        with self.assertRaises(ValueError):
            numcheck.harmonic_sum(x_word("010"), 3)
        with self.assertRaises(ValueError):
            numcheck.harmonic_sum((2,), -1)

    def test_composition(self) -> None:
        c = numcheck.as_composition("3,1,2")
        self.assertEqual((c.weight, c.depth, str(c)), (6, 3, "3,1,2"))
        self.assertTrue(c.is_convergent)
        self.assertFalse(numcheck.as_composition((1, 2)).is_convergent)


class TestEstimates(unittest.TestCase):
    def test_zeta_two(self) -> None:
        estimate = numcheck.mzv_estimate((2,), 10**4, refine=True)
        self.assertLess(abs(estimate.value - mp.zeta(2)), 1e-6)
        self.assertLess(abs(estimate.value - mp.zeta(2)), estimate.error)
        plain = numcheck.mzv_estimate((2,), 10**4)
        self.assertLess(abs(plain.value - mp.zeta(2)), plain.error)

    def test_depth_two(self) -> None:
        # zeta(2, 1) = zeta(3)
        estimate = numcheck.mzv_estimate("2,1", 10**4, refine=True)
        self.assertLess(abs(estimate.value - mp.zeta(3)), 1e-3)

    def test_divergent(self) -> None:
        with self.assertRaises(ValueError):
            numcheck.mzv_estimate((1, 2), 10)
        with self.assertRaises(ValueError):
            numcheck.mzv_estimate((2,), 0)

    def test_gamma(self) -> None:
        self.assertLess(abs(numcheck.euler_gamma_estimate(1000) - mp.euler), 1e-10)
        self.assertAlmostEqual(float(numcheck.euler_gamma_estimate(100)), 0.5772156649, places=8)
        with self.assertRaises(ValueError):
            numcheck.euler_gamma_estimate(0)

    def test_error_bound(self) -> None:
        for depth in (1, 2, 3, 4):
            bounds = [numcheck.error_bound(depth, n) for n in (1, 10, 100, 10**3, 10**6)]
            self.assertEqual(bounds, sorted(bounds, reverse=True))
            self.assertLessEqual(
                numcheck.error_bound(depth, 10**4, refined=True),
                numcheck.error_bound(depth, 10**4),
            )

    def test_symbols(self) -> None:
        s2 = numcheck.evaluate_symbol(zsigma(y_word(2)), 10**4)
        self.assertLess(abs(s2.value - mp.pi**2 / 6), 1e-6)
        s3 = numcheck.evaluate_symbol(zs(x_word("001")), 10**4)
        self.assertLess(abs(s3.value - mp.zeta(3)), 1e-6)
        g = numcheck.evaluate_symbol(GAMMA, 100)
        self.assertLess(abs(g.value - mp.euler), 1e-8)

    def test_product(self) -> None:
        p = CPoly.symbol(zsigma(y_word(2))) * CPoly.symbol(GAMMA)
        estimate = numcheck.evaluate_cpoly(p, 10**4)
        self.assertAlmostEqual(float(estimate.value), 0.9494817111, places=6)
        fixed = numcheck.evaluate_cpoly(CPoly.symbol(GAMMA) * 2 + 1, 10, gamma=mp.mpf(1))
        self.assertEqual(fixed.value, 3)
        self.assertEqual(fixed.error, 0)


class TestVerification(unittest.TestCase):
    def test_relation(self) -> None:
        rule = Rule(zsigma(y_word(2, 1)), CPoly.symbol(zsigma(y_word(3))) * F(3, 2))
        result = numcheck.verify_relation_numeric(rule, n=10**4, tol=1e-2)
        self.assertTrue(result.passed)
        self.assertLess(abs(result.residual), 1e-3)

    def test_false_relation(self) -> None:
        wrong = Rule(zsigma(y_word(2, 1)), CPoly.symbol(zsigma(y_word(3))))
        result = numcheck.verify_relation_numeric(wrong, n=10**4, tol=1e-2)
        self.assertFalse(result.passed)
        self.assertAlmostEqual(float(result.residual), float(mp.zeta(3)) / 2, places=3)

    def test_polynomial_relation(self) -> None:
        # zeta(4) = 2/5 zeta(2)^2
        p = CPoly.symbol(zs(x_word("0001"))) - CPoly.symbol(zs(x_word("01"))) ** 2 * F(2, 5)
        self.assertTrue(numcheck.verify_relation_numeric(p, n=10**4, tol=1e-3).passed)

    def test_gamma_constant(self) -> None:
        gamma, zeta2 = CPoly.symbol(GAMMA), CPoly.symbol(zsigma(y_word(2)))
        value = (gamma**2 - zeta2) / 2
        self.assertTrue(numcheck.verify_gamma_constant((1, 1), value, n=10**4).passed)
        self.assertFalse(numcheck.verify_gamma_constant((1, 1), gamma**2 / 2, n=10**4).passed)


class TestDerivedRelations(unittest.TestCase):
    def test_rules_up_to_weight_five(self) -> None:
        for rs in identify.local_coordinate_identification(5):
            for rule in rs.rules:
                result = numcheck.verify_relation_numeric(rule, n=10**6, tol=1e-3)
                self.assertTrue(result.passed, (rule.format("basis"), result.residual))

    def test_reduced_depth_two(self) -> None:
        reduced = numcheck.evaluate_cpoly(identify.reduce_zeta((2, 1)), 10**6)
        direct = numcheck.mzv_estimate((2, 1), 10**6, refine=True)
        with mp.workdps(30):
            self.assertLess(abs(reduced.value - mp.zeta(3)), 1e-5)
            self.assertLess(abs(direct.value - mp.zeta(3)), 1e-5)


if __name__ == "__main__":
    unittest.main()
