# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import random
import unittest
from fractions import Fraction

import pypolyzeta.symbols as symbols
from pypolyzeta.symbols import CPoly, GAMMA, RewriteSystem, Rule
from pypolyzeta.words import x_word, X, Y, y_word

S2 = symbols.zsigma(y_word(2))
S3 = symbols.zsigma(y_word(3))
S4 = symbols.zsigma(y_word(4))
S21 = symbols.zsigma(y_word(2, 1))
Z01 = symbols.zs(x_word("01"))
Z001 = symbols.zs(x_word("001"))
Z011 = symbols.zs(x_word("011"))


def _sym(s: symbols.IrrSymbol, exponent: int = 1) -> CPoly:
    return CPoly.symbol(s, exponent)


def _weight3_y() -> RewriteSystem:
    return RewriteSystem(Y, [Rule(S21, _sym(S3) * Fraction(3, 2))], [S2, S3], 3)


class TestSymbols(unittest.TestCase):
    def test_admissible_indices(self) -> None:
        with self.assertRaises(ValueError):
            symbols.zsigma(y_word(1))
        with self.assertRaises(ValueError):
            symbols.zsigma(y_word(1, 2))
        with self.assertRaises(ValueError):
            symbols.zs(x_word("1"))
        with self.assertRaises(ValueError):
            symbols.zs(x_word("0101"))

    def test_weights_and_order(self) -> None:
        self.assertEqual(S21.weight, 3)
        self.assertEqual(Z011.weight, 3)
        self.assertLess(GAMMA, S2)
        self.assertLess(S3, S21)
        self.assertLess(S21, Z001)
        self.assertLess(Z001, Z011)

    def test_names(self) -> None:
        self.assertEqual(GAMMA.name(), "gamma")
        self.assertEqual(S3.name(), "zeta(3)")
        self.assertEqual(S21.name(), "zeta(Sigma[2,1])")
        self.assertEqual(Z011.name(), "zeta(S[011])")
        self.assertEqual(S21.name("basis"), "Sigma_{y2y1}")
        self.assertEqual(Z011.name("basis"), "S_{x0x1^2}")

    def test_json(self) -> None:
        for s in (GAMMA, S21, Z011):
            self.assertEqual(symbols.IrrSymbol.from_json(s.to_json()), s)
        with self.assertRaises(ValueError):
            symbols.IrrSymbol.from_json({"kind": "Li", "word": "1"})

    def test_zeta_symbol(self) -> None:
        self.assertEqual(symbols.zeta_symbol(3), Z001)
        with self.assertRaises(ValueError):
            symbols.zeta_symbol(1)


class TestCPoly(unittest.TestCase):
    def test_arithmetic(self) -> None:
        g = _sym(GAMMA)
        self.assertEqual(g * g, _sym(GAMMA, 2))
        self.assertEqual((_sym(S3) * _sym(S2)).weight(), 5)
        self.assertEqual(g - g, 0)
        self.assertEqual(CPoly.one() + 1, 2)
        self.assertEqual(_sym(S2) / 2, _sym(S2) * Fraction(1, 2))
        self.assertEqual((g + 1) ** 2, g * g + g * 2 + 1)

    def test_distributive(self) -> None:
        rng = random.Random(0)
        pool = [GAMMA, S2, S3, Z01, Z001]
        for _ in range(200):
            a, b, c = (
                _sym(rng.choice(pool)) * Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(3)
            )
            self.assertEqual((a + b) * c, a * c + b * c)
            self.assertEqual(a * b, b * a)

    def test_homogeneity(self) -> None:
        p = _sym(S2) + _sym(GAMMA, 2)
        self.assertTrue(p.is_homogeneous())
        self.assertEqual(p.weight(), 2)
        q = _sym(S2) + _sym(S3)
        with self.assertRaises(ValueError):
            q.weight()
        self.assertEqual(q.homogeneous_component(3), _sym(S3))

    def test_format(self) -> None:
        p = _sym(S3) * Fraction(3, 2)
        self.assertEqual(p.format(), "3/2*zeta(3)")
        q = (_sym(GAMMA, 2) - _sym(S2)) * Fraction(1, 2)
        self.assertEqual(q.format(), "1/2*gamma^2 - 1/2*zeta(2)")
        self.assertEqual(CPoly.zero().format(), "0")

    def test_json(self) -> None:
        p = _sym(S2, 2) * Fraction(2, 5) + _sym(GAMMA) * _sym(S3) - 7
        self.assertEqual(CPoly.from_json(p.to_json()), p)

    def test_negative_power(self) -> None:
        with self.assertRaises(ValueError):
            _sym(S2) ** -1


class TestSubstitution(unittest.TestCase):
    def test_substitute(self) -> None:
        rule = {S21: _sym(S3) * Fraction(3, 2)}
        self.assertEqual(symbols.substitute(_sym(S21), rule), _sym(S3) * Fraction(3, 2))
        p = _sym(S2) * _sym(GAMMA)
        self.assertEqual(symbols.substitute(p, rule), p)

    def test_substitute_keeps_other_factors(self) -> None:
        rule = {S4: _sym(S2, 2) * Fraction(2, 5)}
        result = symbols.substitute(_sym(S4) * _sym(GAMMA), rule)
        self.assertEqual(result, _sym(S2, 2) * _sym(GAMMA) * Fraction(2, 5))

    def test_substitute_powers(self) -> None:
        rule = {S21: _sym(S3) * Fraction(3, 2)}
        result = symbols.substitute(_sym(S21, 2) * _sym(S2), rule)
        self.assertEqual(result, _sym(S3, 2) * _sym(S2) * Fraction(9, 4))

    def test_inhomogeneous_rule(self) -> None:
        with self.assertRaises(ValueError):
            symbols.substitute(_sym(S21), {S21: _sym(S2)})

    def test_reduce_fixpoint_cycle(self) -> None:
        rule = {S2: _sym(Z01), Z01: _sym(S2)}
        with self.assertRaises(RuntimeError):
            symbols.reduce_fixpoint(_sym(S2), rule)


class TestRewriteSystem(unittest.TestCase):
    def test_normal_form(self) -> None:
        rs = _weight3_y()
        self.assertEqual(symbols.normal_form(_sym(S21) - _sym(S3) * Fraction(3, 2), rs), 0)
        monomial = _sym(S2) * _sym(S3)
        self.assertEqual(symbols.normal_form(monomial, rs), monomial)

    def test_normal_form_x(self) -> None:
        rs = RewriteSystem(X, [Rule(Z011, _sym(Z001))], [Z01, Z001], 3)
        self.assertEqual(symbols.normal_form(_sym(Z011), rs), _sym(Z001))

    def test_discipline(self) -> None:
        with self.assertRaises(ValueError):
            RewriteSystem(Y, [Rule(S21, _sym(S2))], [S2], 3)
        with self.assertRaises(ValueError):
            RewriteSystem(Y, [Rule(Z011, _sym(S3))], [S3], 3)
        with self.assertRaises(ValueError):
            RewriteSystem(Y, [Rule(S21, _sym(S3))], [S21, S3], 3)
        with self.assertRaises(ValueError):
            RewriteSystem(
                Y,
                [Rule(S21, _sym(S3)), Rule(S3, _sym(S2) * _sym(GAMMA))],
                [S2],
                3,
            )
        with self.assertRaises(ValueError):
            RewriteSystem("z", [], [], 2)

    def test_unvalidated_system_reports(self) -> None:
        rs = RewriteSystem(Y, [Rule(S21, _sym(S2))], [S2], 3, validate=False)
        self.assertEqual(len(rs.violations()), 1)

    def test_accessors(self) -> None:
        rs = _weight3_y()
        self.assertEqual([r.lhs for r in rs.rules_of_weight(3)], [S21])
        self.assertEqual(rs.irreducibles_of_weight(2), [S2])
        self.assertTrue(rs.is_reducible(S21))
        self.assertFalse(rs.is_reducible(S3))
        self.assertEqual(rs.rules[0].format("basis"), "Sigma_{y2y1} -> 3/2*Sigma_{y3}")

    def test_json(self) -> None:
        rs = RewriteSystem(
            X,
            [Rule(Z011, _sym(Z001))],
            [Z01, Z001],
            3,
            foreign={S3: _sym(Z001)},
        )
        copy = RewriteSystem.from_json(rs.to_json())
        self.assertEqual(copy.to_json(), rs.to_json())
        self.assertEqual(copy.foreign, {S3: _sym(Z001)})


if __name__ == "__main__":
    unittest.main()
