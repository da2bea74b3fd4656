# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import itertools
import random
import unittest

import pypolyzeta.words as words
from pypolyzeta.words import x_word, y_word


def _brute_force_lyndon(alphabet: str, letters: tuple[int, ...]) -> bool:
    # Strictly smaller than every proper rotation.
    key = words.letters_key(alphabet, letters)
    return all(key < key[i:] + key[:i] for i in range(1, len(key)))


class TestOrder(unittest.TestCase):
    def test_letter_order(self) -> None:
        self.assertEqual(words.compare(x_word("0"), x_word("1")), -1)
        self.assertEqual(words.compare(y_word(2), y_word(1)), -1)
        self.assertEqual(words.compare(y_word(1), y_word(1)), 0)

    def test_prefix_is_smaller(self) -> None:
        self.assertEqual(words.compare(x_word("0"), x_word("01")), -1)
        self.assertEqual(words.compare(y_word(2, 1), y_word(2)), 1)

    def test_mixed_alphabets(self) -> None:
        with self.assertRaises(ValueError):
            words.compare(x_word("0"), y_word(1))

    def test_invalid_letters(self) -> None:
        with self.assertRaises(ValueError):
            words.Word(words.X, (2,))
        with self.assertRaises(ValueError):
            words.Word(words.Y, (0,))
        with self.assertRaises(ValueError):
            words.Word("z", ())

    def test_weight(self) -> None:
        self.assertEqual(x_word("0011").weight, 4)
        self.assertEqual(y_word(3, 1).weight, 4)
        self.assertEqual(words.empty_word(words.Y).weight, 0)
        u, v = y_word(2), y_word(1, 3)
        self.assertEqual(u.concat(v).weight, u.weight + v.weight)


class TestLyndon(unittest.TestCase):
    def test_is_lyndon(self) -> None:
        self.assertTrue(words.is_lyndon(x_word("01")))
        self.assertFalse(words.is_lyndon(x_word("0101")))
        self.assertTrue(words.is_lyndon(y_word(2, 1)))
        self.assertFalse(words.is_lyndon(y_word(1, 2)))
        with self.assertRaises(ValueError):
            words.is_lyndon(words.empty_word(words.X))

    def test_enumerate_x(self) -> None:
        found = [words.format_word(w) for w in words.lyndon_enumerate(words.X, 3)]
        self.assertEqual(found, ["0", "1", "01", "001", "011"])

    def test_enumerate_y(self) -> None:
        found = [w.letters for w in words.lyndon_enumerate(words.Y, 3)]
        self.assertEqual(found, [(1,), (2,), (3,), (2, 1)])

    def test_counts(self) -> None:
        y5 = [w for w in words.lyndon_enumerate(words.Y, 5) if w.weight == 5]
        self.assertEqual(len(y5), 6)
        # Necklace counts of binary Lyndon words by length.
        x_counts = [
            len([w for w in words.lyndon_enumerate(words.X, 8) if w.weight == k])
            for k in range(1, 9)
        ]
        self.assertEqual(x_counts, [2, 1, 2, 3, 6, 9, 18, 30])

    def test_enumerate_matches_rotation_test(self) -> None:
        for alphabet in words.ALPHABETS:
            found = {w.letters for w in words.lyndon_enumerate(alphabet, 7)}
            expected = {
                letters
                for k in range(1, 8)
                for letters in words.letters_of_weight(alphabet, k)
                if _brute_force_lyndon(alphabet, letters)
            }
            self.assertEqual(found, expected)

    def test_enumerate_is_sorted(self) -> None:
        found = words.lyndon_enumerate(words.Y, 6)
        keys = [words.canonical_key(words.Y, w.letters) for w in found]
        self.assertEqual(keys, sorted(keys))

    def test_bad_weight(self) -> None:
        with self.assertRaises(ValueError):
            words.lyndon_enumerate(words.X, 0)

    def test_standard_factorization(self) -> None:
        l1, l2 = words.standard_factorization(x_word("00101"))
        self.assertEqual((words.format_word(l1), words.format_word(l2)), ("001", "01"))
        l1, l2 = words.standard_factorization(x_word("011"))
        self.assertEqual((words.format_word(l1), words.format_word(l2)), ("01", "1"))
        l1, l2 = words.standard_factorization(y_word(2, 1))
        self.assertEqual((l1, l2), (y_word(2), y_word(1)))
        with self.assertRaises(ValueError):
            words.standard_factorization(x_word("0"))
        with self.assertRaises(ValueError):
            words.standard_factorization(x_word("10"))

    def test_standard_factorization_properties(self) -> None:
        for alphabet in words.ALPHABETS:
            for l in words.lyndon_enumerate(alphabet, 7):
                if l.length < 2:
                    continue
                l1, l2 = words.standard_factorization(l)
                self.assertEqual(l1.concat(l2), l)
                self.assertTrue(words.is_lyndon(l1))
                self.assertTrue(words.is_lyndon(l2))
                self.assertEqual(words.compare(l1, l2), -1)

    def test_lyndon_factorization(self) -> None:
        rng = random.Random(0)
        for _ in range(200):
            alphabet = rng.choice(words.ALPHABETS)
            k = rng.randint(0, 8)
            w = rng.choice(words.words_of_weight(alphabet, k))
            factors = words.lyndon_factorization(w)
            rebuilt = tuple(itertools.chain.from_iterable(l.letters * e for l, e in factors))
            self.assertEqual(rebuilt, w.letters)
            for l, _ in factors:
                self.assertTrue(words.is_lyndon(l))
            for (a, _), (b, _) in zip(factors, factors[1:]):
                self.assertEqual(words.compare(a, b), 1)

    def test_lyndon_factorization_powers(self) -> None:
        factors = words.lyndon_factorization(x_word("1101"))
        self.assertEqual(
            [(words.format_word(l), e) for l, e in factors], [("1", 2), ("01", 1)]
        )
        self.assertEqual(words.lyndon_factorization(words.empty_word(words.Y)), [])


class TestCorrespondence(unittest.TestCase):
    def test_pi_X(self) -> None:
        self.assertEqual(words.pi_X(y_word(3)), x_word("001"))
        self.assertEqual(words.pi_X(y_word(2, 1, 1)), x_word("0111"))

    def test_pi_Y(self) -> None:
        self.assertEqual(words.pi_Y(x_word("0101")), y_word(2, 2))
        self.assertIsNone(words.pi_Y(x_word("10")))
        self.assertEqual(words.pi_Y(words.empty_word(words.X)), words.empty_word(words.Y))

    def test_round_trip_on_image(self) -> None:
        for k in range(1, 8):
            for w in words.words_of_weight(words.Y, k):
                self.assertEqual(words.pi_Y(words.pi_X(w)), w)
                self.assertEqual(words.pi_X(w).weight, k)

    def test_wrong_alphabet(self) -> None:
        with self.assertRaises(ValueError):
            words.pi_X(x_word("01"))
        with self.assertRaises(ValueError):
            words.pi_Y(y_word(1))


class TestClassification(unittest.TestCase):
    def test_convergent(self) -> None:
        self.assertTrue(words.is_convergent(x_word("001")))
        self.assertFalse(words.is_convergent(x_word("010")))
        self.assertFalse(words.is_convergent(x_word("101")))
        self.assertTrue(words.is_convergent(y_word(2, 1)))
        self.assertFalse(words.is_convergent(y_word(1, 2)))

    def test_classify(self) -> None:
        self.assertEqual(words.classify(y_word(2, 1)), words.WordClass(True, True))
        self.assertEqual(words.classify(x_word("1")), words.WordClass(False, True))
        self.assertEqual(words.classify(x_word("0101")), words.WordClass(True, False))

    def test_words_of_weight(self) -> None:
        for k in range(1, 9):
            self.assertEqual(len(words.words_of_weight(words.Y, k)), 2 ** (k - 1))
            self.assertEqual(len(words.words_of_weight(words.X, k)), 2**k)
        with self.assertRaises(ValueError):
            words.words_of_weight(words.X, -1)


class TestText(unittest.TestCase):
    def test_parse(self) -> None:
        self.assertEqual(words.parse_word("2,1", words.Y), y_word(2, 1))
        self.assertEqual(words.parse_word(" 0011 ", words.X), x_word("0011"))
        self.assertEqual(words.parse_word("", words.Y), words.empty_word(words.Y))

    def test_parse_errors(self) -> None:
        bad = (("012", words.X), ("2,a", words.Y), ("2,0", words.Y), ("2,,1", words.Y))
        for text, alphabet in bad:
            with self.assertRaises(ValueError):
                words.parse_word(text, alphabet)

    def test_render(self) -> None:
        self.assertEqual(words.render_word(x_word("00101")), "x0^2x1x0x1")
        self.assertEqual(words.render_word(y_word(2, 1, 1)), "y2y1^2")
        self.assertEqual(words.render_word(words.empty_word(words.X)), "1")
        self.assertEqual(str(y_word(3)), "y3")

    def test_format_inverts_parse(self) -> None:
        rng = random.Random(0)
        for _ in range(50):
            alphabet = rng.choice(words.ALPHABETS)
            w = rng.choice(words.words_of_weight(alphabet, rng.randint(1, 7)))
            self.assertEqual(words.parse_word(words.format_word(w), alphabet), w)


if __name__ == "__main__":
    unittest.main()
