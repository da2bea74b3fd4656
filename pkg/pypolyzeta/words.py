# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Words and Lyndon Words
======================

This module provides the graded words over the two alphabets used throughout
pypolyzeta:

- **X** = {x0, x1}: a word is graded by its length. Letters are stored as the
  integers 0 and 1.
- **Y** = {y1, y2, ...}: a word is graded by the sum of its indices. Letters are
  stored as their positive index.

Both alphabets are totally ordered (x0 < x1 and y1 > y2 > y3 > ...) and words
are compared lexicographically, a proper prefix being smaller than its
extensions.

Core Operations
---------------

- Ordering and Lyndon machinery (:func:`compare`, :func:`is_lyndon`,
  :func:`lyndon_enumerate`, :func:`standard_factorization`,
  :func:`lyndon_factorization`)
- Letter correspondences between the alphabets (:func:`pi_X`, :func:`pi_Y`)
- Text rendering (:func:`parse_word`, :func:`format_word`, :func:`render_word`)

Example:
    Enumerating Lyndon words and splitting one of them::

        from pypolyzeta import words

        lyn = words.lyndon_enumerate(words.X, 3)
        # [x0, x1, x0x1, x0^2x1, x0x1^2]
        l1, l2 = words.standard_factorization(words.parse_word("00101", words.X))

Note:
    Polynomial code works on the bare letter tuples for speed; :class:`Word` is
    the checked value type exchanged across module boundaries.
"""

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

# pyre-strict

X: str = "x"
Y: str = "y"
ALPHABETS: tuple[str, ...] = (X, Y)

# Bare letter sequence; its alphabet is carried by the owning container.
Letters = tuple[int, ...]


def check_alphabet(alphabet: str) -> None:
    """
    Check that an alphabet tag is one of :data:`X` or :data:`Y`.

    :parameter alphabet: Alphabet tag to validate.
    :raises ValueError: If the tag is unknown.
    """
    if alphabet not in ALPHABETS:
        raise ValueError(f"Unknown alphabet {alphabet!r}; expected 'x' or 'y'.")


def check_letters(alphabet: str, letters: Sequence[int]) -> None:
    """
    Check that every letter is valid for the given alphabet.

    :parameter alphabet: Alphabet tag.
    :parameter letters: Letter sequence.
    :raises ValueError: If a letter is out of range.
    """
    check_alphabet(alphabet)
    for letter in letters:
        if alphabet == X and letter not in (0, 1):
            raise ValueError(f"Invalid X letter {letter}; X letters are 0 and 1.")
        if alphabet == Y and (not isinstance(letter, int) or letter < 1):
            raise ValueError(f"Invalid Y letter {letter}; Y indices are >= 1.")


def letters_weight(alphabet: str, letters: Letters) -> int:
    if alphabet == X:
        return len(letters)
    return sum(letters)


def letters_key(alphabet: str, letters: Letters) -> Letters:
    """
    Sort key realizing the total order on words of one alphabet.

    Tuples compare lexicographically with a proper prefix first, so the key only
    has to flip the Y letters (y1 is the largest Y letter).

    :parameter alphabet: Alphabet tag.
    :parameter letters: Letter sequence.
    :return: A tuple whose natural order is the word order.
    :rtype: tuple[int, ...]
    """
    if alphabet == X:
        return letters
    return tuple(-k for k in letters)


def canonical_key(alphabet: str, letters: Letters) -> tuple[int, Letters]:
    """Deterministic iteration order of polynomial terms: weight, then word order."""
    return (letters_weight(alphabet, letters), letters_key(alphabet, letters))


@dataclass(frozen=True, slots=True)
class Word:
    """A word over X or Y, graded by weight."""

    alphabet: str
    letters: Letters

    def __post_init__(self) -> None:
        check_letters(self.alphabet, self.letters)

    @property
    def weight(self) -> int:
        return letters_weight(self.alphabet, self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def concat(self, other: "Word") -> "Word":
        check_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def key(self) -> Letters:
        return letters_key(self.alphabet, self.letters)

    def __str__(self) -> str:
        return render_word(self)


class WordClass(NamedTuple):
    is_convergent: bool
    is_lyndon: bool


def check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError(
            f"Words {format_word(u)!r} and {format_word(v)!r} live on different alphabets."
        )


def empty_word(alphabet: str) -> Word:
    return Word(alphabet, ())


def x_word(text: str) -> Word:
    """Shorthand for ``parse_word(text, X)``."""
    return parse_word(text, X)


def y_word(*indices: int) -> Word:
    """Build a Y-word from its indices, ``y_word(2, 1)`` being y2y1."""
    return Word(Y, tuple(indices))


def compare(u: Word, v: Word) -> int:
    """
    Compare two words of the same alphabet.

    :parameter u: First word.
    :parameter v: Second word.
    :return: -1 if u < v, 0 if equal, 1 if u > v.
    :rtype: int
    :raises ValueError: If the alphabets differ.
    """
    check_same_alphabet(u, v)
    ku, kv = u.key(), v.key()
    return (ku > kv) - (ku < kv)


def is_lyndon_letters(alphabet: str, letters: Letters) -> bool:
    key = letters_key(alphabet, letters)
    return all(key < key[i:] for i in range(1, len(key)))


def is_lyndon(w: Word) -> bool:
    """
    Test whether a word is strictly smaller than each of its proper right factors.

    :parameter w: A nonempty word.
    :return: True if w is a Lyndon word.
    :rtype: bool
    :raises ValueError: If w is empty.
    """
    if w.is_empty():
        raise ValueError("is_lyndon is undefined on the empty word.")
    return is_lyndon_letters(w.alphabet, w.letters)


def is_convergent(w: Word) -> bool:
    """Convergent words: x0 X* x1 (X side) or words not starting with y1 (Y side)."""
    if w.is_empty():
        return True
    if w.alphabet == X:
        return w.letters[0] == 0 and w.letters[-1] == 1
    return w.letters[0] != 1


def classify(w: Word) -> WordClass:
    return WordClass(
        is_convergent=is_convergent(w),
        is_lyndon=bool(w.letters) and is_lyndon_letters(w.alphabet, w.letters),
    )


@functools.lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Letters, ...]:
    if n == 0:
        return ((),)
    result = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        result.append(tuple(parts))
    return tuple(result)


@functools.lru_cache(maxsize=None)
def letters_of_weight(alphabet: str, k: int) -> tuple[Letters, ...]:
    """All letter tuples of weight k, in word order."""
    check_alphabet(alphabet)
    if alphabet == X:
        candidates = list(itertools.product((0, 1), repeat=k))
    else:
        candidates = list(_compositions(k))
    return tuple(sorted(candidates, key=lambda t: letters_key(alphabet, t)))


def words_of_weight(alphabet: str, k: int) -> list[Word]:
    """
    All words of a given weight, sorted by the word order.

    On Y these are the compositions of k, so there are 2^(k-1) of them for k >= 1.

    :parameter alphabet: Alphabet tag.
    :parameter k: Weight (>= 0).
    :rtype: list[Word]
    """
    if k < 0:
        raise ValueError(f"Weight must be nonnegative, got {k}.")
    return [Word(alphabet, t) for t in letters_of_weight(alphabet, k)]


def _duval_generate(size: int, max_length: int) -> Iterator[Letters]:
    # Lyndon words over {0, ..., size - 1} of length <= max_length, in lex order.
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == size - 1:
            w.pop()


def lyndon_enumerate(alphabet: str, max_weight: int) -> list[Word]:
    """
    Enumerate the Lyndon words of weight at most ``max_weight``.

    X uses Duval's generation; Y filters the compositions of each weight, which
    only involves letters of index <= max_weight.

    :parameter alphabet: Alphabet tag.
    :parameter max_weight: Largest weight, >= 1.
    :return: Lyndon words sorted by (weight, word order).
    :rtype: list[Word]
    """
    check_alphabet(alphabet)
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}.")
    if alphabet == X:
        found = list(_duval_generate(2, max_weight))
    else:
        found = [
            letters
            for k in range(1, max_weight + 1)
            for letters in letters_of_weight(Y, k)
            if is_lyndon_letters(Y, letters)
        ]
    found.sort(key=lambda t: canonical_key(alphabet, t))
    return [Word(alphabet, t) for t in found]


@functools.lru_cache(maxsize=None)
def lyndon_letters_of_weight(alphabet: str, k: int) -> tuple[Letters, ...]:
    return tuple(
        t for t in letters_of_weight(alphabet, k) if is_lyndon_letters(alphabet, t)
    )


def standard_factorization(l: Word) -> tuple[Word, Word]:
    """
    Split a Lyndon word as l = l1 l2 with l2 its longest proper Lyndon right factor.

    :parameter l: A Lyndon word with at least two letters.
    :return: The pair (l1, l2); both are Lyndon and l1 < l2.
    :rtype: tuple[Word, Word]
    :raises ValueError: If l is a single letter or not Lyndon.
    """
    l1, l2 = standard_factorization_letters(l.alphabet, l.letters)
    return Word(l.alphabet, l1), Word(l.alphabet, l2)


def standard_factorization_letters(alphabet: str, letters: Letters) -> tuple[Letters, Letters]:
    if len(letters) < 2:
        raise ValueError("A single letter has no standard factorization.")
    if not is_lyndon_letters(alphabet, letters):
        raise ValueError(f"{letters} is not a Lyndon word.")
    for i in range(1, len(letters)):
        if is_lyndon_letters(alphabet, letters[i:]):
            return letters[:i], letters[i:]
    raise RuntimeError(f"No Lyndon right factor found for {letters}.")


def lyndon_factorization_letters(alphabet: str, letters: Letters) -> list[tuple[Letters, int]]:
    """
    Decreasing Lyndon factorization by Duval's algorithm, grouped into powers.

    :return: Pairs (l_j, i_j) with l_1 > l_2 > ... and letters = l_1^{i_1} ... l_k^{i_k}.
    """
    key = letters_key(alphabet, letters)
    factors: list[Letters] = []
    k, n = 0, len(key)
    while k < n:
        i, j = k, k + 1
        while j < n and key[i] <= key[j]:
            i = k if key[i] < key[j] else i + 1
            j += 1
        while k <= i:
            factors.append(letters[k : k + j - i])
            k += j - i
    grouped: list[tuple[Letters, int]] = []
    for factor in factors:
        if grouped and grouped[-1][0] == factor:
            grouped[-1] = (factor, grouped[-1][1] + 1)
        else:
            grouped.append((factor, 1))
    return grouped


def lyndon_factorization(w: Word) -> list[tuple[Word, int]]:
    """
    Decreasing Lyndon factorization w = l1^{i1} ... lk^{ik} with l1 > ... > lk.

    :parameter w: Any word (the empty word has an empty factorization).
    :rtype: list[tuple[Word, int]]
    """
    return [
        (Word(w.alphabet, letters), power)
        for letters, power in lyndon_factorization_letters(w.alphabet, w.letters)
    ]


def pi_X_letters(letters: Letters) -> Letters:
    out: list[int] = []
    for k in letters:
        out.extend([0] * (k - 1))
        out.append(1)
    return tuple(out)


def pi_Y_letters(letters: Letters) -> Optional[Letters]:
    if letters and letters[-1] == 0:
        return None
    out: list[int] = []
    run = 0
    for letter in letters:
        if letter == 0:
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def pi_X(w: Word) -> Word:
    """
    Map a Y-word to X letter by letter, y_k -> x0^(k-1) x1.

    :parameter w: A Y-word.
    :rtype: Word
    """
    if w.alphabet != Y:
        raise ValueError("pi_X expects a Y-word.")
    return Word(X, pi_X_letters(w.letters))


def pi_Y(w: Word) -> Optional[Word]:
    """
    Inverse of :func:`pi_X` on X* x1; words ending in x0 map to ``None`` (zero).

    :parameter w: An X-word.
    :return: The Y-word, or None for words ending in x0.
    :rtype: Optional[Word]
    """
    if w.alphabet != X:
        raise ValueError("pi_Y expects an X-word.")
    letters = pi_Y_letters(w.letters)
    return None if letters is None else Word(Y, letters)


def composition_word(composition: Sequence[int]) -> Word:
    """The Y-word y_{s1} ... y_{sr} of a composition (s1, ..., sr)."""
    return Word(Y, tuple(int(s) for s in composition))


def parse_word(text: str, alphabet: str) -> Word:
    """
    Parse the compact text form of a word.

    X-words are strings over ``0``/``1`` (``"001"`` is x0x0x1); Y-words are
    comma-separated indices (``"2,1"`` is y2y1). The empty string is the empty word.

    :parameter text: Text to parse.
    :parameter alphabet: Alphabet tag.
    :rtype: Word
    :raises ValueError: On malformed text.
    """
    check_alphabet(alphabet)
    text = text.strip()
    if not text:
        return empty_word(alphabet)
    if alphabet == X:
        if set(text) - {"0", "1"}:
            raise ValueError(f"Malformed X-word {text!r}; use a string of 0 and 1.")
        return Word(X, tuple(int(c) for c in text))
    try:
        indices = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"Malformed composition {text!r}; use e.g. '2,1'.") from None
    if any(k < 1 for k in indices):
        raise ValueError(f"Malformed composition {text!r}; indices must be >= 1.")
    return Word(Y, indices)


def format_letters(alphabet: str, letters: Letters) -> str:
    if alphabet == X:
        return "".join(str(c) for c in letters)
    return ",".join(str(k) for k in letters)


def format_word(w: Word) -> str:
    """Compact text form, inverse of :func:`parse_word`."""
    return format_letters(w.alphabet, w.letters)


def render_letters(alphabet: str, letters: Letters) -> str:
    if not letters:
        return "1"
    parts = []
    for letter, run in itertools.groupby(letters):
        count = len(list(run))
        name = f"{alphabet}{letter}"
        parts.append(name if count == 1 else f"{name}^{count}")
    return "".join(parts)


def render_word(w: Word) -> str:
    """Exponent notation of the tables, e.g. ``x0^2x1`` or ``y2y1^2``."""
    return render_letters(w.alphabet, w.letters)
