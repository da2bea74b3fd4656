# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Noncommutative Polynomials
==========================

Finite linear combinations of words over X or Y with coefficients in an exact
commutative ring. Two coefficient rings are used in practice: ``Fraction`` for
basis elements and :class:`pypolyzeta.symbols.CPoly` for the symbolic series.

Key features:

- Concatenation, shuffle and quasi-shuffle (stuffle) products
  (:func:`conc`, :func:`shuffle`, :func:`stuffle`)
- The pairing between series and polynomials (:func:`pairing`)
- Weight components (:func:`graded_component`)
- The dual law of the stuffle (:func:`stuffle_coproduct_letters`) and the
  character test used to recognize grouplike series (:func:`character_defect`)

Word-level products are memoized in bounded process-wide caches; results are
returned as immutable tuples, so sharing them between threads is safe.

Example:
    Products of words::

        from pypolyzeta import ncpoly, words

        p = ncpoly.NCPolynomial.from_word(words.x_word("01"))
        q = ncpoly.NCPolynomial.from_word(words.x_word("1"))
        ncpoly.shuffle(p, q)  # 2*x0x1^2 + x1x0x1
"""

import functools
from collections import defaultdict
from fractions import Fraction
from typing import Any, Callable, Iterator, Mapping, Optional

from pypolyzeta.words import (
    canonical_key,
    check_alphabet,
    check_letters,
    format_letters,
    Letters,
    letters_of_weight,
    letters_weight,
    parse_word,
    render_letters,
    Word,
    X,
    Y,
)

# pyre-strict

PRODUCT_CACHE_SIZE: int = 1 << 17


def _normalize(c: Any) -> Any:
    return Fraction(c) if isinstance(c, int) else c


def format_coefficient(c: Any) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return f"({c})"


class NCPolynomial:
    """
    Sparse noncommutative polynomial: word -> coefficient, zeros never stored.

    Terms are keyed by bare letter tuples; the alphabet is fixed per polynomial.
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(
        self, alphabet: str, terms: Optional[Mapping[Letters, Any]] = None
    ) -> None:
        check_alphabet(alphabet)
        self.alphabet: str = alphabet
        self._terms: dict[Letters, Any] = {}
        if terms:
            for letters, c in terms.items():
                c = _normalize(c)
                if c:
                    self._terms[tuple(letters)] = c

    @classmethod
    def _wrap(cls, alphabet: str, terms: dict[Letters, Any]) -> "NCPolynomial":
        # terms already canonical
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p._terms = terms
        return p

    @classmethod
    def zero(cls, alphabet: str) -> "NCPolynomial":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: str) -> "NCPolynomial":
        return cls(alphabet, {(): Fraction(1)})

    @classmethod
    def from_word(cls, w: Word, coefficient: Any = 1) -> "NCPolynomial":
        return cls(w.alphabet, {w.letters: coefficient})

    @classmethod
    def from_letters(
        cls, alphabet: str, letters: Letters, coefficient: Any = 1
    ) -> "NCPolynomial":
        check_letters(alphabet, letters)
        return cls(alphabet, {tuple(letters): coefficient})

    @classmethod
    def from_words(cls, alphabet: str, terms: Mapping[str, Any]) -> "NCPolynomial":
        """Build from compact word text, e.g. ``{"2,1": 1, "3": Fraction(1, 2)}``."""
        return cls(
            alphabet,
            {parse_word(text, alphabet).letters: c for text, c in terms.items()},
        )

    @property
    def terms(self) -> Mapping[Letters, Any]:
        return self._terms

    def items(self) -> Iterator[tuple[Letters, Any]]:
        """Terms in canonical order (weight, then word order)."""
        for letters in sorted(
            self._terms, key=lambda t: canonical_key(self.alphabet, t)
        ):
            yield letters, self._terms[letters]

    def words(self) -> list[Word]:
        return [Word(self.alphabet, letters) for letters, _ in self.items()]

    def coefficient(self, w: Word | Letters) -> Any:
        letters = w.letters if isinstance(w, Word) else tuple(w)
        return self._terms.get(letters, Fraction(0))

    def weights(self) -> set[int]:
        return {letters_weight(self.alphabet, t) for t in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCPolynomial):
            if not self._terms and not other._terms:
                return True
            return self.alphabet == other.alphabet and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # pyre-ignore[15]

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        return add(self, other)

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return add(self, other, -1)

    def __neg__(self) -> "NCPolynomial":
        return scale(self, -1)

    def __mul__(self, other: Any) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            return conc(self, other)
        return scale(self, other)

    def __rmul__(self, other: Any) -> "NCPolynomial":
        return scale(self, other)

    def __pow__(self, exponent: int) -> "NCPolynomial":
        result = NCPolynomial.one(self.alphabet)
        for _ in range(exponent):
            result = conc(result, self)
        return result

    def __repr__(self) -> str:
        return f"NCPolynomial({self.alphabet!r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for letters, c in self.items():
            word = render_letters(self.alphabet, letters)
            if c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"{format_coefficient(c)}*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[dict[str, str]]:
        """Rational polynomials only: ``[{"word": "001", "coeff": "1/2"}, ...]``."""
        return [
            {"word": format_letters(self.alphabet, letters), "coeff": str(c)}
            for letters, c in self.items()
        ]

    @classmethod
    def from_json(cls, alphabet: str, data: list[dict[str, str]]) -> "NCPolynomial":
        return cls(
            alphabet,
            {
                parse_word(entry["word"], alphabet).letters: Fraction(entry["coeff"])
                for entry in data
            },
        )


def check_same_alphabet(p: NCPolynomial, q: NCPolynomial) -> None:
    if p.alphabet != q.alphabet:
        raise ValueError(
            f"Cannot combine polynomials over alphabets {p.alphabet!r} and {q.alphabet!r}."
        )


def add(p: NCPolynomial, q: NCPolynomial, factor: Any = 1) -> NCPolynomial:
    """Return p + factor * q."""
    check_same_alphabet(p, q)
    out = dict(p._terms)
    for letters, c in q._terms.items():
        if factor != 1:
            c = c * factor
        value = out.get(letters, 0) + c
        if value:
            out[letters] = value
        else:
            out.pop(letters, None)
    return NCPolynomial._wrap(p.alphabet, out)


def scale(p: NCPolynomial, c: Any) -> NCPolynomial:
    c = _normalize(c)
    if not c:
        return NCPolynomial.zero(p.alphabet)
    out = {}
    for letters, a in p._terms.items():
        value = a * c
        if value:
            out[letters] = value
    return NCPolynomial._wrap(p.alphabet, out)


def _bilinear(
    p: NCPolynomial,
    q: NCPolynomial,
    word_product: Callable[[Letters, Letters], tuple[tuple[Letters, int], ...]],
) -> NCPolynomial:
    check_same_alphabet(p, q)
    acc: dict[Letters, Any] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            ab = a * b
            for w, count in word_product(u, v):
                acc[w] = acc.get(w, 0) + (ab * count if count != 1 else ab)
    return NCPolynomial._wrap(p.alphabet, {w: c for w, c in acc.items() if c})


def _conc_letters(u: Letters, v: Letters) -> tuple[tuple[Letters, int], ...]:
    return ((u + v, 1),)


@functools.lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def shuffle_letters(u: Letters, v: Letters) -> tuple[tuple[Letters, int], ...]:
    """Shuffle of two words: xu ⧢ yv = x(u ⧢ yv) + y(xu ⧢ v)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[Letters, int] = defaultdict(int)
    head = (u[0],)
    for w, c in shuffle_letters(u[1:], v):
        acc[head + w] += c
    head = (v[0],)
    for w, c in shuffle_letters(u, v[1:]):
        acc[head + w] += c
    return tuple(acc.items())


@functools.lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def stuffle_letters(u: Letters, v: Letters) -> tuple[tuple[Letters, int], ...]:
    """Quasi-shuffle of two Y-words, adding the contraction y_{i+j}(u' ⬦ v')."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[Letters, int] = defaultdict(int)
    head = (u[0],)
    for w, c in stuffle_letters(u[1:], v):
        acc[head + w] += c
    head = (v[0],)
    for w, c in stuffle_letters(u, v[1:]):
        acc[head + w] += c
    head = (u[0] + v[0],)
    for w, c in stuffle_letters(u[1:], v[1:]):
        acc[head + w] += c
    return tuple(acc.items())


WORD_PRODUCTS: dict[str, Callable[[Letters, Letters], tuple[tuple[Letters, int], ...]]] = {
    "conc": _conc_letters,
    "shuffle": shuffle_letters,
    "stuffle": stuffle_letters,
}


def word_product(name: str) -> Callable[[Letters, Letters], tuple[tuple[Letters, int], ...]]:
    try:
        return WORD_PRODUCTS[name]
    except KeyError:
        raise ValueError(
            f"Unknown product {name!r}; expected one of {sorted(WORD_PRODUCTS)}."
        ) from None


def conc(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """
    Concatenation product, bilinear; the empty word is the unit.

    :parameter p: Left factor.
    :parameter q: Right factor.
    :rtype: NCPolynomial
    :raises ValueError: If the alphabets differ.
    """
    return _bilinear(p, q, _conc_letters)


def shuffle(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """
    Shuffle product on X or Y.

    :parameter p: Left factor.
    :parameter q: Right factor.
    :rtype: NCPolynomial
    :raises ValueError: If the alphabets differ.
    """
    return _bilinear(p, q, shuffle_letters)


def stuffle(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """
    Quasi-shuffle product, defined on Y only.

    :parameter p: Left factor.
    :parameter q: Right factor.
    :rtype: NCPolynomial
    :raises ValueError: If either operand is over X.
    """
    if p.alphabet != Y or q.alphabet != Y:
        raise ValueError("The quasi-shuffle product is only defined on the Y alphabet.")
    return _bilinear(p, q, stuffle_letters)


def product(p: NCPolynomial, q: NCPolynomial, name: str) -> NCPolynomial:
    if name == "stuffle":
        return stuffle(p, q)
    return _bilinear(p, q, word_product(name))


def power(p: NCPolynomial, exponent: int, name: str) -> NCPolynomial:
    result = NCPolynomial.one(p.alphabet)
    for _ in range(exponent):
        result = product(result, p, name)
    return result


def bracket(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """Lie bracket [p, q] = pq - qp for the concatenation product."""
    return add(conc(p, q), conc(q, p), -1)


def pairing(t: NCPolynomial, p: NCPolynomial) -> Any:
    """
    Pairing <t | p> = sum over words of t(w) p(w).

    :parameter t: Left argument (may carry symbolic coefficients).
    :parameter p: Right argument.
    :return: The ring element; ``Fraction(0)`` when the supports are disjoint.
    :raises ValueError: If the alphabets differ.
    """
    check_same_alphabet(t, p)
    small, large = (t, p) if len(t) <= len(p) else (p, t)
    total: Any = Fraction(0)
    for letters in small._terms:
        if letters in large._terms:
            total = total + t._terms[letters] * p._terms[letters]
    return total


def graded_component(p: NCPolynomial, k: int) -> NCPolynomial:
    """Restriction of p to the words of weight k."""
    return NCPolynomial._wrap(
        p.alphabet,
        {
            letters: c
            for letters, c in p._terms.items()
            if letters_weight(p.alphabet, letters) == k
        },
    )


def map_letters(
    p: NCPolynomial, image: Callable[[int], NCPolynomial], alphabet: str
) -> NCPolynomial:
    """
    Apply the concatenation morphism sending each letter to ``image(letter)``.

    :parameter p: Source polynomial.
    :parameter image: Letter images, all over ``alphabet``.
    :parameter alphabet: Target alphabet.
    :rtype: NCPolynomial
    """
    result = NCPolynomial.zero(alphabet)
    for letters, c in p._terms.items():
        term = NCPolynomial.one(alphabet)
        for letter in letters:
            term = conc(term, image(letter))
        result = add(result, term, c)
    return result


@functools.lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def stuffle_coproduct_letters(u: Letters) -> tuple[tuple[tuple[Letters, Letters], int], ...]:
    """
    Dual law of the quasi-shuffle on a Y-word.

    Each letter splits as y_k -> sum over i + j = k of y_i (x) y_j, with y_0 the
    empty word, and the splitting is multiplicative for concatenation. The
    result lists the pairs (a, b) with <u | a ⬦ b> as multiplicity.
    """
    if not u:
        return ((((), ()), 1),)
    acc: dict[tuple[Letters, Letters], int] = defaultdict(int)
    k = u[0]
    rest = stuffle_coproduct_letters(u[1:])
    for i in range(k + 1):
        left = (i,) if i else ()
        right = (k - i,) if k - i else ()
        for (a, b), c in rest:
            acc[(left + a, right + b)] += c
    return tuple(acc.items())


def character_defect(
    coefficient: Callable[[Letters], Any],
    alphabet: str,
    product_name: str,
    max_weight: int,
) -> Optional[tuple[Letters, Letters]]:
    """
    Search for a pair of nonempty words violating the character property.

    Checks <S | u . v> = <S | u> <S | v> for all u, v with weight(u) + weight(v)
    <= max_weight, where ``coefficient`` gives <S | w> on letter tuples.

    :return: The first offending pair, or None when S is a character to that weight.
    :rtype: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    """
    multiply = word_product(product_name)
    if product_name == "stuffle" and alphabet != Y:
        raise ValueError("The quasi-shuffle product is only defined on the Y alphabet.")
    for a in range(1, max_weight):
        for b in range(a, max_weight - a + 1):
            for u in letters_of_weight(alphabet, a):
                cu = coefficient(u)
                for v in letters_of_weight(alphabet, b):
                    lhs: Any = Fraction(0)
                    for w, count in multiply(u, v):
                        lhs = lhs + coefficient(w) * count
                    if lhs - cu * coefficient(v):
                        return (u, v)
    return None


__all__ = [
    "NCPolynomial",
    "add",
    "bracket",
    "character_defect",
    "conc",
    "graded_component",
    "map_letters",
    "pairing",
    "power",
    "product",
    "scale",
    "shuffle",
    "shuffle_letters",
    "stuffle",
    "stuffle_coproduct_letters",
    "stuffle_letters",
    "X",
    "Y",
]
