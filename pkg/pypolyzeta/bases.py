# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Dual Bases of the Shuffle and Quasi-Shuffle Algebras
====================================================

This module builds the Poincaré–Birkhoff–Witt bases and their duals:

- **P_w / S_w** (X or Y, shuffle side): P_l is the bracketing of the standard
  factorization of a Lyndon word, P_w the product along the decreasing Lyndon
  factorization; S_w is the dual basis, S_l = x S_l' and S_w a normalized
  shuffle power product.
- **Π_w / Σ_w** (Y, quasi-shuffle side): Π_{y_k} = π₁(y_k) for the eulerian
  projector π₁, then the same bracket/product recursion; Σ_w is the dual of
  {Π_w}, obtained by an exact linear solve per weight.

Orientation: S_w and Σ_w equal w plus strictly smaller words of the same
weight; P_l and Π_l equal l plus strictly larger words.

Key features:

- Basis elements on demand (:func:`P_of`, :func:`S_of`, :func:`Pi_of`,
  :func:`Sigma_of`) kept in per-kind :class:`BasisTable` caches
- The eulerian projector (:func:`pi1`) and the letter morphism
  y_k -> π₁(y_k) (:func:`phi_pi1`)
- Decomposition on the Lyndon transcendence bases (:func:`decompose_shuffle`,
  :func:`decompose_stuffle`)

Example:
    Reading a dual basis element::

        from pypolyzeta import bases, ncpoly, words

        bases.Sigma_of(words.y_word(2, 1))  # 1/2*y3 + y2y1
        bases.decompose_stuffle(ncpoly.NCPolynomial.from_word(words.y_word(2, 1)))
"""

import functools
import logging
import math
import threading
from collections import defaultdict
from fractions import Fraction
from typing import Any, Callable, NamedTuple, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from pypolyzeta import ncpoly
from pypolyzeta.ncpoly import NCPolynomial
from pypolyzeta.symbols import CPoly, side_symbol
from pypolyzeta.words import (
    canonical_key,
    is_lyndon_letters,
    Letters,
    letters_key,
    letters_of_weight,
    letters_weight,
    lyndon_factorization_letters,
    standard_factorization_letters,
    Word,
    X,
    Y,
)

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

KIND_P: str = "P"
KIND_S: str = "S"
KIND_PI: str = "Pi"
KIND_SIGMA: str = "Sigma"
KINDS: tuple[str, ...] = (KIND_P, KIND_S, KIND_PI, KIND_SIGMA)


class BasisTable:
    """
    Computed basis elements of one kind over one alphabet.

    Entries are only ever added. Lookups of a new word take the table lock, so
    concurrent readers see either nothing or the finished polynomial.
    """

    def __init__(self, alphabet: str, kind: str) -> None:
        if kind not in KINDS:
            raise ValueError(f"Unknown basis kind {kind!r}; expected one of {KINDS}.")
        if kind in (KIND_PI, KIND_SIGMA) and alphabet != Y:
            raise ValueError(f"The {kind} basis is only defined on the Y alphabet.")
        self.alphabet: str = alphabet
        self.kind: str = kind
        self.entries: dict[Letters, NCPolynomial] = {}
        self.max_weight: int = 0
        self._lock: threading.RLock = threading.RLock()

    def get(self, letters: Letters) -> NCPolynomial:
        entry = self.entries.get(letters)
        if entry is not None:
            return entry
        with self._lock:
            entry = self.entries.get(letters)
            if entry is None:
                if self.kind == KIND_SIGMA:
                    self.populate(letters_weight(self.alphabet, letters))
                    entry = self.entries[letters]
                else:
                    entry = _BUILDERS[self.kind](self.alphabet, letters)
                    self.entries[letters] = entry
            return entry

    def populate(self, max_weight: int) -> None:
        """Compute every word up to ``max_weight``."""
        with self._lock:
            for k in range(self.max_weight + 1, max_weight + 1):
                if self.kind == KIND_SIGMA:
                    self.entries.update(_sigma_of_weight(k))
                else:
                    for letters in letters_of_weight(self.alphabet, k):
                        self.get(letters)
                self.max_weight = k
                logger.debug("Basis %s/%s filled to weight %d", self.alphabet, self.kind, k)

    def of_weight(self, k: int) -> list[tuple[Letters, NCPolynomial]]:
        self.populate(k)
        return [(letters, self.entries[letters]) for letters in letters_of_weight(self.alphabet, k)]

    def load(self, entries: dict[Letters, NCPolynomial], weight: int) -> None:
        """Install precomputed entries for one full weight (from the cache)."""
        with self._lock:
            self.entries.update(entries)
            if weight == self.max_weight + 1:
                self.max_weight = weight


_TABLES: dict[tuple[str, str], BasisTable] = {}
_TABLES_LOCK: threading.Lock = threading.Lock()


def basis_table(alphabet: str, kind: str) -> BasisTable:
    with _TABLES_LOCK:
        table = _TABLES.get((alphabet, kind))
        if table is None:
            table = BasisTable(alphabet, kind)
            _TABLES[(alphabet, kind)] = table
        return table


def basis_element(alphabet: str, kind: str, letters: Letters) -> NCPolynomial:
    return basis_table(alphabet, kind).get(tuple(letters))


def _letter(alphabet: str, letter: int) -> NCPolynomial:
    return NCPolynomial._wrap(alphabet, {(letter,): Fraction(1)})


def _ordered_product(
    alphabet: str, kind: str, letters: Letters, multiply: Callable[[NCPolynomial, NCPolynomial], NCPolynomial]
) -> NCPolynomial:
    result = NCPolynomial.one(alphabet)
    for factor, power in lyndon_factorization_letters(alphabet, letters):
        element = basis_element(alphabet, kind, factor)
        for _ in range(power):
            result = multiply(result, element)
    return result


def _build_P(alphabet: str, letters: Letters) -> NCPolynomial:
    if not letters:
        return NCPolynomial.one(alphabet)
    if len(letters) == 1:
        return _letter(alphabet, letters[0])
    if is_lyndon_letters(alphabet, letters):
        l1, l2 = standard_factorization_letters(alphabet, letters)
        return ncpoly.bracket(basis_element(alphabet, KIND_P, l1), basis_element(alphabet, KIND_P, l2))
    return _ordered_product(alphabet, KIND_P, letters, ncpoly.conc)


def _build_S(alphabet: str, letters: Letters) -> NCPolynomial:
    if not letters:
        return NCPolynomial.one(alphabet)
    if len(letters) == 1:
        return _letter(alphabet, letters[0])
    if is_lyndon_letters(alphabet, letters):
        return ncpoly.conc(_letter(alphabet, letters[0]), basis_element(alphabet, KIND_S, letters[1:]))
    result = _ordered_product(alphabet, KIND_S, letters, ncpoly.shuffle)
    norm = math.prod(math.factorial(e) for _, e in lyndon_factorization_letters(alphabet, letters))
    return ncpoly.scale(result, Fraction(1, norm))


def _build_Pi(alphabet: str, letters: Letters) -> NCPolynomial:
    if not letters:
        return NCPolynomial.one(Y)
    if len(letters) == 1:
        return pi1(_letter(Y, letters[0]))
    if is_lyndon_letters(Y, letters):
        l1, l2 = standard_factorization_letters(Y, letters)
        return ncpoly.bracket(basis_element(Y, KIND_PI, l1), basis_element(Y, KIND_PI, l2))
    return _ordered_product(Y, KIND_PI, letters, ncpoly.conc)


_BUILDERS: dict[str, Callable[[str, Letters], NCPolynomial]] = {
    KIND_P: _build_P,
    KIND_S: _build_S,
    KIND_PI: _build_Pi,
}


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _sigma_of_weight(k: int) -> dict[Letters, NCPolynomial]:
    # Rows of M are the Π_v; the Σ_u are the columns of M^{-1}.
    words = letters_of_weight(Y, k)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    rows = [[QQ(0)] * n for _ in range(n)]
    for i, v in enumerate(words):
        for w, c in basis_element(Y, KIND_PI, v).terms.items():
            rows[i][index[w]] = QQ(c.numerator, c.denominator)
    try:
        inverse = DomainMatrix(rows, (n, n), QQ).inv().to_Matrix()
    except Exception as e:  # sympy raises DMNonInvertibleMatrixError
        raise RuntimeError(f"The Pi basis matrix of weight {k} is singular: {e}") from e
    result = {}
    for j, u in enumerate(words):
        terms = {}
        for i, w in enumerate(words):
            value = inverse[i, j]
            if value != 0:
                terms[w] = _to_fraction(value)
        result[u] = NCPolynomial._wrap(Y, terms)
    return result


def P_of(w: Word) -> NCPolynomial:
    """
    PBW basis element P_w (bracketed Lyndon words and their products).

    :parameter w: A word over X or Y.
    :rtype: NCPolynomial
    """
    return basis_element(w.alphabet, KIND_P, w.letters)


def S_of(w: Word) -> NCPolynomial:
    """
    Dual basis element S_w, with <S_u | P_v> = δ(u, v).

    :parameter w: A word over X or Y.
    :rtype: NCPolynomial
    """
    return basis_element(w.alphabet, KIND_S, w.letters)


def Pi_of(w: Word) -> NCPolynomial:
    """
    Quasi-shuffle PBW element Π_w, built from the primitive letters π₁(y_k).

    :parameter w: A Y-word.
    :rtype: NCPolynomial
    :raises ValueError: For an X-word.
    """
    if w.alphabet != Y:
        raise ValueError("Pi_of expects a Y-word.")
    return basis_element(Y, KIND_PI, w.letters)


def Sigma_of(w: Word) -> NCPolynomial:
    """
    Dual element Σ_w, with <Σ_u | Π_v> = δ(u, v), by exact inversion per weight.

    :parameter w: A Y-word.
    :rtype: NCPolynomial
    :raises ValueError: For an X-word.
    :raises RuntimeError: If the weight's Π matrix is singular.
    """
    if w.alphabet != Y:
        raise ValueError("Sigma_of expects a Y-word.")
    return basis_element(Y, KIND_SIGMA, w.letters)


def Sigma_product_of(w: Word) -> NCPolynomial:
    """Σ_w rebuilt from the Σ_l as normalized quasi-shuffle powers."""
    if w.alphabet != Y:
        raise ValueError("Sigma_product_of expects a Y-word.")
    result = NCPolynomial.one(Y)
    norm = 1
    for factor, power in lyndon_factorization_letters(Y, w.letters):
        element = basis_element(Y, KIND_SIGMA, factor)
        for _ in range(power):
            result = ncpoly.stuffle(result, element)
        norm *= math.factorial(power)
    return ncpoly.scale(result, Fraction(1, norm))


@functools.lru_cache(maxsize=None)
def _convolution_power(letters: Letters, m: int) -> tuple[tuple[Letters, int], ...]:
    # (I - ε)^{*m}(w): deconcatenate along the stuffle coproduct into m nonempty words.
    if m == 1:
        return ((letters, 1),) if letters else ()
    acc: dict[Letters, int] = defaultdict(int)
    for (a, b), c in ncpoly.stuffle_coproduct_letters(letters):
        if not a or not b:
            continue
        for tail, d in _convolution_power(b, m - 1):
            acc[a + tail] += c * d
    return tuple(acc.items())


@functools.lru_cache(maxsize=None)
def _pi1_letters(letters: Letters) -> tuple[tuple[Letters, Fraction], ...]:
    acc: dict[Letters, Fraction] = defaultdict(Fraction)
    for m in range(1, sum(letters) + 1):
        sign = Fraction((-1) ** (m - 1), m)
        for w, c in _convolution_power(letters, m):
            acc[w] += sign * c
    return tuple((w, c) for w, c in acc.items() if c)


def pi1(p: NCPolynomial) -> NCPolynomial:
    """
    Eulerian projector of the quasi-shuffle bialgebra.

    π₁(w) = sum over k >= 1 of (-1)^(k-1)/k times the sum of u1...uk over the
    k-tuples of nonempty words weighted by <w | u1 ⬦ ... ⬦ uk>. The tuples are
    read off the dual law of ⬦ rather than enumerated.

    :parameter p: A polynomial over Y.
    :rtype: NCPolynomial
    """
    if p.alphabet != Y:
        raise ValueError("pi1 expects a polynomial over Y.")
    acc: dict[Letters, Any] = {}
    for letters, c in p.terms.items():
        for w, d in _pi1_letters(letters):
            acc[w] = acc.get(w, 0) + c * d
    return NCPolynomial._wrap(Y, {w: c for w, c in acc.items() if c})


def pi1_reference(p: NCPolynomial) -> NCPolynomial:
    """
    π₁ by direct enumeration of word tuples and iterated quasi-shuffles.

    Exponential in the weight; kept to cross-check :func:`pi1` on small inputs.
    """
    result = NCPolynomial.zero(Y)
    for letters, c in p.terms.items():
        n = sum(letters)
        target = NCPolynomial._wrap(Y, {letters: Fraction(1)})
        result = ncpoly.add(result, target, c)
        for k in range(2, n + 1):
            for parts in _weight_splits(n, k):
                for tuple_ in _word_tuples(parts):
                    product = NCPolynomial.one(Y)
                    for u in tuple_:
                        product = ncpoly.stuffle(product, NCPolynomial._wrap(Y, {u: Fraction(1)}))
                    coefficient = product.coefficient(letters)
                    if coefficient:
                        word = tuple(x for u in tuple_ for x in u)
                        term = NCPolynomial._wrap(Y, {word: Fraction(1)})
                        result = ncpoly.add(result, term, c * coefficient * Fraction((-1) ** (k - 1), k))
    return result


def _weight_splits(n: int, k: int) -> list[tuple[int, ...]]:
    if k == 1:
        return [(n,)] if n >= 1 else []
    return [(a,) + rest for a in range(1, n) for rest in _weight_splits(n - a, k - 1)]


def _word_tuples(parts: tuple[int, ...]) -> list[tuple[Letters, ...]]:
    tuples: list[tuple[Letters, ...]] = [()]
    for a in parts:
        tuples = [t + (u,) for t in tuples for u in letters_of_weight(Y, a)]
    return tuples


def phi_pi1(p: NCPolynomial) -> NCPolynomial:
    """The concatenation morphism y_k -> π₁(y_k) applied to a Y-polynomial."""
    if p.alphabet != Y:
        raise ValueError("phi_pi1 expects a polynomial over Y.")
    return ncpoly.map_letters(p, lambda k: basis_element(Y, KIND_PI, (k,)), Y)


# Commutative monomial in Lyndon generators: sorted (lyndon letters, exponent) pairs.
LyndonMonomial = tuple[tuple[Letters, int], ...]


class LyndonExpansion(NamedTuple):
    """A polynomial written as a commutative polynomial in S_l (X) or Σ_l (Y)."""

    alphabet: str
    terms: dict[LyndonMonomial, Fraction]

    def expand(self) -> NCPolynomial:
        """Re-expand through explicit shuffle (X) or quasi-shuffle (Y) powers."""
        kind, name = (KIND_S, "shuffle") if self.alphabet == X else (KIND_SIGMA, "stuffle")
        result = NCPolynomial.zero(self.alphabet)
        for mono, c in self.terms.items():
            term = NCPolynomial.one(self.alphabet)
            for letters, e in mono:
                term = ncpoly.product(
                    term, ncpoly.power(basis_element(self.alphabet, kind, letters), e, name), name
                )
            result = ncpoly.add(result, term, c)
        return result

    def to_cpoly(self) -> CPoly:
        """
        Map S_l to ZS(l) and Σ_l to ZSigma(l).

        :raises ValueError: If a letter generator (x0, x1, y1) occurs, i.e. the
            expanded polynomial was not supported on convergent words.
        """
        result = CPoly.zero()
        for mono, c in self.terms.items():
            term = CPoly.constant(c)
            for letters, e in mono:
                if len(letters) == 1 and (self.alphabet == X or letters == (1,)):
                    raise ValueError(
                        "Divergent generator in the decomposition; the input is not "
                        "supported on convergent words (use gamma_constant for "
                        "regularized values)."
                    )
                term = term * CPoly.symbol(side_symbol(self.alphabet, letters), e)
            result = result + term
        return result

    def format(self) -> str:
        name = "S" if self.alphabet == X else "Sigma"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda t: t[0]):
            factors = "*".join(
                f"{name}[{Word(self.alphabet, l)}]" + (f"^{e}" if e > 1 else "")
                for l, e in mono
            )
            parts.append(f"{c}*{factors}" if factors else str(c))
        return " + ".join(parts) if parts else "0"


def _decompose(p: NCPolynomial, kind: str) -> LyndonExpansion:
    alphabet = p.alphabet
    remaining = p
    out: dict[LyndonMonomial, Fraction] = defaultdict(Fraction)
    while remaining:
        w = max(remaining.terms, key=lambda t: canonical_key(alphabet, t))
        c = remaining.terms[w]
        element = basis_element(alphabet, kind, w)
        _check_leading_word(alphabet, w, element)
        factors = lyndon_factorization_letters(alphabet, w)
        mono = tuple(sorted(factors, key=lambda t: letters_key(alphabet, t[0])))
        out[mono] += c / math.prod(math.factorial(e) for _, e in factors)
        remaining = ncpoly.add(remaining, element, -c)
    return LyndonExpansion(alphabet, {m: c for m, c in out.items() if c})


def _check_leading_word(alphabet: str, w: Letters, element: NCPolynomial) -> None:
    k = letters_weight(alphabet, w)
    top: Optional[Letters] = None
    for letters in element.terms:
        if letters_weight(alphabet, letters) == k and (
            top is None or letters_key(alphabet, letters) > letters_key(alphabet, top)
        ):
            top = letters
    if top != w or element.terms[w] != 1:
        raise RuntimeError(
            f"Dual basis element of {w} is not unitriangular (leading word {top})."
        )


def decompose_shuffle(p: NCPolynomial) -> LyndonExpansion:
    """
    Write an X-polynomial as a commutative polynomial in the S_l under ⧢.

    Repeatedly removes the largest word w through its S_w, whose own largest word
    is w with coefficient 1.

    :parameter p: Polynomial over X with rational coefficients.
    :rtype: LyndonExpansion
    """
    if p.alphabet != X:
        raise ValueError("decompose_shuffle expects a polynomial over X.")
    return _decompose(p, KIND_S)


def decompose_stuffle(p: NCPolynomial) -> LyndonExpansion:
    """
    Write a Y-polynomial as a commutative polynomial in the Σ_l under ⬦.

    :parameter p: Polynomial over Y with rational coefficients.
    :rtype: LyndonExpansion
    """
    if p.alphabet != Y:
        raise ValueError("decompose_stuffle expects a polynomial over Y.")
    return _decompose(p, KIND_SIGMA)
