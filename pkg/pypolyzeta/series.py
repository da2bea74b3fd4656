# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Truncated Noncommutative Series
===============================

Series over X or Y truncated at a weight N, with :class:`~pypolyzeta.symbols.CPoly`
coefficients, and the generating series built from them:

- :func:`build_Z_shuffle`: Z_⧢, the ordered product of exp(ZS(l) P_l);
- :func:`build_Z_stuffle`: Z_⬦, the ordered product of exp(ZSigma(l) Π_l);
- :func:`build_Z_gamma`: Z_γ = exp(γ y1) Z_⬦;
- :func:`B_series`, :func:`Bprime_series` and :func:`Bx_inverse_series`, the
  single-letter series of the bridge Z_γ = B(y1) π_Y(Z_⧢).

Products over Lyndon words run in decreasing word order, so the first factor
belongs to the largest Lyndon word.

Example:
    The two sides of the bridge at weight 3::

        from pypolyzeta import series, words

        lhs = series.build_Z_gamma(3)
        rhs = series.bridge_rhs_Y(3)
        (lhs - rhs).coefficient(words.y_word(1, 1))  # reduces to zero
"""

import functools
import logging
import math
from fractions import Fraction
from typing import Any, Iterator, Mapping, Optional

from pypolyzeta import bases, ncpoly
from pypolyzeta.ncpoly import NCPolynomial
from pypolyzeta.symbols import CPoly, GAMMA, zs_letters, zsigma_letters
from pypolyzeta.words import (
    canonical_key,
    check_alphabet,
    is_lyndon_letters,
    Letters,
    letters_key,
    letters_weight,
    lyndon_enumerate,
    pi_X_letters,
    pi_Y_letters,
    render_letters,
    Word,
    X,
    Y,
)

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

MRS_KINDS: dict[str, str] = {"P": bases.KIND_P, "Pi": bases.KIND_PI}


def _as_coefficient(c: Any) -> CPoly:
    if isinstance(c, CPoly):
        return c
    if isinstance(c, (int, Fraction)):
        return CPoly.constant(c)
    raise TypeError(f"Series coefficients must be CPoly or rational, got {type(c).__name__}.")


class NCSeries:
    """
    Series truncated at weight ``order``: terms of larger weight are dropped on
    construction and by every operation.
    """

    __slots__ = ("alphabet", "order", "_terms")

    def __init__(
        self, alphabet: str, order: int, terms: Optional[Mapping[Letters, Any]] = None
    ) -> None:
        check_alphabet(alphabet)
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}.")
        self.alphabet: str = alphabet
        self.order: int = order
        self._terms: dict[Letters, CPoly] = {}
        for letters, c in (terms or {}).items():
            letters = tuple(letters)
            if letters_weight(alphabet, letters) > order:
                continue
            c = _as_coefficient(c)
            if c:
                self._terms[letters] = c

    @classmethod
    def _wrap(cls, alphabet: str, order: int, terms: dict[Letters, CPoly]) -> "NCSeries":
        s = cls.__new__(cls)
        s.alphabet = alphabet
        s.order = order
        s._terms = terms
        return s

    @classmethod
    def zero(cls, alphabet: str, order: int) -> "NCSeries":
        return cls(alphabet, order)

    @classmethod
    def one(cls, alphabet: str, order: int) -> "NCSeries":
        return cls(alphabet, order, {(): 1})

    @classmethod
    def from_polynomial(cls, p: NCPolynomial, order: int) -> "NCSeries":
        return cls(p.alphabet, order, p.terms)

    @property
    def terms(self) -> Mapping[Letters, CPoly]:
        return self._terms

    def items(self) -> Iterator[tuple[Letters, CPoly]]:
        for letters in sorted(self._terms, key=lambda t: canonical_key(self.alphabet, t)):
            yield letters, self._terms[letters]

    def coefficient(self, w: Word | Letters) -> CPoly:
        """<S | w>; the zero polynomial for absent words."""
        letters = w.letters if isinstance(w, Word) else tuple(w)
        return self._terms.get(letters, CPoly.zero())

    def constant_term(self) -> CPoly:
        return self.coefficient(())

    def graded_component(self, k: int) -> NCPolynomial:
        return NCPolynomial._wrap(
            self.alphabet,
            {
                letters: c
                for letters, c in self._terms.items()
                if letters_weight(self.alphabet, letters) == k
            },
        )

    def truncate(self, order: int) -> "NCSeries":
        return NCSeries(self.alphabet, min(order, self.order), self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.order == other.order
            and self._terms == other._terms
        )

    __hash__ = None  # pyre-ignore[15]

    def __add__(self, other: "NCSeries") -> "NCSeries":
        return series_add(self, other)

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return series_add(self, other, -1)

    def __neg__(self) -> "NCSeries":
        return series_scale(self, -1)

    def __mul__(self, other: Any) -> "NCSeries":
        if isinstance(other, NCSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, other: Any) -> "NCSeries":
        return series_scale(self, other)

    def __repr__(self) -> str:
        return f"NCSeries({self.alphabet!r}, {self.order}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for letters, c in self.items():
            word = render_letters(self.alphabet, letters)
            if not letters:
                parts.append(f"({c})")
            else:
                parts.append(word if c == 1 else f"({c})*{word}")
        return " + ".join(parts)


def _check_compatible(a: NCSeries, b: NCSeries) -> int:
    if a.alphabet != b.alphabet:
        raise ValueError(
            f"Cannot combine series over alphabets {a.alphabet!r} and {b.alphabet!r}."
        )
    return min(a.order, b.order)


def series_add(a: NCSeries, b: NCSeries, factor: Any = 1) -> NCSeries:
    """a + factor * b, truncated at the smaller order."""
    order = _check_compatible(a, b)
    out = {
        letters: c
        for letters, c in a.terms.items()
        if letters_weight(a.alphabet, letters) <= order
    }
    for letters, c in b.terms.items():
        if letters_weight(b.alphabet, letters) > order:
            continue
        value = out.get(letters, CPoly.zero()) + c * factor
        if value:
            out[letters] = value
        else:
            out.pop(letters, None)
    return NCSeries._wrap(a.alphabet, order, out)


def series_scale(a: NCSeries, c: Any) -> NCSeries:
    c = _as_coefficient(c)
    if not c:
        return NCSeries.zero(a.alphabet, a.order)
    out = {}
    for letters, value in a.terms.items():
        product = value * c
        if product:
            out[letters] = product
    return NCSeries._wrap(a.alphabet, a.order, out)


def _by_weight(s: NCSeries) -> dict[int, list[tuple[Letters, CPoly]]]:
    grouped: dict[int, list[tuple[Letters, CPoly]]] = {}
    for letters, c in s.terms.items():
        grouped.setdefault(letters_weight(s.alphabet, letters), []).append((letters, c))
    return grouped


def series_mul(a: NCSeries, b: NCSeries) -> NCSeries:
    """
    Concatenation product truncated at min(a.order, b.order).

    :parameter a: Left factor.
    :parameter b: Right factor.
    :rtype: NCSeries
    :raises ValueError: If the alphabets differ.
    """
    order = _check_compatible(a, b)
    right = _by_weight(b)
    acc: dict[Letters, CPoly] = {}
    for u, ca in a.terms.items():
        wu = letters_weight(a.alphabet, u)
        for wv, entries in right.items():
            if wu + wv > order:
                continue
            for v, cb in entries:
                w = u + v
                value = ca * cb
                previous = acc.get(w)
                acc[w] = value if previous is None else previous + value
    return NCSeries._wrap(a.alphabet, order, {w: c for w, c in acc.items() if c})


def _check_constant(a: NCSeries, expected: int, operation: str) -> None:
    if a.constant_term() != expected:
        raise ValueError(
            f"{operation} needs constant term {expected}, got {a.constant_term()}."
        )


def series_exp(a: NCSeries) -> NCSeries:
    """
    Truncated exponential sum of a^k / k!.

    :raises ValueError: If a has a nonzero constant term.
    """
    _check_constant(a, 0, "series_exp")
    result = NCSeries.one(a.alphabet, a.order)
    term = NCSeries.one(a.alphabet, a.order)
    for k in range(1, a.order + 1):
        term = series_scale(series_mul(term, a), Fraction(1, k))
        if not term:
            break
        result = series_add(result, term)
    return result


def series_log(a: NCSeries) -> NCSeries:
    """
    Truncated logarithm sum of (-1)^(k-1) (a - 1)^k / k.

    :raises ValueError: If the constant term of a is not 1.
    """
    _check_constant(a, 1, "series_log")
    b = series_add(a, NCSeries.one(a.alphabet, a.order), -1)
    result = NCSeries.zero(a.alphabet, a.order)
    power = NCSeries.one(a.alphabet, a.order)
    for k in range(1, a.order + 1):
        power = series_mul(power, b)
        if not power:
            break
        result = series_add(result, power, Fraction((-1) ** (k - 1), k))
    return result


def series_inverse(a: NCSeries) -> NCSeries:
    """
    Inverse of a series with constant term 1, as the geometric sum of (1 - a)^k.

    :raises ValueError: If the constant term of a is not 1.
    """
    _check_constant(a, 1, "series_inverse")
    b = series_add(NCSeries.one(a.alphabet, a.order), a, -1)
    result = NCSeries.one(a.alphabet, a.order)
    power = NCSeries.one(a.alphabet, a.order)
    for _ in range(a.order):
        power = series_mul(power, b)
        if not power:
            break
        result = series_add(result, power)
    return result


def _exp_homogeneous(c: CPoly, p: NCPolynomial, weight: int, order: int) -> NCSeries:
    # exp(c * p) for p homogeneous of the given positive weight.
    out: dict[Letters, CPoly] = {(): CPoly.one()}
    power = NCPolynomial.one(p.alphabet)
    k = 1
    while k * weight <= order:
        power = ncpoly.conc(power, p)
        scale = (c**k) / math.factorial(k)
        for letters, value in power.terms.items():
            term = scale * value
            previous = out.get(letters)
            out[letters] = term if previous is None else previous + term
        k += 1
    return NCSeries._wrap(p.alphabet, order, {w: v for w, v in out.items() if v})


def mrs_product(
    coeffs: Mapping[Word, CPoly], kind: str, order: int, alphabet: Optional[str] = None
) -> NCSeries:
    """
    Ordered product of exp(coeffs[l] * Basis(l)) over decreasing Lyndon words l.

    :parameter coeffs: Lyndon word -> coefficient, homogeneous of the word's weight.
    :parameter kind: ``"P"`` for the P_l basis, ``"Pi"`` for the Π_l basis (Y only).
    :parameter order: Truncation weight N; factors of weight > N are skipped.
    :parameter alphabet: Needed only when ``coeffs`` is empty.
    :rtype: NCSeries
    :raises ValueError: On a non-Lyndon key or an inhomogeneous coefficient.
    """
    if kind not in MRS_KINDS:
        raise ValueError(f"Unknown basis kind {kind!r}; expected 'P' or 'Pi'.")
    found = {w.alphabet for w in coeffs}
    if alphabet is not None:
        found.add(alphabet)
    if len(found) != 1:
        raise ValueError("mrs_product needs exactly one alphabet.")
    (alphabet,) = found
    factors = []
    for w, c in coeffs.items():
        if not w.letters or not is_lyndon_letters(alphabet, w.letters):
            raise ValueError(f"{w} is not a Lyndon word.")
        c = _as_coefficient(c)
        weights = c.weights()
        if weights and weights != {w.weight}:
            raise ValueError(
                f"Coefficient of {w} has weights {sorted(weights)}, expected {w.weight}."
            )
        if c and w.weight <= order:
            factors.append((w.letters, c))
    factors.sort(key=lambda t: letters_key(alphabet, t[0]), reverse=True)
    result = NCSeries.one(alphabet, order)
    for letters, c in factors:
        basis = bases.basis_element(alphabet, MRS_KINDS[kind], letters)
        factor = _exp_homogeneous(c, basis, letters_weight(alphabet, letters), order)
        result = series_mul(result, factor)
    return result


@functools.lru_cache(maxsize=None)
def build_Z_shuffle(order: int) -> NCSeries:
    """
    Z_⧢ truncated at weight ``order``: the product of exp(ZS(l) P_l) over the
    Lyndon X-words l of weight >= 2.
    """
    coeffs = {
        w: CPoly.symbol(zs_letters(w.letters))
        for w in lyndon_enumerate(X, max(order, 1))
        if w.weight >= 2
    }
    logger.debug("Building Z_shuffle to weight %d from %d factors", order, len(coeffs))
    return mrs_product(coeffs, "P", order, X)


@functools.lru_cache(maxsize=None)
def build_Z_stuffle(order: int) -> NCSeries:
    """
    Z_⬦ truncated at weight ``order``: the product of exp(ZSigma(l) Π_l) over the
    Lyndon Y-words l other than y1.
    """
    coeffs = {
        w: CPoly.symbol(zsigma_letters(w.letters))
        for w in lyndon_enumerate(Y, max(order, 1))
        if w.letters != (1,)
    }
    logger.debug("Building Z_stuffle to weight %d from %d factors", order, len(coeffs))
    return mrs_product(coeffs, "Pi", order, Y)


def _gamma_exponential(alphabet: str, letter: int, order: int, sign: int) -> NCSeries:
    exponent = NCSeries(alphabet, order, {(letter,): CPoly.symbol(GAMMA) * sign})
    return series_exp(exponent)


@functools.lru_cache(maxsize=None)
def build_Z_gamma(order: int) -> NCSeries:
    """Z_γ = exp(γ y1) Z_⬦."""
    return series_mul(_gamma_exponential(Y, 1, order, 1), build_Z_stuffle(order))


def zeta_cpoly(k: int) -> CPoly:
    """ζ(k) written as ZS(x0^(k-1) x1)."""
    return CPoly.symbol(zs_letters((0,) * (k - 1) + (1,)))


def _single_letter_exp(
    alphabet: str, letter: int, order: int, gamma_sign: int, zeta_sign: int
) -> NCSeries:
    # exp(gamma_sign * γ t + zeta_sign * sum_{k >= 2} ζ(k) (-t)^k / k) with t the letter.
    terms: dict[Letters, CPoly] = {}
    if gamma_sign and order >= 1:
        terms[(letter,)] = CPoly.symbol(GAMMA) * gamma_sign
    for k in range(2, order + 1):
        terms[(letter,) * k] = zeta_cpoly(k) * Fraction(zeta_sign * (-1) ** k, k)
    return series_exp(NCSeries(alphabet, order, terms))


@functools.lru_cache(maxsize=None)
def B_series(order: int) -> NCSeries:
    """B(y1) = exp(γ y1 - sum over k >= 2 of ζ(k) (-y1)^k / k)."""
    return _single_letter_exp(Y, 1, order, 1, -1)


@functools.lru_cache(maxsize=None)
def Bprime_series(order: int) -> NCSeries:
    """B'(y1), that is B(y1) without the γ term."""
    return _single_letter_exp(Y, 1, order, 0, -1)


@functools.lru_cache(maxsize=None)
def Bx_inverse_series(order: int) -> NCSeries:
    """B(x1)^{-1} = exp(-γ x1 + sum over k >= 2 of ζ(k) (-x1)^k / k)."""
    return _single_letter_exp(X, 1, order, -1, 1)


def pi_Y_series(s: NCSeries) -> NCSeries:
    """Word-wise π_Y; words ending in x0 are dropped."""
    if s.alphabet != X:
        raise ValueError("pi_Y_series expects a series over X.")
    out: dict[Letters, CPoly] = {}
    for letters, c in s.terms.items():
        image = pi_Y_letters(letters)
        if image is None:
            continue
        value = out.get(image, CPoly.zero()) + c
        if value:
            out[image] = value
        else:
            out.pop(image, None)
    return NCSeries._wrap(Y, s.order, out)


def pi_X_series(s: NCSeries) -> NCSeries:
    """Word-wise π_X, y_k -> x0^(k-1) x1."""
    if s.alphabet != Y:
        raise ValueError("pi_X_series expects a series over Y.")
    return NCSeries._wrap(
        X, s.order, {pi_X_letters(letters): c for letters, c in s.terms.items()}
    )


def character_check(s: NCSeries, product: str) -> bool:
    """
    Check <s | u . v> = <s | u> <s | v> for all nonempty u, v with
    weight(u) + weight(v) <= s.order.

    :parameter s: A series with constant term 1.
    :parameter product: ``"shuffle"`` or ``"stuffle"``.
    :rtype: bool
    :raises ValueError: If the constant term is not 1 or the product is unknown.
    """
    _check_constant(s, 1, "character_check")
    defect = ncpoly.character_defect(s.coefficient, s.alphabet, product, s.order)
    if defect is not None:
        u, v = defect
        logger.debug(
            "Character property fails on (%s, %s)",
            render_letters(s.alphabet, u),
            render_letters(s.alphabet, v),
        )
    return defect is None


@functools.lru_cache(maxsize=None)
def bridge_rhs_Y(order: int) -> NCSeries:
    """B(y1) π_Y(Z_⧢), equal to Z_γ."""
    return series_mul(B_series(order), pi_Y_series(build_Z_shuffle(order)))


@functools.lru_cache(maxsize=None)
def bridge_rhs_X(order: int) -> NCSeries:
    """B(x1)^{-1} π_X(Z_γ), equal to Z_⧢ on the words ending in x1."""
    return series_mul(Bx_inverse_series(order), pi_X_series(build_Z_gamma(order)))


__all__ = [
    "B_series",
    "Bprime_series",
    "Bx_inverse_series",
    "NCSeries",
    "bridge_rhs_X",
    "bridge_rhs_Y",
    "build_Z_gamma",
    "build_Z_shuffle",
    "build_Z_stuffle",
    "character_check",
    "mrs_product",
    "pi_X_series",
    "pi_Y_series",
    "series_add",
    "series_exp",
    "series_inverse",
    "series_log",
    "series_mul",
    "series_scale",
    "zeta_cpoly",
]
