# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Numerical Checks
================

Harmonic sums H_s(n) = sum over n > n1 > ... > nr > 0 ... written recursively as

    H_(s1, rest)(n) = sum_{k=1..n} H_rest(k - 1) / k^s1,   H_() = 1,

evaluated exactly (Fraction) for small n and in fixed point for large n, and
the numerical validation of derived relations built on them.

Float mode sums integers scaled by 2^bits in numpy object arrays and hands the
result to mpmath; the working precision defaults to 60 significant digits.

Example:
    Checking a derived rule::

        from pypolyzeta import identify, numcheck

        rs_y, _ = identify.local_coordinate_identification(3)
        numcheck.verify_relation_numeric(rs_y.rules[0], n=10**5, tol=1e-2)
"""

import functools
import logging
import math
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Sequence, Union

import mpmath as mp
import numpy as np

from pypolyzeta import bases
from pypolyzeta.symbols import CPoly, IrrSymbol, Rule
from pypolyzeta.words import parse_word, pi_Y_letters, Word, X, Y

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

DEFAULT_DIGITS: int = 60
EXACT_LIMIT: int = 1000
MIN_BITS: int = 200


class Composition(NamedTuple):
    """An index (s1, ..., sr) of positive integers."""

    parts: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def is_convergent(self) -> bool:
        return self.parts[0] >= 2

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.parts)


def as_composition(value: Union[Composition, Sequence[int], Word, str]) -> Composition:
    """
    :raises ValueError: On an empty index, a nonpositive entry or an X-word
        ending in x0.
    """
    if isinstance(value, Composition):
        return value
    if isinstance(value, str):
        value = parse_word(value, Y)
    if isinstance(value, Word):
        if value.alphabet == X:
            letters = pi_Y_letters(value.letters)
            if letters is None:
                raise ValueError(f"{value} ends in x0 and has no index.")
            parts = letters
        else:
            parts = value.letters
    else:
        parts = tuple(int(s) for s in value)
    if not parts:
        raise ValueError("A composition needs at least one part.")
    if any(s < 1 for s in parts):
        raise ValueError(f"Composition parts must be >= 1, got {parts}.")
    return Composition(tuple(parts))


def _to_mpf(value: Union[Fraction, mp.mpf]) -> mp.mpf:
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def _bits(digits: int) -> int:
    return max(MIN_BITS, int(digits * math.log2(10)) + 64)


def _exact_sum(parts: tuple[int, ...], n: int) -> Fraction:
    previous = [Fraction(1)] * (n + 1)  # H_() at 0..n
    for s in reversed(parts):
        current = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            current[k] = current[k - 1] + previous[k - 1] / k**s
        previous = current
    return previous[n]


@functools.lru_cache(maxsize=4096)
def _fixed_point_sum(parts: tuple[int, ...], n: int, bits: int) -> int:
    # Value scaled by 2^bits; each division truncates by less than one unit.
    if n == 0:
        return 0
    k = np.arange(1, n + 1, dtype=object)
    shifted = np.full(n, 1 << bits, dtype=object)  # H_rest(k - 1) for k = 1..n
    powers: dict[int, Any] = {}
    total = 0
    for s in reversed(parts):
        if s not in powers:
            powers[s] = k**s
        cumulative = np.cumsum(shifted // powers[s])
        total = cumulative[-1]
        shifted = np.concatenate((np.zeros(1, dtype=object), cumulative[:-1]))
    return int(total)


def harmonic_sum(
    s: Union[Composition, Sequence[int], Word, str],
    n: int,
    exact: Optional[bool] = None,
    digits: int = DEFAULT_DIGITS,
) -> Union[Fraction, mp.mpf]:
    """
    Multiple harmonic sum H_s(n).

    :parameter s: The index; a composition, Y-word or text such as ``"2,1"``.
    :parameter n: Upper bound, >= 0.
    :parameter exact: Fraction result; defaults to True for n <= 1000.
    :parameter digits: Working precision of the float mode.
    :rtype: Fraction or mpmath.mpf
    """
    parts = as_composition(s).parts
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}.")
    if exact is None:
        exact = n <= EXACT_LIMIT
    if exact:
        return _exact_sum(parts, n)
    bits = _bits(digits)
    with mp.workdps(digits):
        return mp.ldexp(mp.mpf(_fixed_point_sum(parts, n, bits)), -bits)


class Estimate(NamedTuple):
    value: mp.mpf
    error: mp.mpf


def error_bound(depth: int, n: int, refined: bool = False) -> mp.mpf:
    """
    Truncation error model (depth + log n)^depth / n, nonincreasing in n.

    The Richardson-refined value drops one power of the logarithmic factor.
    """
    exponent = depth - 1 if refined else depth
    return (depth + mp.log(n)) ** exponent / n


def mzv_estimate(
    s: Union[Composition, Sequence[int], Word, str],
    n: int,
    refine: bool = False,
    digits: int = DEFAULT_DIGITS,
) -> Estimate:
    """
    Approximate ζ(s) by a partial sum, optionally Richardson-refined as
    2 H_s(2n) - H_s(n).

    :parameter s: A convergent index.
    :parameter n: Partial-sum length, >= 1.
    :parameter refine: Combine the sums at n and 2n.
    :rtype: Estimate
    :raises ValueError: For a divergent index.
    """
    composition = as_composition(s)
    if not composition.is_convergent:
        raise ValueError(f"zeta({composition}) diverges; s1 must be >= 2.")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}.")
    with mp.workdps(digits):
        value = mp.mpf(harmonic_sum(composition, n, exact=False, digits=digits))
        if refine:
            doubled = mp.mpf(harmonic_sum(composition, 2 * n, exact=False, digits=digits))
            value = 2 * doubled - value
        return Estimate(value, error_bound(composition.depth, n, refine))


def euler_gamma_estimate(n: int, digits: int = DEFAULT_DIGITS) -> mp.mpf:
    """γ ≈ H_1(n) - log n - 1/(2n) + 1/(12 n^2), with error O(n^-4)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}.")
    with mp.workdps(digits):
        h = _to_mpf(harmonic_sum((1,), n, digits=digits))
        return h - mp.log(n) - mp.mpf(1) / (2 * n) + mp.mpf(1) / (12 * n**2)


def _word_sum(
    p_terms: Any, alphabet: str, n: int, refine: bool, digits: int
) -> Estimate:
    value, error = mp.mpf(0), mp.mpf(0)
    for letters, c in p_terms.items():
        word = Word(alphabet, letters)
        estimate = mzv_estimate(word, n, refine, digits)
        coefficient = _to_mpf(c)
        value += coefficient * estimate.value
        error += abs(coefficient) * estimate.error
    return Estimate(value, error)


def evaluate_symbol(
    s: IrrSymbol, n: int, refine: bool = True, digits: int = DEFAULT_DIGITS
) -> Estimate:
    """
    Numerical value of a symbol: γ, or ζ applied to the word expansion of Σ_l or S_l.

    :raises ValueError: If the expansion contains a divergent word.
    """
    with mp.workdps(digits):
        if s.is_gamma():
            return Estimate(euler_gamma_estimate(n, digits), mp.mpf(1) / n**4)
        kind = bases.KIND_SIGMA if s.alphabet == Y else bases.KIND_S
        expansion = bases.basis_element(s.alphabet, kind, s.letters)
        return _word_sum(expansion.terms, s.alphabet, n, refine, digits)


def evaluate_cpoly(
    p: CPoly,
    n: int,
    refine: bool = True,
    digits: int = DEFAULT_DIGITS,
    gamma: Optional[mp.mpf] = None,
) -> Estimate:
    """
    Evaluate a symbol polynomial; errors propagate to first order per factor.

    :parameter gamma: Value substituted for γ instead of its estimate.
    """
    with mp.workdps(digits):
        values: dict[IrrSymbol, Estimate] = {}
        for s in p.symbols():
            if s.is_gamma() and gamma is not None:
                values[s] = Estimate(mp.mpf(gamma), mp.mpf(0))
            else:
                values[s] = evaluate_symbol(s, n, refine, digits)
        total, error = mp.mpf(0), mp.mpf(0)
        for mono, c in p.terms.items():
            value, spread = _to_mpf(c), mp.mpf(0)
            for s, e in mono:
                v, d = values[s]
                for _ in range(e):
                    spread = abs(value) * d + abs(v) * spread + spread * d
                    value *= v
            total += value
            error += spread
        return Estimate(total, error)


class NumericCheck(NamedTuple):
    passed: bool
    residual: mp.mpf
    error: mp.mpf
    tol: float


def verify_relation_numeric(
    relation: Union[Rule, CPoly],
    n: int = 10**6,
    tol: float = 1e-3,
    refine: bool = True,
    digits: int = DEFAULT_DIGITS,
) -> NumericCheck:
    """
    Evaluate lhs - rhs of a rule (or a polynomial equation p = 0) numerically.

    :parameter relation: A :class:`~pypolyzeta.symbols.Rule` or a CPoly.
    :parameter n: Partial-sum length.
    :parameter tol: Pass threshold on the absolute residual.
    :rtype: NumericCheck
    """
    if isinstance(relation, Rule):
        poly = CPoly.symbol(relation.lhs) - relation.rhs
    else:
        poly = relation
    estimate = evaluate_cpoly(poly, n, refine, digits)
    passed = abs(estimate.value) < tol
    logger.debug(
        "Residual %s (error bound %s) at n=%d",
        mp.nstr(estimate.value, 8),
        mp.nstr(estimate.error, 3),
        n,
    )
    return NumericCheck(bool(passed), estimate.value, estimate.error, tol)


def verify_gamma_constant(
    w: Union[Composition, Sequence[int], Word, str],
    value: CPoly,
    n: int = 10**5,
    tol: float = 1e-2,
    digits: int = DEFAULT_DIGITS,
) -> NumericCheck:
    """
    Compare H_w(n) with a regularized constant evaluated at γ := H_1(n).

    By the quasi-shuffle identity H_w(n) is a polynomial in H_1(n) whose
    coefficients are convergent harmonic sums, and the stuffle-regularized
    constant is the same polynomial in γ over the limits, so the difference
    tends to 0 like a power of log n over n.
    """
    composition = as_composition(w)
    with mp.workdps(digits):
        h = mp.mpf(harmonic_sum(composition, n, exact=False, digits=digits))
        h1 = mp.mpf(harmonic_sum((1,), n, exact=False, digits=digits))
        estimate = evaluate_cpoly(value, n, True, digits, gamma=h1)
        residual = h - estimate.value
        error = estimate.error + error_bound(composition.depth, n)
        return NumericCheck(bool(abs(residual) < tol), residual, error, tol)


__all__ = [
    "Composition",
    "Estimate",
    "NumericCheck",
    "as_composition",
    "error_bound",
    "euler_gamma_estimate",
    "evaluate_cpoly",
    "evaluate_symbol",
    "harmonic_sum",
    "mzv_estimate",
    "verify_gamma_constant",
    "verify_relation_numeric",
]
