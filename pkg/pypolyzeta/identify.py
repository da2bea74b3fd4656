# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Local Coordinate Identification
===============================

Derives the polynomial relations among the local coordinates ZSigma(l) and
ZS(l) by identifying coefficients in the bridge equation

    Z_γ = B(y1) π_Y(Z_⧢)       (and Z_⧢ = B(x1)^{-1} π_X(Z_γ) on X* x1)

one weight at a time. At weight p the bridge coefficients are reduced with the
rules of lower weight, become linear in the weight-p symbols, and are solved by
exact Gauss-Jordan elimination; pivot symbols become rules, the remaining
symbols become irreducibles.

Key features:

- Derivation of both rewrite systems (:func:`local_coordinate_identification`)
- Canonical forms of convergent polyzetas (:func:`reduce_zeta`) and of
  regularized constants (:func:`gamma_constant`)
- Cross-side translation of symbol polynomials (:func:`translate`)
- Consistency reports (:func:`check_confluence`, :func:`dimension_report`,
  :func:`bridge_residuals`)

Example:
    Reducing ζ(2,1)::

        from pypolyzeta import identify

        identify.reduce_zeta((2, 1))  # zeta(3)
"""

import functools
import logging
import random
import threading
import time
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Union

import numpy as np

from pypolyzeta import bases, series
from pypolyzeta.ncpoly import NCPolynomial
from pypolyzeta.symbols import (
    CPoly,
    GAMMA,
    IrrSymbol,
    normal_form,
    reduce_fixpoint,
    RewriteSystem,
    Rule,
    side_symbol,
    substitute,
)
from pypolyzeta.words import (
    composition_word,
    is_convergent,
    letters_of_weight,
    lyndon_letters_of_weight,
    pi_X,
    render_word,
    Word,
    X,
    Y,
)

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

SIDES: tuple[str, ...] = (Y, X)
REGULARIZATIONS: tuple[str, ...] = ("stuffle", "shuffle")

Systems = tuple[RewriteSystem, RewriteSystem]


class BridgeEquation(NamedTuple):
    """One coefficient of the bridge equation; ``poly`` must vanish."""

    side: str
    word: Word
    poly: CPoly


class BridgeEngine:
    """
    Both sides of the bridge equation, truncated at weight ``order``.

    The Y form compares Z_γ with B(y1) π_Y(Z_⧢) on every Y-word; the X form
    compares Z_⧢ with B(x1)^{-1} π_X(Z_γ) on the X-words ending in x1, the
    only words π_X reaches.
    """

    def __init__(self, order: int) -> None:
        if order < 1:
            raise ValueError(f"Bridge truncation must be >= 1, got {order}.")
        self.order: int = order
        start = time.perf_counter()
        self.z_gamma: series.NCSeries = series.build_Z_gamma(order)
        self.z_shuffle: series.NCSeries = series.build_Z_shuffle(order)
        self.rhs_y: series.NCSeries = series.bridge_rhs_Y(order)
        self.rhs_x: series.NCSeries = series.bridge_rhs_X(order)
        logger.info(
            "Built bridge series to weight %d in %.2fs", order, time.perf_counter() - start
        )

    def bridge_equations(self, p: int) -> list[BridgeEquation]:
        """
        Nonzero bridge coefficients at weight p, Y-words first, each in word order.

        :parameter p: Weight, at most the engine order.
        :rtype: list[BridgeEquation]
        """
        if not 1 <= p <= self.order:
            raise ValueError(f"Weight {p} is outside 1..{self.order}.")
        equations = []
        for letters in letters_of_weight(Y, p):
            poly = self.z_gamma.coefficient(letters) - self.rhs_y.coefficient(letters)
            if poly:
                equations.append(BridgeEquation(Y, Word(Y, letters), poly))
        for letters in letters_of_weight(X, p):
            if letters[-1] != 1:
                continue
            poly = self.z_shuffle.coefficient(letters) - self.rhs_x.coefficient(letters)
            if poly:
                equations.append(BridgeEquation(X, Word(X, letters), poly))
        return equations


@functools.lru_cache(maxsize=4)
def bridge_engine(order: int) -> BridgeEngine:
    return BridgeEngine(order)


def bridge_equations(p: int, order: Optional[int] = None) -> list[BridgeEquation]:
    """Bridge coefficients of weight p, from series truncated at ``order`` (default p)."""
    return bridge_engine(order if order is not None else p).bridge_equations(p)


class WeightStep(NamedTuple):
    """Everything derived at one weight."""

    weight: int
    rules_y: list[Rule]
    rules_x: list[Rule]
    irreducibles_y: list[IrrSymbol]
    irreducibles_x: list[IrrSymbol]
    # Other-side irreducible -> expression in this side's irreducibles.
    foreign_y: dict[IrrSymbol, CPoly]
    foreign_x: dict[IrrSymbol, CPoly]
    equations: int
    seconds: float


def _unknowns(alphabet: str, p: int) -> list[IrrSymbol]:
    # Descending word order: the larger Lyndon word is eliminated first.
    return sorted(
        (side_symbol(alphabet, l) for l in lyndon_letters_of_weight(alphabet, p)),
        reverse=True,
    )


def _split_linear(
    poly: CPoly, unknowns: set[IrrSymbol], p: int, equation: BridgeEquation
) -> tuple[dict[IrrSymbol, Fraction], CPoly]:
    coefs: dict[IrrSymbol, Fraction] = {}
    rest: dict[Any, Fraction] = {}
    for mono, c in poly.terms.items():
        if len(mono) == 1 and mono[0][1] == 1 and mono[0][0] in unknowns:
            coefs[mono[0][0]] = c
        elif any(s in unknowns for s, _ in mono):
            raise RuntimeError(
                f"Weight {p}: the {equation.side}-equation at {render_word(equation.word)} "
                f"is not linear in the weight-{p} symbols: {poly}"
            )
        else:
            rest[mono] = c
    return coefs, CPoly._wrap(rest)


class _Row:
    __slots__ = ("coefs", "const", "source")

    def __init__(
        self, coefs: dict[IrrSymbol, Fraction], const: CPoly, source: BridgeEquation
    ) -> None:
        self.coefs = coefs
        self.const = const
        self.source = source


def _gauss_jordan(
    rows: list[_Row], columns: Sequence[IrrSymbol], p: int
) -> dict[IrrSymbol, _Row]:
    """Reduced row echelon form in the given column order; returns pivot rows by column."""
    pivots: dict[IrrSymbol, _Row] = {}
    r = 0
    for col in columns:
        pick = next((i for i in range(r, len(rows)) if col in rows[i].coefs), None)
        if pick is None:
            continue
        rows[r], rows[pick] = rows[pick], rows[r]
        row = rows[r]
        a = row.coefs[col]
        if a != 1:
            row.coefs = {s: v / a for s, v in row.coefs.items()}
            row.const = row.const / a
        for i, other in enumerate(rows):
            if i == r or col not in other.coefs:
                continue
            f = other.coefs[col]
            coefs = dict(other.coefs)
            for s, v in row.coefs.items():
                value = coefs.get(s, 0) - f * v
                if value:
                    coefs[s] = value
                else:
                    coefs.pop(s, None)
            other.coefs = coefs
            other.const = other.const - row.const * f
        pivots[col] = row
        logger.debug("Weight %d: pivot %s", p, col.name("basis"))
        r += 1
    for row in rows[r:]:
        if row.coefs:
            raise RuntimeError(f"Weight {p}: elimination left unreduced columns {row.coefs}.")
        if row.const:
            raise RuntimeError(
                f"Weight {p}: inconsistent bridge system; the {row.source.side}-equation "
                f"at {render_word(row.source.word)} reduces to {row.const} = 0."
            )
    return pivots


def _solve_side(
    equations: list[BridgeEquation],
    p: int,
    target: str,
    lower_rules: dict[IrrSymbol, CPoly],
    foreign: dict[IrrSymbol, CPoly],
) -> tuple[list[Rule], list[IrrSymbol], dict[IrrSymbol, CPoly]]:
    """
    Solve the weight-p system for one target side.

    :return: The target rules, the target irreducibles, and an expression of every
        other-side weight-p symbol in target irreducibles.
    """
    other = X if target == Y else Y
    target_cols = _unknowns(target, p)
    other_cols = _unknowns(other, p)
    unknowns = set(target_cols) | set(other_cols)
    rows = []
    for equation in equations:
        poly = reduce_fixpoint(substitute(equation.poly, lower_rules, check=False), lower_rules)
        poly = substitute(poly, foreign, check=False)
        if GAMMA in poly.symbols():
            raise RuntimeError(
                f"Weight {p}: gamma survives in the {equation.side}-equation at "
                f"{render_word(equation.word)}: {poly}"
            )
        coefs, const = _split_linear(poly, unknowns, p, equation)
        if coefs or const:
            rows.append(_Row(coefs, const, equation))
    pivots = _gauss_jordan(rows, other_cols + target_cols, p)

    free = [s for s in target_cols if s not in pivots]
    for s in other_cols:
        if s not in pivots:
            raise RuntimeError(
                f"Weight {p}: {s.name('basis')} is not determined by the {target}-side symbols."
            )

    def solved(row: _Row) -> CPoly:
        value = -row.const
        for t, a in row.coefs.items():
            if t not in pivots:
                value = value - CPoly.symbol(t) * a
        return value

    rules = [Rule(s, solved(pivots[s])) for s in sorted(target_cols) if s in pivots]
    expressions = {s: solved(pivots[s]) for s in other_cols}
    return rules, sorted(free), expressions


def _derive_weight(engine: BridgeEngine, p: int, steps: Sequence[WeightStep]) -> WeightStep:
    start = time.perf_counter()
    lower_rules: dict[IrrSymbol, CPoly] = {}
    foreign_y: dict[IrrSymbol, CPoly] = {}
    foreign_x: dict[IrrSymbol, CPoly] = {}
    for step in steps:
        lower_rules.update({r.lhs: r.rhs for r in step.rules_y})
        lower_rules.update({r.lhs: r.rhs for r in step.rules_x})
        foreign_y.update(step.foreign_y)
        foreign_x.update(step.foreign_x)
    equations = engine.bridge_equations(p)
    rules_y, irr_y, x_in_y = _solve_side(equations, p, Y, lower_rules, foreign_y)
    rules_x, irr_x, y_in_x = _solve_side(equations, p, X, lower_rules, foreign_x)
    step = WeightStep(
        weight=p,
        rules_y=rules_y,
        rules_x=rules_x,
        irreducibles_y=irr_y,
        irreducibles_x=irr_x,
        foreign_y={s: x_in_y[s] for s in irr_x},
        foreign_x={s: y_in_x[s] for s in irr_y},
        equations=len(equations),
        seconds=time.perf_counter() - start,
    )
    logger.info(
        "Weight %d: %d equations, %d/%d rules (y/x), irreducibles %s | %s, %.2fs",
        p,
        step.equations,
        len(rules_y),
        len(rules_x),
        ", ".join(s.name("basis") for s in irr_y) or "-",
        ", ".join(s.name("basis") for s in irr_x) or "-",
        step.seconds,
    )
    return step


class _Derivation:
    """Weight steps derived so far, extended on demand."""

    def __init__(self) -> None:
        self.steps: list[WeightStep] = []
        self._lock: threading.Lock = threading.Lock()

    @property
    def max_weight(self) -> int:
        return len(self.steps) + 1

    def extend(self, max_weight: int) -> None:
        with self._lock:
            if max_weight <= self.max_weight:
                return
            engine = bridge_engine(max_weight)
            for p in range(self.max_weight + 1, max_weight + 1):
                self.steps.append(_derive_weight(engine, p, self.steps))

    def systems(self, max_weight: int) -> Systems:
        self.extend(max_weight)
        return systems_from_steps(self.steps[: max_weight - 1], max_weight)


_DERIVATION: _Derivation = _Derivation()


def systems_from_steps(steps: Sequence[WeightStep], max_weight: int) -> Systems:
    rs_y = RewriteSystem(
        Y,
        [r for step in steps for r in step.rules_y],
        [s for step in steps for s in step.irreducibles_y],
        max_weight,
        foreign={s: v for step in steps for s, v in step.foreign_y.items()},
    )
    rs_x = RewriteSystem(
        X,
        [r for step in steps for r in step.rules_x],
        [s for step in steps for s in step.irreducibles_x],
        max_weight,
        foreign={s: v for step in steps for s, v in step.foreign_x.items()},
    )
    return rs_y, rs_x


def local_coordinate_identification(max_weight: int) -> Systems:
    """
    Derive the Y and X rewrite systems up to ``max_weight``.

    At each weight p, in increasing order, the bridge coefficients of weight p are
    reduced with all rules of lower weight, lower irreducibles of the other side
    are written in the target side's irreducibles, and the resulting linear system
    in the weight-p symbols is put in reduced echelon form with the other side's
    symbols first, then the target side's, each in decreasing word order. Target
    pivots give the rules, target columns without pivot the irreducibles.

    :parameter max_weight: Largest weight, >= 2.
    :return: ``(rewrite system over Y, rewrite system over X)``.
    :rtype: tuple[RewriteSystem, RewriteSystem]
    :raises ValueError: If max_weight < 2.
    :raises RuntimeError: If the system at some weight is inconsistent or gamma
        does not cancel.
    """
    if max_weight < 2:
        raise ValueError(f"max_weight must be >= 2, got {max_weight}.")
    return _DERIVATION.systems(max_weight)


def weight_steps(max_weight: int) -> list[WeightStep]:
    """Per-weight derivation records for weights 2..max_weight."""
    if max_weight < 2:
        raise ValueError(f"max_weight must be >= 2, got {max_weight}.")
    _DERIVATION.extend(max_weight)
    return list(_DERIVATION.steps[: max_weight - 1])


def _systems_for(weight: int, systems: Optional[Systems]) -> Systems:
    if systems is not None:
        derived = min(systems[0].max_weight, systems[1].max_weight)
        if derived < weight:
            raise ValueError(
                f"The rewrite systems are derived to weight {derived}, input has weight {weight}."
            )
        return systems
    return local_coordinate_identification(max(weight, 2))


def translate(p: CPoly, side: str, systems: Optional[Systems] = None) -> CPoly:
    """
    Canonical form of a symbol polynomial in one side's irreducibles (and gamma).

    :parameter p: Polynomial in any symbols.
    :parameter side: ``"y"`` or ``"x"``.
    :parameter systems: Rewrite systems; derived on demand when omitted.
    :rtype: CPoly
    :raises ValueError: If a symbol lies above the derived weight.
    """
    if side not in SIDES:
        raise ValueError(f"Unknown side {side!r}; expected 'x' or 'y'.")
    weight = max((s.weight for s in p.symbols()), default=0)
    rs_y, rs_x = _systems_for(weight, systems)
    p = normal_form(normal_form(p, rs_y), rs_x)
    target = rs_y if side == Y else rs_x
    p = substitute(p, target.foreign, check=False)
    allowed = set(target.irreducibles) | {GAMMA}
    stray = p.symbols() - allowed
    if stray:
        names = ", ".join(s.name("basis") for s in sorted(stray))
        raise ValueError(f"Cannot translate {names} to the {side} side.")
    return p


ZetaInput = Union[Sequence[int], Word, NCPolynomial]


def _as_polynomial(value: ZetaInput) -> NCPolynomial:
    if isinstance(value, NCPolynomial):
        return value
    if isinstance(value, Word):
        return NCPolynomial.from_word(value)
    composition = tuple(value)
    if not composition:
        return NCPolynomial.one(Y)
    if any(not isinstance(s, int) or s < 1 for s in composition):
        raise ValueError(f"Malformed composition {composition}; entries must be >= 1.")
    return NCPolynomial.from_word(composition_word(composition))


def reduce_zeta(
    value: ZetaInput, systems: Optional[Systems] = None, side: Optional[str] = None
) -> CPoly:
    """
    Canonical form of a convergent polyzeta in the irreducible symbols.

    The input is decomposed on {Σ_l} (Y input) or {S_l} (X input), the Lyndon
    generators become symbols, and the result is normalized.

    :parameter value: A composition (s1, ..., sr) with s1 > 1, a convergent word,
        or a polynomial supported on convergent words.
    :parameter systems: Rewrite systems; derived on demand when omitted.
    :parameter side: Side of the result; defaults to the input's side.
    :rtype: CPoly
    :raises ValueError: On divergent input.
    """
    p = _as_polynomial(value)
    for w in p.words():
        if not is_convergent(w):
            raise ValueError(
                f"{render_word(w)} is divergent; use gamma_constant for its regularized value."
            )
    side = side or p.alphabet
    if not p:
        return CPoly.zero()
    weight = max(p.weights())
    if weight == 0:
        return CPoly.constant(p.coefficient(()))
    if p.alphabet == Y:
        expansion = bases.decompose_stuffle(p)
    else:
        expansion = bases.decompose_shuffle(p)
    return translate(expansion.to_cpoly(), side, _systems_for(weight, systems))


def gamma_constant(
    w: Word,
    regularization: str = "stuffle",
    systems: Optional[Systems] = None,
    side: str = Y,
) -> CPoly:
    """
    Regularized constant of a word.

    With ``"stuffle"`` this is <Z_γ | w> for a Y-word, the constant γ_w of the
    asymptotic expansion of the harmonic sum H_w(n). With ``"shuffle"`` it is
    <Z_⧢ | π_X(w)> (or <Z_⧢ | w> for an X-word), which is γ-free.

    :parameter w: A Y-word, or an X-word with ``"shuffle"``.
    :parameter regularization: ``"stuffle"`` or ``"shuffle"``.
    :parameter systems: Rewrite systems; derived on demand when omitted.
    :parameter side: Side of the irreducibles in the result.
    :rtype: CPoly
    """
    if regularization not in REGULARIZATIONS:
        raise ValueError(
            f"Unknown regularization {regularization!r}; expected one of {REGULARIZATIONS}."
        )
    if w.weight == 0:
        return CPoly.one()
    order = max(w.weight, 2)
    if regularization == "stuffle":
        if w.alphabet != Y:
            raise ValueError("The stuffle-regularized constant is defined for Y-words.")
        value = series.build_Z_gamma(order).coefficient(w)
    else:
        x_word = pi_X(w) if w.alphabet == Y else w
        value = series.build_Z_shuffle(order).coefficient(x_word)
    return translate(value, side, _systems_for(order, systems))


class ConfluenceReport(NamedTuple):
    violations: list[str]
    samples: int

    @property
    def clean(self) -> bool:
        return not self.violations


def _random_polynomial(rng: random.Random, symbols: list[IrrSymbol]) -> CPoly:
    p = CPoly.zero()
    for _ in range(rng.randint(1, 3)):
        term = CPoly.constant(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        for _ in range(rng.randint(1, 3)):
            term = term * CPoly.symbol(rng.choice(symbols))
        p = p + term
    return p


def _random_order_reduce(
    p: CPoly, rules: dict[IrrSymbol, CPoly], rng: random.Random, limit: int
) -> Optional[CPoly]:
    for _ in range(limit):
        present = sorted(p.symbols() & rules.keys())
        if not present:
            return p
        s = rng.choice(present)
        p = substitute(p, {s: rules[s]}, check=False)
    return None


def check_confluence(rs: RewriteSystem, samples: int = 100, seed: int = 0) -> ConfluenceReport:
    """
    Audit a rewrite system.

    Lists rule-discipline problems (left sides occurring on the right, inhomogeneous
    rules, overlaps with the irreducibles) and compares the normal form of random
    polynomials with single-rule rewriting in random order.

    :parameter rs: The system; it may have been built with ``validate=False``.
    :parameter samples: Number of random polynomials.
    :parameter seed: Seed of the sampler.
    :rtype: ConfluenceReport
    """
    violations = rs.violations()
    symbols = [r.lhs for r in rs.rules] + list(rs.irreducibles)
    if not rs.rules or not symbols:
        return ConfluenceReport(violations, 0)
    rng = random.Random(seed)
    limit = 50 * (len(rs.rules) + 1)
    for i in range(samples):
        p = _random_polynomial(rng, symbols)
        try:
            expected = normal_form(p, rs)
        except RuntimeError as e:
            violations.append(f"sample {i}: normal form failed: {e}")
            continue
        got = _random_order_reduce(p, rs.rule_map, rng, limit)
        if got is None:
            violations.append(f"sample {i}: random-order rewriting of {p} does not terminate")
        elif got != expected:
            violations.append(f"sample {i}: {p} reduces to both {expected} and {got}")
    return ConfluenceReport(violations, samples)


def conjecture_dimensions(max_weight: int) -> list[int]:
    """d_0 .. d_N with d_0 = 1, d_1 = 0, d_2 = 1 and d_k = d_{k-2} + d_{k-3}."""
    d = [1, 0, 1]
    for k in range(3, max_weight + 1):
        d.append(d[k - 2] + d[k - 3])
    return d[: max_weight + 1]


def monomial_counts(irreducible_weights: Sequence[int], max_weight: int) -> list[int]:
    """Coefficients of the product of 1 / (1 - t^w) over the given weights, to t^max_weight."""
    counts = np.zeros(max_weight + 1, dtype=np.int64)
    counts[0] = 1
    for w in irreducible_weights:
        if w > max_weight:
            continue
        geometric = np.zeros(max_weight + 1, dtype=np.int64)
        geometric[::w] = 1
        counts = np.convolve(counts, geometric)[: max_weight + 1]
    return [int(c) for c in counts]


class DimensionRow(NamedTuple):
    weight: int
    monomials: int
    conjectured: int
    irreducibles_y: int
    irreducibles_x: int
    rules_y: int
    rules_x: int
    lyndon_y: int
    lyndon_x: int

    @property
    def direct_sum_ok(self) -> bool:
        return (
            self.rules_y + self.irreducibles_y == self.lyndon_y
            and self.rules_x + self.irreducibles_x == self.lyndon_x
        )


def _lyndon_count(alphabet: str, k: int) -> int:
    # Letters are the divergent generators.
    return len(
        [
            l
            for l in lyndon_letters_of_weight(alphabet, k)
            if len(l) > 1 or (alphabet == Y and l != (1,))
        ]
    )


def dimension_report(max_weight: int, systems: Optional[Systems] = None) -> list[DimensionRow]:
    """
    Per-weight bookkeeping for weights 2..max_weight.

    The monomial count is the dimension of the weight-k part of the free
    commutative algebra on the irreducibles; the direct-sum check compares
    rules plus irreducibles with the convergent Lyndon words of each side.

    :rtype: list[DimensionRow]
    """
    rs_y, rs_x = _systems_for(max_weight, systems)
    counts = monomial_counts([s.weight for s in rs_y.irreducibles], max_weight)
    conjectured = conjecture_dimensions(max_weight)
    return [
        DimensionRow(
            weight=k,
            monomials=counts[k],
            conjectured=conjectured[k],
            irreducibles_y=len(rs_y.irreducibles_of_weight(k)),
            irreducibles_x=len(rs_x.irreducibles_of_weight(k)),
            rules_y=len(rs_y.rules_of_weight(k)),
            rules_x=len(rs_x.rules_of_weight(k)),
            lyndon_y=_lyndon_count(Y, k),
            lyndon_x=_lyndon_count(X, k),
        )
        for k in range(2, max_weight + 1)
    ]


def bridge_residuals(p: int, systems: Optional[Systems] = None) -> list[BridgeEquation]:
    """
    Bridge coefficients of weight p that do not vanish under the derived systems.

    Both bridge forms are checked, each translated to the Y and to the X side;
    the list is empty when the systems are consistent at weight p.
    """
    resolved = _systems_for(p, systems)
    residuals = []
    for equation in bridge_equations(p):
        for side in SIDES:
            value = translate(equation.poly, side, resolved)
            if value:
                residuals.append(BridgeEquation(equation.side, equation.word, value))
                break
    return residuals


def rule_residual(rule: Rule, systems: Optional[Systems] = None) -> CPoly:
    """
    Difference between a rule and the derived systems: the word expansion of
    the lhs basis element reduced by ``systems``, minus the rhs.

    A rule taken from ``systems`` itself gives zero. Use it to audit a rule
    from elsewhere (a table, a cache file) against the derived systems;
    :func:`bridge_residuals` checks the systems against the bridge equations.

    :raises ValueError: For the gamma symbol, which has no rule.
    """
    alphabet = rule.lhs.alphabet
    if alphabet is None:
        raise ValueError("gamma has no rule.")
    kind = bases.KIND_SIGMA if alphabet == Y else bases.KIND_S
    expanded = bases.basis_element(alphabet, kind, rule.lhs.letters)
    lhs = reduce_zeta(expanded, systems, side=alphabet)
    return lhs - translate(rule.rhs, alphabet, systems)


__all__ = [
    "BridgeEngine",
    "BridgeEquation",
    "ConfluenceReport",
    "DimensionRow",
    "WeightStep",
    "bridge_engine",
    "bridge_equations",
    "bridge_residuals",
    "check_confluence",
    "conjecture_dimensions",
    "dimension_report",
    "gamma_constant",
    "local_coordinate_identification",
    "monomial_counts",
    "reduce_zeta",
    "rule_residual",
    "systems_from_steps",
    "translate",
    "weight_steps",
]
