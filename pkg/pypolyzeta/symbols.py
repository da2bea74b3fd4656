# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Polyzeta Symbols
================

Exact commutative polynomials in the formal symbols that name polyzetas:

- **gamma**: Euler's constant, weight 1;
- **ZS(l)**: the polyzeta of the shuffle basis element S_l, for a Lyndon X-word
  l that is not a letter;
- **ZSigma(l)**: the polyzeta of the quasi-shuffle basis element Σ_l, for a
  Lyndon Y-word l other than y1.

ζ(k) is written ZS(x0^(k-1) x1) on the X side and ZSigma(y_k) on the Y side.
A monomial's weight is the sum of its symbol weights, and multiplication adds
weights.

This module also holds :class:`RewriteSystem`, the frozen set of rules
``symbol -> CPoly`` produced by :mod:`pypolyzeta.identify`, together with
:func:`substitute` and :func:`normal_form`.

Example:
    Applying a rule::

        from fractions import Fraction
        from pypolyzeta import symbols, words

        s21 = symbols.zsigma(words.y_word(2, 1))
        s3 = symbols.zsigma(words.y_word(3))
        rule = {s21: symbols.CPoly.symbol(s3) * Fraction(3, 2)}
        symbols.substitute(symbols.CPoly.symbol(s21), rule)  # 3/2*zeta(3)
"""

from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Optional, Sequence

from pypolyzeta.words import (
    format_letters,
    is_lyndon_letters,
    Letters,
    parse_word,
    render_letters,
    Word,
    X,
    Y,
)

# pyre-strict

GAMMA_SIDE: int = 0
Y_SIDE: int = 1
X_SIDE: int = 2

KIND_GAMMA: str = "gamma"
KIND_SIGMA: str = "Sigma"
KIND_S: str = "S"

_SIDE_OF_KIND: dict[str, int] = {KIND_GAMMA: GAMMA_SIDE, KIND_SIGMA: Y_SIDE, KIND_S: X_SIDE}
_KIND_OF_SIDE: dict[int, str] = {v: k for k, v in _SIDE_OF_KIND.items()}
_ALPHABET_OF_SIDE: dict[int, Optional[str]] = {GAMMA_SIDE: None, Y_SIDE: Y, X_SIDE: X}


class IrrSymbol(NamedTuple):
    """
    A polyzeta symbol. Field order makes the natural tuple order the symbol
    order: weight, then side (gamma, Y, X), then the word order of the index.
    """

    weight: int
    side: int
    key: Letters

    @property
    def kind(self) -> str:
        return _KIND_OF_SIDE[self.side]

    @property
    def alphabet(self) -> Optional[str]:
        return _ALPHABET_OF_SIDE[self.side]

    @property
    def letters(self) -> Letters:
        if self.side == Y_SIDE:
            return tuple(-k for k in self.key)
        return self.key

    @property
    def word(self) -> Optional[Word]:
        if self.side == GAMMA_SIDE:
            return None
        return Word(self.alphabet, self.letters)

    def is_gamma(self) -> bool:
        return self.side == GAMMA_SIDE

    def name(self, style: str = "zeta") -> str:
        """
        Human-readable name.

        ``style="zeta"`` gives ``gamma``, ``zeta(3)`` (ZSigma of a letter),
        ``zeta(Sigma[3,1])`` and ``zeta(S[0011])``; ``style="basis"`` gives the
        table notation ``Sigma_{y3y1}`` / ``S_{x0^2x1^2}``.
        """
        if self.side == GAMMA_SIDE:
            return "gamma"
        letters = self.letters
        if style == "basis":
            return f"{self.kind}_{{{render_letters(self.alphabet, letters)}}}"
        if self.side == Y_SIDE and len(letters) == 1:
            return f"zeta({letters[0]})"
        return f"zeta({self.kind}[{format_letters(self.alphabet, letters)}])"

    def to_json(self) -> dict[str, str]:
        if self.side == GAMMA_SIDE:
            return {"kind": KIND_GAMMA, "word": ""}
        return {"kind": self.kind, "word": format_letters(self.alphabet, self.letters)}

    @staticmethod
    def from_json(data: Mapping[str, str]) -> "IrrSymbol":
        kind = data["kind"]
        if kind == KIND_GAMMA:
            return GAMMA
        if kind == KIND_SIGMA:
            return zsigma(parse_word(data["word"], Y))
        if kind == KIND_S:
            return zs(parse_word(data["word"], X))
        raise ValueError(f"Unknown symbol kind {kind!r}.")


GAMMA: IrrSymbol = IrrSymbol(1, GAMMA_SIDE, ())


def zs_letters(letters: Letters) -> IrrSymbol:
    return IrrSymbol(len(letters), X_SIDE, letters)


def zsigma_letters(letters: Letters) -> IrrSymbol:
    return IrrSymbol(sum(letters), Y_SIDE, tuple(-k for k in letters))


def side_symbol(alphabet: str, letters: Letters) -> IrrSymbol:
    """Unchecked symbol of a Lyndon word on either side."""
    return zs_letters(letters) if alphabet == X else zsigma_letters(letters)


def zs(word: Word) -> IrrSymbol:
    """
    The symbol ZS(l).

    :parameter word: A Lyndon X-word with at least two letters.
    :rtype: IrrSymbol
    :raises ValueError: If the word is not an admissible index.
    """
    if word.alphabet != X or len(word.letters) < 2:
        raise ValueError(f"ZS needs a Lyndon X-word that is not a letter, got {word}.")
    if not is_lyndon_letters(X, word.letters):
        raise ValueError(f"ZS index {word} is not a Lyndon word.")
    return zs_letters(word.letters)


def zsigma(word: Word) -> IrrSymbol:
    """
    The symbol ZSigma(l).

    :parameter word: A Lyndon Y-word other than y1.
    :rtype: IrrSymbol
    :raises ValueError: If the word is not an admissible index.
    """
    if word.alphabet != Y or not word.letters or word.letters == (1,):
        raise ValueError(f"ZSigma needs a Lyndon Y-word other than y1, got {word}.")
    if not is_lyndon_letters(Y, word.letters):
        raise ValueError(f"ZSigma index {word} is not a Lyndon word.")
    return zsigma_letters(word.letters)


def zeta_symbol(k: int) -> IrrSymbol:
    """ζ(k) in the X encoding, ZS(x0^(k-1) x1)."""
    if k < 2:
        raise ValueError(f"zeta(k) needs k >= 2, got {k}.")
    return zs_letters((0,) * (k - 1) + (1,))


# Sorted tuple of (symbol, exponent) pairs; the empty tuple is the unit monomial.
Monomial = tuple[tuple[IrrSymbol, int], ...]


def monomial_weight(mono: Monomial) -> int:
    return sum(s.weight * e for s, e in mono)


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for s, e in b:
        merged[s] = merged.get(s, 0) + e
    return tuple(sorted(merged.items()))


def _format_monomial(mono: Monomial, style: str) -> str:
    return "*".join(
        s.name(style) if e == 1 else f"{s.name(style)}^{e}" for s, e in mono
    )


def _print_key(mono: Monomial) -> tuple[int, int, Monomial]:
    return (monomial_weight(mono), monomial_degree(mono), mono)


class CPoly:
    """
    Commutative polynomial over Fraction in :class:`IrrSymbol` variables.

    Stored as ``{monomial: Fraction}`` without zero coefficients; instances are
    treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Any]] = None) -> None:
        self._terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self._terms[mono] = c

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Fraction]) -> "CPoly":
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "CPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "CPoly":
        return cls._wrap({(): Fraction(1)})

    @classmethod
    def constant(cls, c: Any) -> "CPoly":
        return cls({(): c})

    @classmethod
    def symbol(cls, s: IrrSymbol, exponent: int = 1) -> "CPoly":
        return cls._wrap({((s, exponent),) if exponent else (): Fraction(1)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in print order: weight, degree and monomial, all descending."""
        return sorted(self._terms.items(), key=lambda t: _print_key(t[0]), reverse=True)

    def symbols(self) -> set[IrrSymbol]:
        return {s for mono in self._terms for s, _ in mono}

    def weights(self) -> set[int]:
        return {monomial_weight(mono) for mono in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> int:
        """
        Weight of a homogeneous polynomial (0 for the zero polynomial).

        :raises ValueError: If the polynomial mixes weights.
        """
        found = self.weights()
        if len(found) > 1:
            raise ValueError(f"{self} is not weight-homogeneous: weights {sorted(found)}.")
        return next(iter(found), 0)

    def degree_in(self, s: IrrSymbol) -> int:
        return max((dict(mono).get(s, 0) for mono in self._terms), default=0)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def homogeneous_component(self, k: int) -> "CPoly":
        return CPoly._wrap(
            {mono: c for mono, c in self._terms.items() if monomial_weight(mono) == k}
        )

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None  # pyre-ignore[15]

    def __add__(self, other: Any) -> "CPoly":
        other = _as_cpoly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            value = out.get(mono, 0) + c
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return CPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly._wrap({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: Any) -> "CPoly":
        other = _as_cpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "CPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return CPoly.zero()
            return CPoly._wrap({mono: c * other for mono, c in self._terms.items()})
        if not isinstance(other, CPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = monomial_mul(ma, mb)
                out[mono] = out.get(mono, 0) + ca * cb
        return CPoly._wrap({mono: c for mono, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "CPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> "CPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = CPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def format(self, style: str = "zeta") -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            if not mono:
                parts.append(str(c))
                continue
            body = _format_monomial(mono, style)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"CPoly({self.format()})"

    def to_json(self) -> list[dict[str, Any]]:
        """``[{"coeff": "p/q", "mono": [{"kind", "word"}, ...]}, ...]``, monomials as multisets."""
        return [
            {
                "coeff": str(c),
                "mono": [s.to_json() for s, e in mono for _ in range(e)],
            }
            for mono, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]]) -> "CPoly":
        result = cls.zero()
        for entry in data:
            term = cls.constant(Fraction(entry["coeff"]))
            for descriptor in entry["mono"]:
                term = term * cls.symbol(IrrSymbol.from_json(descriptor))
            result = result + term
        return result


def _as_cpoly(value: Any) -> Optional[CPoly]:
    if isinstance(value, CPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return CPoly.constant(value)
    return None


def check_homogeneous_rule(lhs: IrrSymbol, rhs: CPoly) -> None:
    """
    :raises ValueError: If rhs is not homogeneous of the weight of lhs.
    """
    found = rhs.weights()
    if found and found != {lhs.weight}:
        raise ValueError(
            f"Rule {lhs.name()} -> {rhs} is not homogeneous: "
            f"lhs weight {lhs.weight}, rhs weights {sorted(found)}."
        )


def substitute(
    p: CPoly, rule: Mapping[IrrSymbol, CPoly], check: bool = True
) -> CPoly:
    """
    Replace every occurrence of the rule symbols in p.

    :parameter p: Polynomial to rewrite.
    :parameter rule: Map symbol -> replacement, each homogeneous of the symbol weight.
    :parameter check: Validate homogeneity of the rule first.
    :return: The re-canonicalized result; weights are preserved.
    :rtype: CPoly
    :raises ValueError: If a replacement is inhomogeneous.
    """
    if check:
        for lhs, rhs in rule.items():
            check_homogeneous_rule(lhs, rhs)
    if not rule or not (p.symbols() & rule.keys()):
        return p
    powers: dict[tuple[IrrSymbol, int], CPoly] = {}
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        kept: list[tuple[IrrSymbol, int]] = []
        factor: Optional[CPoly] = None
        for s, e in mono:
            replacement = rule.get(s)
            if replacement is None:
                kept.append((s, e))
                continue
            power = powers.get((s, e))
            if power is None:
                power = replacement**e
                powers[(s, e)] = power
            factor = power if factor is None else factor * power
        if factor is None:
            out[mono] = out.get(mono, 0) + c
            continue
        base = tuple(kept)
        for fmono, fc in factor.terms.items():
            mono_out = monomial_mul(base, fmono)
            out[mono_out] = out.get(mono_out, 0) + c * fc
    return CPoly._wrap({mono: c for mono, c in out.items() if c})


def reduce_fixpoint(p: CPoly, rule: Mapping[IrrSymbol, CPoly]) -> CPoly:
    """Substitute until no rule symbol is left."""
    for _ in range(len(rule) + 1):
        if not (p.symbols() & rule.keys()):
            return p
        p = substitute(p, rule, check=False)
    raise RuntimeError(f"Rewriting did not terminate; the rule set is cyclic near {p}.")


class Rule(NamedTuple):
    lhs: IrrSymbol
    rhs: CPoly

    def format(self, style: str = "zeta") -> str:
        return f"{self.lhs.name(style)} -> {self.rhs.format(style)}"


class RewriteSystem:
    """
    Frozen rules ``symbol -> CPoly`` for one side, with the irreducible symbols.

    ``foreign`` maps irreducible symbols of the other side to expressions in this
    side's irreducibles (the weight-wise correspondence produced with the rules).
    """

    def __init__(
        self,
        side: str,
        rules: Sequence[Rule],
        irreducibles: Iterable[IrrSymbol],
        max_weight: int,
        foreign: Optional[Mapping[IrrSymbol, CPoly]] = None,
        validate: bool = True,
    ) -> None:
        if side not in (X, Y):
            raise ValueError(f"Unknown side {side!r}; expected 'x' or 'y'.")
        self.side: str = side
        self.rules: tuple[Rule, ...] = tuple(sorted(rules, key=lambda r: r.lhs))
        self.irreducibles: tuple[IrrSymbol, ...] = tuple(sorted(set(irreducibles)))
        self.max_weight: int = max_weight
        self.foreign: dict[IrrSymbol, CPoly] = dict(sorted((foreign or {}).items()))
        self.rule_map: dict[IrrSymbol, CPoly] = {r.lhs: r.rhs for r in self.rules}
        self._by_weight: dict[int, dict[IrrSymbol, CPoly]] = {}
        for r in self.rules:
            self._by_weight.setdefault(r.lhs.weight, {})[r.lhs] = r.rhs
        if validate:
            problems = self.violations()
            if problems:
                raise ValueError("Invalid rewrite system: " + "; ".join(problems))

    @property
    def side_index(self) -> int:
        return X_SIDE if self.side == X else Y_SIDE

    def violations(self) -> list[str]:
        """Rule-discipline problems: wrong side, inhomogeneity, reducible rhs, overlaps."""
        problems = []
        lhs_set = set(self.rule_map)
        if len(lhs_set) != len(self.rules):
            problems.append("duplicate rule left sides")
        for r in self.rules:
            if r.lhs.side != self.side_index:
                problems.append(f"{r.lhs.name()} is not a {self.side}-side symbol")
            found = r.rhs.weights()
            if found and found != {r.lhs.weight}:
                problems.append(f"{r.format()} is not homogeneous")
            overlap = r.rhs.symbols() & lhs_set
            if overlap:
                names = ", ".join(s.name() for s in sorted(overlap))
                problems.append(f"{r.format()} has reducible symbols {names} on the right")
        both = lhs_set & set(self.irreducibles)
        if both:
            problems.append(
                "symbols both reducible and irreducible: "
                + ", ".join(s.name() for s in sorted(both))
            )
        return problems

    def rules_of_weight(self, k: int) -> list[Rule]:
        return [r for r in self.rules if r.lhs.weight == k]

    def irreducibles_of_weight(self, k: int) -> list[IrrSymbol]:
        return [s for s in self.irreducibles if s.weight == k]

    def is_reducible(self, s: IrrSymbol) -> bool:
        return s in self.rule_map

    def to_json(self) -> dict[str, Any]:
        return {
            "side": self.side,
            "max_weight": self.max_weight,
            "rules": [
                {"lhs": r.lhs.to_json(), "rhs": r.rhs.to_json()} for r in self.rules
            ],
            "irreducibles": [s.to_json() for s in self.irreducibles],
            "foreign": [
                {"symbol": s.to_json(), "value": v.to_json()}
                for s, v in self.foreign.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "RewriteSystem":
        return cls(
            side=data["side"],
            rules=[
                Rule(IrrSymbol.from_json(r["lhs"]), CPoly.from_json(r["rhs"]))
                for r in data["rules"]
            ],
            irreducibles=[IrrSymbol.from_json(s) for s in data["irreducibles"]],
            max_weight=int(data["max_weight"]),
            foreign={
                IrrSymbol.from_json(f["symbol"]): CPoly.from_json(f["value"])
                for f in data.get("foreign", [])
            },
        )


def normal_form(p: CPoly, rs: RewriteSystem) -> CPoly:
    """
    Exhaustive rewriting of p under the rules of rs, lower weights first.

    :parameter p: Polynomial to reduce.
    :parameter rs: A validated rewrite system.
    :return: The unique normal form; only irreducible (or foreign) symbols remain.
    :rtype: CPoly
    """
    for weight in sorted(rs._by_weight):
        rules = rs._by_weight[weight]
        if p.symbols() & rules.keys():
            p = substitute(p, rules, check=False)
    return reduce_fixpoint(p, rs.rule_map)
