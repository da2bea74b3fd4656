# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Command-Line Interface
======================

``pypolyzeta <command> [options]`` with the commands

- ``lyndon``: Lyndon words of an alphabet up to a weight;
- ``basis``: P, S, Π or Σ basis elements of the Lyndon words;
- ``relations``: the rewrite systems with irreducibles and dimension counts;
- ``reduce``: canonical form of a convergent polyzeta;
- ``gamma``: regularized constant of a Y-word;
- ``verify``: numeric, bridge and confluence checks of the derived rules;
- ``numcheck``: partial-sum estimate of ζ(s) (or of γ for an empty word).

Compositions are written ``2,1`` and X-words as 0/1 strings (``0011``). Results
go to stdout; logs and error objects go to stderr. Exit codes: 0 success,
2 usage error, 3 internal inconsistency.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, NoReturn, Optional, Sequence

import jinja2
import mpmath as mp

from pypolyzeta import __version__, bases, identify, numcheck
from pypolyzeta.cache import ResultCache
from pypolyzeta.config import build_config, FORMATS, RunConfig, SIDE_CHOICES
from pypolyzeta.ncpoly import NCPolynomial
from pypolyzeta.symbols import CPoly, RewriteSystem
from pypolyzeta.words import (
    format_letters,
    letters_of_weight,
    lyndon_enumerate,
    parse_word,
    render_word,
    Word,
    X,
    Y,
)

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_USAGE: int = 2
EXIT_INTERNAL: int = 3

# Alphabet used when neither the flags nor the config file name one.
DEFAULT_ALPHABET: dict[str, str] = {
    "lyndon": X,
    "basis": X,
    "reduce": Y,
    "gamma": Y,
    "numcheck": Y,
}

_TEMPLATES: jinja2.Environment = jinja2.Environment(
    loader=jinja2.PackageLoader("pypolyzeta", "templates"),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=jinja2.StrictUndefined,
)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise ValueError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format.")
    common.add_argument("--config", default=None, help="TOML file with a [pypolyzeta] table.")
    common.add_argument("--cache-dir", dest="cache_dir", default=None, help="Cache directory.")
    common.add_argument(
        "--no-cache",
        dest="use_cache",
        action="store_const",
        const=False,
        default=None,
        help="Neither read nor write the cache.",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs."
    )

    parser = _ArgumentParser(prog="pypolyzeta", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(
            name, parents=[common], help=help_text, description=help_text
        )

    def weight(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--max-weight", dest="max_weight", type=int, default=None)

    def alphabet(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--alphabet", choices=("x", "y"), default=None)

    def word(sub: argparse.ArgumentParser, help_text: str) -> None:
        sub.add_argument("--word", default=None, help=help_text)

    def numeric(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--n", type=int, default=None, help="Partial-sum length.")
        sub.add_argument("--digits", type=int, default=None, help="Working precision.")
        sub.add_argument(
            "--refine", action=argparse.BooleanOptionalAction, default=None,
            help="Richardson refinement from n and 2n.",
        )

    sub = add("lyndon", "List the Lyndon words up to a weight.")
    alphabet(sub)
    weight(sub)

    sub = add("basis", "Print basis elements of the Lyndon words (or of one word).")
    alphabet(sub)
    weight(sub)
    sub.add_argument("--kind", choices=bases.KINDS, default=None)
    word(sub, "A single word: 0/1 string on x, composition such as 2,1 on y.")

    sub = add("relations", "Derive the rewrite systems up to a weight.")
    weight(sub)
    sub.add_argument("--side", choices=SIDE_CHOICES, default=None)

    sub = add("reduce", "Canonical form of a convergent polyzeta.")
    alphabet(sub)
    word(sub, "Composition such as 2,1 (y) or convergent 0/1 word (x).")
    sub.add_argument("--side", choices=SIDE_CHOICES, default=None, help="Side of the result.")

    sub = add("gamma", "Regularized constant of a word.")
    alphabet(sub)
    word(sub, "Composition such as 1,1.")
    sub.add_argument("--regularization", choices=identify.REGULARIZATIONS, default=None)
    sub.add_argument("--side", choices=SIDE_CHOICES, default=None, help="Side of the result.")

    sub = add("verify", "Check the derived rules numerically and symbolically.")
    weight(sub)
    sub.add_argument("--side", choices=SIDE_CHOICES, default=None)
    sub.add_argument("--tol", type=float, default=None)
    numeric(sub)

    sub = add("numcheck", "Estimate zeta(s) by partial sums; an empty --word estimates gamma.")
    word(sub, "Convergent composition such as 2,1.")
    numeric(sub)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _alphabet(config: RunConfig) -> str:
    return config.alphabet or DEFAULT_ALPHABET.get(config.command, X)


def _cache(config: RunConfig) -> ResultCache:
    return ResultCache(config.resolved_cache_dir(), enabled=config.use_cache)


def _render(template: str, **context: Any) -> str:
    return _TEMPLATES.get_template(template).render(**context)


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _sides(config: RunConfig) -> list[str]:
    return [Y, X] if config.side == "both" else [config.side]


def load_systems(config: RunConfig, max_weight: int) -> identify.Systems:
    """Rewrite systems to ``max_weight``, from the cache when both sides are stored."""
    max_weight = max(max_weight, 2)
    cache = _cache(config)
    stored = [cache.load("rewrite", side, max_weight) for side in (Y, X)]
    if all(stored):
        try:
            rs_y, rs_x = (RewriteSystem.from_json(entry[0]) for entry in stored)
            return rs_y, rs_x
        except (KeyError, TypeError, ValueError) as e:
            logger.warning("Ignoring cached rewrite systems: %s", e)
    rs_y, rs_x = identify.local_coordinate_identification(max_weight)
    cache.store("rewrite", Y, max_weight, [rs_y.to_json()])
    cache.store("rewrite", X, max_weight, [rs_x.to_json()])
    return rs_y, rs_x


def _parse_input_word(config: RunConfig) -> Word:
    return parse_word(config.word, _alphabet(config))


def cmd_lyndon(config: RunConfig) -> str:
    alphabet = _alphabet(config)
    found = lyndon_enumerate(alphabet, config.max_weight)
    if config.format == "json":
        return _dump(
            {
                "alphabet": alphabet,
                "max_weight": config.max_weight,
                "words": [
                    {"word": format_letters(alphabet, w.letters), "weight": w.weight}
                    for w in found
                ],
            }
        )
    return "".join(f"{render_word(w)}\n" for w in found)


def _fill_basis(config: RunConfig, alphabet: str, kind: str, max_weight: int) -> bases.BasisTable:
    table = bases.basis_table(alphabet, kind)
    cache = _cache(config)
    for k in range(1, max_weight + 1):
        stored = cache.load(f"basis-{kind}", alphabet, k)
        if stored is not None:
            entries = {
                parse_word(item["word"], alphabet).letters: NCPolynomial.from_json(
                    alphabet, item["poly"]
                )
                for item in stored
            }
            if set(entries) == set(letters_of_weight(alphabet, k)):
                table.load(entries, k)
                continue
        cache.store(
            f"basis-{kind}",
            alphabet,
            k,
            [
                {"word": format_letters(alphabet, letters), "poly": poly.to_json()}
                for letters, poly in table.of_weight(k)
            ],
        )
    return table


def cmd_basis(config: RunConfig) -> str:
    alphabet = _alphabet(config)
    kind = config.kind
    if config.word:
        targets = [_parse_input_word(config)]
        max_weight = targets[0].weight
    else:
        max_weight = config.max_weight
        targets = lyndon_enumerate(alphabet, max_weight)
    table = _fill_basis(config, alphabet, kind, max_weight)
    entries = [
        {
            "word": format_letters(alphabet, w.letters),
            "name": f"{kind}_{{{render_word(w)}}}",
            "poly": table.get(w.letters),
        }
        for w in targets
    ]
    if config.format == "json":
        return _dump(
            {
                "alphabet": alphabet,
                "kind": kind,
                "elements": [
                    {"word": e["word"], "terms": e["poly"].to_json()} for e in entries
                ],
            }
        )
    return _render("basis.txt.j2", entries=entries)


def _rule_texts(rs: RewriteSystem, k: int) -> list[str]:
    return [r.format("basis") for r in rs.rules_of_weight(k)]


def cmd_relations(config: RunConfig) -> str:
    rs_y, rs_x = load_systems(config, config.max_weight)
    by_side = {Y: rs_y, X: rs_x}
    sides = _sides(config)
    report = identify.dimension_report(config.max_weight, (rs_y, rs_x))

    def dims(side: str) -> dict[str, dict[str, int]]:
        return {
            str(row.weight): {
                "rules": row.rules_y if side == Y else row.rules_x,
                "irreducibles": row.irreducibles_y if side == Y else row.irreducibles_x,
                "lyndon": row.lyndon_y if side == Y else row.lyndon_x,
                "monomials": row.monomials,
            }
            for row in report
        }

    if config.format == "json":
        return _dump(
            {
                "reports": [
                    {
                        "side": side,
                        "weight": config.max_weight,
                        "rules": [
                            {
                                "lhs": r.lhs.name("basis"),
                                "rhs": r.rhs.format("basis"),
                                "lhs_symbol": r.lhs.to_json(),
                                "rhs_terms": r.rhs.to_json(),
                            }
                            for r in by_side[side].rules
                        ],
                        "irreducibles": [s.name("basis") for s in by_side[side].irreducibles],
                        "dims": dims(side),
                    }
                    for side in sides
                ]
            }
        )

    blocks = []
    width = 0
    for k in range(2, config.max_weight + 1):
        columns = [_rule_texts(by_side[side], k) for side in sides]
        height = max(len(c) for c in columns)
        padded = [c + [""] * (height - len(c)) for c in columns]
        rows = [(padded[0][i], padded[1][i] if len(padded) > 1 else "") for i in range(height)]
        width = max([width] + [len(left) for left, _ in rows])
        blocks.append({"weight": k, "rows": rows})
    side_rows = [
        {
            "key": side,
            "title": side,
            "irreducibles": [s.name("basis") for s in by_side[side].irreducibles],
        }
        for side in sides
    ]
    dim_rows = [
        {
            "weight": row.weight,
            "monomials": row.monomials,
            "conjectured": row.conjectured,
            Y: {"rules": row.rules_y, "irreducibles": row.irreducibles_y, "lyndon": row.lyndon_y},
            X: {"rules": row.rules_x, "irreducibles": row.irreducibles_x, "lyndon": row.lyndon_x},
        }
        for row in report
    ]
    return _render("relations.txt.j2", blocks=blocks, width=width, sides=side_rows, dims=dim_rows)


def _value_output(config: RunConfig, w: Word, value: CPoly, side: str) -> str:
    if config.format == "json":
        return _dump(
            {
                "input": format_letters(w.alphabet, w.letters),
                "alphabet": w.alphabet,
                "side": side,
                "value": value.format(),
                "terms": value.to_json(),
            }
        )
    return value.format() + "\n"


def _result_side(config: RunConfig, default: str) -> str:
    return default if config.side == "both" else config.side


def cmd_reduce(config: RunConfig) -> str:
    if not config.word:
        raise ValueError("reduce needs --word.")
    w = _parse_input_word(config)
    side = _result_side(config, w.alphabet)
    systems = load_systems(config, w.weight)
    value = identify.reduce_zeta(w, systems, side=side)
    return _value_output(config, w, value, side)


def cmd_gamma(config: RunConfig) -> str:
    if not config.word:
        raise ValueError("gamma needs --word.")
    w = _parse_input_word(config)
    side = _result_side(config, Y)
    systems = load_systems(config, w.weight)
    value = identify.gamma_constant(w, config.regularization, systems, side=side)
    return _value_output(config, w, value, side)


def _number(value: Any, digits: int) -> str:
    return mp.nstr(value, digits)


def cmd_verify(config: RunConfig) -> tuple[str, bool]:
    rs_y, rs_x = load_systems(config, config.max_weight)
    by_side = {Y: rs_y, X: rs_x}
    checks = []
    ok = True
    for side in _sides(config):
        for rule in by_side[side].rules:
            result = numcheck.verify_relation_numeric(
                rule, config.n, config.tol, config.refine, config.digits
            )
            ok = ok and result.passed
            checks.append(
                {
                    "relation": rule.format("basis"),
                    "status": "ok" if result.passed else "FAIL",
                    "residual": _number(result.residual, 6),
                    "error": _number(result.error, 3),
                    "passed": result.passed,
                }
            )
    bridge = []
    for p in range(2, config.max_weight + 1):
        residuals = identify.bridge_residuals(p, (rs_y, rs_x))
        ok = ok and not residuals
        bridge.append(f"weight {p}: {len(residuals)} nonzero")
    confluence = []
    for side in _sides(config):
        report = identify.check_confluence(by_side[side])
        ok = ok and report.clean
        confluence.append(
            f"{side}: {report.samples} samples, "
            + ("clean" if report.clean else "; ".join(report.violations))
        )
    summary = "all checks passed" if ok else "some checks FAILED"
    if config.format == "json":
        return (
            _dump(
                {
                    "n": config.n,
                    "tol": config.tol,
                    "checks": checks,
                    "bridge": bridge,
                    "confluence": confluence,
                    "passed": ok,
                }
            ),
            ok,
        )
    width = max([0] + [len(c["relation"]) for c in checks])
    text = _render(
        "verify.txt.j2",
        n=config.n,
        tol=config.tol,
        checks=checks,
        width=width,
        bridge=bridge,
        confluence=confluence,
        summary=summary,
    )
    return text, ok


def cmd_numcheck(config: RunConfig) -> str:
    if config.word:
        composition = numcheck.as_composition(config.word)
        estimate = numcheck.mzv_estimate(composition, config.n, config.refine, config.digits)
        label = f"zeta({composition})"
        value, error = estimate.value, estimate.error
    else:
        label = "gamma"
        value = numcheck.euler_gamma_estimate(config.n, config.digits)
        error = mp.mpf(1) / config.n**4
    if config.format == "json":
        return _dump(
            {
                "index": label,
                "n": config.n,
                "value": _number(value, config.digits),
                "error": _number(error, 3),
            }
        )
    return f"{label} = {_number(value, config.digits)} +- {_number(error, 3)}\n"


COMMAND_HANDLERS: dict[str, Callable[[RunConfig], Any]] = {
    "lyndon": cmd_lyndon,
    "basis": cmd_basis,
    "relations": cmd_relations,
    "reduce": cmd_reduce,
    "gamma": cmd_gamma,
    "verify": cmd_verify,
    "numcheck": cmd_numcheck,
}


def run(config: RunConfig) -> tuple[str, bool]:
    """Execute one command; returns its output and whether all checks held."""
    result = COMMAND_HANDLERS[config.command](config)
    if isinstance(result, tuple):
        return result
    return result, True


def _emit_error(kind: str, error: BaseException) -> None:
    sys.stderr.write(json.dumps({"error": {"kind": kind, "message": str(error)}}) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _configure_logging(args.verbose)
        config = build_config(vars(args), args.config)
        output, ok = run(config)
    except ValueError as e:
        _emit_error("usage", e)
        return EXIT_USAGE
    except RuntimeError as e:
        logger.debug("Internal error", exc_info=True)
        _emit_error("internal", e)
        return EXIT_INTERNAL
    sys.stdout.write(output)
    if not ok:
        _emit_error("internal", RuntimeError("verification failed"))
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
