#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Derive the rewrite systems to a high weight and write a JSON report.

Weights beyond 8 take minutes to hours; the systems land in the usual cache so
later CLI runs at the same weight are instant.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from pypolyzeta import identify
from pypolyzeta.cache import ResultCache
from pypolyzeta.config import default_cache_dir


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--max-weight", type=int, default=12)
    parser.add_argument("--output", default="long_run.json", help="JSON report path.")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument(
        "--check-bridge", action="store_true", help="Also recompute the bridge residuals."
    )
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s: %(message)s")

    steps = identify.weight_steps(args.max_weight)
    rs_y, rs_x = identify.systems_from_steps(steps, args.max_weight)
    cache = ResultCache(Path(args.cache_dir) if args.cache_dir else default_cache_dir())
    cache.store("rewrite", "y", args.max_weight, [rs_y.to_json()])
    cache.store("rewrite", "x", args.max_weight, [rs_x.to_json()])

    rows = identify.dimension_report(args.max_weight, (rs_y, rs_x))
    report = {
        "max_weight": args.max_weight,
        "steps": [
            {
                "weight": step.weight,
                "equations": step.equations,
                "rules": len(step.rules_y),
                "irreducibles": len(step.irreducibles_y),
                "seconds": round(step.seconds, 3),
            }
            for step in steps
        ],
        "irreducibles": {
            "y": [s.name("basis") for s in rs_y.irreducibles],
            "x": [s.name("basis") for s in rs_x.irreducibles],
        },
        "dimensions": [row._asdict() | {"direct_sum_ok": row.direct_sum_ok} for row in rows],
        "systems": {"y": rs_y.to_json(), "x": rs_x.to_json()},
    }
    if args.check_bridge:
        report["bridge_residuals"] = {
            str(p): len(identify.bridge_residuals(p, (rs_y, rs_x)))
            for p in range(2, args.max_weight + 1)
        }
    Path(args.output).write_text(json.dumps(report, indent=2) + "\n")

    print(f"{'weight':>6}{'equations':>11}{'rules':>7}{'irr':>5}{'seconds':>10}")
    for step in report["steps"]:
        print(
            f"{step['weight']:>6}{step['equations']:>11}{step['rules']:>7}"
            f"{step['irreducibles']:>5}{step['seconds']:>10.2f}"
        )
    print("irreducibles:", ", ".join(report["irreducibles"]["y"]))

    failed = [row.weight for row in rows if not row.direct_sum_ok]
    failed += [int(p) for p, n in report.get("bridge_residuals", {}).items() if n]
    if failed:
        print(f"checks failed at weights {sorted(set(failed))}", file=sys.stderr)
        sys.exit(3)


if __name__ == "__main__":
    main()
