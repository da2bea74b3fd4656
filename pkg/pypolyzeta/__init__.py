# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
pypolyzeta
==========

Exact computations with multiple zeta values: dual bases of the shuffle and
quasi-shuffle algebras, generating series of polyzetas, and the rewrite
systems among their local coordinates.
"""

__version__: str = "0.1.0"

from pypolyzeta import (  # noqa: E402
    bases,
    identify,
    ncpoly,
    numcheck,
    series,
    symbols,
    words,
)

# pyre-strict

__all__ = [
    "__version__",
    "bases",
    "identify",
    "ncpoly",
    "numcheck",
    "series",
    "symbols",
    "words",
]
