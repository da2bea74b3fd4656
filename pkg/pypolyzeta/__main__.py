# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import sys

from pypolyzeta.cli import main

# pyre-strict

if __name__ == "__main__":
    sys.exit(main())
