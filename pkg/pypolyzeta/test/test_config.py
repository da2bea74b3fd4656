# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from pypolyzeta import config


class TestRunConfig(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def _write(self, text: str) -> str:
        path = self.tmp / "pypolyzeta.toml"
        path.write_text(text)
        return str(path)

    def test_defaults(self) -> None:
        c = config.build_config({})
        self.assertEqual((c.command, c.max_weight, c.side, c.format), ("relations", 4, "both", "text"))
        self.assertIsNone(c.alphabet)
        self.assertTrue(c.use_cache)

    def test_file_then_flags(self) -> None:
        path = self._write('[pypolyzeta]\nmax_weight = 5\nside = "y"\ntol = 1e-4\n')
        c = config.build_config({"command": "verify", "side": "x", "tol": None}, path)
        self.assertEqual(c.max_weight, 5)
        self.assertEqual(c.side, "x")
        self.assertEqual(c.tol, 1e-4)
        self.assertIsInstance(c.max_weight, int)

    def test_other_tables_ignored(self) -> None:
        path = self._write('[tool.other]\nmax_weight = "many"\n')
        self.assertEqual(config.load_config_file(path), {})

    def test_file_errors(self) -> None:
        with self.assertRaises(ValueError):
            config.load_config_file(self._write("[pypolyzeta]\nweight = 3\n"))
        with self.assertRaises(ValueError):
            config.load_config_file(self._write("[pypolyzeta\n"))
        with self.assertRaises(ValueError):
            config.load_config_file(self._write("pypolyzeta = 3\n"))
        with self.assertRaises(ValueError):
            config.load_config_file(str(self.tmp / "missing.toml"))

    def test_validation(self) -> None:
        bad = [
            {"command": "solve"},
            {"format": "yaml"},
            {"side": "z"},
            {"alphabet": "z"},
            {"command": "relations", "max_weight": 1},
            {"command": "lyndon", "max_weight": 0},
            {"n": 0},
            {"tol": 0.0},
            {"digits": 10},
        ]
        for overrides in bad:
            with self.assertRaises(ValueError, msg=str(overrides)):
                config.build_config(overrides)
        self.assertEqual(config.build_config({"command": "lyndon", "max_weight": 1}).max_weight, 1)

    def test_ignores_foreign_flags(self) -> None:
        c = config.build_config({"verbose": 2, "config": None, "word": "2,1"})
        self.assertEqual(c.word, "2,1")

    def test_cache_dir(self) -> None:
        with mock.patch.dict(os.environ, {config.CACHE_ENV_VAR: str(self.tmp)}):
            self.assertEqual(config.default_cache_dir(), self.tmp)
            self.assertEqual(config.RunConfig().resolved_cache_dir(), self.tmp)
        self.assertEqual(config.RunConfig(cache_dir="/data/c").resolved_cache_dir(), Path("/data/c"))
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(config.default_cache_dir().name, "pypolyzeta")


if __name__ == "__main__":
    unittest.main()
