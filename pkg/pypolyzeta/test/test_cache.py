# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import json
import tempfile
import unittest
from pathlib import Path

from pypolyzeta.cache import ResultCache, SCHEMA_VERSION
from pypolyzeta.identify import local_coordinate_identification
from pypolyzeta.symbols import RewriteSystem


class TestResultCache(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.cache = ResultCache(Path(self._tmp.name))

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def test_store_load(self) -> None:
        payloads = [{"word": "01", "poly": [{"word": "01", "coeff": "1"}]}, {"word": "001"}]
        self.cache.store("basis-S", "x", 3, payloads)
        self.assertEqual(self.cache.load("basis-S", "x", 3), payloads)
        self.assertIsNone(self.cache.load("basis-S", "x", 4))
        self.assertIsNone(self.cache.load("basis-P", "x", 3))
        path = self.cache.path("basis-S", "x", 3)
        self.assertEqual(path.parent.name, f"v{SCHEMA_VERSION}")
        self.assertFalse(path.with_suffix(".tmp").exists())

    def test_rewrite_system_round_trip(self) -> None:
        rs_y, _ = local_coordinate_identification(4)
        self.cache.store("rewrite", "y", 4, [rs_y.to_json()])
        (stored,) = self.cache.load("rewrite", "y", 4)
        loaded = RewriteSystem.from_json(stored)
        self.assertEqual(loaded.rule_map, rs_y.rule_map)
        self.assertEqual(loaded.irreducibles, rs_y.irreducibles)
        self.assertEqual(loaded.foreign, rs_y.foreign)

    def test_corrupt_file_discarded(self) -> None:
        self.cache.store("rewrite", "x", 3, [{"rules": []}])
        path = self.cache.path("rewrite", "x", 3)
        record = json.loads(path.read_text())
        record["payload"] = {"rules": [1]}
        path.write_text(json.dumps(record) + "\n")
        with self.assertLogs("pypolyzeta.cache", level="WARNING"):
            self.assertIsNone(self.cache.load("rewrite", "x", 3))
        self.assertFalse(path.exists())

    def test_garbage_discarded(self) -> None:
        self.cache.store("rewrite", "x", 3, [{}])
        path = self.cache.path("rewrite", "x", 3)
        path.write_text("not json\n")
        with self.assertLogs("pypolyzeta.cache", level="WARNING"):
            self.assertIsNone(self.cache.load("rewrite", "x", 3))

    def test_non_object_lines_discarded(self) -> None:
        path = self.cache.path("rules", "Y", 3)
        for text in ("[]\n", "1\n", '"x"\n', "null\n"):
            self.cache.store("rules", "Y", 3, [{"rules": []}])
            path.write_text(text)
            with self.assertLogs("pypolyzeta.cache", level="WARNING"):
                self.assertIsNone(self.cache.load("rules", "Y", 3), text)
            self.assertFalse(path.exists())
        self.cache.store("rules", "Y", 3, [{"rules": []}])
        self.assertEqual(self.cache.load("rules", "Y", 3), [{"rules": []}])

    def test_foreign_schema_discarded(self) -> None:
        self.cache.store("rewrite", "x", 3, [{}])
        path = self.cache.path("rewrite", "x", 3)
        record = json.loads(path.read_text())
        record["schema"] = SCHEMA_VERSION + 1
        path.write_text(json.dumps(record) + "\n")
        with self.assertLogs("pypolyzeta.cache", level="WARNING"):
            self.assertIsNone(self.cache.load("rewrite", "x", 3))

    def test_disabled(self) -> None:
        cache = ResultCache(self.cache.root, enabled=False)
        cache.store("rewrite", "y", 2, [{}])
        self.assertFalse(cache.path("rewrite", "y", 2).exists())
        self.cache.store("rewrite", "y", 2, [{}])
        self.assertIsNone(cache.load("rewrite", "y", 2))


if __name__ == "__main__":
    unittest.main()
