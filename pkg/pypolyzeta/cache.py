# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
On-disk cache of computed bases and rewrite systems.

One JSON-lines file per (kind, alphabet, weight). Each line carries the schema
version and a SHA-256 checksum of its payload; a file that fails either check
is discarded and recomputed.
"""

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Any, Optional

# pyre-strict

logger: logging.Logger = logging.getLogger(__name__)

SCHEMA_VERSION: int = 1


def _digest(payload: Any) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ResultCache:
    """
    Cache rooted at a directory; ``enabled=False`` turns every call into a miss.
    """

    def __init__(self, root: Path, enabled: bool = True) -> None:
        self.root: Path = Path(root)
        self.enabled: bool = enabled

    def path(self, kind: str, alphabet: str, weight: int) -> Path:
        return self.root / f"v{SCHEMA_VERSION}" / f"{kind}-{alphabet}-w{weight}.jsonl"

    def load(self, kind: str, alphabet: str, weight: int) -> Optional[list[Any]]:
        """Payloads stored for the key, or None on a miss or a damaged file."""
        if not self.enabled:
            return None
        path = self.path(kind, alphabet, weight)
        if not path.exists():
            return None
        payloads = []
        try:
            with open(path, "r", encoding="utf-8") as file:
                for number, line in enumerate(file, 1):
                    record = json.loads(line)
                    if not isinstance(record, dict):
                        raise ValueError(f"line {number} is not a JSON object")
                    if (
                        record.get("schema") != SCHEMA_VERSION
                        or record.get("kind") != kind
                        or record.get("alphabet") != alphabet
                        or record.get("weight") != weight
                    ):
                        raise ValueError(f"line {number} has a foreign key or schema")
                    if _digest(record.get("payload")) != record.get("sha256"):
                        raise ValueError(f"line {number} fails its checksum")
                    payloads.append(record["payload"])
        except (OSError, ValueError) as e:
            logger.warning("Discarding cache file %s: %s", path, e)
            path.unlink(missing_ok=True)
            return None
        logger.debug("Cache hit %s", path)
        return payloads

    def store(self, kind: str, alphabet: str, weight: int, payloads: list[Any]) -> None:
        if not self.enabled:
            return
        path = self.path(kind, alphabet, weight)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as file:
            for payload in payloads:
                record = {
                    "schema": SCHEMA_VERSION,
                    "kind": kind,
                    "alphabet": alphabet,
                    "weight": weight,
                    "payload": payload,
                    "sha256": _digest(payload),
                }
                file.write(json.dumps(record, sort_keys=True) + "\n")
        os.replace(tmp, path)
        logger.debug("Cache store %s", path)
