"""
Stable seed derivation.

A run's seed is the first 8 bytes (big-endian) of
sha256("<base_seed>|<instance>|<algorithm>|<index>"). It depends on nothing
else, so any single run of a campaign can be reproduced on its own.
"""

from __future__ import annotations

import hashlib


def derive_seed(base_seed: int, instance: str, algorithm: str, index: int) -> int:
    text = f"{base_seed}|{instance}|{algorithm}|{index}"
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
