"""
Per-trial seed derivation.

A trial's seed depends only on (master_seed, n, trial_index), so outcomes
do not change with worker count or scheduling order.
"""

from __future__ import annotations

import hashlib
import struct

_MASK64 = 2**64 - 1


def trial_seed(master_seed: int, n: int, trial_index: int) -> int:
    """Stable 64-bit seed from BLAKE2b over the little-endian packed triple."""
    payload = struct.pack("<QQQ", master_seed & _MASK64, n, trial_index)
    digest = hashlib.blake2b(payload, digest_size=8, person=b"lv-queens").digest()
    return int.from_bytes(digest, "little")
