"""Bounds and deterministic sampling of law instances."""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass

DEFAULT_HOM_CAP = 512
DEFAULT_INSTANCE_CAP = 512
DEFAULT_MAX_ENUM = 200_000


def max_enum() -> int:
    """Global enumeration cap, overridable with ``RELMON_MAX_ENUM``."""
    raw = os.environ.get("RELMON_MAX_ENUM")
    if raw is None:
        return DEFAULT_MAX_ENUM
    return int(raw)


@dataclass(frozen=True)
class Bounds:
    kappa: int = 3
    max_word: int = 3
    max_dim: int = 3
    hom_cap: int = DEFAULT_HOM_CAP
    instance_cap: int = DEFAULT_INSTANCE_CAP

    def as_dict(self):
        return {"kappa": self.kappa, "max_word": self.max_word,
                "max_dim": self.max_dim, "hom_cap": self.hom_cap,
                "instance_cap": self.instance_cap}


def _decode(index, sizes):
    out = []
    for size in reversed(sizes):
        index, r = divmod(index, size)
        out.append(r)
    return tuple(reversed(out))


def sample_indices(total: int, cap: int, seed: str) -> list[int]:
    """Sorted sample of ``cap`` indices out of ``range(total)``.

    Seeded by a string, so the sample is stable across runs and platforms.
    """
    if total <= cap:
        return list(range(total))
    rng = random.Random(seed)
    return sorted(rng.sample(range(total), cap))


def product_sample(seqs, cap: int | None, seed: str = ""):
    """Instances of ``itertools.product(*seqs)``, sampled down to ``cap``.

    Returns ``(instances, total)``; instances keep product order.
    """
    seqs = [list(s) for s in seqs]
    sizes = [len(s) for s in seqs]
    total = math.prod(sizes)
    if total == 0:
        return [], 0
    if cap is None or total <= cap:
        idx = range(total)
    else:
        idx = sample_indices(total, cap, seed)
    out = []
    for i in idx:
        pos = _decode(i, sizes)
        out.append(tuple(s[p] for s, p in zip(seqs, pos)))
    return out, total
