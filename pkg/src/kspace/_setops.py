"""Tiny bitmask-family helpers shared across modules."""

from __future__ import annotations


def minimal_masks(masks) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks, deduplicated."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for m in uniq:
        if not any(kept & ~m == 0 for kept in out):
            out.append(m)
    return out


def is_antichain(masks) -> bool:
    ms = list(masks)
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & ~b == 0 or b & ~a == 0:
                return False
    return True
