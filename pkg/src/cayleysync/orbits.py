"""Path representatives for orbits of k-subsets of Z_n under rotation.

Binary sequences are tuples of 0/1. Position ``j`` holding a 1 means the
element ``a^j`` belongs to the encoded subset. A sequence of weight ``k`` is
a *path* when its lattice walk (1 = up, 0 = right) never dips below the
straight line from (0, 0) to (n - k, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

BinarySeq = tuple[int, ...]


def parse_bits(text: str) -> BinarySeq:
    if set(text) - {"0", "1"}:
        raise ValueError(f"not a binary string: {text!r}")
    return tuple(int(c) for c in text)


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def is_path(bits: Sequence[int]) -> bool:
    n, k = len(bits), sum(bits)
    height = 0  # ups * (n - k) - rights * k
    for b in bits:
        height += (n - k) if b else -k
        if height < 0:
            return False
    return True


def rotate(bits: Sequence[int], start: int) -> BinarySeq:
    """The rotation that puts index ``start`` first."""
    start %= len(bits) or 1
    return tuple(bits[start:]) + tuple(bits[:start])


def canonical_path(bits: Sequence[int]) -> BinarySeq:
    """Rotate ``bits`` so that it starts just after its first lowest partial sum.

    Ties (possible only when gcd(n, k) > 1) go to the first minimum.
    Weight 0 and weight n are returned unchanged.
    """
    bits = tuple(bits)
    n, k = len(bits), sum(bits)
    if k == 0 or k == n:
        return bits
    height = 0
    lowest, at = None, 0
    for i, b in enumerate(bits):
        height += (n - k) if b else -k
        if lowest is None or height < lowest:
            lowest, at = height, i
    return rotate(bits, at + 1)


def least_rotation(bits: Sequence[int]) -> BinarySeq:
    bits = tuple(bits)
    return min((rotate(bits, i) for i in range(len(bits))), default=bits)


def orbit_size(bits: Sequence[int]) -> int:
    return len({rotate(bits, i) for i in range(len(bits))}) if bits else 1


@dataclass(frozen=True)
class PathRep:
    bits: BinarySeq

    @property
    def subset(self) -> tuple[int, ...]:
        """Exponents j with a^j in the encoded subset."""
        return tuple(j for j, b in enumerate(self.bits) if b)

    @property
    def mask(self) -> int:
        m = 0
        for j in self.subset:
            m |= 1 << j
        return m

    def __str__(self) -> str:
        return format_bits(self.bits)


def _paths(n: int, k: int) -> list[BinarySeq]:
    # Depth-first with 1 tried before 0, which yields descending binary order.
    out: list[BinarySeq] = []
    prefix: list[int] = []

    def extend(ups: int, rights: int, height: int) -> None:
        if ups == k and rights == n - k:
            out.append(tuple(prefix))
            return
        if ups < k:
            prefix.append(1)
            extend(ups + 1, rights, height + n - k)
            prefix.pop()
        if rights < n - k and height - k >= 0:
            prefix.append(0)
            extend(ups, rights + 1, height - k)
            prefix.pop()

    extend(0, 0, 0)
    return out


def enumerate_path_reps(n: int, k: int, dedup: bool = False) -> list[PathRep]:
    """All paths of length n and weight k.

    For gcd(n, k) = 1 each rotation orbit contains exactly one path. Otherwise
    an orbit may contain several; with ``dedup`` only the first path met per
    orbit is kept, orbits being identified by their least rotation.
    """
    if not 0 <= k <= n:
        raise ValueError(f"weight {k} outside 0..{n}")
    paths = _paths(n, k)
    if not dedup:
        return [PathRep(p) for p in paths]
    seen: set[BinarySeq] = set()
    reps = []
    for p in paths:
        key = least_rotation(p)
        if key not in seen:
            seen.add(key)
            reps.append(PathRep(p))
    return reps
