"""Partitions viewed as Jordan types of unipotent orbits, with their parity and
multiplicity predicates."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

SYMPLECTIC = "symplectic"
ORTHOGONAL = "orthogonal"
DISCRETE = "discrete"
ELLIPTIC = "elliptic"


@dataclass(frozen=True, order=True)
class Orbit:
    """Jordan blocks stored in non-increasing order (repeats allowed)."""

    blocks: tuple[int, ...] = ()

    def __post_init__(self):
        b = tuple(sorted((int(x) for x in self.blocks), reverse=True))
        if any(x <= 0 for x in b):
            raise ValueError(f"block sizes must be positive: {self.blocks}")
        object.__setattr__(self, "blocks", b)

    @property
    def total(self) -> int:
        return sum(self.blocks)

    def mult(self, alpha: int) -> int:
        return self.blocks.count(alpha)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.blocks).items(), reverse=True))

    def distinct(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.blocks), reverse=True))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"Orbit{self.blocks}"


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of m in lexicographically descending order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _constrained(m: int, parity: int, max_mult: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    top = min(m, max_part)
    if top % 2 != parity:
        top -= 1
    for part in range(top, 0, -2):
        for k in range(max_mult, 0, -1):
            if k * part > m:
                continue
            for rest in _constrained(m - k * part, parity, max_mult, part - 2):
                out.append((part,) * k + rest)
    return tuple(out)


def enumerate_orbits(m: int, kind: str, mode: str) -> list[Orbit]:
    """Orbits of total m with even (symplectic) or odd (orthogonal) blocks, each
    size occurring once (discrete) or at most twice (elliptic)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    parity = {SYMPLECTIC: 0, ORTHOGONAL: 1}[kind]
    max_mult = {DISCRETE: 1, ELLIPTIC: 2}[mode]
    found = _constrained(m, parity, max_mult, m)
    return [Orbit(b) for b in sorted(found, reverse=True)]


def classify_orbit(o: Orbit | Iterable[int]) -> dict[str, bool]:
    if not isinstance(o, Orbit):
        o = Orbit(tuple(o))
    mults = o.multiplicities().values()
    return {
        SYMPLECTIC: all(a % 2 == 0 for a in o.blocks),
        ORTHOGONAL: all(a % 2 == 1 for a in o.blocks),
        DISCRETE: all(k == 1 for k in mults),
        ELLIPTIC: all(k <= 2 for k in mults),
    }
