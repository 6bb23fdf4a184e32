"""Graded class-function elements: one pair of factors per eigenvalue slot.

A slot carries a kind (S or W) and a total rank t; its graded pieces are the
splits (a, b) with a + b = t, realized as the two factors (kind, a), (kind, b).
An Element maps a tuple of splits (one per slot) to a class function on the
concatenated shape.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ShapeError
from .scalars import as_scalar
from .weylrep import ID, ClassFunction, ClassMap, GroupShape, induce_along, restrict_along


@dataclass(frozen=True)
class Slot:
    key: object
    kind: str
    total: int

    def splits(self) -> list[tuple[int, int]]:
        return [(a, self.total - a) for a in range(self.total, -1, -1)]


def grading_shape(slots: Sequence[Slot], grading: Sequence[tuple[int, int]]) -> GroupShape:
    fac = []
    for s, (a, b) in zip(slots, grading):
        if a + b != s.total or a < 0 or b < 0:
            raise ShapeError(f"split {(a, b)} does not fit slot {s}")
        fac += [(s.kind, a), (s.kind, b)]
    return GroupShape(tuple(fac))


def all_gradings(slots: Sequence[Slot]) -> list[tuple]:
    return [tuple(g) for g in itertools.product(*(s.splits() for s in slots))]


class Element:
    """Finite sum of class functions indexed by gradings of a fixed slot list."""

    __slots__ = ("slots", "comps")

    def __init__(self, slots: Sequence[Slot], comps: Mapping | None = None):
        self.slots = tuple(slots)
        out = {}
        for g, f in (comps or {}).items():
            g = tuple(tuple(x) for x in g)
            if f.shape != grading_shape(self.slots, g):
                raise ShapeError(f"component {g} has shape {f.shape}")
            if not f.is_zero():
                out[g] = out[g] + f if g in out else f
        self.comps = {g: f for g, f in out.items() if not f.is_zero()}

    @classmethod
    def single(cls, slots, grading, f: ClassFunction) -> "Element":
        return cls(slots, {tuple(grading): f})

    def __add__(self, other: "Element") -> "Element":
        if isinstance(other, int) and other == 0:
            return self
        if self.slots != other.slots:
            raise ShapeError("slot lists differ")
        comps = dict(self.comps)
        for g, f in other.comps.items():
            comps[g] = comps[g] + f if g in comps else f
        return Element(self.slots, comps)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.slots, {g: -f for g, f in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_scalar(c)
        return Element(self.slots, {g: f * c for g, f in self.comps.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.slots == other.slots and self.comps == other.comps

    def is_zero(self) -> bool:
        return not self.comps

    def map_components(self, fn: Callable) -> "Element":
        """Apply fn(grading, f) -> Element to each component and sum."""
        total = None
        for g in sorted(self.comps, key=_grading_sort_key):
            piece = fn(g, self.comps[g])
            total = piece if total is None else total + piece
        return total

    def __repr__(self):
        return f"Element({[s.key for s in self.slots]}, {self.comps})"

    def to_json(self):
        return {
            "slots": [[str(s.key), s.kind, s.total] for s in self.slots],
            "components": [
                {"grading": [list(x) for x in g], "function": self.comps[g].to_json()}
                for g in sorted(self.comps, key=_grading_sort_key)
            ],
        }


def _grading_sort_key(g):
    return tuple(-a for a, _ in g)


def quads(top: tuple[int, int], bottom: tuple[int, int]) -> list[tuple[int, int, int, int]]:
    """(x11, x12, x21, x22) with row sums `top` and column sums `bottom`."""
    (a, b), (c, d) = top, bottom
    out = []
    for x11 in range(min(a, c), -1, -1):
        x12, x21 = a - x11, c - x11
        x22 = b - x21
        if x12 >= 0 and x21 >= 0 and x22 >= 0 and x12 + x22 == d:
            out.append((x11, x12, x21, x22))
    return out


def slot_quad_operator(f: ClassFunction, pos: int, quad: tuple[int, int, int, int],
                       twists: Sequence[Callable | None]) -> ClassFunction:
    """Restrict factors pos, pos+1 of f to the four-factor quad shape, multiply
    by per-factor label functions `twists`, exchange the middle factors, and
    induce to the two factors (x11 + x21, x12 + x22)."""
    shape = f.shape
    kind = shape.factors[pos][0]
    x11, x12, x21, x22 = quad
    if shape.factors[pos][1] != x11 + x12 or shape.factors[pos + 1][1] != x21 + x22:
        raise ShapeError("quad does not match the slot split")
    before, after = shape.factors[:pos], shape.factors[pos + 2:]
    qshape = GroupShape(before + ((kind, x11), (kind, x12), (kind, x21), (kind, x22)) + after)
    n0 = len(before)
    res_routes = tuple(((i, ID),) for i in range(n0))
    res_routes += (((n0, ID), (n0 + 1, ID)), ((n0 + 2, ID), (n0 + 3, ID)))
    res_routes += tuple(((n0 + 4 + i, ID),) for i in range(len(after)))
    g = restrict_along(ClassMap(qshape, shape, res_routes), f)
    if any(t is not None for t in twists):
        def tw(label):
            v = 1
            for j, t in enumerate(twists):
                if t is not None:
                    v = v * t(label[n0 + j])
            return v
        g = g.map_values(tw)
    tshape = GroupShape(before + ((kind, x11 + x21), (kind, x12 + x22)) + after)
    ind_routes = tuple(((i, ID),) for i in range(n0))
    # the exchange of the middle factors: target ' gathers (x11, x21), target '' gathers (x12, x22)
    ind_routes += (((n0, ID), (n0 + 2, ID)), ((n0 + 1, ID), (n0 + 3, ID)))
    ind_routes += tuple(((n0 + 4 + i, ID),) for i in range(len(after)))
    return induce_along(ClassMap(qshape, tshape, ind_routes), g)


SWAP_WITNESS = (0, 2, 1, 3)


def apply_slotwise(x: Element, pos_slot: int, op: Callable) -> Element:
    """Apply a per-slot operator op(f, factor_pos, split) -> {new split: f'}."""
    def per_comp(g, f):
        out = {}
        for new_split, h in op(f, 2 * pos_slot, g[pos_slot]).items():
            ng = g[:pos_slot] + (tuple(new_split),) + g[pos_slot + 1:]
            out[ng] = out[ng] + h if ng in out else h
        return Element(x.slots, out)
    res = x.map_components(per_comp)
    return res if res is not None else Element(x.slots)


def tensor_elements(parts: Iterable[Element]) -> Element:
    parts = list(parts)
    slots = tuple(s for p in parts for s in p.slots)
    comps = {(): ClassFunction.constant(GroupShape(()), 1)}
    for p in parts:
        new = {}
        for g, f in comps.items():
            for h, k in p.comps.items():
                new[g + h] = f.tensor(k)
        comps = new
    return Element(slots, comps)
