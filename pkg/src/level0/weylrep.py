"""Class functions on products of symmetric groups S_m and hyperoctahedral
groups W_N, with exact values.

Conjugacy classes are labelled by a partition (S factor) or a pair of
partitions (W factor: cycle lengths of positive cycles, then of negative
cycles).  Irreducibles carry the same kind of labels; for W_N the pair (lam, mu)
is normalized so that ((1), ()) is the trivial character of W_1.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

from .errors import NonIntegral, ShapeError, SizeMismatch
from .orbits import partitions
from .scalars import ONE, ZERO, CycloScalar, as_scalar

SYM = "S"
WEYL = "W"

Partition = tuple
Label = tuple  # one entry per factor


# ---------------------------------------------------------------------------
# shapes and classes


@dataclass(frozen=True)
class GroupShape:
    factors: tuple  # of (kind, rank)

    def __post_init__(self):
        fs = tuple((k, int(r)) for k, r in self.factors)
        for k, r in fs:
            if k not in (SYM, WEYL) or r < 0:
                raise ShapeError(f"bad factor {(k, r)}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def of(cls, *factors) -> "GroupShape":
        return cls(tuple(factors))

    def __len__(self):
        return len(self.factors)

    def __add__(self, other: "GroupShape") -> "GroupShape":
        return GroupShape(self.factors + other.factors)

    def classes(self) -> list[Label]:
        return _shape_classes(self.factors)

    def order(self) -> int:
        return prod(_group_order(k, r) for k, r in self.factors)

    def centralizer(self, label: Label) -> int:
        return prod(_centralizer(k, x) for (k, _), x in zip(self.factors, label))

    def permuted(self, perm: Sequence[int]) -> "GroupShape":
        return GroupShape(tuple(self.factors[i] for i in perm))

    def __repr__(self):
        return "x".join(f"{k}{r}" for k, r in self.factors) or "1"


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    out = []
    for a in range(n, -1, -1):
        for p in partitions(a):
            for q in partitions(n - a):
                out.append((p, q))
    return out


@lru_cache(maxsize=None)
def factor_classes(kind: str, n: int) -> tuple:
    return tuple(partitions(n)) if kind == SYM else tuple(bipartitions(n))


@lru_cache(maxsize=None)
def _shape_classes(factors: tuple) -> list:
    return [tuple(x) for x in itertools.product(*(factor_classes(k, r) for k, r in factors))]


def _group_order(kind: str, n: int) -> int:
    return factorial(n) * (2 ** n if kind == WEYL else 1)


def _z_sym(p: Partition, scale: int = 1) -> int:
    return prod((scale * i) ** a * factorial(a) for i, a in Counter(p).items())


@lru_cache(maxsize=None)
def _centralizer(kind: str, label) -> int:
    if kind == SYM:
        return _z_sym(label)
    pos, neg = label
    return _z_sym(pos, 2) * _z_sym(neg, 2)


def _label_size(kind: str, label) -> int:
    return sum(label) if kind == SYM else sum(label[0]) + sum(label[1])


# ---------------------------------------------------------------------------
# class functions


class ClassFunction:
    """Sparse exact-valued function on the classes of a GroupShape."""

    __slots__ = ("shape", "values")

    def __init__(self, shape: GroupShape, values: Mapping | None = None):
        self.shape = shape
        vals = {}
        for k, v in (values or {}).items():
            v = as_scalar(v)
            if not v.is_zero():
                vals[tuple(k)] = v
        self.values = vals

    # access -----------------------------------------------------------
    def __call__(self, label) -> CycloScalar:
        return self.values.get(tuple(label), ZERO)

    def items(self):
        """All (label, value) pairs in canonical class order, zeros included."""
        return [(c, self(c)) for c in self.shape.classes()]

    def support(self):
        return [c for c in self.shape.classes() if c in self.values]

    def is_zero(self) -> bool:
        return not self.values

    @classmethod
    def constant(cls, shape: GroupShape, value=1) -> "ClassFunction":
        return cls(shape, {c: value for c in shape.classes()})

    @classmethod
    def from_callable(cls, shape: GroupShape, fn: Callable) -> "ClassFunction":
        return cls(shape, {c: fn(c) for c in shape.classes()})

    @classmethod
    def indicator(cls, shape: GroupShape, label) -> "ClassFunction":
        return cls(shape, {tuple(label): 1})

    # algebra ----------------------------------------------------------
    def _check(self, other: "ClassFunction"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, ZERO) + v
        return ClassFunction(self.shape, vals)

    __radd__ = __add__

    def __neg__(self):
        return ClassFunction(self.shape, {k: -v for k, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.shape, {k: v * other(k) for k, v in self.values.items()})
        s = as_scalar(other)
        return ClassFunction(self.shape, {k: v * s for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.shape == other.shape and self.values == other.values

    def __hash__(self):
        return hash((self.shape, frozenset(self.values.items())))

    def map_values(self, fn: Callable) -> "ClassFunction":
        """Pointwise product with a function of the class label."""
        return ClassFunction(self.shape, {k: v * as_scalar(fn(k)) for k, v in self.values.items()})

    def tensor(self, other: "ClassFunction") -> "ClassFunction":
        vals = {a + b: x * y for a, x in self.values.items() for b, y in other.values.items()}
        return ClassFunction(self.shape + other.shape, vals)

    def permute(self, perm: Sequence[int]) -> "ClassFunction":
        """Reorder factors: new factor i is old factor perm[i]."""
        return ClassFunction(self.shape.permuted(perm),
                             {tuple(k[i] for i in perm): v for k, v in self.values.items()})

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.shape, {k: v.conjugate() for k, v in self.values.items()})

    def degree(self) -> CycloScalar:
        return self(identity_label(self.shape))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.values.items())
        return f"ClassFunction({self.shape}; {body})"

    def to_json(self):
        return {
            "shape": [[k, r] for k, r in self.shape.factors],
            "values": [[_label_json(k), v.to_json()] for k, v in
                       ((c, self.values[c]) for c in self.support())],
        }


def _label_json(label):
    return [list(x) if isinstance(x[0] if x else 0, int) or not x else [list(x[0]), list(x[1])] for x in label]


def identity_label(shape: GroupShape) -> Label:
    return tuple((1,) * r if k == SYM else ((1,) * r, ()) for k, r in shape.factors)


def inner_product(f: ClassFunction, g: ClassFunction) -> CycloScalar:
    f._check(g)
    total = ZERO
    for k, v in f.values.items():
        w = g(k)
        if not w.is_zero():
            total = total + v * w.conjugate() * Fraction(1, f.shape.centralizer(k))
    return total


# ---------------------------------------------------------------------------
# irreducible characters


def _beta(lam: Partition, length: int) -> tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    L = len(b)
    return tuple(x for x in (b[i] - (L - 1 - i) for i in range(L)) if x)


@lru_cache(maxsize=None)
def rim_hooks(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """(lam minus a rim hook of length r, leg-length parity sign) for all hooks."""
    L = len(lam) + r
    beta = _beta(lam, L)
    bs = set(beta)
    out = []
    for b in beta:
        if b - r >= 0 and (b - r) not in bs:
            between = sum(1 for x in beta if b - r < x < b)
            nb = [x for x in beta if x != b] + [b - r]
            out.append((_from_beta(nb), (-1) ** between))
    return tuple(out)


@lru_cache(maxsize=None)
def sym_char(lam: Partition, cyc: Partition) -> int:
    """Murnaghan-Nakayama value of the S_n irreducible lam on cycle type cyc."""
    if not cyc:
        return 1 if not lam else 0
    r, rest = cyc[0], cyc[1:]
    return sum(s * sym_char(nu, rest) for nu, s in rim_hooks(tuple(lam), r))


@lru_cache(maxsize=None)
def weyl_char(bip: tuple, cls: tuple) -> int:
    """Signed Murnaghan-Nakayama value of the W_n irreducible (lam, mu) on the
    class (positive cycles, negative cycles)."""
    lam, mu = bip
    pos, neg = cls
    if not pos and not neg:
        return 1 if not lam and not mu else 0
    if pos:
        r, s, pos, neg = pos[0], 1, pos[1:], neg
    else:
        r, s, pos, neg = neg[0], -1, pos, neg[1:]
    total = 0
    for nl, sg in rim_hooks(tuple(lam), r):
        total += sg * weyl_char((nl, mu), (pos, neg))
    for nm, sg in rim_hooks(tuple(mu), r):
        total += s * sg * weyl_char((lam, nm), (pos, neg))
    return total


def irr_labels(kind: str, n: int) -> tuple:
    return factor_classes(kind, n)


def irr_character(shape: GroupShape | tuple, label) -> ClassFunction:
    """Irreducible character of a single-factor shape (kind, rank)."""
    if isinstance(shape, GroupShape):
        if len(shape) != 1:
            raise ShapeError("irr_character expects a single factor")
        kind, n = shape.factors[0]
    else:
        kind, n = shape
        shape = GroupShape(((kind, n),))
    if _label_size(kind, label) != n:
        raise SizeMismatch(f"label {label} does not have size {n}")
    if kind == SYM:
        label = tuple(sorted(label, reverse=True))
        fn = lambda c: sym_char(label, c[0])
    else:
        label = (tuple(sorted(label[0], reverse=True)), tuple(sorted(label[1], reverse=True)))
        fn = lambda c: weyl_char(label, c[0])
    return ClassFunction.from_callable(shape, fn)


def product_character(shape: GroupShape, labels: Sequence) -> ClassFunction:
    out = ClassFunction.constant(GroupShape(()), 1)
    for fac, lab in zip(shape.factors, labels):
        out = out.tensor(irr_character(fac, lab))
    return out


def character_table(kind: str, n: int) -> dict:
    """{irreducible label: {class label: int}} in canonical order."""
    if kind == SYM:
        return {lam: {c: sym_char(lam, c) for c in factor_classes(SYM, n)} for lam in factor_classes(SYM, n)}
    return {b: {c: weyl_char(b, c) for c in factor_classes(WEYL, n)} for b in factor_classes(WEYL, n)}


def decompose(f: ClassFunction) -> dict:
    """Multiplicities of the irreducibles (tuples of per-factor labels)."""
    out = {}
    per_factor = [irr_labels(k, r) for k, r in f.shape.factors]
    for labels in itertools.product(*per_factor):
        if f.is_zero():
            break
        c = inner_product(f, product_character(f.shape, labels))
        if c.is_zero():
            continue
        if not c.is_rational() or c.to_fraction().denominator != 1:
            raise NonIntegral(f"multiplicity of {labels} is {c}")
        out[tuple(labels)] = int(c.to_fraction())
    return out


# ---------------------------------------------------------------------------
# linear characters


def n_negative(cls) -> int:
    return len(cls[1])


def _linear_value(name: str, kind: str, cls) -> int:
    if kind == SYM:
        if name == "sgn":
            return (-1) ** (sum(cls) - len(cls))
        raise ShapeError(f"{name} is defined on hyperoctahedral factors only")
    pos, neg = cls
    if name == "sgn_CD":
        return (-1) ** len(neg)
    if name == "sgn":
        return (-1) ** (sum(a - 1 for a in pos) + sum(neg))
    if name == "eta_comb":
        return (-1) ** (sum(a - 1 for a in pos) + sum(a - 1 for a in neg))
    raise ValueError(f"unknown linear character {name}")


def linear_character(shape: GroupShape, name: str, factors: Iterable[int] | None = None) -> ClassFunction:
    idx = range(len(shape)) if factors is None else list(factors)
    if name == "sgn_CD" and factors is None:
        idx = [i for i, (k, _) in enumerate(shape.factors) if k == WEYL]
        if not idx and len(shape):
            raise ShapeError("sgn_CD needs a hyperoctahedral factor")
    return ClassFunction.from_callable(
        shape, lambda c: prod((_linear_value(name, shape.factors[i][0], c[i]) for i in idx), start=1))


def linear_twist(f: ClassFunction, name: str, factors: Iterable[int] | None = None) -> ClassFunction:
    """Pointwise product with the named linear character on the chosen factors
    (all hyperoctahedral factors for sgn_CD by default)."""
    if factors is not None:
        factors = list(factors)
        for i in factors:
            if name == "sgn_CD" and f.shape.factors[i][0] != WEYL:
                raise ShapeError("sgn_CD applies to hyperoctahedral factors only")
    return f * linear_character(f.shape, name, factors)


# ---------------------------------------------------------------------------
# class maps


# transforms applied to one source factor on its way into a target factor
ID = ("id", 1)


def scale(k: int):
    return ("scale", k)


def positive(k: int = 1):
    """S -> W, every cycle of length a becomes a positive cycle of length ka."""
    return ("pos", k)


def twisted(k: int = 1):
    """S -> W, a cycle of length a becomes a cycle of length ka, negative iff a is odd."""
    return ("twisted", k)


def _apply(transform, src_kind: str, label):
    """Cycles contributed by one source label: (positive list, negative list) or S list."""
    name, k = transform
    if src_kind == SYM:
        if name in ("id", "scale"):
            return [a * k for a in label], None
        if name == "pos":
            return [a * k for a in label], []
        if name == "twisted":
            return [a * k for a in label if a % 2 == 0], [a * k for a in label if a % 2]
    else:
        if name in ("id", "scale"):
            return [a * k for a in label[0]], [a * k for a in label[1]]
    raise ShapeError(f"transform {transform} not defined on a {src_kind} factor")


@dataclass(frozen=True)
class ClassMap:
    """Cycle-wise map from classes of `source` to classes of `target`.

    routes[j] lists (source factor index, transform) feeding target factor j;
    every source factor appears in exactly one route.
    """

    source: GroupShape
    target: GroupShape
    routes: tuple

    def __post_init__(self):
        routes = tuple(tuple((int(i), tuple(t)) for i, t in r) for r in self.routes)
        object.__setattr__(self, "routes", routes)
        if len(routes) != len(self.target):
            raise ShapeError("one route per target factor is required")
        used = sorted(i for r in routes for i, _ in r)
        if used != list(range(len(self.source))):
            raise ShapeError("every source factor must feed exactly one target factor")
        for (tk, tr), r in zip(self.target.factors, routes):
            size = 0
            for i, (name, k) in r:
                sk, sr = self.source.factors[i]
                if tk == SYM and (sk != SYM or name not in ("id", "scale")):
                    raise ShapeError("only symmetric factors can feed a symmetric factor")
                size += sr * k
            if size != tr:
                raise ShapeError(f"route {r} does not fill rank {tr} of {self.target}")

    def image(self, label: Label) -> Label:
        out = []
        for (tk, _), r in zip(self.target.factors, self.routes):
            pos, neg = [], []
            for i, t in r:
                p, n = _apply(t, self.source.factors[i][0], label[i])
                pos += p
                if n:
                    neg += n
            pos.sort(reverse=True)
            if tk == SYM:
                out.append(tuple(pos))
            else:
                neg.sort(reverse=True)
                out.append((tuple(pos), tuple(neg)))
        return tuple(out)

    @classmethod
    def identity(cls, shape: GroupShape) -> "ClassMap":
        return cls(shape, shape, tuple(((i, ID),) for i in range(len(shape))))

    @classmethod
    def permutation(cls, shape: GroupShape, perm: Sequence[int]) -> "ClassMap":
        """Map sending source factor perm[j] to target factor j."""
        return cls(shape, shape.permuted(perm), tuple(((p, ID),) for p in perm))


def restrict_along(cmap: ClassMap, f: ClassFunction) -> ClassFunction:
    if f.shape != cmap.target:
        raise ShapeError(f"function lives on {f.shape}, map targets {cmap.target}")
    return ClassFunction(cmap.source, {c: f(cmap.image(c)) for c in cmap.source.classes()})


def induce_along(cmap: ClassMap, f: ClassFunction) -> ClassFunction:
    if f.shape != cmap.source:
        raise ShapeError(f"function lives on {f.shape}, map starts at {cmap.source}")
    acc: dict = {}
    for d, v in f.values.items():
        c = cmap.image(d)
        acc[c] = acc.get(c, ZERO) + v * Fraction(1, cmap.source.centralizer(d))
    return ClassFunction(cmap.target, {c: v * cmap.target.centralizer(c) for c, v in acc.items()})


# embeddings of S_m into W_m used by the symmetric-group operator
def first_embedding(m: int) -> ClassMap:
    """sigma -> w with w(+-i) = +-sigma(i)."""
    return ClassMap(GroupShape(((SYM, m),)), GroupShape(((WEYL, m),)), (((0, positive(1)),),))


def second_embedding(m: int) -> ClassMap:
    """sigma -> w with w(+-i) = -+sigma(i)."""
    return ClassMap(GroupShape(((SYM, m),)), GroupShape(((WEYL, m),)), (((0, twisted(1)),),))
