import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from level0.scalars import CycloScalar
from level0.weylrep import (
    ID, SYM, WEYL, ClassFunction, ClassMap, GroupShape, bipartitions, character_table, decompose,
    first_embedding, induce_along, inner_product, irr_character, irr_labels, linear_twist, restrict_along,
    second_embedding,
)
from oracles import sym_table_from_matrices, weyl_table_from_induction


def as_int(x):
    assert x.is_rational()
    f = x.to_fraction()
    assert f.denominator == 1
    return int(f)


@pytest.mark.parametrize("n", range(0, 6))
def test_symmetric_table_matches_matrices(n):
    assert character_table(SYM, n) == sym_table_from_matrices(n)


@pytest.mark.parametrize("n", range(0, 4))
def test_hyperoctahedral_table_matches_induced_matrices(n):
    assert character_table(WEYL, n) == weyl_table_from_induction(n)


@pytest.mark.parametrize("kind, n", [(SYM, m) for m in range(7)] + [(WEYL, m) for m in range(5)])
def test_orthogonality(kind, n):
    chars = {lab: irr_character((kind, n), lab) for lab in irr_labels(kind, n)}
    for (a, f), (b, g) in itertools.product(chars.items(), repeat=2):
        assert inner_product(f, g) == CycloScalar.rational(1 if a == b else 0)


def test_s3_values():
    chi = irr_character((SYM, 3), (2, 1))
    assert as_int(chi(((1, 1, 1),))) == 2
    assert as_int(chi(((3,),))) == -1


def test_w1_convention():
    neg = (((), (1,)),)
    assert as_int(irr_character((WEYL, 1), ((1,), ()))(neg)) == 1
    assert as_int(irr_character((WEYL, 1), ((), (1,)))(neg)) == -1


@pytest.mark.parametrize("n", range(0, 5))
def test_sgn_cd_swaps_components(n):
    shape = GroupShape(((WEYL, n),))
    for a, b in bipartitions(n):
        twisted = linear_twist(irr_character(shape, (a, b)), "sgn_CD")
        assert twisted == irr_character(shape, (b, a))
        for c in shape.classes():
            assert twisted(c) == irr_character(shape, (a, b))(c) * (-1) ** len(c[0][1])


def test_restrict_identity():
    shape = GroupShape(((SYM, 3), (WEYL, 2)))
    f = ClassFunction.from_callable(shape, lambda c: len(c[0]) + 3 * len(c[1][1]))
    assert restrict_along(ClassMap.identity(shape), f) == f


def young(*ranks, kind=SYM):
    src = GroupShape(tuple((kind, r) for r in ranks))
    tgt = GroupShape(((kind, sum(ranks)),))
    return ClassMap(src, tgt, (tuple((i, ID) for i in range(len(ranks))),))


def test_induce_from_trivial_subgroup_of_s2():
    ind = induce_along(young(1, 1), ClassFunction.constant(GroupShape(((SYM, 1), (SYM, 1))), 1))
    assert as_int(ind(((1, 1),))) == 2
    assert as_int(ind(((2,),))) == 0


def test_regular_character_of_s3():
    src = GroupShape(((SYM, 1),) * 3)
    reg = induce_along(young(1, 1, 1), ClassFunction.constant(src, 1))
    assert as_int(reg(((1, 1, 1),))) == 6
    assert decompose(reg) == {((3,),): 1, ((2, 1),): 2, ((1, 1, 1),): 1}


def test_decompose_trivial_cases():
    shape = GroupShape(((WEYL, 2),))
    assert decompose(ClassFunction(shape)) == {}
    chi = irr_character(shape, ((1,), (1,)))
    assert decompose(chi + chi) == {(((1,), (1,)),): 2}


def random_function(shape, rng):
    return ClassFunction.from_callable(shape, lambda c: rng.randint(-3, 3))


MAPS = [young(1, 2), young(2, 2), young(1, 1, 2), young(1, 2, kind=WEYL), young(2, 1, kind=WEYL),
        first_embedding(3), second_embedding(3), first_embedding(4)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(MAPS))), st.integers(0, 10 ** 6))
def test_frobenius_reciprocity(i, seed):
    cmap = MAPS[i]
    rng = random.Random(seed)
    f, g = random_function(cmap.source, rng), random_function(cmap.target, rng)
    assert inner_product(induce_along(cmap, f), g) == inner_product(f, restrict_along(cmap, g))


@pytest.mark.parametrize("n", range(1, 5))
def test_induced_character_decomposes_integrally(n):
    ind = induce_along(first_embedding(n), ClassFunction.constant(GroupShape(((SYM, n),)), 1))
    parts = decompose(ind)
    assert all(v > 0 for v in parts.values())
    assert sum(v * as_int(irr_character((WEYL, n), lab[0]).degree()) for lab, v in parts.items()) == 2 ** n
