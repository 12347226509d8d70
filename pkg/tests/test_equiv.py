import numpy as np
import pytest

from axioms import cat1_violations, xmod_violations
from corpus import cat1_corpus, xmod_corpus
from xalg import (
    augmentation_ideal,
    catalog,
    cat1_by_endomorphisms,
    cat1_of_xmod,
    field_make,
    group_algebra,
    hom_from_generator_images,
    roundtrip_iso_cat1,
    roundtrip_iso_xmod,
    xmod_by_ideal,
    xmod_of_cat1,
)
from xalg.homs import identity_hom


def test_ideal_example():
    R = group_algebra(field_make(3), catalog((2, 1)))
    CM = xmod_by_ideal(R, augmentation_ideal(R))
    C = cat1_of_xmod(CM)
    assert C.is_cat1 and C.size == (27, 9) and C.range is R
    SM = xmod_of_cat1(C)
    assert SM == CM
    iso = roundtrip_iso_xmod(CM)
    assert iso.is_bijective and iso.structurally_equal


def test_zero_source_gives_identity_cat1():
    R = group_algebra(field_make(2), catalog((4, 2)))
    Z = xmod_by_ideal(R, R.zero_subspace)
    C = cat1_of_xmod(Z)
    assert C.source.dim == R.dim
    assert np.array_equal(C.tail.matrix, np.eye(4, dtype=np.int64))
    assert np.array_equal(C.head.matrix, np.eye(4, dtype=np.int64))
    assert roundtrip_iso_xmod(Z).is_bijective


def test_identity_cat1_gives_zero_source():
    A = group_algebra(field_make(2, 2), catalog((6, 1)))
    gens = [A.basis_vector(g) for g in A.group.generators]
    m = hom_from_generator_images(A, A, gens, gens)
    C = cat1_by_endomorphisms(m, m)
    CM = xmod_of_cat1(C)
    assert CM.source.dim == 0 and CM.is_xmod
    CC = cat1_of_xmod(CM)
    assert CC == C
    iso = roundtrip_iso_cat1(C)
    assert iso.is_bijective and iso.structurally_equal
    ident = identity_hom(A)
    assert xmod_of_cat1(cat1_by_endomorphisms(ident, ident)).source.dim == 0


@pytest.mark.parametrize("x", xmod_corpus(), ids=lambda x: f"{x.field.name}:{x.name}")
def test_xmod_roundtrip(x):
    c = cat1_of_xmod(x)
    assert cat1_violations(c) == []
    y = xmod_of_cat1(c)
    assert y.is_xmod and xmod_violations(y) == []
    iso = roundtrip_iso_xmod(x)
    assert iso.is_bijective and iso.morphism.is_xmod_morphism
    assert iso.structurally_equal
    # t - s = d o (projection onto S)
    F = x.field
    dr, ds = x.range.dim, x.source.dim
    diff = F.sub(c.head.matrix, c.tail.matrix).reshape(dr, dr + ds)
    assert not diff[:, :dr].any()
    assert np.array_equal(diff[:, dr:], x.boundary.matrix.reshape(dr, ds))


@pytest.mark.parametrize("c", cat1_corpus(), ids=lambda c: f"{c.field.name}:{c.source.name}:{c.range.dim}")
def test_cat1_roundtrip(c):
    x = xmod_of_cat1(c)
    assert xmod_violations(x) == []
    assert c.source.size == c.range.size * x.source.size
    iso = roundtrip_iso_cat1(c)
    assert iso.is_bijective and iso.morphism.is_cat1_morphism
    assert cat1_violations(iso.rebuilt) == []
