"""Crossed modules of algebras and cat1-algebras over finite group algebras."""

from .algebra import (
    Algebra,
    AlgebraAction,
    Element,
    EnumerationBoundError,
    Subspace,
    annihilator,
    augmentation_ideal,
    functor_on_group_hom,
    group_algebra,
    idempotent_elements,
    is_ideal,
    multiplier_algebra,
    semidirect_product,
    span_closure,
)
from .cat1alg import (
    Cat1Alg,
    Cat1Morphism,
    cat1_by_endomorphisms,
    cat1_by_tail_head_embedding,
    is_sub_cat1,
    sub_cat1,
)
from .census import census_table, count_endos, count_idempotent_endos, enumerate_cat1_structures
from .equiv import cat1_of_xmod, roundtrip_iso_cat1, roundtrip_iso_xmod, xmod_of_cat1
from .ffield import FieldSpec, field_make, parse_field, scalar_arith
from .groups import Group, GroupHom, catalog, group_hom, parse_group
from .homs import AlgHom, all_homs, compose, hom_from_generator_images
from .xmodalg import (
    XModAlg,
    XModMorphism,
    identity_morphism,
    is_sub_xmod,
    sub_xmod,
    xmod_by_boundary_and_action,
    xmod_by_central_extension,
    xmod_by_ideal,
    xmod_by_module,
    xmod_by_multiplier,
)

__version__ = "0.1.0"
