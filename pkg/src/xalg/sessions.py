"""Replays of the published example sessions as checkable assertions.

Each session rebuilds its objects with this library and records
``(session, assertion, expected, observed)``.  Objects that the sessions
pick by list position are rebuilt from explicit generator images (see the
comments in each function).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Subspace, augmentation_ideal, group_algebra, is_ideal, span_closure
from .cat1alg import Cat1Alg, cat1_by_endomorphisms, cat1_by_tail_head_embedding, cat1_morphism, is_sub_cat1, sub_cat1
from .equiv import cat1_of_xmod, roundtrip_iso_cat1, roundtrip_iso_xmod, xmod_of_cat1
from .ffield import field_make
from .groups import catalog
from .homs import all_homs, hom_from_generator_images, identity_hom
from .xmodalg import identity_morphism, is_sub_xmod, xmod_by_ideal


@dataclass
class Check:
    session: str
    assertion: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.session}: {self.assertion} expected {self.expected!r} observed {self.observed!r}"


def _basis_hom(src, tgt, gen_pairs):
    """Homomorphism from group-basis generator images given as target group indices."""
    gens = [src.basis_vector(g) for g, _ in gen_pairs]
    imgs = [tgt.basis_vector(h) for _, h in gen_pairs]
    return hom_from_generator_images(src, tgt, gens, imgs)


def ideal_session() -> list[Check]:
    name = "crossed module from the augmentation ideal of GF(5)[C2xC2]"
    F = field_make(5)
    A = group_algebra(F, catalog((4, 2)))
    I = augmentation_ideal(A)
    CM = xmod_by_ideal(A, I)
    CM.source.name = "Aug"
    out = [
        Check(name, "Size(A)", 625, A.size),
        Check(name, "Size(I)", 125, I.size),
        Check(name, "Size(CM)", (125, 625), CM.size),
        Check(name, "IsXModAlg(CM)", True, CM.is_xmod),
    ]
    # J is generated by (1 + a)(1 - b) = 1 + a - b - ab, an eigenvector for the group action
    a, b = 1, 2  # group indices of the two generators
    ab = int(A.group.mul[a, b])
    v = np.zeros(A.dim, dtype=np.int64)
    v[0], v[a], v[b], v[ab] = 1, 1, F.neg(1), F.neg(1)
    J = span_closure(I, [v], kind="ideal")
    PM = xmod_by_ideal(A, J)
    out += [
        Check(name, "J = I", False, J == I),
        Check(name, "Size(J)", 5, J.size),
        Check(name, "IsIdeal(I, J)", True, is_ideal(I, J)),
        Check(name, "IsIdeal(A, J)", True, is_ideal(A, J)),
        Check(name, "IsSubXModAlg(CM, PM)", True, is_sub_xmod(CM, PM)),
    ]
    return out


def identity_cat1_session() -> list[Check]:
    name = "cat1-algebra from the identity of GF(4)[C2xC2]"
    R = group_algebra(field_make(2, 2), catalog((4, 2)))
    gens = [R.basis_vector(g) for g in R.group.generators]
    f = hom_from_generator_images(R, R, gens, gens)
    C = Cat1Alg(f, f, f)
    return [
        Check(name, "Size(R)", 256, R.size),
        Check(name, "IsAlgebraHomomorphism(f)", True, f.is_multiplicative),
        Check(name, "IsCat1Alg(C)", True, C.is_cat1),
        Check(name, "Size(C)", (256, 256), C.size),
        Check(name, "kernel is trivial", 0, C.kernel_of_tail().dim),
    ]


def sub_cat1_session() -> list[Check]:
    name = "cat1-algebra GF(2)[C6] => GF(2)[C3] and a sub-cat1-algebra"
    F = field_make(2)
    A = group_algebra(F, catalog((6, 2)))
    R = group_algebra(F, catalog((3, 1)))
    f = all_homs(A, R)
    g = all_homs(R, A)
    # The session's tail/head sends the generator x^-1 of C6 to the generator y of C3
    # (so x -> y^2) and its embedding sends y to x^2.
    x, y = A.group.generators[0], R.group.generators[0]
    s = _basis_hom(A, R, [(x, R.group.power(y, 2))])
    e = _basis_hom(R, A, [(y, A.group.power(x, 2))])
    C = cat1_by_tail_head_embedding(s, s, e)
    # AA = span{1, 1 + x^3}, RR = span{1}
    x3 = A.group.power(x, 3)
    AA = span_closure(A, [A.basis_vector(0), A.basis_vector(0) + A.basis_vector(x3)], kind="subalgebra")
    RR = span_closure(R, [R.basis_vector(0)], kind="subalgebra")
    CC = sub_cat1(C, AA, RR)
    return [
        Check(name, "|AllHomsOfAlgebras(A, R)|", 8, len(f)),
        Check(name, "|AllHomsOfAlgebras(R, A)|", 8, len(g)),
        Check(name, "tail is among AllHomsOfAlgebras(A, R)", True, any(h == s for h in f)),
        Check(name, "embedding is among AllHomsOfAlgebras(R, A)", True, any(h == e for h in g)),
        Check(name, "IsCat1Alg(C)", True, C.is_cat1),
        Check(name, "Size(C)", (64, 8), C.size),
        Check(name, "A = AA", False, AA.dim == A.dim),
        Check(name, "R = RR", False, RR.dim == R.dim),
        Check(name, "IsCat1Alg(CC)", True, CC.is_cat1),
        Check(name, "Size(CC)", (4, 2), CC.size),
        Check(name, "IsSubCat1Alg(C, CC)", True, is_sub_cat1(C, CC)),
    ]


def xmod_morphism_session() -> list[Check]:
    name = "identity morphism of the crossed module Aug -> GF(2)[C6]"
    A = group_algebra(field_make(2), catalog((6, 2)))
    B = augmentation_ideal(A)
    CM = xmod_by_ideal(A, B)
    f = identity_morphism(CM)
    PM = f.kernel()
    return [
        Check(name, "dim Aug", 5, B.dim),
        Check(name, "IsPreXModAlgMorphism(f)", True, f.is_pre_xmod_morphism),
        Check(name, "IsXModAlgMorphism(f)", True, f.is_xmod_morphism),
        Check(name, "Size(Kernel(f))", (1, 1), PM.size),
        Check(name, "IsXModAlg(Kernel(f))", True, PM.is_xmod),
        Check(name, "IsSubXModAlg(CM, Kernel(f))", True, is_sub_xmod(CM, PM)),
        Check(name, "SourceHom(f) is the identity", True, f.source_hom == identity_hom(CM.source)),
        Check(name, "RangeHom(f) is the identity", True, f.range_hom == identity_hom(CM.range)),
        Check(name, "IsInjective(f)", True, f.is_injective),
        Check(name, "IsSurjective(f)", True, f.is_surjective),
        Check(name, "IsBijective(f)", True, f.is_bijective),
    ]


def cat1_morphism_session() -> list[Check]:
    name = "cat1-morphism from the trivial cat1-algebra into GF(2)[C2] => GF(2)"
    F = field_make(2)
    A = group_algebra(F, catalog((1, 1)))
    B = group_algebra(F, catalog((2, 1)))
    m = identity_hom(A)
    C1 = Cat1Alg(m, m, m)
    f = all_homs(B, A)  # [zero, augmentation]
    g = all_homs(A, B)  # [zero, unit inclusion]
    C2 = Cat1Alg(f[1], f[1], g[1])
    f1 = hom_from_generator_images(A, B, [A.basis_vector(0)], [B.basis_vector(0)])
    f2 = hom_from_generator_images(A, A, [A.basis_vector(0)], [A.basis_vector(0)])
    mor = cat1_morphism(C1, C2, f1, f2)
    img = mor.image()
    return [
        Check(name, "|AllHomsOfAlgebras(B, A)|", 2, len(f)),
        Check(name, "|AllHomsOfAlgebras(A, B)|", 2, len(g)),
        Check(name, "C1 = C2", False, C1 == C2),
        Check(name, "IsCat1Morphism(m)", True, mor.is_cat1_morphism),
        Check(name, "image is a cat1-algebra", True, img.is_cat1),
        Check(name, "IsSurjective(m)", False, mor.is_surjective),
        Check(name, "IsInjective(m)", True, mor.is_injective),
        Check(name, "IsBijective(m)", False, mor.is_bijective),
    ]


def xmod_to_cat1_session() -> list[Check]:
    name = "cat1-algebra from the crossed module Aug -> GF(3)[C2]"
    R = group_algebra(field_make(3), catalog((2, 1)))
    I = augmentation_ideal(R)
    CM = xmod_by_ideal(R, I)
    C = cat1_of_xmod(CM)
    SM = xmod_of_cat1(C)
    iso = roundtrip_iso_xmod(CM)
    return [
        Check(name, "IsXModAlg(CM)", True, CM.is_xmod),
        Check(name, "IsCat1Alg(C)", True, C.is_cat1),
        Check(name, "Size(C)", (27, 9), C.size),
        Check(name, "SM = CM", True, SM == CM),
        Check(name, "roundtrip isomorphism is bijective", True, iso.is_bijective),
    ]


def cat1_to_xmod_session() -> list[Check]:
    name = "crossed module from the identity cat1-algebra on GF(4)[S3]"
    A = group_algebra(field_make(2, 2), catalog((6, 1)))
    gens = [A.basis_vector(g) for g in A.group.generators]
    m = hom_from_generator_images(A, A, gens, gens)
    C = cat1_by_endomorphisms(m, m)
    CM = xmod_of_cat1(C)
    CC = cat1_of_xmod(CM)
    iso = roundtrip_iso_cat1(C)
    return [
        Check(name, "Size(A)", 4096, A.size),
        Check(name, "Size(C)", (4096, 4096), C.size),
        Check(name, "source of CM is the zero algebra", 0, CM.source.dim),
        Check(name, "IsXModAlg(CM)", True, CM.is_xmod),
        Check(name, "CC = C", True, CC == C),
        Check(name, "roundtrip isomorphism is bijective", True, iso.is_bijective),
    ]


SESSIONS = [
    ideal_session,
    identity_cat1_session,
    sub_cat1_session,
    xmod_morphism_session,
    cat1_morphism_session,
    xmod_to_cat1_session,
    cat1_to_xmod_session,
]


def replay_sessions() -> list[Check]:
    checks = []
    for fn in SESSIONS:
        checks.extend(fn())
    return checks


def report(checks) -> str:
    lines = [c.line() for c in checks]
    n_ok = sum(c.passed for c in checks)
    lines.append(f"{n_ok}/{len(checks)} session assertions passed")
    return "\n".join(lines)
