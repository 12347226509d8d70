"""Crossed module -> cat1-algebra -> crossed module, and the reverse direction."""

from xalg import (
    augmentation_ideal,
    catalog,
    cat1_of_xmod,
    field_make,
    group_algebra,
    roundtrip_iso_cat1,
    roundtrip_iso_xmod,
    xmod_by_ideal,
    xmod_of_cat1,
)
from xalg.census import enumerate_cat1_structures

R = group_algebra(field_make(3), catalog((2, 1)))
CM = xmod_by_ideal(R, augmentation_ideal(R))
C = cat1_of_xmod(CM)
print(C.name, "size", C.size, "cat1:", C.is_cat1)
SM = xmod_of_cat1(C)
print("recovered crossed module equals the original:", SM == CM)
iso = roundtrip_iso_xmod(CM)
print("canonical isomorphism bijective:", iso.is_bijective)

# every cat1 structure on GF(2)[C2xC2] survives the other roundtrip
A = group_algebra(field_make(2), catalog((4, 2)))
n, structures = enumerate_cat1_structures(A)
ok = sum(roundtrip_iso_cat1(c).is_bijective for c in structures)
print(f"{ok}/{n} cat1 structures on {A.name} roundtrip to an isomorphic copy")
