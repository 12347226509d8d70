"""Crossed module from the augmentation ideal of GF(5)[C2xC2], and a sub-crossed module."""

import numpy as np

from xalg import augmentation_ideal, catalog, field_make, group_algebra, is_sub_xmod, span_closure, xmod_by_ideal

A = group_algebra(field_make(5), catalog((4, 2)))
I = augmentation_ideal(A)
CM = xmod_by_ideal(A, I)
print(CM.display())
print("size", CM.size, "crossed module:", CM.is_xmod)

# a one-dimensional ideal inside I: 1 + a - b - ab spans it
a, b = A.group.generators
v = np.zeros(A.dim, dtype=np.int64)
v[[0, a, b, int(A.group.mul[a, b])]] = [1, 1, 4, 4]
J = span_closure(I, [v], kind="ideal")
PM = xmod_by_ideal(A, J)
print("|J| =", J.size, "sub-crossed module:", is_sub_xmod(CM, PM))
