"""Endomorphism, idempotent and cat1 counts for a few group algebras.

Cat1 counts are ordered pairs (tail, head); the unordered count is shown too.
"""

from xalg import catalog, census_table, enumerate_cat1_structures, field_make, group_algebra
from xalg.census import render

rows = [(field_make(2), (2, 1)), (field_make(3), (2, 1)), (field_make(2, 2), (3, 1)), (field_make(2), (4, 2))]
table = census_table(rows)
print(render(table, "md"))
for r in table:
    print(f"{r.field} {r.group}: {r.cat1_count} ordered, {r.cat1_unordered} unordered")

# the two structures on GF(2)[C2]: x -> 1 onto the unit line, and the identity
n, structures = enumerate_cat1_structures(group_algebra(field_make(2), catalog((2, 1))))
for c in structures:
    print(c.name, "size", c.size, "kernel dim", c.kernel_of_tail().dim)
