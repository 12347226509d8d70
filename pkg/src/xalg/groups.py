"""Finite groups of order at most 12 as multiplication tables.

Each catalog entry is generated from hard-coded permutation generators; the
element ordering is breadth-first from the identity over the generators, so
index 0 is always the identity and indices are stable across runs.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


class GroupError(ValueError):
    pass


class UnknownGroupError(GroupError, KeyError):
    pass


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation such as ``"(1,2,3)(4,5)"`` into a 0-based image tuple."""
    perm = list(range(degree))
    for cyc in re.findall(r"\(([^()]*)\)", text):
        pts = [int(x) - 1 for x in cyc.split(",") if x.strip()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def _compose(p, q):
    # apply p then q (GAP convention: x^(pq) = (x^p)^q)
    return tuple(q[i] for i in p)


def _letters(i):
    return "abcdefghijklmnopqrstuvwxyz"[i]


class Group:
    """A finite group given by its multiplication table.

    ``mul[i, j]`` is the index of the product of elements ``i`` and ``j``.
    """

    def __init__(self, mul, generators, name="G", small_group_id=None, labels=None, perms=None):
        mul = np.asarray(mul, dtype=np.int64)
        n = mul.shape[0]
        self.n = n
        self.mul = mul
        self.mul.setflags(write=False)
        self.name = name
        self.small_group_id = tuple(small_group_id) if small_group_id else None
        self.generators = [int(g) for g in generators]
        self.perms = perms
        self.id_index = 0
        self._check()
        inv = np.zeros(n, dtype=np.int64)
        for i in range(n):
            inv[i] = int(np.flatnonzero(mul[i] == 0)[0])
        self.inv = inv
        self.labels = labels or [str(i) for i in range(n)]
        self.element_orders = [self._order(i) for i in range(n)]
        self.gen_orders = [self.element_orders[g] for g in self.generators]

    def _check(self):
        n, mul = self.n, self.mul
        if not np.array_equal(mul[0], np.arange(n)) or not np.array_equal(mul[:, 0], np.arange(n)):
            raise GroupError(f"{self.name}: index 0 is not a two-sided identity")
        for row in mul:
            if len(set(row.tolist())) != n:
                raise GroupError(f"{self.name}: table is not a Latin square")
        # (ab)c == a(bc) for all triples
        left = mul[mul[:, :, None], np.arange(n)[None, None, :]]
        right = mul[np.arange(n)[:, None, None], mul[None, :, :]]
        if not np.array_equal(left, right):
            raise GroupError(f"{self.name}: multiplication is not associative")
        if len(self.closure(self.generators)) != n:
            raise GroupError(f"{self.name}: generators do not generate the group")

    def _order(self, i):
        x, k = i, 1
        while x != 0:
            x = self.mul[x, i]
            k += 1
        return k

    def closure(self, gens) -> list[int]:
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    @property
    def order(self) -> int:
        return self.n

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def order_statistics(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_orders).items()))

    def power(self, i: int, e: int) -> int:
        x = 0
        for _ in range(e % self.element_orders[i]):
            x = int(self.mul[x, i])
        return x

    def id_string(self) -> str:
        if self.small_group_id is None:
            return self.name
        return "[%d,%d]" % self.small_group_id

    def __repr__(self):
        return f"<Group {self.name} {self.id_string()} order {self.n}>"

    def __reduce__(self):
        if self.small_group_id is not None:
            return (catalog, (self.small_group_id,))
        return object.__reduce__(self)


def group_from_permutations(gen_cycles, degree, name, small_group_id=None) -> Group:
    gens = [parse_cycles(c, degree) for c in gen_cycles]
    ident = tuple(range(degree))
    elements = [ident]
    words = [""]
    index = {ident: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j, g in enumerate(gens):
            y = _compose(elements[i], g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                words.append(words[i] + _letters(j))
                queue.append(index[y])
    n = len(elements)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = index[_compose(a, b)]
    gen_idx = [index[g] for g in gens]
    labels = [_word_label(w) for w in words]
    return Group(mul, gen_idx, name=name, small_group_id=small_group_id, labels=labels, perms=elements)


def _word_label(w: str) -> str:
    if not w:
        return "1"
    parts = []
    for ch in w:
        if parts and parts[-1][0] == ch:
            parts[-1][1] += 1
        else:
            parts.append([ch, 1])
    return "*".join(c if k == 1 else f"{c}^{k}" for c, k in parts)


# (order, index) -> (name, degree, generator cycles)
CATALOG = {
    (1, 1): ("I", 1, []),
    (2, 1): ("C2", 2, ["(1,2)"]),
    (3, 1): ("C3", 3, ["(1,2,3)"]),
    (4, 1): ("C4", 4, ["(1,2,3,4)"]),
    (4, 2): ("C2xC2", 4, ["(1,2)", "(3,4)"]),
    (5, 1): ("C5", 5, ["(1,2,3,4,5)"]),
    (6, 1): ("S3", 3, ["(1,2)", "(2,3)"]),
    (6, 2): ("C6", 5, ["(1,2,3)(4,5)"]),
    (7, 1): ("C7", 7, ["(1,2,3,4,5,6,7)"]),
    (8, 1): ("C8", 8, ["(1,2,3,4,5,6,7,8)"]),
    (8, 2): ("C4xC2", 6, ["(1,2,3,4)", "(5,6)"]),
    (8, 3): ("D8", 4, ["(1,2,3,4)", "(1,3)"]),
    (8, 4): ("Q8", 8, ["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]),
    (8, 5): ("C2xC2xC2", 6, ["(1,2)", "(3,4)", "(5,6)"]),
    (9, 1): ("C9", 9, ["(1,2,3,4,5,6,7,8,9)"]),
    (9, 2): ("C3xC3", 6, ["(1,2,3)", "(4,5,6)"]),
    (10, 1): ("D10", 5, ["(1,2,3,4,5)", "(2,5)(3,4)"]),
    (10, 2): ("C10", 7, ["(1,2,3,4,5)(6,7)"]),
    (11, 1): ("C11", 11, ["(1,2,3,4,5,6,7,8,9,10,11)"]),
    (12, 1): ("C3:C4", 7, ["(1,2,3)", "(2,3)(4,5,6,7)"]),
    (12, 2): ("C12", 7, ["(1,2,3,4)(5,6,7)"]),
    (12, 3): ("A4", 4, ["(1,2,3)", "(1,2)(3,4)"]),
    (12, 4): ("D12", 6, ["(1,2,3,4,5,6)", "(2,6)(3,5)"]),
}

# element-order multisets used to confirm each entry's isomorphism type
ORDER_STATISTICS = {
    (1, 1): {1: 1},
    (2, 1): {1: 1, 2: 1},
    (3, 1): {1: 1, 3: 2},
    (4, 1): {1: 1, 2: 1, 4: 2},
    (4, 2): {1: 1, 2: 3},
    (5, 1): {1: 1, 5: 4},
    (6, 1): {1: 1, 2: 3, 3: 2},
    (6, 2): {1: 1, 2: 1, 3: 2, 6: 2},
    (7, 1): {1: 1, 7: 6},
    (8, 1): {1: 1, 2: 1, 4: 2, 8: 4},
    (8, 2): {1: 1, 2: 3, 4: 4},
    (8, 3): {1: 1, 2: 5, 4: 2},
    (8, 4): {1: 1, 2: 1, 4: 6},
    (8, 5): {1: 1, 2: 7},
    (9, 1): {1: 1, 3: 2, 9: 6},
    (9, 2): {1: 1, 3: 8},
    (10, 1): {1: 1, 2: 5, 5: 4},
    (10, 2): {1: 1, 2: 1, 5: 4, 10: 4},
    (11, 1): {1: 1, 11: 10},
    (12, 1): {1: 1, 2: 1, 3: 2, 4: 6, 6: 2},
    (12, 2): {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4},
    (12, 3): {1: 1, 2: 3, 3: 8},
    (12, 4): {1: 1, 2: 7, 3: 2, 6: 2},
}

ABELIAN = {gid for gid in CATALOG if gid not in {(6, 1), (8, 3), (8, 4), (10, 1), (12, 1), (12, 3), (12, 4)}}


@lru_cache(maxsize=None)
def catalog(gid) -> Group:
    """Look up a catalog group by small-group id ``(order, index)``."""
    gid = tuple(int(x) for x in gid)
    if gid not in CATALOG:
        raise UnknownGroupError(f"group id {list(gid)} is not in the catalog")
    name, degree, gens = CATALOG[gid]
    return group_from_permutations(gens, degree, name, gid)


def parse_group(text: str) -> Group:
    """Resolve ``"8,5"``, ``"[8,5]"`` or a catalog name such as ``"D8"``."""
    t = text.strip().strip("[]")
    m = re.match(r"^(\d+)\s*,\s*(\d+)$", t)
    if m:
        return catalog((int(m.group(1)), int(m.group(2))))
    norm = t.replace("×", "x").replace("*", "x").upper()
    for gid, (name, _, _) in CATALOG.items():
        if name.upper() == norm:
            return catalog(gid)
    raise UnknownGroupError(f"unknown group {text!r}")


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: Group
    target: Group
    map: tuple[int, ...] = field(default=())

    def __call__(self, i: int) -> int:
        return self.map[i]

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self`` after ``other``."""
        if other.target is not self.source:
            raise GroupError("composition domain mismatch")
        return GroupHom(other.source, self.target, tuple(self.map[i] for i in other.map))

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.n

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and other.source is self.source
            and other.target is self.target
            and other.map == self.map
        )

    __hash__ = None


def group_hom(src: Group, tgt: Group, gen_images) -> GroupHom:
    """Extend generator images along the Cayley graph of ``src``; reject inconsistent data."""
    gen_images = [int(x) for x in gen_images]
    if len(gen_images) != len(src.generators):
        raise GroupError(f"expected {len(src.generators)} generator images, got {len(gen_images)}")
    img = [-1] * src.n
    img[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, u in zip(src.generators, gen_images):
            y = int(src.mul[x, g])
            val = int(tgt.mul[img[x], u])
            if img[y] < 0:
                img[y] = val
                queue.append(y)
            elif img[y] != val:
                raise GroupError(
                    f"generator images violate a relation of {src.name} "
                    f"(element {src.labels[y]} forced to two values)"
                )
    return GroupHom(src, tgt, tuple(img))


def identity_hom(g: Group) -> GroupHom:
    return GroupHom(g, g, tuple(range(g.n)))


def trivial_hom(src: Group, tgt: Group) -> GroupHom:
    return GroupHom(src, tgt, (0,) * src.n)


def all_group_homs(src: Group, tgt: Group) -> list[GroupHom]:
    """Every homomorphism, by brute force over generator images."""
    from itertools import product

    out = []
    for images in product(range(tgt.n), repeat=len(src.generators)):
        try:
            out.append(group_hom(src, tgt, images))
        except GroupError:
            pass
    return out
