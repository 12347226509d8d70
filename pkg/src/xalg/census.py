"""Census of endomorphisms, idempotent endomorphisms and cat1-structures on FG.

For each (field, group) row the census computes ``|FG|``, ``|End(FG)|``,
``|IE(FG)|`` and ``|C(FG)|`` and compares them with the published table.
``C`` counts ordered pairs ``(s, t)`` of idempotent endomorphisms with equal
images and ``(ker s)(ker t) = 0 = (ker t)(ker s)``; each such pair is a
cat1-structure with range the common image and embedding the inclusion.  The
unordered count is reported alongside.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import linalg as la
from .algebra import MAX_ELEMENTS, Algebra, EnumerationBoundError, group_algebra
from .ffield import FieldSpec, field_make, parse_field
from .groups import Group, catalog
from .homs import batch_to_matrices, idempotent_mask, iter_hom_batches

# (field order, gap id, group name, |FG|, |End|, |IE|, |C|) as published
REFERENCE = [
    (2, (1, 1), "I", 2, 2, 2, 1),
    (3, (1, 1), "I", 3, 2, 2, 1),
    (4, (1, 1), "I", 4, 2, 2, 1),
    (2, (2, 1), "C2", 4, 3, 3, 2),
    (3, (2, 1), "C2", 9, 9, 6, 3),
    (4, (2, 1), "C2", 16, 5, 3, 2),
    (2, (3, 1), "C3", 8, 8, 5, 1),
    (3, (3, 1), "C3", 27, 10, 3, 1),
    (4, (3, 1), "C3", 64, 64, 23, 7),
    (2, (4, 1), "C4", 16, 9, 3, 1),
    (3, (4, 1), "C4", 81, 45, 18, 3),
    (4, (4, 1), "C4", 256, 65, 3, 1),
    (2, (4, 2), "C2xC2", 16, 65, 15, 13),
    (3, (4, 2), "C2xC2", 81, 625, 104, 25),
    (4, (4, 2), "C2xC2", 256, 4097, 83, 81),
    (2, (5, 1), "C5", 32, 12, 5, 1),
    (3, (5, 1), "C5", 243, 12, 5, 1),
    (4, (5, 1), "C5", 1024, 72, 21, 5),
    (2, (6, 1), "S3", 64, 51, 23, 2),
    (3, (6, 1), "S3", 729, 201, 37, 7),
    (4, (6, 1), "S3", 4096, 485, 63, 2),
    (2, (6, 2), "C6", 64, 39, 14, 4),
    (3, (6, 2), "C6", 729, 361, 29, 13),
    (4, (6, 2), "C6", 4096, 2197, 168, 44),
    (2, (7, 1), "C7", 128, 128, 25, 7),
    (3, (7, 1), "C7", 2187, 16, 5, 1),
    (4, (7, 1), "C7", 16584, 128, 25, 7),
    (2, (8, 1), "C8", 256, 129, 3, 1),
    (3, (8, 1), "C8", 6561, 6561, 468, 39),
    (4, (8, 1), "C8", 65536, 16385, 3, 1),
    (2, (8, 2), "C4xC2", 256, 8193, 131, 65),
    (2, (8, 3), "D8", 256, 2305, 67, 1),
    (2, (8, 4), "Q8", 256, 1793, 3, 1),
    (2, (8, 5), "C2xC2xC2", 256, 2657423, 723, 87),
    (2, (9, 1), "C9", 512, 80, 17, 1),
    (3, (9, 1), "C9", 19683, 6562, 3, 1),
    (4, (9, 1), "C9", 262144, 6400, 419, 49),
    (2, (9, 2), "C3xC3", 512, 20000, 809, 73),
    (2, (10, 1), "D10", 1024, 471, 63, 2),
    (2, (10, 2), "C10", 1024, 243, 26, 4),
    (2, (11, 1), "C11", 2048, 24, 5, 1),
    (2, (12, 1), "C3:C4", 4096, 1881, 167, 9),
    (2, (12, 2), "C12", 4096, 1737, 74, 1),
    (2, (12, 3), "A4", 4096, 2210, 179, 1),
    (2, (12, 4), "D12", 4096, 38545, 1583, 117),
]

FLAGS = ("SIZE_MISMATCH", "END_MISMATCH", "IE_MISMATCH", "CAT1_MISMATCH", "SKIPPED")
CSV_COLUMNS = ["field", "gap_id", "group", "size_fg", "end", "ie", "cat1", "flags"]


def reference_row(q: int, gid) -> tuple | None:
    gid = tuple(gid)
    for row in REFERENCE:
        if row[0] == q and row[1] == gid:
            return row
    return None


# --- counting -----------------------------------------------------------------

@dataclass
class EndoCensus:
    """Raw enumeration result for one group algebra."""

    algebra: Algebra
    end_count: int
    idempotents: np.ndarray  # (n_ie, dim, dim) code matrices, canonical order


def enumerate_endos(a: Algebra, max_elements: int = MAX_ELEMENTS) -> EndoCensus:
    """Stream all endomorphisms of a group algebra, keeping only the idempotent ones."""
    total = 0
    keep = []
    for _, V in iter_hom_batches(a, a, max_elements):
        total += len(V)
        m = idempotent_mask(a, V)
        if m.any():
            keep.append(batch_to_matrices(a, V[m]))
    ie = np.concatenate(keep) if keep else np.zeros((0, a.dim, a.dim), dtype=np.int64)
    return EndoCensus(a, total, ie)


def count_endos(a: Algebra, max_elements: int = MAX_ELEMENTS) -> int:
    return sum(len(V) for _, V in iter_hom_batches(a, a, max_elements))


def count_idempotent_endos(a: Algebra, max_elements: int = MAX_ELEMENTS) -> int:
    return sum(int(idempotent_mask(a, V).sum()) for _, V in iter_hom_batches(a, a, max_elements))


def _left_right_blocks(a: Algebra, K: np.ndarray) -> np.ndarray:
    """Rows of the linear conditions ``k y = 0`` and ``y k = 0`` for each row ``k`` of K."""
    if K.shape[0] == 0:
        return np.zeros((0, a.dim), dtype=np.int64)
    blocks = []
    for k in K:
        blocks.append(a.left_mult_matrix(k))
        blocks.append(a.right_mult_matrix(k))
    return np.concatenate(blocks)


def cat1_pairs(a: Algebra, idempotents) -> list[tuple[int, int]]:
    """Ordered index pairs ``(s, t)`` of idempotent endomorphisms forming cat1-structures.

    Endomorphisms are grouped by image (canonical echelon basis).  Inside a
    group, ``(s, t)`` qualifies iff ``ker t`` lies in the two-sided
    annihilator of ``ker s``, a linear condition checked for all ``t`` at once.
    """
    F = a.field
    d = a.dim
    mats = np.asarray(idempotents, dtype=np.int64).reshape(-1, d, d)
    groups: dict[bytes, list[int]] = {}
    kernels = []
    for i, M in enumerate(mats):
        img = la.row_space(F, M.T, d)
        groups.setdefault(img.tobytes() + bytes([img.shape[0]]), []).append(i)
        kernels.append(la.nullspace(F, M, d))
    pairs = []
    for members in groups.values():
        kd = kernels[members[0]].shape[0]
        if kd == 0:
            pairs.extend((s, t) for s in members for t in members)
            continue
        Kall = np.concatenate([kernels[t] for t in members])  # (n * kd, d)
        owner = np.repeat(np.arange(len(members)), kd)
        for s in members:
            H = la.row_space(F, _left_right_blocks(a, kernels[s]), d)
            if H.shape[0] == 0:
                pairs.extend((s, t) for t in members)
                continue
            Z = la.fdot(F, H, Kall.T)
            bad = np.zeros(len(members), dtype=bool)
            bad[owner[np.any(Z != 0, axis=0)]] = True
            pairs.extend((s, members[j]) for j in np.flatnonzero(~bad))
    pairs.sort()
    return pairs


def enumerate_cat1_structures(a: Algebra, max_elements: int = MAX_ELEMENTS, build: bool = True):
    """``(count, structures)`` for all cat1-structures on a group algebra.

    With ``build=True`` each pair is turned into a validated
    :class:`~xalg.cat1alg.Cat1Alg` via ``cat1_by_endomorphisms``.
    """
    from .cat1alg import cat1_by_endomorphisms
    from .homs import AlgHom

    ec = enumerate_endos(a, max_elements)
    pairs = cat1_pairs(a, ec.idempotents)
    if not build:
        return len(pairs), pairs
    homs = [AlgHom(a, a, M, check=False) for M in ec.idempotents]
    return len(pairs), [cat1_by_endomorphisms(homs[s], homs[t]) for s, t in pairs]


def symmetrized_count(pairs) -> int:
    diag = sum(1 for s, t in pairs if s == t)
    return (len(pairs) + diag) // 2


# --- closed-form oracles ----------------------------------------------------------

def _frobenius_orbits(G: Group, q: int) -> list[list[int]]:
    seen = set()
    orbits = []
    for g in range(G.n):
        if g in seen:
            continue
        orb = [g]
        seen.add(g)
        h = G.power(g, q)
        while h not in seen:
            orb.append(h)
            seen.add(h)
            h = G.power(h, q)
        orbits.append(orb)
    return orbits


def semisimple_abelian_end_count(q: int, G: Group) -> int:
    """``|End(FG)|`` for abelian G with ``gcd(|G|, q) = 1``.

    FG is a product of fields ``GF(q^m)``, one per orbit of ``g -> g^q`` on G
    (size m).  A map into one factor is zero or unital, and unital maps
    ``FG -> GF(q^m)`` match group homomorphisms into the cyclic group of order
    ``q^m - 1``, of which there are ``#{g : g^(q^m - 1) = 1}``.
    """
    if not G.is_abelian or math.gcd(G.n, q) != 1:
        raise ValueError("needs an abelian group of order prime to q")
    total = 1
    for orb in _frobenius_orbits(G, q):
        e = q ** len(orb) - 1
        total *= 1 + sum(1 for g in range(G.n) if G.power(g, e) == 0)
    return total


def modular_abelian_p_group_end_count(q: int, G: Group) -> int:
    """``|End(FG)|`` for an abelian p-group G over a field of characteristic p.

    FG is local, so every endomorphism is zero or unital.  For a generator of
    order n, ``u^n = sum a_g^n g^n`` and ``u^n = 1`` is one linear condition
    per element of ``G^n``; independent generators give
    ``1 + prod_i q^(|G| - |G^(n_i)|)``.
    """
    p = min(f for f in range(2, q + 1) if q % f == 0)
    n = G.n
    while n % p == 0:
        n //= p
    if not G.is_abelian or n != 1:
        raise ValueError("needs an abelian p-group in characteristic p")
    if math.prod(G.gen_orders) != G.n:
        raise ValueError("generators must form a direct basis")
    unital = 1
    for o in G.gen_orders:
        image = {G.power(g, o) for g in range(G.n)}
        unital *= q ** (G.n - len(image))
    return 1 + unital


def end_count_oracle(q: int, G: Group) -> int | None:
    """Closed-form ``|End(FG)|`` when one of the oracles applies, else ``None``."""
    if not G.is_abelian:
        return None
    if math.gcd(G.n, q) == 1:
        return semisimple_abelian_end_count(q, G)
    try:
        return modular_abelian_p_group_end_count(q, G)
    except ValueError:
        return None


# --- table rows -----------------------------------------------------------------

@dataclass
class CensusRow:
    field: str
    gap_id: tuple
    group: str
    size_fg: int
    end_count: int | None
    ie_count: int | None
    cat1_count: int | None
    cat1_unordered: int | None = None
    reference: tuple | None = None
    oracle_end: int | None = None
    flags: list = field(default_factory=list)

    def gap_id_str(self) -> str:
        return f"[{self.gap_id[0]},{self.gap_id[1]}]"

    def csv_record(self) -> list:
        def v(x):
            return "" if x is None else str(x)

        return [
            self.field,
            self.gap_id_str(),
            self.group,
            str(self.size_fg),
            v(self.end_count),
            v(self.ie_count),
            v(self.cat1_count),
            ";".join(self.flags),
        ]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["gap_id"] = list(self.gap_id)
        d["reference"] = None if self.reference is None else list(self.reference)
        return d


def compute_row(F: FieldSpec, gid, max_elements: int = MAX_ELEMENTS) -> CensusRow:
    G = catalog(tuple(gid))
    a = group_algebra(F, G)
    ref = reference_row(F.order, gid)
    ref_vals = None if ref is None else ref[3:]
    row = CensusRow(
        field=F.name,
        gap_id=tuple(gid),
        group=G.name,
        size_fg=a.size,
        end_count=None,
        ie_count=None,
        cat1_count=None,
        reference=ref_vals,
        oracle_end=end_count_oracle(F.order, G),
    )
    try:
        ec = enumerate_endos(a, max_elements)
    except EnumerationBoundError:
        row.flags.append("SKIPPED")
    else:
        pairs = cat1_pairs(a, ec.idempotents)
        row.end_count = ec.end_count
        row.ie_count = len(ec.idempotents)
        row.cat1_count = len(pairs)
        row.cat1_unordered = symmetrized_count(pairs)
    if ref_vals is not None:
        checks = [
            ("SIZE_MISMATCH", row.size_fg, ref_vals[0]),
            ("END_MISMATCH", row.end_count, ref_vals[1]),
            ("IE_MISMATCH", row.ie_count, ref_vals[2]),
            ("CAT1_MISMATCH", row.cat1_count, ref_vals[3]),
        ]
        for flag, got, want in checks:
            if got is not None and got != want:
                row.flags.append(flag)
    row.flags.sort(key=FLAGS.index)
    return row


def _row_task(args):
    (p, k), gid, max_elements = args
    return compute_row(field_make(p, k), gid, max_elements)


def default_rows(fields=None, max_order: int = 12) -> list[tuple[FieldSpec, tuple]]:
    """The published (field, group) rows, optionally restricted to some fields."""
    orders = None if fields is None else {F.order for F in fields}
    out = []
    for q, gid, *_ in REFERENCE:
        if gid[0] > max_order or (orders is not None and q not in orders):
            continue
        F = next(f for f in fields if f.order == q) if fields else parse_field(f"GF({q})")
        out.append((F, gid))
    return out


def census_table(rows, jobs: int = 1, max_elements: int = MAX_ELEMENTS) -> list[CensusRow]:
    """Compute rows in the given order; ``jobs > 1`` spreads rows over processes."""
    tasks = [((F.p, F.k), tuple(gid), max_elements) for F, gid in rows]
    if jobs <= 1 or len(tasks) <= 1:
        return [_row_task(t) for t in tasks]
    # longest rows first keeps the pool busy; results are re-ordered afterwards
    order = sorted(range(len(tasks)), key=lambda i: -_cost_hint(tasks[i]))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        results = dict(zip(order, ex.map(_row_task, [tasks[i] for i in order])))
    return [results[i] for i in range(len(tasks))]


def _cost_hint(task) -> float:
    (p, k), gid, _ = task
    return gid[0] * k * math.log(p) + (p**k) ** 0.5


# --- output formats ---------------------------------------------------------------

def to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_record())
    return buf.getvalue()


def to_json(rows: list[CensusRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2, sort_keys=True) + "\n"


def to_markdown(rows: list[CensusRow]) -> str:
    head = "| Field | Gap id | Group | \\|FG\\| | \\|End(FG)\\| | \\|IE(FG)\\| | \\|C(FG)\\| | unordered C | flags |"
    lines = [head, "|" + "---|" * 9]

    def v(x):
        return "-" if x is None else str(x)

    for r in rows:
        lines.append(
            f"| {r.field} | {r.gap_id_str()} | {r.group} | {r.size_fg} | {v(r.end_count)} | "
            f"{v(r.ie_count)} | {v(r.cat1_count)} | {v(r.cat1_unordered)} | {', '.join(r.flags)} |"
        )
    return "\n".join(lines) + "\n"


def render(rows: list[CensusRow], fmt: str = "md") -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows)
    if fmt == "md":
        return to_markdown(rows)
    raise ValueError(f"unknown format {fmt!r}")
