"""Arithmetic in small finite fields GF(p^k).

Elements are integer codes: the polynomial ``a_0 + a_1 x + ... + a_{k-1} x^{k-1}``
over GF(p) is stored as ``a_0 + a_1 p + ... + a_{k-1} p^{k-1}``.  Code 0 is the
additive zero and code 1 the multiplicative one.  Every operation accepts
Python ints or numpy integer arrays and broadcasts.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product

import numpy as np

MAX_ORDER = 2**16
TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomial helpers over GF(p); coefficient lists are low degree first --

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim([c % p for c in a])
    m = _poly_trim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a = _poly_trim(a)
    return a


def _monic_polys(p, deg):
    for coeffs in product(range(p), repeat=deg):
        yield list(coeffs) + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _poly_trim(modulus)
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for q in _monic_polys(p, d):
            if not _poly_mod(m, q, p):
                return False
    return True


def _x_is_primitive(modulus, p, k):
    order = p**k - 1
    e = [1]
    for n in range(1, order + 1):
        e = _poly_mod([0] + e, modulus, p)
        if e == [1]:
            return n == order
    return False


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """The smallest monic irreducible of degree k (ordered by code) whose root is primitive.

    For GF(4) this is x^2 + x + 1; for GF(8), x^3 + x + 1; for GF(9), x^2 + x + 2.
    """
    if k == 1:
        return (0, 1)
    for coeffs in product(range(p), repeat=k):
        m = list(reversed(coeffs))  # iterate in increasing code order
        m = list(m) + [1]
        if m[0] == 0:
            continue
        if is_irreducible(m, p) and _x_is_primitive(m, p, k):
            return tuple(m)
    raise FieldError(f"no primitive modulus found for GF({p}^{k})")


class FieldSpec:
    """The finite field GF(p^k) with table-driven arithmetic on integer codes.

    Instances are immutable and cached per ``(p, k, modulus)``; use
    :func:`field_make` rather than calling the constructor directly.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(_poly_trim(modulus)) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {modulus} is not monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        self._powers = p ** np.arange(k, dtype=np.int64)
        self._build_tables()

    # construction of lookup tables
    def _digits_int(self, c):
        return [(c // p_i) % self.p for p_i in (self.p**i for i in range(self.k))]

    def _code_of_poly(self, poly):
        return sum(int(c) * self.p**i for i, c in enumerate(poly))

    def _poly_mul_code(self, a, b):
        pa, pb = self._digits_int(a), self._digits_int(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
        return self._code_of_poly(_poly_mod(prod, self.modulus, self.p))

    def _build_tables(self):
        q, p = self.order, self.p
        # exp/log from a generator of the multiplicative group
        gen = None
        for g in range(2, q) if q > 2 else [1]:
            x, n = g, 1
            while x != 1:
                x = self._poly_mul_code(x, g)
                n += 1
            if n == q - 1:
                gen = g
                break
        self.generator = gen if gen is not None else 1
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for n in range(q - 1):
            exp[n] = x
            log[x] = n
            x = self._poly_mul_code(x, self.generator)
        exp[q - 1:] = exp[: q - 1]
        self._exp, self._log = exp, log
        codes = np.arange(q, dtype=np.int64)
        digits = self.to_digits(codes)
        self._neg = self.from_digits((-digits) % p)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._inv = inv
        if q <= TABLE_LIMIT:
            a, b = np.meshgrid(codes, codes, indexing="ij")
            self._add = self.from_digits((self.to_digits(a) + self.to_digits(b)) % p)
            self._mul = self._mul_log(a, b)
        else:
            self._add = self._mul = None

    # digit conversion
    def to_digits(self, a):
        """Base-p digits of codes, as a trailing axis of length k."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._powers) % self.p

    def from_digits(self, d):
        d = np.asarray(d, dtype=np.int64)
        return (d % self.p) @ self._powers

    def _mul_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # public arithmetic
    @property
    def name(self) -> str:
        return f"GF({self.order})"

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (field_make, (self.p, self.k, self.modulus))

    def elements(self):
        return range(self.order)

    def add(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        return self.from_digits(self.to_digits(a) + self.to_digits(b))

    def neg(self, a):
        if self.k == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        if self._mul is not None:
            return self._mul[a, b]
        return self._mul_log(a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + self.name)
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = self._exp[(self._log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def scalar_matrix(self, c: int) -> np.ndarray:
        """Matrix over GF(p) of multiplication by ``c`` on digit vectors (columns = images of x^j)."""
        cols = [self.to_digits(self.mul(c, self.p**j)) for j in range(self.k)]
        return np.array(cols, dtype=np.int64).T

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


@lru_cache(maxsize=None)
def _cached_field(p, k, modulus):
    return FieldSpec(p, k, modulus)


def field_make(p: int, k: int = 1, modulus=None, max_order: int = MAX_ORDER) -> FieldSpec:
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if p**k > max_order:
        raise FieldError(f"GF({p}^{k}) exceeds the configured maximum order {max_order}")
    if modulus is None:
        modulus = default_modulus(p, k)
    return _cached_field(p, k, tuple(int(c) for c in modulus))


def prime_power(n: int) -> tuple[int, int]:
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                break
            return p, k
    raise FieldError(f"{n} is not a prime power")


_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$", re.I)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"GF(4)"`` or ``"GF(2^2)"``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldError(f"cannot parse field {text!r}; expected GF(q) or GF(p^k)")
    base, exp = int(m.group(1)), m.group(2)
    if exp is None:
        p, k = prime_power(base)
    else:
        p, k = base, int(exp)
    return field_make(p, k)


def scalar_arith(f: FieldSpec, op: str, a, b=None):
    """Dispatch one of add/sub/mul/div/neg/inv/pow by name."""
    if op in ("neg", "inv"):
        return getattr(f, op)(a)
    if op not in ("add", "sub", "mul", "div", "pow"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(f, op)(a, b)
