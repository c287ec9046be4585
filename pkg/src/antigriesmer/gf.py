"""Exact arithmetic in GF(p^m).

Elements are encoded as integers in ``[0, q)``: the base-p digits of the
encoding, least significant first, are the coefficients of a polynomial of
degree < m reduced modulo the field's defining polynomial.

Arithmetic is vectorized over numpy arrays.  Small fields (q <= 256) use full
addition/multiplication tables, fields up to 2**16 use log/antilog tables,
and larger fields fall back to polynomial arithmetic per element.
"""

from __future__ import annotations

import functools
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**32
TABLE_ORDER = 2**16
FULL_TABLE_ORDER = 256
_INT64_SAFE = 3_037_000_499  # floor(sqrt(2**63 - 1))

# Little-endian coefficient lists.  Every entry is checked by ``is_irreducible``
# at field construction and in the test suite.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),  # x^7 + x + 1
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),  # x^8 + x^4 + x^3 + x + 1 (AES)
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),  # x^9 + x^4 + 1
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),  # x^10 + x^3 + 1
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),  # x^12 + x^6 + x^4 + x + 1
    (2, 16): (1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1),  # x^16 + x^12 + x^3 + x + 1
    (3, 2): (2, 2, 1),  # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (3, 4): (2, 0, 0, 1, 1),  # x^4 + x^3 + 2
    (5, 2): (2, 1, 1),  # x^2 + x + 2
    (5, 3): (2, 3, 0, 1),  # x^3 + 3x + 2
    (7, 2): (3, 1, 1),  # x^2 + x + 3
    (11, 2): (7, 1, 1),  # x^2 + x + 7
    (13, 2): (2, 1, 1),  # x^2 + x + 2
}


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = factors[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# --- polynomials over GF(p): little-endian int lists, no trailing zeros ---


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a little-endian polynomial over GF(p)."""
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    coeffs = list(poly)
    if not coeffs or any(not isinstance(c, (int, np.integer)) for c in coeffs):
        raise FieldError(f"malformed coefficient list: {poly!r}")
    coeffs = [int(c) % p for c in coeffs]
    if coeffs[-1] == 0:
        raise FieldError(f"leading coefficient of {list(poly)!r} is zero mod {p}")
    deg = len(coeffs) - 1
    if deg == 0:
        return False
    if deg == 1:
        return True
    inv = pow(coeffs[-1], -1, p)
    f = [(c * inv) % p for c in coeffs]
    x = [0, 1]
    # f | x^(p^deg) - x
    if _poly_sub(_poly_powmod(x, p**deg, f, p), x, p):
        return False
    for r in prime_factors(deg):
        h = _poly_sub(_poly_powmod(x, p ** (deg // r), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


class FieldSpec:
    """The finite field GF(p^m) with a fixed defining polynomial.

    Immutable after construction.  Array methods (``add``, ``mul``, ...) accept
    ints or integer arrays of encodings and return the same shape; a scalar
    input gives a Python ``int`` back.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int], *, max_order: int = MAX_ORDER):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if p**m > max_order:
            raise FieldError(f"field order {p}^{m} exceeds limit {max_order}")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}: {list(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p}): {list(modulus)}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._pows = np.array([p**i for i in range(m)], dtype=np.int64)

    # identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __str__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @property
    def dtype(self) -> type:
        if self.q <= 256:
            return np.uint8
        if self.q <= 2**16:
            return np.uint16
        return np.int64

    # scalar polynomial arithmetic (on-the-fly path, table construction)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        v = 0
        for c in reversed(digits):
            v = v * self.p + c
        return v

    def _poly_mul_scalar(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(_trim(self._digits(a)), _trim(self._digits(b)), self.p)
        r = _poly_mod(prod, list(self.modulus), self.p)
        return self._encode(r + [0] * (self.m - len(r)))

    def _add_scalar(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    # tables (built lazily, cached per instance)

    @functools.cached_property
    def _log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = None
        for g in range(1, q):
            if all(self._pow_scalar(g, order // r) != 1 for r in factors):
                gen = g
                break
        assert gen is not None
        exp = np.zeros(2 * order if order else 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        mul_by_gen = self._mul_by_constant(gen)
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = mul_by_gen(x)
        exp[order:] = exp[:order]
        return exp, log

    def _mul_by_constant(self, g: int):
        if self.p == 2 and self.m > 1:
            mod_int = self._encode(list(self.modulus))
            top = 1 << self.m

            def mul(a: int) -> int:
                r = 0
                b = g
                while b:
                    if b & 1:
                        r ^= a
                    b >>= 1
                    a <<= 1
                    if a & top:
                        a ^= mod_int
                return r

            return mul
        return lambda a: self._poly_mul_scalar(a, g)

    def _pow_scalar(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul_scalar(result, a)
            a = self._poly_mul_scalar(a, a)
            e >>= 1
        return result

    @functools.cached_property
    def _full_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        idx = np.arange(q, dtype=np.int64)
        add = self._add_arr(idx[:, None], idx[None, :])
        exp, log = self._log_tables
        la, lb = np.meshgrid(log, log, indexing="ij")
        mul = exp[(la + lb) % (q - 1)] if q > 2 else np.ones((q, q), dtype=np.int64)
        mul[0, :] = 0
        mul[:, 0] = 0
        return add.astype(self.dtype), mul.astype(self.dtype)

    # vectorized arithmetic

    def _add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._pows:
            out += (((a // w) % self.p + (b // w) % self.p) % self.p) * w
        return out

    def _neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        out = np.zeros(a.shape, dtype=np.int64)
        for w in self._pows:
            out += ((-((a // w) % self.p)) % self.p) * w
        return out

    # raw kernels: int64 arrays in, int64 arrays out, no range checks

    def add_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p != 2 and self.q <= FULL_TABLE_ORDER:
            return self._full_tables[0][a, b]
        return self._add_arr(a, b)

    def mul_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.q <= FULL_TABLE_ORDER:
            return self._full_tables[1][a, b]
        if self.m == 1:
            if self.p < _INT64_SAFE:
                return (np.asarray(a, dtype=np.int64) * b) % self.p
            return np.vectorize(lambda x, y: (int(x) * int(y)) % self.p, otypes=[np.int64])(a, b)
        if self.q <= TABLE_ORDER:
            exp, log = self._log_tables
            out = exp[(log[a] + log[b]) % (self.q - 1)]
            return np.where((a == 0) | (b == 0), 0, out)
        return np.vectorize(self._poly_mul_scalar, otypes=[np.int64])(a, b)

    def _checked(self, *args) -> tuple[list[np.ndarray], bool]:
        arrs = [np.asarray(x, dtype=np.int64) for x in args]
        for x in arrs:
            if x.size and (x.min() < 0 or x.max() >= self.q):
                raise FieldError(f"value outside [0, {self.q}) for {self}")
        return arrs, all(x.ndim == 0 for x in arrs)

    @staticmethod
    def _out(out, scalar: bool):
        if scalar:
            return int(np.asarray(out))
        return np.asarray(out, dtype=np.int64)

    def add(self, a, b):
        (a, b), scalar = self._checked(a, b)
        return self._out(self.add_raw(a, b), scalar)

    def neg(self, a):
        (a,), scalar = self._checked(a)
        return self._out(self._neg_arr(a), scalar)

    def sub(self, a, b):
        (a, b), scalar = self._checked(a, b)
        return self._out(self.add_raw(a, self._neg_arr(b)), scalar)

    def mul(self, a, b):
        (a, b), scalar = self._checked(a, b)
        return self._out(self.mul_raw(a, b), scalar)

    def inv(self, a):
        (a,), scalar = self._checked(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            out = np.vectorize(lambda x: pow(int(x), -1, self.p), otypes=[np.int64])(a)
        elif self.q <= TABLE_ORDER:
            exp, log = self._log_tables
            out = exp[(self.q - 1 - log[a]) % (self.q - 1)]
        else:
            out = np.vectorize(lambda x: self._pow_scalar(int(x), self.q - 2), otypes=[np.int64])(a)
        return self._out(out, scalar)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        """Raise ``a`` (scalar or array) to a non-negative integer power."""
        if e < 0:
            raise FieldError("negative exponent; use inv")
        a = np.asarray(a, dtype=np.int64)
        result = np.ones(a.shape, dtype=np.int64)
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        if a.ndim == 0:
            return int(result)
        return np.asarray(result, dtype=np.int64)

    def dot(self, a, b) -> int:
        """Inner product of two equal-length encoding vectors."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape != b.shape or a.ndim != 1:
            raise FieldError(f"dimension mismatch: {a.shape} vs {b.shape}")
        acc = 0
        for x in np.asarray(self.mul(a, b)).ravel():
            acc = self.add(acc, int(x))
        return acc

    def sum(self, a, axis: int = 0) -> np.ndarray:
        """Field sum of an array along ``axis``."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.add(acc, row)
        return acc

    def elements(self) -> Iterator[FieldElement]:
        return enumerate_elements(self)

    def primitive_element(self) -> int:
        exp, _ = self._log_tables
        return int(exp[1]) if self.q > 2 else 1


class FieldElement:
    """A single element of a :class:`FieldSpec`, with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise FieldError(f"{value} is not an element encoding of {field}")
        self.field = field
        self.value = value

    def _check(self, other: object) -> FieldElement:
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, int(other))
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.field != self.field:
            raise FieldError(f"cross-field operation: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, o.value))

    def __mul__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.field.div(self.value, o.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return isinstance(other, FieldElement) and other.field == self.field and other.value == self.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build (or fetch from cache) GF(p^m).

    Without ``modulus`` the prime field uses ``x`` and extension fields use
    the entry in ``DEFAULT_MODULI``.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        if m == 1:
            modulus = (0, 1)
        elif (p, m) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, m)]
        else:
            raise FieldError(f"no default modulus for GF({p}^{m}); pass one explicitly")
    return _cached_field(p, m, tuple(int(c) for c in modulus))


def field_of_order(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m)


def enumerate_elements(field: FieldSpec) -> Iterator[FieldElement]:
    for v in range(field.q):
        yield FieldElement(field, v)


def field_isomorphism(src: FieldSpec, dst: FieldSpec) -> np.ndarray:
    """Lookup table of a field isomorphism ``src -> dst``.

    Sends the class of ``x`` in ``src`` to the smallest root of the source
    modulus in ``dst``.  Both fields must have the same order.
    """
    if (src.p, src.m) != (dst.p, dst.m):
        raise FieldError(f"{src} and {dst} are not isomorphic")
    root = None
    for r in range(dst.q):
        acc = 0
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    if root is None:
        raise FieldError(f"source modulus has no root in {dst}")
    table = np.zeros(src.q, dtype=np.int64)
    powers = [dst.pow(root, i) for i in range(src.m)]
    for v in range(src.q):
        acc = 0
        for c, rp in zip(src._digits(v), powers):
            if c:
                acc = dst.add(acc, dst.mul(c, rp))
        table[v] = acc
    return table
