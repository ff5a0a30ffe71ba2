"""Finite fields GF(p^m) in a polynomial basis.

Elements are plain integers: the element ``c_0 + c_1 a + ... + c_{m-1} a^{m-1}``
(``a`` a root of the modulus) is encoded as ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.
Every arithmetic method accepts Python ints or integer numpy arrays and
broadcasts like numpy does.
"""
from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

MAX_ORDER = 1 << 16
TABLE_ORDER = 1 << 12


class FieldError(ValueError):
    pass


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


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, r)`` with ``q == p**r`` or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            while q % p == 0:
                q //= p
                r += 1
            return (p, r) if q == 1 else None
    return None


# -- polynomials over GF(p) as coefficient lists, constant term first --------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bc) % p
        a = _trim(a)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    m = len(poly) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _polymod(poly, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m.

    Coefficient lists are compared from the highest degree down, so for
    ``(5, 2)`` the candidates run X^2, X^2+1, X^2+2, ... and X^2+2 wins.
    """
    for high_first in itertools.product(range(p), repeat=m):
        poly = list(reversed(high_first)) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


class GF:
    """The finite field with ``p**m`` elements.

    >>> F = GF(2, 2)
    >>> F.modulus
    (1, 1, 1)
    >>> F.mul(2, 2)
    3
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        p, m = int(p), int(m)
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if p ** m > MAX_ORDER:
            raise FieldError(f"field order {p}^{m} exceeds the supported cap {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(_trim(modulus)) != m + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus {list(modulus)} is not monic of degree {m}")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)
        self._pows = np.array([p ** j for j in range(m)], dtype=np.int64)
        if self.q <= TABLE_ORDER:
            self._build_log_tables()
        else:
            self._exp = self._log = None

    def __repr__(self):
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (
            other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- scalar polynomial-basis arithmetic (table-free) --------------------

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** j) % self.p for j in range(self.m)]

    def _encode(self, digits) -> int:
        return sum(int(c) * self.p ** j for j, c in enumerate(digits))

    def poly_mul(self, a: int, b: int) -> int:
        """Multiply by schoolbook product and reduction; independent of the tables."""
        p, m = self.p, self.m
        da, db = self._digits(int(a)), self._digits(int(b))
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c:
                for j in range(m + 1):
                    prod[top - m + j] = (prod[top - m + j] - c * self.modulus[j]) % p
        return self._encode(prod[:m])

    def _poly_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.poly_mul(result, a)
            a = self.poly_mul(a, a)
            e >>= 1
        return result

    @cached_property
    def primitive_element(self) -> int:
        """Smallest encoding generating the multiplicative group."""
        if self.q == 2:
            return 1
        factors = prime_factors(self.q - 1)
        for g in range(2, self.q):
            if all(self._poly_pow(g, (self.q - 1) // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element found")  # pragma: no cover

    def _build_log_tables(self):
        n = self.q - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        g = self.primitive_element
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.poly_mul(x, g)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log

    # -- vectorized arithmetic ----------------------------------------------

    def _wrap(self, out, *args):
        if all(np.ndim(x) == 0 for x in args):
            return int(out)
        return out

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a + b) % self.p
        elif self.p == 2:
            out = a ^ b
        else:
            out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
            for w in self._pows:
                out += ((a // w + b // w) % self.p) * w
        return self._wrap(out, a, b)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            out = a.copy()
        elif self.m == 1:
            out = (-a) % self.p
        else:
            out = np.zeros(a.shape, dtype=np.int64)
            for w in self._pows:
                out += ((-(a // w)) % self.p) * w
        return self._wrap(out, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a * b) % self.p
        elif self._exp is not None:
            out = self._exp[self._log[a] + self._log[b]]
            out = np.where((a == 0) | (b == 0), 0, out)
        else:
            a_, b_ = np.broadcast_arrays(a, b)
            out = np.array([self.poly_mul(x, y) for x, y in zip(a_.ravel(), b_.ravel())],
                           dtype=np.int64).reshape(a_.shape)
        return self._wrap(out, a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        """``a**e`` for an integer exponent; negative exponents invert first."""
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e < 0:
            a, e = np.asarray(self.inv(a)), -e
        if self.m > 1 and self._exp is not None:
            out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
            out = np.where(a == 0, 0 if e else 1, out)
            return self._wrap(out, a)
        result = np.ones(a.shape, dtype=np.int64)
        base = a.copy()
        while e:
            if e & 1:
                result = np.asarray(self.mul(result, base))
            base = np.asarray(self.mul(base, base))
            e >>= 1
        return self._wrap(result, a)

    def sum(self, a, axis=0):
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        out = 0
        for w in self._pows:
            out = out + ((a // w) % self.p).sum(axis=axis) % self.p * w
        return np.asarray(out, dtype=np.int64)

    # -- plain-int scalar arithmetic (hot loops in sparse polynomial code) ----

    def scalar_add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out, w = 0, 1
        while a or b:
            out += ((a % self.p + b % self.p) % self.p) * w
            a //= self.p
            b //= self.p
            w *= self.p
        return out

    def scalar_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp_list is None:
            return self.poly_mul(a, b)
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    @cached_property
    def _exp_list(self):
        return None if self._exp is None else self._exp.tolist()

    @cached_property
    def _log_list(self):
        return None if self._log is None else self._log.tolist()

    # -- dense tables for compiled kernels ----------------------------------

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """``(add, mul, neg, inv)`` lookup tables, built on first use."""
        if self.q > TABLE_ORDER:
            raise FieldError(f"dense tables are only built for q <= {TABLE_ORDER}")
        x = np.arange(self.q, dtype=np.int64)
        add = np.asarray(self.add(x[:, None], x[None, :]))
        mul = np.asarray(self.mul(x[:, None], x[None, :]))
        neg = np.asarray(self.neg(x))
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = self.inv(x[1:])
        dt = np.uint8 if self.q <= 256 else np.uint16
        return add.astype(dt), mul.astype(dt), neg.astype(dt), inv.astype(dt)

    # -- subfields -------------------------------------------------------------

    def subfield_elements(self, d: int) -> list[int]:
        """Elements fixed by ``x -> x**d``, i.e. the subfield of order d."""
        pr = prime_power(int(d))
        if pr is None or pr[0] != self.p or self.m % pr[1] != 0:
            raise FieldError(f"{d} is not the order of a subfield of GF({self.p}^{self.m})")
        x = self.elements
        return [int(v) for v in x[np.asarray(self.pow(x, d)) == x]]


def arith(field: GF, op: str, a, b=None):
    """Dispatch ``op`` in {add, sub, mul, div, neg, inv, pow} on ``field``."""
    if op in ("neg", "inv"):
        return getattr(field, op)(a)
    if op not in ("add", "sub", "mul", "div", "pow"):
        raise ValueError(f"unknown field operation {op!r}")
    return getattr(field, op)(a, b)


def field_create(p: int, m: int = 1, modulus=None) -> GF:
    return GF(p, m, modulus)


def subfield_elements(field: GF, d: int) -> list[int]:
    return field.subfield_elements(d)
