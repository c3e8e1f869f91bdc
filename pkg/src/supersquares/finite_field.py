"""Arithmetic in GF(p^n).

Elements are plain ints: the element with coefficient vector
(c_0, ..., c_{n-1}) in the polynomial basis is stored as the index
c_0 + c_1 p + ... + c_{n-1} p^{n-1}.  All tables are built once per field,
so ``add``/``mul`` are list lookups.

Text syntax for elements follows the primitive-power notation ``0``, ``1``,
``m``, ``m^2``, ... where ``m`` is the field's primitive element.
"""

from __future__ import annotations

import functools
import itertools
import re

from .errors import InvalidArgument

MAX_ORDER = 4096
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def prime_power(d: int) -> tuple[int, int]:
    """Split ``d`` as ``p**n`` or raise InvalidArgument."""
    if d < 2:
        raise InvalidArgument(f"order {d} is not a prime power")
    p = next(q for q in range(2, d + 1) if d % q == 0)
    n, rest = 0, d
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise InvalidArgument(f"order {d} is not a prime power")
    return p, n


# -- polynomials over Z_p, coefficient lists with constant term first ----------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        q = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - q * c) % p
        _poly_trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(modulus: list[int], p: int) -> bool:
    """True iff no monic polynomial of degree 1..deg/2 divides ``modulus``."""
    n = len(modulus) - 1
    for k in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


class Field:
    """A concrete realization of GF(p^n); use :func:`make_field` to build one.

    Attributes: ``p``, ``n``, ``d`` (= p**n), ``modulus`` (monic, constant term
    first), ``primitive`` (index of the primitive element ``m``).
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.d = p**n
        self.modulus = tuple(modulus)
        d = self.d

        self._coeffs = [tuple((a // p**i) % p for i in range(n)) for a in range(d)]
        self._neg = [self.element(tuple(-c % p for c in self._coeffs[a])) for a in range(d)]
        self.primitive = self._find_primitive()

        # exp/log tables relative to the primitive element
        exp = [1]
        for _ in range(d - 2):
            exp.append(self._mul_poly(exp[-1], self.primitive))
        self._exp = exp
        self._log = [0] * d
        for k, a in enumerate(exp):
            self._log[a] = k
        # canonical order: 0, 1, m, m^2, ...
        self.order = (0, *exp)
        self.rank = [0] * d
        for r, a in enumerate(self.order):
            self.rank[a] = r

        if d <= _TABLE_LIMIT:
            self._add_table = [[self._add_coeffs(a, b) for b in range(d)] for a in range(d)]
            self._mul_table = [[self._mul_log(a, b) for b in range(d)] for a in range(d)]
        else:
            self._add_table = None
            self._mul_table = None

    # -- construction helpers ----------------------------------------------

    def element(self, coeffs) -> int:
        """Index of the element with the given coefficient vector."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidArgument(f"bad coefficient vector {coeffs} for GF({self.d})")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def coeffs(self, a: int) -> tuple[int, ...]:
        return self._coeffs[a]

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(list(self._coeffs[a]), list(self._coeffs[b]), self.p)
        red = _poly_mod(prod, list(self.modulus), self.p)
        return self.element(red + [0] * (self.n - len(red)))

    def _add_coeffs(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        ca, cb = self._coeffs[a], self._coeffs[b]
        return self.element((x + y) % self.p for x, y in zip(ca, cb))

    def _mul_log(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.d - 1)]

    def _find_primitive(self) -> int:
        d = self.d
        if d == 2:
            return 1
        for g in range(1, d):
            x, k = g, 1
            while x != 1:
                x = self._mul_poly(x, g)
                k += 1
            if k == d - 1:
                return g
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    # -- arithmetic --------------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.d:
            raise InvalidArgument(f"{a!r} is not an element of GF({self.d})")
        return a

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_coeffs(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[-self._log[a] % (self.d - 1)]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % (self.d - 1)]

    def mu(self, k: int = 1) -> int:
        """The element m^k."""
        return self._exp[k % (self.d - 1)]

    def trace(self, a: int) -> int:
        """a + a^p + ... + a^(p^(n-1)); lands in the prime subfield."""
        total, x = 0, a
        for _ in range(self.n):
            total = self.add(total, x)
            x = self.power(x, self.p)
        return total

    @functools.cached_property
    def trace_zero(self) -> frozenset[int]:
        return frozenset(a for a in range(self.d) if self.trace(a) == 0)

    # -- text syntax -------------------------------------------------------

    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        k = self._log[a]
        if k == 0:
            return "1"
        return "m" if k == 1 else f"m^{k}"

    def parse(self, text: str) -> int:
        """Parse ``0``, ``1``, ``m``, ``m^k``, or a decimal element index."""
        s = text.strip()
        m = re.fullmatch(r"m(?:\^(-?\d+))?", s)
        if m:
            return self.mu(int(m.group(1) or 1))
        if re.fullmatch(r"\d+", s) and int(s) < self.d:
            return int(s)
        raise InvalidArgument(f"cannot parse {text!r} as an element of GF({self.d})")

    # -- identity ----------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Field(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.n, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms)


@functools.cache
def make_field(p: int, n: int = 1) -> Field:
    """Build GF(p^n) with the lexicographically smallest monic irreducible modulus.

    Coefficients are compared constant term first, and the primitive element is
    the smallest index of multiplicative order p^n - 1.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"p must be prime, got {p}")
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    if p**n > MAX_ORDER:
        raise InvalidArgument(f"field order {p}^{n} exceeds {MAX_ORDER}")
    for low in itertools.product(range(p), repeat=n):
        modulus = list(low) + [1]
        if is_irreducible(modulus, p):
            return Field(p, n, tuple(modulus))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_of_order(d: int) -> Field:
    return make_field(*prime_power(d))


# Module-level functional API.

def add(F: Field, a: int, b: int) -> int:
    return F.add(a, b)


def mul(F: Field, a: int, b: int) -> int:
    return F.mul(a, b)


def inv(F: Field, a: int) -> int:
    return F.inv(a)


def trace(F: Field, a: int) -> int:
    return F.trace(a)


def trace_zero_set(F: Field) -> frozenset[int]:
    return F.trace_zero


def primitive_element(F: Field) -> int:
    return F.primitive
