"""Finite fields GF(p^k) with table-driven arithmetic.

An element is stored as an integer whose base-p digits are its coordinates in
the power basis 1, w, w^2, ... (digit 0 least significant).  Integer order is
therefore lexicographic order on coordinate vectors, least significant first.
"""

from __future__ import annotations

from functools import lru_cache

from . import fp_poly

MAX_ORDER = 1 << 16

# Conway polynomials, lowest coefficient first.
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_fp(f: tuple, p: int) -> bool:
    """Rabin's test for a polynomial over GF(p)."""
    f = fp_poly.monic(f, p)
    k = fp_poly.degree(f)
    if k < 1:
        return False
    if k == 1:
        return True
    x = (0, 1)

    def frob_power(j):
        r = x
        for _ in range(j):
            r = _powmod(r, p, f, p)
        return r

    if frob_power(k) != x:
        return False
    for r in prime_factors(k):
        g = fp_poly.gcd(fp_poly.sub(frob_power(k // r), x, p), f, p)
        if g != (1,):
            return False
    return True


def _powmod(a: tuple, e: int, m: tuple, p: int) -> tuple:
    result = (1,)
    a = fp_poly.mod(a, m, p)
    while e:
        if e & 1:
            result = fp_poly.mod(fp_poly.mul(result, a, p), m, p)
        e >>= 1
        if e:
            a = fp_poly.mod(fp_poly.mul(a, a, p), m, p)
    return result


def default_modulus(p: int, k: int) -> tuple:
    if (p, k) in BUILTIN_MODULI:
        return BUILTIN_MODULI[(p, k)]
    for cand in fp_poly.monic_polys(p, k, k):
        if cand[0] and is_irreducible_fp(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class GFElement:
    __slots__ = ("field", "value")

    def __init__(self, field, value: int):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, GFElement):
            if other.field is not self.field:
                raise TypeError("mixed finite fields")
            return other.value
        if isinstance(other, int):
            return self.field.int_value(other)
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.field._elts[self.field._add(self.value, v)]

    __radd__ = __add__

    def __neg__(self):
        return self.field._elts[self.field._neg[self.value]]

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        f = self.field
        return f._elts[f._add(self.value, f._neg[v])]

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.field._elts[self.field._mul(self.value, v)]

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        return f._elts[f._exp[(-f._log[self.value]) % (f.order - 1)]]

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self * self.field._elts[v].inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        f = self.field
        if self.value == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return f.one if e == 0 else self
        return f._elts[f._exp[(f._log[self.value] * e) % (f.order - 1)]]

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.int_value(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def coords(self) -> tuple:
        """Coordinates over GF(p) in the power basis, length k."""
        return self.field._digits[self.value]

    def __str__(self):
        return fp_poly.to_str(fp_poly.strip(self.coords()), self.field.var)

    def __repr__(self):
        return f"GFElement({self})"


class GaloisField:
    """GF(p^k) = GF(p)[w]/(modulus)."""

    is_finite = True

    def __init__(self, p: int, k: int, modulus=None, var: str = "w"):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p ** k > MAX_ORDER:
            raise ValueError(f"GF({p}^{k}) exceeds the supported order {MAX_ORDER}")
        modulus = default_modulus(p, k) if modulus is None else fp_poly.from_ints(modulus, p)
        if fp_poly.degree(modulus) != k or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible_fp(modulus, p):
            raise ValueError(f"modulus {fp_poly.to_str(modulus)} is reducible over GF({p})")
        self.p, self.k, self.modulus, self.var = p, k, modulus, var
        self.order = p ** k
        self._build_tables()
        self._elts = [GFElement(self, v) for v in range(self.order)]
        self.zero, self.one = self._elts[0], self._elts[1]
        self.gen = self._elts[p] if k > 1 else self._elts[1]

    def __reduce__(self):
        return (_cached_field, (self.p, self.k, self.modulus, self.var))

    def _build_tables(self):
        p, k, Q = self.p, self.k, self.order
        self._digits = []
        for v in range(Q):
            d = []
            for _ in range(k):
                v, r = divmod(v, p)
                d.append(r)
            self._digits.append(tuple(d))
        pw = [p ** i for i in range(k)]

        def encode(poly):
            return sum(c * pw[i] for i, c in enumerate(poly))

        if p == 2:
            self._add = int.__xor__
        else:
            digits = self._digits

            def add(a, b):
                da, db = digits[a], digits[b]
                return sum(((x + y) % p) * pw[i] for i, (x, y) in enumerate(zip(da, db)))

            if Q <= 729:
                table = [[add(a, b) for b in range(Q)] for a in range(Q)]
                self._add = lambda a, b: table[a][b]
            else:
                self._add = add
        self._neg = [encode(tuple((-c) % p for c in self._digits[v])) for v in range(Q)]

        # find a primitive element and build exp/log tables
        factors = prime_factors(Q - 1)
        for g in range(1, Q):
            gp = fp_poly.strip(self._digits[g])
            if all(_powmod(gp, (Q - 1) // r, self.modulus, p) != (1,) for r in factors):
                break
        exp = [0] * (Q - 1)
        log = [0] * Q
        cur = (1,)
        gp = fp_poly.strip(self._digits[g])
        for i in range(Q - 1):
            e = encode(cur)
            exp[i] = e
            log[e] = i
            cur = fp_poly.mod(fp_poly.mul(cur, gp, p), self.modulus, p)
        self._exp, self._log = exp, log
        self.primitive_value = g
        n1 = Q - 1

        def mul_(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % n1]

        self._mul = mul_

    def int_value(self, k: int) -> int:
        return k % self.p

    def __call__(self, value=0):
        if isinstance(value, GFElement):
            return value
        if isinstance(value, int):
            return self._elts[value % self.p]
        coeffs = fp_poly.mod(fp_poly.from_ints(value, self.p), self.modulus, self.p)
        return self.from_coords(coeffs)

    def from_int(self, k: int):
        return self._elts[k % self.p]

    def from_value(self, v: int):
        return self._elts[v]

    def from_coords(self, coeffs) -> GFElement:
        v = 0
        for c in reversed(tuple(coeffs) + (0,) * (self.k - len(coeffs))):
            v = v * self.p + (c % self.p)
        return self._elts[v]

    def elements(self):
        """All elements in integer (coordinate-lexicographic, least significant first) order."""
        return iter(self._elts)

    def primitive_element(self) -> GFElement:
        return self._elts[self.primitive_value]

    def normalize_row(self, row: list) -> list:
        return row

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def _cached_field(p, k, modulus, var):
    return GaloisField(p, k, modulus, var)


def field(p: int, k: int, modulus=None, var: str = "w") -> GaloisField:
    """Shared GaloisField instance; elements compare by field identity."""
    modulus = default_modulus(p, k) if modulus is None else fp_poly.from_ints(modulus, p)
    return _cached_field(p, k, tuple(modulus), var)
