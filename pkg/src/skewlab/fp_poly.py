"""Dense univariate polynomials over GF(p) and the rational function field GF(p)(x).

Polynomials are tuples of ints in ``range(p)``, lowest degree first, with no
trailing zeros; ``()`` is the zero polynomial.  All helpers take the prime
``p`` explicitly and return canonical tuples.
"""

from __future__ import annotations

from itertools import product


def strip(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def from_ints(coeffs, p: int) -> tuple:
    return strip(c % p for c in coeffs)


def degree(a: tuple) -> int:
    return len(a) - 1  # -1 for zero


def add(a: tuple, b: tuple, p: int) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return strip(out)


def neg(a: tuple, p: int) -> tuple:
    return tuple((-c) % p for c in a)


def sub(a: tuple, b: tuple, p: int) -> tuple:
    return add(a, neg(b, p), p)


def scale(a: tuple, c: int, p: int) -> tuple:
    c %= p
    if c == 0:
        return ()
    return tuple((x * c) % p for x in a)


def mul(a: tuple, b: tuple, p: int) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(c % p for c in out)


def divmod_(a: tuple, b: tuple, p: int) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = (r[k] * inv) % p
        if c:
            q[k - db] = c
            for j, y in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * y) % p
    return strip(q), strip(r[:db])


def mod(a: tuple, b: tuple, p: int) -> tuple:
    return divmod_(a, b, p)[1]


def monic(a: tuple, p: int) -> tuple:
    if not a or a[-1] == 1:
        return a
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a: tuple, b: tuple, p: int) -> tuple:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def deriv(a: tuple, p: int) -> tuple:
    return strip((i * a[i]) % p for i in range(1, len(a)))


def inflate(a: tuple, k: int) -> tuple:
    """Substitute x -> x^k."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * k + 1)
    for i, c in enumerate(a):
        out[i * k] = c
    return tuple(out)


def deflate(a: tuple, k: int) -> tuple | None:
    """Inverse of :func:`inflate`; None if some exponent is not a multiple of k."""
    if any(c for i, c in enumerate(a) if i % k):
        return None
    return tuple(a[::k])


def power(a: tuple, e: int, p: int) -> tuple:
    result = (1,)
    while e:
        if e & 1:
            result = mul(result, a, p)
        e >>= 1
        if e:
            a = mul(a, a, p)
    return result


def monic_polys(p: int, max_degree: int, min_degree: int = 0):
    """All monic polynomials with degree in [min_degree, max_degree], by degree then lexicographically."""
    for d in range(min_degree, max_degree + 1):
        for low in product(range(p), repeat=d):
            yield tuple(low) + (1,)


def monic_divisors(a: tuple, p: int, max_degree: int) -> list[tuple]:
    """Monic divisors of nonzero ``a`` of degree at most ``max_degree`` (brute force)."""
    bound = min(max_degree, degree(a))
    return [d for d in monic_polys(p, bound) if not mod(a, d, p)]


def to_str(a: tuple, var: str = "x") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


class RationalFunction:
    """Element of GF(p)(x), kept as a reduced fraction with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: tuple, den: tuple = (1,), reduced: bool = False):
        p = field.p
        if not reduced:
            if not den:
                raise ZeroDivisionError("zero denominator")
            if not num:
                den = (1,)
            else:
                g = gcd(num, den, p)
                if g != (1,):
                    num = divmod_(num, g, p)[0]
                    den = divmod_(den, g, p)[0]
                lc = den[-1]
                if lc != 1:
                    inv = pow(lc, p - 2, p)
                    num = scale(num, inv, p)
                    den = scale(den, inv, p)
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise TypeError("mixed rational function fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        if self.den == other.den:
            return RationalFunction(self.field, add(self.num, other.num, p), self.den)
        num = add(mul(self.num, other.den, p), mul(other.num, self.den, p), p)
        return RationalFunction(self.field, num, mul(self.den, other.den, p))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, neg(self.num, self.field.p), self.den, reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        if not self.num or not other.num:
            return self.field.zero
        # cross-cancel before multiplying to keep intermediate degrees small
        g1 = gcd(self.num, other.den, p)
        g2 = gcd(other.num, self.den, p)
        a, d = divmod_(self.num, g1, p)[0], divmod_(other.den, g1, p)[0]
        c, b = divmod_(other.num, g2, p)[0], divmod_(self.den, g2, p)[0]
        return RationalFunction(self.field, mul(a, c, p), mul(b, d, p))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        p = self.field.p
        return RationalFunction(self.field, power(self.num, e, p), power(self.den, e, p), reduced=True)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field.p, self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def derivative(self):
        p = self.field.p
        if len(self.den) == 1:
            return RationalFunction(self.field, deriv(self.num, p), self.den, reduced=True)
        num = sub(mul(deriv(self.num, p), self.den, p), mul(self.num, deriv(self.den, p), p), p)
        return RationalFunction(self.field, num, mul(self.den, self.den, p))

    def height(self) -> int:
        return max(degree(self.num), degree(self.den))

    def __str__(self):
        var = self.field.var
        n = to_str(self.num, var)
        if self.den == (1,):
            return n
        d = to_str(self.den, var)
        if sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den if c) > 1 or self.den[-1] != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


class RationalFunctionField:
    """The field GF(p)(var)."""

    def __init__(self, p: int, var: str = "x"):
        self.p = p
        self.var = var
        self.zero = RationalFunction(self, (), (1,), reduced=True)
        self.one = RationalFunction(self, (1,), (1,), reduced=True)
        self.gen = RationalFunction(self, (0, 1), (1,), reduced=True)

    def __call__(self, value=0, den=(1,)):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, int):
            return RationalFunction(self, from_ints([value], self.p), (1,), reduced=True)
        return RationalFunction(self, from_ints(value, self.p), from_ints(den, self.p))

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.p == self.p and other.var == self.var

    def __hash__(self):
        return hash(("RationalFunctionField", self.p, self.var))

    def __reduce__(self):
        return (RationalFunctionField, (self.p, self.var))

    is_finite = False

    def from_int(self, k: int):
        return self(k)

    def normalize_row(self, row: list) -> list:
        """Scale a row to primitive polynomial entries (clears denominators, removes content)."""
        p = self.p
        nz = [x for x in row if x.num]
        if not nz:
            return row
        den = (1,)
        for x in nz:
            den = mul(den, divmod_(x.den, gcd(den, x.den, p), p)[0], p)
        nums = [mul(x.num, divmod_(den, x.den, p)[0], p) if x.num else () for x in row]
        content = ()
        for a in nums:
            if a:
                content = gcd(content, a, p) if content else monic(a, p)
        nums = [divmod_(a, content, p)[0] if a else () for a in nums]
        return [RationalFunction(self, a, (1,), reduced=True) for a in nums]

    def __repr__(self):
        return f"GF({self.p})({self.var})"
