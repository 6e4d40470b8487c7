"""Finite fields GF(p^k) used as tower base fields.

Field values are plain ints in [0, p) when k == 1 and coefficient tuples
(c0, ..., c_{k-1}) with respect to the power basis of a fixed modulus
otherwise.  The modulus is the lexicographically least monic irreducible
polynomial of degree k over GF(p), ordered by the coefficient vector
(c_{k-1}, ..., c0).  All arithmetic is exact; nothing here ever touches
floating point.

Univariate polynomials over a base field appear throughout the package
as plain lists of values, lowest degree first, with no trailing zeros.
The uv_* helpers below operate on that representation.
"""

from __future__ import annotations

import itertools

from ..errors import DivisionByZero, NonPrimePower, ReducibleModulus

_FIELD_CACHE: dict[tuple[int, int], "BaseField"] = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^k with p prime, raising NonPrimePower otherwise."""
    if q < 2:
        raise NonPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise NonPrimePower(f"{q} is not a prime power")
    return p, k


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficients as ints, lowest degree first --

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
        _ptrim(a)
    return a


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pmonic(a, p):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    inv = pow(lead, p - 2, p)
    return [(c * inv) % p for c in a]


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        bm = _pmonic(b, p)
        a, b = b, _pmod(a, bm, p)
    return _pmonic(a, p)


def _irreducible_gfp(m, p) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _pmod(_psub(_ppowmod(x, p ** d, m, p), x, p), m, p):
        return False
    for ell in _prime_divisors(d):
        g = _pgcd(_psub(_ppowmod(x, p ** (d // ell), m, p), x, p), m, p)
        if len(g) - 1 != 0:
            return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over GF(p)."""
    for upper in itertools.product(range(p), repeat=k):
        # upper = (c_{k-1}, ..., c0)
        coeffs = list(reversed(upper)) + [1]
        if _irreducible_gfp(coeffs, p):
            return tuple(coeffs)
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")


class BaseField:
    """GF(p^k) with a fixed modulus.  Instances are shared via base_field()."""

    __slots__ = ("p", "k", "q", "modulus", "_elements")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise NonPrimePower(f"{p} is not prime")
        if k < 1:
            raise NonPrimePower("extension degree must be positive")
        self.p = p
        self.k = k
        self.q = p ** k
        if k == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = canonical_modulus(p, k)
            else:
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != k + 1 or modulus[-1] != 1:
                    raise ReducibleModulus("modulus must be monic of degree k")
                if not _irreducible_gfp(list(modulus), p):
                    raise ReducibleModulus("modulus is reducible")
            self.modulus = modulus
        self._elements = None

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, BaseField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- value constructors --

    @property
    def zero(self):
        return 0 if self.k == 1 else (0,) * self.k

    @property
    def one(self):
        return 1 if self.k == 1 else (1,) + (0,) * (self.k - 1)

    def gen(self):
        """The class of the modulus variable; only defined for k > 1."""
        if self.k == 1:
            raise ValueError("prime field has no proper generator")
        return (0, 1) + (0,) * (self.k - 2)

    def from_int(self, n: int):
        n %= self.p
        return n if self.k == 1 else (n,) + (0,) * (self.k - 1)

    # -- predicates --

    def is_zero(self, a) -> bool:
        return a == 0 if self.k == 1 else not any(a)

    def is_one(self, a) -> bool:
        return a == self.one

    # -- arithmetic on values --

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        prod = _pmul(list(a), list(b), self.p)
        prod = _pmod(prod, list(self.modulus), self.p)
        return tuple(prod + [0] * (self.k - len(prod)))

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of zero in the base field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid against the modulus
        r0, r1 = list(self.modulus), _ptrim(list(a))
        t0, t1 = [], [1]
        p = self.p
        while len(r1) - 1 > 0:
            lead_inv = pow(r1[-1], p - 2, p)
            shift = len(r0) - len(r1)
            q = [0] * (shift + 1)
            rem = list(r0)
            while rem and len(rem) >= len(r1):
                c = (rem[-1] * lead_inv) % p
                s = len(rem) - len(r1)
                q[s] = c
                for i in range(len(r1)):
                    rem[s + i] = (rem[s + i] - c * r1[i]) % p
                rem.pop()
                _ptrim(rem)
            r0, r1 = r1, rem
            t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
        if not r1:
            raise DivisionByZero("modulus shares a factor with the value")
        c_inv = pow(r1[0], p - 2, p)
        out = [(c * c_inv) % p for c in t1]
        out = _pmod(out, list(self.modulus), p)
        return tuple(out + [0] * (self.k - len(out)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, e: int):
        if e < 0:
            return self.pow_(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a):
        return self.pow_(a, self.p)

    def pth_root(self, a):
        # Frobenius is bijective on a finite field: a^(p^(k-1)) is the root.
        if self.k == 1:
            return a
        return self.pow_(a, self.p ** (self.k - 1))

    def sqrt(self, a):
        """A square root of a, or None; deterministic (least index wins)."""
        for v in self.elements():
            if self.mul(v, v) == a:
                return v
        return None

    def trace(self, a) -> int:
        """Absolute trace down to GF(p), returned as an int."""
        acc = self.zero
        cur = a
        for _ in range(self.k):
            acc = self.add(acc, cur)
            cur = self.frobenius(cur)
        return acc if self.k == 1 else acc[0]

    # -- enumeration and ordering --

    def elements(self):
        if self._elements is None:
            if self.k == 1:
                self._elements = list(range(self.p))
            else:
                out = []
                for n in range(self.q):
                    digits = []
                    m = n
                    for _ in range(self.k):
                        digits.append(m % self.p)
                        m //= self.p
                    out.append(tuple(digits))
                self._elements = out
        return self._elements

    def index(self, a) -> int:
        if self.k == 1:
            return a
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def random(self, rng):
        return self.elements()[rng.randrange(self.q)]

    # -- rendering --

    def value_str(self, a, gen_name: str = "w") -> str:
        if self.k == 1:
            return str(a)
        parts = []
        for e in range(self.k - 1, -1, -1):
            c = a[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}{gen_name}" + (f"^{e}" if e > 1 else ""))
        if not parts:
            return "0"
        return "+".join(parts)


def base_field(p: int, k: int = 1) -> BaseField:
    key = (p, k)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = BaseField(p, k)
        _FIELD_CACHE[key] = f
    return f


# -- univariate polynomials over a BaseField (lists of values, low first) --

def uv_trim(field, a):
    while a and field.is_zero(a[-1]):
        a.pop()
    return a


def uv_add(field, a, b):
    n = max(len(a), len(b))
    out = [field.zero] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return uv_trim(field, out)


def uv_sub(field, a, b):
    n = max(len(a), len(b))
    out = [field.zero] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = field.sub(out[i], c)
    return uv_trim(field, out)


def uv_mul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if field.is_zero(ca):
            continue
        for j, cb in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return uv_trim(field, out)


def uv_mod(field, a, m):
    a = list(a)
    dm = len(m) - 1
    lead_inv = field.inv(m[-1])
    while a and len(a) - 1 >= dm:
        c = field.mul(a[-1], lead_inv)
        if not field.is_zero(c):
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = field.sub(a[shift + i], field.mul(c, m[i]))
        a.pop()
        uv_trim(field, a)
    return a


def uv_powmod(field, a, e: int, m):
    result = [field.one]
    base = uv_mod(field, list(a), m)
    while e:
        if e & 1:
            result = uv_mod(field, uv_mul(field, result, base), m)
        base = uv_mod(field, uv_mul(field, base, base), m)
        e >>= 1
    return result


def uv_monic(field, a):
    if not a or field.is_one(a[-1]):
        return list(a)
    inv = field.inv(a[-1])
    return [field.mul(c, inv) for c in a]


def uv_gcd(field, a, b):
    a, b = list(a), list(b)
    while b:
        bm = uv_monic(field, b)
        a, b = b, uv_mod(field, a, bm)
    return uv_monic(field, a)


def uv_irreducible(field, coeffs) -> bool:
    """Rabin test over GF(q) for a monic polynomial given as value list."""
    d = len(coeffs) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [field.zero, field.one]
    m = list(coeffs)
    top = uv_powmod(field, x, field.q ** d, m)
    if uv_sub(field, top, x):
        return False
    for ell in _prime_divisors(d):
        g = uv_gcd(field, uv_sub(field, uv_powmod(field, x, field.q ** (d // ell), m), x), m)
        if len(g) - 1 != 0:
            return False
    return True
