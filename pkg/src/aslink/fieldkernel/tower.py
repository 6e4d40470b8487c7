"""Field towers over finite base fields, and their exact elements.

A tower is GF(p^k) followed by named steps, each either transcendental
or algebraic with a monic minimal polynomial over the tower below it.
Algebraic steps must be irreducible of degree at least 2 and coprime to
the characteristic (which also forces separability).

Canonical element form: a fraction num/den of multivariate polynomials
over the base field in all tower generators, where

  * every algebraic generator appears with exponent strictly below its
    minimal-polynomial degree,
  * the denominator contains no algebraic generators,
  * gcd(num, den) = 1 as polynomials, and
  * the denominator is monic under graded-lex order.

This representation is unique, so equality and hashing are structural.
All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import (
    AlgebraMismatch,
    DegreeDivisibleByP,
    DivisionByZero,
    InternalCheckFailed,
    ReducibleMinimalPolynomial,
    UnsupportedConfiguration,
)
from .basefield import BaseField, base_field, uv_irreducible
from .mpoly import MPoly, mring

_NAME_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_$")


@dataclass(frozen=True)
class ValueGroup:
    """A subgroup g*Z of the rationals; g is 1 (unramified) or 1/p."""

    generator: Fraction

    @property
    def index(self) -> int:
        return self.generator.denominator

    def __str__(self):
        return f"({self.generator})Z"


class TowerStep:
    __slots__ = ("name", "minpoly")

    def __init__(self, name: str, minpoly=None):
        self.name = name
        self.minpoly = minpoly  # tuple of FieldElem over the prefix tower, low degree first, without the leading 1

    @property
    def is_algebraic(self) -> bool:
        return self.minpoly is not None

    @property
    def degree(self) -> int:
        return len(self.minpoly)


class FieldTower:
    """An immutable tower of field extensions over a finite base field."""

    __slots__ = (
        "base",
        "steps",
        "ring",
        "_sig",
        "_alg_idx",
        "_trans_idx",
        "_red",
        "_zero",
        "_one",
    )

    def __init__(self, base: BaseField, steps: tuple = ()):
        self.base = base
        self.steps = tuple(steps)
        names = tuple(s.name for s in self.steps)
        if len(set(names)) != len(names):
            raise UnsupportedConfiguration("tower variable names must be distinct")
        self.ring = mring(base, names)
        self._alg_idx = tuple(i for i, s in enumerate(self.steps) if s.is_algebraic)
        self._trans_idx = tuple(i for i, s in enumerate(self.steps) if not s.is_algebraic)
        self._sig = self._signature()
        self._red = {}
        self._zero = None
        self._one = None
        for i in self._alg_idx:
            self._red[i] = self._reduction_data(i)

    # -- identity --

    def _signature(self):
        parts = [self.base.p, self.base.k, self.base.modulus]
        for s in self.steps:
            if s.minpoly is None:
                parts.append((s.name, None))
            else:
                parts.append(
                    (
                        s.name,
                        tuple(
                            (tuple(sorted(c.num.terms.items())), tuple(sorted(c.den.terms.items())))
                            for c in s.minpoly
                        ),
                    )
                )
        return tuple(parts)

    def __eq__(self, other):
        return self is other or (isinstance(other, FieldTower) and self._sig == other._sig)

    def __hash__(self):
        return hash(self._sig)

    def __repr__(self):
        out = f"GF({self.base.q})"
        for s in self.steps:
            if s.is_algebraic:
                out += f"[{s.name}]"
            else:
                out += f"({s.name})"
        return out

    @property
    def characteristic(self) -> int:
        return self.base.p

    @property
    def nvars(self) -> int:
        return len(self.steps)

    def var_names(self) -> tuple[str, ...]:
        return self.ring.names

    def var_index(self, name: str) -> int:
        try:
            return self.ring.names.index(name)
        except ValueError:
            raise UnsupportedConfiguration(f"no tower generator named {name!r}") from None

    def is_transcendental(self, idx: int) -> bool:
        return not self.steps[idx].is_algebraic

    def has_prefix(self, sub: "FieldTower") -> bool:
        return (
            self.base == sub.base
            and len(sub.steps) <= len(self.steps)
            and self._sig[: 3 + len(sub.steps)] == sub._sig
        )

    def is_finite(self) -> bool:
        """True when the tower has no transcendental steps."""
        return not self._trans_idx

    # -- reduction data for algebraic generators --

    def _reduction_data(self, idx: int):
        # theta^d = red_num / red_den with red_den free of algebraic vars
        step = self.steps[idx]
        num_acc = MPoly.zero(self.ring)
        den_acc = MPoly.one(self.ring)
        for t, coeff in enumerate(step.minpoly):
            cn = coeff.num.pad_to(self.ring)
            cd = coeff.den.pad_to(self.ring)
            term = (-cn).mul_term(_unit(self.ring.n, idx, t), self.base.one)
            num_acc = num_acc * cd + term * den_acc
            den_acc = den_acc * cd
        g = MPoly.gcd(num_acc, den_acc)
        if not g.is_one():
            num_acc = num_acc.divexact(g)
            den_acc = den_acc.divexact(g)
        return num_acc, den_acc

    def _reduce(self, poly: MPoly):
        """Rewrite high algebraic-generator powers; returns (num, extra_den)."""
        den_total = MPoly.one(self.ring)
        changed = True
        while changed:
            changed = False
            for idx in self._alg_idx:
                d = self.steps[idx].degree
                if poly.deg_var(idx) < d:
                    continue
                changed = True
                red_num, red_den = self._red[idx]
                low = {}
                high = {}
                for m, c in poly.terms.items():
                    if m[idx] >= d:
                        high[m[:idx] + (m[idx] - d,) + m[idx + 1:]] = c
                    else:
                        low[m] = c
                low_p = MPoly(self.ring, low)
                high_p = MPoly(self.ring, high)
                poly = low_p * red_den + high_p * red_num
                if not red_den.is_one():
                    den_total = den_total * red_den
        return poly, den_total

    # -- element construction --

    def zero(self) -> "FieldElem":
        if self._zero is None:
            self._zero = FieldElem(self, MPoly.zero(self.ring), MPoly.one(self.ring))
        return self._zero

    def one(self) -> "FieldElem":
        if self._one is None:
            self._one = FieldElem(self, MPoly.one(self.ring), MPoly.one(self.ring))
        return self._one

    def from_base(self, value) -> "FieldElem":
        return FieldElem(self, MPoly.const(self.ring, value), MPoly.one(self.ring))

    def from_int(self, n: int) -> "FieldElem":
        return self.from_base(self.base.from_int(n))

    def gen(self, idx: int) -> "FieldElem":
        return FieldElem(self, MPoly.var(self.ring, idx), MPoly.one(self.ring))

    def gen_by_name(self, name: str) -> "FieldElem":
        return self.gen(self.var_index(name))

    def base_gen(self) -> "FieldElem":
        return self.from_base(self.base.gen())

    def normalize(self, num: MPoly, den: MPoly | None = None) -> "FieldElem":
        """Canonicalize an arbitrary fraction of raw polynomials."""
        if den is None:
            den = MPoly.one(self.ring)
        return self._make(num, den)

    def _make(self, num: MPoly, den: MPoly) -> "FieldElem":
        if den.is_zero():
            raise DivisionByZero("denominator is zero")
        if self._alg_idx:
            num, dn = self._reduce(num)
            den, dd = self._reduce(den)
            if not dd.is_one():
                num = num * dd
            if not dn.is_one():
                den = den * dn
        if num.is_zero():
            return self.zero()
        if self._alg_idx and any(den.deg_var(i) > 0 for i in self._alg_idx):
            inv_den = self._invert_poly(den)
            plain = FieldElem(self, num, MPoly.one(self.ring))
            return plain * inv_den
        if den.is_one():
            return FieldElem(self, num, den)
        g = MPoly.gcd(num, den)
        if not g.is_one():
            num = num.divexact(g)
            den = den.divexact(g)
        _, lc = den.lead()
        if not self.base.is_one(lc):
            inv = self.base.inv(lc)
            num = num.scale(inv)
            den = den.scale(inv)
        return FieldElem(self, num, den)

    def _invert_poly(self, poly: MPoly) -> "FieldElem":
        """Inverse of a nonzero reduced polynomial containing algebraic vars."""
        present = [i for i in self._alg_idx if poly.deg_var(i) > 0]
        r = max(present)
        step = self.steps[r]
        coeffs = poly.coeffs_in_var(r)
        one_p = MPoly.one(self.ring)
        a = [
            FieldElem(self, coeffs.get(e, MPoly.zero(self.ring)), one_p)
            for e in range(max(coeffs) + 1)
        ]
        m = [c.embed(self) for c in step.minpoly] + [self.one()]
        u = _uv_modinv(self, a, m)
        theta = self.gen(r)
        acc = self.zero()
        power = self.one()
        for coeff in u:
            acc = acc + coeff * power
            power = power * theta
        return acc

    # -- extension --

    def extend_transcendental(self, name: str) -> "FieldTower":
        _check_name(name, self)
        return FieldTower(self.base, self.steps + (TowerStep(name, None),))

    def extend_algebraic(self, name: str, coeffs: list, check: bool = True) -> "FieldTower":
        """Adjoin a root of a monic polynomial; coeffs include the leading 1."""
        _check_name(name, self)
        coeffs = [self.coerce(c) for c in coeffs]
        if len(coeffs) < 3:
            raise UnsupportedConfiguration("algebraic steps must have degree at least 2")
        if not (coeffs[-1] == self.one()):
            raise UnsupportedConfiguration("minimal polynomial must be monic")
        d = len(coeffs) - 1
        if d % self.base.p == 0:
            raise DegreeDivisibleByP(
                f"step degree {d} is divisible by the characteristic {self.base.p}"
            )
        if check and not self._minpoly_irreducible(coeffs):
            raise ReducibleMinimalPolynomial("minimal polynomial is reducible")
        return FieldTower(self.base, self.steps + (TowerStep(name, tuple(coeffs[:-1])),))

    def _minpoly_irreducible(self, coeffs) -> bool:
        d = len(coeffs) - 1
        if not self.steps:
            return uv_irreducible(self.base, [c.constant_value() for c in coeffs])
        if self.is_finite():
            # small finite tower: a degree-2 or 3 polynomial is reducible
            # exactly when it has a root
            if d in (2, 3):
                for v in self.enumerate_elements():
                    acc = self.zero()
                    power = self.one()
                    for c in coeffs:
                        acc = acc + c * power
                        power = power * v
                    if acc.is_zero():
                        return False
                return True
            raise UnsupportedConfiguration(
                "irreducibility test beyond degree 3 over stepped finite towers"
            )
        if d == 2:
            # char is odd here (degree 2 coprime to p), so complete the square
            c1, c0 = coeffs[1], coeffs[0]
            disc = c1 * c1 - self.from_int(4) * c0
            root = self.sqrt(disc)
            return root is None
        raise UnsupportedConfiguration(
            "irreducibility test beyond degree 2 over function-field towers"
        )

    # -- coercion, embedding --

    def coerce(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.tower == self:
                return value
            if self.has_prefix(value.tower):
                return value.embed(self)
            raise AlgebraMismatch("element belongs to an incompatible tower")
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    # -- whole-tower maps and searches --

    def sqrt(self, e: "FieldElem"):
        """A square root of e in the tower, or None.  Odd characteristic only."""
        if self.base.p == 2:
            raise UnsupportedConfiguration("square roots by halving need odd characteristic")
        e = self.coerce(e)
        if e.is_zero():
            return self.zero()
        if self.is_finite() and not self._alg_idx:
            r = self.base.sqrt(e.num.const_value())
            return None if r is None else self.from_base(r)
        if self.is_finite():
            for v in self.enumerate_elements():
                if (v * v) == e:
                    return v
            return None
        if any(e.num.deg_var(i) > 0 for i in self._alg_idx):
            raise UnsupportedConfiguration(
                "square-root search over algebraic generators is not supported"
            )
        s = (e.num * e.den).sqrt()
        if s is None:
            return None
        return self._make(s, e.den)

    def enumerate_elements(self):
        """All elements of a finite tower, in a fixed deterministic order."""
        if not self.is_finite():
            raise UnsupportedConfiguration("cannot enumerate an infinite tower")
        monos = [()]
        for i in self._alg_idx:
            d = self.steps[i].degree
            monos = [m + (e,) for m in monos for e in range(d)]
        full = []
        for m in monos:
            mono = [0] * self.ring.n
            for pos, i in enumerate(self._alg_idx):
                mono[i] = m[pos]
            full.append(tuple(mono))
        for values in itertools.product(self.base.elements(), repeat=len(full)):
            terms = {
                mono: v for mono, v in zip(full, values) if not self.base.is_zero(v)
            }
            yield self._make(MPoly(self.ring, terms), MPoly.one(self.ring))

    def random_element(self, rng, max_degree: int = 2, nterms: int = 3, fraction: bool = False):
        """Deterministic pseudo-random canonical element for the given rng."""
        if self.is_finite():
            elems = list(self.enumerate_elements())
            return elems[rng.randrange(len(elems))]

        def rand_poly(allow_zero: bool):
            terms = {}
            for _ in range(nterms):
                mono = [0] * self.ring.n
                budget = max_degree
                for i in range(self.ring.n):
                    cap = budget
                    if not self.is_transcendental(i):
                        cap = min(cap, self.steps[i].degree - 1)
                    e = rng.randint(0, cap) if cap > 0 else 0
                    mono[i] = e
                    budget -= e
                    if budget <= 0:
                        break
                v = self.base.random(rng)
                if not self.base.is_zero(v):
                    terms[tuple(mono)] = v
            p = MPoly(self.ring, terms)
            if p.is_zero() and not allow_zero:
                return MPoly.one(self.ring)
            return p

        num = rand_poly(allow_zero=True)
        if fraction:
            den = rand_poly(allow_zero=False)
            return self._make(num, den)
        return self._make(num, MPoly.one(self.ring))


def _check_name(name: str, tower: FieldTower):
    if not name or not set(name) <= _NAME_OK or name[0].isdigit():
        raise UnsupportedConfiguration(f"invalid generator name {name!r}")
    if name in tower.ring.names or (tower.base.k > 1 and name == "w"):
        raise UnsupportedConfiguration(f"generator name {name!r} already in use")
    if name in ("i", "j", "w"):
        raise UnsupportedConfiguration(f"{name!r} is a reserved identifier")


def _unit(n: int, idx: int, e: int) -> tuple:
    m = [0] * n
    m[idx] = e
    return tuple(m)


class FieldElem:
    """A canonical element of a FieldTower.  Immutable."""

    __slots__ = ("tower", "num", "den", "_hash")

    def __init__(self, tower: FieldTower, num: MPoly, den: MPoly):
        self.tower = tower
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates --

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_const() and self.den.is_one()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a base-field constant")
        return self.num.const_value()

    def active_vars(self) -> set[int]:
        return self.num.active_vars() | self.den.active_vars()

    # -- arithmetic --

    def _pair(self, other):
        """Coerce into a common tower; returns (a, b) or None."""
        if isinstance(other, int):
            return self, self.tower.from_int(other)
        if not isinstance(other, FieldElem):
            return None
        if other.tower == self.tower:
            return self, other
        if self.tower.has_prefix(other.tower):
            return self, other.embed(self.tower)
        if other.tower.has_prefix(self.tower):
            return self.embed(other.tower), other
        raise AlgebraMismatch("elements of incompatible towers")

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return a.tower._make(a.num + b.num, a.den)
        return a.tower._make(a.num * b.den + b.num * a.den, a.den * b.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return FieldElem(self.tower, -self.num, self.den)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.__add__(-b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den.is_one() and b.den.is_one() and not a.tower._alg_idx:
            return FieldElem(a.tower, a.num * b.num, a.den)
        return a.tower._make(a.num * b.num, a.den * b.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self.tower._make(self.den, self.num)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.tower.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- field maps --

    def frobenius(self) -> "FieldElem":
        p = self.tower.base.p
        return self.tower._make(self.num.frobenius(p), self.den.frobenius(p))

    def artin_schreier_image(self) -> "FieldElem":
        return self.frobenius() - self

    def pth_root(self):
        """The unique p-th root within the tower, or None."""
        tw = self.tower
        p = tw.base.p
        if self.is_zero():
            return tw.zero()
        present = [i for i in tw._alg_idx if self.num.deg_var(i) > 0]
        if not present:
            rn = self.num.pth_root(p)
            rd = self.den.pth_root(p)
            if rn is None or rd is None:
                return None
            root = FieldElem(tw, rn, rd)
        else:
            root = self._pth_root_algebraic(present[-1])
            if root is None:
                return None
        if root ** p == self:
            return root
        return None

    def _pth_root_algebraic(self, r: int):
        tw = self.tower
        p = tw.base.p
        d = tw.steps[r].degree
        one_p = MPoly.one(tw.ring)
        coeffs = self.num.coeffs_in_var(r)
        e_vec = [
            tw._make(coeffs.get(t, MPoly.zero(tw.ring)), self.den)
            for t in range(d)
        ]
        # rows of M: theta^(p*t) in the basis 1, theta, ..., theta^(d-1)
        gp = tw.gen(r) ** p
        rows = []
        power = tw.one()
        for t in range(d):
            cs = power.num.coeffs_in_var(r)
            rows.append(
                [
                    tw._make(cs.get(s, MPoly.zero(tw.ring)), power.den)
                    for s in range(d)
                ]
            )
            power = power * gp
        # solve sum_t dvec[t] * rows[t][s] = e_vec[s] for dvec
        mat = [[rows[t][s] for t in range(d)] for s in range(d)]
        sol = _solve_linear(tw, mat, e_vec)
        if sol is None:
            return None
        acc = tw.zero()
        theta_pow = tw.one()
        theta = tw.gen(r)
        for t in range(d):
            c = sol[t].pth_root()
            if c is None:
                return None
            acc = acc + c * theta_pow
            theta_pow = theta_pow * theta
        return acc

    # -- embedding --

    def embed(self, supertower: FieldTower) -> "FieldElem":
        if supertower == self.tower:
            return self
        if not supertower.has_prefix(self.tower):
            raise AlgebraMismatch("not a super-tower")
        return FieldElem(
            supertower,
            self.num.pad_to(supertower.ring),
            self.den.pad_to(supertower.ring),
        )

    # -- comparisons --

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.tower.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.tower != self.tower:
            try:
                a, b = self._pair(other)
            except AlgebraMismatch:
                return False
            return a.num == b.num and a.den == b.den
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self):
        """A deterministic total order on canonical elements.

        Zero sorts first, then by combined degree, term count, and the
        rendered string.  Used wherever the engine must pick the
        'smallest' witness reproducibly.
        """
        if self.is_zero():
            return (0, 0, 0, "")
        return (
            1,
            self.num.degree() + self.den.degree(),
            len(self.num.terms) + len(self.den.terms),
            str(self),
        )

    # -- rendering --

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        ds = str(self.den)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"<{self} in {self.tower!r}>"


def _uv_modinv(tower: FieldTower, a: list, m: list) -> list:
    """Inverse of the polynomial a modulo monic m, coefficients FieldElem."""

    def trim(x):
        while x and x[-1].is_zero():
            x.pop()
        return x

    def divmod_(u, w):
        u = list(u)
        q = [tower.zero()] * max(len(u) - len(w) + 1, 1)
        inv_lead = w[-1].inverse()
        while u and len(u) >= len(w):
            c = u[-1] * inv_lead
            s = len(u) - len(w)
            q[s] = c
            for i in range(len(w)):
                u[s + i] = u[s + i] - c * w[i]
            u.pop()
            trim(u)
        return trim(q), u

    r0, r1 = list(m), trim(list(a))
    t0, t1 = [], [tower.one()]
    if not r1:
        raise DivisionByZero("inverse of zero polynomial")
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        # t_new = t0 - q * t1
        qt = _uv_mul_fe(tower, q, t1)
        t_new = _uv_sub_fe(tower, t0, qt)
        r0, r1 = r1, r
        t0, t1 = t1, t_new
        if not r1:
            raise InternalCheckFailed("minimal polynomial shares a factor with the operand")
    c_inv = r1[0].inverse()
    out = [c * c_inv for c in t1]
    if len(out) >= len(m):
        _, out = divmod_(out, m)
    return out


def _uv_mul_fe(tower, a, b):
    if not a or not b:
        return []
    out = [tower.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    while out and out[-1].is_zero():
        out.pop()
    return out


def _uv_sub_fe(tower, a, b):
    n = max(len(a), len(b))
    out = [tower.zero()] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    while out and out[-1].is_zero():
        out.pop()
    return out


def _solve_linear(tower: FieldTower, mat: list, rhs: list):
    """Solve a small square system by Gaussian elimination; None if singular."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if not aug[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        row += 1
    return [aug[i][n] for i in range(n)]
