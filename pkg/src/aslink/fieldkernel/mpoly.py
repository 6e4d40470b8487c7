"""Sparse multivariate polynomials over a finite base field.

A polynomial is a dict mapping exponent tuples to nonzero base-field
values.  The monomial order used everywhere is graded lexicographic:
compare total degree first, then the exponent tuple left to right.
This module knows nothing about towers, fractions, or minimal
polynomials; it is pure polynomial arithmetic.
"""

from __future__ import annotations

from ..errors import DivisionByZero

_RING_CACHE: dict = {}


class MRing:
    """A polynomial ring descriptor: base field plus ordered variable names."""

    __slots__ = ("field", "names", "n")

    def __init__(self, field, names: tuple[str, ...]):
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)

    def __eq__(self, other):
        return (
            self is other
            or (isinstance(other, MRing) and self.field == other.field and self.names == other.names)
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"MRing({self.field!r}, {self.names})"


def mring(field, names) -> MRing:
    key = (field, tuple(names))
    r = _RING_CACHE.get(key)
    if r is None:
        r = MRing(field, tuple(names))
        _RING_CACHE[key] = r
    return r


def _grlex_key(mono):
    return (sum(mono), mono)


class MPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: MRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- constructors --

    @staticmethod
    def zero(ring: MRing) -> "MPoly":
        return MPoly(ring, {})

    @staticmethod
    def const(ring: MRing, value) -> "MPoly":
        if ring.field.is_zero(value):
            return MPoly(ring, {})
        return MPoly(ring, {(0,) * ring.n: value})

    @staticmethod
    def one(ring: MRing) -> "MPoly":
        return MPoly.const(ring, ring.field.one)

    @staticmethod
    def var(ring: MRing, idx: int, exp: int = 1) -> "MPoly":
        mono = [0] * ring.n
        mono[idx] = exp
        return MPoly(ring, {tuple(mono): ring.field.one})

    # -- predicates and accessors --

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_one(self) -> bool:
        f = self.ring.field
        return len(self.terms) == 1 and self.terms.get((0,) * self.ring.n, f.zero) == f.one

    def const_value(self):
        """Base-field value of a constant polynomial."""
        if not self.terms:
            return self.ring.field.zero
        return self.terms[(0,) * self.ring.n]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def deg_var(self, idx: int) -> int:
        if not self.terms:
            return -1
        return max(m[idx] for m in self.terms)

    def ord_var(self, idx: int) -> int:
        """Minimal exponent of variable idx across monomials (0 for zero poly)."""
        if not self.terms:
            return 0
        return min(m[idx] for m in self.terms)

    def active_vars(self) -> set[int]:
        out = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return out

    def lead(self):
        """(monomial, coefficient) of the graded-lex leading term."""
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    # -- ring operations --

    def __add__(self, other):
        f = self.ring.field
        out = dict(self.terms)
        if f.k == 1:
            p = f.p
            for m, c in other.terms.items():
                s = (out.get(m, 0) + c) % p
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
            return MPoly(self.ring, out)
        for m, c in other.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                s = f.add(cur, c)
                if f.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
        return MPoly(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return MPoly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return MPoly.zero(self.ring)
        if self.is_const():
            return other.scale(self.const_value())
        if other.is_const():
            return self.scale(other.const_value())
        if self.ring.n == 1:
            return self._mul_uni(other)
        f = self.ring.field
        if f.k == 1:
            # prime field: accumulate plain ints and reduce once at the end
            p = f.p
            out = {}
            get = out.get
            items2 = list(other.terms.items())
            if self.ring.n == 2:
                for (a0, a1), c1 in self.terms.items():
                    for (b0, b1), c2 in items2:
                        m = (a0 + b0, a1 + b1)
                        out[m] = get(m, 0) + c1 * c2
            else:
                for m1, c1 in self.terms.items():
                    for m2, c2 in items2:
                        m = tuple(a + b for a, b in zip(m1, m2))
                        out[m] = get(m, 0) + c1 * c2
            return MPoly(self.ring, {m: v % p for m, v in out.items() if v % p})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = f.mul(c1, c2)
                cur = out.get(m)
                if cur is None:
                    out[m] = prod
                else:
                    s = f.add(cur, prod)
                    if f.is_zero(s):
                        del out[m]
                    else:
                        out[m] = s
        return MPoly(self.ring, out)

    def _mul_uni(self, other):
        f = self.ring.field
        d1 = max(m[0] for m in self.terms)
        d2 = max(m[0] for m in other.terms)
        if f.k == 1:
            p = f.p
            a = [0] * (d1 + 1)
            for m, c in self.terms.items():
                a[m[0]] = c
            b = [0] * (d2 + 1)
            for m, c in other.terms.items():
                b[m[0]] = c
            out = [0] * (d1 + d2 + 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            out[i + j] = (out[i + j] + ca * cb) % p
            return MPoly(self.ring, {(e,): c for e, c in enumerate(out) if c})
        a = [f.zero] * (d1 + 1)
        for m, c in self.terms.items():
            a[m[0]] = c
        b = [f.zero] * (d2 + 1)
        for m, c in other.terms.items():
            b[m[0]] = c
        out = [f.zero] * (d1 + d2 + 1)
        for i, ca in enumerate(a):
            if not f.is_zero(ca):
                for j, cb in enumerate(b):
                    if not f.is_zero(cb):
                        out[i + j] = f.add(out[i + j], f.mul(ca, cb))
        return MPoly(self.ring, {(e,): c for e, c in enumerate(out) if not f.is_zero(c)})

    def scale(self, value):
        f = self.ring.field
        if f.is_zero(value):
            return MPoly.zero(self.ring)
        if f.is_one(value):
            return self
        return MPoly(self.ring, {m: f.mul(c, value) for m, c in self.terms.items()})

    def mul_term(self, mono: tuple, value):
        f = self.ring.field
        if f.is_zero(value):
            return MPoly.zero(self.ring)
        return MPoly(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): f.mul(c, value) for m, c in self.terms.items()},
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        _, lc = self.lead()
        f = self.ring.field
        if f.is_one(lc):
            return self
        return self.scale(f.inv(lc))

    # -- comparisons --

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, tuple(sorted(self.terms.items()))))
        return self._hash

    # -- structure manipulation --

    def coeffs_in_var(self, idx: int) -> dict:
        """Coefficients with respect to variable idx, as polys with exp idx == 0."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = m[idx]
            rest = m[:idx] + (0,) + m[idx + 1:]
            out.setdefault(e, {})[rest] = c
        return {e: MPoly(self.ring, t) for e, t in out.items()}

    def subs_var_zero(self, idx: int) -> "MPoly":
        return MPoly(self.ring, {m: c for m, c in self.terms.items() if m[idx] == 0})

    def drop_var(self, idx: int, new_ring: MRing) -> "MPoly":
        """Remove variable idx (must not appear) and reinterpret in new_ring."""
        out = {}
        for m, c in self.terms.items():
            if m[idx]:
                raise ValueError("variable still present")
            out[m[:idx] + m[idx + 1:]] = c
        return MPoly(new_ring, out)

    def pad_to(self, new_ring: MRing) -> "MPoly":
        """Reinterpret in a ring whose variable list extends this ring's."""
        extra = new_ring.n - self.ring.n
        if extra == 0 and new_ring == self.ring:
            return self
        pad = (0,) * extra
        return MPoly(new_ring, {m + pad: c for m, c in self.terms.items()})

    def frobenius(self, p: int) -> "MPoly":
        f = self.ring.field
        return MPoly(
            self.ring,
            {tuple(e * p for e in m): f.pow_(c, p) for m, c in self.terms.items()},
        )

    def pth_root(self, p: int):
        """Exact p-th root, or None.  Valid over perfect coefficient fields."""
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            if any(e % p for e in m):
                return None
            out[tuple(e // p for e in m)] = f.pth_root(c)
        return MPoly(self.ring, out)

    # -- division and gcd --

    def divexact(self, d: "MPoly"):
        """Quotient self / d when the division is exact, else None."""
        if d.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if d.is_one():
            return self
        if self.is_zero():
            return self
        f = self.ring.field
        if d.is_const():
            return self.scale(f.inv(d.const_value()))
        dm, dc = d.lead()
        dc_inv = f.inv(dc)
        rem = dict(self.terms)
        q = {}
        ditems = list(d.terms.items())
        if f.k == 1:
            p = f.p
            while rem:
                rm = max(rem, key=_grlex_key)
                rc = rem[rm]
                e = tuple(a - b for a, b in zip(rm, dm))
                if any(x < 0 for x in e):
                    return None
                qc = (rc * dc_inv) % p
                q[e] = qc
                for m, c in ditems:
                    mm = tuple(a + b for a, b in zip(m, e))
                    s = (rem.get(mm, 0) - c * qc) % p
                    if s:
                        rem[mm] = s
                    elif mm in rem:
                        del rem[mm]
            return MPoly(self.ring, q)
        while rem:
            rm = max(rem, key=_grlex_key)
            rc = rem[rm]
            e = tuple(a - b for a, b in zip(rm, dm))
            if any(x < 0 for x in e):
                return None
            qc = f.mul(rc, dc_inv)
            q[e] = qc
            for m, c in ditems:
                mm = tuple(a + b for a, b in zip(m, e))
                cur = rem.get(mm)
                prod = f.mul(c, qc)
                if cur is None:
                    rem[mm] = f.neg(prod)
                else:
                    s = f.sub(cur, prod)
                    if f.is_zero(s):
                        del rem[mm]
                    else:
                        rem[mm] = s
        return MPoly(self.ring, q)

    def _uni_list(self, idx: int):
        d = self.deg_var(idx)
        out = [None] * (d + 1)
        f = self.ring.field
        for e in range(d + 1):
            out[e] = f.zero
        for m, c in self.terms.items():
            out[m[idx]] = c
        return out

    @staticmethod
    def gcd(a: "MPoly", b: "MPoly") -> "MPoly":
        """Monic gcd of two polynomials (graded-lex leading coefficient 1)."""
        ring = a.ring
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        if a.is_const() or b.is_const():
            return MPoly.one(ring)
        av, bv = a.active_vars(), b.active_vars()
        # a common divisor only involves shared variables, so replace each
        # operand by its content with respect to its private variables
        extra_a = av - bv
        if extra_a:
            a = MPoly._content_wrt(a, extra_a)
            if a.is_const():
                return MPoly.one(ring)
        extra_b = bv - av
        if extra_b:
            b = MPoly._content_wrt(b, extra_b)
            if b.is_const():
                return MPoly.one(ring)
        active = a.active_vars() | b.active_vars()
        if len(active) == 1:
            idx = next(iter(active))
            return MPoly._gcd_uni(a, b, idx)
        v = max(active)
        ca, la = MPoly._content_pp(a, v)
        cb, lb = MPoly._content_pp(b, v)
        cg = MPoly.gcd(ca, cb)
        r0, r1 = la, lb
        if len(r0) < len(r1):
            r0, r1 = r1, r0
        while r1:
            r = MPoly._prem(r0, r1)
            r0, r1 = r1, MPoly._primitive(r)
        g = MPoly.zero(ring)
        for e, coef in enumerate(r0):
            g = g + coef.mul_term(_unit_mono(ring.n, v, e), ring.field.one)
        return (cg * g).monic()

    @staticmethod
    def _gcd_uni(a: "MPoly", b: "MPoly", idx: int) -> "MPoly":
        f = a.ring.field
        ring = a.ring
        if f.k == 1:
            p = f.p
            u = [0] * (a.deg_var(idx) + 1)
            for m, c in a.terms.items():
                u[m[idx]] = c
            w = [0] * (b.deg_var(idx) + 1)
            for m, c in b.terms.items():
                w[m[idx]] = c
            while u and not u[-1]:
                u.pop()
            while w and not w[-1]:
                w.pop()
            while w:
                inv = pow(w[-1], p - 2, p)
                wm = [(c * inv) % p for c in w]
                rem = list(u)
                lw = len(wm)
                while rem and len(rem) >= lw:
                    c = rem[-1]
                    if c:
                        s = len(rem) - lw
                        for i in range(lw):
                            rem[s + i] = (rem[s + i] - c * wm[i]) % p
                    rem.pop()
                    while rem and not rem[-1]:
                        rem.pop()
                u, w = wm, rem
            inv = pow(u[-1], p - 2, p)
            out = {
                _unit_mono(ring.n, idx, e): (c * inv) % p for e, c in enumerate(u) if c
            }
            return MPoly(ring, out)
        u = a._uni_list(idx)
        w = b._uni_list(idx)

        def trim(x):
            while x and f.is_zero(x[-1]):
                x.pop()
            return x

        u, w = trim(list(u)), trim(list(w))
        while w:
            inv = f.inv(w[-1])
            wm = [f.mul(c, inv) for c in w]
            # u mod wm
            rem = list(u)
            while rem and len(rem) >= len(wm):
                c = rem[-1]
                if not f.is_zero(c):
                    s = len(rem) - len(wm)
                    for i in range(len(wm)):
                        rem[s + i] = f.sub(rem[s + i], f.mul(c, wm[i]))
                rem.pop()
                trim(rem)
            u, w = wm, rem
        inv = f.inv(u[-1])
        out = {}
        for e, c in enumerate(u):
            if not f.is_zero(c):
                out[_unit_mono(ring.n, idx, e)] = f.mul(c, inv)
        return MPoly(ring, out)

    @staticmethod
    def _content_wrt(a: "MPoly", extra: set) -> "MPoly":
        """Gcd of the coefficients of a, grouped by monomials in `extra`."""
        ring = a.ring
        groups: dict = {}
        for m, c in a.terms.items():
            key = tuple(e if i in extra else 0 for i, e in enumerate(m))
            rest = tuple(0 if i in extra else e for i, e in enumerate(m))
            groups.setdefault(key, {})[rest] = c
        cont = MPoly.zero(ring)
        for terms in groups.values():
            cont = MPoly.gcd(cont, MPoly(ring, terms))
            if cont.is_one():
                break
        return cont

    @staticmethod
    def _content_pp(a: "MPoly", v: int):
        coeffs = a.coeffs_in_var(v)
        dmax = max(coeffs)
        lst = [coeffs.get(e, MPoly.zero(a.ring)) for e in range(dmax + 1)]
        cont = MPoly.zero(a.ring)
        for c in lst:
            if not c.is_zero():
                cont = MPoly.gcd(cont, c)
        pp = [c.divexact(cont) if not c.is_zero() else c for c in lst]
        while pp and pp[-1].is_zero():
            pp.pop()
        return cont, pp

    @staticmethod
    def _prem(u: list, w: list) -> list:
        """Pseudo-remainder of coefficient lists (univariate over MPoly)."""
        u = list(u)
        dw = len(w) - 1
        lw = w[-1]
        while u and len(u) - 1 >= dw:
            t = u[-1]
            nu = [c * lw for c in u[:-1]]
            shift = len(u) - 1 - dw
            for i in range(dw):
                nu[shift + i] = nu[shift + i] - w[i] * t
            u = nu
            while u and u[-1].is_zero():
                u.pop()
        return u

    @staticmethod
    def _primitive(lst: list) -> list:
        lst = [c for c in lst]
        while lst and lst[-1].is_zero():
            lst.pop()
        if not lst:
            return lst
        cont = MPoly.zero(lst[0].ring)
        for c in lst:
            if not c.is_zero():
                cont = MPoly.gcd(cont, c)
        if cont.is_one():
            return lst
        return [c.divexact(cont) if not c.is_zero() else c for c in lst]

    @staticmethod
    def lcm(a: "MPoly", b: "MPoly") -> "MPoly":
        if a.is_zero() or b.is_zero():
            return MPoly.zero(a.ring)
        g = MPoly.gcd(a, b)
        return (a * b.divexact(g)).monic()

    # -- square roots (odd characteristic) --

    def sqrt(self):
        """Exact square root, or None.  Requires odd characteristic."""
        f = self.ring.field
        if self.is_zero():
            return self
        if self.is_const():
            r = f.sqrt(self.const_value())
            return None if r is None else MPoly.const(self.ring, r)
        active = self.active_vars()
        v = max(active)
        coeffs = self.coeffs_in_var(v)
        d = max(coeffs)
        if d % 2:
            return None
        h = d // 2
        lead = coeffs[d].sqrt()
        if lead is None:
            return None
        q = {h: lead}
        two_lead = lead.scale(f.from_int(2))
        zero = MPoly.zero(self.ring)
        for t in range(h - 1, -1, -1):
            # coefficient of v^(h+t) in Q^2 is 2*q_h*q_t plus cross terms
            # q_u*q_s with u + s = h + t and t < u <= s < h
            acc = coeffs.get(h + t, zero)
            for u in range(t + 1, h):
                s = h + t - u
                if s < u:
                    break
                qu = q.get(u)
                qs = q.get(s)
                if qu is None or qs is None:
                    continue
                if u == s:
                    acc = acc - qu * qu
                else:
                    prod = qu * qs
                    acc = acc - prod - prod
            c = acc.divexact(two_lead)
            if c is None:
                return None
            if not c.is_zero():
                q[t] = c
        root = MPoly.zero(self.ring)
        for e, coef in q.items():
            root = root + coef.mul_term(_unit_mono(self.ring.n, v, e), f.one)
        if root * root == self:
            return root
        return None

    # -- rendering --

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        names = self.ring.names
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            cs = f.value_str(c) if hasattr(f, "value_str") else str(c)
            for i, e in enumerate(m):
                if e:
                    factors.append(names[i] + (f"^{e}" if e > 1 else ""))
            if not factors:
                parts.append(_coeff_str(cs))
            elif f.is_one(c):
                parts.append("*".join(factors))
            else:
                parts.append(_coeff_str(cs) + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self})"


def _unit_mono(n: int, idx: int, e: int) -> tuple:
    m = [0] * n
    m[idx] = e
    return tuple(m)


def _coeff_str(cs: str) -> str:
    return f"({cs})" if "+" in cs else cs
