"""Norm witnesses and the constructive inseparable-linkage procedure.

Given symbols [alpha, beta) and [alpha, gamma), a norm witness t with
reduced norm gamma in [alpha, beta) drives the construction: write
f = x_0 + x_1 i + ... + x_{p-1} i^{p-1} with indeterminate coefficients
and solve s_1(ft) = ... = s_{p-1}(ft) = 0.  For p = 2 the system is one
linear equation, solvable over the ground field; for p = 3 it is a
linear equation plus a quadratic, solvable after adjoining at most one
square root.  The resulting z = f(i) t satisfies z^p = N(f) gamma, a
central scalar, and the pair (i', z) with z i' z^{-1} = i' + 1 presents
the algebra with right slot N(f) gamma.  Scaling the second algebra's j
by the same f exhibits the common purely inseparable subfield.

All witnesses re-verify themselves by exact multiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cycalg import (
    AlgebraElement,
    SymbolAlgebra,
    char_coeffs,
    char_coeffs_symbolic,
    left_regular_matrix,
    make_symbol,
    norm_Fi,
    rewrite_scale_beta,
)
from .errors import (
    AlgebraMismatch,
    GammaZero,
    InternalCheckFailed,
    NoSolution,
    NoSolutionInBudget,
    NormMismatch,
    SlotHasPthRoot,
    UnsupportedPrime,
)
from .fieldkernel import FieldElem, FieldTower, artin_schreier_preimage
from .linalg import kernel_of_linear_form, solve_affine
from .results import TriState
from .valuation import DiscreteValuation, certify_not_inseparably_linked


@dataclass(frozen=True)
class DifferentialSymbolClass:
    """The formal class attached to (alpha, beta, gamma); symbolic only."""

    p: int
    alpha: FieldElem
    beta: FieldElem
    gamma: FieldElem

    def __post_init__(self):
        if self.beta.is_zero() or self.gamma.is_zero():
            raise GammaZero("beta and gamma must be nonzero")

    def inverted(self) -> "DifferentialSymbolClass":
        """The formal image under the slot-inversion rewrite of both symbols."""
        return DifferentialSymbolClass(
            self.p, -self.alpha, self.beta.inverse(), self.gamma.inverse()
        )


# -- reduced norm witnesses --


def _norm_of_fij_shape(A: SymbolAlgebra, f_coeffs, g0: FieldElem | None, b: int) -> FieldElem:
    """Reduced norm of g0 + f(i) j^b for b in 1..p-1, via the etale norm."""
    p = A.p
    nf = norm_Fi(A, f_coeffs)
    val = nf * (A.beta ** b)
    if g0 is not None and not g0.is_zero():
        val = val + g0 ** p
    return val


def _norm_of_fi_plus_j(A: SymbolAlgebra, f_coeffs) -> FieldElem:
    """Reduced norm of f(i) + j: beta - N(f) for p = 2, beta + N(f) for odd p."""
    nf = norm_Fi(A, f_coeffs)
    if A.p == 2:
        return A.beta - nf
    return A.beta + nf


def _witness_pool(A: SymbolAlgebra, gamma: FieldElem, budget: int):
    tw = A.tower
    cands = [
        tw.zero(),
        tw.one(),
        -tw.one(),
        A.alpha,
        A.beta,
        gamma,
        gamma - A.beta,
        A.beta - gamma,
        gamma + A.beta,
        A.alpha + A.beta,
        gamma * A.beta,
        -A.alpha,
    ]
    if budget > 1:
        cands += [
            gamma * A.beta.inverse(),
            A.alpha * gamma,
            A.alpha + gamma,
            gamma - A.alpha,
        ]
    for idx in range(tw.nvars):
        cands.append(tw.gen(idx))
    out, seen = [], set()
    for c in cands:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def reduced_norm_witness(A: SymbolAlgebra, gamma: FieldElem, budget: int = 2) -> TriState:
    """Search for t with reduced norm gamma; exact over finite towers.

    Candidates carrying a j part come first so that downstream linkage
    construction receives invertible witnesses outside F[i].
    """
    gamma = A.tower.coerce(gamma)
    if gamma.is_zero():
        raise GammaZero("the norm target must be nonzero")
    p = A.p
    tw = A.tower
    tried = 0

    def accept(t):
        s = char_coeffs(t)
        if s.norm == gamma:
            return TriState.yes(t, tried)
        return None

    # j first: witnesses with a j part stay usable for the linkage
    # construction, whereas elements of F[i] are provably degenerate there
    tried += 1
    hit = accept(A.gen_j())
    if hit:
        return hit

    if tw.is_finite():
        elems = list(tw.enumerate_elements())
        # f(i) + j sweeps every norm value over a finite field
        for coeffs in itertools.product(elems, repeat=p):
            tried += 1
            if _norm_of_fi_plus_j(A, list(coeffs)) == gamma:
                t = A.from_ipoly(list(coeffs)) + A.gen_j()
                hit = accept(t)
                if hit:
                    return hit
        # last resort: pure etale elements f(i)
        for coeffs in itertools.product(elems, repeat=p):
            tried += 1
            if norm_Fi(A, list(coeffs)) == gamma:
                t = A.from_ipoly(list(coeffs))
                hit = accept(t)
                if hit:
                    return hit
        return TriState.unknown(tried)

    pool = _witness_pool(A, gamma, budget)
    cap = max(budget, 1) * 2500
    count = 0
    for g0 in [None] + pool[:4]:
        for b in range(1, p):
            for coeffs in itertools.product(pool, repeat=p):
                count += 1
                if count > cap:
                    return TriState.unknown(tried)
                tried += 1
                f = list(coeffs)
                if g0 is None and b == 1:
                    target = _norm_of_fi_plus_j(A, f)
                    if target == gamma:
                        t = A.from_ipoly(f) + A.gen_j()
                        hit = accept(t)
                        if hit:
                            return hit
                nv = _norm_of_fij_shape(A, f, g0, b)
                if nv == gamma:
                    t = A.from_ipoly(f) * (A.gen_j() ** b)
                    if g0 is not None and not g0.is_zero():
                        t = t + A.scalar(g0)
                    hit = accept(t)
                    if hit:
                        return hit
    # etale fallback: a witness even if degenerate for linkage purposes
    for t in (A.one(), A.gen_i()):
        tried += 1
        hit = accept(t)
        if hit:
            return hit
    for coeffs in itertools.islice(itertools.product(pool, repeat=p), cap):
        tried += 1
        if norm_Fi(A, list(coeffs)) == gamma:
            t = A.from_ipoly(list(coeffs))
            hit = accept(t)
            if hit:
                return hit
    return TriState.unknown(tried)


# -- linkage witnesses --


@dataclass(frozen=True)
class LinkageWitness:
    """Self-verifying output of the inseparable-linkage construction."""

    alpha: FieldElem
    beta: FieldElem
    gamma: FieldElem
    extension: FieldTower
    algebra_ext: SymbolAlgebra  # [alpha, beta) over the extension
    f: tuple  # coefficients over the extension, length p
    t: AlgebraElement  # the norm witness, over the extension
    z: AlgebraElement  # f(i) t
    slot: FieldElem  # N(f) gamma = z^p
    delta: FieldElem
    delta_generator: AlgebraElement  # i' with z i' z^{-1} = i' + 1

    @property
    def extension_degree(self) -> int:
        base_steps = len(self.alpha.tower.steps)
        deg = 1
        for step in self.extension.steps[base_steps:]:
            deg *= step.degree
        return deg

    def verify(self) -> bool:
        A = self.algebra_ext
        p = A.p
        ext = self.extension
        if self.z.is_zero() or self.z.is_central():
            return False
        if self.extension_degree % p == 0:
            return False
        if self.slot.is_zero():
            return False
        # z noncentral with z^p the central scalar `slot` pins the reduced
        # characteristic polynomial of z to y^p - slot
        if (self.z ** p) != A.scalar(self.slot):
            return False
        if self.slot != norm_Fi(A, list(self.f)) * self.gamma.embed(ext):
            return False
        d = _central_delta(A, self.z, self.delta_generator)
        if d is None or d != self.delta:
            return False
        # same f exhibits the common slot in [alpha, gamma)
        B = make_symbol(p, self.alpha.embed(ext), self.gamma.embed(ext))
        _, w = rewrite_scale_beta(B, list(self.f))
        zb = w.j_image
        if (zb ** p) != B.scalar(self.slot):
            return False
        return not zb.is_central()

    def partner_slot_element(self) -> AlgebraElement:
        """z_B = f(i) j inside [alpha, gamma) over the extension."""
        B = make_symbol(self.algebra_ext.p, self.alpha.embed(self.extension), self.gamma.embed(self.extension))
        _, w = rewrite_scale_beta(B, list(self.f))
        return w.j_image


def _delta_via_trace(A: SymbolAlgebra, z: AlgebraElement, slot: FieldElem):
    """Additive Hilbert 90 for the conjugation by z.

    With phi(w) = z w z^{-1} of order p, any theta whose phi-trace s is
    an invertible element of F[z] yields u = -(sum k phi^k(theta)) s^{-1}
    with phi(u) = u + 1.  Keeps all arithmetic polynomial sized.
    """
    p = A.p
    tw = A.tower
    zpow = [A.one()]
    for _ in range(p):
        zpow.append(zpow[-1] * z)
    mat = [
        [zpow[k].coeffs[c][d] for k in range(p)]
        for c in range(p)
        for d in range(p)
    ]
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue  # the trace of a scalar is p times it, hence zero
            theta = A.basis(a, b)
            # raw[k] = z^k theta z^(p-k) = slot * phi^k(theta): polynomial
            raw = [theta.scale(slot)]
            for k in range(1, p):
                raw.append(zpow[k] * theta * zpow[p - k])
            S = A.zero()
            for w in raw:
                S = S + w
            if S.is_zero():
                continue
            # express S inside F[z] and invert it there
            rhs = [S.coeffs[c][d] for c in range(p) for d in range(p)]
            sol = solve_affine(mat, rhs, tw)
            if sol is None:
                continue
            coeffs, _ = sol
            if all(c.is_zero() for c in coeffs[1:]) and coeffs[0].is_zero():
                continue
            m = [-slot] + [tw.zero()] * (p - 1) + [tw.one()]
            try:
                from .fieldkernel.tower import _uv_modinv

                ginv = _uv_modinv(tw, list(coeffs), m)
            except Exception:
                continue
            s_inv = A.zero()
            for k, c in enumerate(ginv):
                s_inv = s_inv + zpow[k].scale(c)
            acc = A.zero()
            for k in range(1, p):
                acc = acc + raw[k].scale(tw.from_int(k))
            # the slot factors of acc and of S's inverse cancel
            u = (-acc) * s_inv
            d = _central_delta(A, z, u)
            if d is not None:
                return d, u
    return None


def _central_delta(A: SymbolAlgebra, z: AlgebraElement, u: AlgebraElement):
    """delta = u^p - u when u is a conjugation generator for z, else None.

    Works on denominator-cleared coordinates so that all powering stays
    polynomial: with u = U/D, the relation z u - u z = z becomes
    z U - U z = D z and u^p - u = (U^p - D^(p-1) U) / D^p.
    """
    from .cycalg import denominator_cleared

    p = A.p
    U, D = denominator_cleared(u)
    if (z * U - U * z) != z.scale(D):
        return None
    W = U ** p - U.scale(D ** (p - 1))
    if not W.is_scalar():
        return None
    return W.scalar_value() * (D ** p).inverse()


def construct_delta(A: SymbolAlgebra, z: AlgebraElement):
    """Find i' with z i' z^{-1} = i' + 1 and delta = i'^p - i' central.

    A trace-based construction is tried first; if it finds nothing the
    linear system z w - w z = z is solved over the p^2 coordinates and
    the affine solution set walked until delta lands in the center.
    """
    if z.algebra != A:
        raise AlgebraMismatch("element does not belong to the given algebra")
    p = A.p
    tw = A.tower
    if z.is_central():
        raise NoSolution("z is central")
    zp = z ** p
    if not zp.is_scalar() or zp.scalar_value().is_zero():
        raise NoSolution("z^p is not a central nonzero scalar")
    fast = _delta_via_trace(A, z, zp.scalar_value())
    if fast is not None:
        return fast
    # the conjugation equation is invariant under scaling z, so clear
    # coordinate denominators to keep the elimination polynomial
    from .fieldkernel.mpoly import MPoly

    dlcm = MPoly.one(tw.ring)
    for row in z.coeffs:
        for c in row:
            if not c.den.is_one():
                dlcm = MPoly.lcm(dlcm, c.den)
    if not dlcm.is_one():
        z = z.scale(tw.normalize(dlcm))
    n = p * p
    Lz = left_regular_matrix(z)
    # right multiplication matrix: column (a, b) holds coords of e_ab * z
    Rz = [[tw.zero()] * n for _ in range(n)]
    for a in range(p):
        for b in range(p):
            col = a * p + b
            img = A.basis(a, b) * z
            for c in range(p):
                for d in range(p):
                    Rz[c * p + d][col] = img.coeffs[c][d]
    M = [[Lz[r][c] - Rz[r][c] for c in range(n)] for r in range(n)]
    rhs = [z.coeffs[a][b] for a in range(p) for b in range(p)]
    sol = solve_affine(M, rhs, tw)
    if sol is None:
        raise NoSolution("no conjugation generator exists for this z")
    particular, basis = sol

    def as_elem(vec):
        return A.element([vec[a * p: (a + 1) * p] for a in range(p)])

    candidates = [particular]
    for vec in basis:
        candidates.append([x + y for x, y in zip(particular, vec)])
    for v1, v2 in itertools.combinations(basis, 2):
        candidates.append([x + y + w for x, y, w in zip(particular, v1, v2)])
    for vec in candidates[: 4 + len(basis) * 3]:
        i2 = as_elem(vec)
        d = _central_delta(A, z, i2)
        if d is not None:
            return d, i2
    raise NoSolution("no solution yields a central delta")


def _element_order_key(vec):
    return tuple(e.sort_key() for e in vec)


def _iter_kernel_vectors(coeff_row, tower, finite_enumerate: bool):
    """Nontrivial solutions of a linear form, deterministically ordered."""
    basis = kernel_of_linear_form(coeff_row, tower)
    if not basis:
        return
    if finite_enumerate:
        elems = list(tower.enumerate_elements())
        seen = set()
        combos = sorted(
            (
                tuple(sum((c * v for c, v in zip(cs, col)), tower.zero()) for col in zip(*basis))
                for cs in itertools.product(elems, repeat=len(basis))
            ),
            key=_element_order_key,
        )
        for vec in combos:
            if all(x.is_zero() for x in vec):
                continue
            if vec not in seen:
                seen.add(vec)
                yield list(vec)
        return
    ordered = sorted((tuple(v) for v in basis), key=_element_order_key)
    for vec in ordered:
        yield list(vec)
    for v1, v2 in itertools.combinations(ordered, 2):
        yield [x + y for x, y in zip(v1, v2)]


def _quadratic_zero_candidates(a2, b2, c2, tower, budget):
    """Nontrivial zeros of a2 l^2 + b2 l m + c2 m^2, with the extension
    tower when the discriminant forces one; yields (tower, (l, m))."""
    zero, one = tower.zero(), tower.one()
    if a2.is_zero() and b2.is_zero() and c2.is_zero():
        for pair in ((zero, one), (one, zero), (one, one)):
            yield tower, pair
        return
    if c2.is_zero():
        yield tower, (zero, one)
        if not a2.is_zero() and not b2.is_zero():
            # a2 l + b2 m = 0 branch of l (a2 l + b2 m)
            yield tower, (b2, -a2)
        if a2.is_zero():
            yield tower, (one, zero)
        return
    if a2.is_zero():
        yield tower, (one, zero)
        if not b2.is_zero():
            yield tower, (-c2, b2)
        return
    # both outer coefficients nonzero: solve c2 m^2 + b2 m + a2 = 0 at l = 1
    disc = b2 * b2 - tower.from_int(4) * a2 * c2
    root = tower.sqrt(disc)
    if root is not None:
        inv = (tower.from_int(2) * c2).inverse()
        m1 = (-b2 + root) * inv
        m2 = (-b2 - root) * inv
        pairs = sorted({(one, m1), (one, m2)}, key=_element_order_key)
        for pair in pairs:
            yield tower, pair
        return
    if budget < 1:
        return
    name = "r"
    while name in tower.ring.names:
        name += "r"
    # adjoin d*sqrt(disc) where d clears the denominator: the minimal
    # polynomial stays polynomial, so theta-reduction stays fraction free
    d_elem = tower.normalize(disc.den)
    disc_clean = disc * d_elem * d_elem
    ext = tower.extend_algebraic(name, [-disc_clean, tower.zero(), tower.one()])
    root = ext.gen_by_name(name) / d_elem.embed(ext)
    inv = (ext.from_int(2) * c2.embed(ext)).inverse()
    b2e = b2.embed(ext)
    m1 = (-b2e + root) * inv
    m2 = (-b2e - root) * inv
    for pair in sorted({(ext.one(), m1), (ext.one(), m2)}, key=_element_order_key):
        yield ext, pair


def make_inseparably_linked(
    alpha: FieldElem,
    beta: FieldElem,
    gamma: FieldElem,
    t: AlgebraElement,
    budget: int = 2,
) -> LinkageWitness:
    """Construct a common purely inseparable slot for [alpha, beta) and
    [alpha, gamma) from a norm witness t, over an extension of degree
    at most 2 (and exactly 1 when p = 2)."""
    tower = alpha.tower
    alpha = tower.coerce(alpha)
    beta = tower.coerce(beta)
    gamma = tower.coerce(gamma)
    A = make_symbol(t.algebra.p, alpha, beta)
    if t.algebra != A:
        raise AlgebraMismatch("t must live in [alpha, beta) over the given tower")
    p = A.p
    if p not in (2, 3):
        raise UnsupportedPrime("constructive solving is implemented for p in {2, 3}")
    if gamma.is_zero():
        raise GammaZero("gamma must be nonzero")
    if char_coeffs(t).norm != gamma:
        raise NormMismatch("t does not have reduced norm gamma")

    sym = char_coeffs_symbolic(A, t)
    lin = sym.form_coefficients(1)
    unit = lambda a: tuple(1 if k == a else 0 for k in range(p))
    row = [lin.get(unit(a), tower.zero()) for a in range(p)]

    def finish(ext_tower, fvec):
        ext_A = A.embed_to(ext_tower) if ext_tower != tower else A
        t_ext = t.embed(ext_A) if ext_tower != tower else t
        f = [ext_tower.coerce(c) for c in fvec]
        if all(c.is_zero() for c in f):
            return None
        # the system is homogeneous: scale f to clear denominators, then
        # divide out any common polynomial factor to keep degrees small
        from .fieldkernel.mpoly import MPoly

        dlcm = MPoly.one(ext_tower.ring)
        for c in f:
            if not c.den.is_one():
                dlcm = MPoly.lcm(dlcm, c.den)
        if not dlcm.is_one():
            scale = ext_tower.normalize(dlcm)
            f = [c * scale for c in f]
        content = MPoly.zero(ext_tower.ring)
        for c in f:
            content = MPoly.gcd(content, c.num)
            if content.is_one():
                break
        if not content.is_one() and not content.is_const():
            f = [ext_tower.normalize(c.num.divexact(content)) for c in f]
        fi = ext_A.from_ipoly(f)
        z = fi * t_ext
        if z.is_zero() or z.is_central():
            return None
        nf = norm_Fi(ext_A, f)
        if nf.is_zero():
            # f(i) is a zero divisor; the slot would collapse to zero
            return None
        slot = nf * gamma.embed(ext_tower)
        if (z ** p) != ext_A.scalar(slot):
            raise InternalCheckFailed("z^p does not match N(f) gamma")
        delta, i2 = construct_delta(ext_A, z)
        witness = LinkageWitness(
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            extension=ext_tower,
            algebra_ext=ext_A,
            f=tuple(f),
            t=t_ext,
            z=z,
            slot=slot,
            delta=delta,
            delta_generator=i2,
        )
        if not witness.verify():
            raise InternalCheckFailed("linkage witness failed self-verification")
        return witness

    if p == 2:
        for vec in _iter_kernel_vectors(row, tower, tower.is_finite()):
            w = finish(tower, vec)
            if w is not None:
                return w
        raise NoSolutionInBudget("all kernel solutions were degenerate")

    # p == 3: restrict the quadratic form s_2 to the kernel plane of s_1
    quad = sym.form_coefficients(2)

    def q_eval(vec):
        total = tower.zero()
        for mono, coef in quad.items():
            term = coef
            for a, e in enumerate(mono):
                for _ in range(e):
                    term = term * vec[a]
            total = total + term
        return total

    if tower.is_finite():
        for vec in _iter_kernel_vectors(row, tower, True):
            if not q_eval(vec).is_zero():
                continue
            w = finish(tower, vec)
            if w is not None:
                return w
        # no rational kernel zero: fall through to the quadratic extension

    basis = kernel_of_linear_form(row, tower)
    if not basis:
        raise NoSolutionInBudget("the linear condition has no nontrivial kernel")
    basis = sorted((tuple(v) for v in basis), key=_element_order_key)
    v1 = list(basis[0])
    v2 = list(basis[1]) if len(basis) > 1 else None
    if v2 is None:
        # kernel is a line; z must come from scalar multiples of v1
        if q_eval(v1).is_zero():
            w = finish(tower, v1)
            if w is not None:
                return w
        raise NoSolutionInBudget("kernel line misses the quadratic")
    a2 = q_eval(v1)
    c2 = q_eval(v2)
    b2 = q_eval([x + y for x, y in zip(v1, v2)]) - a2 - c2
    for ext_tower, (lam, mu) in _quadratic_zero_candidates(a2, b2, c2, tower, budget):
        if ext_tower == tower:
            vec = [lam * x + mu * y for x, y in zip(v1, v2)]
            w = finish(tower, vec)
        else:
            v1e = [x.embed(ext_tower) for x in v1]
            v2e = [x.embed(ext_tower) for x in v2]
            vec = [lam * x + mu * y for x, y in zip(v1e, v2e)]
            w = finish(ext_tower, vec)
        if w is not None:
            return w
    raise NoSolutionInBudget("quadratic solutions were exhausted or degenerate")


# -- inseparable linkage verification --


@dataclass(frozen=True)
class InseparableLinkEvidence:
    ok: bool
    slot: FieldElem
    z_a: AlgebraElement | None = None
    z_b: AlgebraElement | None = None
    tried: int = 0

    def verify(self, A: SymbolAlgebra, B: SymbolAlgebra) -> bool:
        if not self.ok:
            return False
        for z, alg in ((self.z_a, A), (self.z_b, B)):
            if z is None or z.algebra != alg or z.is_central():
                return False
            zp = z ** alg.p
            if not zp.is_scalar() or zp.scalar_value() != self.slot:
                return False
        return True


def _find_slot_element(A: SymbolAlgebra, slot: FieldElem, budget: int):
    """Search z noncentral with z^p = slot, over shapes g0 + f(i) j^b."""
    p = A.p
    tw = A.tower
    tried = 0

    def check(z):
        if z.is_zero() or z.is_central():
            return None
        zp = z ** p
        if zp.is_scalar() and zp.scalar_value() == slot:
            return z
        return None

    if tw.is_finite():
        elems = list(tw.enumerate_elements())
        g0_pool = elems
        f_iter = lambda: itertools.product(elems, repeat=p)
    else:
        pool = _witness_pool(A, slot, budget)
        g0_pool = pool[:6]
        f_iter = lambda: itertools.product(pool, repeat=p)

    cap = max(budget, 1) * (20000 if tw.is_finite() else 600)
    for b in range(1, p):
        beta_b = A.beta ** b
        for g0 in g0_pool:
            target = (slot - g0 ** p) * beta_b.inverse()
            for coeffs in f_iter():
                tried += 1
                if tried > cap:
                    return None, tried
                if norm_Fi(A, list(coeffs)) == target:
                    z = A.from_ipoly(list(coeffs)) * (A.gen_j() ** b)
                    if not g0.is_zero():
                        z = z + A.scalar(g0)
                    hit = check(z)
                    if hit is not None:
                        return hit, tried
    return None, tried


def verify_inseparable_linkage(
    A: SymbolAlgebra,
    B: SymbolAlgebra,
    slot: FieldElem,
    z_a: AlgebraElement | None = None,
    z_b: AlgebraElement | None = None,
    budget: int = 2,
) -> InseparableLinkEvidence:
    """Exhibit noncentral z_a in A and z_b in B with z^p = slot.

    Supplied candidates are verified; missing ones are searched for.
    The slot must span a genuine degree-p purely inseparable extension,
    so a p-th power slot is rejected.
    """
    tower = A.tower
    slot = tower.coerce(slot)
    if slot.is_zero():
        raise SlotHasPthRoot("slot must be nonzero")
    if slot.pth_root() is not None:
        raise SlotHasPthRoot("slot is a p-th power, the subfield would be trivial")
    if B.tower != tower or B.p != A.p:
        raise AlgebraMismatch("algebras must share a tower and degree")
    p = A.p
    tried = 0

    def validate(z, alg):
        if z is None:
            return None
        if z.algebra != alg or z.is_central() or z.is_zero():
            return None
        zp = z ** p
        if zp.is_scalar() and zp.scalar_value() == slot:
            return z
        return None

    za = validate(z_a, A)
    if za is None:
        za, n = _find_slot_element(A, slot, budget)
        tried += n
    zb = validate(z_b, B)
    if zb is None:
        zb, n = _find_slot_element(B, slot, budget)
        tried += n
    ok = za is not None and zb is not None
    return InseparableLinkEvidence(ok=ok, slot=slot, z_a=za, z_b=zb, tried=tried)


# -- class triviality and cyclic linkage --


def h3_class_trivial(c: DifferentialSymbolClass, budget: int = 2) -> TriState:
    """Triviality of the class attached to (alpha, beta, gamma).

    Yes(t): gamma is a reduced norm of [alpha, beta).  No(certificate):
    a valuation certificate shows the pair can never become inseparably
    linked, which contradicts triviality.  Unknown otherwise.
    """
    A = make_symbol(c.p, c.alpha, c.beta)
    w = reduced_norm_witness(A, c.gamma, budget=budget)
    if w.is_yes:
        return w
    B = make_symbol(c.p, c.alpha, c.gamma)
    tower = c.alpha.tower
    from .errors import UnsupportedConfiguration

    for idx in reversed(range(tower.nvars)):
        if not tower.is_transcendental(idx):
            continue
        try:
            v = DiscreteValuation(tower, tower.ring.names[idx])
        except UnsupportedConfiguration:
            continue
        cert = certify_not_inseparably_linked(A, B, v, budget=budget)
        if cert is not None:
            return TriState.no(cert, w.tried)
    return TriState.unknown(w.tried)


@dataclass(frozen=True)
class CyclicLinkEvidence:
    """A shared cyclic degree-p subfield, exhibited by generators."""

    multiplier: int  # m with alpha_B = m alpha_A + (c^p - c)
    shift: FieldElem  # the c above
    class_elem: FieldElem  # common Artin-Schreier class alpha_B
    w_a: AlgebraElement
    w_b: AlgebraElement

    def verify(self, A: SymbolAlgebra, B: SymbolAlgebra) -> bool:
        for w, alg in ((self.w_a, A), (self.w_b, B)):
            if w.algebra != alg or w.is_central():
                return False
            img = w ** alg.p - w
            if not img.is_scalar() or img.scalar_value() != self.class_elem:
                return False
        return True


def cyclic_linkage_check(A: SymbolAlgebra, B: SymbolAlgebra, budget: int = 2) -> TriState:
    """Shared cyclic degree-p subfield detection.

    Yes when alpha_B is equivalent to a prime-field multiple of alpha_A
    modulo Artin-Schreier images (both algebras then contain generators
    of the same cyclic extension); bounded search otherwise; never
    claims No.
    """
    if A.tower != B.tower or A.p != B.p:
        raise AlgebraMismatch("algebras must share a tower and degree")
    p = A.p
    tried = 0
    for m in range(1, p):
        diff = B.alpha - A.alpha * A.tower.from_int(m)
        pre = artin_schreier_preimage(diff, budget=budget)
        tried += pre.tried
        if pre.found:
            c = pre.witness
            w_a = A.gen_i().scale(A.tower.from_int(m)) + A.scalar(c)
            w_b = B.gen_i()
            ev = CyclicLinkEvidence(m, c, B.alpha, w_a, w_b)
            if not ev.verify(A, B):
                raise InternalCheckFailed("cyclic linkage evidence failed recheck")
            return TriState.yes(ev, tried)
    return TriState.unknown(tried)
