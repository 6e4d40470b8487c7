"""Artin-Schreier preimage search with honest tri-state answers.

The map in question sends f to f^p - f.  Deciding membership of its
image is exact over finite towers (exhaustion) and certifiable over
purely transcendental function-field towers through degree bookkeeping:
for nonconstant polynomial f the image has total degree p * deg(f), and
for fractional f = N/D in lowest terms the image has denominator D^p.
Everything else is a bounded search that reports unknown on exhaustion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .mpoly import MPoly
from .tower import FieldElem, FieldTower

_SEARCH_CAP = 200_000  # hard cap on enumerated candidates per call


@dataclass(frozen=True)
class PreimageResult:
    status: str  # "yes" | "no" | "unknown"
    witness: FieldElem | None = None
    reason: str = ""
    tried: int = 0

    @property
    def found(self) -> bool:
        return self.status == "yes"

    @property
    def certified_absent(self) -> bool:
        return self.status == "no"

    def verify(self, alpha: FieldElem) -> bool:
        if self.status == "yes":
            return self.witness is not None and self.witness.artin_schreier_image() == alpha
        if self.status == "no":
            # re-derive the certificate
            again = artin_schreier_preimage(alpha, budget=0)
            return again.status == "no"
        return True


def artin_schreier_preimage(alpha: FieldElem, budget: int = 1) -> PreimageResult:
    """Search for f with f^p - f = alpha.

    Returns yes(f), a certified-absent answer, or unknown after a
    bounded search.  budget bounds the total degree of candidate
    numerators and denominators over function-field towers.
    """
    tower = alpha.tower
    p = tower.base.p
    if alpha.is_zero():
        return PreimageResult("yes", tower.zero(), "zero is its own preimage")

    if tower.is_finite():
        tried = 0
        for c in tower.enumerate_elements():
            tried += 1
            if c.artin_schreier_image() == alpha:
                return PreimageResult("yes", c, "finite exhaustion", tried)
        return PreimageResult("no", None, "finite exhaustion", tried)

    has_alg = bool(tower._alg_idx)
    tried = 0

    # constants are always worth a look, and over towers without
    # algebraic steps they settle the constant case completely
    for v in tower.base.elements():
        c = tower.from_base(v)
        tried += 1
        if c.artin_schreier_image() == alpha:
            return PreimageResult("yes", c, "constant preimage", tried)

    if not has_alg:
        if alpha.is_constant():
            # algebraically closed in the rational function field, so any
            # preimage of a constant is itself constant
            return PreimageResult("no", None, "constant exhaustion", tried)
        d_num = alpha.num.degree()
        d_den = alpha.den.degree()
        if d_den > 0 and d_den % p:
            return PreimageResult(
                "no", None, f"denominator degree {d_den} is not a multiple of {p}", tried
            )
        if d_num > d_den and d_num % p:
            return PreimageResult(
                "no", None, f"dominant degree {d_num} is not a multiple of {p}", tried
            )

    active = sorted(alpha.active_vars())
    for f in _iter_candidates(tower, active, budget):
        tried += 1
        if tried > _SEARCH_CAP:
            return PreimageResult("unknown", None, "search cap reached", tried)
        if f.artin_schreier_image() == alpha:
            return PreimageResult("yes", f, "bounded search", tried)
    return PreimageResult("unknown", None, "budget exhausted", tried)


def _iter_monomials(tower: FieldTower, var_idxs, max_deg: int):
    if max_deg < 0:
        return
    ranges = []
    for i in var_idxs:
        cap = max_deg
        if not tower.is_transcendental(i):
            cap = min(cap, tower.steps[i].degree - 1)
        ranges.append(range(cap + 1))
    for combo in itertools.product(*ranges):
        if sum(combo) <= max_deg:
            mono = [0] * tower.ring.n
            for i, e in zip(var_idxs, combo):
                mono[i] = e
            yield tuple(mono)


def _iter_polys(tower: FieldTower, var_idxs, max_deg: int, monic_only: bool = False):
    """All polynomials in the given variables up to a total degree, in a
    fixed deterministic order; skips constants and zero."""
    monos = sorted(_iter_monomials(tower, var_idxs, max_deg), key=lambda m: (sum(m), m))
    if len(monos) <= 1:
        return
    values = tower.base.elements()
    head_choices = [v for v in values if not tower.base.is_zero(v)]
    if monic_only:
        head_choices = [tower.base.one]
    # the leading slot walks over monomials from high to low so that low
    # degree candidates come out first overall
    for count in range(2, len(monos) + 1):
        support = monos[:count]
        for coeffs in itertools.product(values, repeat=count - 1):
            for lead in head_choices:
                terms = {}
                for m, c in zip(support[:-1], coeffs):
                    if not tower.base.is_zero(c):
                        terms[m] = c
                terms[support[-1]] = lead
                yield MPoly(tower.ring, terms)


def _iter_candidates(tower: FieldTower, var_idxs, budget: int):
    """Candidate field elements, polynomials first, then proper fractions."""
    if budget <= 0 or not var_idxs:
        return
    seen = set()
    for num in _iter_polys(tower, var_idxs, budget):
        e = tower.normalize(num)
        if e not in seen:
            seen.add(e)
            yield e
    for den in _iter_polys(tower, var_idxs, budget, monic_only=True):
        for num in _iter_polys(tower, var_idxs, budget):
            e = tower.normalize(num, den)
            if e.den.is_one():
                continue
            if e not in seen:
                seen.add(e)
                yield e
