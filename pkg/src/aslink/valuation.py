"""Adic valuations on tower variables, with division and non-linkage
certificates.

Only rank-1 valuations attached to transcendental tower generators are
supported, applied recursively to residue towers.  A symbol [alpha,
beta) with v(alpha) >= 0 classifies as unramified when v(beta) is a
multiple of p (residue symbol over the residue field) and as totally
ramified otherwise (residue data: the Artin-Schreier class of the
residue of alpha).  A totally ramified symbol whose residue class is
certifiably nontrivial is a division algebra; pairing such a symbol
with an unramified one whose residue symbol is division certifies that
the two can never share a purely inseparable maximal subfield, over the
base field or over any extension of degree prime to p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycalg import SymbolAlgebra, find_zero_divisor, make_symbol
from .errors import ResidueUndecided, UnsupportedConfiguration
from .fieldkernel import FieldElem, FieldTower, ValueGroup, artin_schreier_preimage
from .fieldkernel.mpoly import MPoly
from .results import TriState

INF = float("inf")

UNRAMIFIED = "unramified"
TOTALLY_RAMIFIED = "totally_ramified"


class DiscreteValuation:
    """The x-adic valuation attached to a transcendental tower generator."""

    __slots__ = ("tower", "var", "residue_tower")

    def __init__(self, tower: FieldTower, var_name: str):
        idx = tower.var_index(var_name)
        if not tower.is_transcendental(idx):
            raise UnsupportedConfiguration(
                f"{var_name!r} is an algebraic generator; only transcendental "
                "generators carry adic valuations here"
            )
        for step in tower.steps:
            if step.is_algebraic:
                for c in step.minpoly:
                    if any(m[idx] for m in c.num.terms) or any(m[idx] for m in c.den.terms):
                        raise UnsupportedConfiguration(
                            f"an algebraic step references {var_name!r}; the "
                            "residue tower would not be well defined"
                        )
        self.tower = tower
        self.var = idx
        self.residue_tower = self._build_residue_tower()

    def _build_residue_tower(self) -> FieldTower:
        res = FieldTower(self.tower.base)
        for pos, step in enumerate(self.tower.steps):
            if pos == self.var:
                continue
            if step.is_algebraic:
                coeffs = [self._project(c, res) for c in step.minpoly]
                coeffs.append(res.one())
                res = res.extend_algebraic(step.name, coeffs, check=False)
            else:
                res = res.extend_transcendental(step.name)
        return res

    def _project(self, e: FieldElem, res_tower: FieldTower) -> FieldElem:
        # e must not involve the uniformizer; drop its exponent slot
        num = MPoly(
            res_tower.ring,
            {m[: self.var] + m[self.var + 1:]: c for m, c in e.num.terms.items()},
        )
        den = MPoly(
            res_tower.ring,
            {m[: self.var] + m[self.var + 1:]: c for m, c in e.den.terms.items()},
        )
        return res_tower._make(num, den)

    @property
    def uniformizer_name(self) -> str:
        return self.tower.ring.names[self.var]

    def value(self, e: FieldElem):
        """Order of vanishing at the uniformizer; +inf for zero."""
        e = self.tower.coerce(e)
        if e.is_zero():
            return INF
        return Fraction(e.num.ord_var(self.var) - e.den.ord_var(self.var))

    def residue(self, e: FieldElem) -> FieldElem:
        """Image in the residue field; requires v(e) >= 0."""
        e = self.tower.coerce(e)
        v = self.value(e)
        if v == INF or v > 0:
            return self.residue_tower.zero()
        if v < 0:
            raise UnsupportedConfiguration("residue of an element of negative value")
        num0 = e.num.subs_var_zero(self.var)
        den0 = e.den.subs_var_zero(self.var)
        num = MPoly(
            self.residue_tower.ring,
            {m[: self.var] + m[self.var + 1:]: c for m, c in num0.terms.items()},
        )
        den = MPoly(
            self.residue_tower.ring,
            {m[: self.var] + m[self.var + 1:]: c for m, c in den0.terms.items()},
        )
        return self.residue_tower._make(num, den)

    def unit_part(self, e: FieldElem) -> FieldElem:
        """e * x^(-v(e)), a v-unit."""
        e = self.tower.coerce(e)
        if e.is_zero():
            raise UnsupportedConfiguration("zero has no unit part")
        w = int(self.value(e))
        return e * (self.tower.gen(self.var) ** (-w))


@dataclass(frozen=True)
class SymbolValuationData:
    """Classification of a symbol algebra at one adic valuation."""

    algebra: SymbolAlgebra
    valuation: DiscreteValuation
    kind: str
    value_group: ValueGroup
    residue_alpha: FieldElem
    residue_symbol: SymbolAlgebra | None = None  # unramified case
    residue_nontrivial: bool | None = None  # totally ramified case
    residue_evidence: object = None

    @property
    def group_index(self) -> int:
        return self.value_group.index

    @property
    def residue_dimension(self) -> int:
        p = self.algebra.p
        return p * p if self.kind == UNRAMIFIED else p

    def defectless(self) -> bool:
        return self.group_index * self.residue_dimension == self.algebra.p ** 2

    def verify(self) -> bool:
        try:
            again = analyze_symbol(self.valuation, self.algebra)
        except (UnsupportedConfiguration, ResidueUndecided):
            return False
        return (
            again.kind == self.kind
            and again.value_group == self.value_group
            and again.residue_alpha == self.residue_alpha
            and again.residue_nontrivial == self.residue_nontrivial
            and self.defectless()
        )


def analyze_symbol(v: DiscreteValuation, A: SymbolAlgebra, budget: int = 2) -> SymbolValuationData:
    """Classify [alpha, beta) at v as unramified or totally ramified."""
    if A.tower != v.tower:
        raise UnsupportedConfiguration("valuation and algebra live on different towers")
    p = A.p
    if v.value(A.alpha) < 0:
        raise UnsupportedConfiguration(
            "v(alpha) < 0 left-slot ramification is out of scope; translate "
            "alpha by an Artin-Schreier image first"
        )
    abar = v.residue(A.alpha)
    w = int(v.value(A.beta))
    if w % p == 0:
        bbar = v.residue(A.beta * (v.tower.gen(v.var) ** (-w)))
        return SymbolValuationData(
            algebra=A,
            valuation=v,
            kind=UNRAMIFIED,
            value_group=ValueGroup(Fraction(1)),
            residue_alpha=abar,
            residue_symbol=make_symbol(p, abar, bbar),
        )
    pre = artin_schreier_preimage(abar, budget=budget)
    if pre.status == "unknown":
        raise ResidueUndecided(
            "could not decide the residue Artin-Schreier class within budget"
        )
    return SymbolValuationData(
        algebra=A,
        valuation=v,
        kind=TOTALLY_RAMIFIED,
        value_group=ValueGroup(Fraction(1, p)),
        residue_alpha=abar,
        residue_nontrivial=pre.certified_absent,
        residue_evidence=pre,
    )


@dataclass(frozen=True)
class DivisionCertificate:
    """A chain of adic analyses ending in a ramified nontrivial residue."""

    algebra: SymbolAlgebra
    chain: tuple  # of SymbolValuationData; all but the last unramified

    def verify(self) -> bool:
        current = self.algebra
        for k, data in enumerate(self.chain):
            if data.algebra != current or not data.verify():
                return False
            last = k == len(self.chain) - 1
            if last:
                if data.kind != TOTALLY_RAMIFIED or not data.residue_nontrivial:
                    return False
            else:
                if data.kind != UNRAMIFIED:
                    return False
                current = data.residue_symbol
        return bool(self.chain)

    def describe(self) -> list[str]:
        out = []
        for data in self.chain:
            name = data.valuation.uniformizer_name
            if data.kind == UNRAMIFIED:
                out.append(
                    f"{name}-adic: unramified, value group Z, residue symbol "
                    f"[{data.residue_symbol.alpha}, {data.residue_symbol.beta})"
                )
            else:
                out.append(
                    f"{name}-adic: totally ramified, value group (1/{data.algebra.p})Z, "
                    f"residue class of {data.residue_alpha} certifiably not an "
                    "Artin-Schreier image, so the residue extension is a field"
                )
        return out


def certify_division(A: SymbolAlgebra, budget: int = 2, seed: int = 0) -> TriState:
    """Yes(DivisionCertificate) | No(zero divisor) | Unknown.

    Route: zero-divisor search first, then each adic analysis; an
    unramified classification recurses on the residue symbol.
    """
    zd = find_zero_divisor(A, budget=budget, seed=seed)
    if zd.is_yes:
        return TriState.no(zd.evidence, zd.tried)

    def attempt(symbol: SymbolAlgebra, prefix: tuple):
        tower = symbol.tower
        for idx in reversed(range(tower.nvars)):
            if not tower.is_transcendental(idx):
                continue
            try:
                v = DiscreteValuation(tower, tower.ring.names[idx])
                data = analyze_symbol(v, symbol, budget=budget)
            except (UnsupportedConfiguration, ResidueUndecided):
                continue
            if data.kind == TOTALLY_RAMIFIED and data.residue_nontrivial:
                return prefix + (data,)
            if data.kind == UNRAMIFIED:
                deeper = attempt(data.residue_symbol, prefix + (data,))
                if deeper is not None:
                    return deeper
        return None

    chain = attempt(A, ())
    if chain is not None:
        cert = DivisionCertificate(A, chain)
        return TriState.yes(cert, zd.tried)
    return TriState.unknown(zd.tried)


@dataclass(frozen=True)
class NonLinkageCertificate:
    """Evidence that two symbols share no purely inseparable maximal
    subfield, stable under restriction to extensions of degree prime to p.

    One symbol is totally ramified with separable (nontrivial
    Artin-Schreier) residue data, the other is unramified with a
    division residue symbol.  Any common maximal subfield would have to
    be unramified and defectless, hence with residue a degree-p
    subextension of the ramified algebra's residue field, which is
    separable; value groups only grow by prime-to-p index under
    prime-to-p extensions, so the argument persists.
    """

    ramified: SymbolValuationData
    unramified: SymbolValuationData
    residue_division: DivisionCertificate
    statement: tuple

    @property
    def valuation(self) -> DiscreteValuation:
        return self.ramified.valuation

    def verify(self) -> bool:
        if self.ramified.kind != TOTALLY_RAMIFIED or not self.ramified.residue_nontrivial:
            return False
        if self.unramified.kind != UNRAMIFIED:
            return False
        if not self.ramified.verify() or not self.unramified.verify():
            return False
        if self.residue_division.algebra != self.unramified.residue_symbol:
            return False
        if not self.residue_division.verify():
            return False
        pre = self.ramified.residue_evidence
        return pre is not None and pre.verify(self.ramified.residue_alpha)


def certify_not_inseparably_linked(
    A: SymbolAlgebra, B: SymbolAlgebra, v: DiscreteValuation, budget: int = 2
):
    """A NonLinkageCertificate for (A, B) at v, or None.

    Absence of a certificate is not a linkage claim.
    """
    def analyze(symbol):
        try:
            return analyze_symbol(v, symbol, budget=budget)
        except (UnsupportedConfiguration, ResidueUndecided):
            return None

    da = analyze(A)
    db = analyze(B)
    if da is None or db is None:
        return None
    for ram, unram in ((da, db), (db, da)):
        if ram.kind != TOTALLY_RAMIFIED or not ram.residue_nontrivial:
            continue
        if unram.kind != UNRAMIFIED:
            continue
        rec = certify_division(unram.residue_symbol, budget=budget)
        if not rec.is_yes:
            continue
        x = v.uniformizer_name
        p = A.p
        statement = (
            f"value groups at the {x}-adic valuation: (1/{p})Z for the ramified "
            "symbol, Z for the unramified one; their intersection is Z",
            "both symbols are defectless, so any common maximal subfield is "
            "defectless with value group Z and residue a degree-p extension "
            "of the residue field",
            "the ramified symbol forces that residue to be its own residue "
            "field, a separable Artin-Schreier extension, so no common "
            "subfield is purely inseparable",
            "under a prime-to-p extension the value group index stays prime "
            "to p, so the same comparison applies verbatim",
        )
        return NonLinkageCertificate(
            ramified=ram,
            unramified=unram,
            residue_division=rec.evidence,
            statement=statement,
        )
    return None
