"""Exact arithmetic in towers of fields over GF(p^k).

The public surface mirrors the operation names used by the rest of the
package: normalize, frobenius, pth_root, artin_schreier_image,
artin_schreier_preimage, and extend.
"""

from .asmaps import PreimageResult, artin_schreier_preimage
from .basefield import BaseField, base_field, prime_power
from .mpoly import MPoly, MRing, mring
from .tower import FieldElem, FieldTower, TowerStep, ValueGroup

__all__ = [
    "BaseField",
    "FieldElem",
    "FieldTower",
    "MPoly",
    "MRing",
    "PreimageResult",
    "TowerStep",
    "ValueGroup",
    "artin_schreier_image",
    "artin_schreier_preimage",
    "base_field",
    "extend",
    "frobenius",
    "mring",
    "normalize",
    "prime_power",
    "pth_root",
]


def normalize(tower: FieldTower, num, den=None) -> FieldElem:
    """Canonicalize a raw fraction of polynomials over the tower."""
    return tower.normalize(num, den)


def frobenius(e: FieldElem) -> FieldElem:
    """e raised to the characteristic, computed exactly."""
    return e.frobenius()


def pth_root(e: FieldElem):
    """The unique p-th root of e within its tower, or None."""
    return e.pth_root()


def artin_schreier_image(e: FieldElem) -> FieldElem:
    """e^p - e."""
    return e.artin_schreier_image()


def extend(tower: FieldTower, step) -> FieldTower:
    """Extend a tower by one step.

    step is ("trans", name) or ("alg", name, coeffs) where coeffs lists
    the monic minimal polynomial low degree first including the leading 1.
    """
    kind = step[0]
    if kind == "trans":
        return tower.extend_transcendental(step[1])
    if kind == "alg":
        return tower.extend_algebraic(step[1], step[2])
    raise ValueError(f"unknown step kind {kind!r}")
