"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for all errors raised by this library."""


class DivisionByZero(EngineError):
    """A denominator normalized to zero."""


class ReducibleMinimalPolynomial(EngineError):
    """A proposed algebraic step has a reducible minimal polynomial."""


class DegreeDivisibleByP(EngineError):
    """An algebraic step degree is divisible by the characteristic."""


class UnsupportedConfiguration(EngineError):
    """The requested computation is outside the supported configurations."""


class BetaZero(EngineError):
    """The right slot of a symbol algebra must be nonzero."""


class GammaZero(EngineError):
    """A norm target must be nonzero."""


class AlgebraMismatch(EngineError):
    """Operands belong to different algebras."""


class CharacteristicMismatch(EngineError):
    """Symbol degree does not match the field characteristic."""


class SingularScale(EngineError):
    """The scaling polynomial has norm zero."""


class NormMismatch(EngineError):
    """Supplied element does not have the claimed reduced norm."""


class UnsupportedPrime(EngineError):
    """Constructive solving is only implemented for p in {2, 3}."""


class NoSolutionInBudget(EngineError):
    """Candidate solutions were exhausted without a usable witness."""


class NoSolution(EngineError):
    """A linear system that should be solvable has no usable solution."""


class SlotHasPthRoot(EngineError):
    """The proposed common slot is a p-th power, so it spans no degree-p subfield."""


class ResidueUndecided(EngineError):
    """A residue-level search returned unknown, blocking classification."""


class InternalCheckFailed(EngineError):
    """A mandatory self-verification failed; indicates a structure bug."""


class ParseError(EngineError):
    """Malformed input text; carries the offending position."""

    def __init__(self, message, pos=None):
        super().__init__(message if pos is None else f"{message} (at position {pos})")
        self.pos = pos


class NonPrimePower(EngineError):
    """A base-field order that is not a prime power."""


class ReducibleModulus(EngineError):
    """An explicit base-field modulus that is not irreducible."""
