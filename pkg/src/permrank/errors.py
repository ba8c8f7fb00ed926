"""Exception hierarchy shared across the package."""


class PermrankError(Exception):
    """Base class for all library errors."""


class InvalidField(PermrankError):
    """Field construction rejected (modulus not an odd prime, or bad value type)."""


class FieldMismatch(PermrankError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(PermrankError):
    """Division or inversion of a zero field element."""


class ShapeMismatch(PermrankError):
    """Matrix shapes are not conformable for the requested operation."""


class IndexOutOfRange(PermrankError):
    """A 1-based index or index set leaves the valid range."""


class NotSquare(PermrankError):
    """Operation defined only for square matrices."""


class TooLarge(PermrankError):
    """Input exceeds a hard size guard."""


class InvalidRange(PermrankError):
    """A numeric parameter is outside its documented range."""


class BudgetExceeded(PermrankError):
    """An exhaustive enumeration would exceed the configured budget."""


class DependentBasis(PermrankError):
    """A proposed subspace basis is linearly dependent."""


class UnsupportedSize(PermrankError):
    """Preserver decision procedures require matrices of size at least 3."""


class NotBijectiveMap(PermrankError):
    """The linear map is singular where bijectivity is required."""


class DecompositionError(PermrankError):
    """A candidate map failed canonical decomposition.

    Subclasses identify the stage of the decomposition that rejected the map;
    each one certifies that the map cannot preserve the bounded
    permanental-rank set.
    """


class UnitImageNotMonomial(DecompositionError):
    """Some matrix unit maps to something other than a scaled matrix unit."""


class NotMonomialPattern(DecompositionError):
    """Unit images do not factor through a pair of index permutations."""


class HadamardNotRankOne(DecompositionError):
    """The entrywise scaling matrix has a nonvanishing 2x2 minor."""


class FieldNotInfinite(PermrankError):
    """Rank lifting needs an infinite field (the rationals here)."""


class PositionInsideWitness(PermrankError):
    """The requested perturbation position meets the certifying submatrix."""


class ConstraintVanishesAtA(PermrankError):
    """The open-set constraint evaluates to zero at the start matrix."""


class VerificationError(PermrankError):
    """An internal consistency assertion failed."""
