"""Exception hierarchy shared by all constacirc modules."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


# -- field construction / arithmetic -----------------------------------------

class NonPrimeCharacteristic(AlgebraError):
    pass


class ReducibleModulus(AlgebraError):
    """Modulus is not irreducible; carries a nontrivial factor as witness."""

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class MixedFields(AlgebraError):
    pass


class ZeroInverse(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class OddCharacteristic(AlgebraError):
    pass


# -- polynomial / quotient rings ---------------------------------------------

class ConstantPolynomial(AlgebraError):
    pass


class DivisionByZeroPoly(AlgebraError):
    pass


class MixedRings(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    """Element has no inverse; carries the nontrivial gcd as witness."""

    def __init__(self, message: str, gcd=None):
        super().__init__(message)
        self.gcd = gcd


class ZeroLambda(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


# -- matrices ------------------------------------------------------------------

class DimensionMismatch(AlgebraError):
    pass


class NonSquare(AlgebraError):
    pass


class Singular(AlgebraError):
    pass


# -- circulant specs and checks ------------------------------------------------

class InvalidSpec(AlgebraError):
    pass


class NotCirculantProduct(AlgebraError):
    """Product matrix admits no circulant spec; carries the failing entry."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class HypothesisViolated(AlgebraError):
    pass


class ZeroScalar(AlgebraError):
    pass


class NotInFixedField(AlgebraError):
    pass


# -- search / enumeration -------------------------------------------------------

class SearchSpaceTooLarge(AlgebraError):
    pass
