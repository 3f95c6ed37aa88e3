from typing import Optional


class CartierManinError(Exception):
    """Base class for every error raised by the toolkit."""


class FieldArithmeticError(CartierManinError, ValueError):
    pass


class InvalidModulusError(FieldArithmeticError):
    pass


class ModulusMismatchError(FieldArithmeticError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Modulus mismatch: {left} vs {right}")
        self.left = left
        self.right = right

    def __reduce__(self):
        return type(self), (self.left, self.right)


class NotInvertibleError(FieldArithmeticError, ZeroDivisionError):
    pass


class PolynomialError(CartierManinError, ValueError):
    pass


class CurveError(CartierManinError, ValueError):
    pass


class NotSquarefreeError(CurveError):
    """Raised when a defining polynomial has a repeated root (degenerate curve)."""

    def __init__(self, message: str, polynomial: Optional[object] = None):
        super().__init__(message)
        self.polynomial = polynomial


class NotARootError(CurveError):
    pass


class EvenDegreeError(CurveError):
    pass


class PrimeError(CartierManinError, ValueError):
    pass


class InvalidPrimeError(PrimeError):
    pass


class SplitClassError(PrimeError):
    pass


class ReferenceTableError(CartierManinError, LookupError):
    pass
