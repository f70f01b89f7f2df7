"""Exception hierarchy. The CLI reports computational errors by class name."""


class TokenSignError(Exception):
    """Base class for every error raised by tokensign."""


class ParseError(TokenSignError, ValueError):
    pass


class DuplicateEdge(ParseError):
    pass


class LoopEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class BadSignToken(ParseError):
    pass


class HeaderMismatch(ParseError):
    pass


class UnknownFamily(TokenSignError, ValueError):
    pass


class NTooSmall(TokenSignError, ValueError):
    pass


class SizeMismatch(TokenSignError, ValueError):
    pass


class NotBalanced(TokenSignError):
    pass


class KOutOfRange(TokenSignError, ValueError):
    pass


class SizeCapExceeded(TokenSignError):
    pass


class TooLarge(TokenSignError):
    pass


class NotSymmetric(TokenSignError, ValueError):
    pass


class NoConvergence(TokenSignError, ArithmeticError):
    pass


class DivisionByZeroPolynomial(TokenSignError, ZeroDivisionError):
    pass


class UnderlyingMismatch(TokenSignError, ValueError):
    pass
