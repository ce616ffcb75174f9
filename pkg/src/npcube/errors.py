from __future__ import annotations


class CubeComplexError(Exception):
    """Base class for every error raised by npcube."""


class PresentationError(CubeComplexError, ValueError):
    pass


class MissingGluing(PresentationError):
    pass


class DuplicateGluing(PresentationError):
    pass


class DimensionMismatch(PresentationError):
    pass


class InconsistentCorners(PresentationError):
    pass


class DimensionCapExceeded(CubeComplexError, ValueError):
    pass


class UnknownCell(CubeComplexError, KeyError):
    pass


class UnsupportedGenus(CubeComplexError, ValueError):
    pass


class NotOneVertex(CubeComplexError, ValueError):
    pass


class SquareRelationViolated(CubeComplexError, ValueError):
    pass


class NotNPC(CubeComplexError, ValueError):
    pass


class NotSpecial(CubeComplexError, ValueError):
    pass


class DanglingCell(CubeComplexError, KeyError):
    pass


class Disconnected(CubeComplexError, ValueError):
    pass


class NotSubcomplex(CubeComplexError, ValueError):
    pass


class InvalidWallSpace(CubeComplexError, ValueError):
    pass


class WallCapExceeded(CubeComplexError, ValueError):
    pass


class IndexOutOfRange(CubeComplexError, IndexError):
    pass


class UnknownPoint(CubeComplexError, KeyError):
    pass


class NotWallPreserving(CubeComplexError, ValueError):
    pass


class EmptyRelator(CubeComplexError, ValueError):
    pass


class UnknownGenerator(CubeComplexError, KeyError):
    pass


class LengthCapExceeded(CubeComplexError, ValueError):
    pass


class RadiusCapExceeded(CubeComplexError, ValueError):
    pass


class ParseError(CubeComplexError, ValueError):
    """Malformed text input; the message names the offending line or field."""
