"""Exception hierarchy shared by every module of the package."""


class ToricoverError(Exception):
    """Base class for all errors raised by toricover."""


class RankDeficientError(ToricoverError, ValueError):
    """A matrix required to have full row rank does not."""


class NoSolutionError(ToricoverError, ValueError):
    """A linear system has no (rational) solution."""


class NotIntegerError(ToricoverError, ValueError):
    """A rational solution exists but is not integral."""


class NotGaleDualError(ToricoverError, ValueError):
    """A weight matrix does not annihilate the given fan matrix."""


class DimMismatchError(ToricoverError, ValueError):
    """Operands live in ambient spaces of different dimension."""


class LengthMismatchError(ToricoverError, ValueError):
    """A vector has the wrong number of entries."""


class IndexOutOfRangeError(ToricoverError, ValueError):
    """A 1-based ray or variable index is outside 1..m."""


class NotSimplicialError(ToricoverError, ValueError):
    """A cone of a fan is spanned by linearly dependent rays."""

    def __init__(self, cone):
        self.cone = tuple(sorted(cone))
        super().__init__(f"cone {list(self.cone)} is not simplicial")


class BadIntersectionError(ToricoverError, ValueError):
    """Two cones of a fan do not meet along a common face."""

    def __init__(self, first, second):
        self.first = tuple(sorted(first))
        self.second = tuple(sorted(second))
        super().__init__(
            f"cones {list(self.first)} and {list(self.second)} do not "
            "intersect in their common face"
        )


class EmptyIdealError(ToricoverError, ValueError):
    """A monomial ideal has no generators."""


class EmptyPolynomialError(ToricoverError, ValueError):
    """A polynomial has no terms."""


class NotFreeHomogeneousError(ToricoverError, ValueError):
    """A relation stops being homogeneous once torsion degrees are dropped."""


class ParseError(ToricoverError, ValueError):
    """Malformed text input. Carries 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class TextSyntaxError(ParseError):
    """Unexpected token or character."""


class DimensionMismatchError(ParseError):
    """Declared and actual matrix dimensions disagree."""
