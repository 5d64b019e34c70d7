from fractions import Fraction


class MadColorError(Exception): ...


class ArgumentMissingError(MadColorError):
    def __init__(self, msg: str = ""):
        self.msg = msg
        super().__init__(msg)


class GraphError(MadColorError):
    def __init__(self, msg: str, *, pair: tuple[int, int] | None = None):
        self.pair = pair
        super().__init__(msg)


class ColoringError(MadColorError):
    def __init__(self, msg: str, *, vertex: int | None = None, color: int | None = None):
        self.vertex = vertex
        self.color = color
        super().__init__(msg)


class PreconditionViolatedError(MadColorError): ...


class InsufficientPaletteError(PreconditionViolatedError):
    max_degree: int
    mad: Fraction

    def __init__(self, max_degree: int, mad: Fraction):
        self.max_degree = max_degree
        self.mad = mad
        twice = 2 * mad
        msg = (
            f"exact-delta palette needs max degree >= 2*mad, "
            f"got max degree {max_degree} and 2*mad = {twice.numerator}/{twice.denominator}"
        )
        super().__init__(msg)


class InvariantBreachError(MadColorError): ...


class OracleLimitError(MadColorError): ...


class GraphFileError(MadColorError):
    def __init__(self, msg: str, *, line: int | None = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
