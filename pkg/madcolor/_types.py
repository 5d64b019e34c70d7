import typing as ty
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction

from madcolor.errors import ArgumentMissingError

Vertex = int
EdgeId = int
Color = int

# exact rational; mad(G) = 2 * max density
Density = Fraction

UNCOLORED: ty.Final[Color] = 0


def format_ratio(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class AlgoTypeEnum(Enum):
    @staticmethod
    def _generate_next_value_(
        name: str, start: int, count: int, last_values: list[ty.Any]
    ) -> str:
        return name.lower()


class ColoringMode(str, AlgoTypeEnum):
    RANDOMIZED = auto()
    DETERMINISTIC = auto()


class PalettePolicy(str, AlgoTypeEnum):
    EXACT_DELTA = auto()
    DELTA_PLUS_ONE = auto()
    AUTO = auto()


@dataclass(kw_only=True, frozen=True)
class RunConfig:
    mode: ColoringMode = ColoringMode.DETERMINISTIC
    seed: int | None = None
    palette_policy: PalettePolicy = PalettePolicy.AUTO
    instrumentation: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.mode is ColoringMode.RANDOMIZED and self.seed is None:
            raise ArgumentMissingError("seed must be specified for RANDOMIZED mode")
        if self.mode is ColoringMode.DETERMINISTIC and self.seed is not None:
            raise ArgumentMissingError("seed is only meaningful in RANDOMIZED mode")
        if self.workers < 1:
            raise ArgumentMissingError("workers must be at least 1")

    @classmethod
    def randomized(cls, seed: int, **kwargs: ty.Any) -> "RunConfig":
        return cls(mode=ColoringMode.RANDOMIZED, seed=seed, **kwargs)

    @classmethod
    def deterministic(cls, **kwargs: ty.Any) -> "RunConfig":
        return cls(mode=ColoringMode.DETERMINISTIC, **kwargs)
