from importlib import metadata

from ._types import ColoringMode as ColoringMode
from ._types import PalettePolicy as PalettePolicy
from ._types import RunConfig as RunConfig
from .api import color_component as color_component
from .api import color_deterministic as color_deterministic
from .api import color_graph as color_graph
from .api import color_randomized as color_randomized
from .coloring import PartialColoring as PartialColoring
from .colorer import ColoringReport as ColoringReport
from .colorer import EdgeColorer as EdgeColorer
from .colorer import EdgeColoring as EdgeColoring
from .colorer import colorer as colorer
from .errors import InsufficientPaletteError as InsufficientPaletteError
from .errors import InvariantBreachError as InvariantBreachError
from .errors import MadColorError as MadColorError
from .errors import PreconditionViolatedError as PreconditionViolatedError
from .graph import Graph as Graph
from .graph import build_graph as build_graph
from .oracle import validate_coloring as validate_coloring
from .sparsity import mad as mad

try:
    __version__ = metadata.version("madcolor")
except metadata.PackageNotFoundError:
    __version__ = "0.1.0"
