"""Block-representation ZX diagrams: semantics, proportionality checking,
rewrite-rule validation, circuit ingestion and graph conversion."""

__version__ = "0.1.0"

from .diagram import (
    Cap,
    Compose,
    Cup,
    Diagram,
    DimensionMismatch,
    Empty,
    Stack,
    Swap,
    XSpider,
    ZSpider,
    color_swap,
    compose,
    from_sexpr,
    n_wire,
    stack,
    to_sexpr,
    wire,
)
from .propcheck import NotProportional, Proportional, diagrams_proportional, proportional
from .semantics import SizeLimitError, semantics

__all__ = [
    "Cap",
    "Compose",
    "Cup",
    "Diagram",
    "DimensionMismatch",
    "Empty",
    "NotProportional",
    "Proportional",
    "SizeLimitError",
    "Stack",
    "Swap",
    "XSpider",
    "ZSpider",
    "color_swap",
    "compose",
    "diagrams_proportional",
    "from_sexpr",
    "n_wire",
    "proportional",
    "semantics",
    "stack",
    "to_sexpr",
    "wire",
]
