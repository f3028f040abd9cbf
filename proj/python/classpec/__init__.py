"""Element orders of finite symplectic and orthogonal groups."""

from ._classpec import (
    CapExceeded,
    ClasspecError,
    InfeasibleOrder,
    InfeasibleRecipe,
    InvalidArgument,
    InvalidEpsilon,
    UnsupportedGroup,
    __version__,
    contains,
    element_orders,
    generators,
    group_info,
    nu,
    spectrum,
    verify,
    witness,
)

__all__ = [
    "CapExceeded",
    "ClasspecError",
    "InfeasibleOrder",
    "InfeasibleRecipe",
    "InvalidArgument",
    "InvalidEpsilon",
    "UnsupportedGroup",
    "__version__",
    "contains",
    "element_orders",
    "generators",
    "group_info",
    "nu",
    "spectrum",
    "verify",
    "witness",
]
