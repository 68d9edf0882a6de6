"""Strong metric dimension of co-maximal ideal graphs of finite commutative rings."""

__version__ = "0.1.0"

from .comaximal import (
    build_bundle,
    build_gamma,
    build_gamma_prime,
    build_gamma_star,
    build_gamma_star_star,
    decompose_components,
)
from .config import Limits
from .errors import (
    CapExceededError,
    ComaxError,
    DisconnectedGraphError,
    EmptyGraphError,
    GraphFormatError,
    SpecMismatchError,
    SpecParseError,
)
from .graph import Graph, diameter, export
from .ring import Ideal, RingSpec, enumerate_ideals, enumerate_vertices, parse_ring_spec
from .solver import (
    dim_bruteforce,
    is_resolving_set,
    is_strong_resolving_set,
    max_independent_set,
    sdim_bruteforce,
    sdim_via_srg,
)
from .strong_resolving import boundary, build_srg
from .theorems import predicted_sdim, sweep

__all__ = [
    "CapExceededError",
    "ComaxError",
    "DisconnectedGraphError",
    "EmptyGraphError",
    "Graph",
    "GraphFormatError",
    "Ideal",
    "Limits",
    "RingSpec",
    "SpecMismatchError",
    "SpecParseError",
    "boundary",
    "build_bundle",
    "build_gamma",
    "build_gamma_prime",
    "build_gamma_star",
    "build_gamma_star_star",
    "build_srg",
    "decompose_components",
    "diameter",
    "dim_bruteforce",
    "enumerate_ideals",
    "enumerate_vertices",
    "export",
    "is_resolving_set",
    "is_strong_resolving_set",
    "max_independent_set",
    "parse_ring_spec",
    "predicted_sdim",
    "sdim_bruteforce",
    "sdim_via_srg",
    "sweep",
]
