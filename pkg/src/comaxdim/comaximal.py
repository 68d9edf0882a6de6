"""The co-maximal ideal graph and the graphs derived from it.

All four graphs share the same vertex list (the output of
:func:`~comaxdim.ring.enumerate_vertices`), so indices are interchangeable,
except for ``gamma_star`` which may drop isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import DEFAULT_ENUM_CAP
from .graph import Graph
from .ring import (
    Ideal,
    RingSpec,
    enumerate_vertices,
    ideal_sum,
    is_comaximal,
    is_contained,
    nil_class,
    prime_reduction,
)


def _comparable(I: Ideal, J: Ideal) -> bool:
    return is_contained(I, J) or is_contained(J, I)


def _star_star_adjacent(I: Ideal, J: Ideal) -> bool:
    return not ideal_sum(I, J).is_whole and not _comparable(I, J)


def build_gamma(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> Graph:
    return Graph.from_predicate(enumerate_vertices(spec, cap), is_comaximal)


def build_gamma_star_star(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> Graph:
    """Edge iff the sum is proper and neither ideal contains the other."""
    return Graph.from_predicate(enumerate_vertices(spec, cap), _star_star_adjacent)


def gamma_star_from(gamma: Graph, star_star: Graph) -> Graph:
    if gamma.is_complete():
        return gamma
    return star_star.induced_subgraph(v for v in range(star_star.n) if star_star.adj[v])


def build_gamma_star(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> Graph:
    """``gamma`` itself when complete, else ``gamma**`` minus its isolated vertices."""
    return gamma_star_from(build_gamma(spec, cap), build_gamma_star_star(spec, cap))


def _prime_adjacent(I: Ideal, J: Ideal) -> bool:
    if nil_class(I) == nil_class(J):
        return True
    return _star_star_adjacent(prime_reduction(I), prime_reduction(J))


def build_gamma_prime(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> Graph:
    """Edge iff same nil class, or the prime reductions are adjacent in the
    ``gamma**`` sense. Built for every spec; for rings with field factors
    this is an extension by analogy, not a graph with a proven role."""
    return Graph.from_predicate(enumerate_vertices(spec, cap), _prime_adjacent)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    is_clique: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def decompose_components(g: Graph) -> list[Component]:
    return [Component(tuple(c), g.is_clique(c)) for c in g.components()]


@dataclass(frozen=True)
class DerivedGraphBundle:
    spec: RingSpec
    vertices: tuple[Ideal, ...]
    gamma: Graph
    gamma_star_star: Graph
    gamma_star: Graph
    gamma_prime: Optional[Graph]

    @property
    def prime_by_analogy(self) -> bool:
        """True when ``gamma_prime`` was built for a ring with field factors."""
        return self.spec.m_fields > 0


def build_bundle(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> DerivedGraphBundle:
    vertices = enumerate_vertices(spec, cap)
    gamma = Graph.from_predicate(vertices, is_comaximal)
    star_star = Graph.from_predicate(vertices, _star_star_adjacent)
    return DerivedGraphBundle(
        spec=spec,
        vertices=tuple(vertices),
        gamma=gamma,
        gamma_star_star=star_star,
        gamma_star=gamma_star_from(gamma, star_star),
        gamma_prime=Graph.from_predicate(vertices, _prime_adjacent),
    )
