"""Combinatorial model of curves lying on a smooth surface.

A configuration records the irreducible components of a (possibly
reducible or non-reduced) connected projective curve: each component
carries a multiplicity, a geometric genus, a self-intersection number and
any singularities intrinsic to it (a node or a cusp on a single branch of
the curve), while separate point records describe how distinct components
meet (transversally, at a tacnode, or at an ordinary triple point).

The intersection matrix, divisor squares and the numerical fiber test are
derived from this data in exact integer arithmetic. The surface is assumed
to be a relatively minimal elliptic fibration, so the canonical class
pairs to zero with every component; this makes chi(O_D) = -D^2/2 exact for
divisors with smooth components.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .linalg import (
    matvec,
    negative_semidefinite_with_rank,
    quadratic_form,
    rational_kernel,
)


class ConfigurationError(ValueError):
    """Raised when curve data violates a structural invariant."""


class LocalType(str, Enum):
    """How two or three distinct components meet at one point."""

    TRANSVERSE = "transverse"
    TACNODE = "tacnode"
    ORDINARY_TRIPLE = "ordinary_triple"

    @property
    def arity(self) -> int:
        return 3 if self is LocalType.ORDINARY_TRIPLE else 2

    def pair_contribution(self) -> int:
        """Local intersection number contributed to each incident pair."""
        return 2 if self is LocalType.TACNODE else 1


class IntrinsicType(str, Enum):
    """Singularity on a single component (unibranch cusp or two-branch node)."""

    NODE = "node"
    CUSP = "cusp"

    @property
    def branches(self) -> int:
        return 2 if self is IntrinsicType.NODE else 1

    @property
    def delta(self) -> int:
        # delta invariant: drop in genus under normalization
        return 1


@dataclass(frozen=True)
class Component:
    """One irreducible component, counted with multiplicity."""

    name: str
    multiplicity: int = 1
    geometric_genus: int = 0
    self_intersection: int = -2
    intrinsic: tuple[IntrinsicType, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "intrinsic", tuple(self.intrinsic))
        if self.multiplicity < 1:
            raise ConfigurationError(
                f"component {self.name!r}: multiplicity must be >= 1, got {self.multiplicity}"
            )
        if self.geometric_genus not in (0, 1):
            raise ConfigurationError(
                f"component {self.name!r}: geometric genus must be 0 or 1, got {self.geometric_genus}"
            )
        if self.geometric_genus == 1 and self.intrinsic:
            raise ConfigurationError(
                f"component {self.name!r}: a genus-one component cannot carry intrinsic singularities"
            )


@dataclass(frozen=True)
class SingularPoint:
    """A point where two or three distinct components meet."""

    name: str
    local_type: LocalType
    incident: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "incident", tuple(self.incident))
        if len(self.incident) != self.local_type.arity:
            raise ConfigurationError(
                f"point {self.name!r}: {self.local_type.value} needs "
                f"{self.local_type.arity} incident components, got {len(self.incident)}"
            )
        if len(set(self.incident)) != len(self.incident):
            raise ConfigurationError(
                f"point {self.name!r}: incident components must be pairwise distinct"
            )


@dataclass(frozen=True)
class CurveConfiguration:
    """A connected configuration of components and their meeting points."""

    components: tuple[Component, ...]
    points: tuple[SingularPoint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "points", tuple(self.points))
        if not self.components:
            raise ConfigurationError("configuration needs at least one component")
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise ConfigurationError("component names must be unique")
        point_names = [p.name for p in self.points]
        if len(set(point_names)) != len(point_names):
            raise ConfigurationError("point names must be unique")
        known = set(names)
        for p in self.points:
            for ref in p.incident:
                if ref not in known:
                    raise ConfigurationError(
                        f"point {p.name!r} references unknown component {ref!r}"
                    )
        if not self._is_connected():
            raise ConfigurationError("configuration is not connected")

    def _is_connected(self) -> bool:
        index = {c.name: i for i, c in enumerate(self.components)}
        parent = list(range(len(self.components)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for p in self.points:
            anchor = find(index[p.incident[0]])
            for ref in p.incident[1:]:
                parent[find(index[ref])] = anchor
        return len({find(i) for i in range(len(self.components))}) == 1

    @property
    def n_components(self) -> int:
        return len(self.components)

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(name)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(c.multiplicity for c in self.components)

    def is_reduced(self) -> bool:
        return all(c.multiplicity == 1 for c in self.components)


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric pairing of the components, in component order."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def apply(self, vector: tuple[int, ...]) -> list[int]:
        return matvec(self.entries, vector)


@functools.cache
def intersection_matrix(config: CurveConfiguration) -> IntersectionMatrix:
    """Pairwise intersection numbers of the components.

    The diagonal holds the self-intersections; each point adds its local
    contribution to every unordered pair of incident components (1 for a
    transverse crossing, 2 for a tacnode, 1 per pair at a triple point).
    Intrinsic singularities live on a single component and contribute
    nothing here.
    """
    index = {c.name: i for i, c in enumerate(config.components)}
    n = config.n_components
    m = [[0] * n for _ in range(n)]
    for i, c in enumerate(config.components):
        m[i][i] = c.self_intersection
    for p in config.points:
        contribution = p.local_type.pair_contribution()
        ids = [index[name] for name in p.incident]
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                m[ids[a]][ids[b]] += contribution
                m[ids[b]][ids[a]] += contribution
    return IntersectionMatrix(tuple(tuple(row) for row in m))


def divisor_square(config: CurveConfiguration, coeffs: tuple[int, ...] | list[int]) -> int:
    """Self-intersection of the divisor sum(coeffs[i] * component_i)."""
    if len(coeffs) != config.n_components:
        raise ValueError(
            f"coefficient vector has length {len(coeffs)}, expected {config.n_components}"
        )
    return quadratic_form(intersection_matrix(config).entries, tuple(coeffs))


@functools.cache
def reduce(config: CurveConfiguration) -> CurveConfiguration:
    """The underlying reduced curve: every multiplicity reset to 1."""
    if config.is_reduced():
        return config
    return CurveConfiguration(
        components=tuple(
            Component(c.name, 1, c.geometric_genus, c.self_intersection, c.intrinsic)
            for c in config.components
        ),
        points=config.points,
    )


def gcd_multiplicity(config: CurveConfiguration) -> int:
    """gcd of the component multiplicities; > 1 means the curve is multiple."""
    return math.gcd(*config.multiplicities())


@functools.cache
def fiber_obstruction(config: CurveConfiguration) -> str | None:
    """Why the configuration fails the numerical fiber test, or None.

    A fiber of an elliptic fibration is connected (enforced at
    construction), pairs to zero with each component (M * m = 0 for the
    multiplicity vector m) and, when reducible, has a negative semidefinite
    intersection matrix whose radical is the line spanned by m.
    """
    m = intersection_matrix(config)
    mult = config.multiplicities()
    if any(m.apply(mult)):
        return "M*m != 0"
    if config.n_components >= 2:
        semidefinite, rank = negative_semidefinite_with_rank(m.entries)
        if not semidefinite:
            return "intersection matrix is not negative semidefinite"
        radical_dim = config.n_components - rank
        if radical_dim != 1:
            return f"radical of the intersection matrix has rank {radical_dim}, expected 1"
    return None


def is_fiber_like(config: CurveConfiguration) -> bool:
    """Numerical test for being a fiber: connected, M*m = 0, rank-1 radical."""
    return fiber_obstruction(config) is None


def radical_basis(config: CurveConfiguration) -> list[list[Fraction]]:
    """Rational basis of the kernel of the intersection matrix."""
    return rational_kernel(intersection_matrix(config).entries)
