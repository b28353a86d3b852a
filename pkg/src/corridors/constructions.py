"""Deterministic seed complexes: straight corridors and their boundary spheres.

The corridor on N vertices strings the windows {i, ..., i+d-1} into a path of
facets; its boundary (one dimension up) is the stacked-sphere pseudomanifold
whose dual graph stays long and thin.  The integer potential defined here
certifies a lower bound on that boundary's diameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex_core import Complex, Facet
from .errors import InvalidSpec, NotMiddleFacet, UnknownFacet


@dataclass(frozen=True)
class CorridorSpec:
    """Vertex count and facet size of a straight corridor."""

    n_vertices: int
    dim_facet: int

    def __post_init__(self):
        if self.dim_facet < 2:
            raise InvalidSpec(f"facet size must be at least 2, got {self.dim_facet}")
        if self.n_vertices < self.dim_facet:
            raise InvalidSpec(
                f"need at least {self.dim_facet} vertices, got {self.n_vertices}"
            )


def straight_corridor(spec: CorridorSpec) -> Complex:
    """Corridor with facets {i, ..., i+d-1}; its dual graph is a path."""
    n, d = spec.n_vertices, spec.dim_facet
    facets = tuple(tuple(range(i, i + d)) for i in range(1, n - d + 2))
    return Complex(d, n, facets)


@dataclass(frozen=True)
class BoundaryFacetLabel:
    """Position of a boundary-corridor facet: the two ends or middle (i, j).

    middle(i, j) names the facet {i, ..., i+d} minus {i+j}; alpha and omega
    are the runs {1..d} and {N-d+1..N}.
    """

    kind: str
    i: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("alpha", "omega", "middle"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == "middle":
            if self.i is None or self.j is None:
                raise ValueError("middle labels need both indices")
        elif self.i is not None or self.j is not None:
            raise ValueError(f"{self.kind} labels carry no indices")

    def __str__(self):
        if self.kind == "middle":
            return f"middle {self.i} {self.j}"
        return self.kind


ALPHA = BoundaryFacetLabel("alpha")
OMEGA = BoundaryFacetLabel("omega")


def _middle_facet(i: int, j: int, d: int) -> Facet:
    # {i, ..., i+d} with i+j removed; j in 1..d-1 keeps both endpoints
    return tuple(range(i, i + j)) + tuple(range(i + j + 1, i + d + 1))


def boundary_corridor(n_vertices: int, dim_facet: int) -> Complex:
    """Boundary of the corridor one dimension up, by direct enumeration.

    Facets are alpha = {1..d}, omega = {N-d+1..N}, and the gapped windows
    middle(i, j) for i in 1..N-d, j in 1..d-1; the result is a pseudomanifold
    with (N-d)(d-1) + 2 facets.  Requires N >= d+2 so middle facets exist.
    """
    n, d = n_vertices, dim_facet
    if d < 2:
        raise InvalidSpec(f"facet size must be at least 2, got {d}")
    if n < d + 2:
        raise InvalidSpec(f"need at least {d + 2} vertices, got {n}")
    facets = [tuple(range(1, d + 1)), tuple(range(n - d + 1, n + 1))]
    for i in range(1, n - d + 1):
        for j in range(1, d):
            facets.append(_middle_facet(i, j, d))
    return Complex(d, n, tuple(sorted(facets)))


def facet_label(c: Complex, facet) -> BoundaryFacetLabel:
    """Classify a facet of a boundary corridor as alpha, omega, or middle(i, j)."""
    F = tuple(facet)
    if F not in set(c.facets):
        raise UnknownFacet(f"{F} is not a facet of the complex")
    return _classify(F, c.n_vertices, c.dim_facet)


def facet_labels(c: Complex) -> list[BoundaryFacetLabel]:
    """Labels for every facet, in the complex's facet order."""
    return [_classify(F, c.n_vertices, c.dim_facet) for F in c.facets]


def _classify(F: Facet, n: int, d: int) -> BoundaryFacetLabel:
    if F == tuple(range(1, d + 1)):
        return ALPHA
    if F == tuple(range(n - d + 1, n + 1)):
        return OMEGA
    i = F[0]
    if F[-1] == i + d:
        missing = set(range(i, i + d + 1)).difference(F)
        if len(missing) == 1:
            j = missing.pop() - i
            if 1 <= j <= d - 1:
                return BoundaryFacetLabel("middle", i, j)
    raise UnknownFacet(f"{F} is not a boundary-corridor facet")


def scaled_potential(label: BoundaryFacetLabel, dim_facet: int) -> int:
    """Integer potential i*(d-1) - j of a middle facet.

    This is the rational potential i - j/(d-1) scaled by d-1, which preserves
    ordering and step sizes while keeping comparisons exact.  Moving between
    adjacent middle facets changes it by at most d in absolute value.
    """
    if label.kind != "middle":
        raise NotMiddleFacet(f"potential undefined for {label.kind}")
    return label.i * (dim_facet - 1) - label.j


def diameter_lower_bound_boundary(n_vertices: int, dim_facet: int) -> Fraction:
    """Lower bound (d-1)N/d - d on the boundary corridor's diameter."""
    return Fraction((dim_facet - 1) * n_vertices, dim_facet) - dim_facet
