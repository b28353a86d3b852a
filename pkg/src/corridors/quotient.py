"""Pattern quotients and the incidence-preservation check that justifies them.

Collapsing each vertex to its color turns facets into their patterns; when no
two ridges share a pattern, the collapse is a bijection on facets and ridges,
and the GF(2) boundary matrices of source and quotient agree entry for entry.
Everything downstream of the boundary matrix (dual graph, diameter,
pseudomanifold-ness) then transfers for free, but is still re-verified
directly wherever that is affordable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complex_core import (
    Complex,
    Ridge,
    boundary_matrix_gf2,
    diameter_exact,
    dual_graph,
    is_pseudomanifold,
    ridges_of,
)
from .coloring import Coloring, _require_total, verify_proper
from .errors import ImproperColoring, MissingBijection


@dataclass(frozen=True)
class QuotientResult:
    """Quotient complex plus the facet/ridge correspondences, where defined.

    facet_map sends a source facet index to a quotient facet index and only
    contains facets whose pattern is unique; it is total exactly when
    facets_injective.  ridge_map is None as soon as two ridges collide.
    Collision witnesses hold the first offending pair in scan order.
    """

    quotient: Complex
    color_to_vertex: dict
    facet_map: dict
    ridge_map: dict | None
    facets_injective: bool
    ridges_injective: bool
    facet_collision: tuple | None
    ridge_collision: tuple | None

    @property
    def facet_bijection(self):
        return self.facet_map if self.facets_injective else None

    @property
    def ridge_bijection(self):
        return self.ridge_map


def pattern_complex(c: Complex, f: Coloring) -> QuotientResult:
    """Quotient of c by the coloring f: facets become their color patterns.

    Requires f proper (ImproperColoring otherwise), so patterns are genuine
    vertex sets.  Quotient vertices are the used colors renumbered 1..n',
    ascending by color.  Facet or ridge pattern collisions are flagged, not
    fatal: the quotient complex always exists, only the bijections vanish.
    """
    _require_total(c, f)
    if not verify_proper(c, f):
        raise ImproperColoring("two adjacent vertices share a color")
    colors = f.colors

    used = sorted({colors[v - 1] for F in c.facets for v in F})
    color_to_vertex = {col: i for i, col in enumerate(used, start=1)}

    facet_patterns = [
        tuple(sorted(color_to_vertex[colors[v - 1]] for v in F)) for F in c.facets
    ]
    qfacets = tuple(sorted(set(facet_patterns)))
    quotient = Complex(c.dim_facet, len(used), qfacets)
    qfacet_index = {F: i for i, F in enumerate(qfacets)}

    pattern_count = Counter(facet_patterns)
    first_with_pattern: dict = {}
    facet_collision = None
    for fi, pat in enumerate(facet_patterns):
        if pat in first_with_pattern:
            if facet_collision is None:
                facet_collision = (first_with_pattern[pat], fi)
        else:
            first_with_pattern[pat] = fi
    facets_injective = facet_collision is None
    facet_map = {
        fi: qfacet_index[pat]
        for fi, pat in enumerate(facet_patterns)
        if pattern_count[pat] == 1
    }

    ridge_map: dict[Ridge, Ridge] = {}
    seen_ridge: dict = {}
    ridge_collision = None
    for ridge, _ in ridges_of(c):
        pat = tuple(sorted(color_to_vertex[colors[v - 1]] for v in ridge))
        if pat in seen_ridge:
            ridge_collision = (seen_ridge[pat], ridge)
            break
        seen_ridge[pat] = ridge
        ridge_map[ridge] = pat
    ridges_injective = ridge_collision is None

    return QuotientResult(
        quotient=quotient,
        color_to_vertex=color_to_vertex,
        facet_map=facet_map,
        ridge_map=ridge_map if ridges_injective else None,
        facets_injective=facets_injective,
        ridges_injective=ridges_injective,
        facet_collision=facet_collision,
        ridge_collision=ridge_collision,
    )


def verify_boundary_preservation(c: Complex, q: QuotientResult) -> bool:
    """Entry-exact equality of the GF(2) boundary matrices through the bijections.

    Permutes rows via the ridge bijection and columns via the facet bijection
    and compares supports; requires both bijections (MissingBijection
    otherwise).  Any count mismatch is a failure, not an error.
    """
    if not (q.facets_injective and q.ridges_injective) or q.ridge_map is None:
        raise MissingBijection("quotient has a facet or ridge pattern collision")
    src = boundary_matrix_gf2(c)
    dst = boundary_matrix_gf2(q.quotient)
    if len(src.rows) != len(dst.rows) or len(src.cols) != len(dst.cols):
        return False

    src_col_facet = {j: F for j, F in enumerate(src.cols)}
    src_facet_index = {F: i for i, F in enumerate(c.facets)}
    dst_col_of_facet = {F: j for j, F in enumerate(dst.cols)}
    dst_row_of_ridge = {r: i for i, r in enumerate(dst.rows)}
    qfacets = q.quotient.facets

    mapped_rows = set()
    for i, ridge in enumerate(src.rows):
        image = q.ridge_map.get(ridge)
        if image is None or image not in dst_row_of_ridge:
            return False
        di = dst_row_of_ridge[image]
        if di in mapped_rows:
            return False
        mapped_rows.add(di)
        mapped_support = set()
        for j in src.row_support[i]:
            fi = src_facet_index[src_col_facet[j]]
            mapped_support.add(dst_col_of_facet[qfacets[q.facet_map[fi]]])
        if mapped_support != set(dst.row_support[di]):
            return False
    return len(mapped_rows) == len(dst.rows)


def quotient_report(
    c: Complex, q: QuotientResult, diameter_limit: int = 200_000
) -> dict:
    """Summary fragment comparing source and quotient.

    Diameters are recomputed by BFS on both sides up to `diameter_limit`
    facets; beyond that the quotient diameter is taken from the source via
    the preservation check, and the report says so.
    """
    preserved = None
    if q.facets_injective and q.ridges_injective:
        preserved = verify_boundary_preservation(c, q)
    fragment = {
        "n_prime": q.quotient.n_vertices,
        "source_vertices": c.n_vertices,
        "facet_count": len(q.quotient.facets),
        "source_facet_count": len(c.facets),
        "facets_injective": q.facets_injective,
        "ridges_injective": q.ridges_injective,
        "boundary_preserved": preserved,
        "pseudomanifold_source": is_pseudomanifold(c),
        "pseudomanifold_quotient": is_pseudomanifold(q.quotient),
    }
    if len(c.facets) <= diameter_limit:
        src_diam = diameter_exact(dual_graph(c))
        quo_diam = diameter_exact(dual_graph(q.quotient))
        fragment["diameter_source"] = src_diam
        fragment["diameter_quotient"] = quo_diam
        fragment["diameter_method"] = "recomputed-both"
    elif preserved:
        quo_diam = diameter_exact(dual_graph(q.quotient))
        fragment["diameter_source"] = quo_diam
        fragment["diameter_quotient"] = quo_diam
        fragment["diameter_method"] = "quotient-bfs+boundary-preservation"
    else:
        fragment["diameter_source"] = None
        fragment["diameter_quotient"] = None
        fragment["diameter_method"] = "skipped"
    return fragment
