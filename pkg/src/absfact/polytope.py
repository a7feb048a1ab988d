"""Newton polytopes of bivariate polynomials and the vertex-gcd criterion.

The polytope of f is the convex hull of the exponent vectors of its nonzero
terms.  Everything here runs on exact integer arithmetic (orientation tests
are integer cross products); there is no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroPolynomial
from .poly import BiPoly


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_vertices(points) -> list[tuple[int, int]]:
    """Extreme points of the convex hull of integer points, counter-clockwise
    starting from the lexicographic minimum.

    Andrew's monotone chain with strict turns, so points lying on the segment
    between two other hull points are excluded (they are not vertices).
    """
    pts = sorted(set((int(x), int(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class NewtonPolytope:
    support: frozenset[tuple[int, int]]
    vertices: tuple[tuple[int, int], ...]
    g: int

    def __contains__(self, point) -> bool:
        return tuple(point) in self.support


def newton_polytope(f: BiPoly) -> NewtonPolytope:
    """Newton polytope of f: support, hull vertices, and the gcd g of all
    vertex coordinates."""
    if f.is_zero:
        raise ZeroPolynomial("Newton polytope of the zero polynomial")
    support = f.support()
    verts = convex_hull_vertices(support)
    g = 0
    for i, j in verts:
        g = math.gcd(g, math.gcd(i, j))
    return NewtonPolytope(frozenset(support), tuple(verts), g)


def newton_polytope_of_support(support) -> NewtonPolytope:
    """Same as newton_polytope but straight from a support set (used by the
    mod-p fast paths, where polynomials are plain exponent->int dicts)."""
    support = set(support)
    if not support:
        raise ZeroPolynomial("Newton polytope of the zero polynomial")
    verts = convex_hull_vertices(support)
    g = 0
    for i, j in verts:
        g = math.gcd(g, math.gcd(i, j))
    return NewtonPolytope(frozenset(support), tuple(verts), g)


def condition_c(f: BiPoly) -> tuple[bool, int]:
    """(satisfied, g): the vertex-coordinate gcd g, and whether g == 1.

    For a single monomial X^i Y^j the polytope is one point and g = gcd(i, j),
    with gcd(0, 0) = 0 meaning "no information".
    """
    pt = newton_polytope(f)
    return pt.g == 1, pt.g


def factor_count_divisor(f: BiPoly) -> int:
    """The vertex gcd g; for rationally irreducible f the number of absolute
    factors divides g (g = 0 only for the constant monomial: no information)."""
    return newton_polytope(f).g
