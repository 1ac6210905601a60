"""Shared fixtures and independent brute-force oracles.

The oracles here trust only exact linear programming feasibility and
plain lattice arithmetic, never the double-description or enumeration
machinery they are used to check.
"""

from __future__ import annotations

import pytest

from toric_cartier import Semigroup, linalg
from toric_cartier.polyhedral import iter_box


@pytest.fixture(scope="session")
def worked_semigroup():
    """k[x, xy, xy^2, xy^3]: the cone spanned by (1,0) and (1,3)."""
    return Semigroup.from_rays([(1, 0), (1, 3)])


@pytest.fixture(scope="session")
def orthant_semigroup():
    return Semigroup.from_rays([(1, 0), (0, 1)])


def in_cone_span(rays, x):
    """x in cone(rays), decided by exact LP feasibility (no normals)."""
    rows = [tuple(r[i] for r in rays) for i in range(len(x))]
    return linalg.nonneg_solve(rows, list(x)) is not None


def in_hull_plus_cone(vertices, rays, x):
    """x in conv(vertices) + cone(rays), decided by exact LP feasibility."""
    dim = len(x)
    nv = len(vertices)
    cols = list(vertices) + list(rays)
    rows = [tuple(c[i] for c in cols) for i in range(dim)]
    rows.append((1,) * nv + (0,) * len(rays))
    rhs = list(x) + [1]
    return linalg.nonneg_solve(rows, rhs) is not None


def minimal_points_brute(points, cone):
    """Minimal elements of a finite point set under the cone order."""
    pts = sorted(set(points))
    return sorted(
        x for x in pts if not any(y != x and cone.contains(linalg.vsub(x, y)) for y in pts)
    )
