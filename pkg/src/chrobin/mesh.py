"""Structured triangulations of the unit square with a boundary-first vertex order.

The solver operates on conforming P1 triangulations whose boundary edges are
exactly the traces of bulk elements and whose vertices are numbered so that
all boundary vertices come first.  Only the structured right-triangle mesh of
(0,1)^2 is provided: every grid cell is split along its lower-left to
upper-right diagonal, which keeps all triangles right-angled (hence
non-obtuse) and makes assembly fully deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

GEOM_TOL = 1e-12


@dataclass(frozen=True)
class Mesh:
    """Conforming triangulation of the unit square plus its boundary partition.

    Attributes
    ----------
    vertices : (n_vertices, 2) float array
        Vertex coordinates.  The first ``n_boundary`` vertices lie on the
        boundary, ordered counterclockwise starting at (0, 0).
    triangles : (n_triangles, 3) int array
        Vertex index triples, counterclockwise.
    boundary_edges : (n_edges, 2) int array
        Vertex index pairs tracing the boundary counterclockwise.
    n_boundary : int
        Number of boundary vertices; these occupy indices 0..n_boundary-1.
    h : float
        Maximum element diameter.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    boundary_edges: np.ndarray
    n_boundary: int
    h: float

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_interior(self) -> int:
        return self.n_vertices - self.n_boundary


@dataclass
class ValidationReport:
    """Outcome of the mesh invariant checks, one entry per invariant."""

    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def __str__(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            status = "pass" if ok else "FAIL"
            suffix = f" ({detail})" if detail and not ok else ""
            lines.append(f"{status:4s}  {name}{suffix}")
        return "\n".join(lines)


def build_unit_square_mesh(n: int) -> Mesh:
    """Build the structured right-triangle mesh of (0,1)^2 with n cells per side.

    Produces (n+1)^2 vertices, 2 n^2 triangles and 4 n boundary edges with
    maximum diameter h = sqrt(2)/n.  All cells are split along the same
    lower-left to upper-right diagonal.  Boundary vertices are numbered
    counterclockwise starting at the origin; interior vertices follow in
    row-major order.
    """
    if n < 1:
        raise ValueError(f"subdivision count must be >= 1, got {n}")

    index = np.full((n + 1, n + 1), -1, dtype=np.int64)  # index[i, j], x=i/n, y=j/n
    k = 0
    for i in range(n):  # bottom, (0,0) .. (n-1,0)
        index[i, 0] = k
        k += 1
    for j in range(n):  # right, (n,0) .. (n,n-1)
        index[n, j] = k
        k += 1
    for i in range(n, 0, -1):  # top, (n,n) .. (1,n)
        index[i, n] = k
        k += 1
    for j in range(n, 0, -1):  # left, (0,n) .. (0,1)
        index[0, j] = k
        k += 1
    n_boundary = k
    assert n_boundary == 4 * n
    for j in range(1, n):
        for i in range(1, n):
            index[i, j] = k
            k += 1

    vertices = np.empty((k, 2), dtype=np.float64)
    for i in range(n + 1):
        for j in range(n + 1):
            vertices[index[i, j]] = (i / n, j / n)

    triangles = np.empty((2 * n * n, 3), dtype=np.int64)
    t = 0
    for j in range(n):
        for i in range(n):
            a = index[i, j]
            b = index[i + 1, j]
            c = index[i + 1, j + 1]
            d = index[i, j + 1]
            triangles[t] = (a, b, c)
            triangles[t + 1] = (a, c, d)
            t += 2

    boundary_edges = np.empty((n_boundary, 2), dtype=np.int64)
    for e in range(n_boundary):
        boundary_edges[e] = (e, (e + 1) % n_boundary)

    return Mesh(
        vertices=vertices,
        triangles=triangles,
        boundary_edges=boundary_edges,
        n_boundary=n_boundary,
        h=math.sqrt(2.0) / n,
    )


def triangle_areas(mesh: Mesh) -> np.ndarray:
    """Signed areas of all triangles (positive for counterclockwise)."""
    p = mesh.vertices[mesh.triangles]
    e1 = p[:, 1] - p[:, 0]
    e2 = p[:, 2] - p[:, 0]
    return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])


def boundary_edge_lengths(mesh: Mesh) -> np.ndarray:
    d = mesh.vertices[mesh.boundary_edges[:, 1]] - mesh.vertices[mesh.boundary_edges[:, 0]]
    return np.hypot(d[:, 0], d[:, 1])


def _on_boundary(points: np.ndarray, tol: float = GEOM_TOL) -> np.ndarray:
    x, y = points[:, 0], points[:, 1]
    near = lambda v, c: np.abs(v - c) <= tol
    return near(x, 0.0) | near(x, 1.0) | near(y, 0.0) | near(y, 1.0)


def validate_mesh(mesh: Mesh) -> ValidationReport:
    """Check the mesh invariants and return a per-check report.

    Checked invariants: positive element areas, non-obtuse angles, boundary
    edges being the trace of exactly one element, exact tiling of the domain
    and its boundary, and the boundary-first vertex ordering.  A failing mesh
    must be rejected by all downstream assembly.
    """
    report = ValidationReport()
    areas = triangle_areas(mesh)

    min_area = float(areas.min()) if areas.size else 0.0
    report.add(
        "positive triangle areas (non-degenerate)",
        bool(areas.size and min_area > GEOM_TOL),
        f"min signed area {min_area:.3e}",
    )

    # Non-obtuse: at each corner the adjacent edge vectors must not form an
    # angle beyond 90 degrees, i.e. their dot product is >= 0.
    p = mesh.vertices[mesh.triangles]
    worst_dot = np.inf
    for i in range(3):
        u = p[:, (i + 1) % 3] - p[:, i]
        v = p[:, (i + 2) % 3] - p[:, i]
        dots = (u * v).sum(axis=1)
        if dots.size:
            worst_dot = min(worst_dot, float(dots.min()))
    report.add(
        "non-obtuse triangles",
        worst_dot > -GEOM_TOL,
        f"min corner dot product {worst_dot:.3e}",
    )

    # Edge incidence: interior edges belong to two triangles, boundary edges
    # to exactly one, and the declared boundary edges are exactly the edges
    # seen once.
    edge_count: dict[tuple[int, int], int] = {}
    for tri in mesh.triangles:
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            key = (int(min(a, b)), int(max(a, b)))
            edge_count[key] = edge_count.get(key, 0) + 1
    declared = {(int(min(a, b)), int(max(a, b))) for a, b in mesh.boundary_edges}
    seen_once = {e for e, c in edge_count.items() if c == 1}
    bad_counts = [e for e, c in edge_count.items() if c > 2]
    report.add(
        "boundary edges are the trace of exactly one triangle",
        declared == seen_once and not bad_counts,
        f"declared {len(declared)}, single-incidence {len(seen_once)}, over-shared {len(bad_counts)}",
    )

    total_area = float(areas.sum())
    report.add(
        "triangles tile the unit square",
        abs(total_area - 1.0) <= 1e-14,
        f"total area {total_area!r}",
    )
    total_len = float(boundary_edge_lengths(mesh).sum())
    report.add(
        "boundary edges tile the boundary",
        abs(total_len - 4.0) <= 4.0 * 1e-14,
        f"total length {total_len!r}",
    )

    on_gamma = _on_boundary(mesh.vertices)
    first = on_gamma[: mesh.n_boundary]
    rest = on_gamma[mesh.n_boundary :]
    report.add(
        "boundary-first vertex ordering",
        bool(first.all() and not rest.any()),
        f"{int((~first).sum())} leading vertices off boundary, "
        f"{int(rest.sum())} trailing vertices on boundary",
    )
    report.add(
        "boundary edges use boundary-local indices",
        bool((mesh.boundary_edges < mesh.n_boundary).all()),
        "edge endpoints must be among the first n_boundary vertices",
    )
    return report
