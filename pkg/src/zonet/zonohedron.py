"""Construction of the polar zonohedron P(n, theta) and structural validation.

The solid is determined by n unit generators forming an equally spaced star at
elevation theta around the vertical pole axis:

    u_k = (cos(2*pi*k/n) * cos(theta), sin(2*pi*k/n) * cos(theta), sin(theta))

Vertices are sums of cyclically consecutive generator runs, identified by
(start, length) so deduplication never keys on floats.  Faces are rhombs
labeled (zone, step): zone i is the parallel class of generator u_i, and step k
counts from the north pole (step 1 touches the north pole).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

VALIDATION_TOL = 1e-10


class ConstructionError(ValueError):
    """A structural invariant failed during build; the message names the check."""


@dataclass(frozen=True)
class Params:
    """n generators at elevation theta (radians), theta in [0, pi/2).

    theta = 0 is representable (the doubly-covered n-gon) but build() rejects
    it; that degenerate case is produced directly by the unfold module.
    """

    n: int
    theta: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 3:
            raise ValueError("n must be an integer >= 3")
        if not (0.0 <= self.theta < math.pi / 2):
            raise ValueError("theta must lie in [0, pi/2)")

    @property
    def alpha(self) -> float:
        """Rhomb angle at the pole corner; also the net's zone-to-zone rotation."""
        return rhomb_angle(self, 1)


def generators(p: Params) -> np.ndarray:
    """The n unit generators, shape (n, 3)."""
    k = np.arange(p.n)
    az = 2.0 * math.pi * k / p.n
    ct, st = math.cos(p.theta), math.sin(p.theta)
    return np.stack([np.cos(az) * ct, np.sin(az) * ct, np.full(p.n, st)], axis=1)


def rhomb_angle(p: Params, k: int) -> float:
    """Angle between generator directions at cyclic distance k, in (0, pi].

    gamma_1 is alpha; for n even, gamma_{n/2} = pi - 2*theta, so the
    complementary corner of the central rhomb is exactly 2*theta.
    """
    if not (1 <= k <= p.n - 1):
        raise ValueError(f"k must be in [1, {p.n - 1}]")
    c = math.cos(p.theta) ** 2 * math.cos(2.0 * math.pi * k / p.n) + math.sin(p.theta) ** 2
    return math.acos(min(1.0, max(-1.0, c)))


@dataclass(frozen=True)
class Face:
    """A rhomb face: vertex indices in cycle order, labeled (zone, step)."""

    zone: int
    step: int
    vertex_ids: tuple[int, int, int, int]


@dataclass(frozen=True)
class Zonohedron:
    params: Params
    generators: np.ndarray  # (n, 3)
    vertices: np.ndarray  # (n*(n-1)+2, 3)
    vertex_keys: tuple[tuple[int, int], ...]  # (start, length) runs
    faces: tuple[Face, ...]  # ordered by (zone, step)
    zones: tuple[tuple[int, ...], ...]  # face indices per zone

    @property
    def south_pole(self) -> np.ndarray:
        return self.vertices[0]

    @property
    def north_pole(self) -> np.ndarray:
        return self.vertices[-1]

    def face_points(self, face: Face) -> np.ndarray:
        return self.vertices[list(face.vertex_ids)]

    def edge_set(self) -> set[tuple[int, int]]:
        edges: set[tuple[int, int]] = set()
        for f in self.faces:
            ids = f.vertex_ids
            for i in range(4):
                a, b = ids[i], ids[(i + 1) % 4]
                edges.add((a, b) if a < b else (b, a))
        return edges


def _vertex_keys(n: int) -> list[tuple[int, int]]:
    keys: list[tuple[int, int]] = [(0, 0)]  # south pole: empty run
    for length in range(1, n):
        for start in range(n):
            keys.append((start, length))
    keys.append((0, n))  # north pole: the full star
    return keys


def build(p: Params) -> Zonohedron:
    """Construct P(n, theta) for theta > 0; structural invariants are checked."""
    if p.theta <= 0.0:
        raise ConstructionError(
            "theta = 0 collapses the solid; use the unfold module's degenerate path"
        )
    n = p.n
    gens = generators(p)

    keys = _vertex_keys(n)
    index = {key: i for i, key in enumerate(keys)}
    verts = np.zeros((len(keys), 3))
    for key, i in index.items():
        start, length = key
        v = np.zeros(3)
        for j in range(length):
            v += gens[(start + j) % n]
        verts[i] = v

    faces: list[Face] = []
    zones: list[tuple[int, ...]] = []
    for zone in range(n):
        ids: list[int] = []
        for step in range(1, n):
            # step k from the north pole corresponds to a run of length n-k
            L = n - step
            a = index[((zone + 1) % n, L - 1) if L - 1 > 0 else (0, 0)]
            b = index[(zone, L)]
            d = index[(zone, L + 1) if L + 1 < n else (0, n)]
            c = index[((zone + 1) % n, L)]
            faces.append(Face(zone, step, (a, b, d, c)))
            ids.append(len(faces) - 1)
        zones.append(tuple(ids))

    z = Zonohedron(p, gens, verts, tuple(keys), tuple(faces), tuple(zones))
    report = validate(z)
    if not report.passed:
        raise ConstructionError(f"construction invariant failed: {report.failures()}")
    return z


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    margins: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]


def validate(z: Zonohedron, tol: float = VALIDATION_TOL) -> ValidationReport:
    """Check edge lengths, planarity, closedness, symmetry, and convexity."""
    rep = ValidationReport()
    verts = z.vertices

    edge_dev = 0.0
    planarity = 0.0
    for f in z.faces:
        pts = z.face_points(f)
        for i in range(4):
            edge_dev = max(edge_dev, abs(np.linalg.norm(pts[(i + 1) % 4] - pts[i]) - 1.0))
        # a parallelogram closes: a - b + d - c = 0 in cycle order (a, b, d, c)
        planarity = max(planarity, float(np.linalg.norm(pts[0] - pts[1] + pts[2] - pts[3])))
    rep.margins["max_edge_length_deviation"] = edge_dev
    rep.checks["unit_edges"] = edge_dev <= tol
    rep.margins["max_face_nonplanarity"] = planarity
    rep.checks["planar_faces"] = planarity <= tol

    # closed orientable surface: every undirected edge in exactly two faces
    from collections import Counter

    edge_count: Counter[tuple[int, int]] = Counter()
    for f in z.faces:
        ids = f.vertex_ids
        for i in range(4):
            a, b = ids[i], ids[(i + 1) % 4]
            edge_count[(a, b) if a < b else (b, a)] += 1
    rep.checks["closed_mesh"] = all(c == 2 for c in edge_count.values())
    rep.margins["edge_multiplicity_max"] = float(max(edge_count.values()))

    center = 0.5 * (z.north_pole + z.south_pole)
    mirrored = 2.0 * center - verts
    # match each mirrored vertex against the vertex cloud
    from scipy.spatial import cKDTree

    tree = cKDTree(verts)
    dists, _ = tree.query(mirrored)
    sym = float(np.max(dists))
    rep.margins["central_symmetry_residual"] = sym
    rep.checks["central_symmetry"] = sym <= tol

    from scipy.spatial import ConvexHull

    hull = ConvexHull(verts)
    eqs = hull.equations
    viol = float(np.max(eqs[:, :3] @ verts.T + eqs[:, 3:4]))
    rep.margins["max_hull_violation"] = viol
    rep.checks["convex"] = viol <= max(tol, 1e-9) and len(hull.vertices) == len(verts)

    return rep
