"""Closed-form components for tetrahedron centers, per-face cevian-ratio
tensors, and projection components onto faces — all from the six edge
lengths.

Supported centers: centroid G, incenter I (weights = opposite-face areas),
circumcenter Q (polynomial weights U_X), the four escribed-sphere centers
E_A..E_D, and the power family with weights (S^X)^n for any real n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core_model import (
    Components3,
    Components4,
    DEFAULT_TOL,
    ExcenterDenominatorZero,
    FACES,
    FACE_OPPOSITE,
    GeometryError,
    IRVector3,
    PowerIncenter,
    TetraEdges,
    Tolerance,
    ZeroComponent,
    canonical_face,
    face_components_from_tetra,
    shared_edge_residuals,
    tetra_components_from_face_pair,
)
from .tri_metrics import area_determinant

__all__ = [
    "TET_CENTER_KINDS",
    "FaceAreas",
    "CircumAux",
    "parse_tet_center",
    "face_areas",
    "tet_center_components",
    "circum_aux",
    "tet_center_ir_tensor",
    "projection_components",
    "projection_of_center",
    "concurrency_conditions",
]

TET_CENTER_KINDS = ("G", "I", "Q", "E_A", "E_B", "E_C", "E_D")


def parse_tet_center(token):
    """Turn a kind token into "G"/"I"/"Q"/"E_X" or a PowerIncenter.

    Accepts PowerIncenter instances, the named-kind strings, and
    "power:<n>" strings (e.g. "power:2", "power:-0.5").
    """
    if isinstance(token, PowerIncenter):
        return token
    k = str(token).upper()
    if k in TET_CENTER_KINDS:
        return k
    if k.startswith("POWER:"):
        try:
            return PowerIncenter(float(k.split(":", 1)[1]))
        except ValueError:
            raise GeometryError(f"bad power-center exponent in {token!r}") from None
    raise GeometryError(
        f"unknown center kind {token!r}; expected one of {TET_CENTER_KINDS} or power:<n>"
    )


@dataclass(frozen=True)
class FaceAreas:
    """Heron areas of the four faces, each keyed by its opposite vertex,
    plus their sum s (the total surface area)."""

    s_a: float
    s_b: float
    s_c: float
    s_d: float
    s: float

    def of(self, vertex: str) -> float:
        return getattr(self, "s_" + vertex.lower())

    def opposite_sum(self, vertex: str) -> float:
        """T^X = s - 2*S^X: the other three areas minus this one."""
        return self.s - 2.0 * self.of(vertex)

    def as_dict(self) -> dict:
        return {"s_a": self.s_a, "s_b": self.s_b, "s_c": self.s_c,
                "s_d": self.s_d, "s": self.s}


def face_areas(edges: TetraEdges) -> FaceAreas:
    by_vertex = {}
    for face, opp in FACE_OPPOSITE.items():
        by_vertex[opp] = area_determinant(edges.face_sides(face))
    total = math.fsum(by_vertex.values())
    return FaceAreas(by_vertex["A"], by_vertex["B"], by_vertex["C"],
                     by_vertex["D"], total)


@dataclass(frozen=True)
class CircumAux:
    """Circumcenter weight polynomials u_a..u_d (degree 6 in the edges) and
    their sum u, which equals 144 * volume^2."""

    u_a: float
    u_b: float
    u_c: float
    u_d: float
    u: float

    def of(self, vertex: str) -> float:
        return getattr(self, "u_" + vertex.lower())


def circum_aux(edges: TetraEdges) -> CircumAux:
    """Circumcenter weights: for each vertex V with opposite face (X, Y, Z),

        u_V = sum over face edges e, with R the face vertex off e, of
              (delta2f - e^2) * e^2 * VR^2   minus   XY^2*YZ^2*ZX^2,

    where delta2f is half the face's sum of squared edges.  u_V/u are the
    circumcenter's components, and u = 4*(t1 - t2 - t3) > 0.
    """
    vals = {}
    for face, opp in FACE_OPPOSITE.items():
        v1, v2, v3 = FACES[face]
        e12 = edges.length(v1, v2) ** 2
        e23 = edges.length(v2, v3) ** 2
        e31 = edges.length(v3, v1) ** 2
        delta2f = 0.5 * (e12 + e23 + e31)
        acc = (
            (delta2f - e12) * e12 * edges.length(opp, v3) ** 2
            + (delta2f - e23) * e23 * edges.length(opp, v1) ** 2
            + (delta2f - e31) * e31 * edges.length(opp, v2) ** 2
            - e12 * e23 * e31
        )
        vals[opp] = acc
    total = math.fsum(vals.values())
    return CircumAux(vals["A"], vals["B"], vals["C"], vals["D"], total)


def tet_center_components(kind, edges: TetraEdges) -> Components4:
    """Components (weights summing to 1) of the requested center."""
    k = parse_tet_center(kind)
    if isinstance(k, PowerIncenter):
        fa = face_areas(edges)
        return Components4(*(fa.of(v) ** k.n for v in "ABCD"))
    if k == "G":
        return Components4(1.0, 1.0, 1.0, 1.0)
    if k == "I":
        fa = face_areas(edges)
        return Components4(fa.s_a, fa.s_b, fa.s_c, fa.s_d)
    if k == "Q":
        aux = circum_aux(edges)
        return Components4(aux.u_a, aux.u_b, aux.u_c, aux.u_d)
    # escribed-sphere centers: sign flip at the named vertex
    vertex = k[-1]
    fa = face_areas(edges)
    if fa.opposite_sum(vertex) <= DEFAULT_TOL.atol * fa.s:
        raise ExcenterDenominatorZero(
            f"surface minus twice the face area opposite {vertex} is not "
            f"safely positive; the escribed sphere escapes to infinity"
        )
    vals = [(-1.0 if v == vertex else 1.0) * fa.of(v) for v in "ABCD"]
    return Components4(*vals)


def tet_center_ir_tensor(kind, edges: TetraEdges) -> dict:
    """Per-face cevian ratios of a center: for each face (V1, V2, V3) in
    cyclic order, the triple (beta_V2/beta_V1, beta_V3/beta_V2,
    beta_V1/beta_V3).

    Defined for any center with no vanishing component (G, I, and the
    excenters always qualify); ZeroComponent otherwise.
    """
    beta = tet_center_components(kind, edges)
    by_vertex = dict(zip("ABCD", beta.as_tuple()))
    for v, val in by_vertex.items():
        if abs(val) <= DEFAULT_TOL.atol:
            raise ZeroComponent(f"component of {v} ~ 0: per-face ratios undefined")
    out = {}
    for face, (v1, v2, v3) in FACES.items():
        out[face] = IRVector3(
            by_vertex[v2] / by_vertex[v1],
            by_vertex[v3] / by_vertex[v2],
            by_vertex[v1] / by_vertex[v3],
        )
    return out


def _face_geometry(edges: TetraEdges, face: str):
    key = canonical_face(face)
    v1, v2, v3 = FACES[key]
    e12 = edges.length(v1, v2) ** 2
    e23 = edges.length(v2, v3) ** 2
    e31 = edges.length(v3, v1) ** 2
    delta2f = 0.5 * (e12 + e23 + e31)
    # identity: sum of (delta2f - e^2)*e^2 over the face edges = 8*area^2
    eight_sq = (delta2f - e12) * e12 + (delta2f - e23) * e23 + (delta2f - e31) * e31
    return key, (v1, v2, v3), (e12, e23, e31), delta2f, eight_sq


def projection_components(edges: TetraEdges, sq_dists: dict, face: str) -> Components3:
    """Components, within one face, of the orthogonal projection of a point
    P onto that face's plane.

    ``sq_dists`` holds P's squared distances to the four vertices under keys
    "pa2", "pb2", "pc2", "pd2" (the one for the face's opposite vertex is
    not used).  P may be anywhere in space; slots follow the face's cyclic
    vertex order.
    """
    key, (v1, v2, v3), (e12, e23, e31), delta2f, eight_sq = _face_geometry(edges, face)
    try:
        d1, d2, d3 = (float(sq_dists["p" + v.lower() + "2"]) for v in (v1, v2, v3))
    except KeyError as missing:
        raise GeometryError(f"sq_dists is missing key {missing}") from None
    n1 = (delta2f - e23) * e23 + (delta2f - e31) * (d3 - d1) + (delta2f - e12) * (d2 - d1)
    n2 = (delta2f - e31) * e31 + (delta2f - e12) * (d1 - d2) + (delta2f - e23) * (d3 - d2)
    n3 = (delta2f - e12) * e12 + (delta2f - e23) * (d2 - d3) + (delta2f - e31) * (d1 - d3)
    return Components3(n1 / eight_sq, n2 / eight_sq, n3 / eight_sq)


def vertex_projection_components(edges: TetraEdges, face: str) -> Components3:
    """Projection of the face's opposite vertex onto the face (the foot of
    the tetrahedron's altitude from that vertex)."""
    key = canonical_face(face)
    opp = FACE_OPPOSITE[key]
    sq = {"p" + v.lower() + "2": edges.length(opp, v) ** 2 for v in FACES[key]}
    sq["p" + opp.lower() + "2"] = 0.0
    return projection_components(edges, sq, key)


def projection_of_center(kind, edges: TetraEdges, face: str) -> Components3:
    """Closed-form components of a center's orthogonal projection onto a face.

    Q projects to the face's own circumcenter; G and I reduce affinely to
    the opposite vertex's projection: the projection of sum(beta_V * V) is
    sum over face vertices plus beta_W * (projection of W).
    """
    k = parse_tet_center(kind)
    if k not in ("Q", "G", "I"):
        raise GeometryError(
            f"projection closed form available for Q, G, I only, not {kind!r}"
        )
    key, (v1, v2, v3), (e12, e23, e31), delta2f, eight_sq = _face_geometry(edges, face)
    if k == "Q":
        return Components3(
            (delta2f - e23) * e23 / eight_sq,
            (delta2f - e31) * e31 / eight_sq,
            (delta2f - e12) * e12 / eight_sq,
        )
    foot = vertex_projection_components(edges, key).as_tuple()
    if k == "G":
        return Components3(*((1.0 + f) / 4.0 for f in foot))
    fa = face_areas(edges)
    opp = FACE_OPPOSITE[key]
    own = fa.of(opp)  # the face's own area is the one opposite its off-vertex
    vals = [(fa.of(v) + own * f) / fa.s for v, f in zip((v1, v2, v3), foot)]
    return Components3(*vals)


def concurrency_conditions(edges: TetraEdges, face_components: dict,
                           tol: Tolerance = DEFAULT_TOL) -> dict:
    """Check whether four per-face points come from one common point.

    For each edge shared by two faces, both face points imply a section
    ratio on that edge; the six disagreements are the report's residuals.
    When all six pass the tolerance, the common point's Components4 are
    reassembled from two faces and round-tripped through all four.

    Returns a dict with "edge_residuals", "max_residual", "concurrent",
    "components" (None unless concurrent), and "roundtrip_defect".
    """
    comps = {canonical_face(k): v for k, v in face_components.items()}
    residuals = shared_edge_residuals(comps)
    max_residual = max(residuals.values())
    concurrent = max_residual <= tol.atol + tol.rtol
    report = {
        "edge_residuals": residuals,
        "max_residual": max_residual,
        "concurrent": concurrent,
        "components": None,
        "roundtrip_defect": None,
    }
    if not concurrent:
        return report
    beta = tetra_components_from_face_pair(comps["BCD"], comps["CDA"], tol=tol)
    worst = 0.0
    for face in FACES:
        back = face_components_from_tetra(beta, face)
        worst = max(
            worst,
            max(abs(x - y) for x, y in zip(back.as_tuple(), comps[face].as_tuple())),
        )
    report["components"] = beta
    report["roundtrip_defect"] = worst
    report["concurrent"] = worst <= tol.atol + tol.rtol
    if not report["concurrent"]:
        report["components"] = None
    return report
