"""Shared data types, validation, and the weight/ratio algebra.

A point P attached to a triangle ABC (or tetrahedron ABCD) is described by
its *components*: the unique weights summing to 1 such that

    OP = sum_V  component_V * OV        for any origin O.

These are normalized barycentric coordinates; everything downstream (center
formulas, distances, areas) is expressed through them.  The companion
description is the *cevian ratio* lambda_XY: the signed ratio in which the
cevian from X through P cuts the opposite side, with lambda_XY = -XM/MY...
more precisely, for the foot M of the cevian from the remaining vertex,
lambda_XY = XM/MY as a signed ratio along the side XY.  The two descriptions
convert into each other by simple quotients, which is what most of this
module implements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "GeometryError",
    "NonPositiveLength",
    "TriangleInequalityViolated",
    "FaceTriangleInequalityViolated",
    "NotRealizable",
    "DegenerateDenominator",
    "ZeroComponent",
    "UnitComponent",
    "InconsistentFaces",
    "NegativeSquaredDistance",
    "ExcenterDenominatorZero",
    "RightAngleOrthocenter",
    "CevaViolation",
    "NumericalCollapse",
    "ParallelSide",
    "ThroughVertex",
    "Tolerance",
    "DEFAULT_TOL",
    "TriangleSides",
    "TetraEdges",
    "Components3",
    "Components4",
    "DeltaComponents",
    "IRVector3",
    "PowerIncenter",
    "VERTICES",
    "FACES",
    "FACE_OPPOSITE",
    "validate_triangle",
    "validate_tetrahedron",
    "gram_volume_term",
    "edge_polynomials",
    "components_from_ir3",
    "ir_from_components3",
    "component_difference",
    "fractional_ratio_determinant",
    "vertex_foot_ratios3",
    "vertex_foot_ratios4",
    "face_components_from_tetra",
    "tetra_components_from_face_pair",
    "shared_edge_residuals",
    "concurrency_defect",
]


# --------------------------------------------------------------------------
# errors

class GeometryError(ValueError):
    """Base class for all typed geometry errors raised by this package."""


class NonPositiveLength(GeometryError):
    pass


class TriangleInequalityViolated(GeometryError):
    pass


class FaceTriangleInequalityViolated(GeometryError):
    pass


class NotRealizable(GeometryError):
    """Edge set does not embed as a nondegenerate tetrahedron."""


class DegenerateDenominator(GeometryError):
    """A conversion denominator vanished (point escaped to infinity)."""


class ZeroComponent(GeometryError):
    """A component is zero: the point lies on a side line, so cevian
    ratios through it are undefined."""


class UnitComponent(GeometryError):
    """A component equals one: the point sits at a vertex, so there is no
    cevian foot on the opposite side/face."""


class InconsistentFaces(GeometryError):
    """Per-face data does not belong to a single common point."""


class NegativeSquaredDistance(GeometryError):
    """A squared-distance formula evaluated significantly below zero,
    which signals unrealizable inputs."""


class ExcenterDenominatorZero(GeometryError):
    """An escribed-sphere weight denominator (surface minus twice one face)
    is not safely positive."""


class RightAngleOrthocenter(GeometryError):
    """Orthocenter cevian ratios have a pole at a right angle; use the
    component form, which is total."""


class CevaViolation(GeometryError):
    """Cevian ratio triple whose product is not 1 cannot come from
    concurrent cevians."""


class NumericalCollapse(GeometryError):
    """Coordinate reconstruction lost the last dimension."""


class ParallelSide(GeometryError):
    pass


class ThroughVertex(GeometryError):
    pass


# --------------------------------------------------------------------------
# tolerance plumbing

@dataclass(frozen=True)
class Tolerance:
    """Mixed absolute/relative comparison: |x-y| <= atol + rtol*max(|x|,|y|)."""

    rtol: float = 1e-9
    atol: float = 1e-12

    def __post_init__(self):
        if self.rtol < 0 or self.atol < 0:
            raise ValueError("tolerances must be nonnegative")

    def close(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.atol + self.rtol * max(abs(x), abs(y))

    def is_zero(self, x: float, scale: float = 1.0) -> bool:
        return abs(x) <= self.atol + self.rtol * abs(scale)


DEFAULT_TOL = Tolerance()

VERTICES = ("A", "B", "C", "D")

# Cyclic vertex order of each tetrahedron face, keyed by face name; the face
# "BCD" is the one opposite vertex A, and so on.
FACES = {
    "BCD": ("B", "C", "D"),
    "CDA": ("C", "D", "A"),
    "DAB": ("D", "A", "B"),
    "ABC": ("A", "B", "C"),
}
FACE_OPPOSITE = {"BCD": "A", "CDA": "B", "DAB": "C", "ABC": "D"}


def canonical_face(face: str) -> str:
    key = face.upper()
    if key not in FACES:
        raise GeometryError(f"unknown face {face!r}; expected one of {sorted(FACES)}")
    return key


# --------------------------------------------------------------------------
# length data

@dataclass(frozen=True)
class TriangleSides:
    """Side lengths a = BC, b = CA, c = AB (opposite the like-named vertex)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not (v > 0) or not math.isfinite(v):
                raise NonPositiveLength(f"side {name} = {v!r} must be a positive finite length")
        a, b, c = self.a, self.b, self.c
        for lhs, pair in (((b + c - a), "b+c>a"), ((c + a - b), "c+a>b"), ((a + b - c), "a+b>c")):
            if not (lhs > 0):
                raise TriangleInequalityViolated(
                    f"triangle inequality {pair} fails for sides ({a}, {b}, {c})"
                )

    @property
    def semiperimeter(self) -> float:
        return 0.5 * (self.a + self.b + self.c)

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def as_tuple(self):
        return (self.a, self.b, self.c)


def validate_triangle(a: float, b: float, c: float) -> TriangleSides:
    """Check positivity and the three strict triangle inequalities."""
    return TriangleSides(float(a), float(b), float(c))


_EDGE_NAMES = ("ab", "ac", "ad", "bc", "cd", "db")

# Each face's edges in the face's cyclic vertex order (V1V2, V2V3, V3V1).
_FACE_EDGE_NAMES = {
    "BCD": ("bc", "cd", "db"),
    "CDA": ("cd", "ad", "ac"),
    "DAB": ("ad", "ab", "db"),
    "ABC": ("ab", "bc", "ac"),
}


def edge_polynomials(edges) -> dict:
    """The symmetric edge polynomials behind the volume formula.

    Returns delta2 (half the sum of squared edges), q2 (half the sum of
    products of squared opposite-edge pairs), and t1, t2, t3 with
    t1 - t2 - t3 = 36 * volume**2.
    """
    ab, ac, ad, bc, cd, db = _six(edges)
    ab2, ac2, ad2 = ab * ab, ac * ac, ad * ad
    bc2, cd2, db2 = bc * bc, cd * cd, db * db
    delta2 = 0.5 * (ab2 + ac2 + ad2 + bc2 + cd2 + db2)
    # opposite edge pairs: AB-CD, AC-DB, AD-BC
    q2 = 0.5 * (ab2 * cd2 + ac2 * db2 + ad2 * bc2)
    t1 = q2 * delta2
    t2 = 0.5 * (
        ab2 * cd2 * (ab2 + cd2)
        + ac2 * db2 * (ac2 + db2)
        + ad2 * bc2 * (ad2 + bc2)
    )
    # one product of squared edges per face
    t3 = 0.25 * (
        bc2 * cd2 * db2  # BCD
        + cd2 * ad2 * ac2  # CDA
        + ad2 * ab2 * db2  # DAB
        + ab2 * bc2 * ac2  # ABC
    )
    return {"delta2": delta2, "q2": q2, "t1": t1, "t2": t2, "t3": t3}


def gram_volume_term(edges) -> float:
    """t1 - t2 - t3: positive iff the six lengths realize a tetrahedron.

    Equals 36 * V**2 for a realizable edge set.  No validation is done here;
    the caller interprets nonpositive values.
    """
    p = edge_polynomials(edges)
    return p["t1"] - p["t2"] - p["t3"]


def _six(edges):
    if isinstance(edges, TetraEdges):
        return edges.as_tuple()
    vals = tuple(float(v) for v in edges)
    if len(vals) != 6:
        raise GeometryError(f"expected six edge lengths, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class TetraEdges:
    """Edge lengths of tetrahedron ABCD in the order AB, AC, AD, BC, CD, DB."""

    ab: float
    ac: float
    ad: float
    bc: float
    cd: float
    db: float

    def __post_init__(self):
        for name in _EDGE_NAMES:
            v = getattr(self, name)
            if not (v > 0) or not math.isfinite(v):
                raise NonPositiveLength(f"edge {name} = {v!r} must be a positive finite length")
        for face, names in _FACE_EDGE_NAMES.items():
            x, y, z = (getattr(self, n) for n in names)
            if not (x + y > z and y + z > x and z + x > y):
                raise FaceTriangleInequalityViolated(
                    f"face {face} edges ({x}, {y}, {z}) violate the triangle inequality"
                )
        polys = edge_polynomials(self.as_tuple())
        gram = polys["t1"] - polys["t2"] - polys["t3"]
        # scale-aware strict positivity gate: delta2**3 has the same units
        if not (gram > DEFAULT_TOL.atol * polys["delta2"] ** 3):
            raise NotRealizable(
                f"edge set does not realize a nondegenerate tetrahedron "
                f"(volume term {gram:.6g})"
            )

    def as_tuple(self):
        return (self.ab, self.ac, self.ad, self.bc, self.cd, self.db)

    def length(self, x: str, y: str) -> float:
        """Length of the edge between vertices x and y (order-free)."""
        key = "".join(sorted((x.lower(), y.lower())))
        # sorted lowercase pairs: ab, ac, ad, bc, cd and bd->db
        if key == "bd":
            key = "db"
        try:
            return getattr(self, key)
        except AttributeError:
            raise GeometryError(f"no edge between {x!r} and {y!r}") from None

    def face_sides(self, face: str) -> TriangleSides:
        """The face triangle's sides with a = V2V3, b = V3V1, c = V1V2."""
        key = canonical_face(face)
        e12, e23, e31 = (getattr(self, n) for n in _FACE_EDGE_NAMES[key])
        return TriangleSides(a=e23, b=e31, c=e12)

    def polynomials(self) -> dict:
        return edge_polynomials(self.as_tuple())


def validate_tetrahedron(ab, ac, ad, bc, cd, db) -> TetraEdges:
    """Positivity, four face triangle inequalities, and the volume gate."""
    return TetraEdges(float(ab), float(ac), float(ad), float(bc), float(cd), float(db))


# --------------------------------------------------------------------------
# components and ratios

def _normalized(values, cls_name):
    total = math.fsum(values)
    scale = math.fsum(abs(v) for v in values) + 1.0
    if abs(total) <= DEFAULT_TOL.atol * scale:
        raise DegenerateDenominator(
            f"{cls_name} weights {values} sum to ~0 and cannot be normalized"
        )
    return tuple(v / total for v in values)


@dataclass(frozen=True)
class Components3:
    """Normalized weights (alpha_a, alpha_b, alpha_c) summing to 1.

    For a face of a tetrahedron the three slots follow the face's cyclic
    vertex order instead of literal A, B, C.
    """

    alpha_a: float
    alpha_b: float
    alpha_c: float

    def __post_init__(self):
        na, nb, nc = _normalized((self.alpha_a, self.alpha_b, self.alpha_c), "Components3")
        object.__setattr__(self, "alpha_a", na)
        object.__setattr__(self, "alpha_b", nb)
        object.__setattr__(self, "alpha_c", nc)

    def as_tuple(self):
        return (self.alpha_a, self.alpha_b, self.alpha_c)


@dataclass(frozen=True)
class Components4:
    """Normalized weights (beta_a, beta_b, beta_c, beta_d) summing to 1."""

    beta_a: float
    beta_b: float
    beta_c: float
    beta_d: float

    def __post_init__(self):
        vals = _normalized((self.beta_a, self.beta_b, self.beta_c, self.beta_d), "Components4")
        for name, v in zip(("beta_a", "beta_b", "beta_c", "beta_d"), vals):
            object.__setattr__(self, name, v)

    def as_tuple(self):
        return (self.beta_a, self.beta_b, self.beta_c, self.beta_d)

    def of(self, vertex: str) -> float:
        return self.as_tuple()[VERTICES.index(vertex.upper())]


@dataclass(frozen=True)
class DeltaComponents:
    """Entrywise difference of two component vectors; entries sum to 0."""

    values: tuple

    @property
    def arity(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PowerIncenter:
    """Tetrahedron center with weights proportional to the n-th powers of the
    opposite-face areas.  n = 0 reduces to the centroid, n = 1 to the
    incenter; any finite real n is accepted."""

    n: float

    def __post_init__(self):
        if not math.isfinite(self.n):
            raise GeometryError("power-incenter exponent must be finite")

    def __str__(self):
        return f"power:{self.n:g}"


@dataclass(frozen=True)
class IRVector3:
    """Cevian ratios (lambda_ab, lambda_bc, lambda_ca) of one point.

    Entries must be finite and nonzero, and their product must be 1 (the
    concurrency condition for the three cevians).  Reciprocals give the
    opposite-direction ratios, e.g. lambda_ba = 1/lambda_ab.
    """

    lambda_ab: float
    lambda_bc: float
    lambda_ca: float

    def __post_init__(self):
        for name, v in zip(("lambda_ab", "lambda_bc", "lambda_ca"), self.as_tuple()):
            if not math.isfinite(v) or v == 0.0:
                raise DegenerateDenominator(
                    f"{name} = {v!r}: cevian ratio must be finite and nonzero"
                )
        prod = self.lambda_ab * self.lambda_bc * self.lambda_ca
        if not DEFAULT_TOL.close(prod, 1.0):
            raise CevaViolation(f"ratio product {prod!r} != 1")

    def as_tuple(self):
        return (self.lambda_ab, self.lambda_bc, self.lambda_ca)

    @property
    def lambda_ba(self) -> float:
        return 1.0 / self.lambda_ab

    @property
    def lambda_cb(self) -> float:
        return 1.0 / self.lambda_bc

    @property
    def lambda_ac(self) -> float:
        return 1.0 / self.lambda_ca


def components_from_ir3(ir: IRVector3) -> Components3:
    """Components of the point with the given cevian ratios.

    alpha_a = 1 / (1 + lambda_ab + lambda_ac) and the other two follow by
    multiplying with the respective ratio.
    """
    lam_ab = ir.lambda_ab
    lam_ac = 1.0 / ir.lambda_ca
    denom = 1.0 + lam_ab + lam_ac
    if abs(denom) <= DEFAULT_TOL.atol * (1.0 + abs(lam_ab) + abs(lam_ac)):
        raise DegenerateDenominator(
            "1 + lambda_ab + lambda_ac ~ 0: the point escapes to infinity"
        )
    return Components3(1.0 / denom, lam_ab / denom, lam_ac / denom)


def ir_from_components3(c: Components3) -> IRVector3:
    """Inverse of components_from_ir3: quotients of consecutive components."""
    aa, ab, ac = c.as_tuple()
    for name, v in zip(("alpha_a", "alpha_b", "alpha_c"), (aa, ab, ac)):
        if abs(v) <= DEFAULT_TOL.atol:
            raise ZeroComponent(f"{name} ~ 0: point on a side line, ratios undefined")
    return IRVector3(ab / aa, ac / ab, aa / ac)


def component_difference(c1, c2) -> DeltaComponents:
    """Entrywise c2 - c1 for two component vectors of the same arity."""
    t1, t2 = c1.as_tuple(), c2.as_tuple()
    if len(t1) != len(t2):
        raise GeometryError("component arities differ")
    return DeltaComponents(tuple(y - x for x, y in zip(t1, t2)))


def fractional_ratio_determinant(lam_al: float, lam_bm: float, lam_cn: float) -> float:
    """Defect of three vertex-to-foot ratios belonging to one common point.

    Vanishes exactly when some point P has AL, BM, CN as its three cevians
    with AP/PL = lam_al and so on.
    """
    return lam_al * lam_bm * lam_cn - (lam_al + lam_bm + lam_cn) - 2.0


def vertex_foot_ratios3(c: Components3) -> dict:
    """Vertex-to-foot ratios along each cevian of the point with components c.

    kappa_al = AP/AL = 1 - alpha_a (position of P along the full cevian);
    lam_al = AP/PL = kappa/(1-kappa).  The three kappas always sum to 2.
    """
    out = {}
    for key, alpha in zip(("al", "bm", "cn"), c.as_tuple()):
        if abs(alpha) <= DEFAULT_TOL.atol:
            raise ZeroComponent(f"component for cevian {key} ~ 0")
        if DEFAULT_TOL.close(alpha, 1.0):
            raise UnitComponent(f"component for cevian {key} ~ 1: point at the vertex")
        kappa = 1.0 - alpha
        out["kap_" + key] = kappa
        out["lam_" + key] = kappa / alpha
    return out


def vertex_foot_ratios4(c: Components4) -> dict:
    """kappa_x = 1 - beta_x for each vertex; the four kappas sum to 3."""
    out = {}
    for key, beta in zip(("a", "b", "c", "d"), c.as_tuple()):
        if DEFAULT_TOL.close(beta, 1.0):
            raise UnitComponent(f"beta_{key} ~ 1: point at vertex {key.upper()}")
        out["kap_" + key] = 1.0 - beta
    return out


def face_components_from_tetra(beta: Components4, face: str) -> Components3:
    """Components, on one face, of where the vertex-to-point line pierces it.

    For face BCD (opposite A) the pierce point of line A-P has weights
    beta_x / (1 - beta_a) on the face vertices; the returned slots follow
    the face's cyclic vertex order.
    """
    key = canonical_face(face)
    opp = FACE_OPPOSITE[key]
    denom = 1.0 - beta.of(opp)
    if abs(denom) <= DEFAULT_TOL.atol:
        raise UnitComponent(
            f"beta_{opp.lower()} ~ 1: line through {opp} is parallel to face {key}"
        )
    vals = [beta.of(v) / denom for v in FACES[key]]
    return Components3(*vals)


def tetra_components_from_face_pair(
    alpha_on_face_of_a: Components3,
    alpha_on_face_of_b: Components3,
    tol: Tolerance = DEFAULT_TOL,
) -> Components4:
    """Reassemble tetrahedron components from two face pierce points.

    ``alpha_on_face_of_a`` lives on face BCD (slots B, C, D) and
    ``alpha_on_face_of_b`` on face CDA (slots C, D, A).  The result is
    validated by splitting it back onto both faces; a mismatch raises
    InconsistentFaces, which means the two pierce points do not belong to a
    single common point.
    """
    a_b, a_c, a_d = alpha_on_face_of_a.as_tuple()  # weights of B, C, D
    b_c, b_d, b_a = alpha_on_face_of_b.as_tuple()  # weights of C, D, A
    denom = 1.0 - b_a * a_b
    if abs(denom) <= tol.atol * (1.0 + abs(b_a * a_b)):
        raise DegenerateDenominator("1 - alpha_a*alpha_b ~ 0 while reassembling")
    kappa = (1.0 - b_a) / denom  # AP/AP_A along the cevian from A
    beta = Components4(
        b_a * (1.0 - a_b) / denom,
        kappa * a_b,
        kappa * a_c,
        kappa * a_d,
    )
    for face, given in (("BCD", alpha_on_face_of_a), ("CDA", alpha_on_face_of_b)):
        back = face_components_from_tetra(beta, face)
        worst = max(abs(x - y) for x, y in zip(back.as_tuple(), given.as_tuple()))
        if worst > tol.atol + tol.rtol * 1.0:
            raise InconsistentFaces(
                f"face {face} round-trip defect {worst:.3g}: the two faces do not "
                f"share a common point"
            )
    return beta


# shared edges between face pairs and whether the second face states the
# ratio in the opposite direction (so its reciprocal must be compared)
_SHARED_EDGES = (
    ("CD", "BCD", "CDA", False),
    ("DB", "BCD", "DAB", True),
    ("BC", "BCD", "ABC", False),
    ("DA", "CDA", "DAB", False),
    ("AC", "CDA", "ABC", True),
    ("AB", "DAB", "ABC", False),
)


def _face_ratio(face: str, comps: Components3, edge: str) -> float:
    """lambda_edge within the given face, from that face's components."""
    order = FACES[face]
    vals = dict(zip(order, comps.as_tuple()))
    x, y = edge[0], edge[1]
    if abs(vals[x]) <= DEFAULT_TOL.atol:
        raise DegenerateDenominator(f"component of {x} on face {face} ~ 0")
    return vals[y] / vals[x]


def shared_edge_residuals(face_components: dict) -> dict:
    """Per-edge disagreement of the section ratios implied by four face points.

    ``face_components`` maps each face name to the Components3 of a point on
    that face.  For every edge shared by two faces, both faces determine a
    ratio in which the respective point's cevian cuts that edge; all six
    pairs agree exactly when the four vertex-to-face-point lines pass
    through one common point.
    """
    comps = {canonical_face(k): v for k, v in face_components.items()}
    if sorted(comps) != sorted(FACES):
        raise GeometryError("need components for all four faces")
    out = {}
    for edge, f1, f2, flip in _SHARED_EDGES:
        r1 = _face_ratio(f1, comps[f1], edge)
        r2 = _face_ratio(f2, comps[f2], edge if not flip else edge[::-1])
        if flip:
            r2 = 1.0 / r2
        out[edge] = abs(r1 - r2)
    return out


def concurrency_defect(face_components: dict) -> float:
    """Largest shared-edge ratio disagreement; see shared_edge_residuals."""
    return max(shared_edge_residuals(face_components).values())
