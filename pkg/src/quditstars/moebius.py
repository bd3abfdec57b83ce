"""Moebius transformations of the Riemann sphere and their amplitude lifts.

A nonsingular 2x2 complex matrix acts on C u {inf} by
z -> (a z + b)/(c z + d).  The special-unitary subfamily, built with
``from_su2``, acts as rigid rotations of the sphere and lifts to an exact
d x d unitary on the amplitudes of a d-level state, for any d: the same
two complex parameters drive every dimension.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import NotUnitary, SingularMatrix, UnknownGate, ZeroInput
from .majorana import Constellation, MajoranaPolynomial, _sqrt_binomial_weights
from .sphere import INFINITY, ExtendedComplex, SpherePoint, as_point, to_sphere

__all__ = [
    "MoebiusMap",
    "UnitaryMatrix",
    "RotationMatrix",
    "make",
    "from_su2",
    "apply_point",
    "compose",
    "inverse",
    "is_special_unitary",
    "projective_distance",
    "projectively_equal",
    "transform_constellation",
    "transform_polynomial",
    "lift_to_unitary",
    "to_rotation",
    "standard_gate",
    "phase_aligned_distance",
]

# |ad - bc| must exceed this times the squared largest entry modulus.
_SINGULAR_REL = 1e-14
_SU2_TOL = 1e-10
_UNITARY_FROBENIUS_TOL = 1e-9
_ROTATION_TOL = 1e-10


@dataclass(frozen=True)
class MoebiusMap:
    """z -> (a z + b)/(c z + d), stored normalized to determinant 1.

    Maps are projective: matrices equal up to a nonzero scalar describe the
    same transformation (after the determinant-1 normalization a residual
    global sign remains; compare with ``projectively_equal``).
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        entries = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        for v in entries:
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"entries must be finite, got {v!r}")
        a, b, c, d = entries
        det = a * d - b * c
        scale = max(abs(v) for v in entries) ** 2
        if abs(det) <= _SINGULAR_REL * scale or det == 0:
            raise SingularMatrix(f"ad - bc = {det!r} is singular at the working precision")
        s = cmath.sqrt(det)
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def __call__(self, z) -> ExtendedComplex:
        return apply_point(self, z)


def make(a, b, c, d) -> MoebiusMap:
    """Build a map from raw matrix entries; raises SingularMatrix if ad = bc."""
    return MoebiusMap(a, b, c, d)


def from_su2(a, b) -> MoebiusMap:
    """The special-unitary map with matrix ((a, b), (-conj b, conj a)).

    (a, b) is rescaled to |a|^2 + |b|^2 = 1 first, so any nonzero complex
    pair works: two parameters pick out the whole rotation family.
    """
    a, b = complex(a), complex(b)
    nrm = math.hypot(abs(a), abs(b))
    if nrm == 0:
        raise ZeroInput("from_su2 needs (a, b) != (0, 0)")
    a, b = a / nrm, b / nrm
    return MoebiusMap(a, b, -b.conjugate(), a.conjugate())


def apply_point(m: MoebiusMap, z) -> ExtendedComplex:
    """(a z + b)/(c z + d) with the projective conventions at infinity."""
    p = as_point(z)
    if p.is_infinite:
        if m.c == 0:
            return INFINITY
        return ExtendedComplex(m.a / m.c)
    v = p.value
    if abs(v) > 1e100:
        # Evaluate in 1/v to keep c*v from overflowing.
        t = 1.0 / v
        den = m.c + m.d * t
        if den == 0:
            return INFINITY
        return ExtendedComplex((m.a + m.b * t) / den)
    den = m.c * v + m.d
    if den == 0:
        return INFINITY
    return ExtendedComplex((m.a * v + m.b) / den)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Matrix product: the map applying m2 first, then m1."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: MoebiusMap) -> MoebiusMap:
    # For a determinant-1 matrix the adjugate is the inverse.
    return MoebiusMap(m.d, -m.b, -m.c, m.a)


def is_special_unitary(m: MoebiusMap, tol: float = _SU2_TOL) -> bool:
    """True iff the determinant-1 form is ((a, b), (-conj b, conj a))."""
    return (abs(m.d - m.a.conjugate()) <= tol
            and abs(m.c + m.b.conjugate()) <= tol)


def projective_distance(m1: MoebiusMap, m2: MoebiusMap) -> float:
    """Relative residual of the best scalar fit m1 ~ s * m2 (0 iff same map)."""
    v1 = np.array([m1.a, m1.b, m1.c, m1.d])
    v2 = np.array([m2.a, m2.b, m2.c, m2.d])
    s = np.vdot(v2, v1) / np.vdot(v2, v2)
    return float(np.linalg.norm(v1 - s * v2) / np.linalg.norm(v1))


def projectively_equal(m1: MoebiusMap, m2: MoebiusMap, tol: float = 1e-12) -> bool:
    """Equality up to a nonzero complex scalar."""
    return projective_distance(m1, m2) <= tol


def transform_constellation(m: MoebiusMap, constellation: Constellation) -> Constellation:
    """Move every root by the map; works for any nonsingular map."""
    return Constellation(constellation.dim,
                         tuple(apply_point(m, r) for r in constellation.roots))


def _coefficient_matrix(m: MoebiusMap, dim: int) -> np.ndarray:
    """Matrix of the coefficient-space linear map induced by m (degree dim-1).

    Column mu holds the coefficients of (a'z + b')^mu (c'z + d')^(dim-1-mu)
    where (a', b', c', d') is the INVERSE map: substituting the inverse into
    the polynomial is what transports each root alpha forward to m(alpha).
    """
    inv = inverse(m)
    n = dim - 1
    lin_num = np.array([inv.b, inv.a], dtype=complex)   # a'z + b', low to high
    lin_den = np.array([inv.d, inv.c], dtype=complex)   # c'z + d'
    num_pows = [np.array([1.0 + 0j])]
    den_pows = [np.array([1.0 + 0j])]
    for _ in range(n):
        num_pows.append(npoly.polymul(num_pows[-1], lin_num))
        den_pows.append(npoly.polymul(den_pows[-1], lin_den))
    k = np.zeros((dim, dim), dtype=complex)
    for mu in range(dim):
        term = npoly.polymul(num_pows[mu], den_pows[n - mu])
        k[: len(term), mu] = term
    return k


def transform_polynomial(m: MoebiusMap, poly: MajoranaPolynomial) -> MajoranaPolynomial:
    """The polynomial whose root multiset is the image of poly's roots under m.

    Computed as the homogeneous substitution
    p'(z) = (c'z + d')^n * p((a'z + b')/(c'z + d')) with the entries of the
    inverse map, expanded exactly by binomial convolution.  Linear in the
    coefficients, defined for any nonsingular m, and handles roots at
    infinity on both sides through the degree bookkeeping.
    """
    k = _coefficient_matrix(m, poly.dim)
    return MajoranaPolynomial(tuple(k @ poly.as_vector()))


@dataclass(frozen=True, eq=False)
class UnitaryMatrix:
    """A d x d unitary; construction verifies U+U = I to 1e-9 in Frobenius."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {mat.shape}")
        gram = mat.conj().T @ mat
        defect = np.linalg.norm(gram - np.eye(mat.shape[0]))
        if not defect <= _UNITARY_FROBENIUS_TOL:
            raise NotUnitary(f"U+U deviates from I by {defect:.3e} in Frobenius norm")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(amplitudes, dtype=complex)


@dataclass(frozen=True, eq=False)
class RotationMatrix:
    """A proper rotation of 3-space (orthogonal, determinant +1)."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        if mat.shape != (3, 3):
            raise ValueError(f"expected a 3x3 matrix, got shape {mat.shape}")
        defect = np.linalg.norm(mat.T @ mat - np.eye(3))
        det = np.linalg.det(mat)
        if defect > _ROTATION_TOL or abs(det - 1.0) > _ROTATION_TOL:
            raise ValueError(f"not a rotation: orthogonality defect {defect:.3e}, det {det!r}")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    def apply(self, point: SpherePoint) -> SpherePoint:
        return SpherePoint(*(self.matrix @ np.array(point.as_tuple())))


def _phase_canonical(mat: np.ndarray) -> np.ndarray:
    """Fix the global phase: first significant entry of column 0 real positive."""
    col = mat[:, 0]
    significant = np.flatnonzero(np.abs(col) > 1e-12 * np.abs(col).max())
    lead = col[significant[0]]
    return mat * (lead.conjugate() / abs(lead))


def lift_to_unitary(m: MoebiusMap, dim: int) -> UnitaryMatrix:
    """The d x d unitary acting on amplitudes the way m acts on the roots.

    Conjugates the coefficient-space action of ``transform_polynomial`` with
    the sign-and-binomial weight diagonal of the state <-> polynomial
    encoding, then normalizes the uniform scale and global phase.  Only
    special-unitary maps lift; anything else raises NotUnitary (use
    ``transform_constellation`` for general maps).  For dim 2 the result is
    m's own determinant-1 matrix up to global phase.
    """
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if not is_special_unitary(m):
        raise NotUnitary("only special-unitary maps lift to a unitary; "
                         "use transform_constellation for general maps")
    n = dim - 1
    weights = _sqrt_binomial_weights(n) * np.where(np.arange(dim) % 2 == 0, 1.0, -1.0)
    k = _coefficient_matrix(m, dim)
    lifted = (k * weights[None, :]) / weights[:, None]
    scale = np.trace(lifted.conj().T @ lifted).real / dim
    return UnitaryMatrix(_phase_canonical(lifted / math.sqrt(scale)))


def to_rotation(m: MoebiusMap) -> RotationMatrix:
    """The 3x3 rotation R with to_sphere(m(z)) = R to_sphere(z) for all z.

    Columns are the images of the three points that project to the
    coordinate axes (1 -> x, -i -> y, inf -> z), snapped to the nearest
    orthogonal matrix and then spot-checked on 20 fixed pseudo-random
    points at 1e-10.
    """
    if not is_special_unitary(m):
        raise NotUnitary("only special-unitary maps act as rotations")
    axis_preimages = (1.0, -1j, INFINITY)
    cols = [to_sphere(apply_point(m, z)).as_tuple() for z in axis_preimages]
    raw = np.array(cols, dtype=float).T
    u, _, vt = np.linalg.svd(raw)
    rot = u @ vt
    if np.linalg.det(rot) < 0:
        rot = u @ np.diag([1.0, 1.0, -1.0]) @ vt
    rng = np.random.default_rng(20230517)
    samples = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    for z in samples:
        lhs = rot @ np.array(to_sphere(z).as_tuple())
        rhs = np.array(to_sphere(apply_point(m, z)).as_tuple())
        if np.linalg.norm(lhs - rhs) > _ROTATION_TOL:
            raise NotUnitary("map does not act as a rigid rotation within 1e-10")
    return RotationMatrix(rot)


def standard_gate(name: str, *params: float) -> MoebiusMap:
    """Named gates: not, hadamard, rot_x(t), rot_y(t), rot_z(t) (radians).

    ``hadamard`` is the map z -> (z + 1)/(z - 1), whose dim-2 lift is exactly
    the Hadamard matrix up to global phase.
    """
    key = name.lower().replace("_", "")

    def need(k: int):
        if len(params) != k:
            raise ValueError(f"gate {name!r} takes {k} parameter(s), got {len(params)}")

    if key == "not":
        need(0)
        return from_su2(0.0, 1j)
    if key in ("hadamard", "h"):
        need(0)
        return make(1.0, 1.0, 1.0, -1.0)
    if key in ("rotx", "rx"):
        need(1)
        t = float(params[0])
        return from_su2(math.cos(t / 2.0), 1j * math.sin(t / 2.0))
    if key in ("roty", "ry"):
        need(1)
        t = float(params[0])
        return from_su2(math.cos(t / 2.0), math.sin(t / 2.0))
    if key in ("rotz", "rz"):
        need(1)
        t = float(params[0])
        return from_su2(cmath.exp(-1j * t / 2.0), 0.0)
    raise UnknownGate(f"unknown gate {name!r}")


def phase_aligned_distance(a, b) -> float:
    """Frobenius distance between two matrices after optimal global phase."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    s = np.trace(a.conj().T @ b)
    if abs(s) == 0:
        return float(np.linalg.norm(a - b))
    return float(np.linalg.norm(a * (s / abs(s)) - b))
