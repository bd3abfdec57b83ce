"""State <-> polynomial <-> constellation pipeline for d-level systems.

A d-level state with amplitudes a_0..a_{d-1} is encoded as the polynomial

    p(z) = sum_mu a_mu * (-1)^mu * sqrt(C(n, mu)) * z^mu,      n = d - 1,

whose n roots (counting roots at infinity when leading coefficients vanish)
are the d - 1 points of the constellation on the Riemann sphere.  The root
multiset is invariant under rescaling the state by any nonzero complex
number, so the constellation represents the projective state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import linear_sum_assignment

from .errors import DimensionMismatch, WrongDimension, ZeroPolynomial
from .sphere import INFINITY, ExtendedComplex, SpherePoint, as_point, chordal_distance

__all__ = [
    "QuditState",
    "MajoranaPolynomial",
    "Constellation",
    "basis_state",
    "state_to_polynomial",
    "polynomial_to_state",
    "find_roots",
    "expand_roots",
    "state_to_constellation",
    "constellation_to_state",
    "projective_fidelity",
    "bloch_vector",
    "constellation_match",
    "constellation_pairing",
    "DEFAULT_ROOT_TOL",
]

DEFAULT_ROOT_TOL = 1e-12

# Leading coefficients at or below this fraction of the largest coefficient
# modulus are treated as exactly zero (roots at infinity) before root finding.
_LEADING_ZERO_REL = 1e-13

# Aberth initial guesses: equispaced angles shifted by the golden angle, an
# irrational offset that keeps the start away from root symmetries.
_GOLDEN_ANGLE = 2.399963229728653

_ABERTH_MAX_ITER = 200


def _validated_amplitudes(values, what: str) -> tuple[complex, ...]:
    amps = tuple(complex(a) for a in values)
    if len(amps) < 2:
        raise ValueError(f"{what} needs at least 2 entries, got {len(amps)}")
    for a in amps:
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise ValueError(f"{what} entries must be finite, got {a!r}")
    if max(abs(a) for a in amps) == 0.0:
        raise ValueError(f"{what} must not be all zero")
    return amps


@dataclass(frozen=True)
class QuditState:
    """d complex amplitudes a_0..a_{d-1}; not necessarily normalized.

    The representation downstream is projective, so any nonzero overall
    scale is admissible; ``constellation_to_state`` always returns the
    canonical unit-norm member of the ray.
    """

    amplitudes: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "amplitudes",
                           _validated_amplitudes(self.amplitudes, "QuditState"))

    @property
    def dim(self) -> int:
        return len(self.amplitudes)

    @property
    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes))

    def as_vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def normalized(self) -> "QuditState":
        n = self.norm
        return QuditState(tuple(a / n for a in self.amplitudes))


@dataclass(frozen=True)
class MajoranaPolynomial:
    """Coefficients c_0..c_{d-1} of p(z) = sum c_mu z^mu (low to high)."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if coeffs and max(abs(c) for c in coeffs) == 0.0:
            raise ZeroPolynomial("all coefficients are zero")
        object.__setattr__(self, "coefficients",
                           _validated_amplitudes(coeffs, "MajoranaPolynomial"))

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def as_vector(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=complex)

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc


@dataclass(frozen=True)
class Constellation:
    """Multiset of exactly dim - 1 points on the Riemann sphere."""

    dim: int
    roots: tuple[ExtendedComplex, ...]

    def __post_init__(self):
        d = int(self.dim)
        if d < 2:
            raise ValueError(f"Constellation dim must be >= 2, got {d}")
        roots = tuple(as_point(r) for r in self.roots)
        if len(roots) != d - 1:
            raise ValueError(f"expected {d - 1} roots for dim {d}, got {len(roots)}")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "roots", roots)

    def sphere_points(self) -> tuple[SpherePoint, ...]:
        from .sphere import to_sphere

        return tuple(to_sphere(r) for r in self.roots)


def basis_state(dim: int, level: int) -> QuditState:
    """The computational basis state |level> of a d-level system."""
    if not 0 <= level < dim:
        raise ValueError(f"level {level} outside 0..{dim - 1}")
    amps = [0j] * dim
    amps[level] = 1.0 + 0j
    return QuditState(tuple(amps))


def _sqrt_binomial_weights(n: int) -> np.ndarray:
    """sqrt(C(n, mu)) for mu = 0..n, by incremental products of ratios.

    Never forms factorials, so there is no overflow for large n.
    """
    w = np.empty(n + 1)
    w[0] = 1.0
    for mu in range(n):
        w[mu + 1] = w[mu] * math.sqrt((n - mu) / (mu + 1))
    return w


def state_to_polynomial(state: QuditState) -> MajoranaPolynomial:
    """c_mu = a_mu * (-1)^mu * sqrt(C(n, mu)), n = dim - 1."""
    n = state.dim - 1
    w = _sqrt_binomial_weights(n)
    signs = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    coeffs = state.as_vector() * signs * w
    return MajoranaPolynomial(tuple(coeffs))


def polynomial_to_state(poly: MajoranaPolynomial) -> QuditState:
    """Exact inverse of ``state_to_polynomial`` (no normalization applied)."""
    n = poly.dim - 1
    w = _sqrt_binomial_weights(n)
    signs = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    amps = poly.as_vector() * signs / w
    return QuditState(tuple(amps))


def _newton_ratio(coeffs, dcoeffs, rcoeffs, drcoeffs, deg, z):
    """p(z)/p'(z) elementwise, overflow-free at any radius.

    For |z| > 1 the evaluation runs through the reversed polynomial:
    p(z) = z^deg q(1/z) gives p/p' = z q(u) / (deg q(u) - u q'(u)), u = 1/z,
    so nothing ever raises a modulus above the coefficient scale.
    """
    ratio = np.empty_like(z)
    small = np.abs(z) <= 1.0
    if small.any():
        zs = z[small]
        ratio[small] = npoly.polyval(zs, coeffs) / npoly.polyval(zs, dcoeffs)
    large = ~small
    if large.any():
        zl = z[large]
        u = 1.0 / zl
        q = npoly.polyval(u, rcoeffs)
        dq = npoly.polyval(u, drcoeffs)
        ratio[large] = zl * q / (deg * q - u * dq)
    return ratio


def _aberth_roots(coeffs: np.ndarray, tol: float) -> np.ndarray | None:
    """All roots of a polynomial by Aberth-Ehrlich simultaneous iteration.

    ``coeffs`` is low-to-high with nonzero leading AND trailing entries.
    Deterministic: fixed starting circle, no randomness.  Returns None when
    the iteration fails to converge within the cap (the caller falls back to
    the companion-matrix method).
    """
    m = len(coeffs) - 1
    if m == 1:
        return np.array([-coeffs[0] / coeffs[1]])
    radius = math.sqrt(1.0 + np.max(np.abs(coeffs[:-1]) / abs(coeffs[-1])))
    angles = 2.0 * np.pi * np.arange(m) / m + _GOLDEN_ANGLE
    z = radius * np.exp(1j * angles)
    dcoeffs = npoly.polyder(coeffs)
    rcoeffs = coeffs[::-1].copy()
    drcoeffs = npoly.polyder(rcoeffs)
    for _ in range(_ABERTH_MAX_ITER):
        with np.errstate(all="ignore"):
            ratio = _newton_ratio(coeffs, dcoeffs, rcoeffs, drcoeffs, m, z)
            stuck = ~np.isfinite(ratio)
            if stuck.any():
                # Critical-point hit: deterministic sidestep, then retry.
                z = np.where(stuck, z * (1.0 + 1e-8) + 1e-8, z)
                continue
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            if np.any(diff == 0):
                return None
            s = (1.0 / diff).sum(axis=1)
            denom = 1.0 - ratio * s
            w = np.where(denom == 0, ratio, ratio / denom)
            z = z - w
        if not np.all(np.isfinite(z)):
            return None
        if np.all(np.abs(w) <= tol * (1.0 + np.abs(z))):
            return z
    return None


def _companion_roots(coeffs: np.ndarray) -> np.ndarray:
    """Finite roots via eigenvalues of the companion matrix (LAPACK path)."""
    m = len(coeffs) - 1
    if m == 0:
        return np.empty(0, dtype=complex)
    if m == 1:
        return np.array([-coeffs[0] / coeffs[1]])
    comp = np.eye(m, k=-1, dtype=complex)
    comp[:, -1] -= np.asarray(coeffs[:-1], dtype=complex) / coeffs[-1]
    return np.linalg.eigvals(comp)


def _effective_degree(coeffs: np.ndarray) -> int:
    """Index of the highest coefficient that counts as nonzero.

    Leading coefficients within 1e-13 (relative to the largest modulus) of
    zero are degeneracies encoding roots at infinity, not tiny numbers.
    """
    mags = np.abs(coeffs)
    top = mags.max()
    if top == 0.0:
        raise ZeroPolynomial("all coefficients are zero")
    threshold = _LEADING_ZERO_REL * top
    deg = len(coeffs) - 1
    while deg > 0 and mags[deg] <= threshold:
        deg -= 1
    if mags[deg] <= threshold:
        raise ZeroPolynomial("all coefficients are below the zero threshold")
    return deg


def _sort_key(root: ExtendedComplex):
    if root.is_infinite:
        return (1, 0.0, 0.0)
    return (0, root.value.real, root.value.imag)


def _finite_roots(coeffs: np.ndarray, tol: float) -> list[complex]:
    """Roots of the degree-reduced polynomial (leading zeros already cut)."""
    # Exact trailing zeros are roots at the origin; deflating them is exact
    # and spares the iteration from high-multiplicity clusters at 0.
    k0 = 0
    while k0 < len(coeffs) - 1 and coeffs[k0] == 0:
        k0 += 1
    reduced = coeffs[k0:]
    roots = [0j] * k0
    if len(reduced) > 1:
        found = _aberth_roots(reduced, tol)
        if found is None:
            found = _companion_roots(reduced)
        roots.extend(found)
    return roots


def find_roots(poly: MajoranaPolynomial, tol: float = DEFAULT_ROOT_TOL) -> Constellation:
    """The d - 1 roots of the polynomial, including roots at infinity.

    (d - 1) - deg(p) roots sit at infinity, one per vanishing leading
    coefficient; the finite roots come from Aberth-Ehrlich simultaneous
    iteration (companion-matrix fallback on non-convergence).  Output order
    is deterministic (finite roots by (re, im), infinities last) but the
    meaning is a multiset.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    coeffs = poly.as_vector()
    deg = _effective_degree(coeffs)
    n_infinite = (poly.dim - 1) - deg
    finite = _finite_roots(coeffs[: deg + 1], tol) if deg > 0 else []
    roots = [ExtendedComplex(r) for r in finite] + [INFINITY] * n_infinite
    roots.sort(key=_sort_key)
    return Constellation(poly.dim, tuple(roots))


def expand_roots(constellation: Constellation, scale: complex) -> MajoranaPolynomial:
    """scale * prod over finite roots (z - alpha), padded with zero leading
    coefficients so roots at infinity are re-encoded as degree deficits."""
    scale = complex(scale)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    coeffs = np.array([scale], dtype=complex)
    for root in constellation.roots:
        if not root.is_infinite:
            coeffs = npoly.polymul(coeffs, np.array([-root.value, 1.0], dtype=complex))
    padded = np.zeros(constellation.dim, dtype=complex)
    padded[: len(coeffs)] = coeffs
    return MajoranaPolynomial(tuple(padded))


def state_to_constellation(state: QuditState, tol: float = DEFAULT_ROOT_TOL) -> Constellation:
    return find_roots(state_to_polynomial(state), tol)


def _canonical(amps: np.ndarray) -> np.ndarray:
    """Unit norm with the first significant amplitude made real positive."""
    amps = amps / np.linalg.norm(amps)
    significant = np.flatnonzero(np.abs(amps) > 1e-12 * np.abs(amps).max())
    lead = amps[significant[0]]
    return amps * (lead.conjugate() / abs(lead))


def constellation_to_state(constellation: Constellation) -> QuditState:
    """Reconstruct the canonical (unit-norm, phase-fixed) state of a
    constellation; inverse of ``state_to_constellation`` up to overall scale."""
    raw = polynomial_to_state(expand_roots(constellation, 1.0))
    return QuditState(tuple(_canonical(raw.as_vector())))


def projective_fidelity(psi: QuditState, chi: QuditState) -> float:
    """|<psi|chi>| / (|psi| |chi|): 1 iff the states agree up to scale."""
    if psi.dim != chi.dim:
        raise DimensionMismatch(f"dims {psi.dim} and {chi.dim} differ")
    a, b = psi.as_vector(), chi.as_vector()
    return abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b))


def bloch_vector(state: QuditState) -> SpherePoint:
    """The Bloch vector of a 2-level state, straight from the amplitudes.

    Equivalent to (sin(phi) cos(theta), sin(phi) sin(theta), cos(phi)) for
    the polar parametrization cos(phi/2) = |a0|/|psi|,
    theta = arg(a1) - arg(a0), but computed via expectation values so no
    inverse trigonometry is involved.
    """
    if state.dim != 2:
        raise WrongDimension(f"bloch_vector needs dim 2, got {state.dim}")
    a0, a1 = state.amplitudes
    n2 = abs(a0) ** 2 + abs(a1) ** 2
    cross = a0.conjugate() * a1
    return SpherePoint(2.0 * cross.real / n2, 2.0 * cross.imag / n2,
                       (abs(a0) ** 2 - abs(a1) ** 2) / n2)


def constellation_pairing(c1: Constellation, c2: Constellation):
    """Minimum-cost perfect matching between the two root multisets.

    Returns (pairs, worst) where pairs is a list of (index_in_c1,
    index_in_c2, chordal_distance) and worst is the largest matched
    distance.  Optimal assignment, not greedy: near multiple roots a greedy
    pairing can cross the cluster and overstate the distance.
    """
    if c1.dim != c2.dim:
        raise DimensionMismatch(f"dims {c1.dim} and {c2.dim} differ")
    cost = np.array([[chordal_distance(a, b) for b in c2.roots] for a in c1.roots])
    rows, cols = linear_sum_assignment(cost)
    pairs = [(int(i), int(j), float(cost[i, j])) for i, j in zip(rows, cols)]
    worst = max(d for _, _, d in pairs)
    return pairs, worst


def constellation_match(c1: Constellation, c2: Constellation, tol: float) -> bool:
    """True iff an optimal pairing matches every root within chordal tol."""
    _, worst = constellation_pairing(c1, c2)
    return worst <= tol
