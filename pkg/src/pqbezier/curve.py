"""Lupas (p,q)-Bezier curves.

A curve of degree n is ``P(t) = sum_k P_k b^{k,n}_{p,q}(t)`` over an ordered
control polygon ``P_0..P_n`` in the plane or in space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import basis_rows, elevation_matrix, level_weights, _check_t
from .errors import DegenerateError, DomainError, VerificationError
from .pq_arith import PQParams, as_params, pq_integer

__all__ = [
    "ControlPolygon",
    "CasteljauTrace",
    "Line2D",
    "eval_rational",
    "sample",
    "decasteljau",
    "casteljau_matrices",
    "decasteljau_matrix",
    "decasteljau_alt",
    "elevate",
    "elevate_repeated",
    "endpoint_derivatives",
    "reverse",
    "sign_changes",
    "crossing_diagnostics",
    "polygon_distance",
]


@dataclass(frozen=True, eq=False)
class ControlPolygon:
    points: np.ndarray
    params: PQParams

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise DomainError("control polygon needs a non-empty list of points")
        if pts.shape[1] not in (2, 3):
            raise DomainError(f"control points must be 2D or 3D, got dimension {pts.shape[1]}")
        if not np.all(np.isfinite(pts)):
            raise DomainError("control point coordinates must be finite")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "params", as_params(self.params))

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __eq__(self, other):
        if not isinstance(other, ControlPolygon):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.points, other.points)

    __hash__ = None

    def __call__(self, t):
        return eval_rational(self, t)


@dataclass(frozen=True)
class CasteljauTrace:
    """Every intermediate level of a de Casteljau run; level r has n-r+1 points."""

    levels: list
    t: float
    params: PQParams

    @property
    def apex(self) -> np.ndarray:
        return self.levels[-1][0]


@dataclass(frozen=True, eq=False)
class Line2D:
    """The line ``{x : normal . x = offset}`` with a unit normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        normal = np.asarray(self.normal, dtype=float).reshape(2)
        length = np.hypot(*normal)
        if not np.isfinite(length) or length == 0.0:
            raise DomainError("line normal must be a non-zero finite vector")
        object.__setattr__(self, "normal", normal / length)
        object.__setattr__(self, "offset", float(self.offset) / length)

    @classmethod
    def through(cls, a, b) -> Line2D:
        a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
        d = b - a
        normal = np.array([-d[1], d[0]])
        return cls(normal, float(normal @ a))

    def signed_distance(self, points) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.normal - self.offset


def _scalar_t(t) -> float:
    if np.ndim(t) != 0:
        raise DomainError("t must be a scalar")
    return float(_check_t(t))


def sample(poly: ControlPolygon, ts) -> np.ndarray:
    """Curve points at every parameter in ``ts``; shape ``(len(ts), dim)``."""
    return basis_rows(poly.degree, poly.params, ts) @ poly.points


def eval_rational(poly: ControlPolygon, t: float) -> np.ndarray:
    return sample(poly, [_scalar_t(t)])[0]


def decasteljau(poly: ControlPolygon, t: float) -> CasteljauTrace:
    """Run the (p,q) de Casteljau algorithm.

    Level r is ``P^r_i = w0 P^{r-1}_i + w1 P^{r-1}_{i+1}`` with the weights of
    level_weights(n - r); both are nonnegative and sum to one.
    """
    t = _scalar_t(t)
    n = poly.degree
    level = poly.points.copy()
    levels = [level]
    for r in range(1, n + 1):
        w0, w1 = level_weights(n - r, poly.params, t)
        level = w0 * level[:-1] + w1 * level[1:]
        levels.append(level)
    return CasteljauTrace(levels=levels, t=t, params=poly.params)


def casteljau_matrices(n: int, params, t: float) -> list[np.ndarray]:
    """The bidiagonal ``(n-r+1) x (n-r+2)`` matrices M_1..M_n."""
    t = _scalar_t(t)
    mats = []
    for r in range(1, n + 1):
        w0, w1 = level_weights(n - r, params, t)
        size = n - r + 1
        M = np.zeros((size, size + 1))
        idx = np.arange(size)
        M[idx, idx] = w0
        M[idx, idx + 1] = w1
        mats.append(M)
    return mats


def decasteljau_matrix(poly: ControlPolygon, t: float) -> np.ndarray:
    """Evaluate as ``M_n ... M_2 M_1 P`` (matrix form of decasteljau)."""
    pts = poly.points
    for M in casteljau_matrices(poly.degree, poly.params, t):
        pts = M @ pts
    return pts[0]


def decasteljau_alt(poly: ControlPolygon, t: float, *, verify: bool = True,
                    rtol: float = 1e-10) -> np.ndarray:
    """Second de Casteljau variant, with level weights
    ``p^{n-i-r} q^i t / D`` and ``p^{n-i-r} q^i (1-t) / D``,
    ``D = p^{n-r}(1-t) + q^{n-r} t``.

    These weights do not sum to one in general, so by default the apex is
    checked against eval_rational and VerificationError is raised when the two
    disagree. Pass ``verify=False`` to get the raw apex.
    """
    t = _scalar_t(t)
    n = poly.degree
    p, q = poly.params.p, poly.params.q
    level = poly.points.copy()
    for r in range(1, n + 1):
        den = p ** (n - r) * (1.0 - t) + q ** (n - r) * t
        i = np.arange(n - r + 1)
        c = (p ** (n - i - r) * q**i / den)[:, None]
        level = c * t * level[1:] + c * (1.0 - t) * level[:-1]
    apex = level[0]
    if verify:
        ref = eval_rational(poly, t)
        scale = max(1.0, float(np.max(np.abs(poly.points))))
        err = float(np.max(np.abs(apex - ref)))
        if not err <= rtol * scale:
            raise VerificationError(
                f"variant de Casteljau apex differs from rational evaluation by {err:.3e} at t={t}"
            )
    return apex


def elevate(poly: ControlPolygon) -> ControlPolygon:
    """Same curve, one degree higher."""
    T = elevation_matrix(poly.degree, poly.params)
    return ControlPolygon(T @ poly.points, poly.params)


def elevate_repeated(poly: ControlPolygon, times: int) -> ControlPolygon:
    if times < 1:
        raise DomainError(f"times must be a positive integer, got {times}")
    for _ in range(times):
        poly = elevate(poly)
    return poly


def endpoint_derivatives(poly: ControlPolygon) -> tuple[np.ndarray, np.ndarray]:
    """``P'(0) = [n]/p^{n-1} (P_1 - P_0)`` and ``P'(1) = [n]/q^{n-1} (P_n - P_{n-1})``."""
    n = poly.degree
    if n == 0:
        raise DegenerateError("a degree-0 curve is a single point and has no tangent")
    p, q = poly.params.p, poly.params.q
    bracket = pq_integer(n, poly.params)
    P = poly.points
    return bracket / p ** (n - 1) * (P[1] - P[0]), bracket / q ** (n - 1) * (P[n] - P[n - 1])


def reverse(poly: ControlPolygon) -> ControlPolygon:
    """Reversed control points with (1/p, 1/q); traces the same curve backwards."""
    return ControlPolygon(poly.points[::-1], poly.params.inverted())


def sign_changes(values) -> int:
    """Number of strict sign changes, exact zeros skipped."""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def crossing_diagnostics(poly: ControlPolygon, line: Line2D, samples: int = 1001) -> tuple[int, int]:
    """``(curve_crossings, polygon_sign_changes)`` of a planar curve against a line.

    Curve crossings are counted from the signed distances of ``samples``
    uniformly spaced curve points, so they can only undercount.
    """
    if poly.dim != 2:
        raise DomainError("crossing diagnostics are defined for planar curves")
    if samples < 2:
        raise DomainError("need at least two samples")
    ctrl = line.signed_distance(poly.points)
    if np.all(ctrl == 0.0):
        raise DegenerateError("every control point lies on the line")
    curve = line.signed_distance(sample(poly, np.linspace(0.0, 1.0, samples)))
    return sign_changes(curve), sign_changes(ctrl)


def _point_segment_distance(x: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    d = b - a
    dd = float(d @ d)
    s = np.zeros(len(x)) if dd == 0.0 else np.clip((x - a) @ d / dd, 0.0, 1.0)
    return np.linalg.norm(x - (a + s[:, None] * d), axis=1)


def polygon_distance(poly: ControlPolygon, samples: int = 256) -> float:
    """Largest distance from a sampled curve point to the control polygon."""
    pts = sample(poly, np.linspace(0.0, 1.0, samples))
    P = poly.points
    if poly.degree == 0:
        return float(np.max(np.linalg.norm(pts - P[0], axis=1)))
    dist = np.min(
        [_point_segment_distance(pts, P[i], P[i + 1]) for i in range(poly.degree)], axis=0
    )
    return float(np.max(dist))
