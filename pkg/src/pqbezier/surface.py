"""Tensor-product Lupas (p,q)-Bezier surfaces over the unit square.

``S(u, v) = sum_i sum_j P_ij b^{i,m}_{p1,q1}(u) b^{j,n}_{p2,q2}(v)``
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .basis import basis_row, basis_rows, elevation_weights, level_weights, _check_t
from .curve import ControlPolygon, decasteljau_matrix
from .errors import DomainError, VerificationError
from .pq_arith import PQParams, as_params

__all__ = [
    "ControlNet",
    "IsoDirection",
    "eval_surface",
    "sample_surface",
    "iso_curve",
    "elevate_surface",
    "decasteljau_surface",
    "decasteljau_surface_alt",
]


class IsoDirection(enum.Enum):
    U_FIXED = "u"
    V_FIXED = "v"


@dataclass(frozen=True, eq=False)
class ControlNet:
    """``(m+1) x (n+1)`` grid of 3D control points; u runs over rows, v over columns."""

    grid: np.ndarray
    params_u: PQParams
    params_v: PQParams

    def __post_init__(self):
        try:
            grid = np.array(self.grid, dtype=float)
        except ValueError:
            raise DomainError("control net rows must all have the same length") from None
        if grid.ndim != 3 or grid.shape[0] < 1 or grid.shape[1] < 1:
            raise DomainError("control net must be a non-empty rectangular grid of points")
        if grid.shape[2] != 3:
            raise DomainError(f"control net points must be 3D, got dimension {grid.shape[2]}")
        if not np.all(np.isfinite(grid)):
            raise DomainError("control net coordinates must be finite")
        grid.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "params_u", as_params(self.params_u))
        object.__setattr__(self, "params_v", as_params(self.params_v))

    @property
    def degrees(self) -> tuple[int, int]:
        return self.grid.shape[0] - 1, self.grid.shape[1] - 1

    def __eq__(self, other):
        if not isinstance(other, ControlNet):
            return NotImplemented
        return (
            self.params_u == other.params_u
            and self.params_v == other.params_v
            and np.array_equal(self.grid, other.grid)
        )

    __hash__ = None


def _check_uv(u, v):
    if np.ndim(u) != 0 or np.ndim(v) != 0:
        raise DomainError("u and v must be scalars")
    return float(_check_t(u, "u")), float(_check_t(v, "v"))


def eval_surface(net: ControlNet, u: float, v: float) -> np.ndarray:
    u, v = _check_uv(u, v)
    m, n = net.degrees
    bu = basis_row(m, net.params_u, u)
    bv = basis_row(n, net.params_v, v)
    rows = np.einsum("ijd,j->id", net.grid, bv)
    return bu @ rows


def sample_surface(net: ControlNet, us, vs) -> np.ndarray:
    """Surface points on the grid ``us x vs``; shape ``(len(us), len(vs), 3)``."""
    m, n = net.degrees
    bu = basis_rows(m, net.params_u, us)
    bv = basis_rows(n, net.params_v, vs)
    return np.einsum("ai,ijd,bj->abd", bu, net.grid, bv)


def iso_curve(net: ControlNet, direction: IsoDirection, value: float) -> ControlPolygon:
    """The isoparametric curve obtained by fixing u or v.

    With V_FIXED the result has the m+1 points ``sum_j P_ij b^{j,n}(v*)`` and
    the u parameters; with U_FIXED it has the n+1 points
    ``sum_i P_ij b^{i,m}(u*)`` and the v parameters.
    """
    direction = IsoDirection(direction)
    if np.ndim(value) != 0:
        raise DomainError("iso value must be a scalar")
    value = float(_check_t(value, "value"))
    m, n = net.degrees
    if direction is IsoDirection.V_FIXED:
        b = basis_row(n, net.params_v, value)
        return ControlPolygon(np.einsum("ijd,j->id", net.grid, b), net.params_u)
    b = basis_row(m, net.params_u, value)
    return ControlPolygon(np.einsum("ijd,i->jd", net.grid, b), net.params_v)


def elevate_surface(net: ControlNet) -> ControlNet:
    """Same surface with degrees ``(m+1) x (n+1)``.

    ``P*_ij = a_i b_j P_{i-1,j-1} + a_i (1-b_j) P_{i-1,j} + (1-a_i) b_j P_{i,j-1}
    + (1-a_i)(1-b_j) P_ij`` with ``a_i = 1 - p1^i [m+1-i]/[m+1]`` and
    ``b_j = 1 - p2^j [n+1-j]/[n+1]``; out-of-range points carry zero weight.
    """
    m, n = net.degrees
    alpha = 1.0 - elevation_weights(m, net.params_u)
    beta = 1.0 - elevation_weights(n, net.params_v)
    padded = np.zeros((m + 3, n + 3, 3))
    padded[1:-1, 1:-1] = net.grid
    prev_i, cur_i = padded[:-1], padded[1:]
    a = alpha[:, None, None]
    b = beta[None, :, None]
    new = (
        a * b * prev_i[:, :-1]
        + a * (1.0 - b) * prev_i[:, 1:]
        + (1.0 - a) * b * cur_i[:, :-1]
        + (1.0 - a) * (1.0 - b) * cur_i[:, 1:]
    )
    return ControlNet(new, net.params_u, net.params_v)


def _curve_decasteljau_rows(pts: np.ndarray, params, t: float) -> np.ndarray:
    # de Casteljau along axis 0 for a stack of point sets
    deg = pts.shape[0] - 1
    for r in range(1, deg + 1):
        w0, w1 = level_weights(deg - r, params, t)
        pts = w0 * pts[:-1] + w1 * pts[1:]
    return pts[0]


def decasteljau_surface(net: ControlNet, u: float, v: float, order: str = "bilinear") -> np.ndarray:
    """Surface point by repeated convex combination.

    The default ``"bilinear"`` order applies ``min(m, n)`` rounds of 2x2
    reductions (row weights from the u parameters at level m-r, column
    weights from the v parameters at level n-r) and then finishes the
    remaining direction with the curve algorithm. ``"v_first"`` and
    ``"u_first"`` instead reduce one direction completely before the other.
    """
    u, v = _check_uv(u, v)
    m, n = net.degrees
    grid = net.grid
    if order == "v_first":
        rows = np.stack([_curve_decasteljau_rows(grid[i], net.params_v, v) for i in range(m + 1)])
        return _curve_decasteljau_rows(rows, net.params_u, u)
    if order == "u_first":
        cols = _curve_decasteljau_rows(grid, net.params_u, u)
        return _curve_decasteljau_rows(cols, net.params_v, v)
    if order != "bilinear":
        raise DomainError(f"unknown order {order!r}")
    k = min(m, n)
    for r in range(1, k + 1):
        a0, a1 = level_weights(m - r, net.params_u, u)
        b0, b1 = level_weights(n - r, net.params_v, v)
        grid = (
            a0 * b0 * grid[:-1, :-1]
            + a0 * b1 * grid[:-1, 1:]
            + a1 * b0 * grid[1:, :-1]
            + a1 * b1 * grid[1:, 1:]
        )
    if m > n:
        return decasteljau_matrix(ControlPolygon(grid[:, 0], net.params_u), u)
    if n > m:
        return decasteljau_matrix(ControlPolygon(grid[0, :], net.params_v), v)
    return grid[0, 0]


def decasteljau_surface_alt(net: ControlNet, u: float, v: float, *, verify: bool = True,
                            rtol: float = 1e-9) -> np.ndarray:
    """Surface analogue of curve.decasteljau_alt (index-dependent weights).

    Only the ``min(m, n)`` bilinear rounds use the variant weights; a
    rectangular remainder is finished with the default curve algorithm.
    Verified against eval_surface unless ``verify=False``.
    """
    u, v = _check_uv(u, v)
    m, n = net.degrees
    p1, q1 = net.params_u.p, net.params_u.q
    p2, q2 = net.params_v.p, net.params_v.q
    grid = net.grid
    for r in range(1, min(m, n) + 1):
        du = p1 ** (m - r) * (1.0 - u) + q1 ** (m - r) * u
        dv = p2 ** (n - r) * (1.0 - v) + q2 ** (n - r) * v
        i = np.arange(m - r + 1)
        j = np.arange(n - r + 1)
        cu = (p1 ** (m - i - r) * q1**i / du)[:, None, None]
        cv = (p2 ** (n - j - r) * q2**j / dv)[None, :, None]
        grid = cu * cv * (
            (1 - u) * (1 - v) * grid[:-1, :-1]
            + (1 - u) * v * grid[:-1, 1:]
            + u * (1 - v) * grid[1:, :-1]
            + u * v * grid[1:, 1:]
        )
    if m > n:
        point = decasteljau_matrix(ControlPolygon(grid[:, 0], net.params_u), u)
    elif n > m:
        point = decasteljau_matrix(ControlPolygon(grid[0, :], net.params_v), v)
    else:
        point = grid[0, 0]
    if verify:
        ref = eval_surface(net, u, v)
        scale = max(1.0, float(np.max(np.abs(net.grid))))
        err = float(np.max(np.abs(point - ref)))
        if not err <= rtol * scale:
            raise VerificationError(
                f"variant surface de Casteljau differs from direct evaluation by {err:.3e}"
            )
    return point
