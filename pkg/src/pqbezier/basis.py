"""Lupas (p,q)-Bernstein basis functions.

Degree-n basis function k:

    b^{k,n}(t) = [n k] p^{(n-k)(n-k-1)/2} q^{k(k-1)/2} t^k (1-t)^{n-k}
                 / prod_{j=1}^{n} (p^{j-1}(1-t) + q^{j-1} t)

The closed form overflows quickly once p or q leaves a neighbourhood of 1,
so whole rows are built with the degree-raising recurrence

    b^{k,m} = w1(m) b^{k-1,m-1} + w0(m) b^{k,m-1},
    w1(m) = q^{m-1} t / (p^{m-1}(1-t) + q^{m-1} t),  w0 = 1 - w1,

which only ever forms convex combinations.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .pq_arith import as_params, pq_binomial, pq_integers

__all__ = [
    "level_weights",
    "basis_row",
    "basis_rows",
    "basis_single",
    "inverse_symmetry_pair",
    "elevation_weights",
    "elevation_matrix",
    "reduction_split",
    "limit_basis",
    "limit_basis_row",
    "LIMIT_MAX_TERMS",
]

LIMIT_MAX_TERMS = 500


def _check_t(t, name="t"):
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {t!r}")
    return arr


def level_weights(level: int, params, t):
    """Return ``(w0, w1)`` with ``w1 = q^L t / (p^L (1-t) + q^L t)``.

    Evaluated as a logistic function of ``log((1-t)/t) - L log(q/p)`` so that
    neither power is ever formed; t = 0 and t = 1 give (1, 0) and (0, 1).
    Works elementwise on arrays.
    """
    pq = as_params(params)
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        z = np.log1p(-t) - np.log(t) - level * math.log(pq.ratio)
        w1 = 1.0 / (1.0 + np.exp(z))
        w0 = 1.0 / (1.0 + np.exp(-z))
    return w0, w1


def basis_rows(n: int, params, ts) -> np.ndarray:
    """Basis values for every parameter in ``ts``; shape ``(len(ts), n+1)``."""
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    pq = as_params(params)
    ts = np.atleast_1d(_check_t(ts))
    rows = np.ones((ts.size, 1))
    for m in range(1, n + 1):
        w0, w1 = level_weights(m - 1, pq, ts)
        nxt = np.zeros((ts.size, m + 1))
        nxt[:, :m] += w0[:, None] * rows
        nxt[:, 1:] += w1[:, None] * rows
        rows = nxt
    return rows


def basis_row(n: int, params, t: float) -> np.ndarray:
    """The n+1 basis values at a single parameter t.

    >>> basis_row(3, (1, 1), 0.5)
    array([0.125, 0.375, 0.375, 0.125])
    """
    if np.ndim(t) != 0:
        raise DomainError("basis_row takes a scalar t; use basis_rows for arrays")
    return basis_rows(n, params, [float(t)])[0]


def basis_single(k: int, n: int, params, t: float) -> float:
    """Closed-form value of one basis function.

    Raises OverflowError when an intermediate power or product leaves the
    floating-point range; use basis_row there.
    """
    pq = as_params(params)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    t = float(_check_t(t))
    p, q = pq.p, pq.q
    num = (
        pq_binomial(n, k, pq)
        * p ** ((n - k) * (n - k - 1) / 2)
        * q ** (k * (k - 1) / 2)
        * t**k
        * (1.0 - t) ** (n - k)
    )
    den = math.prod(p ** (j - 1) * (1.0 - t) + q ** (j - 1) * t for j in range(1, n + 1))
    if not (math.isfinite(num) and math.isfinite(den)) or den == 0.0:
        raise OverflowError(f"closed form b^({k},{n}) not representable for p={p}, q={q}")
    return num / den


def inverse_symmetry_pair(k: int, n: int, params, t: float) -> tuple[float, float]:
    """``(b^{n-k,n}_{p,q}(t), b^{k,n}_{1/p,1/q}(1-t))``; the two agree."""
    pq = as_params(params)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    lhs = basis_row(n, pq, t)[n - k]
    rhs = basis_row(n, pq.inverted(), 1.0 - float(t))[k]
    return float(lhs), float(rhs)


def elevation_weights(n: int, params) -> np.ndarray:
    """``a_k = p^k [n+1-k] / [n+1]`` for k = 0..n+1.

    Elevated control point k is ``(1 - a_k) P_{k-1} + a_k P_k``; a_0 = 1 and
    a_{n+1} = 0.
    """
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    pq = as_params(params)
    ints = pq_integers(n + 1, pq)
    a = np.empty(n + 2)
    for k in range(n + 2):
        pk = pq.p**k
        if not math.isfinite(pk):
            raise OverflowError(f"p^{k} exceeds the floating-point range")
        a[k] = pk * ints[n + 1 - k] / ints[n + 1]
    return a


def elevation_matrix(n: int, params) -> np.ndarray:
    """The ``(n+2) x (n+1)`` bidiagonal matrix taking degree-n control points to degree n+1."""
    a = elevation_weights(n, params)
    T = np.zeros((n + 2, n + 1))
    for k in range(n + 2):
        if k >= 1:
            T[k, k - 1] = 1.0 - a[k]
        if k <= n:
            T[k, k] = a[k]
    return T


def reduction_split(k: int, n: int, params, t: float) -> tuple[float, float]:
    """Weights with ``b^{k,n} = w_prev b^{k-1,n-1} + w_same b^{k,n-1}``."""
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got k={k}, n={n}")
    w0, w1 = level_weights(n - 1, params, _check_t(t))
    return float(w1), float(w0)


def _limit_log_terms(pq, u: float, tol: float, min_len: int = 0) -> np.ndarray:
    # log of q^{k(k-1)/2} u^k / ((p-q)^k [k]_{p,q}!), using
    # [k]_{p,q} = p^{k-1} [k]_r with r = q/p
    r = pq.ratio
    log_r, log_u, log_pq = math.log(r), math.log(u), math.log(pq.p - pq.q)
    logs = [0.0]
    running = 0.0
    r_int, r_pow = 0.0, 1.0
    k = 0
    while True:
        k += 1
        r_int += r_pow
        r_pow *= r
        logs.append(logs[-1] + (k - 1) * log_r + log_u - log_pq - math.log(r_int))
        running = np.logaddexp(running, logs[-1])
        if k >= LIMIT_MAX_TERMS or (k >= min_len and logs[-1] <= logs[-2]
                                    and logs[-1] - running < math.log(tol * 1e-2)):
            break
    return np.array(logs)


def limit_basis_row(params, u: float, tol: float = 1e-12) -> np.ndarray:
    """Values of the limit basis at ``u >= 0`` for k = 0..K.

    Defined as the normalised series ``term_k / sum_j term_j`` with
    ``term_k = q^{k(k-1)/2} u^k / ((p-q)^k [k]!)``; K is the first index whose
    term falls below ``tol * 1e-2`` of the partial sum (at most 500). The
    values sum to one by construction.
    """
    pq = as_params(params)
    if pq.q >= pq.p:
        raise DomainError(f"limit basis needs q < p, got p={pq.p}, q={pq.q}")
    if not (math.isfinite(u) and u >= 0.0):
        raise DomainError(f"u must be finite and non-negative, got {u!r}")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    if u == 0.0:
        return np.array([1.0])
    logs = _limit_log_terms(pq, u, tol)
    logs -= np.logaddexp.reduce(logs)
    return np.exp(logs)


def limit_basis(k: int, params, u: float, tol: float = 1e-12) -> float:
    """Limit basis function k at u; see limit_basis_row."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    row = limit_basis_row(params, u, tol)
    if k < row.size:
        return float(row[k])
    if row.size == 1:
        return 0.0
    pq = as_params(params)
    logs = _limit_log_terms(pq, u, tol, min_len=k)
    head = _limit_log_terms(pq, u, tol)
    return float(np.exp(logs[k] - np.logaddexp.reduce(head))) if k < logs.size else 0.0
