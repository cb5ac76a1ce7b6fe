"""Lupas (p,q)-Bernstein operators, their limit form and convergence experiments.

    L^n_{p,q}(f; x) = sum_k f(p^{n-k} [k] / [n]) b^{k,n}_{p,q}(x)

The operator is positive for every p, q > 0, reproduces constants and
linear functions, and interpolates f at both endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .basis import basis_rows, limit_basis_row, _check_t
from .errors import DomainError
from .pq_arith import PQParams, as_params, pq_integers

__all__ = [
    "TargetFunction",
    "ParamSchedule",
    "ConvergenceRecord",
    "CORPUS",
    "REFERENCE_SCHEDULE",
    "fixed_schedule",
    "nodes",
    "node",
    "lupas_operator",
    "moments",
    "limit_operator",
    "reflection_pair",
    "convergence_table",
    "sup_error",
]


@dataclass(frozen=True)
class TargetFunction:
    evaluator: Callable
    label: str

    def __call__(self, x):
        return self.evaluator(x)


@dataclass(frozen=True)
class ParamSchedule:
    """A sequence n -> (p_n, q_n), with the limits it is claimed to have."""

    generator: Callable[[int], PQParams]
    label: str
    # (lim p_n, lim q_n, lim p_n^n, lim q_n^n)
    limits: tuple = field(default=(None, None, None, None))

    def __call__(self, n: int) -> PQParams:
        return as_params(self.generator(n))


@dataclass(frozen=True)
class ConvergenceRecord:
    n: int
    p: float
    q: float
    sup_error: float


CORPUS = {
    "1": TargetFunction(lambda x: np.ones_like(np.asarray(x, dtype=float)), "1"),
    "t": TargetFunction(lambda x: np.asarray(x, dtype=float), "t"),
    "t2": TargetFunction(lambda x: np.asarray(x, dtype=float) ** 2, "t2"),
    "t3": TargetFunction(lambda x: np.asarray(x, dtype=float) ** 3, "t3"),
    "exp": TargetFunction(np.exp, "exp"),
    "sin": TargetFunction(lambda x: np.sin(np.pi * np.asarray(x, dtype=float)), "sin"),
    "abs": TargetFunction(lambda x: np.abs(np.asarray(x, dtype=float) - 0.5), "abs"),
}

REFERENCE_SCHEDULE = ParamSchedule(
    lambda n: PQParams(1.0 - 1.0 / (2 * n * n), 1.0 - 1.0 / n),
    "reference",
    (1.0, 1.0, 1.0, math.exp(-1.0)),
)


def fixed_schedule(p: float, q: float) -> ParamSchedule:
    params = PQParams(p, q)
    return ParamSchedule(lambda n: params, f"fixed(p={p:g},q={q:g})", (p, q, None, None))


def nodes(n: int, params) -> np.ndarray:
    """All sampling nodes ``p^{n-k} [k] / [n]``, k = 0..n."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    pq = as_params(params)
    ints = pq_integers(n, pq)
    out = np.array([pq.p ** (n - k) * ints[k] / ints[n] for k in range(n + 1)])
    if not np.all(np.isfinite(out)):
        raise OverflowError(f"nodes not representable for n={n}, p={pq.p}, q={pq.q}")
    return out


def node(k: int, n: int, params) -> float:
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    return float(nodes(n, params)[k])


def _values(f, xs) -> np.ndarray:
    vals = np.asarray(f(xs), dtype=float)
    return np.broadcast_to(vals, np.shape(xs)).astype(float)


def lupas_operator(f, n: int, params, x):
    """``L^n_{p,q}(f; x)`` for scalar or array x in [0, 1].

    f must accept a numpy array of nodes.
    """
    xs = _check_t(x, "x")
    weights = basis_rows(n, params, xs.ravel())
    out = weights @ _values(f, nodes(n, params))
    return float(out[0]) if xs.ndim == 0 else out.reshape(xs.shape)


def moments(n: int, params, x: float) -> tuple[float, float, float]:
    """Closed-form images of 1, t and t^2.

    ``L(t^2; x) = p^{n-1} x / [n] + q^2 x^2 [n-1] / ([n] (p(1-x) + q x))``
    """
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    x = float(_check_t(x, "x"))
    pq = as_params(params)
    p, q = pq.p, pq.q
    ints = pq_integers(n, pq)
    m2 = p ** (n - 1) * x / ints[n] + q * q * x * x * ints[n - 1] / (ints[n] * (p * (1 - x) + q * x))
    return 1.0, x, m2


def limit_operator(f, params, x, tol: float = 1e-12):
    """``L^inf_{p,q}(f; x)`` for fixed ``0 < q < p < 1``.

    ``sum_k f(1 - (q/p)^k) beta_k`` for x < 1 and ``f(1)`` at x = 1, where
    beta_k is the normalised limit basis (basis.limit_basis_row) evaluated
    at ``u = p x / (1 - x)``.
    """
    pq = as_params(params)
    if not 0.0 < pq.q < pq.p < 1.0:
        raise DomainError(f"limit operator needs 0 < q < p < 1, got p={pq.p}, q={pq.q}")
    xs = _check_t(x, "x")
    flat = xs.ravel()
    out = np.empty(flat.shape)
    r = pq.ratio
    for idx, xv in enumerate(flat):
        if xv == 1.0:
            out[idx] = _values(f, np.array([1.0]))[0]
            continue
        beta = limit_basis_row(pq, pq.p * xv / (1.0 - xv), tol)
        knots = 1.0 - r ** np.arange(beta.size)
        out[idx] = beta @ _values(f, knots)
    return float(out[0]) if xs.ndim == 0 else out.reshape(xs.shape)


def reflection_pair(f, n: int, params, t: float) -> tuple[float, float]:
    """``(L^n_{p,q}(f; t), L^n_{1/p,1/q}(g; 1-t))`` with ``g(x) = f(1-x)``."""
    pq = as_params(params)
    t = float(_check_t(t, "t"))
    lhs = lupas_operator(f, n, pq, t)
    rhs = lupas_operator(lambda s: f(1.0 - np.asarray(s, dtype=float)), n, pq.inverted(), 1.0 - t)
    return lhs, rhs


def sup_error(f, n: int, params, grid_size: int = 201) -> float:
    """Max of ``|L^n(f; x) - f(x)|`` over a uniform grid including both endpoints."""
    xs = np.linspace(0.0, 1.0, grid_size)
    return float(np.max(np.abs(lupas_operator(f, n, params, xs) - _values(f, xs))))


def convergence_table(f, schedule: ParamSchedule, n_values, grid_size: int = 201) -> list[ConvergenceRecord]:
    n_values = list(n_values)
    if not n_values:
        raise DomainError("n_values must be non-empty")
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise DomainError("n_values must be strictly ascending")
    if grid_size < 2:
        raise DomainError("grid_size must be at least 2")
    records = []
    for n in n_values:
        pq = schedule(n)
        records.append(ConvergenceRecord(n, pq.p, pq.q, sup_error(f, n, pq, grid_size)))
    return records
