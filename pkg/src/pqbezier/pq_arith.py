"""(p,q)-integers, factorials and binomial coefficients in floating point.

The (p,q)-integer is

    [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + p q^{n-2} + q^{n-1}

which reduces to the q-integer when p = 1 and to n when p = q = 1. It is
always evaluated through the recurrence ``[m+1] = p [m] + q^m`` so that the
case p == q needs no special branch and p close to q loses nothing to
cancellation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "PQParams",
    "Regime",
    "REGIME_EPS",
    "as_params",
    "pq_integer",
    "pq_integers",
    "pq_factorial",
    "pq_binomial",
    "pq_binomial_row",
    "pascal_left",
    "pascal_right",
    "euler_partial_product",
]

REGIME_EPS = 1e-12


class Regime(enum.Enum):
    P_EQ_Q = "p=q"
    P_EQ_1 = "p=1"
    Q_LT_P_LE_1 = "0<q<p<=1"
    BOTH_GT_1 = "p,q>1"
    GENERAL = "general"


@dataclass(frozen=True)
class PQParams:
    """A validated pair of positive, finite shape parameters."""

    p: float
    q: float
    # set by inverted() so that inverting twice hands back the original object
    _inverse: PQParams | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in ("p", "q"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {value!r}") from None
            if not math.isfinite(value) or value <= 0.0:
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def ratio(self) -> float:
        """q / p, the only combination the rational basis actually depends on."""
        return self.q / self.p

    @property
    def regime(self) -> Regime:
        p, q = self.p, self.q
        if abs(p - q) < REGIME_EPS * max(p, q):
            return Regime.P_EQ_Q
        if p == 1.0:
            return Regime.P_EQ_1
        if q < p <= 1.0:
            return Regime.Q_LT_P_LE_1
        if p > 1.0 and q > 1.0:
            return Regime.BOTH_GT_1
        return Regime.GENERAL

    def inverted(self) -> PQParams:
        """Return (1/p, 1/q); ``params.inverted().inverted() is params``."""
        if self._inverse is not None:
            return self._inverse
        return PQParams(1.0 / self.p, 1.0 / self.q, _inverse=self)

    def swapped(self) -> PQParams:
        return PQParams(self.q, self.p)

    def as_tuple(self) -> tuple[float, float]:
        return (self.p, self.q)


def as_params(params) -> PQParams:
    """Accept a PQParams or a ``(p, q)`` pair."""
    if isinstance(params, PQParams):
        return params
    try:
        p, q = params
    except (TypeError, ValueError):
        raise DomainError(f"expected PQParams or a (p, q) pair, got {params!r}") from None
    return PQParams(p, q)


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    return int(n)


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise OverflowError(f"{what} exceeds the floating-point range")
    return value


def pq_integers(n_max: int, params) -> list[float]:
    """Return ``[[0], [1], ..., [n_max]]`` for the given parameters."""
    n_max = _check_n(n_max)
    pq = as_params(params)
    p, q = pq.p, pq.q
    out = [0.0]
    value, q_pow = 0.0, 1.0
    for m in range(n_max):
        value = p * value + q_pow
        q_pow *= q
        out.append(_finite(value, f"[{m + 1}]_(p,q)"))
    return out


def pq_integer(n: int, params) -> float:
    """The (p,q)-integer ``[n]_{p,q}``.

    >>> pq_integer(3, (2, 1))
    7.0
    >>> pq_integer(4, (1, 1))
    4.0
    """
    return pq_integers(n, params)[-1]


def pq_factorial(n: int, params) -> float:
    """``[1][2]...[n]``, with ``[0]! = 1``.

    Raises OverflowError rather than returning infinity.
    """
    ints = pq_integers(n, params)
    acc = 1.0
    for i in range(1, len(ints)):
        acc = _finite(acc * ints[i], f"[{n}]_(p,q)!")
    return acc


def pq_binomial_row(n: int, params) -> list[float]:
    """All binomial coefficients ``[n k]_{p,q}`` for k = 0..n.

    Built with ``B(n,k) = B(n,k-1) [n-k+1] / [k]``, which keeps intermediates
    no larger than the result itself.
    """
    n = _check_n(n)
    ints = pq_integers(n, params)
    row = [1.0]
    for k in range(1, n + 1):
        value = row[-1] * ints[n - k + 1] / ints[k]
        row.append(_finite(max(value, 0.0), f"[{n} {k}]_(p,q)"))
    return row


def pq_binomial(n: int, k: int, params) -> float:
    """The (p,q)-binomial coefficient; zero when k is outside 0..n."""
    n = _check_n(n)
    if k < 0 or k > n:
        as_params(params)
        return 0.0
    return pq_binomial_row(n, params)[k]


def _pascal_args(n, k, params):
    n = _check_n(n)
    if not 1 <= k <= n - 1:
        raise DomainError(f"Pascal relations need 1 <= k <= n-1, got n={n}, k={k}")
    return n, int(k), as_params(params)


def pascal_left(n: int, k: int, params) -> float:
    """``q^{n-k} [n-1, k-1] + p^k [n-1, k]``."""
    n, k, pq = _pascal_args(n, k, params)
    row = pq_binomial_row(n - 1, pq)
    return pq.q ** (n - k) * row[k - 1] + pq.p**k * row[k]


def pascal_right(n: int, k: int, params) -> float:
    """``p^{n-k} [n-1, k-1] + q^k [n-1, k]``."""
    n, k, pq = _pascal_args(n, k, params)
    row = pq_binomial_row(n - 1, pq)
    return pq.p ** (n - k) * row[k - 1] + pq.q**k * row[k]


def euler_partial_product(x: float, params, terms: int) -> tuple[float, float]:
    """Truncated sides of the (p,q) Euler identity, for ``q < p``.

    ``lhs = sum_{k=0}^{terms} q^{k(k-1)/2} x^k / ((p-q)^k [k]!)`` and
    ``rhs = prod_{j=0}^{terms} (1 + (q/p)^j x / p)``.

    Writing r = q/p, ``(p-q)^k [k]_{p,q}! = p^k (1-r)^k p^{k(k-1)/2} [k]_r!``,
    so the series is the classical q-Euler series in r evaluated at x/p. The
    product therefore carries x/p; for p = 1 it is the usual
    ``prod_{j>=1} (1 + r^{j-1} x)``.
    """
    pq = as_params(params)
    if pq.q >= pq.p:
        raise DomainError(f"Euler identity needs q < p, got p={pq.p}, q={pq.q}")
    if terms < 1:
        raise DomainError("terms must be at least 1")
    if x < 0:
        raise DomainError("x must be non-negative")
    p, q = pq.p, pq.q
    ints = pq_integers(terms, pq)
    lhs, term = 1.0, 1.0
    for k in range(1, terms + 1):
        term *= q ** (k - 1) * x / ((p - q) * ints[k])
        lhs += term
    r = q / p
    rhs = math.prod(1.0 + r**j * x / p for j in range(terms + 1))
    return lhs, rhs
