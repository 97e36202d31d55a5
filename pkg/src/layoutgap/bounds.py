"""Numeric evaluation of the concentration bounds.

Probability bounds are produced in natural-log space (``log_*`` functions)
because most of them underflow or overflow a double long before they become
interesting.  The linear-scale wrappers return ``inf`` rather than raising
when the bound is astronomically vacuous, and never clamp values above 1.

Parameter names follow the usual schedule notation: the edge probability
decays like ``n**-c``; edge problems use a deviation ``alpha_n = n**-l``
with ``c < l < 1/2``; vertex problems use ``delta_n = n**-l`` and
``eps_n = n**-s`` with ``0 < s < 1 - c`` and ``0 < l < s / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .measures import ProblemKind

# Guards float rounding in floor/ceil of quantities like n ** (1 - s).
_ROUND_TOL = 1e-9


def _floor(x: float) -> int:
    return math.floor(x + _ROUND_TOL)


def _ceil(x: float) -> int:
    return math.ceil(x - _ROUND_TOL)


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def _family(kind_or_family) -> str:
    if isinstance(kind_or_family, ProblemKind):
        return kind_or_family.family
    if kind_or_family not in ("edge", "vertex"):
        raise ValueError(f"family must be 'edge' or 'vertex', got {kind_or_family!r}")
    return kind_or_family


@dataclass(frozen=True)
class BoundParameters:
    """Exponents and tolerances for one family of bounds.

    ``s`` is only meaningful for the vertex family and may be None for the
    edge family.  ``delta`` is the half-width of the predicted band and
    ``epsilon`` the failure budget.
    """

    c: float
    l: float
    s: float | None = None
    delta: float = 0.5
    epsilon: float = 0.05

    def check(self, family) -> "BoundParameters":
        family = _family(family)
        errors = []
        if family == "edge":
            if not 0 <= self.c < self.l < 0.5:
                errors.append(f"edge bounds need 0 <= c < l < 1/2 (c={self.c}, l={self.l})")
        else:
            if self.s is None or not 0 < self.s < 1 - self.c:
                errors.append(f"vertex bounds need 0 < s < 1 - c (c={self.c}, s={self.s})")
            elif not 0 < self.l < self.s / 2:
                errors.append(f"vertex bounds need 0 < l < s/2 (l={self.l}, s={self.s})")
            if self.c < 0:
                errors.append(f"c must be non-negative (c={self.c})")
        if not 0 < self.delta < 1:
            errors.append(f"delta must lie in (0, 1), got {self.delta}")
        if not 0 < self.epsilon < 1:
            errors.append(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if errors:
            raise ValueError("; ".join(errors))
        return self


def choose_parameters(family, c: float, delta: float = 0.5, epsilon: float = 0.05) -> BoundParameters:
    """Midpoints of the admissible exponent ranges for a sparsity exponent ``c``.

    Edge family: ``l = (c + 1/2) / 2`` (needs ``c < 1/2``).  Vertex family:
    ``s = (1 - c) / 2`` and ``l = s / 4`` (needs ``c < 1``).
    """
    family = _family(family)
    if family == "edge":
        if not 0 <= c < 0.5:
            raise ValueError(f"edge bounds need 0 <= c < 1/2, got c = {c}")
        params = BoundParameters(c=c, l=(c + 0.5) / 2, delta=delta, epsilon=epsilon)
    else:
        if not 0 <= c < 1:
            raise ValueError(f"vertex bounds need 0 <= c < 1, got c = {c}")
        s = (1 - c) / 2
        params = BoundParameters(c=c, l=s / 4, s=s, delta=delta, epsilon=epsilon)
    return params.check(family)


# -- preliminary estimates ---------------------------------------------------

def log_hoeffding_tail(n: int, eps: float) -> float:
    if n < 1:
        raise ValueError("number of trials must be at least 1")
    if not eps > 0:
        raise ValueError(f"deviation must be positive, got {eps!r}")
    return -2.0 * eps * eps * n


def hoeffding_tail(n: int, eps: float) -> float:
    """Bound on either tail P[H <= (p-eps)n], P[H >= (p+eps)n] of n Bernoulli trials."""
    return math.exp(log_hoeffding_tail(n, eps))


def log_binom(n: int, k: int) -> float:
    """Natural log of ``C(n, k)`` via log-gamma."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return 0.0
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def asymptotic_log_binom(n: int, k: int) -> float:
    """Leading term ``k log(n/k)``; ``log_binom`` lies in ``[this, this + k]``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return k * math.log(n / k)


def log_central_binom_estimate(n: int) -> float:
    """Log of the Stirling estimate ``2**n / sqrt(pi n / 2)`` of ``C(n, n//2)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * math.log(2.0) - 0.5 * math.log(math.pi * n / 2.0)


def central_binom_estimate(n: int) -> float:
    return _exp(log_central_binom_estimate(n))


def q_estimate(p: float, t: float) -> float:
    """``1 - (1 - p)**t``: chance that at least one of ``t`` trials succeeds.

    Evaluated as ``-expm1(t * log1p(-p))`` so that small ``p * t`` keeps
    full relative precision.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t!r}")
    if t == 0 or p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    return -math.expm1(t * math.log1p(-p))


# -- failure probabilities ---------------------------------------------------

def log_failure_bound_edge(n: int, l: float) -> float:
    """``log(2**n * exp(-(n**2 - 1) * n**(-2l) / 2))``.

    Union bound over at most ``2**n`` vertex sets of the probability that a
    single cut deviates from its mean by ``alpha_n = n**-l`` per pair.
    """
    if not 0 < l < 0.5:
        raise ValueError(f"edge tail exponent l must lie in (0, 1/2), got {l}")
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * math.log(2.0) - (n * n - 1) * float(n) ** (-2.0 * l) / 2.0


def failure_bound_edge(n: int, p: float, l: float) -> float:
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    return _exp(log_failure_bound_edge(n, l))


def _vertexsep_sizes(n: int, s: float) -> tuple[int, int]:
    """(|V - S|, |S|) = (ceil(n**(1-s)), floor((1 - n**-s) n))."""
    right = _ceil(float(n) ** (1.0 - s))
    return right, n - right


def log_failure_bound_vertexsep(n: int, params: BoundParameters) -> float:
    """``log C(n, ceil(eps_n n)) - 2 delta_n**2 m`` with ``m = floor((1 - eps_n) n)``."""
    params.check("vertex")
    if n < 1:
        raise ValueError("n must be at least 1")
    right, m = _vertexsep_sizes(n, params.s)
    right = min(right, n)
    return log_binom(n, right) - 2.0 * float(n) ** (-2.0 * params.l) * m


def failure_bound_vertexsep(n: int, p: float, params: BoundParameters) -> float:
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    return _exp(log_failure_bound_vertexsep(n, params))


def log_failure_bound_vertexbis(n: int, delta: float) -> float:
    """``log C(n, n//2) - delta**2 n``: union bound over all bisections.

    Only informative once ``delta**2`` exceeds ``log 2``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return log_binom(n, n // 2) - delta * delta * n


def vertexsep_finite_lower(n: int, p: float, params: BoundParameters) -> float:
    """Finite-n lower bound ``(q - delta_n) m`` on the vertex separation.

    ``q = 1 - (1 - p)**ceil(n**(1-s))`` is the chance that a vertex of the
    long prefix sees the short suffix.
    """
    params.check("vertex")
    right, m = _vertexsep_sizes(n, params.s)
    q = q_estimate(p, right)
    return (q - float(n) ** (-params.l)) * m


# -- predicted bands ---------------------------------------------------------

@dataclass(frozen=True)
class PredictedBand:
    """Lower bound on MIN and upper bound on MAX for one problem.

    ``log_failure_bound`` is the log of the union-bound failure probability;
    it can exceed 0 (a vacuous bound) and is reported as-is.
    """

    kind: ProblemKind
    n: int
    p: float
    lower_min: float
    upper_max: float
    log_failure_bound: float

    @property
    def failure_bound(self) -> float:
        return _exp(self.log_failure_bound)

    def contains(self, min_cost: float, max_cost: float) -> bool:
        return self.lower_min <= min_cost and max_cost <= self.upper_max


def predicted_band(kind: ProblemKind, n: int, p: float, params: BoundParameters) -> PredictedBand:
    """Band ``[lower_min, upper_max]`` that MIN and MAX fall into w.h.p.

    * cutwidth, edge bisection: ``n**2 p (1 -+ delta) / 4``
    * vertex separation: ``(1 - delta) n - 1`` and the trivial cap ``n - 1``
    * vertex bisection: ``(1 - delta) floor(n/2)`` and the cap ``floor(n/2)``

    Directed problems share the band of their undirected counterpart.
    """
    params.check(kind.family)
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    d = params.delta
    if kind.counts_edges:
        lower = n * n * p * (1 - d) / 4
        upper = n * n * p * (1 + d) / 4
        # both tails, each union-bounded over at most 2**n sets
        log_fail = math.log(2.0) + log_failure_bound_edge(n, params.l)
    elif kind.bisection:
        half = n // 2
        lower = (1 - d) * half
        upper = float(half)
        log_fail = log_failure_bound_vertexbis(n, d)
    else:
        lower = (1 - d) * n - 1
        upper = float(n - 1)
        log_fail = log_failure_bound_vertexsep(n, params)
    return PredictedBand(kind, n, float(p), lower, upper, log_fail)
