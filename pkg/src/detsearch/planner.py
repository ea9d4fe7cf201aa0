"""Closed-form iteration counts and the deterministic (auxiliary-qubit) plan.

For initial success probability ``p = sin^2(theta)``, ``k`` Grover iterations
give success ``sin^2((2k+1) theta)``.  When the ideal count
``pi / (4 theta) - 1/2`` is not a whole number, an auxiliary qubit prepared
with ``R_y(phi)`` dilutes ``p`` to ``p'`` so that the count for ``p'`` is
exactly ``floor(k) + 1``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

NATURAL_TOL = 1e-9


def _check_p(p: float) -> float:
    p = float(p)
    if not (0.0 < p < 1.0):
        raise ValueError(f"initial success probability must satisfy 0 < p < 1, got p={p!r}")
    return p


@dataclass(frozen=True)
class SearchAngles:
    p: float
    theta: float

    @classmethod
    def from_p(cls, p: float) -> "SearchAngles":
        p = _check_p(p)
        return cls(p=p, theta=math.asin(math.sqrt(p)))


@dataclass(frozen=True)
class DeterministicPlan:
    """Output of the planning step.

    ``alpha_sq`` is ``cos^2(phi/2) = p_prime / p``, the auxiliary ``|0>``
    population.  Without an auxiliary qubit ``phi = 0`` and ``p_prime = p``.
    """

    p: float
    k: float
    k_prime: int
    needs_auxiliary: bool
    p_prime: float
    phi: float
    alpha_sq: float

    @property
    def beta_sq(self) -> float:
        return 1.0 - self.alpha_sq

    def to_dict(self) -> dict:
        return asdict(self)


def compute_k(p: float) -> float:
    """Ideal (real-valued) number of Grover iterations for success probability ``p``."""
    theta = SearchAngles.from_p(p).theta
    return math.pi / (4.0 * theta) - 0.5


def predicted_success(p: float, iterations: int) -> float:
    theta = SearchAngles.from_p(p).theta
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    return math.sin((2 * iterations + 1) * theta) ** 2


def probability_for_iterations(k_prime: int) -> float:
    """The ``p`` whose ideal iteration count is exactly ``k_prime``."""
    if k_prime < 1:
        raise ValueError(f"k_prime must be >= 1, got {k_prime}")
    return math.sin(math.pi / (4.0 * (k_prime + 0.5))) ** 2


def make_plan(p: float, natural_tolerance: float = NATURAL_TOL) -> DeterministicPlan:
    p = _check_p(p)
    k = compute_k(p)
    nearest = round(k)
    # k == 0 would mean p == 1, which _check_p already rules out
    if nearest >= 1 and abs(k - nearest) <= natural_tolerance:
        return DeterministicPlan(
            p=p, k=k, k_prime=int(nearest), needs_auxiliary=False,
            p_prime=p, phi=0.0, alpha_sq=1.0,
        )
    k_prime = math.floor(k) + 1
    p_prime = probability_for_iterations(k_prime)
    alpha_sq = p_prime / p
    phi = 2.0 * math.acos(math.sqrt(alpha_sq))
    return DeterministicPlan(
        p=p, k=k, k_prime=k_prime, needs_auxiliary=True,
        p_prime=p_prime, phi=phi, alpha_sq=alpha_sq,
    )


def no_advantage_check(p: float) -> bool:
    """True when ``p >= 1/2``, where one Grover iteration cannot raise the success probability."""
    p = _check_p(p)
    return p >= 0.5


def standard_iterations(p: float) -> int:
    """Ideal count rounded to the nearest integer, halves rounded up.

    A ``k`` within ``NATURAL_TOL`` of a half-integer counts as the half-integer
    (``p = 0.5`` evaluates to ``k = 0.49999999999999994``).
    """
    return math.floor(compute_k(p) + 0.5 + NATURAL_TOL)


def approx_iterations(n_states: int, n_targets: int) -> float:
    """Large-N approximation ``(pi/4) sqrt(N/M) - 1/2``."""
    if not (1 <= n_targets < n_states):
        raise ValueError(f"need 1 <= n_targets < n_states, got M={n_targets}, N={n_states}")
    return math.pi / 4.0 * math.sqrt(n_states / n_targets) - 0.5
