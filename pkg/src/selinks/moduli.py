"""Effective parameter counts of the certified metric families.

The complex count is mu = h^0(O(d)) - sum_i h^0(O(w_i)) evaluated on the
cover system (branch variable included): deformation monomials of full
degree minus infinitesimal automorphisms, both as literal weighted
monomial counts.  The real dimension doubles the non-negative part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import binomial, count_monomials
from .errors import UsageError
from .links import WeightSystem

__all__ = [
    "ModuliCount",
    "moduli_count",
    "fermat_cy_moduli",
    "hyperbolic_moduli",
]


@dataclass(frozen=True)
class ModuliCount:
    """mu = h0_degree - h0_weights_sum; real_dim = 2 max(mu, 0)."""

    complex_dim: int
    real_dim: int
    h0_degree: int
    h0_weights_sum: int


def moduli_count(ws: WeightSystem) -> ModuliCount:
    """Literal monomial-count evaluation of mu on a (cover) weight system.

    No correction is applied for extra automorphisms among repeated
    weights; the closed forms below come from the same literal count.
    """
    h0_d = count_monomials(ws.weights, ws.degree)
    h0_w = sum(count_monomials(ws.weights, w) for w in ws.weights)
    mu = h0_d - h0_w
    return ModuliCount(
        complex_dim=mu,
        real_dim=2 * max(mu, 0),
        h0_degree=h0_d,
        h0_weights_sum=h0_w,
    )


def fermat_cy_moduli(m: int) -> int:
    """Closed form C(2m-1, m) - m^2 for covers of the Fermat Calabi-Yau base.

    Independent of the branch order k (for admissible k); grows
    exponentially with m.
    """
    if m < 3:
        raise UsageError(f"m must be at least 3, got {m}")
    return binomial(2 * m - 1, m) - m * m


def hyperbolic_moduli(m: int, l: int) -> int:
    """Closed form C(m+l-1, l) - m^2 for covers of the degree-l Fermat base."""
    if m < 3:
        raise UsageError(f"m must be at least 3, got {m}")
    if not m + 1 <= l <= 2 * m - 1:
        raise UsageError(
            f"l must satisfy m+1 <= l <= 2m-1, got l={l} for m={m} "
            f"(admissible range {m + 1}..{2 * m - 1})"
        )
    return binomial(m + l - 1, l) - m * m
