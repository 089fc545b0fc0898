"""Convex-concave split potentials for the bulk and surface free energies.

The time stepper treats the convex part of the potential implicitly and the
concave part explicitly, which is what makes the scheme unconditionally
energy stable.  Both provided wells use the canonical Eyre-style split

    F1(s) = s^4/4 + 1/4 (+ optional penalty),   F2(s) = -s^2/2,

so that F1 + F2 = (s^2 - 1)^2 / 4 and F2' is linear with Lipschitz
constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class SplitPotential:
    """A potential F = F1 + F2 with convex F1 and Lipschitz-derivative F2.

    ``convex_second`` (F1'') is required by the Newton solver; the concave
    part enters the scheme only through its first derivative evaluated at the
    previous time step.  ``concave_lipschitz`` is the declared Lipschitz
    constant of F2'.
    """

    name: str
    convex: Callable
    convex_prime: Callable
    convex_second: Callable
    concave: Callable
    concave_prime: Callable
    concave_lipschitz: float

    def value(self, s):
        """F(s) = F1(s) + F2(s)."""
        return self.convex(s) + self.concave(s)

    def prime(self, s):
        """F'(s) = F1'(s) + F2'(s)."""
        return self.convex_prime(s) + self.concave_prime(s)


@dataclass(frozen=True)
class PotentialPair:
    """Bulk and surface potentials used by one model instance."""

    bulk: SplitPotential
    surf: SplitPotential

    @classmethod
    def same(cls, p: SplitPotential) -> "PotentialPair":
        return cls(bulk=p, surf=p)


def double_well() -> SplitPotential:
    """Smooth double well (s^2-1)^2/4 split as (s^4/4 + 1/4) - s^2/2."""
    return SplitPotential(
        name="double_well",
        convex=lambda s: 0.25 * np.asarray(s) ** 4 + 0.25,
        convex_prime=lambda s: np.asarray(s) ** 3,
        convex_second=lambda s: 3.0 * np.asarray(s) ** 2,
        concave=lambda s: -0.5 * np.asarray(s) ** 2,
        concave_prime=lambda s: -np.asarray(s),
        concave_lipschitz=1.0,
    )


def penalised_double_well(delta_prime: float) -> SplitPotential:
    """Double well plus the quadratic out-of-range penalty max(|s|-1, 0)^2 / delta_prime.

    The penalty is convex and C^1 (its derivative vanishes at s = +-1), so it
    is assigned to the convex part and the stability structure of the scheme
    is preserved.  Values inside [-1, 1] coincide with the plain double well.
    """
    if delta_prime <= 0.0:
        raise ValueError(f"penalty scale must be positive, got {delta_prime}")
    w = 1.0 / delta_prime

    def excess(s):
        return np.maximum(np.abs(np.asarray(s)) - 1.0, 0.0)

    return SplitPotential(
        name="penalised_double_well",
        convex=lambda s: 0.25 * np.asarray(s) ** 4 + 0.25 + w * excess(s) ** 2,
        convex_prime=lambda s: np.asarray(s) ** 3 + 2.0 * w * np.sign(s) * excess(s),
        convex_second=lambda s: 3.0 * np.asarray(s) ** 2
        + 2.0 * w * (np.abs(np.asarray(s)) > 1.0),
        concave=lambda s: -0.5 * np.asarray(s) ** 2,
        concave_prime=lambda s: -np.asarray(s),
        concave_lipschitz=1.0,
    )


_BUILDERS = {
    "double_well": lambda delta_prime: double_well(),
    "penalised_double_well": penalised_double_well,
}


def make_potential(kind: str, delta_prime: float = 0.004) -> SplitPotential:
    """Look up a potential by config name."""
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise ValueError(
            f"unknown potential {kind!r}; choose from {sorted(_BUILDERS)}"
        ) from None
    return builder(delta_prime)
