"""Random ensembles shared by the property and acceptance tests."""

from __future__ import annotations

import math

import numpy as np

from lplab import BasisTerm, Signal, WeightedExpansion, WeightedTerm

#: Coarse angle grid: multiples of pi/6 from 0 to pi.
THETA_GRID = tuple(k * math.pi / 6 for k in range(7))


def random_basis_set(rng, max_order: int = 8, max_power: int = 2):
    """Random canonical basis set: distinct (rho, theta) groups with contiguous
    powers, moduli in [0.5, 1.5], angles on the coarse grid, total order
    bounded by ``max_order``.

    Groups are kept apart by 0.05 in modulus at equal angle so the set is
    genuinely distinct rather than a numerically split multiple root.
    """
    terms: list[BasisTerm] = []
    used: list[tuple[float, float]] = []
    order = 0
    for _ in range(32):
        if order >= max_order:
            break
        rho = float(rng.uniform(0.5, 1.5))
        theta = THETA_GRID[int(rng.integers(len(THETA_GRID)))]
        if any(t == theta and abs(r - rho) < 0.05 for r, t in used):
            continue
        per_power = 1 if theta in (0.0, math.pi) else 2
        mult = int(rng.integers(1, max_power + 2))
        mult = min(mult, (max_order - order) // per_power)
        if mult == 0:
            continue
        used.append((rho, theta))
        terms.extend(BasisTerm(rho, theta, k) for k in range(mult))
        order += per_power * mult
        if rng.random() < 0.35:
            break
    if not terms:
        terms = [BasisTerm(float(rng.uniform(0.5, 1.5)), 0.0, 0)]
        order = 1
    terms.sort(key=lambda t: (t.theta, t.rho, t.power))
    return terms, order


def random_weights(rng, terms) -> WeightedExpansion:
    """All-nonzero weights with |w| in [0.2, 2]."""
    weighted = []
    for t in terms:
        b = float(rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)))
        c = (
            0.0
            if t.is_boundary
            else float(rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)))
        )
        weighted.append(WeightedTerm(t, b=b, c=c))
    return WeightedExpansion(tuple(weighted))


def random_signal(rng, count: int, scale: float = 1.0) -> Signal:
    return Signal(scale * rng.standard_normal(count))


def well_separated_roots(rng, max_order: int = 6):
    """Random conjugate-symmetric roots pairwise at least 0.15 apart."""
    roots: list[complex] = []
    order = 0
    while order < max_order:
        if rng.random() < 0.5:
            candidate = [complex(rng.uniform(-1.5, 1.5), 0.0)]
        else:
            z = complex(rng.uniform(-1.2, 1.2), rng.uniform(0.2, 1.2))
            candidate = [z, z.conjugate()]
        if abs(candidate[0]) < 0.2:
            continue
        if any(abs(z - w) < 0.15 for z in candidate for w in roots):
            continue
        if order + len(candidate) > max_order:
            break
        roots.extend(candidate)
        order += len(candidate)
        if order >= 2 and rng.random() < 0.3:
            break
    if not roots:
        roots = [complex(rng.uniform(0.5, 1.5), 0.0)]
    return roots
