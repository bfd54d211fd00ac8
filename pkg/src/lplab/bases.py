"""Conversions between recurrence coefficients, characteristic roots, and
interpolation bases, plus synthesis of signals from weighted basis expansions.

The canonical basis form keeps rho > 0 and theta in [0, pi]; a negative real
root -rho is folded to (rho, theta=pi), where cos(n*pi) supplies the (-1)^n
sign. Boundary angles (exactly 0.0 or math.pi) carry a cosine weight only.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .core import LpCoefficients, Signal
from .errors import (
    InternalInvariantError,
    IllConditionedError,
    InvalidArgumentError,
    NumericFailureError,
    NumericOverflowError,
    UnsupportedRootError,
)

#: Default relative tolerance for merging numerically coincident roots.
DEFAULT_CLUSTER_TOL = 1e-7

#: Condition threshold above which weight solving refuses to answer.
CONDITION_LIMIT = 1e12

#: Moduli at or below this are treated as a root at zero.
ZERO_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class BasisTerm:
    """One interpolation basis n^power * rho^n * cos(n*theta).

    Interior angles (0 < theta < pi) implicitly carry the sine partner
    n^power * rho^n * sin(n*theta) and therefore count twice toward the
    recurrence order.
    """

    rho: float
    theta: float
    power: int

    def __post_init__(self):
        if not (np.isfinite(self.rho) and self.rho > 0):
            raise InvalidArgumentError(f"rho must be positive and finite, got {self.rho}")
        if not (0.0 <= self.theta <= math.pi):
            raise InvalidArgumentError(f"theta must lie in [0, pi], got {self.theta}")
        if self.power < 0:
            raise InvalidArgumentError("power must be a nonnegative integer")

    @property
    def is_boundary(self) -> bool:
        """True when theta is exactly 0 or pi (single real root, no sine partner)."""
        return self.theta == 0.0 or self.theta == math.pi

    @property
    def order_contribution(self) -> int:
        return 1 if self.is_boundary else 2


@dataclass(frozen=True)
class WeightedTerm:
    """A basis term with its cosine weight b and sine weight c."""

    basis: BasisTerm
    b: float
    c: float = 0.0

    def __post_init__(self):
        if self.basis.is_boundary and self.c != 0.0:
            raise InvalidArgumentError(
                "sine weight must be zero for boundary angles (theta = 0 or pi)"
            )


@dataclass(frozen=True)
class WeightedExpansion:
    """A signal written as a weighted sum of interpolation bases."""

    terms: tuple[WeightedTerm, ...]
    condition_estimate: float | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        keys = [(t.basis.rho, t.basis.theta, t.basis.power) for t in self.terms]
        if len(set(keys)) != len(keys):
            raise InvalidArgumentError("expansion terms must have distinct (rho, theta, power)")

    @property
    def order(self) -> int:
        return sum(t.basis.order_contribution for t in self.terms)


@dataclass(frozen=True)
class RootSet:
    """Characteristic roots with multiplicities.

    Non-real roots must appear together with their exact conjugates at equal
    multiplicity, as they do for any real-coefficient polynomial.
    """

    roots: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        entries = tuple((complex(z), int(m)) for z, m in self.roots)
        if not entries:
            raise InvalidArgumentError("root set cannot be empty")
        for z, m in entries:
            if m < 1:
                raise InvalidArgumentError("multiplicities must be positive")
        counts = dict(entries)
        if len(counts) != len(entries):
            raise InvalidArgumentError("duplicate root values in root set")
        for z, m in entries:
            if z.imag != 0.0 and counts.get(z.conjugate()) != m:
                raise InvalidArgumentError(
                    f"root {z} lacks a conjugate partner of equal multiplicity"
                )
        object.__setattr__(self, "roots", entries)

    @property
    def order(self) -> int:
        """Total multiplicity; equals the generating recurrence order."""
        return sum(m for _, m in self.roots)


def characteristic_polynomial(coeffs: LpCoefficients) -> np.ndarray:
    """Monic polynomial x^p - a_1 x^(p-1) - ... - a_p, highest degree first."""
    return np.concatenate(([1.0], -coeffs.a))


def _cluster_1d(points: list[complex], tol: float) -> list[tuple[complex, int]]:
    """Single-linkage merge of points whose relative distance is below tol."""
    remaining = sorted(points, key=lambda z: (z.real, z.imag))
    clusters: list[list[complex]] = []
    for z in remaining:
        for cluster in clusters:
            if any(
                abs(z - w) <= tol * max(1.0, abs(z), abs(w)) for w in cluster
            ):
                cluster.append(z)
                break
        else:
            clusters.append([z])
    return [
        (sum(c) / len(c), len(c))
        for c in clusters
    ]


def find_roots(poly, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> RootSet:
    """All roots of a monic real polynomial, with multiplicities.

    Roots are computed as companion-matrix eigenvalues; computed roots whose
    relative distance is below ``cluster_tol`` are merged to their centroid
    with summed multiplicity, and near-real roots are snapped onto the real
    axis at the same tolerance. Each reported root r is verified against the
    residual contract |poly(r)| <= 1e-6 * (1 + |r|)^p.
    """
    coeffs = np.asarray(poly, dtype=float)
    if coeffs.ndim != 1 or coeffs.size < 2:
        raise InvalidArgumentError("polynomial must have degree at least 1")
    if not np.all(np.isfinite(coeffs)):
        raise InvalidArgumentError("polynomial coefficients must be finite")
    if coeffs[0] == 0.0:
        raise InvalidArgumentError("leading coefficient must be nonzero")
    if cluster_tol <= 0:
        raise InvalidArgumentError("cluster_tol must be positive")
    coeffs = coeffs / coeffs[0]
    degree = coeffs.size - 1

    raw = np.roots(coeffs)
    if raw.size != degree or not np.all(np.isfinite(raw)):
        raise NumericFailureError(f"root finding failed for polynomial {coeffs.tolist()}")

    # LAPACK returns exact conjugate pairs for real input, so snapping the
    # imaginary part at the cluster tolerance keeps the set symmetric.
    snapped = [
        complex(z.real, 0.0) if abs(z.imag) <= cluster_tol * max(1.0, abs(z)) else complex(z)
        for z in raw
    ]
    reals = [z for z in snapped if z.imag == 0.0]
    upper = [z for z in snapped if z.imag > 0.0]
    lower = [z for z in snapped if z.imag < 0.0]
    if len(upper) != len(lower):
        raise NumericFailureError(
            f"conjugate pairing failed for polynomial {coeffs.tolist()}"
        )

    entries: list[tuple[complex, int]] = list(_cluster_1d(reals, cluster_tol))
    for centroid, mult in _cluster_1d(upper, cluster_tol):
        entries.append((centroid, mult))
        entries.append((centroid.conjugate(), mult))
    entries.sort(key=lambda zm: (zm[0].real, zm[0].imag))

    total = sum(m for _, m in entries)
    if total != degree:
        raise NumericFailureError(
            f"recovered multiplicity {total} != degree {degree} for {coeffs.tolist()}"
        )
    for z, _ in entries:
        residual = abs(np.polyval(coeffs, z))
        if residual > 1e-6 * (1.0 + abs(z)) ** degree:
            raise NumericFailureError(
                f"root {z} of {coeffs.tolist()} has residual {residual:.3e}"
            )
    return RootSet(tuple(entries))


def roots_to_bases(roots: RootSet) -> list[BasisTerm]:
    """Canonical basis terms spanned by a conjugate-symmetric root set.

    A real root rho > 0 of multiplicity m yields (rho, 0, k) for k < m; a real
    root -rho < 0 yields (rho, pi, k); a conjugate pair rho*e^(+-i*theta)
    yields (rho, theta, k), each interior term standing for both its cosine
    and sine bases. Roots at zero are rejected: they mean the recurrence's
    trailing coefficient vanishes and the caller should reduce the order.
    """
    terms: list[BasisTerm] = []
    for z, mult in roots.roots:
        if z.imag < 0.0:
            continue  # handled via the conjugate partner
        modulus = abs(z)
        if modulus <= ZERO_ROOT_TOL:
            raise UnsupportedRootError(
                f"characteristic root at zero (|r| = {modulus:.3e}); reduce the order"
            )
        if z.imag == 0.0:
            theta = 0.0 if z.real > 0 else math.pi
        else:
            theta = cmath.phase(z)
        for power in range(mult):
            terms.append(BasisTerm(rho=modulus, theta=theta, power=power))
    terms.sort(key=lambda t: (t.theta, t.rho, t.power))
    if sum(t.order_contribution for t in terms) != roots.order:
        raise InternalInvariantError("basis count does not match recurrence order")
    return terms


def _implied_roots(bases: list[BasisTerm]) -> list[complex]:
    """Root multiset implied by a basis list (validates the basis structure)."""
    if not bases:
        raise InvalidArgumentError("basis list cannot be empty")
    keys = [(t.rho, t.theta, t.power) for t in bases]
    if len(set(keys)) != len(keys):
        raise InvalidArgumentError("duplicate (rho, theta, power) basis term")
    groups: dict[tuple[float, float], list[int]] = {}
    for t in bases:
        groups.setdefault((t.rho, t.theta), []).append(t.power)
    roots: list[complex] = []
    for (rho, theta), powers in groups.items():
        if sorted(powers) != list(range(len(powers))):
            raise InvalidArgumentError(
                f"powers for (rho={rho}, theta={theta}) must be contiguous from 0"
            )
        mult = len(powers)
        if theta == 0.0:
            roots.extend([complex(rho, 0.0)] * mult)
        elif theta == math.pi:
            roots.extend([complex(-rho, 0.0)] * mult)
        else:
            root = rho * cmath.exp(1j * theta)
            roots.extend([root] * mult)
            roots.extend([root.conjugate()] * mult)
    return roots


def bases_to_coefficients(bases: list[BasisTerm]) -> LpCoefficients:
    """Recurrence coefficients whose solution space is spanned by ``bases``.

    Expands the product of (x - r) over the implied root multiset and negates
    the sub-leading coefficients.
    """
    roots = _implied_roots(bases)
    poly = np.poly(np.asarray(roots, dtype=complex))
    imag_leak = float(np.abs(poly.imag).max())
    if imag_leak > 1e-9 * max(1.0, float(np.abs(poly.real).max())):
        raise NumericFailureError(
            f"polynomial expansion left imaginary residue {imag_leak:.3e}"
        )
    return LpCoefficients(-poly.real[1:])


def _term_columns(term: BasisTerm, n: np.ndarray) -> tuple[np.ndarray, np.ndarray | None]:
    """Sample columns (cos, sin) of a basis term on integer positions n.

    Boundary angles return (column, None); theta = pi uses the exact (-1)^n
    sign rather than cos(n*pi).
    """
    envelope = n.astype(float) ** term.power * term.rho ** n
    if term.theta == 0.0:
        return envelope, None
    if term.theta == math.pi:
        signs = np.where(n % 2 == 0, 1.0, -1.0)
        return envelope * signs, None
    angle = n * term.theta
    return envelope * np.cos(angle), envelope * np.sin(angle)


def solve_weights(bases: list[BasisTerm], initial) -> WeightedExpansion:
    """Weights that make the basis expansion pass through p initial values.

    Solves the dense p x p system evaluating every basis column at
    n = 0..p-1 (cosine and sine columns separately for interior angles) and
    surfaces the system's condition estimate on the returned expansion.
    Raises IllConditionedError when the condition estimate exceeds 1e12.
    """
    if not bases:
        raise InvalidArgumentError("basis list cannot be empty")
    seed = np.asarray(initial, dtype=float)
    if seed.ndim != 1 or not np.all(np.isfinite(seed)):
        raise InvalidArgumentError("initial values must be a finite one-dimensional list")
    p = sum(t.order_contribution for t in bases)
    if seed.size != p:
        raise InvalidArgumentError(
            f"basis set spans order {p}, got {seed.size} initial values"
        )
    keys = [(t.rho, t.theta, t.power) for t in bases]
    if len(set(keys)) != len(keys):
        raise InvalidArgumentError("duplicate (rho, theta, power) basis term")

    n = np.arange(p)
    columns = []
    for term in bases:
        cos_col, sin_col = _term_columns(term, n)
        columns.append(cos_col)
        if sin_col is not None:
            columns.append(sin_col)
    matrix = np.column_stack(columns)
    condition = float(np.linalg.cond(matrix))
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise IllConditionedError(
            f"basis evaluation matrix has condition estimate {condition:.3e}"
        )
    weights = np.linalg.solve(matrix, seed)

    terms = []
    cursor = 0
    for term in bases:
        if term.is_boundary:
            terms.append(WeightedTerm(term, b=float(weights[cursor])))
            cursor += 1
        else:
            terms.append(
                WeightedTerm(term, b=float(weights[cursor]), c=float(weights[cursor + 1]))
            )
            cursor += 2
    return WeightedExpansion(tuple(terms), condition_estimate=condition)


def synthesize(expansion: WeightedExpansion, count: int) -> Signal:
    """Evaluate the weighted expansion at n = 0..count-1."""
    if count < 1:
        raise InvalidArgumentError("count must be positive")
    n = np.arange(count)
    out = np.zeros(count)
    for wt in expansion.terms:
        cos_col, sin_col = _term_columns(wt.basis, n)
        out += wt.b * cos_col
        if sin_col is not None:
            out += wt.c * sin_col
    if not np.all(np.isfinite(out)):
        bad = int(np.flatnonzero(~np.isfinite(out))[0])
        raise NumericOverflowError(f"synthesis produced a non-finite value at index {bad}")
    return Signal(out)
