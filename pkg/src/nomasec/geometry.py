"""Annular-sector scenario regions and the constant-area protected zone.

The served users occupy a sector ring around the base station's ground
projection; eavesdroppers occupy a larger concentric sector ring minus the
user region. A protected zone carves an eavesdropper-free patch out of the
eavesdropper region. Its shape is an (angle, radius) pair chosen so that the
cleared area is always the same fixed fraction ``q`` of the eavesdropper
region, which is what makes shapes with different angles comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_angle(theta):
    """Wrap angle(s) to the interval (-pi, pi]. Accepts scalars or arrays."""
    return math.pi - np.remainder(math.pi - np.asarray(theta, dtype=float), TWO_PI)


@dataclass(frozen=True)
class PolarPoint:
    """Ground-plane node location: horizontal distance from the hover point
    and azimuth, normalized to (-pi, pi]."""

    r: float
    theta: float

    def __post_init__(self):
        if not self.r >= 0.0:
            raise ValueError(f"radius must be non-negative, got {self.r}")
        object.__setattr__(self, "theta", float(wrap_angle(self.theta)))


@dataclass(frozen=True)
class ScenarioGeometry:
    """User and eavesdropper sector rings, symmetric about ``theta_bar``.

    Users lie in {l1 <= r <= l2, |theta - theta_bar| <= delta/2}. The
    eavesdropper region shares the inner radius and symmetry axis but extends
    to ``le_max`` radially and ``delta_e_max`` angularly, minus the user
    region itself (the user region is assumed clear of eavesdroppers).
    """

    l1: float
    l2: float
    le_max: float
    delta: float
    delta_e_max: float
    theta_bar: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.l1 < self.l2 < self.le_max:
            raise ValueError(
                f"radii must satisfy 0 < l1 < l2 < le_max, got "
                f"l1={self.l1}, l2={self.l2}, le_max={self.le_max}"
            )
        if not 0.0 < self.delta <= self.delta_e_max:
            raise ValueError(
                f"angles must satisfy 0 < delta <= delta_e_max, got "
                f"delta={self.delta}, delta_e_max={self.delta_e_max}"
            )
        if self.delta_e_max > TWO_PI:
            raise ValueError(f"delta_e_max must not exceed 2*pi, got {self.delta_e_max}")
        object.__setattr__(self, "theta_bar", float(wrap_angle(self.theta_bar)))

    def user_region_area(self) -> float:
        return 0.5 * (self.l2**2 - self.l1**2) * self.delta


@dataclass(frozen=True)
class ProtectedZone:
    """Eavesdropper-free patch: area fraction ``q`` of the eavesdropper
    region, realized as the (delta_e, l_e) shape described in zone_area."""

    q: float
    delta_e: float
    l_e: float

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q must lie in [0, 1], got {self.q}")
        if self.delta_e < 0.0:
            raise ValueError(f"delta_e must be non-negative, got {self.delta_e}")
        if self.l_e < 0.0:
            raise ValueError(f"l_e must be non-negative, got {self.l_e}")


def eve_region_area(geom: ScenarioGeometry) -> float:
    """Area of the eavesdropper region (outer sector ring minus user region)."""
    full = (geom.le_max**2 - geom.l1**2) * geom.delta_e_max
    user = (geom.l2**2 - geom.l1**2) * geom.delta
    return 0.5 * (full - user)


def delta_e_min(geom: ScenarioGeometry, q: float) -> float:
    """Nominal smallest zone angle for area fraction ``q``.

    Derived for the narrow-zone regime where the zone is a pure radial
    extension reaching le_max; see zone_angle_domain for the regime where
    this nominal value stops being attainable.
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    return 2.0 * q * eve_region_area(geom) / (geom.le_max**2 - geom.l2**2)


def _angle_at_full_radius(geom: ScenarioGeometry, q: float) -> float:
    """Smallest angle at which the q-area zone still fits within le_max.

    For small q this coincides with delta_e_min; for large q the zone is
    already wider than the user sector when its radius hits le_max, and the
    bound comes from the wide-shape area balance instead.
    """
    nominal = delta_e_min(geom, q)
    if nominal <= geom.delta:
        return nominal
    b = (geom.le_max**2 - geom.l1**2) * geom.delta_e_max
    c = (geom.l2**2 - geom.l1**2) * geom.delta
    return (q * b + (1.0 - q) * c) / (geom.le_max**2 - geom.l1**2)


def zone_angle_domain(geom: ScenarioGeometry, q: float) -> tuple[float, float]:
    """Angle range [lo, delta_e_max] searched by the shape optimizer.

    lo is the nominal delta_e_min when that is attainable; for q large
    enough that the nominal minimum exceeds delta_e_max, fall back to the
    geometric feasibility bound so the domain stays non-empty.
    """
    lo = delta_e_min(geom, q)
    if lo > geom.delta_e_max:
        lo = _angle_at_full_radius(geom, q)
    return lo, geom.delta_e_max


def l_e_for_angle(geom: ScenarioGeometry, q: float, delta_e: float) -> float:
    """Zone radius that keeps the zone area at ``q`` times the region area.

    Shape regimes:
      * delta_e <= delta: the zone is a radial extension of the user sector,
        [l2, l_e] over the zone's angular span.
      * delta_e > delta: the zone additionally overhangs the user sector by
        (delta_e - delta), split equally on both sides, extending from l1.
        The radius follows the wide-shape balance while it stays >= l2 and
        otherwise collapses to the overhang slices alone.

    Raises ValueError when no radius in [l1, le_max] can realize the area
    (angle below the feasibility bound) or when delta_e exceeds delta_e_max.
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    lo = _angle_at_full_radius(geom, q)
    tol = 1e-12 * geom.delta_e_max
    if delta_e < lo - tol:
        raise ValueError(
            f"delta_e={delta_e} is below the feasible minimum {lo} for q={q} "
            f"(the zone would need l_e > le_max)"
        )
    if delta_e > geom.delta_e_max + tol:
        raise ValueError(f"delta_e={delta_e} exceeds delta_e_max={geom.delta_e_max}")
    if q == 0.0:
        return geom.l2 if delta_e <= geom.delta else geom.l1
    b = (geom.le_max**2 - geom.l1**2) * geom.delta_e_max
    c = (geom.l2**2 - geom.l1**2) * geom.delta
    if delta_e <= geom.delta:
        le_sq = geom.l2**2 + q * (b - c) / delta_e
    else:
        # wide shape: accepted while the balanced radius clears the user ring
        le_sq = geom.l1**2 + (q * b + (1.0 - q) * c) / delta_e
        if le_sq < geom.l2**2:
            le_sq = geom.l1**2 + q * (b - c) / (delta_e - geom.delta)
    return min(math.sqrt(le_sq), geom.le_max)


def make_zone(geom: ScenarioGeometry, q: float, delta_e: float) -> ProtectedZone:
    """Build the zone for (q, delta_e) with the radius from l_e_for_angle."""
    return ProtectedZone(q=q, delta_e=delta_e, l_e=l_e_for_angle(geom, q, delta_e))


def empty_zone(geom: ScenarioGeometry) -> ProtectedZone:
    """The q=0 placeholder zone (contains no point)."""
    return ProtectedZone(q=0.0, delta_e=0.0, l_e=geom.l2)


def full_zone(geom: ScenarioGeometry) -> ProtectedZone:
    """The q=1 zone covering the entire eavesdropper region."""
    return ProtectedZone(q=1.0, delta_e=geom.delta_e_max, l_e=geom.le_max)


def zone_area(geom: ScenarioGeometry, zone: ProtectedZone) -> float:
    """Footprint area of the zone (verification oracle for the constant-q
    family; matches the shape regimes of l_e_for_angle)."""
    de, le = zone.delta_e, zone.l_e
    if de <= geom.delta:
        return 0.5 * (le**2 - geom.l2**2) * de
    slices = 0.5 * (le**2 - geom.l1**2) * (de - geom.delta)
    if le >= geom.l2:
        return 0.5 * (le**2 - geom.l2**2) * geom.delta + slices
    return slices


def zone_mask_from_offsets(
    geom: ScenarioGeometry, zone: ProtectedZone, r, abs_offset
) -> np.ndarray:
    """Vectorized membership test given |theta - theta_bar| already wrapped.

    Within the user angular span the zone starts at l2 (the user ring itself
    is not part of the eavesdropper region); in the overhang slices it starts
    at l1.
    """
    r = np.asarray(r, dtype=float)
    abs_offset = np.asarray(abs_offset, dtype=float)
    if zone.q == 0.0:
        return np.zeros(np.broadcast(r, abs_offset).shape, dtype=bool)
    in_span = abs_offset <= 0.5 * zone.delta_e
    inner = np.where(abs_offset <= 0.5 * geom.delta, geom.l2, geom.l1)
    return in_span & (r >= inner) & (r <= zone.l_e)


def zone_mask(geom: ScenarioGeometry, zone: ProtectedZone, r, theta) -> np.ndarray:
    """Vectorized zone membership for points given as (r, theta) arrays."""
    offset = np.abs(wrap_angle(np.asarray(theta, dtype=float) - geom.theta_bar))
    return zone_mask_from_offsets(geom, zone, r, offset)


def zone_contains(geom: ScenarioGeometry, zone: ProtectedZone, p: PolarPoint) -> bool:
    """True iff the point lies inside the protected zone footprint."""
    return bool(zone_mask(geom, zone, p.r, p.theta))
