"""Casimir-plate physics and the reduction to a dimensionless wave problem.

The model chain implemented here starts from the damped thermal wave
equation for the temperature signal T(x, t) of a medium with carrier mass
m, signal speed v and scalar potential V:

    (1/v^2) T_tt + (m/hbar) T_t - T_xx + (2 V m / hbar^2) T = 0.

Factoring out the damped oscillatory part, T = exp(-t/(2 tau)) u(x, t),
gives for the first-order term the coefficient (m/hbar - 1/(v^2 tau)),
which vanishes exactly when

    tau = hbar / (m v^2),

and with that choice the zeroth-order terms collapse to
u/(4 tau^2 v^2) - (m/(2 hbar tau)) u = -(m v/(2 hbar))^2 u, leaving the
undamped reduced equation

    (1/v^2) u_tt - u_xx + q u = 0,     q = 2 V m / hbar^2 - (m v/(2 hbar))^2.

That one-line cancellation is the entire justification for
:func:`relaxation_time`; the resulting q is :func:`q_parameter`.

V is taken to be the parallel-plate Casimir energy magnitude with a
configurable sign and effective area:

    V(d) = sign * pi^2 hbar c A_eff / (720 d^3),

the unique energy whose negative derivative reproduces the plate force
F(d) = -pi^2 hbar c A / (240 d^4).  For sign = +1 (repulsive), q(d) is
strictly decreasing in d and crosses zero at

    d* = (pi^2 hbar c A_eff / (90 m v^2))^(1/3),

located numerically by :func:`find_sign_change`.

All quantities in this module are SI; the solver layer consumes only the
dimensionless :class:`ReducedParams` produced by :func:`to_dimensionless`
(lengths in units of ``length_scale``, times in units of
``length_scale / velocity``, so the dimensionless signal speed is 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketError, DomainError, UnsupportedModelError

# CODATA 2018 values.
HBAR = 1.054571817e-34  # J s
C_LIGHT = 2.99792458e8  # m/s
ELECTRON_MASS = 9.1093837015e-31  # kg


def _require_positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PhysicalConstants:
    """Dimensional backbone: reduced Planck constant, light speed, carrier mass.

    Defaults to the electron; the carrier mass is configurable because the
    model does not fix the species of the thermal carrier.
    """

    hbar: float = HBAR
    c: float = C_LIGHT
    mass: float = ELECTRON_MASS

    def __post_init__(self):
        _require_positive(self.hbar, "hbar")
        _require_positive(self.c, "c")
        _require_positive(self.mass, "mass")


@dataclass(frozen=True)
class CasimirModel:
    """Sign and effective-area coupling of the plate potential.

    sign = -1 is the attractive convention (V < 0 for all d), sign = +1
    the repulsive one (V > 0); ``effective_area`` is the area factor of
    the plate energy, in m^2.
    """

    sign: int = 1
    effective_area: float = 1e-18  # 1 nm^2

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        _require_positive(self.effective_area, "effective_area")


@dataclass(frozen=True)
class ReducedParams:
    """Dimensionless parameters of the reduced equation u_tt - u_xx + q u = 0.

    ``q_dimless = q_phys * length_scale**2`` and the time unit is
    ``length_scale / velocity`` so the dimensionless signal speed is 1.
    """

    q_phys: float  # m^-2
    velocity: float  # m/s
    length_scale: float  # m
    q_dimless: float

    def __post_init__(self):
        if not math.isfinite(self.q_phys):
            raise DomainError(f"q_phys must be finite, got {self.q_phys!r}")
        _require_positive(self.length_scale, "length_scale")
        if not (0.0 < self.velocity < C_LIGHT):
            raise DomainError(
                f"velocity must lie in (0, c), got {self.velocity!r}"
            )
        expected = self.q_phys * (self.length_scale * self.length_scale)
        if self.q_dimless != expected:
            raise DomainError(
                "q_dimless must equal q_phys * length_scale**2 "
                f"({self.q_dimless!r} != {expected!r})"
            )

    @classmethod
    def from_q_dimless(
        cls,
        q_dimless: float,
        velocity: float = 0.01 * C_LIGHT,
        length_scale: float = 1e-9,
    ) -> "ReducedParams":
        """Build params from a dimensionless q directly (solver-only runs)."""
        length_scale = _require_positive(length_scale, "length_scale")
        scale2 = length_scale * length_scale
        q_phys = float(q_dimless) / scale2
        return cls(
            q_phys=q_phys,
            velocity=float(velocity),
            length_scale=length_scale,
            q_dimless=q_phys * scale2,
        )


def casimir_force(d: float, area: float, consts: PhysicalConstants = PhysicalConstants()) -> float:
    """Parallel-plate force -pi^2 hbar c A / (240 d^4), in newtons.

    Always negative (attractive convention); scales as d^-4 and linearly
    in the plate area.

    Parameters
    ----------
    d : float
        Plate separation in meters, > 0.
    area : float
        Plate area in m^2, > 0.
    """
    d = _require_positive(d, "d")
    area = _require_positive(area, "area")
    return -math.pi**2 * consts.hbar * consts.c * area / (240.0 * d**4)


def casimir_potential(
    d: float, model: CasimirModel, consts: PhysicalConstants = PhysicalConstants()
) -> float:
    """Plate potential V(d) = sign * pi^2 hbar c A_eff / (720 d^3), in joules.

    For sign = -1 its negative d-derivative reproduces
    ``casimir_force(d, model.effective_area)``.
    """
    d = _require_positive(d, "d")
    magnitude = math.pi**2 * consts.hbar * consts.c * model.effective_area / (720.0 * d**3)
    return model.sign * magnitude


def q_parameter(
    V: float, velocity: float, consts: PhysicalConstants = PhysicalConstants()
) -> float:
    """Reduced-equation coefficient q = 2 V m / hbar^2 - (m v / (2 hbar))^2, in m^-2.

    Vanishes exactly at V = m v^2 / 8; negative whenever V <= 0.

    Raises
    ------
    DomainError
        If ``velocity`` is outside (0, c).
    """
    if not (0.0 < velocity < consts.c):
        raise DomainError(f"velocity must lie in (0, c), got {velocity!r}")
    mv_over_2hbar = consts.mass * velocity / (2.0 * consts.hbar)
    return 2.0 * V * consts.mass / consts.hbar**2 - mv_over_2hbar * mv_over_2hbar


def relaxation_time(velocity: float, consts: PhysicalConstants = PhysicalConstants()) -> float:
    """Damping timescale tau = hbar / (m v^2), in seconds.

    This is the unique tau for which the substitution
    T = exp(-t/(2 tau)) u cancels the first-order time derivative of the
    damped thermal wave equation (see the module docstring for the
    one-line derivation); it scales as v^-2.
    """
    if not (0.0 < velocity < consts.c):
        raise DomainError(f"velocity must lie in (0, c), got {velocity!r}")
    return consts.hbar / (consts.mass * velocity * velocity)


def pulse_regime_ok(pulse_duration: float, tau: float, ratio_max: float = 0.1) -> bool:
    """True iff pulse_duration / tau <= ratio_max (boundary inclusive).

    In that regime the damped factor is flat over the pulse and the
    undamped reduced solution approximates the temperature field directly.
    """
    pulse_duration = _require_positive(pulse_duration, "pulse_duration")
    tau = _require_positive(tau, "tau")
    ratio_max = _require_positive(ratio_max, "ratio_max")
    return pulse_duration / tau <= ratio_max


def q_at_separation(
    d: float,
    model: CasimirModel,
    velocity: float,
    consts: PhysicalConstants = PhysicalConstants(),
) -> float:
    """q (m^-2) for plates at separation d, composing potential and q_parameter."""
    return q_parameter(casimir_potential(d, model, consts), velocity, consts)


def find_sign_change(
    model: CasimirModel,
    velocity: float,
    consts: PhysicalConstants = PhysicalConstants(),
    d_lo: float = 1e-10,
    d_hi: float = 1e-8,
    tol: float = 1e-13,
) -> float:
    """Separation d* with q(d*) = 0, bisected to a bracket width <= tol.

    Only defined for the repulsive model: with sign = +1 the potential
    decays as d^-3, so q is strictly decreasing in d and the root in a
    sign-changing bracket is unique.  Robustness is preferred over
    iteration count at these scales, hence plain bisection.

    Parameters
    ----------
    d_lo, d_hi : float
        Bracket in meters with q(d_lo) * q(d_hi) < 0.
    tol : float
        Final bracket width in meters (default 1e-4 nm).

    Raises
    ------
    UnsupportedModelError
        For the attractive model, which has q < 0 everywhere.
    BracketError
        If the bracket does not straddle the sign change.
    """
    if model.sign != 1:
        raise UnsupportedModelError(
            "q has no zero for the attractive model (V < 0 implies q < 0); "
            "use sign=+1"
        )
    d_lo = _require_positive(d_lo, "d_lo")
    d_hi = _require_positive(d_hi, "d_hi")
    tol = _require_positive(tol, "tol")
    if d_lo >= d_hi:
        raise DomainError(f"need d_lo < d_hi, got [{d_lo!r}, {d_hi!r}]")
    q_lo = q_at_separation(d_lo, model, velocity, consts)
    q_hi = q_at_separation(d_hi, model, velocity, consts)
    if q_lo == 0.0:
        return d_lo
    if q_hi == 0.0:
        return d_hi
    if q_lo * q_hi > 0.0:
        raise BracketError(
            f"no sign change of q in [{d_lo:g}, {d_hi:g}] m: "
            f"q(d_lo)={q_lo:g}, q(d_hi)={q_hi:g}"
        )
    while d_hi - d_lo > tol:
        mid = 0.5 * (d_lo + d_hi)
        if mid <= d_lo or mid >= d_hi:
            break  # bracket at float resolution
        q_mid = q_at_separation(mid, model, velocity, consts)
        if q_mid == 0.0:
            return mid
        if q_lo * q_mid < 0.0:
            d_hi = mid
        else:
            d_lo, q_lo = mid, q_mid
    return 0.5 * (d_lo + d_hi)


def to_dimensionless(
    q_phys: float, velocity: float, length_scale: float
) -> ReducedParams:
    """Map physical q (m^-2) onto solver units.

    ``x_dimless = x / length_scale`` and ``t_dimless = velocity * t /
    length_scale``, which makes the dimensionless signal speed exactly 1
    and gives ``q_dimless = q_phys * length_scale**2``.
    """
    length_scale = _require_positive(length_scale, "length_scale")
    return ReducedParams(
        q_phys=float(q_phys),
        velocity=float(velocity),
        length_scale=length_scale,
        q_dimless=float(q_phys) * length_scale * length_scale,
    )
