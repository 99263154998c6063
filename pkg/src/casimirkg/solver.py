"""Closed-form Cauchy solutions of u_tt - u_xx + q u = 0 (dimensionless).

For initial data u(x, 0) = 0, u_t(x, 0) = f(x) the solution is a
d'Alembert-type integral over the domain of dependence,

    u(x, t) = (1/2) * integral_{x-t}^{x+t} f(z) * K(q, t^2 - (x-z)^2) dz,

with the Riemann-function kernel

    K(q, delta) = J0(sqrt(q * delta))   for q > 0,
                = 1                     for q = 0,
                = I0(sqrt(-q * delta))  for q < 0.

The radical is read as the *argument* of the kernel, the standard
Riemann-function form; the independent finite-difference solver in
``casimirkg.fdm`` confirms this reading.  Note J0(sqrt(s)) and
I0(sqrt(s)) are entire in s, so the integrand is smooth in z even though
sqrt itself is not; the endpoint subintervals still get extra adaptive
depth as cheap insurance.

Everything here is dimensionless (signal speed 1); the mapping from SI
quantities lives in ``casimirkg.physics``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import AccuracyError, DomainError, GridError
from .physics import ReducedParams
from .specfun import bessel_i0, bessel_j0

# Effective half-width of the Gaussian pulse for light-cone bookkeeping:
# exp(-3.8^2) ~ 5.4e-7, far below every comparison tolerance used here.
GAUSSIAN_SUPPORT_HALFWIDTH = 3.8


@dataclass(frozen=True)
class InitialCondition:
    """Cauchy datum f(x) for u_t(x, 0); u(x, 0) is always zero.

    Three kinds:

    * ``gaussian`` -- fixed f(x) = exp(-x^2) (no parameters);
    * ``bump`` -- smooth compact bump exp(1 - 1/(1 - s^2)) with
      s = (x - center)/half_width, exactly zero for |s| >= 1;
    * ``tabulated`` -- linear interpolation of sorted samples, exactly
      zero outside the table range.
    """

    kind: str
    center: float = 0.0
    half_width: float = 0.5
    table_x: tuple = field(default=())
    table_f: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("gaussian", "bump", "tabulated"):
            raise DomainError(f"unknown initial-condition kind {self.kind!r}")
        if self.kind == "bump":
            if not (math.isfinite(self.center) and self.half_width > 0.0):
                raise DomainError("bump needs finite center and half_width > 0")
        if self.kind == "tabulated":
            xs = np.asarray(self.table_x, dtype=float)
            fs = np.asarray(self.table_f, dtype=float)
            if xs.size < 2 or xs.size != fs.size:
                raise DomainError("tabulated needs >= 2 equal-length samples")
            if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(fs)):
                raise DomainError("tabulated samples must be finite")
            if not np.all(np.diff(xs) > 0.0):
                raise DomainError("tabulated x samples must be strictly increasing")

    @classmethod
    def gaussian(cls) -> "InitialCondition":
        return cls(kind="gaussian")

    @classmethod
    def bump(cls, center: float = 0.0, half_width: float = 0.5) -> "InitialCondition":
        return cls(kind="bump", center=float(center), half_width=float(half_width))

    @classmethod
    def tabulated(cls, xs: Sequence[float], fs: Sequence[float]) -> "InitialCondition":
        return cls(
            kind="tabulated",
            table_x=tuple(float(v) for v in xs),
            table_f=tuple(float(v) for v in fs),
        )

    def support(self) -> tuple[float, float]:
        """Interval outside which f is (effectively) zero.

        Exact for bump and tabulated; for the Gaussian the half-width
        ``GAUSSIAN_SUPPORT_HALFWIDTH`` truncates the tail at ~5e-7.
        """
        if self.kind == "gaussian":
            return (-GAUSSIAN_SUPPORT_HALFWIDTH, GAUSSIAN_SUPPORT_HALFWIDTH)
        if self.kind == "bump":
            return (self.center - self.half_width, self.center + self.half_width)
        return (self.table_x[0], self.table_x[-1])

    def _scalar(self, x: float) -> float:
        if self.kind == "gaussian":
            return math.exp(-x * x)
        if self.kind == "bump":
            s = (x - self.center) / self.half_width
            if abs(s) >= 1.0:
                return 0.0
            return math.exp(1.0 - 1.0 / (1.0 - s * s))
        lo, hi = self.table_x[0], self.table_x[-1]
        if x < lo or x > hi:
            return 0.0
        return float(np.interp(x, self.table_x, self.table_f))

    def __call__(self, x):
        if isinstance(x, np.ndarray):
            if self.kind == "gaussian":
                return np.exp(-x * x)
            if self.kind == "bump":
                s = (x - self.center) / self.half_width
                out = np.zeros_like(s)
                inside = np.abs(s) < 1.0
                out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside] ** 2))
                return out
            out = np.interp(x, self.table_x, self.table_f, left=0.0, right=0.0)
            # np.interp clamps rather than zeroing at exact end points only;
            # enforce zero extension strictly outside the table range.
            out = np.where((x < self.table_x[0]) | (x > self.table_x[-1]), 0.0, out)
            return out
        return self._scalar(float(x))


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature controls for the d'Alembert integrals.

    ``adaptive-simpson`` bisects intervals on the standard Richardson
    error estimate and is the default (the J0 kernel oscillates for large
    q t^2, so adaptivity is required).  ``gauss-legendre-composite``
    doubles the panel count of a fixed-order rule until two successive
    estimates agree, for smooth integrands.  ``max_subdivisions`` caps
    the total number of subintervals across the whole integral.
    """

    method: str = "adaptive-simpson"
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2**20

    def __post_init__(self):
        if self.method not in ("adaptive-simpson", "gauss-legendre-composite"):
            raise DomainError(f"unknown quadrature method {self.method!r}")
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


@dataclass
class Field2D:
    """Sampled field u(x, t) on a rectangular grid.

    ``values[i][j]`` is u at time ``ts[i]`` and position ``xs[j]``;
    ``provenance`` records which route produced it ("closed-form" or
    "fdm").  A t = 0 leading row must be identically zero (the Cauchy
    condition).
    """

    xs: np.ndarray
    ts: np.ndarray
    values: np.ndarray
    q_dimless: float
    provenance: str

    def __post_init__(self):
        self.xs = np.asarray(self.xs, dtype=float)
        self.ts = np.asarray(self.ts, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.provenance not in ("closed-form", "fdm"):
            raise DomainError(f"unknown provenance {self.provenance!r}")
        if self.xs.ndim != 1 or self.ts.ndim != 1:
            raise GridError("xs and ts must be one-dimensional")
        if self.values.shape != (self.ts.size, self.xs.size):
            raise GridError(
                f"values shape {self.values.shape} does not match grids "
                f"({self.ts.size}, {self.xs.size})"
            )
        if np.any(np.diff(self.xs) <= 0.0) or np.any(np.diff(self.ts) < 0.0):
            raise GridError("grids must be sorted (xs strictly, ts non-decreasing)")
        if self.ts.size and self.ts[0] < 0.0:
            raise DomainError("ts must be nonnegative")
        if self.ts.size and self.ts[0] == 0.0 and np.any(self.values[0] != 0.0):
            raise DomainError("row at t = 0 must be identically zero")


# ---------------------------------------------------------------------------
# quadrature engine
# ---------------------------------------------------------------------------

# 10-point Gauss-Legendre nodes/weights on [-1, 1].
_GL_NODES = (
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472, 0.6794095682990244, 0.8650633666889845,
    0.9739065285171717,
)
_GL_WEIGHTS = (
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881,
)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n


def _adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth, budget):
    m = 0.5 * (a + b)
    flm = f(0.5 * (a + m))
    frm = f(0.5 * (m + b))
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol or depth <= 0:
        return left + right + delta / 15.0, abs(delta) / 15.0 + 1e-16 * abs(whole)
    budget.left -= 2
    if budget.left <= 0:
        best = left + right + delta / 15.0
        raise AccuracyError(
            "quadrature subdivision budget exhausted",
            value=best,
            est_error=abs(delta),
        )
    lv, le = _adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget)
    rv, re = _adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget)
    return lv + rv, le + re


def _integrate_simpson(f, a, b, tol, max_subdivisions, depth=48):
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    budget = _Budget(max_subdivisions)
    return _adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth, budget)


def _integrate_gauss(f, a, b, tol, max_subdivisions):
    def composite(panels: int) -> float:
        h = (b - a) / panels
        total = 0.0
        for i in range(panels):
            lo = a + i * h
            c = lo + 0.5 * h
            half = 0.5 * h
            s = 0.0
            for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
                s += weight * f(c + half * node)
            total += s * half
        return total

    panels = 1
    prev = composite(panels)
    while True:
        panels *= 2
        if panels > max_subdivisions:
            raise AccuracyError(
                "composite Gauss-Legendre failed to converge within the panel budget",
                value=prev,
                est_error=float("nan"),
            )
        cur = composite(panels)
        err = abs(cur - prev)
        if err <= tol:
            return cur, err + 1e-16 * abs(cur)
        prev = cur


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    quad: QuadratureSpec = QuadratureSpec(),
) -> tuple[float, float]:
    """Integrate f over [a, b] to the spec's tolerances.

    Returns ``(value, est_error)``.  The effective absolute tolerance is
    ``max(abs_tol, rel_tol * |value|)`` with the value scale taken from a
    cheap first pass.

    Raises
    ------
    AccuracyError
        When the subdivision budget runs out; the exception carries the
        best partial estimate and its error bound.
    """
    a, b = float(a), float(b)
    if a > b:
        raise DomainError(f"need a <= b, got [{a!r}, {b!r}]")
    if a == b:
        return 0.0, 0.0
    # Rough scale for the relative part of the tolerance.
    rough = abs((b - a) * f(0.5 * (a + b)))
    tol = max(quad.abs_tol, quad.rel_tol * rough)
    if quad.method == "adaptive-simpson":
        return _integrate_simpson(f, a, b, tol, quad.max_subdivisions)
    return _integrate_gauss(f, a, b, tol, quad.max_subdivisions)


# ---------------------------------------------------------------------------
# kernel and solution evaluation
# ---------------------------------------------------------------------------


def kernel(q_dimless: float, delta: float) -> float:
    """Riemann-function kernel K(q, delta) for delta = t^2 - (x - z)^2 >= 0.

    J0 branch for q > 0, I0 branch for q < 0, exactly 1 at q = 0.

    Raises
    ------
    DomainError
        For delta < 0 (outside the domain of dependence; the caller must
        clip to the light cone).
    """
    if not math.isfinite(delta) or delta < 0.0:
        raise DomainError(f"kernel needs delta >= 0, got {delta!r}")
    if q_dimless > 0.0:
        return bessel_j0(math.sqrt(q_dimless * delta)).value
    if q_dimless < 0.0:
        return bessel_i0(math.sqrt(-q_dimless * delta)).value
    return 1.0


def _make_integrand(x: float, t: float, q: float, ic: InitialCondition):
    tt = t * t
    if q > 0.0:

        def g(z: float) -> float:
            delta = tt - (x - z) * (x - z)
            if delta < 0.0:
                delta = 0.0
            return ic._scalar(z) * bessel_j0(math.sqrt(q * delta)).value

    elif q < 0.0:
        mq = -q

        def g(z: float) -> float:
            delta = tt - (x - z) * (x - z)
            if delta < 0.0:
                delta = 0.0
            return ic._scalar(z) * bessel_i0(math.sqrt(mq * delta)).value

    else:

        def g(z: float) -> float:
            return ic._scalar(z)

    return g


def solve_point(
    x: float,
    t: float,
    params: ReducedParams,
    ic: InitialCondition,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Closed-form u(x, t) at a single dimensionless point.

    Evaluates (1/2) * integral of f(z) K(q, t^2 - (x-z)^2) over the
    domain of dependence [x - t, x + t]; returns exactly 0.0 at t = 0.
    The integration interval is clipped to the support of f, so compact
    data outside the light cone yield an exact 0.0.

    Raises
    ------
    DomainError
        For t < 0 (forward evolution only; no mirroring).
    AccuracyError
        If the quadrature cannot reach its tolerance.
    """
    t = float(t)
    x = float(x)
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"need t >= 0, got {t!r}")
    if t == 0.0:
        return 0.0
    q = params.q_dimless
    a, b = x - t, x + t
    lo, hi = ic.support()
    if ic.kind != "gaussian":
        # Clip exactly: integrand vanishes outside the support.
        a, b = max(a, lo), min(b, hi)
        if a >= b:
            return 0.0
    g = _make_integrand(x, t, q, ic)
    # Give the light-cone edges their own subintervals with extra depth:
    # the kernel is entire in delta, but its z-derivatives grow near the
    # edges, so isolating them keeps the adaptive recursion shallow in
    # the bulk.
    width = b - a
    edge = min(0.125 * width, 0.25)
    pieces = []
    if a == x - t and b == x + t and edge > 0.0 and width > 4.0 * edge:
        pieces = [(a, a + edge), (a + edge, b - edge), (b - edge, b)]
    else:
        pieces = [(a, b)]
    per_piece = QuadratureSpec(
        method=quad.method,
        abs_tol=quad.abs_tol / len(pieces),
        rel_tol=quad.rel_tol,
        max_subdivisions=quad.max_subdivisions,
    )
    total = 0.0
    for lo_p, hi_p in pieces:
        value, _ = integrate(g, lo_p, hi_p, per_piece)
        total += value
    return 0.5 * total


def solve_grid(
    xs: Sequence[float],
    ts: Sequence[float],
    params: ReducedParams,
    ic: InitialCondition,
    quad: QuadratureSpec = QuadratureSpec(),
) -> Field2D:
    """Closed-form field on the tensor grid xs x ts.

    Every point is independent; evaluation order is row-major and fully
    deterministic.  Accuracy failures are re-raised annotated with the
    offending grid coordinates.
    """
    xs = np.asarray(xs, dtype=float)
    ts = np.asarray(ts, dtype=float)
    if xs.ndim != 1 or ts.ndim != 1:
        raise GridError("xs and ts must be one-dimensional")
    if np.any(np.diff(xs) <= 0.0) or np.any(np.diff(ts) < 0.0):
        raise GridError("grids must be sorted (xs strictly, ts non-decreasing)")
    if ts.size and ts[0] < 0.0:
        raise DomainError("ts must be nonnegative")
    values = np.zeros((ts.size, xs.size))
    for i, t in enumerate(ts):
        if t == 0.0:
            continue
        for j, x in enumerate(xs):
            try:
                values[i, j] = solve_point(float(x), float(t), params, ic, quad)
            except AccuracyError as exc:
                raise AccuracyError(
                    f"quadrature failure at (x={x:g}, t={t:g}): {exc}",
                    value=exc.value,
                    est_error=exc.est_error,
                ) from exc
    return Field2D(
        xs=xs, ts=ts, values=values, q_dimless=params.q_dimless, provenance="closed-form"
    )
