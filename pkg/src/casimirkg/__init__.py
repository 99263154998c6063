"""casimirkg: Klein-Gordon thermal-wave solver with a plate Casimir potential.

The library is organised in four layers plus a CLI:

* :mod:`casimirkg.specfun` -- self-contained J0, I0 and erf;
* :mod:`casimirkg.physics` -- SI-level plate force/potential, the reduced
  q parameter, relaxation time and the q sign-change locator;
* :mod:`casimirkg.solver` -- closed-form d'Alembert/Riemann-kernel
  solutions of the dimensionless reduced equation;
* :mod:`casimirkg.fdm` -- independent leapfrog verification solver with
  energy and comparison diagnostics;
* :mod:`casimirkg.cli` -- the ``casimirkg`` command.
"""

__version__ = "0.1.0"

from .errors import (
    AccuracyError,
    BracketError,
    CasimirKGError,
    ConfigurationError,
    DomainError,
    GridError,
    UnsupportedModelError,
    VerificationFailure,
)
from .fdm import EnergySeries, FdmGrid, FieldNorms, compare_fields, discrete_energy, fdm_solve
from .physics import (
    CasimirModel,
    PhysicalConstants,
    ReducedParams,
    casimir_force,
    casimir_potential,
    find_sign_change,
    pulse_regime_ok,
    q_at_separation,
    q_parameter,
    relaxation_time,
    to_dimensionless,
)
from .solver import (
    Field2D,
    InitialCondition,
    QuadratureSpec,
    integrate,
    kernel,
    solve_grid,
    solve_point,
)
from .specfun import EvalResult, bessel_i0, bessel_i0_scaled, bessel_j0, erf

__all__ = [
    "__version__",
    "AccuracyError",
    "BracketError",
    "CasimirKGError",
    "CasimirModel",
    "ConfigurationError",
    "DomainError",
    "EnergySeries",
    "EvalResult",
    "FdmGrid",
    "Field2D",
    "FieldNorms",
    "GridError",
    "InitialCondition",
    "PhysicalConstants",
    "QuadratureSpec",
    "ReducedParams",
    "UnsupportedModelError",
    "VerificationFailure",
    "bessel_i0",
    "bessel_i0_scaled",
    "bessel_j0",
    "casimir_force",
    "casimir_potential",
    "compare_fields",
    "discrete_energy",
    "erf",
    "fdm_solve",
    "find_sign_change",
    "integrate",
    "kernel",
    "pulse_regime_ok",
    "q_at_separation",
    "q_parameter",
    "relaxation_time",
    "solve_grid",
    "solve_point",
    "to_dimensionless",
]
