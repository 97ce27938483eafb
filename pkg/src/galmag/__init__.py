"""Galilean 3-space trajectory toolkit.

Exact vector algebra of the Galilean 3-space, Frenet data of admissible
curves, closed-form solutions of the magnetic and N-magnetic trajectory
equations under constant Killing fields, and an independent fixed-step
RK4 oracle to verify the closed forms against the raw ODE systems.
"""

from galmag.errors import (
    DomainMismatch,
    GalmagError,
    IncompatibleIC,
    NonFiniteState,
    WrongCase,
    ZeroCurvature,
)
from galmag.galilean import (
    ZERO,
    GVector3,
    IsotropyClass,
    classify,
    cross,
    is_isotropic,
    norm,
    scalar_product,
)
from galmag.frenet import (
    FrenetFrame,
    curvature,
    frenet_frame,
    frenet_residual,
    torsion,
)
from galmag.magnetic import (
    ClosedFormCurve,
    CurveCase,
    HelixData,
    KillingField,
    MagneticIC,
    NMagneticIC,
    QuadSinusoid,
    b_magnetic_constraint,
    b_magnetic_rhs,
    helix_decomposition,
    lorentz_force,
    lorentz_residual,
    magnetic_rhs,
    n_magnetic_constraint,
    n_magnetic_residual,
    n_magnetic_rhs,
    solve_magnetic,
    solve_n_magnetic,
)
from galmag.oracle import IntegratorConfig, SampledCurve, integrate, max_deviation

__version__ = "0.1.0"

__all__ = [
    "GalmagError",
    "ZeroCurvature",
    "WrongCase",
    "IncompatibleIC",
    "NonFiniteState",
    "DomainMismatch",
    "GVector3",
    "IsotropyClass",
    "ZERO",
    "classify",
    "is_isotropic",
    "scalar_product",
    "norm",
    "cross",
    "FrenetFrame",
    "curvature",
    "torsion",
    "frenet_frame",
    "frenet_residual",
    "KillingField",
    "MagneticIC",
    "NMagneticIC",
    "CurveCase",
    "QuadSinusoid",
    "ClosedFormCurve",
    "HelixData",
    "lorentz_force",
    "magnetic_rhs",
    "n_magnetic_rhs",
    "n_magnetic_constraint",
    "b_magnetic_rhs",
    "b_magnetic_constraint",
    "solve_magnetic",
    "solve_n_magnetic",
    "helix_decomposition",
    "lorentz_residual",
    "n_magnetic_residual",
    "IntegratorConfig",
    "SampledCurve",
    "integrate",
    "max_deviation",
]
