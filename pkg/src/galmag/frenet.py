"""Curvature, torsion and the Frenet trihedron of admissible curves.

Works on any object exposing ``eval(s, order) -> GVector3`` for orders
0..3 with an arc-length parametrization gamma(s) = (s, y(s), z(s)); the
closed-form solution curves provide this analytically.  The frame is

    T = (1, y', z'),  N = (0, y'', z'')/kappa,  B = (0, -z'', y'')/kappa

with kappa = sqrt(y''**2 + z''**2) and tau = (y''*z''' - z''*y''')/kappa**2,
and it satisfies T' = kappa*N, N' = tau*B, B' = -tau*N.  The frame is
undefined where kappa = 0; all operations raise ZeroCurvature there
instead of returning NaNs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from galmag.errors import ZeroCurvature
from galmag.galilean import GVector3, norm

__all__ = ["FrenetFrame", "curvature", "torsion", "frenet_frame", "frenet_residual"]


@dataclass(frozen=True)
class FrenetFrame:
    """Frame vectors and scalar invariants at a fixed parameter value."""

    T: GVector3
    N: GVector3
    B: GVector3
    kappa: float
    tau: float


def curvature(curve, s: float) -> float:
    """kappa(s) = sqrt(y''(s)**2 + z''(s)**2)."""
    acc = curve.eval(s, 2)
    return math.hypot(acc.x2, acc.x3)


def torsion(curve, s: float) -> float:
    """tau(s) = det(gamma', gamma'', gamma''') / kappa(s)**2.

    The determinant reduces to y''*z''' - z''*y''' because the second and
    third derivatives are isotropic.  Raises ZeroCurvature where kappa = 0.
    """
    acc = curve.eval(s, 2)
    kappa = math.hypot(acc.x2, acc.x3)
    if kappa == 0.0:
        raise ZeroCurvature(f"torsion undefined at s = {s}: curvature is zero")
    jerk = curve.eval(s, 3)
    return (acc.x2 * jerk.x3 - acc.x3 * jerk.x2) / (kappa * kappa)


def frenet_frame(curve, s: float) -> FrenetFrame:
    """Full trihedron with curvature and torsion; raises ZeroCurvature."""
    acc = curve.eval(s, 2)
    kappa = math.hypot(acc.x2, acc.x3)
    if kappa == 0.0:
        raise ZeroCurvature(f"Frenet frame undefined at s = {s}: curvature is zero")
    vel = curve.eval(s, 1)
    jerk = curve.eval(s, 3)
    t_vec = GVector3(1.0, vel.x2, vel.x3)
    n_vec = GVector3(0.0, acc.x2 / kappa, acc.x3 / kappa)
    b_vec = GVector3(0.0, -acc.x3 / kappa, acc.x2 / kappa)
    tau = (acc.x2 * jerk.x3 - acc.x3 * jerk.x2) / (kappa * kappa)
    return FrenetFrame(T=t_vec, N=n_vec, B=b_vec, kappa=kappa, tau=tau)


def frenet_residual(curve, s: float, h: float = 1e-5) -> tuple[float, float, float]:
    """Finite-difference residuals of the three frame equations at s.

    Frame derivatives are estimated with central differences of step h,
    independently of the analytic derivatives used to build the frame, so
    this doubles as a self-check of the frame formulas.  Returns the
    Galilean norms of T' - kappa*N, N' - tau*B and B' + tau*N; each is
    O(h**2) for smooth curves.  Requires kappa != 0 at s - h, s, s + h.
    """
    if h <= 0.0:
        raise ValueError(f"step h must be positive, got {h}")
    lo = frenet_frame(curve, s - h)
    mid = frenet_frame(curve, s)
    hi = frenet_frame(curve, s + h)
    inv2h = 1.0 / (2.0 * h)
    r1 = norm((hi.T - lo.T) * inv2h - mid.kappa * mid.N)
    r2 = norm((hi.N - lo.N) * inv2h - mid.tau * mid.B)
    r3 = norm((hi.B - lo.B) * inv2h + mid.tau * mid.N)
    return (r1, r2, r3)
