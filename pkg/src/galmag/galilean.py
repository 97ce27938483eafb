"""Vector algebra of the Galilean 3-space.

The first coordinate is measured along the absolute direction; the other
two span the Euclidean yz-plane.  A vector is *non-isotropic* when its
first component is nonzero and *isotropic* otherwise, and the scalar
product, norm and cross product all branch on that distinction.

Branch selection uses exact ``== 0`` comparisons on the stored doubles,
never an epsilon: the case split of the geometry is exact, and snapping
near-zero components would silently move the case boundaries of the
trajectory classification built on top of this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "GVector3",
    "IsotropyClass",
    "ZERO",
    "classify",
    "is_isotropic",
    "scalar_product",
    "norm",
    "cross",
]


class IsotropyClass(Enum):
    NON_ISOTROPIC = "non-isotropic"
    ISOTROPIC = "isotropic"


@dataclass(frozen=True)
class GVector3:
    """A vector (x1, x2, x3); isotropic iff x1 == 0."""

    x1: float
    x2: float
    x3: float

    def __add__(self, other: "GVector3") -> "GVector3":
        return GVector3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "GVector3") -> "GVector3":
        return GVector3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __mul__(self, a: float) -> "GVector3":
        return GVector3(a * self.x1, a * self.x2, a * self.x3)

    __rmul__ = __mul__

    def __neg__(self) -> "GVector3":
        return GVector3(-self.x1, -self.x2, -self.x3)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)


ZERO = GVector3(0.0, 0.0, 0.0)


def classify(x: GVector3) -> IsotropyClass:
    """Isotropy class of ``x``; the zero vector counts as isotropic."""
    if x.x1 != 0.0:
        return IsotropyClass.NON_ISOTROPIC
    return IsotropyClass.ISOTROPIC


def is_isotropic(x: GVector3) -> bool:
    return x.x1 == 0.0


def scalar_product(x: GVector3, y: GVector3) -> float:
    """Galilean scalar product: x1*y1 unless both arguments are isotropic."""
    if x.x1 != 0.0 or y.x1 != 0.0:
        return x.x1 * y.x1
    return x.x2 * y.x2 + x.x3 * y.x3


def norm(x: GVector3) -> float:
    """|x1| for non-isotropic vectors, the Euclidean yz-norm otherwise."""
    if x.x1 != 0.0:
        return abs(x.x1)
    return math.hypot(x.x2, x.x3)


def cross(x: GVector3, y: GVector3) -> GVector3:
    """Galilean cross product.

    When either argument is non-isotropic the result is the isotropic
    vector (0, -(x1*y3 - x3*y1), x1*y2 - x2*y1); when both are isotropic
    the result lies on the absolute axis, (x2*y3 - x3*y2, 0, 0).
    """
    if x.x1 != 0.0 or y.x1 != 0.0:
        return GVector3(
            0.0,
            -(x.x1 * y.x3 - x.x3 * y.x1),
            x.x1 * y.x2 - x.x2 * y.x1,
        )
    return GVector3(x.x2 * y.x3 - x.x3 * y.x2, 0.0, 0.0)
