"""The type IV domain attached to M and its Hermitian matrix coordinate.

Points are projective 6-vectors over Q(sqrt3, i) on the quadric
t(z) Q z = 0 with t(z) Q conj(z) > 0, stored with the first coordinate
normalized to 1.  The affine chart takes (z3, z4, z5, z6) and recovers
z2 from the quadric.  The map psi identifies the plus component with the
rank-two Hermitian upper half-space H2 via

    psi(z) = ((z3, z5 + w z6), (z5 + w^2 z6, z4)),      z2 = -2 det psi(z).

All tests are exact; nothing here touches floats.
"""

from __future__ import annotations

from .errors import require
from .lattice import GRAM, N
from .tower import (
    C_OMEGA,
    C_OMEGA2,
    C_ZERO,
    C_ONE,
    SQRT3_I,
    Cyclo12,
    Mat2C,
    m2_det,
    sign_sqrt3,
)

__all__ = [
    "Point",
    "dm_from_chart",
    "Q0",
    "dm_membership",
    "act",
    "psi",
    "psi_inv",
    "h2_contains",
    "quadric_value",
    "positivity_value",
]

Point = tuple


def _c(v) -> Cyclo12:
    if isinstance(v, Cyclo12):
        return v
    return Cyclo12(v)


def quadric_value(z: Point) -> Cyclo12:
    """t(z) Q z over the field."""
    total = C_ZERO
    for i in range(N):
        row = GRAM[i]
        for j in range(N):
            if row[j]:
                total = total + z[i] * z[j] * row[j]
    return total


def positivity_value(z: Point) -> Cyclo12:
    """t(z) Q conj(z); real whenever it matters, checked by the caller."""
    total = C_ZERO
    for i in range(N):
        row = GRAM[i]
        for j in range(N):
            if row[j]:
                total = total + z[i] * z[j].conj() * row[j]
    return total


def dm_from_chart(z3, z4, z5, z6) -> Point:
    """Lift chart coordinates to the quadric; z1 = 1, z2 solves t(z) Q z = 0."""
    z3, z4, z5, z6 = _c(z3), _c(z4), _c(z5), _c(z6)
    z2 = (z3 * z4 - z5 * z5 + z5 * z6 - z6 * z6) * (-2)
    z = (C_ONE, z2, z3, z4, z5, z6)
    require(quadric_value(z).is_zero(), "chart lift missed the quadric")
    return z


Q0 = dm_from_chart(Cyclo12(0, 0, 2, 0), Cyclo12(0, 0, 2, 0), 0, 0)


def dm_membership(z: Point) -> str:
    """Component of the domain: "plus", "minus", or "none".

    Membership needs t(z) Q z = 0 and t(z) Q conj(z) > 0; the component is
    the sign of Im z3, which is nonzero on the domain since the positivity
    forces Im z3 * Im z4 > 0 in the chart.
    """
    if not quadric_value(z).is_zero():
        return "none"
    pos = positivity_value(z)
    require(pos.is_real(), "Hermitian norm of a point is not real")
    if sign_sqrt3(pos.a, pos.b) <= 0:
        return "none"
    im3 = z[2].imag()
    s = sign_sqrt3(im3.a, im3.b)
    require(s != 0, "interior point with real z3")
    return "plus" if s > 0 else "minus"


def act(g, z: Point) -> Point:
    """Projective action of an integer matrix, renormalized to z1 = 1."""
    w = [C_ZERO] * N
    for i in range(N):
        acc = C_ZERO
        for j in range(N):
            if g[i][j]:
                acc = acc + z[j] * g[i][j]
        w[i] = acc
    if w[0].is_zero():
        raise ValueError("chart escape")
    inv = w[0].inverse()
    return tuple(x * inv for x in w)


def psi(z: Point) -> Mat2C:
    """Matrix coordinate ((z3, z5 + w z6), (z5 + w^2 z6, z4)) of a plus point."""
    if dm_membership(z) != "plus":
        raise ValueError("psi needs a point of the plus component")
    return ((z[2], z[4] + C_OMEGA * z[5]), (z[4] + C_OMEGA2 * z[5], z[3]))


def psi_inv(tau: Mat2C) -> Point:
    """Inverse of psi on H2."""
    if not h2_contains(tau):
        raise ValueError("matrix is not in the upper half-space")
    z6 = (tau[0][1] - tau[1][0]) / SQRT3_I
    z5 = tau[0][1] - C_OMEGA * z6
    return dm_from_chart(tau[0][0], tau[1][1], z5, z6)


def h2_contains(tau: Mat2C) -> bool:
    """Exact test for the rank-two upper half-space.

    Y = (tau - tau*) / 2i must be positive definite: Y11 > 0 and det Y > 0.
    Both are real elements of Q(sqrt3), so the signs are decidable.
    """
    im11 = tau[0][0].imag()
    im22 = tau[1][1].imag()
    if sign_sqrt3(im11.a, im11.b) <= 0:
        return False
    # det Y with Y = Im-part matrix: Y12 = (tau12 - conj(tau21)) / 2i
    two_i = Cyclo12(0, 0, 2, 0)
    y = tuple(
        tuple((tau[i][j] - tau[j][i].conj()) / two_i for j in range(2)) for i in range(2)
    )
    d = y[0][0] * y[1][1] - y[0][1] * y[1][0]
    require(d.is_real(), "det of the imaginary part is not real")
    if sign_sqrt3(d.a, d.b) <= 0:
        return False
    require(sign_sqrt3(im22.a, im22.b) > 0, "Y11 > 0, det Y > 0 but Y22 <= 0")
    return True
