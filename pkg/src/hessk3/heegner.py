"""Four special divisors on the period domain, three ways each.

Every divisor has a half-space description (a linear or determinant
condition on tau), a chart description (one coordinate condition on z),
and a lattice description (orthogonality to a fixed primitive vector):

    node     2 det tau = -1      z2 = 1        (e1 - e2)-perpendicular
    eckardt  tau12 = -tau21      z6 = 2 z5     e5-perpendicular
    ns       tau12 = tau21       z6 = 0        (e5 + 2 e6)-perpendicular
    km       tau - B3/2 symm     2 z6 = 1      (3 e2 + e5 + 2 e6)-perp

perp_equivalence checks the three views agree on a given point, exactly.
For each perpendicular vector the orthogonal complement in the lattice is
pinned down by a frozen basis and Gram matrix, and complement_gram_verify
certifies the basis spans the full kernel (index one via determinants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domain import Point, h2_contains, psi
from .errors import require
from .lattice import GRAM, det_int, orthogonal_complement, qpair
from .tower import C_OMEGA, C_OMEGA2, C_ONE, C_ZERO, Cyclo12, Mat2C

__all__ = [
    "HeegnerFlags",
    "B_SHIFTS",
    "heegner_membership",
    "PERP_VECTORS",
    "chart_flags",
    "perp_flags",
    "perp_equivalence",
    "COMPLEMENT_CASES",
    "complement_gram_verify",
    "orbit_relation_check",
]


@dataclass(frozen=True)
class HeegnerFlags:
    node: bool
    eckardt: bool
    ns: bool
    km: bool


_HALF = Fraction(1, 2)

# Half-shift numerators: tau + B/2 stays in the group's orbit lattice.
B_SHIFTS: tuple[Mat2C, ...] = (
    ((C_ONE, C_ZERO), (C_ZERO, C_ZERO)),
    ((C_ZERO, C_ZERO), (C_ZERO, C_ONE)),
    ((C_ZERO, C_OMEGA), (C_OMEGA2, C_ZERO)),
    ((C_ZERO, C_OMEGA2), (C_OMEGA, C_ZERO)),
)


def heegner_membership(tau: Mat2C) -> HeegnerFlags:
    if not h2_contains(tau):
        raise ValueError("point is not in the half-space")
    det = tau[0][0] * tau[1][1] - tau[0][1] * tau[1][0]
    node = (det * 2 + C_ONE).is_zero()
    eckardt = (tau[0][1] + tau[1][0]).is_zero()
    ns = (tau[0][1] - tau[1][0]).is_zero()
    shifted = tau[0][1] - C_OMEGA * _HALF
    km = (shifted - (tau[1][0] - C_OMEGA2 * _HALF)).is_zero()
    return HeegnerFlags(node=node, eckardt=eckardt, ns=ns, km=km)


PERP_VECTORS = {
    "node": (1, -1, 0, 0, 0, 0),
    "eckardt": (0, 0, 0, 0, 1, 0),
    "ns": (0, 0, 0, 0, 1, 2),
    "km": (0, 3, 0, 0, 1, 2),
}


def chart_flags(z: Point) -> HeegnerFlags:
    require(z[0] == C_ONE, "point is not chart normalized")
    one = C_ONE
    return HeegnerFlags(
        node=(z[1] - one).is_zero(),
        eckardt=(z[5] - z[4] * 2).is_zero(),
        ns=z[5].is_zero(),
        km=(z[5] * 2 - one).is_zero(),
    )


def _pair_with_int_vector(z: Point, v) -> Cyclo12:
    out = C_ZERO
    for i in range(6):
        for j in range(6):
            if GRAM[i][j] and v[j]:
                out = out + z[i] * (GRAM[i][j] * v[j])
    return out


def perp_flags(z: Point) -> HeegnerFlags:
    vals = {
        name: _pair_with_int_vector(z, v).is_zero() for name, v in PERP_VECTORS.items()
    }
    return HeegnerFlags(
        node=vals["node"], eckardt=vals["eckardt"], ns=vals["ns"], km=vals["km"]
    )


def perp_equivalence(z: Point) -> HeegnerFlags:
    """All three descriptions of each divisor, checked to agree at z."""
    via_chart = chart_flags(z)
    via_perp = perp_flags(z)
    via_tau = heegner_membership(psi(z))
    require(via_chart == via_perp, "chart and perpendicularity disagree")
    require(via_chart == via_tau, "chart and half-space disagree")
    return via_chart


# Frozen complement data: primitive vector, basis rows, Gram matrix.
COMPLEMENT_CASES = {
    "node": (
        (1, -1, 0, 0, 0, 0),
        (
            (1, 1, 1, 0, 0, 0),
            (3, 3, 0, -3, 1, 2),
            (1, 1, 1, -1, 0, 0),
            (-1, -1, 0, 1, 0, -1),
            (-1, -1, 0, 1, -1, -1),
        ),
        (
            (2, 0, 0, 0, 0),
            (0, 6, 0, 0, 0),
            (0, 0, -2, 0, 0),
            (0, 0, 0, -2, 0),
            (0, 0, 0, 0, -2),
        ),
    ),
    "eckardt": (
        (0, 0, 0, 0, 1, 0),
        (
            (1, 0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 2),
        ),
        (
            (0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (0, 0, 0, 2, 0),
            (0, 0, 2, 0, 0),
            (0, 0, 0, 0, -12),
        ),
    ),
    "ns": (
        (0, 0, 0, 0, 1, 2),
        (
            (1, 0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0),
        ),
        (
            (0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (0, 0, 0, 2, 0),
            (0, 0, 2, 0, 0),
            (0, 0, 0, 0, -4),
        ),
    ),
    "km": (
        (0, 3, 0, 0, 1, 2),
        (
            (0, 1, 0, 0, 0, 0),
            (2, 1, 0, 0, 1, 1),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 1, 0, 0, 1, 0),
        ),
        (
            (0, 2, 0, 0, 0),
            (2, 0, 0, 0, 0),
            (0, 0, 0, 2, 0),
            (0, 0, 2, 0, 0),
            (0, 0, 0, 0, -4),
        ),
    ),
}


def complement_gram_verify(name: str):
    """Check the frozen basis is orthogonal to v, has the frozen Gram, and
    spans the whole complement (equal determinants with the computed
    kernel basis)."""
    if name not in COMPLEMENT_CASES:
        raise ValueError(f"unknown divisor {name!r}")
    v, basis, gram = COMPLEMENT_CASES[name]
    for row in basis:
        require(qpair(row, v) == 0, "frozen basis vector is not perpendicular")
    for i in range(5):
        for j in range(5):
            require(qpair(basis[i], basis[j]) == gram[i][j], "frozen Gram mismatch")
    computed_basis, computed_gram = orthogonal_complement(v)
    require(
        abs(det_int(gram)) == abs(det_int(computed_gram)),
        "frozen basis does not span the full complement",
    )
    return gram


def orbit_relation_check(tau: Mat2C) -> bool:
    """Half-shift relations between the symmetric locus and the km locus.

    For symmetric tau: adding half of B1 or B2 stays symmetric, adding half
    of B3 lands on the km locus, and the transpose of the B4 shift does too.
    """
    flags = heegner_membership(tau)
    require(flags.ns, "relation check needs a symmetric point")

    def shift(b) -> Mat2C:
        return tuple(
            tuple(tau[i][j] + b[i][j] * _HALF for j in range(2)) for i in range(2)
        )

    s1 = heegner_membership(shift(B_SHIFTS[0]))
    s2 = heegner_membership(shift(B_SHIFTS[1]))
    s3 = heegner_membership(shift(B_SHIFTS[2]))
    s4m = shift(B_SHIFTS[3])
    s4t = ((s4m[0][0], s4m[1][0]), (s4m[0][1], s4m[1][1]))
    s4 = heegner_membership(s4t)
    require(s1.ns and s2.ns, "real half-shifts left the symmetric locus")
    require(s3.km, "the third half-shift missed the km locus")
    require(s4.km, "the transposed fourth half-shift missed the km locus")
    return True
