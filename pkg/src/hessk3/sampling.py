"""Seeded exact samplers for fuzz checks.

Everything is driven by random.Random(seed) so suites are reproducible;
all outputs are exact (Fractions, Eisenstein integers, Cyclo12 words).
Chart points are built with explicit positive imaginary slack, so domain
membership holds by construction rather than by rejection.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .domain import Point, dm_from_chart, psi
from .eisenstein import Eisenstein
from .hermitian import m2e, m2e_mul
from .lattice import mat_id, mat_mul, mat_pow, U1, W0
from .tower import Cyclo12

__all__ = [
    "make_rng",
    "sample_fraction",
    "sample_eisenstein",
    "sample_g2_matrix",
    "sample_gl2_matrix",
    "sample_hgamma1_word",
    "sample_hgamma0_word",
    "sample_so0_word",
    "sample_orth_so0",
    "sample_orth_plus",
    "sample_chart_point",
    "sample_h2_tau",
    "sample_node_point",
    "sample_eckardt_point",
    "sample_ns_point",
    "sample_km_point",
    "sample_lambda",
]


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def sample_fraction(rng, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def sample_eisenstein(rng, bound: int = 3) -> Eisenstein:
    return Eisenstein(rng.randint(-bound, bound), rng.randint(-bound, bound))


def _elementary(rng, even: bool):
    e = sample_eisenstein(rng, 2)
    if even:
        e = e * 2
    if rng.randrange(2):
        return m2e(((1, e), (0, 1)))
    return m2e(((1, 0), (e, 1)))


def sample_g2_matrix(rng, steps: int = 5):
    """Unit-determinant matrix congruent to the identity mod 2."""
    out = m2e(((1, 0), (0, 1)))
    for _ in range(steps):
        kind = rng.randrange(4)
        if kind < 2:
            out = m2e_mul(out, _elementary(rng, even=True))
        elif kind == 2:
            out = m2e_mul(out, m2e(((1, 0), (0, -1))))
        else:
            out = m2e_mul(out, m2e(((-1, 0), (0, -1))))
    return out


def sample_gl2_matrix(rng, steps: int = 5):
    """Unit-determinant matrix, no congruence constraint."""
    from .eisenstein import UNITS

    out = m2e(((1, 0), (0, 1)))
    for _ in range(steps):
        if rng.randrange(3):
            out = m2e_mul(out, _elementary(rng, even=False))
        else:
            u = UNITS[rng.randrange(6)]
            out = m2e_mul(out, m2e(((u, 0), (0, 1))))
    return out


def _herm_params(rng, bound: int = 2):
    return tuple(rng.randint(-bound, bound) for _ in range(4))


def sample_hgamma1_word(rng, length: int):
    word = []
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            word.append(("gA", sample_g2_matrix(rng, 3)))
        elif kind == 1:
            word.append(("gBu", _herm_params(rng)))
        else:
            word.append(("gBl", _herm_params(rng)))
    return word


def sample_hgamma0_word(rng, length: int):
    word = []
    for _ in range(length):
        kind = rng.randrange(4)
        if kind == 0:
            word.append(("gA", sample_g2_matrix(rng, 3)))
        elif kind == 1:
            word.append(("gA", sample_gl2_matrix(rng, 3)))
        elif kind == 2:
            word.append(("gBu", _herm_params(rng)))
        else:
            word.append(("gBl", _herm_params(rng)))
    return word


def sample_so0_word(rng, length: int):
    from .correspond import ORTH_TOKEN_MATS

    names = sorted(ORTH_TOKEN_MATS)
    word = []
    for _ in range(length):
        p = rng.choice((-2, -1, 1, 2))
        word.append((rng.choice(names), p))
    return word


def sample_orth_so0(rng, length: int):
    from .correspond import orth_word_matrix

    return orth_word_matrix(sample_so0_word(rng, length))


def sample_orth_plus(rng, length: int):
    """Element of O+ in any of the four (determinant, parity) cosets."""
    out = mat_id(6)
    if rng.randrange(2):
        out = mat_mul(out, U1)
    if rng.randrange(2):
        out = mat_mul(out, W0)
    return mat_mul(out, sample_orth_so0(rng, length))


def _ci(re: Fraction, im: Fraction) -> Cyclo12:
    return Cyclo12(re, 0, im, 0)


def sample_chart_point(rng) -> Point:
    """Generic point of the plus component in the chart."""
    y3 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    y5 = sample_fraction(rng, 2, 3)
    y6 = sample_fraction(rng, 2, 3)
    slack = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    y4 = (y5 * y5 - y5 * y6 + y6 * y6) / y3 + slack
    z3 = Cyclo12(sample_fraction(rng), sample_fraction(rng, 2, 3), y3, 0)
    z4 = Cyclo12(sample_fraction(rng), sample_fraction(rng, 2, 3), y4, 0)
    z5 = Cyclo12(sample_fraction(rng, 3, 3), 0, y5, 0)
    z6 = Cyclo12(sample_fraction(rng, 3, 3), 0, y6, 0)
    return dm_from_chart(z3, z4, z5, z6)


def sample_h2_tau(rng):
    return psi(sample_chart_point(rng))


def sample_node_point(rng) -> Point:
    """On the node divisor: z2 = 1 by solving for z4."""
    while True:
        z5 = Fraction(rng.randint(-1, 1), rng.randint(3, 5))
        z6 = Fraction(rng.randint(-1, 1), rng.randint(3, 5))
        q56 = z5 * z5 - z5 * z6 + z6 * z6
        if q56 < Fraction(1, 2):
            break
    x3 = sample_fraction(rng)
    y3 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    z3 = _ci(x3, y3)
    c = q56 - Fraction(1, 2)
    z4 = Cyclo12(c) / z3
    return dm_from_chart(z3, z4, _ci(z5, Fraction(0)), _ci(z6, Fraction(0)))


def _locus_point(rng, z5: Cyclo12, z6: Cyclo12, qim: Fraction) -> Point:
    y3 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    slack = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    y4 = qim / y3 + slack
    z3 = _ci(sample_fraction(rng), y3)
    z4 = _ci(sample_fraction(rng), y4)
    return dm_from_chart(z3, z4, z5, z6)


def sample_eckardt_point(rng) -> Point:
    x5 = sample_fraction(rng, 3, 3)
    y5 = sample_fraction(rng, 2, 3)
    z5 = _ci(x5, y5)
    z6 = z5 * 2
    return _locus_point(rng, z5, z6, 3 * y5 * y5)


def sample_ns_point(rng) -> Point:
    x5 = sample_fraction(rng, 3, 3)
    y5 = sample_fraction(rng, 2, 3)
    z5 = _ci(x5, y5)
    return _locus_point(rng, z5, Cyclo12(0), y5 * y5)


def sample_km_point(rng) -> Point:
    x5 = sample_fraction(rng, 3, 3)
    y5 = sample_fraction(rng, 2, 3)
    z5 = _ci(x5, y5)
    z6 = Cyclo12(Fraction(1, 2))
    return _locus_point(rng, z5, z6, y5 * y5)


def sample_lambda(rng, distinct: bool = True):
    """Five nonzero pentahedral coefficients, pairwise distinct by default."""
    while True:
        lam = tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)
        )
        if any(x == 0 for x in lam):
            continue
        if distinct and len(set(lam)) != 5:
            continue
        return lam