"""The even lattice M = U + U(2) + A2(2) of signature (2, 4).

Fixed Gram matrix Q (determinant 48), its isometries as integer 6x6
matrices, the two-component orientation, the discriminant group M*/M of
order 48 with its torsion quadratic form, the congruence subgroups cut out
by that form, the translation isometries, and orthogonal complements of
primitive vectors.

Matrices act on column vectors; composition is matrix product.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import require

__all__ = [
    "GRAM",
    "QPRIME",
    "mat_id",
    "mat_mul",
    "mat_vec",
    "mat_transpose",
    "mat_neg",
    "mat_pow",
    "det_int",
    "mat_inverse_int",
    "is_orthogonal",
    "qpair",
    "orientation",
    "block_parity",
    "translation_h",
    "residual_m",
    "is_in_k3",
    "is_in_enr",
    "disc_reduce",
    "disc_add",
    "disc_neg",
    "disc_scale",
    "disc_order",
    "disc_q",
    "disc_b",
    "disc_group",
    "disc_act",
    "disc_action",
    "DISC_GENS",
    "V_CLASSES",
    "two_torsion",
    "to_s5",
    "enumerate_disc_orthogonal",
    "orthogonal_complement",
    "G0",
    "G1",
    "G2",
    "U0",
    "U1",
    "U2",
    "I42",
    "MI42",
    "MINUS_I6",
    "U0G1U0",
    "U0U1",
    "W0",
    "W0_INV",
    "G0I42",
    "H_GENS",
    "HP_GENS",
]

N = 6

GRAM = (
    (0, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 0, 2, 0, 0),
    (0, 0, 2, 0, 0, 0),
    (0, 0, 0, 0, -4, 2),
    (0, 0, 0, 0, 2, -4),
)

# Tail form on coordinates 3..6, used by the translation isometries.
QPRIME = (
    (0, 2, 0, 0),
    (2, 0, 0, 0),
    (0, 0, -4, 2),
    (0, 0, 2, -4),
)


# -- integer matrix helpers ----------------------------------------------


def mat_id(n: int = N):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a)


def mat_vec(a, v):
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in a)


def mat_transpose(a):
    return tuple(zip(*a))


def mat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def det_int(m) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_inverse_int(m):
    """Exact inverse of an integer matrix whose inverse is integral."""
    n = len(m)
    a = [
        [Fraction(x) for x in r] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, r in enumerate(m)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [r[n:] for r in a]
    require(all(x.denominator == 1 for r in inv for x in r), "inverse is not integral")
    return tuple(tuple(int(x) for x in r) for r in inv)


def mat_pow(m, k: int):
    if k < 0:
        return mat_pow(mat_inverse_int(m), -k)
    out = mat_id(len(m))
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def qpair(x, y):
    """The bilinear form t(x) Q y; accepts integer or Fraction vectors."""
    total = 0
    for i in range(N):
        if x[i]:
            row = GRAM[i]
            total += x[i] * sum(row[j] * y[j] for j in range(N) if row[j])
    return total


def is_orthogonal(g) -> bool:
    return mat_mul(mat_transpose(g), mat_mul(GRAM, g)) == GRAM


# -- named isometries ------------------------------------------------------


def _embed_tail(rows4):
    """I2 + (4x4 block on coordinates 3..6)."""
    out = [[0] * 6 for _ in range(6)]
    out[0][0] = out[1][1] = 1
    for i in range(4):
        for j in range(4):
            out[i + 2][j + 2] = rows4[i][j]
    return tuple(tuple(r) for r in out)


def _diag(*entries):
    return tuple(tuple(entries[i] if i == j else 0 for j in range(6)) for i in range(6))


G0 = (
    (0, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
)

G1 = _embed_tail(((1, 0, 0, 0), (1, 1, 2, -1), (1, 0, 1, 0), (0, 0, 0, 1)))
G2 = _embed_tail(((1, 0, 0, 0), (1, 1, -1, 2), (0, 0, 1, 0), (1, 0, 0, 1)))
U0 = _embed_tail(((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
U1 = _embed_tail(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, -1), (0, 0, 0, -1)))
U2 = _embed_tail(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, -1), (0, 0, 1, -1)))
I42 = _diag(1, 1, 1, 1, -1, -1)
MI42 = _diag(-1, -1, -1, -1, 1, 1)
MINUS_I6 = _diag(-1, -1, -1, -1, -1, -1)


def translation_h(m1: int, m2: int, m3: int, m4: int):
    """Unipotent isometry fixing e1 with (m1, m2, m3, m4) in column one.

    Row two carries the tail -t(a) Q' and the corner -t(a) Q' a / 2, which is
    what t(g) Q g = Q forces.  These form a free abelian group of rank four:
    h(a) h(b) = h(a + b).
    """
    a21 = -2 * m1 * m2 + 2 * m3 * m3 - 2 * m3 * m4 + 2 * m4 * m4
    rows = [
        [1, 0, 0, 0, 0, 0],
        [a21, 1, -2 * m2, -2 * m1, 4 * m3 - 2 * m4, -2 * m3 + 4 * m4],
        [m1, 0, 1, 0, 0, 0],
        [m2, 0, 0, 1, 0, 0],
        [m3, 0, 0, 0, 1, 0],
        [m4, 0, 0, 0, 0, 1],
    ]
    return tuple(tuple(r) for r in rows)


def residual_m(u: int, v: int):
    """The commuting family G1^u G2^v; closed form valid for all integers."""
    return _embed_tail(
        (
            (1, 0, 0, 0),
            (u * u - u * v + v * v, 1, 2 * u - v, 2 * v - u),
            (u, 0, 1, 0),
            (v, 0, 0, 1),
        )
    )


H_GENS = (
    translation_h(1, 0, 0, 0),
    translation_h(0, 1, 0, 0),
    translation_h(0, 0, 1, 0),
    translation_h(0, 0, 0, 1),
)
HP_GENS = tuple(mat_mul(G0, mat_mul(h, G0)) for h in H_GENS)

U0G1U0 = mat_mul(U0, mat_mul(G1, U0))
U0U1 = mat_mul(U0, U1)
W0 = mat_mul(G0, mat_mul(U0, I42))
W0_INV = mat_mul(I42, mat_mul(U0, G0))
G0I42 = mat_mul(G0, I42)


# -- orientation ------------------------------------------------------------
#
# The domain cut out by t(z) Q z = 0, t(z) Q conj(z) > 0 has two connected
# components.  We track them through the base point with chart coordinates
# (2i, 2i, 0, 0), i.e. the projective point (1 : 8 : 2i : 2i : 0 : 0); its
# image under g is w = x + i y with integer vectors x, y below.


def orientation(g) -> str:
    if not is_orthogonal(g):
        raise ValueError("orientation of a non-isometry")
    x = tuple(g[k][0] + 8 * g[k][1] for k in range(N))
    y = tuple(2 * (g[k][2] + g[k][3]) for k in range(N))
    if (x[0], y[0]) != (0, 0):
        # sign of Im(w3 / w1) = (y3 x1 - x3 y1) / |w1|^2
        s = y[2] * x[0] - x[2] * y[0]
        require(s != 0, "isometry image landed on the component boundary")
        return "plus" if s > 0 else "minus"
    # The image escapes the affine chart (w1 = 0).  Compare the oriented
    # positive-definite plane span(x, y) against the reference plane via the
    # pairing determinant; positive planes never pair degenerately in
    # signature (2, 4).
    x0 = (1, 8, 0, 0, 0, 0)
    y0 = (0, 0, 2, 2, 0, 0)
    d = (qpair(x, x0) * qpair(y, y0)) - (qpair(x, y0) * qpair(y, x0))
    require(d != 0, "degenerate pairing of positive planes")
    return "plus" if d > 0 else "minus"


def block_parity(g) -> str:
    """Mod-2 shape of the upper-left 2x2 block of an isometry.

    For elements of O(M) that block is congruent to the identity or to the
    swap; anything else contradicts t(g) Q g = Q mod 2.
    """
    if not is_orthogonal(g):
        raise ValueError("block parity of a non-isometry")
    blk = ((g[0][0] & 1, g[0][1] & 1), (g[1][0] & 1, g[1][1] & 1))
    if blk == ((1, 0), (0, 1)):
        return "diagonal"
    if blk == ((0, 1), (1, 0)):
        return "antidiagonal"
    require(False, "upper-left block is neither identity nor swap mod 2")


# -- discriminant group -----------------------------------------------------
#
# M*/M has order 48.  Elements are represented by rational coset vectors
# with denominators dividing (1, 1, 2, 2, 6, 6), reduced into [0, 1)^6.

DiscElt = tuple


def disc_reduce(vec) -> DiscElt:
    return tuple(Fraction(x) % 1 for x in vec)


def disc_add(x: DiscElt, y: DiscElt) -> DiscElt:
    return tuple((a + b) % 1 for a, b in zip(x, y))


def disc_neg(x: DiscElt) -> DiscElt:
    return tuple((-a) % 1 for a in x)


def disc_scale(k: int, x: DiscElt) -> DiscElt:
    return tuple((k * a) % 1 for a in x)


def disc_order(x: DiscElt) -> int:
    for k in range(1, 7):
        if all((k * a) % 1 == 0 for a in x):
            return k
    raise AssertionError("unreachable: element order exceeds exponent 6")


_f = Fraction
D1: DiscElt = (_f(0), _f(0), _f(1, 2), _f(0), _f(0), _f(0))
D2: DiscElt = (_f(0), _f(0), _f(0), _f(1, 2), _f(0), _f(0))
D3: DiscElt = (_f(0), _f(0), _f(0), _f(0), _f(1, 6), _f(1, 3))
D4: DiscElt = (_f(0), _f(0), _f(0), _f(0), _f(1, 3), _f(1, 6))
DISC_GENS = (D1, D2, D3, D4)

_DISC_CACHE: list | None = None


def disc_group() -> list:
    """All 48 elements, sorted; generated by D1, D2, D3, D4."""
    global _DISC_CACHE
    if _DISC_CACHE is None:
        seen = set()
        for a in range(2):
            for b in range(2):
                for c in range(6):
                    for d in range(6):
                        x = disc_add(
                            disc_add(disc_scale(a, D1), disc_scale(b, D2)),
                            disc_add(disc_scale(c, D3), disc_scale(d, D4)),
                        )
                        seen.add(x)
        require(len(seen) == 48, "discriminant group does not have order 48")
        _DISC_CACHE = sorted(seen)
    return _DISC_CACHE


def disc_q(x: DiscElt) -> Fraction:
    """Torsion quadratic form t(x) Q x mod 2, reduced into [0, 2)."""
    return qpair(x, x) % 2


def disc_b(x: DiscElt, y: DiscElt) -> Fraction:
    """Torsion bilinear form t(x) Q y mod 1, reduced into [0, 1)."""
    return qpair(x, y) % 1


def disc_act(g, x: DiscElt) -> DiscElt:
    return tuple(v % 1 for v in mat_vec(g, x))


def disc_action(g) -> tuple:
    """Images of the four generators; the action is checked to preserve q."""
    if not is_orthogonal(g):
        raise ValueError("discriminant action of a non-isometry")
    for x in disc_group():
        require(disc_q(disc_act(g, x)) == disc_q(x), "isometry broke the torsion form")
    return tuple(disc_act(g, d) for d in DISC_GENS)


def two_torsion() -> list:
    return [x for x in disc_group() if disc_order(x) <= 2 and any(x)]


# The five isotropic classes of order two; every isometry permutes them.
V_CLASSES: tuple = (
    D1,
    D2,
    disc_add(disc_add(D1, D2), disc_add(D3, D4)),
    disc_add(disc_add(D1, D2), disc_scale(3, D3)),
    disc_add(disc_add(D1, D2), disc_scale(3, D4)),
)


def to_s5(g) -> tuple:
    """Permutation induced on V_CLASSES: result[i] = j means g(V_i) = V_j."""
    if not is_orthogonal(g):
        raise ValueError("permutation action of a non-isometry")
    images = []
    for v in V_CLASSES:
        w = disc_act(g, v)
        require(w in V_CLASSES, "isotropic two-torsion classes not permuted")
        images.append(V_CLASSES.index(w))
    require(sorted(images) == [0, 1, 2, 3, 4], "induced map is not a permutation")
    return tuple(images)


def is_in_k3(g) -> bool:
    """Kernel of the discriminant action, by column congruences."""
    _check_oplus(g)
    cols = mat_transpose(g)
    if any((cols[2][i] - (1 if i == 2 else 0)) % 2 for i in range(N)):
        return False
    if any((cols[3][i] - (1 if i == 3 else 0)) % 2 for i in range(N)):
        return False
    for combo in (1, 2):
        # columns c5 + 2 c6 and 2 c5 + c6 against e5 + 2 e6 and 2 e5 + e6
        vec = tuple(combo * g[i][4] + (3 - combo) * g[i][5] for i in range(N))
        target = tuple(
            combo * (1 if i == 4 else 0) + (3 - combo) * (1 if i == 5 else 0) for i in range(N)
        )
        if any((a - b) % 6 for a, b in zip(vec, target)):
            return False
    return True


def is_in_enr(g) -> bool:
    """Pointwise stabilizer of the two-torsion: columns 3..6 freeze mod 2."""
    _check_oplus(g)
    for j in range(2, 6):
        for i in range(N):
            if (g[i][j] - (1 if i == j else 0)) % 2:
                return False
    return True


def _check_oplus(g) -> None:
    if not is_orthogonal(g):
        raise ValueError("not an isometry")
    if orientation(g) != "plus":
        raise ValueError("isometry swaps the two components")


# -- brute-force orthogonal group of the discriminant form ------------------


def enumerate_disc_orthogonal() -> list:
    """All automorphisms of (M*/M, q), each as a dict elt -> image.

    Candidates are images of the four generators filtered by order, q value
    and pairwise b values; each surviving tuple is expanded over all 144
    generator words to check well-definedness, then bijectivity and full
    q preservation.
    """
    group = disc_group()
    orders = {x: disc_order(x) for x in group}
    qs = {x: disc_q(x) for x in group}

    def candidates(order, qval):
        return [x for x in group if orders[x] == order and qs[x] == qval]

    c_top = candidates(2, disc_q(D1))
    c_six = candidates(6, disc_q(D3))
    b12 = disc_b(D1, D2)
    b13 = disc_b(D1, D3)
    b23 = disc_b(D2, D3)
    b14 = disc_b(D1, D4)
    b24 = disc_b(D2, D4)
    b34 = disc_b(D3, D4)

    auts = []
    for y1 in c_top:
        for y2 in c_top:
            if disc_b(y1, y2) != b12:
                continue
            for y3 in c_six:
                if disc_b(y1, y3) != b13 or disc_b(y2, y3) != b23:
                    continue
                for y4 in c_six:
                    if (
                        disc_b(y1, y4) != b14
                        or disc_b(y2, y4) != b24
                        or disc_b(y3, y4) != b34
                    ):
                        continue
                    mapping = _expand_map(y1, y2, y3, y4)
                    if mapping is None:
                        continue
                    if len(set(mapping.values())) != 48:
                        continue
                    if any(qs[x] != qs[y] for x, y in mapping.items()):
                        continue
                    auts.append(mapping)
    return auts


def _expand_map(y1, y2, y3, y4):
    mapping = {}
    for a in range(2):
        for b in range(2):
            for c in range(6):
                for d in range(6):
                    src = disc_add(
                        disc_add(disc_scale(a, D1), disc_scale(b, D2)),
                        disc_add(disc_scale(c, D3), disc_scale(d, D4)),
                    )
                    dst = disc_add(
                        disc_add(disc_scale(a, y1), disc_scale(b, y2)),
                        disc_add(disc_scale(c, y3), disc_scale(d, y4)),
                    )
                    if src in mapping:
                        if mapping[src] != dst:
                            return None
                    else:
                        mapping[src] = dst
    return mapping


# -- orthogonal complements --------------------------------------------------


def orthogonal_complement(v):
    """Integer basis of v^perp in M and its Gram matrix.

    v must be nonzero and primitive.  The kernel of the functional
    x -> t(v) Q x is computed by unimodular column operations, so the basis
    spans the full (saturated) complement, of rank five.
    """
    v = tuple(int(x) for x in v)
    if not any(v):
        raise ValueError("complement of the zero vector")
    g = 0
    for x in v:
        g = _gcd(g, x)
    if g != 1:
        raise ValueError("vector is not primitive")
    w = list(mat_vec(GRAM, v))
    cols = [[1 if i == j else 0 for i in range(N)] for j in range(N)]
    while True:
        nz = [j for j in range(N) if w[j] != 0]
        require(nz, "functional of a nonzero vector vanished")
        if len(nz) == 1:
            break
        j0 = min(nz, key=lambda j: abs(w[j]))
        for j in nz:
            if j == j0:
                continue
            qq = w[j] // w[j0]
            if qq:
                w[j] -= qq * w[j0]
                cols[j] = [a - qq * b for a, b in zip(cols[j], cols[j0])]
    j0 = next(j for j in range(N) if w[j] != 0)
    basis = tuple(tuple(cols[j]) for j in range(N) if j != j0)
    require(len(basis) == 5, "complement rank is not five")
    for b in basis:
        require(qpair(v, b) == 0, "complement basis vector not orthogonal")
    gram = tuple(tuple(qpair(x, y) for y in basis) for x in basis)
    return basis, gram


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
