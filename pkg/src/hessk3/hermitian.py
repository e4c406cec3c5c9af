"""The rank-two Hermitian modular group over the Eisenstein integers.

Elements are 4x4 matrices g over Z[w] acting on the upper half-space H2 by
(A tau + B)(C tau + D)^(-1), unitary for J = ((0, I), (-I, 0)) in the sense
g* J g = J.  The level-two filtration tracked here:

    full    g* J g = J
    gamma0  ... and C == 0 mod 2
    gamma1  ... and A == I mod 2

Generator tokens: ("gA", A) for ((A, 0), (0, (A*)^(-1))), ("gBu", m) for the
upper translation ((I, B(m)), (0, I)), ("gBl", m) for the lower translation
((I, 0), (2 B(m), I)), where B(m) is the integral Hermitian matrix
((m1, m3 + w m4), (m3 + w^2 m4, m2)).  A word is a list of tokens whose
matrix is the left-to-right product; the rightmost token acts first.

decompose_hgamma1 rewrites any gamma1 element as such a word, exactly;
decompose_hgamma0 peels one fixed mod-2 section factor first.  The descent
arguments only use that Z[w] is Euclidean and that the six units cover the
angular sector needed to shrink norms; every step is checked at run time.
"""

from __future__ import annotations

from fractions import Fraction

from .domain import h2_contains
from .eisenstein import (
    OMEGA,
    OMEGA2,
    ONE,
    UNITS,
    ZERO,
    Eisenstein,
    _round_half_to_zero,
    eis_divmod,
    g2_column_reduce,
)
from .errors import require
from .tower import (
    Mat2C,
    from_eisenstein,
    m2_add,
    m2_inv,
    m2_mul,
    m2_scale,
    m2_transpose,
)

__all__ = [
    "m2e",
    "m2e_id",
    "m2e_mul",
    "m2e_sub",
    "m2e_neg",
    "m2e_conjt",
    "m2e_det",
    "m2e_inv",
    "m2e_pow",
    "m2e_mod2",
    "he_id",
    "he_mul",
    "he_conjt",
    "he_neg",
    "blocks",
    "from_blocks",
    "J_MAT",
    "W_MAT",
    "herm_b",
    "g_upper",
    "g_lower",
    "g_a",
    "membership",
    "moebius",
    "involution_T",
    "involution_W",
    "token_matrix",
    "token_inverse",
    "word_matrix",
    "decompose_hgamma1",
    "decompose_hgamma0",
    "f_mod2",
    "f4_mul",
    "f4_mat_mul",
    "f4_det",
    "gl2f4_group",
    "section_lift",
    "p1_f4_points",
    "p1_action",
    "B_COSETS",
    "coset_classify",
    "embed_from_hgamma0",
    "equal_mod_units",
]


# -- 2x2 matrices over Z[w] -------------------------------------------------


def m2e(rows):
    out = []
    for r in rows:
        row = []
        for x in r:
            row.append(x if isinstance(x, Eisenstein) else Eisenstein(x, 0))
        out.append(tuple(row))
    return tuple(out)


def m2e_id():
    return ((ONE, ZERO), (ZERO, ONE))


def m2e_mul(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


def m2e_sub(a, b):
    return tuple(tuple(a[i][j] - b[i][j] for j in range(2)) for i in range(2))


def m2e_neg(a):
    return tuple(tuple(-a[i][j] for j in range(2)) for i in range(2))


def m2e_scale(a, s):
    return tuple(tuple(a[i][j] * s for j in range(2)) for i in range(2))


def m2e_conjt(a):
    return ((a[0][0].conj(), a[1][0].conj()), (a[0][1].conj(), a[1][1].conj()))


def m2e_det(a) -> Eisenstein:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def m2e_inv(a):
    """Inverse of a matrix with unit determinant (d^(-1) = conj(d))."""
    d = m2e_det(a)
    if not d.is_unit():
        raise ValueError("determinant is not a unit")
    di = d.conj()
    return ((a[1][1] * di, -a[0][1] * di), (-a[1][0] * di, a[0][0] * di))


def m2e_pow(a, k: int):
    if k < 0:
        return m2e_pow(m2e_inv(a), -k)
    out = m2e_id()
    base = a
    while k:
        if k & 1:
            out = m2e_mul(out, base)
        base = m2e_mul(base, base)
        k >>= 1
    return out


def m2e_mod2(a):
    return tuple(tuple(a[i][j].mod2() for j in range(2)) for i in range(2))


def _m2e_even(a) -> bool:
    return all(a[i][j].mod2() == (0, 0) for i in range(2) for j in range(2))


def _m2e_odd_id(a) -> bool:
    return m2e_mod2(a) == (((1, 0), (0, 0)), ((0, 0), (1, 0)))


# -- 4x4 matrices ------------------------------------------------------------


def he_id():
    return tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4))


def he_mul(a, b):
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(4)), ZERO) for j in range(4))
        for i in range(4)
    )


def he_conjt(a):
    return tuple(tuple(a[j][i].conj() for j in range(4)) for i in range(4))


def he_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def blocks(g):
    a = ((g[0][0], g[0][1]), (g[1][0], g[1][1]))
    b = ((g[0][2], g[0][3]), (g[1][2], g[1][3]))
    c = ((g[2][0], g[2][1]), (g[3][0], g[3][1]))
    d = ((g[2][2], g[2][3]), (g[3][2], g[3][3]))
    return a, b, c, d


def from_blocks(a, b, c, d):
    rows = []
    for i in range(2):
        rows.append(tuple(a[i]) + tuple(b[i]))
    for i in range(2):
        rows.append(tuple(c[i]) + tuple(d[i]))
    return tuple(rows)


_Z2 = ((ZERO, ZERO), (ZERO, ZERO))

J_MAT = from_blocks(_Z2, m2e_id(), m2e_neg(m2e_id()), _Z2)
# The half-shift conjugate of J-translations; W* J W = 2 J and W^2 = -2 I.
W_MAT = from_blocks(_Z2, m2e_neg(m2e_id()), m2e_scale(m2e_id(), 2), _Z2)


def herm_b(m):
    m1, m2, m3, m4 = m
    off = Eisenstein(m3, 0) + Eisenstein(m4, 0) * OMEGA
    return ((Eisenstein(m1, 0), off), (off.conj(), Eisenstein(m2, 0)))


def g_upper(m):
    return from_blocks(m2e_id(), herm_b(m), _Z2, m2e_id())


def g_lower(m):
    return from_blocks(m2e_id(), _Z2, m2e_scale(herm_b(m), 2), m2e_id())


def g_a(a):
    if not m2e_det(a).is_unit():
        raise ValueError("gA block must have unit determinant")
    return from_blocks(a, _Z2, _Z2, m2e_inv(m2e_conjt(a)))


def membership(g) -> str:
    if he_mul(he_conjt(g), he_mul(J_MAT, g)) != J_MAT:
        return "none"
    _, _, c, _ = blocks(g)
    if not _m2e_even(c):
        return "full"
    a, _, _, _ = blocks(g)
    if _m2e_odd_id(a):
        return "gamma1"
    return "gamma0"


# -- action on the half-space -------------------------------------------------


def _block_to_field(b) -> Mat2C:
    return tuple(tuple(from_eisenstein(x) for x in r) for r in b)


def moebius(g, tau: Mat2C) -> Mat2C:
    a, b, c, d = (_block_to_field(x) for x in blocks(g))
    num = m2_add(m2_mul(a, tau), b)
    den = m2_add(m2_mul(c, tau), d)
    det = den[0][0] * den[1][1] - den[0][1] * den[1][0]
    require(not det.is_zero(), "singular denominator in the matrix action")
    return m2_mul(num, m2_inv(den))


def involution_T(tau: Mat2C) -> Mat2C:
    if not h2_contains(tau):
        raise ValueError("transpose involution needs a half-space point")
    return m2_transpose(tau)


def involution_W(tau: Mat2C) -> Mat2C:
    if not h2_contains(tau):
        raise ValueError("inversion involution needs a half-space point")
    return m2_scale(m2_inv(tau), Fraction(-1, 2))


# -- words ---------------------------------------------------------------------


def token_matrix(tok):
    kind = tok[0]
    if kind == "gA":
        return g_a(tok[1])
    if kind == "gBu":
        return g_upper(tok[1])
    if kind == "gBl":
        return g_lower(tok[1])
    raise ValueError(f"unknown token kind {kind!r}")


def token_inverse(tok):
    kind = tok[0]
    if kind == "gA":
        return ("gA", m2e_inv(tok[1]))
    if kind == "gBu":
        return ("gBu", tuple(-x for x in tok[1]))
    if kind == "gBl":
        return ("gBl", tuple(-x for x in tok[1]))
    raise ValueError(f"unknown token kind {kind!r}")


def word_matrix(word):
    out = he_id()
    for tok in word:
        out = he_mul(out, token_matrix(tok))
    return out


# -- decomposition -------------------------------------------------------------


def _div2(x: Eisenstein) -> Eisenstein:
    require(x.a % 2 == 0 and x.b % 2 == 0, "entry is not even")
    return Eisenstein(x.a // 2, x.b // 2)


def _div_int(x: Eisenstein, k: int) -> Eisenstein:
    require(k != 0 and x.a % k == 0 and x.b % k == 0, "entry is not divisible")
    return Eisenstein(x.a // k, x.b // k)


def _rational_split(x: Eisenstein, y: Eisenstein):
    """Write x = m t, y / 2 = n t with coprime integers m (odd), n.

    Unitarity of the ambient matrix forces x * conj(y/2) to be a rational
    integer, which is exactly what makes the split possible.
    """
    y2 = _div2(y)
    r = x * y2.conj()
    require(r.b == 0, "column entries are not rationally dependent")
    fr = Fraction(r.a, y2.norm())
    m, n = fr.numerator, fr.denominator
    require(m != 0, "odd entry with vanishing ratio")
    t = _div_int(x, m)
    require(t * n == y2, "rational split does not reproduce the even entry")
    require(m % 2 != 0, "ratio numerator is even for an odd entry")
    return m, n, t


def _slot_params(slot: int, c: int):
    return (c, 0, 0, 0) if slot == 0 else (0, c, 0, 0)


def decompose_hgamma1(g):
    """Exact token word for a gamma1 element; multiplies back bit for bit."""
    if membership(g) != "gamma1":
        raise ValueError("matrix is not in the gamma1 congruence subgroup")

    work = g
    left_inv = []

    def lmul(tok):
        nonlocal work
        work = he_mul(token_matrix(tok), work)
        left_inv.append(token_inverse(tok))

    def clear_even_partner(odd_idx: int, even_idx: int, col: int, slot: int):
        # Shrink work[even_idx][col] to zero against the odd entry above it
        # using the two diagonal translation slots; integer Euclid with
        # nearest rounding, norm strictly decreasing.
        y = work[even_idx][col]
        if y.is_zero():
            return
        m, n, _ = _rational_split(work[odd_idx][col], y)
        guard = 0
        while n:
            guard += 1
            require(guard < 10000, "translation reduction did not terminate")
            c = -_round_half_to_zero(m, 2 * n)
            if c:
                lmul(("gBu", _slot_params(slot, c)))
                m += 2 * c * n
            c = -_round_half_to_zero(n, m)
            require(c != 0, "no progress in translation reduction")
            lmul(("gBl", _slot_params(slot, c)))
            n += c * m
        require(work[even_idx][col].is_zero(), "even partner entry did not vanish")

    # (i) clear row two of column one with a single gA factor
    if not work[1][0].is_zero():
        a1, _ = g2_column_reduce(work[0][0], work[1][0])
        lmul(("gA", a1))
        require(work[1][0].is_zero(), "gA factor failed to clear row two")

    # clear row three of column one (rationally dependent on row one)
    clear_even_partner(0, 2, 0, 0)

    # (ii) shrink (row one, row four) of column one with antidiagonal
    # translations.  Full Eisenstein quotients give the usual geometric
    # Euclid; both quotients round to zero only in the band
    # 4 N(half) <= 3 N(alpha) <= 9 N(half), where a single best-unit step
    # is strict on one side or the other.
    def gbl_mult(w: Eisenstein):
        # work[3][0] / 2 gains w * work[0][0]
        lmul(("gBl", (0, 0, w.a - w.b, -w.b)))

    def gbu_mult(u: Eisenstein):
        # work[0][0] gains u * work[3][0]
        lmul(("gBu", (0, 0, u.a, u.b)))

    guard = 0
    while not work[3][0].is_zero():
        guard += 1
        require(guard < 10000, "antidiagonal descent did not terminate")
        alpha = work[0][0]
        half = _div2(work[3][0])
        q, _ = eis_divmod(half, alpha)
        if not q.is_zero():
            before = half.norm()
            gbl_mult(-q)
            require(_div2(work[3][0]).norm() < before, "no descent in row four")
            continue
        q, _ = eis_divmod(alpha, work[3][0])
        if not q.is_zero():
            before = alpha.norm()
            gbu_mult(-q)
            require(work[0][0].norm() < before, "no descent in row one")
            continue
        eps = _best_unit(lambda e: (e * half.conj() * alpha).two_re())
        if (eps * half.conj() * alpha).two_re() > alpha.norm():
            gbl_mult(-eps)
        else:
            eps = _best_unit(lambda e: (e * alpha.conj() * half).two_re())
            before = alpha.norm()
            gbu_mult(-eps)
            require(work[0][0].norm() < before, "no descent in row one")
    require(work[0][0].norm() == 1, "column one did not reduce to a unit")

    # (iii) column two: row three vanishes by unitarity, row four reduces
    require(work[2][1].is_zero(), "row three of column two is nonzero")
    clear_even_partner(1, 3, 1, 1)

    # (iv) residual block-triangular piece: one gA and one upper translation
    for i in (2, 3):
        for j in (0, 1):
            require(work[i][j].is_zero(), "lower-left block did not vanish")
    a_r = ((work[0][0], work[0][1]), (work[1][0], work[1][1]))
    require(m2e_det(a_r).is_unit(), "residual A block is not invertible")
    require(_m2e_odd_id(a_r), "residual A block left the congruence kernel")
    b_r = ((work[0][2], work[0][3]), (work[1][2], work[1][3]))
    h = m2e_mul(m2e_inv(a_r), b_r)
    require(
        h[0][0].b == 0 and h[1][1].b == 0 and h[1][0] == h[0][1].conj(),
        "residual translation block is not Hermitian integral",
    )
    mvec = (h[0][0].a, h[1][1].a, h[0][1].a, h[0][1].b)

    word = list(left_inv)
    if a_r != m2e_id():
        word.append(("gA", a_r))
    if any(mvec):
        word.append(("gBu", mvec))
    require(word_matrix(word) == g, "decomposition does not multiply back")
    return word


def _best_unit(score) -> Eisenstein:
    best = None
    best_val = None
    for u in UNITS:
        v = score(u)
        if best_val is None or v > best_val:
            best, best_val = u, v
    return best


# -- mod-2 reduction and section ------------------------------------------------

F4_ELEMS = ((0, 0), (1, 0), (0, 1), (1, 1))


def f4_mul(x, y):
    return ((x[0] * y[0] + x[1] * y[1]) & 1, (x[0] * y[1] + x[1] * y[0] + x[1] * y[1]) & 1)


def f4_add(x, y):
    return (x[0] ^ y[0], x[1] ^ y[1])


def f4_mat_mul(a, b):
    return tuple(
        tuple(f4_add(f4_mul(a[i][0], b[0][j]), f4_mul(a[i][1], b[1][j])) for j in range(2))
        for i in range(2)
    )


def f4_det(a):
    return f4_add(f4_mul(a[0][0], a[1][1]), f4_mul(a[0][1], a[1][0]))


F4_ID = (((1, 0), (0, 0)), ((0, 0), (1, 0)))


def f_mod2(g):
    """A block mod 2 of a gamma0 element, an invertible matrix over F4."""
    if membership(g) not in ("gamma0", "gamma1"):
        raise ValueError("mod-2 reduction needs a gamma0 element")
    a, _, _, _ = blocks(g)
    return m2e_mod2(a)


def _section_generators():
    gens = []
    for x in (ONE, OMEGA, OMEGA2):
        gens.append(m2e(((1, x), (0, 1))))
        gens.append(m2e(((1, 0), (x, 1))))
    for u in (OMEGA, OMEGA2):
        gens.append(m2e(((u, 0), (0, 1))))
        gens.append(m2e(((1, 0), (0, u))))
    return gens


_SECTION: dict | None = None


def _section_table() -> dict:
    """One fixed integral unit-determinant lift per element of GL2(F4).

    Breadth-first closure from the identity over exactly liftable
    generators; deterministic, built once.
    """
    global _SECTION
    if _SECTION is None:
        gens = _section_generators()
        table = {m2e_mod2(m2e_id()): m2e_id()}
        queue = [m2e_id()]
        while queue:
            cur = queue.pop(0)
            for gen in gens:
                nxt = m2e_mul(gen, cur)
                key = m2e_mod2(nxt)
                if key not in table:
                    table[key] = nxt
                    queue.append(nxt)
        require(len(table) == 180, "section table does not cover GL2(F4)")
        _SECTION = table
    return _SECTION


def gl2f4_group() -> list:
    return sorted(_section_table().keys())


def section_lift(fm):
    table = _section_table()
    if fm not in table:
        raise ValueError("matrix is not invertible over F4")
    return table[fm]


def decompose_hgamma0(g):
    """Section factor and gamma1 word with g = gA(L) * word."""
    cls = membership(g)
    if cls not in ("gamma0", "gamma1"):
        raise ValueError("matrix is not in the gamma0 congruence subgroup")
    lift = section_lift(f_mod2(g))
    rem = he_mul(g_a(m2e_inv(lift)), g)
    require(membership(rem) == "gamma1", "section quotient left gamma1")
    word = decompose_hgamma1(rem)
    require(he_mul(g_a(lift), word_matrix(word)) == g, "gamma0 factorization failed")
    return lift, word


# -- projective line over F4 (five points) --------------------------------------


def p1_f4_points():
    pts = [((1, 0), (0, 0))]
    for x in F4_ELEMS:
        pts.append((x, (1, 0)))
    return tuple(pts)


def p1_action(fm, pt):
    x = f4_add(f4_mul(fm[0][0], pt[0]), f4_mul(fm[0][1], pt[1]))
    y = f4_add(f4_mul(fm[1][0], pt[0]), f4_mul(fm[1][1], pt[1]))
    if y != (0, 0):
        # normalize second coordinate to 1
        inv = next(u for u in F4_ELEMS if f4_mul(u, y) == (1, 0))
        return (f4_mul(inv, x), (1, 0))
    require(x != (0, 0), "projective image vanished")
    return ((1, 0), (0, 0))


# -- half-shift cosets -----------------------------------------------------------

B_COSETS = (
    m2e(((1, 0), (0, 0))),
    m2e(((0, 0), (0, 1))),
    m2e(((0, OMEGA), (OMEGA2, 0))),
    m2e(((0, OMEGA2), (OMEGA, 0))),
)


def coset_classify(h):
    """Which of the four half-shift translates brings h into gamma0.

    h is the integral avatar ((A, B), (C, D)) of the half-integral element
    ((A, B/2), (2C, D)); the translate r_i works exactly when B - A B_i is
    even.  Returns 1..4, or "uncovered" when no translate works.
    """
    if membership(h) == "none":
        raise ValueError("matrix is not unitary for J")
    a, b, _, _ = blocks(h)
    hits = [
        i
        for i, bi in enumerate(B_COSETS, start=1)
        if _m2e_even(m2e_sub(b, m2e_mul(a, bi)))
    ]
    require(len(hits) <= 1, "two half-shift cosets matched at once")
    return hits[0] if hits else "uncovered"


def embed_from_hgamma0(h):
    """Integral avatar of a gamma0 element inside the half-integral group."""
    if membership(h) not in ("gamma0", "gamma1"):
        raise ValueError("embedding needs a gamma0 element")
    a, b, c, d = blocks(h)
    half_c = tuple(tuple(_div2(x) for x in r) for r in c)
    out = from_blocks(a, m2e_scale(b, 2), half_c, d)
    require(membership(out) != "none", "conjugated element left the group")
    return out


def equal_mod_units(x, y) -> bool:
    """Equality of 4x4 matrices up to one of the six unit scalars."""
    for u in UNITS:
        if all(x[i][j] * u == y[i][j] for i in range(4) for j in range(4)):
            return True
    return False
