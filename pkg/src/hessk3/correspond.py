"""Dictionary between the lattice isometries and the Hermitian side.

psi_hom sends a 2x2 matrix over Z[w] with unit determinant to a 6x6 lattice
isometry fixing the first hyperbolic plane; its kernel is the six scalar
matrices.  Together with the translation pairs and the two involutions this
spans the whole index-four extension:

    orthogonal side                     Hermitian side
    h1..h4 (first-column translations)  gBu(e_i)
    h1p..h4p (conjugated translations)  gBl with swapped, negated diagonal
    g1, g2, u0g1u0, u0u1, u2, I42       gA of elementary matrices
    U1 (determinant -1 coset)           transpose involution
    W0 (antidiagonal parity coset)      -1/(2 tau) involution

decompose_so0 reduces an element of the even subgroup (determinant one,
diagonal parity, plus orientation) to a word in the named tokens by integer
Euclid steps on two columns plus a six-unit rotation descent on the A2 tail;
orth_to_herm peels the two involutions first and maps the word across.
Round trips agree up to -1 on the orthogonal side and up to one of the six
unit scalars on the Hermitian side; both centers act trivially on the
period domain.
"""

from __future__ import annotations

from .eisenstein import OMEGA, OMEGA2, UNITS, Eisenstein, _round_half_to_zero, eis_divmod
from .errors import require
from .hermitian import m2e, m2e_det, m2e_pow
from .lattice import (
    G0,
    G0I42,
    G1,
    G2,
    H_GENS,
    HP_GENS,
    I42,
    MI42,
    U0G1U0,
    U0U1,
    U1,
    U2,
    W0,
    W0_INV,
    block_parity,
    det_int,
    is_orthogonal,
    mat_id,
    mat_mul,
    mat_neg,
    mat_pow,
    orientation,
    residual_m,
    translation_h,
)

__all__ = [
    "psi_hom",
    "is_so0",
    "ORTH_TOKEN_MATS",
    "orth_word_matrix",
    "decompose_so0",
    "herm_token_to_orth",
    "herm_word_to_orth",
    "orth_to_herm",
    "herm_to_orth",
    "equal_mod_center",
    "DICTIONARY_PAIRS",
]


def psi_hom(a):
    """6x6 isometry induced by a unit-determinant 2x2 matrix over Z[w].

    The first hyperbolic plane is fixed; on the remaining four coordinates
    the entry pattern is quadratic in the input, with the real rows given
    by norms and doubled real parts and the two tail rows by w-coefficients.
    """
    if not m2e_det(a).is_unit():
        raise ValueError("matrix must have unit determinant")
    a1, a2 = a[0][0], a[0][1]
    a3, a4 = a[1][0], a[1][1]
    r = (
        (
            a1.norm(),
            a2.norm(),
            (a1 * a2.conj()).two_re(),
            (OMEGA * a1 * a2.conj()).two_re(),
        ),
        (
            a3.norm(),
            a4.norm(),
            (a3 * a4.conj()).two_re(),
            (OMEGA * a3 * a4.conj()).two_re(),
        ),
        (
            (OMEGA * a3 * a1.conj()).b,
            (OMEGA * a4 * a2.conj()).b,
            (OMEGA * (a4 * a1.conj() + a3 * a2.conj())).b,
            (a4 * a1.conj() - OMEGA * a2 * a3.conj()).b,
        ),
        (
            (a1 * a3.conj()).b,
            (a2 * a4.conj()).b,
            (a1 * a4.conj() + a2 * a3.conj()).b,
            (OMEGA * (a1 * a4.conj() - a3 * a2.conj())).b,
        ),
    )
    out = tuple(
        tuple(
            (1 if i == j else 0) if i < 2 or j < 2 else r[i - 2][j - 2]
            for j in range(6)
        )
        for i in range(6)
    )
    require(is_so0(out), "image left the even orthogonal subgroup")
    return out


def is_so0(g) -> bool:
    """Determinant one, diagonal parity, plus orientation."""
    return (
        is_orthogonal(g)
        and det_int(g) == 1
        and block_parity(g) == "diagonal"
        and orientation(g) == "plus"
    )


ORTH_TOKEN_MATS = {
    "h1": H_GENS[0],
    "h2": H_GENS[1],
    "h3": H_GENS[2],
    "h4": H_GENS[3],
    "h1p": HP_GENS[0],
    "h2p": HP_GENS[1],
    "h3p": HP_GENS[2],
    "h4p": HP_GENS[3],
    "g1": G1,
    "g2": G2,
    "u0g1u0": U0G1U0,
    "u0u1": U0U1,
    "u2": U2,
    "i42": I42,
    "mi42": MI42,
}


def orth_word_matrix(word):
    out = mat_id(6)
    for name, p in word:
        out = mat_mul(out, mat_pow(ORTH_TOKEN_MATS[name], p))
    return out


# Hermitian image of each orthogonal token at power p.  The conjugated
# translations swap and negate the two diagonal slots; mi42 = -i42 maps to
# the same gA as i42, which is where the mod -1 ambiguity of round trips
# comes from.

_E_G1 = m2e(((1, 0), (1, 1)))
_E_G2 = m2e(((1, 0), (OMEGA2, 1)))
_E_U0G1U0 = m2e(((1, 1), (0, 1)))
_E_U0U1 = m2e(((0, 1), (1, 0)))
_E_U2 = m2e(((1, 0), (0, OMEGA2)))
_E_I42 = m2e(((1, 0), (0, -1)))


def _herm_image(name: str, p: int):
    if name == "h1":
        return ("gBu", (p, 0, 0, 0))
    if name == "h2":
        return ("gBu", (0, p, 0, 0))
    if name == "h3":
        return ("gBu", (0, 0, p, 0))
    if name == "h4":
        return ("gBu", (0, 0, 0, p))
    if name == "h1p":
        return ("gBl", (0, -p, 0, 0))
    if name == "h2p":
        return ("gBl", (-p, 0, 0, 0))
    if name == "h3p":
        return ("gBl", (0, 0, p, 0))
    if name == "h4p":
        return ("gBl", (0, 0, 0, p))
    mats = {
        "g1": _E_G1,
        "g2": _E_G2,
        "u0g1u0": _E_U0G1U0,
        "u0u1": _E_U0U1,
        "u2": _E_U2,
        "i42": _E_I42,
        "mi42": _E_I42,
    }
    return ("gA", m2e_pow(mats[name], p))


def herm_token_to_orth(tok):
    kind = tok[0]
    if kind == "gA":
        return psi_hom(tok[1])
    if kind == "gBu":
        return translation_h(*tok[1])
    if kind == "gBl":
        n1, n2, n3, n4 = tok[1]
        inner = translation_h(-n2, -n1, n3, n4)
        return mat_mul(G0, mat_mul(inner, G0))
    raise ValueError(f"unknown token kind {kind!r}")


def herm_word_to_orth(word, uses_t: bool = False, uses_w: bool = False):
    out = mat_id(6)
    if uses_t:
        out = mat_mul(out, U1)
    if uses_w:
        out = mat_mul(out, W0)
    for tok in word:
        out = mat_mul(out, herm_token_to_orth(tok))
    return out


# (s, t) with UNITS[k] = (-1)^s w^t, in the fixed unit order
_UNIT_ST = ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2))


def _rotation_powers(z: Eisenstein):
    """Unit rotation maximizing the doubled real part of z, earliest wins."""
    best_val = None
    best = (0, 0)
    for k, u in enumerate(UNITS):
        val = (u * z).two_re()
        if best_val is None or val > best_val:
            best_val = val
            best = _UNIT_ST[k]
    return best


def decompose_so0(x):
    """Token word for an element of the even orthogonal subgroup.

    Column two is reduced to e2 (integer Euclid on rows 2..4, six-unit
    rotation descent on the tail pair), a translation factor is peeled off
    the right, then column four of the residual block is reduced the same
    way; what remains is a residual unipotent recognized entry by entry.
    The returned word multiplies back to x exactly.
    """
    if not is_orthogonal(x):
        raise ValueError("matrix does not preserve the form")
    if det_int(x) != 1 or block_parity(x) != "diagonal" or orientation(x) != "plus":
        raise ValueError("matrix is not in the even orthogonal subgroup")

    work = x
    out_left: list = []
    out_right: list = []

    def lmul(name: str, p: int):
        nonlocal work
        if p == 0:
            return
        work = mat_mul(mat_pow(ORTH_TOKEN_MATS[name], p), work)
        out_left.append((name, -p))

    def rotate_tail(z: Eisenstein):
        s, t = _rotation_powers(z)
        lmul("u2", t)
        lmul("i42", s)

    def tail(col: int) -> Eisenstein:
        return Eisenstein(work[4][col], work[5][col])

    # -- stage one: column two to e2 ------------------------------------

    # rows two and three: integer Euclid, a2 odd throughout
    guard = 0
    while work[2][1] != 0:
        guard += 1
        require(guard < 10000, "row-three reduction did not terminate")
        a2, a3 = work[1][1], work[2][1]
        # the translation rows carry -2 m, so the quotient enters unnegated
        c = _round(a2, 2 * a3)
        lmul("h2", c)
        a2, a3 = work[1][1], work[2][1]
        q = -_round(a3, a2)
        require(q != 0, "no progress clearing row three")
        lmul("h1p", q)
        require(abs(work[2][1]) < abs(a3), "row three failed to shrink")

    # tail pair of column two against the two hyperbolic rows: a full
    # Eisenstein quotient of the tail by the smaller pivot (reached with a
    # u2 rotation sandwich) when the pivot square is at most the tail norm,
    # a single rotated unit step otherwise; the isotropy relation keeps the
    # smaller pivot square below twice the norm, so both branches shrink
    def peel_mult(name: str, q: Eisenstein):
        # tail gains -q * pivot, pivot = the row entry name translates by
        lmul(name, -q.a)
        if q.b:
            lmul("u2", 2)
            lmul(name, -q.b)
            lmul("u2", 1)

    guard = 0
    while not tail(1).is_zero():
        guard += 1
        require(guard < 10000, "tail descent did not terminate")
        n = tail(1).norm()
        require(work[0][1] * work[1][1] == 2 * n, "isotropy of column two broke")
        a1, a2 = work[0][1], work[1][1]
        name, piv = ("h3", a1) if abs(a1) <= abs(a2) else ("h3p", a2)
        if piv * piv <= n:
            q, _ = eis_divmod(tail(1), Eisenstein(piv, 0))
            require(not q.is_zero(), "no progress in tail division")
            peel_mult(name, q)
        else:
            rotate_tail(tail(1))
            lmul(name, -_sign(piv))
        require(tail(1).norm() < n, "tail norm failed to decrease")

    require(work[0][1] == 0, "row one of column two is nonzero")

    # row four against the odd row two
    guard = 0
    while work[3][1] != 0:
        guard += 1
        require(guard < 10000, "row-four reduction did not terminate")
        a2, a4 = work[1][1], work[3][1]
        c = _round(a2, 2 * a4)
        lmul("h1", c)
        a2, a4 = work[1][1], work[3][1]
        q = -_round(a4, a2)
        require(q != 0, "no progress clearing row four")
        lmul("h2p", q)
        require(abs(work[3][1]) < abs(a4), "row four failed to shrink")

    require(abs(work[1][1]) == 1, "column two pivot is not a unit")
    if work[1][1] == -1:
        lmul("mi42", 1)
    require(
        tuple(work[i][1] for i in range(6)) == (0, 1, 0, 0, 0, 0),
        "column two did not reduce to e2",
    )
    require(work[0] == (1, 0, 0, 0, 0, 0), "row one did not reduce to e1")

    # -- peel the translation factor off the right -----------------------

    y = tuple(
        tuple(
            (1 if i == j else 0) if i < 2 or j < 2 else work[i][j] for j in range(6)
        )
        for i in range(6)
    )
    require(is_orthogonal(y), "block complement is not an isometry")
    t_part = mat_mul(_inv_orth(y), work)
    mvec = (t_part[2][0], t_part[3][0], t_part[4][0], t_part[5][0])
    require(t_part == translation_h(*mvec), "residual is not a translation")
    for name, p in zip(("h1", "h2", "h3", "h4"), mvec):
        if p:
            out_right.append((name, p))
    work = y

    # -- stage two: column four of the block ------------------------------

    # here the isotropy relation has no factor two, so the smaller pivot
    # square never exceeds the tail norm and division alone suffices
    guard = 0
    while not tail(3).is_zero():
        guard += 1
        require(guard < 10000, "second tail descent did not terminate")
        n = tail(3).norm()
        require(work[2][3] * work[3][3] == n, "isotropy of column four broke")
        b3, b4 = work[2][3], work[3][3]
        name, piv = ("g1", b3) if abs(b3) <= abs(b4) else ("u0g1u0", b4)
        q, _ = eis_divmod(tail(3), Eisenstein(piv, 0))
        require(not q.is_zero(), "no progress in second tail division")
        peel_mult(name, q)
        require(tail(3).norm() < n, "second tail norm failed to decrease")

    if work[3][3] == 0:
        lmul("u0u1", 1)
    require(work[2][3] == 0, "row three of column four is nonzero")
    require(work[3][3] == 1, "column four pivot is not plus one")

    # -- align the A2 tail block ------------------------------------------

    p_blk = ((work[4][4], work[4][5]), (work[5][4], work[5][5]))
    found = False
    for t in range(3):
        for s in range(2):
            r_pow = mat_pow(U2, t)
            cand = tuple(
                tuple(
                    (-1 if s else 1) * sum(r_pow[4 + i][4 + k] * p_blk[k][j] for k in range(2))
                    for j in range(2)
                )
                for i in range(2)
            )
            if cand == ((1, 0), (0, 1)):
                lmul("u2", t)
                lmul("i42", s)
                found = True
                break
        if found:
            break
    require(found, "tail block is not a unit rotation")

    # -- residual unipotent ------------------------------------------------

    u, v = work[4][2], work[5][2]
    require(work == residual_m(u, v), "residual is not of the expected shape")
    residual_toks = []
    if u:
        residual_toks.append(("g1", u))
    if v:
        residual_toks.append(("g2", v))

    word = out_left + residual_toks + out_right
    require(orth_word_matrix(word) == x, "word does not multiply back")
    return word


def _round(p: int, q: int) -> int:
    return _round_half_to_zero(p, q)


def _sign(n: int) -> int:
    return 1 if n > 0 else (-1 if n < 0 else 0)


def _inv_orth(y):
    return mat_pow(y, -1)


def orth_to_herm(g):
    """Involution flags and Hermitian word for an element of O+.

    Returns (uses_t, uses_w, word); the product U1^t W0^s (word image)
    recovers g up to sign.
    """
    if not is_orthogonal(g):
        raise ValueError("matrix does not preserve the form")
    if orientation(g) != "plus":
        raise ValueError("matrix reverses the positive-plane orientation")
    work = g
    uses_t = det_int(work) == -1
    if uses_t:
        work = mat_mul(U1, work)
    uses_w = block_parity(work) == "antidiagonal"
    if uses_w:
        work = mat_mul(W0_INV, work)
    word = decompose_so0(work)
    herm_word = [_herm_image(name, p) for name, p in word]
    check = herm_word_to_orth(herm_word, uses_t, uses_w)
    require(equal_mod_center(check, g), "transport does not recover the input")
    return uses_t, uses_w, herm_word


def herm_to_orth(uses_t: bool, uses_w: bool, word):
    return herm_word_to_orth(word, uses_t, uses_w)


def equal_mod_center(a, b) -> bool:
    return a == b or a == mat_neg(b)


DICTIONARY_PAIRS = (
    ("h1", H_GENS[0], ("gBu", (1, 0, 0, 0))),
    ("h2", H_GENS[1], ("gBu", (0, 1, 0, 0))),
    ("h3", H_GENS[2], ("gBu", (0, 0, 1, 0))),
    ("h4", H_GENS[3], ("gBu", (0, 0, 0, 1))),
    ("h1p", HP_GENS[0], ("gBl", (0, -1, 0, 0))),
    ("h2p", HP_GENS[1], ("gBl", (-1, 0, 0, 0))),
    ("h3p", HP_GENS[2], ("gBl", (0, 0, 1, 0))),
    ("h4p", HP_GENS[3], ("gBl", (0, 0, 0, 1))),
    ("g1", G1, ("gA", _E_G1)),
    ("g2", G2, ("gA", _E_G2)),
    ("u0g1u0", U0G1U0, ("gA", _E_U0G1U0)),
    ("u0u1", U0U1, ("gA", _E_U0U1)),
    ("u2", U2, ("gA", _E_U2)),
    ("i42", I42, ("gA", _E_I42)),
)
