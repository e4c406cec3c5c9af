"""Sparse exact polynomials in five fixed variables.

A polynomial is a dict from exponent 5-tuples to nonzero coefficients
(int or Fraction).  Five variables cover every symbolic computation here:
Sylvester parameters, their squares, and the dual parameters all reuse the
same slots.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import require

NVARS = 5

_ZEXP = (0, 0, 0, 0, 0)


class Poly5:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[tuple(e)] = t.get(tuple(e), 0) + c
                    if not t[tuple(e)]:
                        del t[tuple(e)]
        self.terms = t

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "Poly5":
        return Poly5()

    @staticmethod
    def const(c) -> "Poly5":
        return Poly5({_ZEXP: c} if c else None)

    @staticmethod
    def var(i: int, power: int = 1) -> "Poly5":
        e = [0] * NVARS
        e[i] = power
        return Poly5({tuple(e): 1})

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Poly5") -> "Poly5":
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            elif e in t:
                del t[e]
        out = Poly5()
        out.terms = t
        return out

    def __sub__(self, other: "Poly5") -> "Poly5":
        return self + (-other)

    def __neg__(self) -> "Poly5":
        out = Poly5()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other) -> "Poly5":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly5()
            out = Poly5()
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                elif e in t:
                    del t[e]
        out = Poly5()
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly5":
        require(n >= 0, "negative polynomial power")
        out = Poly5.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly5) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None if mixed or zero."""
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def eval(self, point) -> Fraction:
        point = [Fraction(p) for p in point]
        require(len(point) == NVARS, "evaluation point has wrong arity")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly5(0)"
        parts = [f"{c}*x^{e}" for e, c in sorted(self.terms.items())]
        return "Poly5(" + " + ".join(parts[:6]) + (" ..." if len(parts) > 6 else "") + ")"


def halve_exponents(p: Poly5) -> Poly5:
    """Substitute x_i^2 -> y_i; every exponent must be even."""
    t = {}
    for e, c in p.terms.items():
        require(all(k % 2 == 0 for k in e), "odd exponent during square substitution")
        t[tuple(k // 2 for k in e)] = c
    out = Poly5()
    out.terms = t
    return out


def reciprocal_clear(p: Poly5, cap: int) -> Poly5:
    """Clear reciprocals: (prod x_i)^cap * p(1/x_1, ..., 1/x_5).

    Each exponent k becomes cap - k, so cap must dominate the degree in every
    variable.
    """
    t = {}
    for e, c in p.terms.items():
        require(all(0 <= k <= cap for k in e), "exponent above reciprocal cap")
        t[tuple(cap - k for k in e)] = c
    out = Poly5()
    out.terms = t
    return out


def elem_sym_polys() -> tuple[Poly5, Poly5, Poly5, Poly5, Poly5]:
    """The five elementary symmetric polynomials in x_0..x_4."""
    out = []
    for k in range(1, 6):
        acc = Poly5()
        for subset in _subsets(range(NVARS), k):
            e = [0] * NVARS
            for i in subset:
                e[i] = 1
            acc = acc + Poly5({tuple(e): 1})
        out.append(acc)
    return tuple(out)


def _subsets(pool, k):
    pool = list(pool)
    n = len(pool)
    if k > n:
        return
    idx = list(range(k))
    while True:
        yield [pool[i] for i in idx]
        for i in reversed(range(k)):
            if idx[i] != i + n - k:
                break
        else:
            return
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
