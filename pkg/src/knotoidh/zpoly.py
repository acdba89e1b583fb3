"""Integer Laurent polynomials in z, plus exponent reduction.

Index values live in Z[z, z^-1].  When a chord has degree of modulus m > 0,
its index exponents are only defined mod m, so a reduction policy picks a
canonical representative for every exponent:

* QUOTIENT: least non-negative residue, 0..m-1.  Reduction is a ring
  homomorphism Z[z,z^-1] -> Z[z]/(z^m - 1), so move invariance is exact.
* LITERAL: representative of least absolute value, ties at m/2 broken
  toward the sign of the input.  This reproduces hand-reduced expressions
  (z^-1 stays z^-1) but is not a class function on residues.

m = 0 means no reduction at all.
"""

from __future__ import annotations

import enum
from collections import defaultdict

__all__ = ["ReductionPolicy", "ZPoly", "reduce_exponent", "reduce_poly"]


class ReductionPolicy(enum.Enum):
    QUOTIENT = "quotient"
    LITERAL = "literal"


def reduce_exponent(k: int, m: int, policy: ReductionPolicy) -> int:
    """Reduce a single exponent k modulo m under the given policy.

    m = 0 leaves k unchanged.  For LITERAL the result r satisfies
    |r| <= m/2, and reduce_exponent(-k) == -reduce_exponent(k) exactly.
    """
    if m < 0:
        raise ValueError("modulus must be non-negative")
    if m == 0:
        return k
    r = k % m
    if policy is ReductionPolicy.QUOTIENT:
        return r
    if 2 * r > m or (2 * r == m and k < 0):
        r -= m
    return r


class ZPoly:
    """Immutable Laurent polynomial in z with integer coefficients.

    Terms are kept as a sorted tuple of (exponent, coefficient) pairs with
    zero coefficients dropped, so equal polynomials compare equal and can
    be used as dictionary keys.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = defaultdict(int)
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            acc[int(e)] += int(c)
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def const(cls, c: int) -> "ZPoly":
        return cls(((0, c),))

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "ZPoly":
        return cls(((exp, coeff),))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "ZPoly") -> "ZPoly":
        return ZPoly(self.terms + other.terms)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return ZPoly(self.terms + tuple((e, -c) for e, c in other.terms))

    def __neg__(self) -> "ZPoly":
        return self.scale(-1)

    def scale(self, k: int) -> "ZPoly":
        if k == 0:
            return ZPoly()
        return ZPoly(tuple((e, k * c) for e, c in self.terms))

    def subst_z_inverse(self) -> "ZPoly":
        """Substitute z -> z^-1, i.e. negate every exponent."""
        return ZPoly(tuple((-e, c) for e, c in self.terms))

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1] if self.terms else 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                power = "z" if e == 1 else "z^%d" % e
                body = power if abs(c) == 1 else "%d*%s" % (abs(c), power)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return "ZPoly(%r)" % (self.terms,)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            elif e == 1:
                body = "z" if abs(c) == 1 else "%dz" % abs(c)
            else:
                power = "z^{%d}" % e
                body = power if abs(c) == 1 else "%d%s" % (abs(c), power)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+" if c > 0 else "-") + body)
        return "".join(out)


def reduce_poly(p: ZPoly, m: int, policy: ReductionPolicy) -> ZPoly:
    """Reduce every exponent of p modulo m; merged terms may cancel."""
    if m == 0:
        return p
    return ZPoly(tuple((reduce_exponent(e, m, policy), c) for e, c in p.terms))
