"""Dense integer polynomials in q and the exact machinery built on them:
Gaussian binomials via the Pascal-type recurrence, cyclotomic polynomials
via iterated exact division, and evaluation at roots of unity carried out
entirely in integer arithmetic.

Degrees in this package stay tiny, so a dense coefficient tuple beats any
sparse cleverness.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Sequence


class IntPoly:
    """Integer-coefficient polynomial, ``coeffs[i]`` the coefficient of q^i.

    Normalized so that there are no trailing zero coefficients; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __divmod__(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over the integers.

        Every quotient coefficient must come out integral (always the case
        for the monic divisors used here); a non-integral step raises.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - len(divisor.coeffs) + 1)
        while len(rem) >= len(divisor.coeffs):
            if rem[-1] == 0:
                rem.pop()
                continue
            q, r = divmod(rem[-1], lead)
            if r:
                raise ValueError(
                    f"leading coefficient {rem[-1]} not divisible by {lead}"
                )
            pos = len(rem) - len(divisor.coeffs)
            quo[pos] = q
            for i, c in enumerate(divisor.coeffs):
                rem[pos + i] -= q * c
            rem.pop()
        return IntPoly(quo), IntPoly(rem)

    def fold(self, modulus: int) -> "IntPoly":
        """Reduce modulo q^modulus - 1 by folding exponents."""
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        out = [0] * modulus
        for k, c in enumerate(self.coeffs):
            out[k % modulus] += c
        return IntPoly(out)

    def evaluate(self, x):
        """Horner evaluation; works for int, float and complex arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pretty(self) -> str:
        """Human-readable form, ascending powers: ``1 + q + 2q^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exp, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if exp == 0:
                term = str(mag)
            else:
                var = "q" if exp == 1 else f"q^{exp}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs), "pretty": self.pretty()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({self.pretty()!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))


def q_integer(x: int) -> IntPoly:
    """[x]_q = 1 + q + ... + q^(x-1); [0]_q is the zero polynomial."""
    if x < 0:
        raise ValueError("q-integer of a negative number")
    return IntPoly((1,) * x)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPoly:
    """Gaussian binomial coefficient as an exact integer polynomial.

    Computed by the recurrence  qbinom(n, k) = qbinom(n-1, k-1)
    + q^k * qbinom(n-1, k), never by rational division.  The result has
    degree k(n-k) and palindromic coefficients, e.g. ``q_binomial(4, 2)``
    is 1 + q + 2q^2 + q^3 + q^4.
    """
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


@lru_cache(maxsize=None)
def cyclotomic(order: int) -> IntPoly:
    """The cyclotomic polynomial of the given order, by dividing q^order - 1
    exactly by the cyclotomic polynomials of all proper divisors."""
    if order < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = IntPoly((-1,) + (0,) * (order - 1) + (1,))
    for d in range(1, order):
        if order % d == 0:
            poly, rem = divmod(poly, cyclotomic(d))
            if not rem.is_zero():
                raise AssertionError(f"cyclotomic division left a remainder at order {order}")
    return poly


def root_of_unity_remainder(p: IntPoly, group_order: int, d: int) -> tuple[int, IntPoly]:
    """Canonical form of p(w^d) for w a primitive root of unity.

    Returns ``(e, r)`` where w^d is a primitive e-th root of unity and r is
    the remainder of the exponent-folded polynomial modulo the e-th
    cyclotomic polynomial; p(w^d) equals r evaluated at any primitive e-th
    root, and is rational precisely when r is constant.
    """
    if group_order < 1:
        raise ValueError("group order must be >= 1")
    d %= group_order
    g = gcd(d, group_order)
    e = group_order // g
    t = d // g if g else 0
    folded = [0] * e
    for k, c in enumerate(p.coeffs):
        folded[(k * t) % e] += c
    _, rem = divmod(IntPoly(folded), cyclotomic(e))
    return e, rem


def eval_at_root_of_unity(p: IntPoly, group_order: int, d: int) -> int | None:
    """Exact value of p at the d-th power of a primitive root of unity of
    the given order, or None when the value is not an integer.

    All arithmetic is over the integers: exponents are folded modulo the
    reduced order, then the fold is reduced modulo the matching cyclotomic
    polynomial; a constant remainder is the exact value.
    """
    _, rem = root_of_unity_remainder(p, group_order, d)
    if rem.degree() > 0:
        return None
    return rem.coeffs[0] if rem.coeffs else 0
