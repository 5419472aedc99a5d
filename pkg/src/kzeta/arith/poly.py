"""Dense univariate polynomials with exact coefficients.

Coefficients are stored lowest degree first in a trimmed tuple (no trailing
zeros, zero polynomial is the empty tuple).  Entries may be int or
fractions.Fraction; the two mix freely.  Includes cyclotomic polynomials and
an integer resultant (fraction-free Gaussian elimination on the Sylvester
matrix), which is how absolute norms of cyclotomic integers are computed.
"""

from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction

from .factor import is_prime


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class Poly:
    """Polynomial sum(coeffs[i] * x**i).

    >>> x = Poly.x()
    >>> (x - 1) * (x + 1)
    Poly([-1, 0, 1])
    >>> (x**2 - 1) // (x - 1)
    Poly([1, 1])
    >>> Poly([1, 2]).evaluate(3)
    7
    """

    coeffs: tuple

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def const(c) -> "Poly":
        return Poly((c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Exact long division; raises if a coefficient step is inexact.

        Always succeeds over Fraction coefficients or for monic integer
        divisors, which covers every divisor used here.
        """
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return Poly(), self
        quo = [0] * dq
        for i in range(dq - 1, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            q = c / lead if isinstance(c, Fraction) or isinstance(lead, Fraction) else None
            if q is None:
                q, r = divmod(c, lead)
                if r != 0:
                    raise ValueError("inexact polynomial division over the integers")
            quo[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= q * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other):
        _, r = divmod(self, other)
        return r

    def evaluate(self, v):
        """Horner evaluation at v (int or Fraction)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    def denominator_lcm(self) -> int:
        """lcm of coefficient denominators (1 for integer polynomials)."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def __repr__(self):
        return "Poly(%s)" % (list(self.coeffs),)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _coerce(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly((v,))


def cyclotomic_polynomial(p: int, n: int) -> Poly:
    """Phi_{p**n} = sum_{j<p} x**(j * p**(n-1)), for p prime, n >= 1.

    >>> cyclotomic_polynomial(3, 2).coeffs
    (1, 0, 0, 1, 0, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic level exponent must be >= 1, got %r" % (n,))
    if not is_prime(p):
        raise ValueError("cyclotomic level base %r is not prime" % (p,))
    q = p ** (n - 1)
    coeffs = [0] * ((p - 1) * q + 1)
    for j in range(p):
        coeffs[j * q] = 1
    return Poly(coeffs)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial_any(d: int) -> Poly:
    """Phi_d for arbitrary d >= 1, via (x**d - 1) / prod over proper divisors.

    >>> cyclotomic_polynomial_any(15).coeffs
    (1, -1, 0, 1, -1, 1, 0, -1, 1)
    >>> cyclotomic_polynomial_any(2).coeffs
    (1, 1)
    """
    if d < 1:
        raise ValueError("d must be positive")
    num = Poly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            q, r = divmod(num, cyclotomic_polynomial_any(e))
            assert r.is_zero()
            num = q
    return num


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) for integer polynomials, as a determinant of the Sylvester
    matrix computed by the Bareiss fraction-free algorithm.

    For monic f this equals the product of g over the roots of f, i.e. the
    absolute norm of g(alpha) in Z[alpha] = Z[x]/(f).

    >>> resultant(cyclotomic_polynomial(3, 2), Poly([1, -1]))
    3
    >>> resultant(cyclotomic_polynomial(3, 1), Poly([2]))
    4
    """
    n, m = f.degree, g.degree
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - m - 1 - i))
    return _bareiss_det(rows)


def _bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
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
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
