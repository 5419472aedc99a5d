"""Tests for the exact arithmetic substrate: factoring, polynomials, and the
prime-power cyclotomic ring."""

import math
import random
from fractions import Fraction

import pytest

from kzeta.arith import (
    CyclotomicElement,
    CyclotomicLevel,
    CyclotomicRational,
    Poly,
    cyclotomic_polynomial,
    cyclotomic_polynomial_any,
    embed,
    factorization_string,
    factorize,
    galois_apply,
    is_prime,
    norm,
    pi_valuation,
    primes_up_to,
    rational_part,
    resultant,
    valuation,
)


def brute_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_small_range():
    for n in range(0, 2000):
        assert is_prime(n) == brute_is_prime(n), n


def test_is_prime_known_values():
    # Mersenne prime and primes just above 10**6 / below 10**9
    assert is_prime(2**61 - 1)
    assert is_prime(1000003)
    assert is_prime(1000033)
    assert is_prime(999999937)
    # Carmichael numbers and the classic strong-pseudoprime trap
    assert not is_prime(561)
    assert not is_prime(41041)
    assert not is_prime(3215031751)
    assert not is_prime(2**61 + 1)  # divisible by 3


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    ps = primes_up_to(10000)
    assert ps == [n for n in range(10001) if brute_is_prime(n)]


def test_factorize_known():
    assert factorize(1) == []
    assert factorize(2244096) == [(2, 9), (3, 2), (487, 1)]
    assert factorize(142490119) == [(142490119, 1)]
    assert factorize(580922038681600) == [(2, 17), (5, 2), (7, 1), (11, 1), (2302381, 1)]


def test_factorize_needs_rho():
    # both factors exceed the trial division cutoff
    n = 1000003 * 1000033
    assert factorize(n) == [(1000003, 1), (1000033, 1)]
    assert factorize(n, seed=12345) == [(1000003, 1), (1000033, 1)]


def test_factorize_round_trip():
    rng = random.Random(7)
    samples = list(range(2, 400)) + [rng.randrange(10**6, 10**12) for _ in range(25)]
    for n in samples:
        fac = factorize(n)
        prod = 1
        for p, e in fac:
            assert is_prime(p)
            assert e >= 1
            prod *= p**e
        assert prod == n
        assert [p for p, _ in fac] == sorted(p for p, _ in fac)


def test_factorization_string():
    assert factorization_string(factorize(1)) == "1"
    assert factorization_string(factorize(2244096)) == "2^9·3^2·487"
    assert factorization_string(factorize(79)) == "79"
    assert factorization_string(None) == ""


def test_valuation():
    assert valuation(160, 2) == 5
    assert valuation(160, 5) == 1
    assert valuation(7, 3) == 0
    assert valuation(3**12, 3) == 12
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_poly_basics():
    x = Poly.x()
    assert ((x - 1) * (x + 1)).coeffs == (-1, 0, 1)
    assert (x**2 - 1) // (x - 1) == Poly((1, 1))
    assert Poly((1, 2)).evaluate(3) == 7
    assert Poly().degree == -1
    assert Poly().is_zero()
    assert Poly((0, 0)).is_zero()
    assert (x**3).degree == 3
    assert Poly((Fraction(1, 2), 1)).evaluate(Fraction(1, 2)) == 1
    assert Poly((1, Fraction(1, 3))).denominator_lcm() == 3


def test_poly_divmod_euclidean():
    rng = random.Random(11)
    for _ in range(50):
        f = Poly([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(rng.randrange(1, 7))])
        g = Poly([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)) for _ in range(rng.randrange(1, 5))])
        if g.is_zero():
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_poly_int_division_exactness():
    x = Poly.x()
    with pytest.raises(ValueError):
        divmod(x**2 + 1, Poly((2, 2)))
    q, r = divmod(x**2 - 1, x - 1)
    assert q == Poly((1, 1)) and r.is_zero()


def test_cyclotomic_polynomials():
    x = Poly.x()
    assert cyclotomic_polynomial(2, 1) == x + 1
    assert cyclotomic_polynomial(3, 1) == Poly((1, 1, 1))
    assert cyclotomic_polynomial(2, 2) == x**2 + 1
    assert cyclotomic_polynomial(3, 2) == x**6 + x**3 + 1
    assert cyclotomic_polynomial(5, 1) == Poly((1, 1, 1, 1, 1))
    assert cyclotomic_polynomial_any(1) == x - 1
    assert cyclotomic_polynomial_any(2) == x + 1
    assert cyclotomic_polynomial_any(6) == Poly((1, -1, 1))
    assert cyclotomic_polynomial_any(12) == Poly((1, 0, -1, 0, 1))
    assert cyclotomic_polynomial_any(9) == cyclotomic_polynomial(3, 2)


def test_cyclotomic_product_identity():
    # prod over d | n of Phi_d equals x**n - 1
    x = Poly.x()
    for n in range(1, 31):
        prod = Poly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial_any(d)
        assert prod == x**n - 1, n


def sylvester_det(f, g):
    # independent resultant: fraction-based Gaussian elimination on the
    # Sylvester matrix of f and g
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in fc] + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in gc] + [Fraction(0)] * (m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return int(det)


def test_resultant_against_sylvester_determinant():
    rng = random.Random(23)
    for _ in range(60):
        f = Poly([rng.randrange(-10, 11) for _ in range(rng.randrange(2, 7))])
        g = Poly([rng.randrange(-10, 11) for _ in range(rng.randrange(2, 6))])
        if f.degree < 1 or g.degree < 1:
            continue
        assert resultant(f, g) == sylvester_det(f, g)


def test_resultant_known_values():
    x = Poly.x()
    assert resultant(x**2 + 1, x**2 - 2) == 9
    # Res(Phi_p, x - 1) = Phi_p(1) = p for monic Phi_p
    for p in (3, 5, 7, 11):
        assert resultant(cyclotomic_polynomial(p, 1), x - 1) == p
    # multiplicativity in the second argument
    f = x**3 + 2 * x - 1
    g = x**2 - 3
    h = x + 5
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_level_validation():
    with pytest.raises(ValueError):
        CyclotomicLevel(4, 1)
    with pytest.raises(ValueError):
        CyclotomicLevel(3, 0)
    lv = CyclotomicLevel(3, 2)
    assert lv.modulus == 9
    assert lv.degree == 6
    assert lv.minimal_polynomial() == cyclotomic_polynomial(3, 2)


def test_element_reduction():
    lv = CyclotomicLevel(3, 1)
    # zeta**2 = -1 - zeta
    assert CyclotomicElement.zeta_power(lv, 2).coeffs == (-1, -1)
    assert CyclotomicElement.zeta_power(lv, 3).coeffs == (1, 0)
    assert CyclotomicElement.zeta_power(lv, -1).coeffs == (-1, -1)
    lv5 = CyclotomicLevel(5, 1)
    z = CyclotomicElement.zeta_power(lv5, 1)
    assert (z**5).coeffs == (1, 0, 0, 0)
    # 1 + zeta + ... + zeta**4 = 0
    total = CyclotomicElement.zero(lv5)
    for e in range(5):
        total = total + CyclotomicElement.zeta_power(lv5, e)
    assert total.is_zero()


def test_ramified_prime_factorization():
    # prod over a in (Z/p)^* of (1 - zeta**a) = p
    for p in (3, 5, 7):
        lv = CyclotomicLevel(p, 1)
        one = CyclotomicElement.integer(lv, 1)
        prod = one
        for a in range(1, p):
            prod = prod * (one - CyclotomicElement.zeta_power(lv, a))
        assert prod.is_rational()
        assert prod.coeffs[0] == p


def test_norm_multiplicative():
    rng = random.Random(5)
    lv = CyclotomicLevel(5, 1)
    for _ in range(20):
        x = CyclotomicElement.make(lv, [rng.randrange(-5, 6) for _ in range(4)])
        y = CyclotomicElement.make(lv, [rng.randrange(-5, 6) for _ in range(4)])
        assert norm(x * y) == norm(x) * norm(y)
    assert norm(CyclotomicElement.integer(lv, 3)) == 81
    assert norm(CyclotomicElement.zero(lv)) == 0


def test_galois_apply():
    lv = CyclotomicLevel(7, 1)
    rng = random.Random(3)
    x = CyclotomicElement.make(lv, [rng.randrange(-4, 5) for _ in range(6)])
    y = CyclotomicElement.make(lv, [rng.randrange(-4, 5) for _ in range(6)])
    for a in (2, 3, 5):
        assert galois_apply(x * y, a) == galois_apply(x, a) * galois_apply(y, a)
        assert norm(galois_apply(x, a)) == norm(x)
    with pytest.raises(ValueError):
        galois_apply(x, 7)


def test_embed_scales_norm_and_valuation():
    lv = CyclotomicLevel(3, 1)
    x = CyclotomicElement.make(lv, (1, 2))
    up = embed(x, 3)
    assert up.level == CyclotomicLevel(3, 3)
    assert norm(up) == norm(x) ** 9
    assert pi_valuation(embed(CyclotomicElement.make(lv, (1, -1)), 2)) == 3 * pi_valuation(
        CyclotomicElement.make(lv, (1, -1))
    )
    assert embed(x, 1) == x
    with pytest.raises(ValueError):
        embed(up, 1)


def test_level_mismatch_raises():
    a = CyclotomicElement.integer(CyclotomicLevel(3, 1), 1)
    b = CyclotomicElement.integer(CyclotomicLevel(5, 1), 1)
    with pytest.raises(ValueError):
        a + b


def test_pi_valuation():
    for p, n in ((3, 1), (5, 1), (3, 2), (7, 1)):
        lv = CyclotomicLevel(p, n)
        pi = CyclotomicElement.integer(lv, 1) - CyclotomicElement.zeta_power(lv, 1)
        assert pi_valuation(pi) == 1
        # the rational prime is totally ramified: v_pi(p) = phi(p**n)
        assert pi_valuation(CyclotomicElement.integer(lv, p)) == lv.degree
        assert pi_valuation(CyclotomicElement.integer(lv, 1)) == 0
    lv = CyclotomicLevel(3, 1)
    assert pi_valuation(CyclotomicElement.zero(lv)) == math.inf
    assert pi_valuation(CyclotomicRational.from_rational(lv, Fraction(1, 3))) == -2
    assert pi_valuation(CyclotomicRational.from_rational(lv, Fraction(2, 5))) == 0


def test_cyclotomic_rational_normalization():
    lv = CyclotomicLevel(3, 1)
    x = CyclotomicRational.make(CyclotomicElement.make(lv, (2, 4)), -6)
    assert x.denominator == 3
    assert x.numerator.coeffs == (-1, -2)
    with pytest.raises(ZeroDivisionError):
        CyclotomicRational.make(CyclotomicElement.integer(lv, 1), 0)


def test_cyclotomic_rational_arithmetic_tracks_fractions():
    lv = CyclotomicLevel(5, 1)
    rng = random.Random(17)
    for _ in range(20):
        qa = Fraction(rng.randrange(-20, 21), rng.randrange(1, 9))
        qb = Fraction(rng.randrange(-20, 21), rng.randrange(1, 9))
        a = CyclotomicRational.from_rational(lv, qa)
        b = CyclotomicRational.from_rational(lv, qb)
        assert rational_part(a + b) == qa + qb
        assert rational_part(a - b) == qa - qb
        assert rational_part(a * b) == qa * qb
        assert rational_part(a.scale_rational(qb)) == qa * qb


def test_rational_part_rejects_irrational():
    lv = CyclotomicLevel(3, 1)
    x = CyclotomicRational.make(CyclotomicElement.make(lv, (1, 1)), 2)
    with pytest.raises(ValueError):
        rational_part(x)
