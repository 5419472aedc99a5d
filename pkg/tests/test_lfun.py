"""Tests for generalized Bernoulli numbers, L-values, and zeta values.

The heavy cross-checks here are deliberately redundant routes: a direct
definition-unrolling oracle for B_{n,chi}, and orbit products computed as ring
element products at one cyclotomic level versus the resultant-based rational
recombination."""

import math
from fractions import Fraction

import pytest

from kzeta.arith import (
    CyclotomicElement,
    CyclotomicLevel,
    CyclotomicRational,
    galois_apply,
    norm,
    pi_valuation,
    rational_part,
)
from kzeta.characters import DirichletCharacter, FieldSpec, trivial_character, unit_group
from kzeta.lfun import (
    char_bernoulli_pi_valuation,
    generalized_bernoulli,
    l_value_negative,
    product_valuation,
    zeta_value_negative,
)
from kzeta.powersum import bernoulli_number, bernoulli_polynomial


def prime_power_base(d):
    for p in range(2, d + 1):
        if d % p == 0:
            q = d
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def expansion_oracle(chi, n):
    """B_{n,chi} = f**(n-1) sum_a chi(a) B_n(a/f), unrolled literally."""
    f = chi.conductor
    d = chi.order
    p = prime_power_base(d)
    b = 0
    while p**b < d:
        b += 1
    level = CyclotomicLevel(p, b) if d > 1 else CyclotomicLevel(2, 1)
    zeta_order = level.modulus
    poly = bernoulli_polynomial(n)
    total = CyclotomicRational.from_rational(level, Fraction(0))
    for a in range(1, f + 1):
        t = chi.evaluate(a)
        if t is None:
            continue
        value = poly.evaluate(Fraction(a, f)) * Fraction(f) ** (n - 1)
        root = CyclotomicElement.zeta_power(level, t * (zeta_order // d))
        total = total + CyclotomicRational.make(root, 1).scale_rational(value)
    return total


def all_primitive_prime_power_chars(f):
    g = unit_group(f)
    tuples = [()]
    for _, order in g.generators:
        tuples = [t + (e,) for t in tuples for e in range(order)]
    out = []
    for exps in tuples:
        chi = DirichletCharacter(g, exps)
        if chi.is_primitive() and chi.order > 1 and prime_power_base(chi.order):
            out.append(chi)
    return out


def test_trivial_character_gives_bernoulli_numbers():
    for n in range(2, 13):
        value = generalized_bernoulli(trivial_character(), n)
        assert rational_part(value) == bernoulli_number(n)
    lifted = generalized_bernoulli(trivial_character(), 4, CyclotomicLevel(3, 2))
    assert lifted.level == CyclotomicLevel(3, 2)
    assert rational_part(lifted) == Fraction(-1, 30)


def test_generalized_bernoulli_against_expansion():
    for f in (5, 7, 8, 9, 11, 16):
        for chi in all_primitive_prime_power_chars(f):
            for n in (2, 3, 4, 6):
                got = generalized_bernoulli(chi, n)
                want = expansion_oracle(chi, n)
                assert got.level == want.level, (f, chi.exponents, n)
                assert (got - want).is_zero(), (f, chi.exponents, n)


def test_parity_vanishing():
    # B_{n,chi} = 0 exactly when chi(-1) != (-1)**n (for n >= 2)
    for f in (5, 7, 8, 9, 11):
        for chi in all_primitive_prime_power_chars(f):
            for n in (2, 3, 4, 5):
                value = generalized_bernoulli(chi, n)
                vanishes = value.is_zero()
                mismatch = chi.is_even != (n % 2 == 0)
                assert vanishes == mismatch, (f, chi.exponents, n)


def test_quadratic_character_mod_5():
    # hand computation: B_2(x) = x^2 - x + 1/6 at a/5 summed with signs
    # (+,-,-,+) gives 4/25, so B_{2,chi} = 5 * 4/25 = 4/5
    g = unit_group(5)
    chi = DirichletCharacter(g, (2,))
    assert chi.order == 2
    assert chi.is_even
    value = generalized_bernoulli(chi, 2)
    assert rational_part(value) == Fraction(4, 5)
    assert rational_part(l_value_negative(chi, 1)) == Fraction(-2, 5)


def test_cubic_character_mod_7_tenth_bernoulli():
    # independently derived: B_{10,chi} = (36199840 - 28945220 zeta_3)/7
    # with absolute norm 456580929948400/7
    g = unit_group(7)
    chi = DirichletCharacter(g, (2,))
    assert chi.order == 3
    value = generalized_bernoulli(chi, 10)
    level = CyclotomicLevel(3, 1)
    expected = CyclotomicRational.make(
        CyclotomicElement.make(level, (36199840, -28945220)), 7
    )
    assert (value - expected).is_zero()
    assert Fraction(norm(value.numerator), value.denominator**2) == Fraction(
        456580929948400, 7
    )


def test_galois_equivariance():
    g = unit_group(11)
    chi = DirichletCharacter(g, (2,))  # order 5
    for n in (2, 4, 6):
        base = generalized_bernoulli(chi, n)
        for a in (2, 3, 4):
            conj = generalized_bernoulli(chi**a, n)
            mapped = CyclotomicRational.make(
                galois_apply(base.numerator, a), base.denominator
            )
            assert (conj - mapped).is_zero(), (n, a)


def test_requires_primitive_and_prime_power_order():
    g = unit_group(9)
    imprimitive = DirichletCharacter(g, (3,)).primitive().lift_to(9)
    if imprimitive.conductor != imprimitive.modulus:
        with pytest.raises(ValueError):
            generalized_bernoulli(imprimitive, 2)
    g13 = unit_group(13)
    order12 = DirichletCharacter(g13, (1,))
    assert order12.order == 12
    with pytest.raises(ValueError):
        generalized_bernoulli(order12, 2)
    with pytest.raises(ValueError):
        generalized_bernoulli(trivial_character(), 1)


def test_level_escalation_scales_valuation():
    g = unit_group(7)
    chi = DirichletCharacter(g, (2,))  # order 3, conductor 7
    for k in (1, 5):
        base = char_bernoulli_pi_valuation(chi, k)
        for n_level in (2, 3):
            scaled = char_bernoulli_pi_valuation(chi, k, n_level)
            assert scaled == base * 3 ** (n_level - 1), (k, n_level)
    with pytest.raises(ValueError):
        char_bernoulli_pi_valuation(chi, 1, 0)
    with pytest.raises(ValueError):
        char_bernoulli_pi_valuation(trivial_character(), 1)


def test_rational_zeta_values():
    q = FieldSpec.rationals()
    known = {
        1: Fraction(-1, 12),
        3: Fraction(1, 120),
        5: Fraction(-1, 252),
        7: Fraction(1, 240),
        9: Fraction(-1, 132),
        11: Fraction(691, 32760),
    }
    for k, expected in known.items():
        assert zeta_value_negative(q, k) == expected
    with pytest.raises(ValueError):
        zeta_value_negative(q, 2)


def test_real_quadratic_zeta():
    # zeta_{Q(sqrt5)}(-1) = zeta(-1) L(chi_5, -1) = (-1/12)(-2/5) = 1/30
    spec = FieldSpec.real_cyclotomic(5)
    assert zeta_value_negative(spec, 1) == Fraction(1, 30)


def galois_orbits(chars):
    remaining = {c for c in chars if not c.is_trivial()}
    orbits = []
    while remaining:
        chi = next(iter(remaining))
        orbit = {chi**a for a in range(1, chi.order) if math.gcd(a, chi.order) == 1}
        assert orbit <= remaining
        remaining -= orbit
        orbits.append(sorted(orbit, key=lambda c: c.sort_key()))
    return orbits


def test_zeta_matches_levelwise_orbit_products():
    # recombine each Galois orbit by multiplying ring elements at one
    # cyclotomic level, then compare with the resultant-based route
    cases = [
        (FieldSpec.real_cyclotomic(11), 1),
        (FieldSpec.real_cyclotomic(11), 3),
        (FieldSpec.real_cyclotomic(16), 1),
        (FieldSpec.real_cyclotomic(19), 1),
        (FieldSpec.prime_cyclic_subfield(7, 3), 1),
        (FieldSpec.prime_cyclic_subfield(7, 3), 5),
        (FieldSpec.max_p_subextension(133, 3), 1),
    ]
    for spec, k in cases:
        total = Fraction(-bernoulli_number(k + 1), k + 1)
        for orbit in galois_orbits(spec.sorted_characters()):
            prod = None
            for chi in orbit:
                value = l_value_negative(chi, k)
                prod = value if prod is None else prod * value
            total *= rational_part(prod)
        assert total == zeta_value_negative(spec, k), (spec.describe(), k)


def test_congruence_valuations():
    # order-5 characters at conductors 11, 31, 41: v_pi(B_2) >= 1
    for ell in (11, 31, 41):
        spec = FieldSpec.prime_cyclic_subfield(ell, 5)
        for chi in spec.sorted_characters():
            if chi.is_trivial():
                continue
            assert char_bernoulli_pi_valuation(chi, 1) >= 1, ell
    # order-3 characters at conductors 19, 37: level 1 gives >= 1, level 2
    # scales to >= 3
    for ell in (19, 37):
        spec = FieldSpec.prime_cyclic_subfield(ell, 3)
        for chi in spec.sorted_characters():
            if chi.is_trivial():
                continue
            assert char_bernoulli_pi_valuation(chi, 1, 1) >= 1, ell
            assert char_bernoulli_pi_valuation(chi, 1, 2) >= 3, ell
    # contrast: the order-3 character of conductor 7 has valuation 0
    g = unit_group(7)
    chi = DirichletCharacter(g, (2,))
    assert char_bernoulli_pi_valuation(chi, 1) == 0


def test_product_valuation():
    spec = FieldSpec.prime_cyclic_subfield(11, 5)
    assert product_valuation(spec, 5, 1) == 1
    spec = FieldSpec.max_p_subextension(29, 7)
    assert product_valuation(spec, 7, 3) == 1
    spec = FieldSpec.max_p_subextension(133, 3)
    value = product_valuation(spec, 3, 1)
    assert value >= 6
    with pytest.raises(ValueError):
        product_valuation(FieldSpec.real_cyclotomic(11), 5, 1)
    with pytest.raises(ValueError):
        product_valuation(FieldSpec.prime_cyclic_subfield(11, 5), 5, 5)
    with pytest.raises(ValueError):
        product_valuation(FieldSpec.prime_cyclic_subfield(11, 5), 5, 2)


def test_product_valuation_matches_direct_product():
    # v_5 of the rational orbit product equals the normalized sum
    spec = FieldSpec.prime_cyclic_subfield(11, 5)
    prod = None
    for chi in spec.sorted_characters():
        if chi.is_trivial():
            continue
        value = generalized_bernoulli(chi, 2)
        prod = value if prod is None else prod * value
    rational = rational_part(prod)
    v5 = 0
    num, den = rational.numerator, rational.denominator
    while num % 5 == 0:
        num //= 5
        v5 += 1
    while den % 5 == 0:
        den //= 5
        v5 -= 1
    assert product_valuation(spec, 5, 1) == v5


def test_vanishing_raises_in_valuation():
    # odd character, even index k+1 would vanish; k even is rejected before
    g = unit_group(5)
    chi = DirichletCharacter(g, (1,))  # order 4, odd
    with pytest.raises(ArithmeticError):
        char_bernoulli_pi_valuation(chi, 1)
