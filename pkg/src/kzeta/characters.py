"""Structure of (Z/mZ)^* and exact Dirichlet character arithmetic.

A character is stored as an exponent vector on a fixed, deterministic set of
generators of (Z/mZ)^*: the smallest primitive root for each odd prime-power
factor, the residue -1 for the factor 4, and the pair (-1, 5) for 2**e with
e >= 3.  Values are abstract exponents: evaluate() returns t with
chi(a) = zeta_ord**t, and consumers materialize zeta_ord**t in whatever
cyclotomic ring they need.  This keeps characters level-free; a character of
order p**b can later be evaluated at any level >= b.

Discrete logarithms run Pohlig-Hellman on the factored generator order with
baby-step giant-step for each prime chunk; all orders in scope are small.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from .arith import factorize, is_prime, valuation


def _bsgs(base: int, target: int, order: int, mod: int) -> int:
    """x in [0, order) with base**x = target (mod mod); base has the given order."""
    if order == 1:
        if target % mod != 1 % mod:
            raise ValueError("dlog does not exist")
        return 0
    m = math.isqrt(order - 1) + 1
    table: dict[int, int] = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * base % mod
    step = pow(base, -m, mod)
    gamma = target % mod
    for i in range(m):
        if gamma in table:
            return (i * m + table[gamma]) % order
        gamma = gamma * step % mod
    raise ValueError("dlog does not exist")


def _dlog_cyclic(
    a: int, g: int, order: int, order_factors: tuple[tuple[int, int], ...], mod: int
) -> int:
    """Discrete log of a in the cyclic group <g> of the given factored order."""
    rem, mods = 0, 1
    for q, e in order_factors:
        qe = q**e
        co = order // qe
        aq = pow(a, co, mod)
        gq = pow(g, co, mod)
        gamma = pow(gq, qe // q, mod)
        x = 0
        for i in range(e):
            h = pow(aq * pow(gq, -x, mod) % mod, qe // q ** (i + 1), mod)
            d = _bsgs(gamma, h, q, mod)
            x += d * q**i
        inv = pow(mods, -1, qe)
        rem = rem + mods * ((x - rem) * inv % qe)
        mods *= qe
    return rem % mods if mods > 1 else 0


def _smallest_primitive_root(q: int, p: int) -> int:
    """Smallest primitive root modulo the odd prime power q = p**e."""
    phi = q // p * (p - 1)
    prime_factors = [r for r, _ in factorize(phi)]
    g = 2
    while True:
        if g % p != 0 and all(pow(g, phi // r, q) != 1 for r in prime_factors):
            return g
        g += 1


@dataclasses.dataclass(frozen=True)
class _LocalGen:
    """One generator of a CRT component, with everything dlog needs."""

    prime_power: int
    residue: int
    order: int
    order_factors: tuple[tuple[int, int], ...]
    kind: str  # 'odd' | 'minus' | 'five'

    def dlog(self, a: int) -> int:
        q = self.prime_power
        a %= q
        if self.kind == "minus":
            return 0 if a % 4 == 1 or q <= 2 else 1
        if self.kind == "five":
            if a % 4 == 3:
                a = (-a) % q
            return _dlog_cyclic(a, 5, self.order, self.order_factors, q)
        return _dlog_cyclic(a, self.residue, self.order, self.order_factors, q)


@dataclasses.dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/mZ)^* as a product of explicit cyclic groups."""

    modulus: int
    generators: tuple[tuple[int, int], ...]  # (residue mod m, order)
    locals_: tuple[_LocalGen, ...]

    @property
    def phi(self) -> int:
        out = 1
        for _, o in self.generators:
            out *= o
        return out

    @property
    def exponent(self) -> int:
        out = 1
        for _, o in self.generators:
            out = math.lcm(out, o)
        return out

    def dlog(self, a: int) -> tuple[int, ...] | None:
        """Exponent vector of a on the generators, or None if gcd(a, m) > 1."""
        if math.gcd(a, self.modulus) != 1:
            return None
        return tuple(loc.dlog(a) for loc in self.locals_)

    def element_from_exponents(self, exps: tuple[int, ...]) -> int:
        out = 1
        for (g, o), e in zip(self.generators, exps):
            out = out * pow(g, e % o, self.modulus) % self.modulus
        return out if self.modulus > 1 else 0


def _crt_lift(local_res: int, q: int, m: int) -> int:
    """Residue mod m that is local_res mod q and 1 mod m/q."""
    rest = m // q
    if rest == 1:
        return local_res % m
    inv = pow(rest, -1, q)
    return (1 + rest * ((local_res - 1) * inv % q)) % m


@functools.lru_cache(maxsize=None)
def unit_group(m: int) -> UnitGroupStructure:
    """CRT decomposition of (Z/mZ)^* with deterministic generators.

    >>> unit_group(7).generators
    ((3, 6),)
    >>> unit_group(8).generators
    ((7, 2), (5, 2))
    """
    if m < 1:
        raise ValueError("modulus must be >= 1, got %r" % (m,))
    gens: list[tuple[int, int]] = []
    locs: list[_LocalGen] = []
    for p, e in factorize(m):
        q = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                locs.append(_LocalGen(4, 3, 2, ((2, 1),), "minus"))
                gens.append((_crt_lift(3, 4, m), 2))
                continue
            locs.append(_LocalGen(q, q - 1, 2, ((2, 1),), "minus"))
            gens.append((_crt_lift(q - 1, q, m), 2))
            o5 = q // 4
            locs.append(_LocalGen(q, 5, o5, ((2, e - 2),), "five"))
            gens.append((_crt_lift(5, q, m), o5))
        else:
            g = _smallest_primitive_root(q, p)
            phi = q // p * (p - 1)
            locs.append(_LocalGen(q, g, phi, tuple(factorize(phi)), "odd"))
            gens.append((_crt_lift(g, q, m), phi))
    return UnitGroupStructure(m, tuple(gens), tuple(locs))


@dataclasses.dataclass(frozen=True)
class DirichletCharacter:
    """Character of (Z/mZ)^* given by exponents on the canonical generators:
    chi(g_i) = zeta_{o_i}**e_i where o_i is the order of g_i."""

    group: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.group.generators):
            raise ValueError("exponent vector does not match generator count")
        normalized = tuple(
            e % o for e, (_, o) in zip(self.exponents, self.group.generators)
        )
        object.__setattr__(self, "exponents", normalized)

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @functools.cached_property
    def order(self) -> int:
        out = 1
        for e, (_, o) in zip(self.exponents, self.group.generators):
            out = math.lcm(out, o // math.gcd(o, e))
        return out

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def evaluate(self, a: int) -> int | None:
        """Exponent t with chi(a) = zeta_{order}**t, or None when gcd(a,m) > 1.

        Completely multiplicative on coprime residues: exponents add mod order.
        """
        ks = self.group.dlog(a)
        if ks is None:
            return None
        ex = self.group.exponent
        s = 0
        for e, k, (_, o) in zip(self.exponents, ks, self.group.generators):
            s += e * k * (ex // o)
        s %= ex
        step = ex // self.order
        if s % step != 0:
            raise AssertionError("character value is not an order-th root of unity")
        return (s // step) % self.order

    @functools.cached_property
    def is_even(self) -> bool:
        """chi(-1) = 1.  Characters of odd order are automatically even."""
        if self.modulus <= 2:
            return True
        return self.evaluate(self.modulus - 1) == 0

    @functools.cached_property
    def conductor(self) -> int:
        """Smallest f | m through which chi factors.

        Computed componentwise: an odd component of order o contributes
        p**(1 + v_p(o)) (or 1 when trivial); the 2-part contributes 4*ord(chi(5))
        when chi(5) != 1, else 4 or 1 by chi(-1).
        """
        f = 1
        i = 0
        locs = self.group.locals_
        while i < len(locs):
            loc = locs[i]
            if loc.kind == "odd":
                o = loc.order
                e = self.exponents[i]
                oc = o // math.gcd(o, e)
                if oc > 1:
                    p = factorize(loc.prime_power)[0][0]
                    f *= p ** (1 + valuation(oc, p))
                i += 1
            elif loc.kind == "minus" and i + 1 < len(locs) and locs[i + 1].kind == "five":
                s, t = self.exponents[i], self.exponents[i + 1]
                o5 = locs[i + 1].order // math.gcd(locs[i + 1].order, t)
                if o5 > 1:
                    f *= 4 * o5
                elif s % 2 == 1:
                    f *= 4
                i += 2
            else:  # lone 'minus' (modulus divisible by 4, not 8)
                if self.exponents[i] % 2 == 1:
                    f *= 4
                i += 1
        return f

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def primitive(self) -> "DirichletCharacter":
        """The primitive character mod conductor inducing chi."""
        f = self.conductor
        if f == self.modulus:
            return self
        target = unit_group(f)
        exps = []
        for g, o in target.generators:
            b = g
            while math.gcd(b, self.modulus) != 1:
                b += f
            t = self.evaluate(b)
            if t is None or (t * o) % self.order != 0:
                raise AssertionError("primitivization failed; conductor is wrong")
            exps.append(t * o // self.order)
        return DirichletCharacter(target, tuple(exps))

    def lift_to(self, m: int) -> "DirichletCharacter":
        """The character mod m (a multiple of the modulus) inducing chi."""
        if m % self.modulus != 0:
            raise ValueError("can only lift to a multiple of the modulus")
        if m == self.modulus:
            return self
        target = unit_group(m)
        exps = []
        for g, o in target.generators:
            t = self.evaluate(g)
            if t is None or (t * o) % self.order != 0:
                raise AssertionError("lift failed; generator not coprime?")
            exps.append(t * o // self.order)
        return DirichletCharacter(target, tuple(exps))

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        m = math.lcm(self.modulus, other.modulus)
        a, b = self.lift_to(m), other.lift_to(m)
        exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
        return DirichletCharacter(a.group, exps).primitive()

    def inverse(self) -> "DirichletCharacter":
        return DirichletCharacter(self.group, tuple(-e for e in self.exponents))

    def __pow__(self, n: int) -> "DirichletCharacter":
        return DirichletCharacter(
            self.group, tuple(e * n for e in self.exponents)
        ).primitive()

    def sort_key(self) -> tuple:
        return (self.modulus, self.exponents)

    def __repr__(self):
        return "DirichletCharacter(mod %d, exponents %r)" % (
            self.modulus,
            list(self.exponents),
        )


def trivial_character() -> DirichletCharacter:
    return DirichletCharacter(unit_group(1), ())


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """A totally real abelian field, given by its group of primitive even
    Dirichlet characters.

    Variants: the real cyclotomic field Q(zeta_m + zeta_m^-1); its maximal
    p-subextension; the degree-p cyclic field inside Q(zeta_ell) for a prime
    ell = 1 mod p; or an explicit closed set of characters.
    """

    kind: str
    m: int = 0
    p: int = 0
    explicit_chars: frozenset = frozenset()

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("real-cyclotomic", 1)

    @staticmethod
    def real_cyclotomic(m: int) -> "FieldSpec":
        if m < 1:
            raise ValueError("m must be >= 1, got %r" % (m,))
        return FieldSpec("real-cyclotomic", m)

    @staticmethod
    def max_p_subextension(m: int, p: int) -> "FieldSpec":
        if m <= 1:
            raise ValueError("m must be > 1, got %r" % (m,))
        if p < 3 or not is_prime(p):
            raise ValueError("p must be an odd prime, got %r" % (p,))
        return FieldSpec("max-p", m, p)

    @staticmethod
    def prime_cyclic_subfield(ell: int, p: int) -> "FieldSpec":
        if p < 3 or not is_prime(p):
            raise ValueError("p must be an odd prime, got %r" % (p,))
        if not is_prime(ell):
            raise ValueError("conductor %r is not prime" % (ell,))
        if ell % p != 1:
            raise ValueError("need ell = 1 (mod p); got ell=%r, p=%r" % (ell, p))
        return FieldSpec("prime-cyclic", ell, p)

    @staticmethod
    def explicit(chars) -> "FieldSpec":
        chars = frozenset(chars)
        for chi in chars:
            if not chi.is_primitive():
                raise ValueError("explicit character sets must be primitive")
            if not chi.is_even:
                raise ValueError("field spec characters must be even")
        for chi in chars:
            if chi.inverse().primitive() not in chars:
                raise ValueError("character set not closed under inversion")
            for psi in chars:
                if (chi * psi) not in chars:
                    raise ValueError("character set not closed under products")
        return FieldSpec("explicit", explicit_chars=chars)

    @functools.cached_property
    def characters(self) -> frozenset:
        """The character group X_F as primitive even characters."""
        if self.kind == "explicit":
            return self.explicit_chars
        if self.kind == "real-cyclotomic":
            if self.m <= 2:
                return frozenset([trivial_character()])
            return frozenset(
                chi.primitive() for chi in _all_characters(self.m) if chi.is_even
            )
        if self.kind == "max-p":
            return frozenset(
                chi.primitive() for chi in _p_power_characters(self.m, self.p)
            )
        if self.kind == "prime-cyclic":
            g = unit_group(self.m)
            (_, o), = g.generators
            step = o // self.p
            return frozenset(
                DirichletCharacter(g, (j * step,)).primitive() for j in range(self.p)
            )
        raise ValueError("unknown field spec kind %r" % (self.kind,))

    def sorted_characters(self) -> list:
        return sorted(self.characters, key=lambda c: c.sort_key())

    @property
    def degree(self) -> int:
        return len(self.characters)

    @property
    def conductor(self) -> int:
        out = 1
        for chi in self.characters:
            out = math.lcm(out, chi.conductor)
        return out

    def group_exponent(self) -> int:
        out = 1
        for chi in self.characters:
            out = math.lcm(out, chi.order)
        return out

    def is_p_group(self, p: int) -> bool:
        return all(
            chi.order == 1 or _is_p_power(chi.order, p) for chi in self.characters
        )

    def describe(self) -> str:
        if self.kind == "real-cyclotomic":
            return "Q(zeta_%d)^+" % self.m if self.m > 2 else "Q"
        if self.kind == "max-p":
            return "max %d-subextension of Q(zeta_%d)^+" % (self.p, self.m)
        if self.kind == "prime-cyclic":
            return "degree-%d subfield of Q(zeta_%d)" % (self.p, self.m)
        return "explicit character group (%d characters)" % len(self.explicit_chars)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _all_characters(m: int):
    g = unit_group(m)
    ranges = [range(o) for _, o in g.generators]
    for exps in _product(ranges):
        yield DirichletCharacter(g, exps)


def _p_power_characters(m: int, p: int):
    # Component exponent e_i gives a p-power-order component iff the prime-to-p
    # part of the generator order divides e_i.
    g = unit_group(m)
    ranges = []
    for _, o in g.generators:
        pc = p ** valuation(o, p) if o % p == 0 else 1
        t = o // pc
        ranges.append(range(0, o, t) if pc > 1 else range(1))
    for exps in _product(ranges):
        yield DirichletCharacter(g, exps)


def _product(ranges):
    if not ranges:
        yield ()
        return
    head, *tail = ranges
    for v in head:
        for rest in _product(tail):
            yield (v,) + rest


def characters_of_field(spec: FieldSpec) -> frozenset:
    """The character group of the field; see FieldSpec.characters."""
    return spec.characters


def ghat_stratum(spec: FieldSpec, p: int, j: int) -> frozenset:
    """Characters of exact order p**j inside a p-group character group."""
    if not spec.is_p_group(p):
        raise ValueError("character group is not a %d-group" % (p,))
    target = p**j
    return frozenset(chi for chi in spec.characters if chi.order == target)
