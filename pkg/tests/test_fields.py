import random

import pytest

from tracecodes import (
    irreducible_polynomials,
    is_irreducible,
    legendre,
    make_field,
    prime_factors,
)
from tracecodes.errors import (
    DegreeTooSmallError,
    EvenCharacteristicError,
    NotPrimeError,
    SizeCapExceededError,
)


def test_prime_field_f3():
    ctx = make_field(3, 1)
    assert ctx.r == 3
    assert ctx.modulus == (0, 1)
    assert ctx.alpha == 2  # smallest generator of F_3^*
    assert ctx.trace(2) == 2


def test_make_field_is_deterministic():
    a = make_field(3, 3)
    b = make_field(3, 3)
    assert a.modulus == b.modulus == (1, 2, 0, 1)
    assert a.alpha == b.alpha
    assert a.exp == b.exp
    assert a.trace_table == b.trace_table


def test_construction_errors():
    with pytest.raises(EvenCharacteristicError):
        make_field(2, 4)
    with pytest.raises(NotPrimeError):
        make_field(9, 2)
    with pytest.raises(NotPrimeError):
        make_field(1, 1)
    with pytest.raises(DegreeTooSmallError):
        make_field(3, 0)
    with pytest.raises(SizeCapExceededError):
        make_field(3, 20)
    with pytest.raises(ValueError):
        make_field(3, 2, modulus=(0, 0, 1))  # x^2 is reducible
    with pytest.raises(ValueError):
        make_field(3, 2, modulus=(1, 1))  # wrong degree


def test_field_axioms_sampled(fields):
    ctx = fields(3, 3)
    rng = random.Random(1)
    for _ in range(200):
        x, y, z = (rng.randrange(ctx.r) for _ in range(3))
        assert ctx.add(x, y) == ctx.add(y, x)
        assert ctx.mul(x, y) == ctx.mul(y, x)
        assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))
        assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
        assert ctx.add(x, 0) == x and ctx.mul(x, 1) == x
        assert ctx.add(x, ctx.neg(x)) == 0
    for x in range(1, ctx.r):
        assert ctx.mul(x, ctx.inv(x)) == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_primitive_element_order(fields):
    ctx = fields(5, 2)
    assert ctx.pow(ctx.alpha, 24) == 1
    for q in prime_factors(24):
        assert ctx.pow(ctx.alpha, 24 // q) != 1


def test_trace_values_and_surjectivity(fields):
    for p, m in [(3, 3), (5, 2), (3, 4), (5, 4)]:
        ctx = fields(p, m)
        assert ctx.trace(0) == 0
        assert ctx.trace(1) == m % p
        counts = [0] * p
        for x in range(ctx.r):
            counts[ctx.trace(x)] += 1
        assert counts == [p ** (m - 1)] * p


def test_trace_frobenius_invariance_and_linearity(fields):
    ctx = fields(3, 4)
    rng = random.Random(2)
    for x in range(ctx.r):
        assert ctx.trace(ctx.pow(x, 3)) == ctx.trace(x)
    for _ in range(100):
        x, y = rng.randrange(ctx.r), rng.randrange(ctx.r)
        assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % 3


def test_trace_against_frobenius_sum(fields):
    # independent oracle: sum of x^(p^i) must land in the prime subfield
    # and agree with the table
    for p, m in [(3, 3), (5, 2)]:
        ctx = fields(p, m)
        for x in range(ctx.r):
            acc = x
            frob = x
            for _ in range(m - 1):
                frob = ctx.pow(frob, p)
                acc = ctx.add(acc, frob)
            assert acc < p
            assert acc == ctx.trace(x)


def test_legendre_values():
    assert [legendre(a, 5) for a in range(5)] == [0, 1, -1, -1, 1]
    assert legendre(-3, 7) == legendre(4, 7) == 1
    assert legendre(-3, 5) == legendre(2, 5) == -1


def test_quadratic_character(fields):
    ctx = fields(5, 4)
    assert ctx.quadratic_character(0) == 0
    assert ctx.quadratic_character(ctx.alpha) == -1
    rng = random.Random(3)
    for _ in range(1000):
        x, y = rng.randrange(1, ctx.r), rng.randrange(1, ctx.r)
        assert ctx.quadratic_character(ctx.mul(x, y)) == \
            ctx.quadratic_character(x) * ctx.quadratic_character(y)
    # agrees with the power definition
    for x in range(1, ctx.r):
        want = 1 if ctx.pow(x, (ctx.r - 1) // 2) == 1 else -1
        assert ctx.quadratic_character(x) == want


def test_quadratic_character_restriction(fields):
    # on the prime subfield the extension character is the m-th power of
    # the prime-field one
    for p, m in [(3, 3), (5, 4), (7, 3)]:
        ctx = fields(p, m)
        for c in range(1, p):
            assert ctx.quadratic_character(c) == legendre(c, p) ** m


def test_irreducible_census():
    # counts of monic irreducible polynomials (necklace formula values)
    assert sum(1 for _ in irreducible_polynomials(3, 2)) == 3
    assert sum(1 for _ in irreducible_polynomials(3, 3)) == 8
    assert sum(1 for _ in irreducible_polynomials(3, 4)) == 18
    assert sum(1 for _ in irreducible_polynomials(5, 2)) == 10


def test_irreducible_against_root_search():
    # for degree <= 3 irreducibility is exactly "no roots"
    for p, m in [(3, 2), (3, 3), (5, 2), (7, 3)]:
        for tail in range(p**m):
            coeffs = []
            t = tail
            for _ in range(m):
                t, c = divmod(t, p)
                coeffs.append(c)
            coeffs.append(1)
            has_root = any(
                sum(c * pow(x, j, p) for j, c in enumerate(coeffs)) % p == 0
                for x in range(p))
            assert is_irreducible(coeffs, p) == (not has_root)


def test_element_encoding_roundtrip(fields):
    ctx = fields(3, 4)
    for x in range(ctx.r):
        assert ctx.index(ctx.coeffs(x)) == x
    assert ctx.element(7) == 7 % 3
    assert ctx.coeffs(1) == (1, 0, 0, 0)


def test_modulus_override(fields):
    gen = irreducible_polynomials(5, 3)
    next(gen)
    alt = next(gen)
    ctx = make_field(5, 3, modulus=alt)
    assert ctx.modulus == alt
    for x in range(1, ctx.r):
        assert ctx.mul(x, ctx.inv(x)) == 1
