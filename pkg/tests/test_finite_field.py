import random

import pytest

from hassecount import finite_field as ff
from hassecount.errors import NotASquare, NotPrime, ReduciblePolynomial, SpecMismatch


def poly_has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def brute_order(spec, enc):
    n = 1
    acc = enc
    while acc != 1:
        acc = spec.mul_enc(acc, enc)
        n += 1
    return n


# --- spec construction -----------------------------------------------------------

def test_default_modulus_f4():
    # oracle: a quadratic over F_2 is irreducible iff it has no root;
    # x^2, x^2+1, x^2+x all have roots, so x^2+x+1 is the only candidate
    assert ff.make_spec(2, 2).modulus == (1, 1, 1)
    for cand in [(0, 0, 1), (1, 0, 1), (0, 1, 1)]:
        assert poly_has_root(cand, 2)
    assert not poly_has_root((1, 1, 1), 2)


def test_default_modulus_f49_smallest_encoding():
    spec = ff.make_spec(7, 2)
    assert spec.modulus == (1, 0, 1)  # x^2 + 1
    # oracle: scan in encoding order; x^2 has a root, x^2+1 does not
    assert poly_has_root((0, 0, 1), 7)
    assert not poly_has_root((1, 0, 1), 7)


@pytest.mark.parametrize(
    "p,k,modulus",
    [
        (2, 1, (0, 1)),
        (3, 2, (1, 0, 1)),
        (5, 2, (2, 0, 1)),
        (2, 3, (1, 1, 0, 1)),
        (3, 3, (1, 2, 0, 1)),
        (2, 4, (1, 1, 0, 0, 1)),
        (11, 2, (1, 0, 1)),
    ],
)
def test_default_moduli_frozen(p, k, modulus):
    spec = ff.make_spec(p, k)
    assert spec.modulus == modulus
    assert spec.q == p**k
    if 2 <= k <= 3:
        # root-freeness is a complete irreducibility oracle in degrees 2 and 3
        assert not poly_has_root(modulus, p)


def test_make_spec_errors():
    with pytest.raises(NotPrime):
        ff.make_spec(6)
    with pytest.raises(ReduciblePolynomial):
        ff.make_spec(2, 2, (1, 0, 1))  # x^2+1 = (x+1)^2 over F_2
    with pytest.raises(ReduciblePolynomial):
        ff.make_spec(2, 2, (1, 1, 2))  # not reduced/monic over F_2


def test_supplied_modulus_roundtrip():
    spec = ff.make_spec(5, 2, (3, 0, 1))  # x^2+3, irreducible since -3=2 is a non-square
    a = spec.element([0, 1])
    assert (a * a).enc == spec.neg_enc(3)


# --- arithmetic ------------------------------------------------------------------

def test_add_examples():
    f5 = ff.make_spec(5)
    assert (f5.element(3) + f5.element(4)).enc == 2
    f4 = ff.make_spec(2, 2)
    assert (f4.element(2) + f4.element(3)).enc == 1
    a = f4.element(2)
    assert (a + f4.zero()) == a


def test_mul_inv_pow_examples():
    f7 = ff.make_spec(7)
    assert f7.element(3).inverse().enc == 5
    f4 = ff.make_spec(2, 2)
    assert (f4.element(2) * f4.element(2)).enc == 3
    for spec in (f7, f4):
        for enc in range(1, spec.q):
            assert spec.pow_enc(enc, spec.q - 1) == 1
    assert f7.pow_enc(0, 0) == 1


def test_division_by_zero():
    f7 = ff.make_spec(7)
    with pytest.raises(ZeroDivisionError):
        f7.element(1) / f7.element(0)


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        ff.make_spec(5).element(1) + ff.make_spec(7).element(1)


# --- squares ---------------------------------------------------------------------

def test_is_square_examples():
    f7 = ff.make_spec(7)
    squares = {x * x % 7 for x in range(7)}
    assert squares == {0, 1, 2, 4}
    assert not ff.is_square(f7.element(3))
    assert ff.is_square(f7.element(0))
    f16 = ff.make_spec(2, 4)
    assert all(ff.is_square(f16.element(a)) for a in range(16))


def test_sqrt_examples():
    f7 = ff.make_spec(7)
    roots = sorted(s for s in range(7) if s * s % 7 == 2)
    assert roots == [3, 4]
    assert ff.sqrt(f7.element(2)).enc == 3  # smaller encoding wins
    assert ff.sqrt(f7.element(0)).enc == 0
    f4 = ff.make_spec(2, 2)
    assert ff.sqrt(f4.element(2)).enc == 3
    with pytest.raises(NotASquare):
        ff.sqrt(f7.element(3))


@pytest.mark.parametrize("q", [3, 5, 7, 9, 13, 25, 27, 49, 81, 121, 2, 4, 8, 16, 64])
def test_sqrt_squares_count(q):
    spec = ff.spec_for_q(q)
    n_squares = 0
    for a in range(q):
        if spec.is_square_enc(a):
            s = spec.sqrt_enc(a)
            assert spec.mul_enc(s, s) == a
            if a:
                n_squares += 1
    assert n_squares == (q - 1 if spec.char2 else (q - 1) // 2)


def test_tonelli_shanks_q_1_mod_4():
    # 13 = 1 mod 4 exercises the full Tonelli-Shanks loop
    f13 = ff.make_spec(13)
    for a in range(13):
        if f13.is_square_enc(a):
            s = f13.sqrt_enc(a)
            assert s * s % 13 == a
            assert s == min(s, (13 - s) % 13)


# --- primitive elements / trace / randomness --------------------------------------

def test_primitive_element_frozen():
    assert ff.primitive_element(ff.make_spec(5)).enc == 2
    assert ff.primitive_element(ff.make_spec(7)).enc == 3
    assert ff.primitive_element(ff.make_spec(2, 2)).enc == 2


@pytest.mark.parametrize("q", [4, 5, 7, 9, 25, 27, 49, 8, 16])
def test_primitive_element_order_oracle(q):
    spec = ff.spec_for_q(q)
    g = ff.primitive_element(spec).enc
    assert brute_order(spec, g) == q - 1
    for smaller in range(2, g):
        assert brute_order(spec, smaller) < q - 1


def test_absolute_trace():
    f4 = ff.make_spec(2, 2)
    assert ff.absolute_trace(f4.element(0)) == 0
    assert ff.absolute_trace(f4.element(2)) == 1  # alpha + alpha^2 = 1
    f7 = ff.make_spec(7)
    for a in range(7):
        assert ff.absolute_trace(f7.element(a)) == a
    f8 = ff.make_spec(2, 3)
    for a in range(8):
        coeffs_sum = ff.absolute_trace(f8.element(a))
        brute = a
        acc = a
        for _ in range(2):
            acc = f8.pow_enc(acc, 2)
            brute = f8.add_enc(brute, acc)
        # recompute directly: a + a^2 + a^4
        direct = f8.add_enc(f8.add_enc(a, f8.pow_enc(a, 2)), f8.pow_enc(a, 4))
        assert coeffs_sum == direct < 2


def test_random_element_range_and_determinism():
    spec = ff.make_spec(3, 3)
    rng1, rng2 = random.Random(9), random.Random(9)
    r1 = [ff.random_element(spec, rng1).enc for _ in range(50)]
    r2 = [ff.random_element(spec, rng2).enc for _ in range(50)]
    assert r1 == r2
    assert all(0 <= e < 27 for e in r1)
    assert len(set(r1)) > 10


# --- field axioms and encodings ---------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 25, 27, 49, 121, 128, 1009])
def test_field_axioms_random_triples(q):
    spec = ff.spec_for_q(q)
    rng = random.Random(q)
    for _ in range(1000):
        x, y, z = (ff.random_element(spec, rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert (x - x).enc == 0 and (x + (-x)).enc == 0


def test_inverse_exhaustive_all_prime_powers():
    from hassecount.integers import prime_powers

    for q in prime_powers(1024):
        spec = ff.spec_for_q(q)
        for a in range(1, q):
            assert spec.mul_enc(a, spec.inv_enc(a)) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121])
def test_frobenius_fixes_field_exhaustive(q):
    spec = ff.spec_for_q(q)
    for a in range(q):
        assert spec.pow_enc(a, q) == a


def test_frobenius_sampled_large():
    for q in [1009, 2048, 6561]:
        spec = ff.spec_for_q(q)
        rng = random.Random(q)
        for _ in range(100):
            a = ff.random_element(spec, rng).enc
            assert spec.pow_enc(a, q) == a


@pytest.mark.parametrize("q", [4, 9, 27, 49, 1024])
def test_encoding_bijection(q):
    spec = ff.spec_for_q(q)
    for enc in range(q):
        assert spec.encode(spec.decode(enc)) == enc
    coeffs = spec.decode(q - 1)
    assert len(coeffs) == spec.k and all(c == spec.p - 1 for c in coeffs)
