from fractions import Fraction

import pytest

from spinweil.scalars import (QuadExt, REAL_PLACE, TowerScalar, factorize,
                              hilbert_symbol, is_norm, is_square, is_prime,
                              legendre, relevant_places, squarefree_part)


def solvable_mod_2k(a, b, k):
    """Brute-force oracle: primitive solution of z^2 = a x^2 + b y^2 mod 2^k."""
    mod = 1 << k
    for z in range(mod):
        for x in range(mod):
            for y in range(mod):
                if z % 2 == 0 and x % 2 == 0 and y % 2 == 0:
                    continue
                if (z * z - a * x * x - b * y * y) % mod == 0:
                    return True
    return False


def test_hilbert_simple_solution():
    # z = x = 1, y = 0 solves z^2 = x^2 + 7 y^2
    assert hilbert_symbol(1, 7, 3) == 1


def test_hilbert_real_place():
    # -x^2 - y^2 < 0 can never be a nonzero square
    assert hilbert_symbol(-1, -1, REAL_PLACE) == -1


def test_hilbert_minus_one_minus_one_at_two():
    # oracle first: no primitive solution of z^2 = -x^2 - y^2 mod 64
    assert not solvable_mod_2k(-1, -1, 6)
    assert hilbert_symbol(-1, -1, 2) == -1


def test_hilbert_matches_small_2adic_oracle():
    for a in (-3, -1, 1, 2, 3, 5):
        for b in (-2, -1, 1, 3):
            assert hilbert_symbol(a, b, 2) == (1 if solvable_mod_2k(a, b, 6)
                                               else -1)


def test_hilbert_rejects_bad_inputs():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(1, 0, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(1, 1, 6)
    with pytest.raises(ValueError):
        hilbert_symbol(1, 1, 1)


def test_hilbert_symmetry_and_multiplicativity(rng):
    places = [REAL_PLACE, 2, 3, 5, 7]
    for _ in range(200):
        a = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
        a2 = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
        p = rng.choice(places)
        assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)
        assert (hilbert_symbol(a * a2, b, p)
                == hilbert_symbol(a, b, p) * hilbert_symbol(a2, b, p))


def test_hilbert_product_formula(rng):
    for _ in range(100):
        a = Fraction(rng.randint(-30, 30) or 1, rng.randint(1, 6))
        b = Fraction(rng.randint(-30, 30) or 1, rng.randint(1, 6))
        prod = 1
        for p in relevant_places(a, b):
            prod *= hilbert_symbol(a, b, p)
        assert prod == 1


def test_is_norm_two_is_gaussian_norm():
    # 2 = 1^2 + 1^2 = Nm(1 + i)
    assert is_norm(2, 1) is True


def test_is_norm_negative_never():
    for d in (1, 2, 3, 5):
        assert is_norm(-1, d) is False


def test_is_norm_three_not_sum_of_two_squares():
    # oracle first: a^2 + b^2 = 3 c^2 has no nonzero solution with c <= 30
    for c in range(1, 31):
        for a in range(0, 60):
            b2 = 3 * c * c - a * a
            if b2 < 0:
                break
            assert not is_square(Fraction(b2)) or (a == 0 and b2 == 0)
    assert is_norm(3, 1) is False


def test_is_norm_rejects_bad_inputs():
    with pytest.raises(ValueError):
        is_norm(0, 1)
    with pytest.raises(ValueError):
        is_norm(2, -1)


def test_norm_closure_products(rng):
    # products of norms are norms: exercised through explicit Gaussian norms
    for _ in range(50):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        c, d = rng.randint(-5, 5), rng.randint(-5, 5)
        n1, n2 = a * a + b * b, c * c + d * d
        if n1 and n2:
            assert is_norm(Fraction(n1 * n2), 1)


def test_quadext_arithmetic():
    x = QuadExt(Fraction(1, 2), 3, -5)
    y = QuadExt(2, Fraction(-1, 3), -5)
    assert x + y == QuadExt(Fraction(5, 2), Fraction(8, 3), -5)
    assert x * y - y * x == 0
    assert (x / y) * y == x
    assert x.conj().conj() == x
    assert (x * y).norm() == x.norm() * y.norm()
    assert x ** 3 == x * x * x


def test_quadext_rejects_mixed_fields():
    with pytest.raises(ValueError):
        QuadExt(1, 1, -5) + QuadExt(1, 1, -3)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)  # not squarefree


def test_tower_two_conjugations_commute():
    t = TowerScalar(1, 2, 3, 4, m=-5)
    assert t.conj_i().conj_m() == t.conj_m().conj_i()
    assert t.conj_i().conj_i() == t
    assert t.conj_m().conj_m() == t


def test_tower_field_axioms(rng):
    m = -3
    for _ in range(300):
        xs = [TowerScalar(*(Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                            for _ in range(4)), m=m) for _ in range(3)]
        a, b, c = xs
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a / a == 1


def test_tower_generators():
    i = TowerScalar(0, 1, 0, 0, m=-5)
    s = TowerScalar(0, 0, 1, 0, m=-5)
    assert i * i == -1
    assert s * s == -5
    assert i * s == TowerScalar(0, 0, 0, 1, m=-5)
    assert i * s == s * i


def test_number_theory_helpers():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert squarefree_part(360) == 10
    assert squarefree_part(-4) == -1
    assert squarefree_part(-8) == -2
    assert is_prime(2) and is_prime(97) and not is_prime(91)
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1
    assert is_square(Fraction(49, 64)) and not is_square(Fraction(2))
