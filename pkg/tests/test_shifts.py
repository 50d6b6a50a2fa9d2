import random
from fractions import Fraction

import pytest

from sl2rat.poly import Poly
from sl2rat.shifts import canonical_shift_rep, shift_offset

Z = Poly.variable()


def test_shift_offset_spec_examples():
    assert shift_offset(Z, Z - 3) == -3
    assert shift_offset(Z ** 2 + 1, Z ** 2 + 4 * Z + 5) == 2
    assert shift_offset(Z, Z - Fraction(1, 2)) is None


def test_shift_offset_degree_mismatch():
    with pytest.raises(ValueError):
        shift_offset(Z, Z ** 2 + 1)


def test_shift_offset_round_trip():
    rng = random.Random(4)
    irreducibles = [Z, Z - Fraction(1, 2), Z ** 2 + 1, Z ** 2 - 2, Z ** 2 + Z + 1]
    for p in irreducibles:
        for _ in range(8):
            a = rng.randint(-6, 6)
            assert shift_offset(p, p.shifted(a)) == a


def test_shift_offset_detects_non_shift():
    assert shift_offset(Z ** 2 + 1, Z ** 2 - 2) is None


def test_canonical_shift_rep_spec_examples():
    assert canonical_shift_rep(Z - 3) == (Z, 3)
    assert canonical_shift_rep(Z - Fraction(1, 2)) == (Z - Fraction(1, 2), 0)
    assert canonical_shift_rep(Z ** 2 + 4 * Z + 5) == (Z ** 2 + 1, -2)


def test_canonical_rep_idempotent_and_equivariant():
    rng = random.Random(8)
    for p in [Z, Z - Fraction(3, 4), Z ** 2 + 1, Z ** 2 - Z - 1]:
        c, a = canonical_shift_rep(p)
        assert p == c.shifted(-a)
        assert canonical_shift_rep(c) == (c, 0)
        assert 0 <= c.mean_of_roots() < 1
        for _ in range(5):
            # p(z + k) = c(z - (a - k)), so the offset drops by k
            k = rng.randint(-5, 5)
            c2, a2 = canonical_shift_rep(p.shifted(k))
            assert c2 == c and a2 == a - k
