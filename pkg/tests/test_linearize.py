import random

import pytest

from shrinkca.gf2 import Gf2Poly, RuleVector, is_primitive, min_poly_of_power
from shrinkca.linearize import (
    DegenerateCoset,
    coset_exponent,
    concatenate_once,
    concatenation_chain,
    linearize_generator,
    synthesize_ca_pair,
)


def random_primitive(rng: random.Random, max_degree: int) -> Gf2Poly:
    while True:
        deg = rng.randrange(2, max_degree + 1)
        p = Gf2Poly(1 << deg | rng.randrange(1 << deg) | 1)
        if is_primitive(p):
            return p


class TestCosetExponent:
    @pytest.mark.parametrize(
        "l1,w,expected",
        [(3, 0, 7), (4, 0, 15), (2, 0, 3), (3, 1, 11), (3, 3, 35), (4, 3, 71)],
    )
    def test_values(self, l1, w, expected):
        assert coset_exponent(l1, w) == expected

    def test_w_bounds(self):
        with pytest.raises(ValueError):
            coset_exponent(3, 4)
        with pytest.raises(ValueError):
            coset_exponent(3, -1)


class TestSynthesize:
    def test_degree5_pair(self):
        pair = synthesize_ca_pair(Gf2Poly.parse("0,2,5"))
        assert tuple(str(r) for r in pair) == ("01111", "11110")

    def test_degree5_selfreciprocal_pair(self):
        pair = synthesize_ca_pair(Gf2Poly.parse("0,1,2,4,5"))
        assert tuple(str(r) for r in pair) == ("00001", "10000")

    def test_pair_is_mirror_image(self):
        pair = synthesize_ca_pair(Gf2Poly.parse("0,2,5"))
        assert pair[1] == pair[0].mirrored()

    def test_char_poly_matches_target(self):
        target = Gf2Poly.parse("0,3,4")
        for rv in synthesize_ca_pair(target):
            assert rv.char_poly() == target

    def test_irreducible_but_nonprimitive_target(self):
        target = Gf2Poly.parse("0,1,2,3,4")
        for rv in synthesize_ca_pair(target):
            assert rv.char_poly() == target

    def test_rejects_reducible(self):
        with pytest.raises(ValueError):
            synthesize_ca_pair(Gf2Poly.parse("0,1") * Gf2Poly.parse("0,1,2"))
        with pytest.raises(ValueError):
            synthesize_ca_pair(Gf2Poly(1))

    def test_self_verifies_on_random_primitives(self):
        rng = random.Random(53)
        seen = set()
        while len(seen) < 25:
            target = random_primitive(rng, 12)
            if target in seen:
                continue
            seen.add(target)
            found, mirror = synthesize_ca_pair(target)
            assert found.char_poly() == target
            assert mirror == found.mirrored()
            assert len(found) == target.degree


class TestConcatenation:
    def test_palindrome_step(self):
        rv = RuleVector.from_string("01111")
        assert str(concatenate_once(rv)) == "0111001110"

    def test_printed_chains_to_length_20(self):
        chains = {
            "01111": "01110011111111001110",
            "11110": "11111111100111111111",
            "10000": "10001100000000110001",
            "00001": "00000000011000000000",
        }
        for start, final in chains.items():
            chain = concatenation_chain(RuleVector.from_string(start), 2)
            assert len(chain) == 3
            assert str(chain[-1]) == final

    def test_squares_char_poly(self):
        rng = random.Random(59)
        for _ in range(60):
            n = rng.randrange(1, 21)
            rv = RuleVector(tuple(rng.randrange(2) for _ in range(n)))
            doubled = concatenate_once(rv)
            assert len(doubled) == 2 * n
            assert doubled.char_poly() == rv.char_poly() ** 2

    def test_chain_lengths(self):
        rv = RuleVector.from_string("110")
        chain = concatenation_chain(rv, 3)
        assert [len(r) for r in chain] == [3, 6, 12, 24]


class TestLinearizeGenerator:
    def test_40_cell_pair(self):
        pair = linearize_generator(4, Gf2Poly.parse("0,1,3,4,5"))
        assert [r.to_hex() for r in pair] == ["0060180600", "8C0300C031"]
        assert [len(r) for r in pair] == [40, 40]

    def test_char_poly_law(self):
        base = min_poly_of_power(Gf2Poly.parse("0,1,3,4,5"), 15)
        assert base == Gf2Poly.parse("0,1,2,4,5")
        for rv in linearize_generator(4, Gf2Poly.parse("0,1,3,4,5")):
            assert rv.char_poly() == base ** 8

    def test_clocked_coset_keeps_register_poly(self):
        # D = 35 = 4 mod 31 is a conjugate of the register polynomial root
        pair = linearize_generator(3, Gf2Poly.parse("0,1,2,4,5"), 3)
        assert [str(r) for r in pair] == [
            "00000000011000000000",
            "10001100000000110001",
        ]
        for rv in pair:
            assert rv.char_poly() == Gf2Poly.parse("0,1,2,4,5") ** 4

    def test_minimal_control_register(self):
        pair = linearize_generator(2, Gf2Poly.parse("0,1,3"))
        base = min_poly_of_power(Gf2Poly.parse("0,1,3"), 3)
        for rv in pair:
            assert len(rv) == 6
            assert rv.char_poly() == base ** 2

    def test_degenerate_coset(self):
        with pytest.raises(DegenerateCoset):
            linearize_generator(3, Gf2Poly.parse("0,1,4"), 3)

    def test_random_instances_obey_char_poly_law(self):
        import math

        rng = random.Random(61)
        primitives = {
            3: ["0,1,3", "0,2,3"],
            4: ["0,1,4", "0,3,4"],
            5: ["0,2,5", "0,3,5", "0,1,2,4,5"],
            7: ["0,3,7", "0,1,7"],
        }
        for _ in range(20):
            l1 = rng.choice([2, 3, 4])
            choices = [d for d in primitives if d > l1 and math.gcd(l1, d) == 1]
            l2 = rng.choice(choices)
            c2 = Gf2Poly.parse(rng.choice(primitives[l2]))
            w = rng.randrange(0, l1 + 1)
            try:
                pair = linearize_generator(l1, c2, w)
            except DegenerateCoset:
                continue
            base = min_poly_of_power(c2, coset_exponent(l1, w))
            for rv in pair:
                assert len(rv) == l2 * (1 << (l1 - 1))
                assert rv.char_poly() == base ** (1 << (l1 - 1))
