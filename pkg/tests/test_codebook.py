import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tritcode.bitio import BitReader, pack01
from tritcode.codebook import (
    Degenerate,
    code_length,
    code_set_for_alphabet,
    generate_codes,
    group_params,
    rank,
    read_trits,
    signature_total,
    trits_to_bits,
    unrank,
)
from tritcode.errors import TruncatedDataError

# Reference codebooks, frozen: full set 2 and the opening of set 3.
SET2_BITS = ["00", "010", "011", "100", "110", "1010", "1011", "1110", "1111"]
SET3_HEAD = ["000", "0010", "0011", "0100", "0110", "1000", "1100"]


def enumerate_trit_strings(n):
    """Brute-force oracle: all trit strings in canonical order."""
    all_strings = ["".join(s) for s in product("012", repeat=n)]
    return sorted(all_strings, key=lambda s: (-s.count("0"), s))


class TestCodeSetIdentification:
    def test_reference_points(self):
        assert code_set_for_alphabet(9).n == 2
        assert code_set_for_alphabet(3).n == 1
        assert code_set_for_alphabet(10).n == 3
        assert code_set_for_alphabet(2) == Degenerate(2)
        assert code_set_for_alphabet(1) == Degenerate(1)

    def test_set_bounds(self):
        cs = code_set_for_alphabet(5)
        assert (cs.n, cs.m_min, cs.m_max) == (2, 4, 9)
        cs1 = code_set_for_alphabet(3)
        assert (cs1.m_min, cs1.m_max) == (3, 3)

    def test_boundaries_land_in_the_right_set(self):
        for n in range(1, 12):
            assert code_set_for_alphabet(3**n).n == n
            if n >= 2:
                assert code_set_for_alphabet(3 ** (n - 1) + 1).n == n

    def test_rejects_empty_alphabet(self):
        with pytest.raises(ValueError):
            code_set_for_alphabet(0)

    def test_set_number_cap(self):
        assert code_set_for_alphabet(3**40).n == 40
        with pytest.raises(ValueError):
            code_set_for_alphabet(3**40 + 1)


class TestGroupParams:
    def test_reference_points(self):
        assert (group_params(3, 3).length, group_params(3, 3).size) == (3, 1)
        assert (group_params(3, 2).length, group_params(3, 2).size) == (4, 6)
        assert (group_params(2, 0).length, group_params(2, 0).size) == (4, 4)

    def test_formulas(self):
        for n in range(1, 11):
            assert sum(group_params(n, z).size for z in range(n + 1)) == 3**n
            for z in range(n + 1):
                gp = group_params(n, z)
                assert gp.length == 2 * n - z
                assert gp.size == comb(n, z) * 2 ** (n - z)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            group_params(3, 4)
        with pytest.raises(ValueError):
            group_params(3, -1)
        with pytest.raises(ValueError):
            group_params(0, 0)


class TestGeneration:
    def test_set2_golden(self):
        assert [cw.bits for cw in generate_codes(2, 9)] == SET2_BITS

    def test_set3_head_golden(self):
        assert [cw.bits for cw in generate_codes(3, 7)] == SET3_HEAD

    def test_set1(self):
        assert [cw.bits for cw in generate_codes(1, 3)] == ["0", "10", "11"]

    def test_matches_bruteforce_order(self):
        for n in range(1, 6):
            expected = enumerate_trit_strings(n)
            got = [cw.trits for cw in generate_codes(n, 3**n)]
            assert got == expected

    def test_indices_and_zero_counts(self):
        for cw in generate_codes(3, 27):
            assert cw.index >= 1
            assert cw.zeros == cw.trits.count("0")
            assert len(cw.bits) == 2 * 3 - cw.zeros

    def test_prefix_of_full_list(self):
        full = generate_codes(4, 81)
        assert generate_codes(4, 10) == full[:10]

    def test_incremental_generation_is_cheap(self):
        # set 24 has ~3e11 codewords; asking for 5 must return promptly
        head = generate_codes(24, 5)
        assert len(head) == 5
        assert head[0].trits == "0" * 24

    def test_rejects_bad_count(self):
        with pytest.raises(ValueError):
            generate_codes(2, 10)
        with pytest.raises(ValueError):
            generate_codes(2, 0)


class TestSignature:
    def test_substitution(self):
        assert trits_to_bits("001") == "0010"
        assert trits_to_bits("222") == "111111"
        assert trits_to_bits("") == ""

    def test_rejects_invalid_digit(self):
        with pytest.raises(ValueError):
            trits_to_bits("013")

    @given(st.text(alphabet="012", min_size=1, max_size=8))
    def test_length_formula(self, trits):
        assert len(trits_to_bits(trits)) == 2 * len(trits) - trits.count("0")


class TestReadTrits:
    def test_reference_points(self):
        r = BitReader(pack01("00101101"))
        assert read_trits(r, 3) == "001"
        assert r.position == 4
        r = BitReader(pack01("00"))
        assert read_trits(r, 2) == "00"
        assert r.position == 2
        r = BitReader(pack01("111111"))
        assert read_trits(r, 3) == "222"
        assert r.position == 6

    def test_truncation_raises(self):
        r = BitReader(pack01("1"), bit_length=1)
        with pytest.raises(TruncatedDataError):
            read_trits(r, 1)
        r = BitReader(pack01("010"), bit_length=3)
        with pytest.raises(TruncatedDataError):
            read_trits(r, 3)

    def test_identity_with_signature_exhaustive(self):
        for n in range(1, 6):
            for digits in product("012", repeat=n):
                trits = "".join(digits)
                bits = trits_to_bits(trits)
                r = BitReader(pack01(bits), bit_length=len(bits))
                assert read_trits(r, n) == trits
                assert r.remaining == 0


class TestRankUnrank:
    def test_reference_points(self):
        assert rank(3, "000") == 1
        assert rank(3, "012") == 9
        assert rank(2, "20") == 5
        assert rank(3, "222") == 27
        assert unrank(3, 9) == "012"
        assert unrank(2, 1) == "00"

    def test_unrank_matches_generation_set4(self):
        codes = generate_codes(4, 81)
        for cw in codes:
            assert unrank(4, cw.index) == cw.trits

    def test_bijection_exhaustive_small(self):
        for n in range(1, 8):
            for cw in generate_codes(n, 3**n):
                assert rank(n, cw.trits) == cw.index
                assert unrank(n, cw.index) == cw.trits

    def test_bijection_sampled_n12(self):
        rng = random.Random(20120126)
        for _ in range(10_000):
            index = rng.randint(1, 3**12)
            assert rank(12, unrank(12, index)) == index

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            rank(3, "01")
        with pytest.raises(ValueError):
            rank(3, "013")
        with pytest.raises(ValueError):
            unrank(3, 0)
        with pytest.raises(ValueError):
            unrank(3, 28)

    @given(st.integers(min_value=1, max_value=3**30))
    def test_roundtrip_large_set(self, index):
        assert rank(30, unrank(30, index)) == index


class TestStructuralInvariants:
    def test_prefix_freeness_exhaustive(self):
        for n in range(1, 8):
            bits = [cw.bits for cw in generate_codes(n, 3**n)]
            bits.sort()
            for a, b in zip(bits, bits[1:]):
                assert not b.startswith(a), (n, a, b)

    def test_kraft_sum_is_exactly_one(self):
        for n in range(1, 11):
            total = sum(Fraction(1, 2 ** len(cw.bits))
                        for cw in generate_codes(n, 3**n))
            assert total == 1

    def test_length_monotone_along_list(self):
        for n in range(1, 9):
            lengths = [len(cw.bits) for cw in generate_codes(n, 3**n)]
            assert lengths == sorted(lengths)

    def test_group_accounting(self):
        for n in range(1, 11):
            counts = {}
            for cw in generate_codes(n, 3**n):
                counts[cw.zeros] = counts.get(cw.zeros, 0) + 1
            assert sum(counts.values()) == 3**n
            for z, size in counts.items():
                assert size == group_params(n, z).size


class TestDerivedLengths:
    def test_code_length_matches_generation(self):
        for n in range(1, 7):
            for cw in generate_codes(n, 3**n):
                assert code_length(n, cw.index) == len(cw.bits)

    def test_signature_total_matches_generation(self):
        rng = random.Random(7)
        for n in range(1, 7):
            for _ in range(5):
                m = rng.randint(1, 3**n)
                expected = sum(len(cw.bits) for cw in generate_codes(n, m))
                assert signature_total(n, m) == expected
