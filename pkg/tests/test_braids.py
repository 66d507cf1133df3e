import pytest
from conftest import random_word
from hypothesis import given
from hypothesis import strategies as st

from platforge.braids import (
    BraidWord,
    Permutation,
    braid_equal,
    family_b,
    is_skew_palindromic,
    parse_braid,
    skew,
    tilde,
    underlying_permutation,
)
from platforge.errors import BraidParseError, DimensionError, DomainError, MalformedInputError


@st.composite
def words(draw, max_n=8, max_len=20):
    n = draw(st.integers(2, max_n))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


class TestParse:
    def test_single_letter(self):
        assert parse_braid("s3", 4) == BraidWord(4, (3,))

    def test_inverse_and_spacing(self):
        assert parse_braid("  s1   S2 s3 ", 4).letters == (1, -2, 3)

    def test_empty_is_identity(self):
        b = parse_braid("", 6)
        assert b.letters == () and b.n == 6

    def test_out_of_range_names_token(self):
        with pytest.raises(MalformedInputError, match="s5"):
            parse_braid("s5", 4)

    def test_non_integer_token(self):
        with pytest.raises(BraidParseError):
            parse_braid("s1 sx", 4)
        with pytest.raises(BraidParseError):
            parse_braid("q2", 4)

    def test_zero_index_rejected(self):
        with pytest.raises(MalformedInputError):
            parse_braid("s0", 3)

    def test_free_reduction_on_build(self):
        assert parse_braid("s1 s2 S2 S1 s3", 4).letters == (3,)

    def test_json_roundtrip(self):
        b = parse_braid("s3 S4 s5", 6)
        assert BraidWord.from_json(b.to_json()) == b
        assert b.to_json() == {"n": 6, "word": "s3 S4 s5"}

    @given(words())
    def test_text_roundtrip(self, b):
        assert parse_braid(str(b), b.n) == b


class TestSkew:
    def test_sigma3_in_b4(self):
        assert skew(BraidWord(4, (3,))).letters == (1,)

    def test_fixed_word(self):
        assert skew(BraidWord(4, (1, 2, 3))).letters == (1, 2, 3)

    def test_signs_kept_and_order_reversed(self):
        assert skew(BraidWord(5, (1, -2, 4))).letters == (1, -3, 4)

    @given(words())
    def test_involution(self, b):
        assert skew(skew(b)).letters == b.letters

    @given(words(), words())
    def test_reverses_products(self, a, b):
        b = BraidWord(a.n, tuple(x for x in b.letters if abs(x) < a.n))
        assert skew(a * b) == skew(b) * skew(a)


class TestTilde:
    def test_sigma3(self):
        assert tilde(BraidWord(4, (3,))).letters == (1, 3)

    def test_identity(self):
        assert tilde(BraidWord(5)).letters == ()

    @pytest.mark.parametrize("g", range(1, 8))
    def test_family_display(self, g):
        expect = tuple(range(1, 2 * g)) + tuple(range(3, 2 * g + 2))
        assert tilde(family_b(g)).letters == expect

    @given(words())
    def test_length_doubles(self, b):
        assert len(tilde(b)) == 2 * len(b)

    @given(words(max_n=6, max_len=10))
    def test_always_skew_palindromic(self, b):
        assert is_skew_palindromic(tilde(b))


class TestEquality:
    def test_braid_relation(self):
        assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))

    def test_far_commutation(self):
        assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))

    def test_distinct_generators(self):
        assert not braid_equal(BraidWord(3, (1,)), BraidWord(3, (2,)))

    def test_same_permutation_and_exponent_but_different(self):
        # sigma1^2 sigma2^2 vs sigma2^2 sigma1^2: pure braids that do not commute
        assert not braid_equal(BraidWord(3, (1, 1, 2, 2)), BraidWord(3, (2, 2, 1, 1)))

    def test_full_twist_is_central(self):
        delta2 = BraidWord(3, (1, 2) * 3)
        assert braid_equal(delta2 * BraidWord(3, (1,)), BraidWord(3, (1,)) * delta2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            braid_equal(BraidWord(3), BraidWord(4))

    @given(words(max_n=5, max_len=8))
    def test_inverse(self, b):
        assert braid_equal(b * b.inverse(), BraidWord(b.n))


class TestPalindromic:
    def test_sigma123(self):
        assert is_skew_palindromic(BraidWord(4, (1, 2, 3)))

    def test_sigma3_is_not(self):
        assert not is_skew_palindromic(BraidWord(4, (3,)))

    def test_group_level_only(self):
        # skew gives s1 s2 s1, equal to s2 s1 s2 only through the braid relation
        b = BraidWord(3, (2, 1, 2))
        assert skew(b).letters == (1, 2, 1)
        assert is_skew_palindromic(b)


class TestFamily:
    def test_g1(self):
        assert family_b(1) == BraidWord(4, (3,))

    def test_g2(self):
        assert str(family_b(2)) == "s3 s4 s5" and family_b(2).n == 6

    def test_g3(self):
        assert family_b(3).letters == (3, 4, 5, 6, 7) and family_b(3).n == 8

    def test_domain(self):
        with pytest.raises(DomainError):
            family_b(0)


class TestPermutation:
    def test_sigma3(self):
        assert underlying_permutation(BraidWord(4, (3,))) == Permutation((1, 2, 4, 3))

    def test_identity(self):
        assert underlying_permutation(BraidWord(5)) == Permutation.identity(5)

    def test_four_cycle(self):
        p = underlying_permutation(family_b(2))
        assert str(p) == "(3 4 5 6)" and p(1) == 1 and p(2) == 2

    def test_not_a_permutation(self):
        with pytest.raises(MalformedInputError):
            Permutation((1, 1, 2))

    @given(words(), words())
    def test_homomorphism(self, a, b):
        b = BraidWord(a.n, tuple(x for x in b.letters if abs(x) < a.n))
        assert underlying_permutation(a * b) == underlying_permutation(a) * underlying_permutation(b)

    def test_invariant_under_equality(self, rng):
        for _ in range(20):
            b = random_word(rng, 5, 8)
            c = b * BraidWord(5, (1, 2, 1, -2, -1, -2))
            assert braid_equal(b, c)
            assert underlying_permutation(b) == underlying_permutation(c)
