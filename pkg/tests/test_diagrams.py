import pytest
from conftest import random_word

from platforge.braids import BraidWord, family_b, tilde, underlying_permutation
from platforge.diagrams import (
    Crossing,
    LinkDiagram,
    circular_plat_diagram,
    closure_diagram,
    component_count,
    embed_for_plat,
    faces,
    from_pd_text,
    graph_components,
    to_pd_text,
)
from platforge.errors import DomainError, MalformedInputError

TREFOIL_PD = "X+[2,6,3,5]\nX+[4,2,5,1]\nX+[6,4,1,3]\n"


class TestClosure:
    def test_identity_b3(self):
        d = closure_diagram(BraidWord(3))
        assert len(d) == 0 and component_count(d) == 3

    def test_sigma1(self):
        d = closure_diagram(BraidWord(2, (1,)))
        assert len(d) == 1 and component_count(d) == 1

    def test_trefoil(self):
        d = closure_diagram(BraidWord(2, (1, 1, 1)))
        assert len(d) == 3 and component_count(d) == 1
        assert d.writhe() == 3

    def test_hopf(self):
        assert component_count(closure_diagram(BraidWord(2, (1, 1)))) == 2

    def test_random_components_match_cycles(self, rng):
        for _ in range(60):
            n = rng.randint(1, 6)
            b = random_word(rng, n, rng.randint(0, 12))
            d = closure_diagram(b)
            d.validate()
            assert len(d) == len(b)
            assert component_count(d) == underlying_permutation(b).cycle_count()


class TestPlat:
    def test_sigma3(self):
        d = circular_plat_diagram(BraidWord(4, (3,)))
        assert len(d) == 1 and component_count(d) == 1

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_identity(self, g):
        d = circular_plat_diagram(BraidWord(2 * g + 2))
        assert len(d) == 0 and component_count(d) == g + 1

    def test_figure_three(self):
        assert len(circular_plat_diagram(family_b(2))) == 3

    def test_odd_strands(self):
        with pytest.raises(DomainError):
            circular_plat_diagram(BraidWord(5, (1,)))

    def test_random_valid(self, rng):
        for _ in range(60):
            n = 2 * rng.randint(1, 4)
            b = random_word(rng, n, rng.randint(0, 12))
            d = circular_plat_diagram(b)
            d.validate()
            assert len(d) == len(b)

    def test_lift_consistency(self, rng):
        for _ in range(60):
            n = 2 * rng.randint(2, 4)
            b = random_word(rng, n, rng.randint(0, 10))
            down = component_count(circular_plat_diagram(b))
            up = underlying_permutation(tilde(b)).cycle_count()
            assert down <= up <= 2 * down


class TestEmbed:
    def test_sigma1(self):
        assert embed_for_plat(BraidWord(2, (1,))) == BraidWord(4, (1,))

    def test_identity(self):
        assert embed_for_plat(BraidWord(3)) == BraidWord(6)

    def test_trefoil_pd_matches(self):
        b = BraidWord(2, (1, 1, 1))
        assert to_pd_text(circular_plat_diagram(embed_for_plat(b))) == to_pd_text(closure_diagram(b))


class TestPD:
    def test_trefoil_text(self):
        assert to_pd_text(closure_diagram(BraidWord(2, (1, 1, 1)))) == TREFOIL_PD

    def test_roundtrip_and_stability(self, rng):
        for _ in range(40):
            b = random_word(rng, rng.randint(2, 5), rng.randint(0, 10))
            d = closure_diagram(b)
            text = to_pd_text(d)
            again = to_pd_text(from_pd_text(text))
            assert text == again
            assert component_count(from_pd_text(text)) == component_count(d)

    def test_free_loops(self):
        assert to_pd_text(closure_diagram(BraidWord(2))) == "O\nO\n"
        assert from_pd_text("O\nO\n").free_loops == 2

    def test_unicode_minus_and_comments(self):
        d = from_pd_text("# figure eight\nX−[2,7,3,8]\nX+[4,2,5,1]\nX-[6,3,7,4]\nX+[8,6,1,5]\n")
        assert len(d) == 4 and d.writhe() == 0

    @pytest.mark.parametrize(
        "text",
        ["X+[1,2,3]\n", "Y+[1,2,3,4]\n", "X+[1,1,2,3]\n", "X+[0,1,1,0]\n", "", "X+[1,2,3,4]\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(MalformedInputError):
            from_pd_text(text)

    def test_orientation_checked(self):
        # each label must enter one crossing and leave another
        with pytest.raises(MalformedInputError):
            from_pd_text("X+[1,2,3,4]\nX+[1,4,3,2]\n")


class TestStructure:
    def test_euler_counts(self, rng):
        for _ in range(30):
            b = random_word(rng, 4, rng.randint(1, 10))
            d = closure_diagram(b)
            comps = graph_components(d)
            fc = faces(d)
            assert len(fc) == sum(len(c) + 2 for c in comps)

    def test_crossing_roles(self):
        pos = Crossing(1, 2, 3, 4, 1)
        neg = Crossing(1, 2, 3, 4, -1)
        assert (pos.under_in, pos.under_out, pos.over_in, pos.over_out) == (1, 3, 4, 2)
        assert (neg.over_in, neg.over_out) == (2, 4)

    def test_empty_diagram_len(self):
        assert len(LinkDiagram((), 1)) == 0
