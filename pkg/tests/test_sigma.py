"""
Tester för BCJ-homomorfismen σ och Boolska polynom
"""
import pytest
from sympy import eye

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.config import RelationName
from app.exceptions import InputError
from app.models.algebra import BoolPoly, Wedge3Vec
from app.models.chain import ChainNotation, GroupWord, WordToken
from app.models.homology import HomologyClass
from app.services.bcj_sigma import (
    act_bool,
    all_monomials,
    bool_add,
    bool_embed,
    bool_mul,
    bool_rank,
    map_a,
    map_b,
    sigma_chainmap,
    sigma_relation_defect,
    sigma_word,
    sp_action_bool,
    w_membership,
)
from app.services.chains import (
    conjugate_by_b,
    conjugate_by_twist,
    enumerate_generators,
    expand_subchain,
    relation_words,
)
from app.services.johnson_tau import tau_chainmap, wedge
from app.services.surface import build_surface
from app.services.symplectic import twist_matrix


@pytest.fixture
def model():
    """Genus 3 med två ränder"""
    return build_surface(3, 2)


def basis(rank, label):
    return HomologyClass.basis(rank, label)


def poly(rank, *monomials):
    return BoolPoly(rank, frozenset(tuple(m) for m in monomials))


class TestBoolAlgebra:
    def test_embed_basis(self):
        """Testa att x_1 ger x̄_1"""
        assert bool_embed(basis(4, "x1")) == poly(4, (0,))

    def test_embed_with_pairing(self):
        """Testa att x_1 + y_1 ger x̄_1 + ȳ_1 + 1"""
        assert bool_embed(basis(4, "x1") + basis(4, "y1")) == poly(4, (0,), (2,), ())

    def test_embed_without_pairing(self):
        """Testa att x_1 + x_2 ger x̄_1 + x̄_2"""
        assert bool_embed(basis(4, "x1") + basis(4, "x2")) == poly(4, (0,), (1,))

    def test_embed_relation(self):
        """Testa att (a+b)‾ = ā + b̄ + ι(a, b) för slumpade par"""
        a = HomologyClass((1, -2, 3, 1))
        b = HomologyClass((2, 1, -1, 5))
        correction = BoolPoly.one(4) if a.pair(b) % 2 else BoolPoly.zero(4)
        assert bool_embed(a + b) == bool_embed(a) + bool_embed(b) + correction

    def test_idempotent(self):
        """Testa att x̄_1 · x̄_1 = x̄_1"""
        x = poly(6, (0,))
        assert bool_mul(x, x) == x

    def test_truncation(self):
        """Testa att grad 4 försvinner i B³"""
        assert bool_mul(poly(6, (0, 1, 2)), poly(6, (3,))).is_zero()

    def test_characteristic_two(self):
        """Testa att p + p = 0"""
        p = poly(6, (0, 1), (), (4,))
        assert bool_add(p, p).is_zero()

    @pytest.mark.parametrize("d,expected", [(6, 42), (7, 64), (3, 8)])
    def test_rank(self, d, expected):
        """Testa rangformeln för B³"""
        assert bool_rank(d, 3) == expected

    def test_monomial_count_matches_rank(self):
        """Testa att antalet monom är rangen"""
        for d in range(3, 9):
            assert len(all_monomials(d, 3)) == bool_rank(d, 3)

    def test_rank_needs_enough_variables(self):
        """Testa att d < k avvisas"""
        with pytest.raises(InputError):
            bool_rank(2, 3)


class TestSigmaChainMap:
    def test_genus_one_chain(self, model):
        """Testa att σ(1234) = x̄_1ȳ_1ȳ_2 + x̄_1ȳ_1"""
        chain = expand_subchain(ChainNotation((1, 2, 3, 4)), model)
        assert sigma_chainmap(chain) == poly(8, (0, 4, 5), (0, 4))

    def test_well_defined_under_rebasing(self, model):
        """Testa att z ↦ z + c inte ändrar z̄w̄(c̄+1)"""
        chain = expand_subchain(ChainNotation((1, 2, 3, 4)), model)
        z, w, c = chain.curves[0], -chain.curves[1], chain.boundary_class
        one = BoolPoly.one(8)
        original = bool_embed(z) * bool_embed(w) * (bool_embed(c) + one)
        shifted = bool_embed(z + c) * bool_embed(w) * (bool_embed(c) + one)
        assert original == shifted == sigma_chainmap(chain)

    def test_single_curve_is_trivial(self, model):
        """Testa att en enkurvskedja har σ = 0"""
        assert sigma_chainmap(expand_subchain(ChainNotation((1, 2)), model)).is_zero()

    def test_bare_twist_rejected(self, model):
        """Testa att en ren vridning avvisas"""
        with pytest.raises(InputError):
            sigma_word(GroupWord.of(WordToken("b")), model)

    def test_equivariance(self, model):
        """Testa att σ av omskrivningar följer Sp-verkan modulo 2"""
        for n in enumerate_generators(3)[:40]:
            sigma_n = sigma_chainmap(expand_subchain(n, model))
            for j in range(1, 8):
                for sign in (1, -1):
                    word = conjugate_by_twist(j, sign, n, model.max_index)
                    matrix = twist_matrix(model.chain_curve(j), sign)
                    assert sigma_word(word, model) == act_bool(matrix, sigma_n)

    def test_b_rewrites(self, model):
        """Testa att σ(T_b^{±1} * n) = Sp(T_b^{±1})·σ(n)"""
        for indices, sign in (((4, 5, 6, 7), 1), ((5, 6, 7, 8), 1), ((5, 6, 7, 8), -1)):
            n = ChainNotation(indices)
            word = conjugate_by_b(sign, n)
            matrix = twist_matrix(model.curve("b"), sign)
            assert sigma_word(word, model) == act_bool(matrix, sigma_chainmap(expand_subchain(n, model)))

    def test_non_symplectic_action(self):
        """Testa att en icke-symplektisk matris avvisas"""
        scaled = 3 * eye(4)
        with pytest.raises(InputError):
            sp_action_bool(scaled, BoolPoly.one(4))


class TestComparisonMaps:
    def test_map_a_kills_even(self):
        """Testa att a(2·x_1∧y_1∧y_2) = 0"""
        t = wedge(basis(6, "x1"), basis(6, "y1"), basis(6, "y2")) * 2
        assert map_a(t).is_zero()

    def test_map_b_kills_low_degree(self):
        """Testa att b(x̄_1ȳ_1) = 0"""
        assert map_b(poly(6, (0, 3))).is_zero()

    def test_map_b_degree_three(self):
        """Testa att b(x̄_1ȳ_1ȳ_2) = x_1∧y_1∧y_2"""
        assert map_b(poly(6, (0, 3, 4))) == Wedge3Vec(6, (((0, 3, 4), 1),))

    def test_membership_examples(self):
        """Testa (0, 1) ∈ W och (x_1∧y_1∧y_2, 0) ∉ W"""
        assert w_membership(Wedge3Vec.zero(6), BoolPoly.one(6))
        t = wedge(basis(6, "x1"), basis(6, "y1"), basis(6, "y2"))
        assert not w_membership(t, BoolPoly.zero(6))

    def test_generators_are_compatible(self, model):
        """Testa att a(τ(n)) = b(σ(n)) för alla generatorer"""
        for n in enumerate_generators(3):
            chain = expand_subchain(n, model)
            assert w_membership(tau_chainmap(chain), sigma_chainmap(chain))


class TestRelations:
    @pytest.mark.parametrize("g", [3, 4, 5])
    def test_j_relations(self, g):
        """Testa att J1, J2 och J3 försvinner under σ"""
        model = build_surface(g, 2)
        for k in range(3, g + 1):
            for name in (RelationName.J1, RelationName.J2, RelationName.J3):
                assert sigma_relation_defect(name, k, model).is_zero(), (name, k)

    def test_lantern(self, model):
        """Testa att σ av den separerande vridningen är x̄_2ȳ_2 + x̄_3ȳ_3"""
        lhs, rhs = relation_words(RelationName.LANTERN, 3, model)
        expected = poly(8, (1, 5), (2, 6))
        assert sigma_word(lhs, model) == expected
        assert sigma_word(rhs, model) == expected
