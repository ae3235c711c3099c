"""
Tester för Johnsonhomomorfismen τ
"""
import random

import pytest
from sympy import eye

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.config import RelationName
from app.exceptions import InputError
from app.models.algebra import Wedge3Vec
from app.models.chain import ChainNotation, GroupWord, WordToken
from app.models.homology import HomologyClass
from app.services.chains import conjugate_by_twist, enumerate_generators, expand_subchain
from app.services.johnson_tau import (
    act_wedge3,
    chain_symplectic_basis,
    sp_action_wedge3,
    tau_chainmap,
    tau_relation_defect,
    tau_word,
    wedge,
)
from app.services.surface import build_surface
from app.services.symplectic import (
    identity_matrix,
    matrix_multiply,
    random_primitive_class,
    transvection_matrix,
    twist_matrix,
)


@pytest.fixture
def model():
    """Genus 3 med två ränder"""
    return build_surface(3, 2)


def basis(rank, label):
    return HomologyClass.basis(rank, label)


def triple_sum(curves):
    """τ som summa över tripler (udda < jämn < udda) av kedjans kurvor"""
    rank = curves[0].rank
    total = Wedge3Vec.zero(rank)
    for i in range(0, len(curves), 2):
        for e in range(i + 1, len(curves), 2):
            for o in range(e + 1, len(curves), 2):
                total = total + wedge(curves[i], curves[e], curves[o])
    return total


class TestWedge:
    def test_direct_construction_is_normalized(self):
        """Testa att nollkoefficienter och upprepade tripler normaliseras"""
        assert Wedge3Vec(4, (((0, 1, 2), 0),)) == Wedge3Vec.zero(4)
        merged = Wedge3Vec(4, (((1, 2, 3), 2), ((0, 1, 2), 1), ((1, 2, 3), -2)))
        assert merged.terms == (((0, 1, 2), 1),)
        assert Wedge3Vec(4, (((1, 2, 3), 1), ((0, 1, 2), 1))).terms == (((0, 1, 2), 1), ((1, 2, 3), 1))

    def test_unsorted_triple_rejected(self):
        """Testa att en osorterad tripel avvisas"""
        with pytest.raises(InputError, match="invalid wedge triple"):
            Wedge3Vec(4, (((2, 1, 0), 1),))

    def test_basis_triple(self):
        """Testa att x_1 ∧ y_1 ∧ y_2 är en bastripel"""
        x1, y1, y2 = basis(6, "x1"), basis(6, "y1"), basis(6, "y2")
        assert wedge(x1, y1, y2).terms == (((0, 3, 4), 1),)

    def test_alternating(self):
        """Testa att upprepade faktorer ger noll"""
        x1, y2 = basis(6, "x1"), basis(6, "y2")
        assert wedge(x1, x1, y2).is_zero()

    def test_transposition_sign(self):
        """Testa teckenbytet vid en transposition"""
        x1, y1, y2 = basis(6, "x1"), basis(6, "y1"), basis(6, "y2")
        assert wedge(y1, x1, y2) == -wedge(x1, y1, y2)

    def test_rank_mismatch(self):
        """Testa att olika rang avvisas"""
        with pytest.raises(InputError):
            wedge(basis(4, "x1"), basis(6, "y1"), basis(6, "y2"))


class TestSpAction:
    def test_identity(self, model):
        """Testa att identiteten lämnar vektorn orörd"""
        t = wedge(basis(8, "x1"), basis(8, "y2"), basis(8, "y4"))
        assert sp_action_wedge3(identity_matrix(8), t) == t

    def test_anchor(self, model):
        """Testa vridningen längs y_3 - y_2 på x_3 ∧ y_3 ∧ y_4"""
        x3, y2, y3, y4 = (basis(8, label) for label in ("x3", "y2", "y3", "y4"))
        twist = twist_matrix(y3 - y2)
        assert act_wedge3(twist, wedge(x3, y3, y4)) == wedge(x3, y3, y4) + wedge(y2, y3, y4)
        inverse = transvection_matrix(y3 - y2)
        assert act_wedge3(inverse, wedge(x3, y3, y4)) == wedge(x3, y3, y4) - wedge(y2, y3, y4)

    def test_functoriality(self):
        """Testa att verkan av M·N är verkan av M efter N"""
        rng = random.Random(7)
        for _ in range(20):
            m = transvection_matrix(random_primitive_class(8, rng, 3))
            n = transvection_matrix(random_primitive_class(8, rng, 3))
            t = wedge(*(random_primitive_class(8, rng, 3) for _ in range(3)))
            assert act_wedge3(matrix_multiply(m, n), t) == act_wedge3(m, act_wedge3(n, t))

    def test_non_symplectic(self):
        """Testa att en icke-symplektisk matris avvisas"""
        scaled = 2 * eye(4)
        with pytest.raises(InputError, match="symplectic"):
            sp_action_wedge3(scaled, wedge(basis(4, "x1"), basis(4, "y1"), basis(4, "y2")))


class TestTauChainMap:
    def test_genus_one_chain(self, model):
        """Testa att τ(1234) = x_1 ∧ y_1 ∧ y_2"""
        chain = expand_subchain(ChainNotation((1, 2, 3, 4)), model)
        assert tau_chainmap(chain) == wedge(basis(8, "x1"), basis(8, "y1"), basis(8, "y2"))

    def test_matches_triple_formula(self, model):
        """Testa att τ är oberoende av den symplektiska basen"""
        for n in enumerate_generators(3):
            chain = expand_subchain(n, model)
            assert tau_chainmap(chain) == triple_sum(chain.curves)

    def test_well_defined_under_rebasing(self, model):
        """Testa att τ inte ändras när den symplektiska basen byts slumpvis"""
        rng = random.Random(77)
        chain = expand_subchain(ChainNotation((1, 2, 3, 4, 5, 6)), model)
        (z1, w1), (z2, w2) = chain_symplectic_basis(chain).pairs
        c = chain.boundary_class
        expected = tau_chainmap(chain)
        assert not expected.is_zero()
        for _ in range(25):
            p, q, r, s, t, u = (rng.randint(-4, 4) for _ in range(6))
            a1, b1 = z1 + u * z2 + t * w1 + r * c, w1 + s * c
            a2, b2 = z2 + p * c, w2 - u * w1 + q * c
            assert a1.pair(b1) == a2.pair(b2) == 1
            assert a1.pair(a2) == a1.pair(b2) == b1.pair(a2) == b1.pair(b2) == 0
            assert wedge(a1, b1, c) + wedge(a2, b2, c) == expected

    def test_single_curve_is_trivial(self, model):
        """Testa att en enkurvskedja har τ = 0"""
        assert tau_chainmap(expand_subchain(ChainNotation((5, 6)), model)).is_zero()

    def test_closed_chain_in_one_boundary_surface(self):
        """Testa att hela kedjan i Σ_{g,1} har τ = 0"""
        model = build_surface(3, 1)
        chain = expand_subchain(ChainNotation(tuple(range(1, 9))), model)
        assert chain.boundary_class.is_zero()
        assert tau_chainmap(chain).is_zero()

    def test_image_avoids_x_boundary(self, model):
        """Testa att ingen generator har en tripel med x_{g+1}"""
        for n in enumerate_generators(3):
            assert not tau_chainmap(expand_subchain(n, model)).involves(3)


class TestTauWord:
    def test_cancellation(self, model):
        """Testa att n · n^{-1} ger noll"""
        n = ChainNotation((1, 3, 4, 6))
        assert tau_word(GroupWord.of(WordToken(n), WordToken(n, -1)), model).is_zero()

    def test_bare_twist_rejected(self, model):
        """Testa att en ren vridning inte har något τ-värde"""
        with pytest.raises(InputError, match="Torelli"):
            tau_word(GroupWord.of(WordToken("c1")), model)

    def test_conjugation_token(self, model):
        """Testa att (T_b)*n beräknas via Sp-verkan"""
        n = ChainNotation((3, 4, 5, 6))
        token = WordToken(n, 1, (("b", 1),))
        expected = act_wedge3(twist_matrix(model.curve("b")), tau_chainmap(expand_subchain(n, model)))
        assert tau_word(GroupWord.of(token), model) == expected

    def test_rewrite_equivariance(self, model):
        """Testa att τ(T_{c_j}^s * n) = Sp(T_{c_j}^s)·τ(n) för ett urval"""
        n = ChainNotation((1, 3, 5, 6))
        tau_n = tau_chainmap(expand_subchain(n, model))
        for j in range(1, 8):
            for sign in (1, -1):
                word = conjugate_by_twist(j, sign, n, model.max_index)
                matrix = twist_matrix(model.chain_curve(j), sign)
                assert tau_word(word, model) == act_wedge3(matrix, tau_n)


class TestRelations:
    @pytest.mark.parametrize("g", [3, 4, 5])
    def test_j_relations(self, g):
        """Testa att J1, J2 och J3 försvinner under τ"""
        model = build_surface(g, 2)
        for k in range(3, g + 1):
            for name in (RelationName.J1, RelationName.J2, RelationName.J3):
                assert tau_relation_defect(name, k, model).is_zero(), (name, k)
        assert tau_relation_defect(RelationName.J3, g + 1, model).is_zero()

    def test_lantern(self, model):
        """Testa att de tre begränsande paren har τ-summa noll"""
        assert tau_relation_defect(RelationName.LANTERN, 2, model).is_zero()
        assert tau_relation_defect(RelationName.LANTERN, 3, model).is_zero()
