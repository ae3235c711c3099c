"""
Birman-Craggs-Johnson-homomorfismen σ med värden i Boolska polynom B³

Hanterar:
- inbäddning v ↦ v̄ med v̄ + w̄ = (v+w)‾ + ι(v, w)
- σ på kedjeavbildningar och ord
- jämförelseavbildningarna a, b och medlemskap i fiberprodukten W
"""
import logging
from functools import lru_cache
from itertools import combinations
from math import comb

from app.config import SIGMA_DEGREE
from app.exceptions import InputError
from app.models.algebra import BoolPoly, Wedge3Vec
from app.models.chain import (
    ChainMapValue,
    ChainNotation,
    ExplicitChain,
    GroupWord,
    SeparatingTwist,
    WordToken,
)
from app.models.homology import HomologyClass
from app.models.surface import SurfaceModel
from app.services.chains import expand_subchain, explicit_chain_value, relation_words
from app.services.johnson_tau import chain_symplectic_basis, model_twist
from app.services.symplectic import IntMatrix, as_matrix, from_column, sp_membership

logger = logging.getLogger(__name__)


def bool_embed(v: HomologyClass, degree: int = SIGMA_DEGREE) -> BoolPoly:
    """
    v̄ = Σ_{n_i udda} ē_i + Σ_k n_{x_k} n_{y_k} (mod 2)

    Konstanten är Σ_{i<j} n_i n_j ι(e_i, e_j); bara paren (x_k, y_k) bidrar.
    """
    m = v.half_rank
    monomials = {(i,) for i, n in enumerate(v.coords) if n % 2}
    if sum(v.coords[k] * v.coords[m + k] for k in range(m)) % 2:
        monomials.add(())
    return BoolPoly(v.rank, frozenset(monomials), degree)


def bool_add(p: BoolPoly, q: BoolPoly) -> BoolPoly:
    return p + q


def bool_mul(p: BoolPoly, q: BoolPoly) -> BoolPoly:
    """Kvadratfri produkt; monom över gradtaket blir noll"""
    return p * q


def bool_rank(d: int, k: int = SIGMA_DEGREE) -> int:
    """Σ_{i=0}^{k} C(d, i)"""
    if d < k:
        raise InputError(f"dimension {d} is smaller than degree {k}")
    return sum(comb(d, i) for i in range(k + 1))


def all_monomials(d: int, k: int = SIGMA_DEGREE) -> list[tuple[int, ...]]:
    """Alla kvadratfria monom av grad ≤ k i d variabler, i grad- och lexordning"""
    return [m for size in range(k + 1) for m in combinations(range(d), size)]


def act_bool(matrix: IntMatrix, p: BoolPoly) -> BoolPoly:
    """ē_r ↦ (M e_r)‾, utvidgat multiplikativt; utan symplektisk kontroll"""
    matrix = as_matrix(matrix)
    if matrix.shape != (p.rank, p.rank):
        raise InputError(f"matrix of shape {matrix.shape} does not act on rank {p.rank}")
    images = [bool_embed(from_column(matrix.col(r)), p.degree) for r in range(p.rank)]
    result = BoolPoly.zero(p.rank, p.degree)
    for monomial in p.monomials:
        term = BoolPoly.one(p.rank, p.degree)
        for r in monomial:
            term = term * images[r]
        result = result + term
    return result


def sp_action_bool(matrix: IntMatrix, p: BoolPoly) -> BoolPoly:
    if not sp_membership(matrix):
        raise InputError("matrix is not symplectic")
    return act_bool(matrix, p)


@lru_cache(maxsize=None)
def sigma_chainmap(chain: ChainMapValue) -> BoolPoly:
    """σ = (Σ_j z̄_j w̄_j)(c̄ + 1)"""
    rank = chain.boundary_class.rank
    if chain.genus == 0:
        return BoolPoly.zero(rank)
    basis = chain_symplectic_basis(chain)
    omega = BoolPoly.zero(rank)
    for z, w in basis.pairs:
        omega = omega + bool_embed(z) * bool_embed(w)
    return omega * (bool_embed(chain.boundary_class) + BoolPoly.one(rank))


def sigma_separating(twist: SeparatingTwist, rank: int) -> BoolPoly:
    """σ av en separerande vridning: Σ z̄ w̄ över den omslutna ytans bas"""
    total = BoolPoly.zero(rank)
    for z, w in twist.pairs:
        total = total + bool_embed(z) * bool_embed(w)
    return total


def sigma_token(token: WordToken, model: SurfaceModel) -> BoolPoly:
    generator = token.generator
    if isinstance(generator, ChainNotation):
        value = sigma_chainmap(expand_subchain(generator, model))
    elif isinstance(generator, ExplicitChain):
        value = sigma_chainmap(explicit_chain_value(generator))
    elif isinstance(generator, SeparatingTwist):
        value = sigma_separating(generator, model.rank)
    else:
        raise InputError(f"twist token {token} has no Torelli value")
    for name, sign in reversed(token.conjugators):
        value = act_bool(model_twist(model, name, sign), value)
    # över F2 är σ(n^{-1}) = σ(n)
    return value


def sigma_word(word: GroupWord, model: SurfaceModel) -> BoolPoly:
    total = BoolPoly.zero(model.rank)
    for token in word:
        total = total + sigma_token(token, model)
    return total


def sigma_relation_defect(name, k: int, model: SurfaceModel) -> BoolPoly:
    lhs, rhs = relation_words(name, k, model)
    return sigma_word(lhs, model) + sigma_word(rhs, model)


def map_a(t: Wedge3Vec) -> Wedge3Vec:
    """Reduktion modulo 2"""
    return t.mod2()


def map_b(p: BoolPoly) -> Wedge3Vec:
    """Dödar grad ≤ 2 och skickar ē_iē_jē_k till e_i ∧ e_j ∧ e_k (mod 2)"""
    return Wedge3Vec.from_dict(p.rank, {m: 1 for m in p.monomials if len(m) == 3})


def w_membership(u: Wedge3Vec, p: BoolPoly) -> bool:
    """(u, p) ∈ W omm a(u) = b(p)"""
    return map_a(u) == map_b(p)
