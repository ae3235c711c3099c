"""
Johnsonhomomorfismen τ med värden i ⋀³ H
"""
import logging
from functools import lru_cache

from app.exceptions import InputError
from app.models.algebra import Triple, Wedge3Vec
from app.models.chain import (
    ChainMapValue,
    ChainNotation,
    ExplicitChain,
    GroupWord,
    SeparatingTwist,
    WordToken,
)
from app.models.homology import HomologyClass, Sublattice, SymplecticBasisResult
from app.models.surface import SurfaceModel
from app.services.chains import expand_subchain, explicit_chain_value, relation_words
from app.services.symplectic import (
    IntMatrix,
    as_matrix,
    from_column,
    sp_membership,
    symplectic_gram_schmidt,
    twist_matrix,
)

logger = logging.getLogger(__name__)

SparseVector = dict[int, int]


def _sorted_with_sign(i: int, j: int, k: int) -> tuple[Triple, int]:
    sign = 1
    if i > j:
        i, j, sign = j, i, -sign
    if j > k:
        j, k, sign = k, j, -sign
    if i > j:
        i, j, sign = j, i, -sign
    return (i, j, k), sign


def _wedge_sparse(u: SparseVector, v: SparseVector, w: SparseVector, out: dict[Triple, int], scale: int = 1) -> None:
    for i, a in u.items():
        for j, b in v.items():
            if j == i:
                continue
            for k, c in w.items():
                if k == i or k == j:
                    continue
                triple, sign = _sorted_with_sign(i, j, k)
                out[triple] = out.get(triple, 0) + sign * scale * a * b * c


def _sparse(v: HomologyClass) -> SparseVector:
    return {i: c for i, c in enumerate(v.coords) if c}


def wedge(u: HomologyClass, v: HomologyClass, w: HomologyClass) -> Wedge3Vec:
    """u ∧ v ∧ w utvecklat i sorterade bastripler"""
    if not u.rank == v.rank == w.rank:
        raise InputError("wedge factors must share a rank")
    out: dict[Triple, int] = {}
    _wedge_sparse(_sparse(u), _sparse(v), _sparse(w), out)
    return Wedge3Vec.from_dict(u.rank, out)


@lru_cache(maxsize=256)
def _columns(matrix: IntMatrix) -> tuple[SparseVector, ...]:
    return tuple(_sparse(from_column(matrix.col(j))) for j in range(matrix.cols))


def act_wedge3(matrix: IntMatrix, t: Wedge3Vec) -> Wedge3Vec:
    """Mu ∧ Mv ∧ Mw utan symplektisk kontroll; för redan validerade matriser"""
    matrix = as_matrix(matrix)
    if matrix.shape != (t.rank, t.rank):
        raise InputError(f"matrix of shape {matrix.shape} does not act on rank {t.rank}")
    columns = _columns(matrix)
    out: dict[Triple, int] = {}
    for (i, j, k), c in t.terms:
        _wedge_sparse(columns[i], columns[j], columns[k], out, c)
    return Wedge3Vec.from_dict(t.rank, out)


def sp_action_wedge3(matrix: IntMatrix, t: Wedge3Vec) -> Wedge3Vec:
    """
    Inducerad verkan på ⋀³

    Raises:
        InputError om matrisen inte är symplektisk
    """
    if not sp_membership(matrix):
        raise InputError("matrix is not symplectic")
    return act_wedge3(matrix, t)


def chain_symplectic_basis(chain: ChainMapValue) -> SymplecticBasisResult:
    """
    Symplektisk bas för kedjan modulo radikalen

    De första 2h kurvorna spänner ett unimodulärt gitter; det fungerar även
    när hela kedjan är linjärt beroende (randklass noll i Σ_{g,1}).
    """
    return symplectic_gram_schmidt(Sublattice(chain.curves[:-1]))


@lru_cache(maxsize=None)
def tau_chainmap(chain: ChainMapValue) -> Wedge3Vec:
    """τ = (Σ_j z_j ∧ w_j) ∧ randklass"""
    rank = chain.boundary_class.rank
    if chain.genus == 0:
        return Wedge3Vec.zero(rank)
    basis = chain_symplectic_basis(chain)
    c = _sparse(chain.boundary_class)
    out: dict[Triple, int] = {}
    for z, w in basis.pairs:
        _wedge_sparse(_sparse(z), _sparse(w), c, out)
    return Wedge3Vec.from_dict(rank, out)


@lru_cache(maxsize=None)
def model_twist(model: SurfaceModel, name: str, sign: int) -> IntMatrix:
    return twist_matrix(model.curve(name), sign)


def tau_token(token: WordToken, model: SurfaceModel) -> Wedge3Vec:
    generator = token.generator
    if isinstance(generator, ChainNotation):
        value = tau_chainmap(expand_subchain(generator, model))
    elif isinstance(generator, ExplicitChain):
        value = tau_chainmap(explicit_chain_value(generator))
    elif isinstance(generator, SeparatingTwist):
        value = Wedge3Vec.zero(model.rank)
    else:
        raise InputError(f"twist token {token} has no Torelli value")
    for name, sign in reversed(token.conjugators):
        value = act_wedge3(model_twist(model, name, sign), value)
    return value * token.exponent


def tau_word(word: GroupWord, model: SurfaceModel) -> Wedge3Vec:
    """Summan av τ över ordets faktorer"""
    total = Wedge3Vec.zero(model.rank)
    for token in word:
        total = total + tau_token(token, model)
    return total


def tau_relation_defect(name, k: int, model: SurfaceModel) -> Wedge3Vec:
    """τ(vänsterled) - τ(högerled); noll när relationen håller"""
    lhs, rhs = relation_words(name, k, model)
    defect = tau_word(lhs, model) - tau_word(rhs, model)
    logger.debug("tau defect of %s at k=%d: %s", name, k, defect.terms)
    return defect
