"""
Symplektisk kärna - snittform, transvektioner, radikal och Gram-Schmidt

Dehnvridningen T_c verkar på homologin som v ↦ v - ι(v, c)c. Det är den
konvention under vilken kedjesummor, omskrivningsreglerna och T_b(c_4) = β
stämmer samtidigt; transvektionen v ↦ v + ι(v, c)c är alltså T_c^{-1}.
"""
import logging
import random
from math import lcm
from typing import Optional

from sympy import ImmutableMatrix, Matrix, eye

from app.exceptions import InputError, NonUnimodularError
from app.models.homology import (
    HomologyClass,
    IntersectionForm,
    Sublattice,
    SymplecticBasisResult,
)

logger = logging.getLogger(__name__)

IntMatrix = ImmutableMatrix


def pairing(u: HomologyClass, v: HomologyClass, form: Optional[IntersectionForm] = None) -> int:
    """ι(u, v); standardformen används om ingen form ges"""
    if form is None:
        return u.pair(v)
    return form.evaluate(u, v)


def transvection_apply(v: HomologyClass, c: HomologyClass, form: Optional[IntersectionForm] = None) -> HomologyClass:
    """v + ι(v, c)c"""
    return v + pairing(v, c, form) * c


def column(v: HomologyClass) -> ImmutableMatrix:
    return ImmutableMatrix(v.rank, 1, v.coords)


def from_column(vector: Matrix) -> HomologyClass:
    return HomologyClass(tuple(int(a) for a in vector))


def form_matrix(form: IntersectionForm) -> ImmutableMatrix:
    """Gram-matrisen J, så att ι(u, v) = uᵀJv"""
    return ImmutableMatrix(form.gram)


def transvection_matrix(c: HomologyClass, coefficient: int = 1) -> IntMatrix:
    """
    Matris för v ↦ v + coefficient·ι(v, c)c i standardbasen

    Eftersom ι(v, c) = (Jc)ᵀv är matrisen I + coefficient·c(Jc)ᵀ.

    Raises:
        InputError om c är nollklassen
    """
    if c.is_zero():
        raise InputError("transvection along the zero class")
    c_col = column(c)
    J = form_matrix(IntersectionForm.standard(c.rank))
    return ImmutableMatrix(eye(c.rank) + coefficient * c_col * (J * c_col).T)


def twist_matrix(c: HomologyClass, sign: int = 1) -> IntMatrix:
    """Homologiverkan av T_c^sign"""
    if sign not in (1, -1):
        raise InputError(f"twist sign must be ±1, got {sign}")
    return transvection_matrix(c, -sign)


def as_matrix(matrix) -> IntMatrix:
    """Godta en sympy-matris eller nästlade heltalsrader"""
    if isinstance(matrix, ImmutableMatrix):
        return matrix
    try:
        return ImmutableMatrix(matrix)
    except ValueError as exc:
        raise InputError(f"not a matrix: {exc}") from None


def _check_square(matrix: IntMatrix, size: Optional[int] = None) -> int:
    rows, cols = matrix.shape
    if rows == 0 or rows != cols:
        raise InputError("matrix must be square and non-empty")
    if size is not None and rows != size:
        raise InputError(f"matrix of size {rows} does not act on rank {size}")
    return rows


def matrix_apply(matrix: IntMatrix, v: HomologyClass) -> HomologyClass:
    matrix = as_matrix(matrix)
    _check_square(matrix, v.rank)
    return from_column(matrix * column(v))


def matrix_multiply(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    left, right = as_matrix(left), as_matrix(right)
    _check_square(right, _check_square(left))
    return ImmutableMatrix(left * right)


def identity_matrix(rank: int) -> IntMatrix:
    return ImmutableMatrix(eye(rank))


def sp_membership(matrix: IntMatrix, form: Optional[IntersectionForm] = None) -> bool:
    """True om MᵀJM = J"""
    matrix = as_matrix(matrix)
    n = _check_square(matrix)
    if form is None:
        if n % 2:
            return False
        form = IntersectionForm.standard(n)
    elif form.rank != n:
        raise InputError(f"matrix of size {n} does not match form of rank {form.rank}")
    J = form_matrix(form)
    return matrix.T * J * matrix == J


def stabilizer_membership(matrix: IntMatrix, v: HomologyClass) -> bool:
    """True om M är symplektisk och fixerar v"""
    return sp_membership(matrix) and matrix_apply(matrix, v) == v


def radical(lattice: Sublattice) -> list[HomologyClass]:
    """
    Primitiv bas för {v ∈ L : ι(v, L) = 0}

    Kärnan till Gram-matrisen beräknas exakt över Q och skalas till
    primitiva heltalsvektorer.
    """
    gens = lattice.generators
    gram = Matrix([[lattice.pair(u, v) for v in gens] for u in gens])
    result = []
    for kernel_vector in gram.nullspace():
        scale = lcm(*(int(entry.q) for entry in kernel_vector))
        combination = HomologyClass.zero(lattice.rank)
        for coefficient, generator in zip(kernel_vector, gens):
            combination = combination + int(coefficient * scale) * generator
        result.append(combination.primitive())
    logger.debug("radical of %d generators has dimension %d", len(gens), len(result))
    return result


def _find_unit_pair(vectors: list[HomologyClass], form: IntersectionForm) -> Optional[tuple[int, int, int]]:
    for i, u in enumerate(vectors):
        for j in range(i + 1, len(vectors)):
            value = form.evaluate(u, vectors[j])
            if value in (1, -1):
                return i, j, value
    return None


def symplectic_gram_schmidt(lattice: Sublattice) -> SymplecticBasisResult:
    """
    Symplektisk bas för ett delgitter

    Hanterar:
    - val av första paret (i<j) i lexikografisk ordning med ι = ±1
    - teckennormering så att ι(z, w) = 1
    - projektion v' = v + ι(v, z)w - ι(v, w)z av övriga vektorer

    Raises:
        NonUnimodularError om det som blir kvar inte är radikalt
    """
    form = lattice.form
    vectors = list(lattice.generators)
    pairs = []
    while True:
        found = _find_unit_pair(vectors, form)
        if found is None:
            break
        i, j, value = found
        z, w = vectors[i], vectors[j]
        if value == -1:
            w = -w
        rest = [v for k, v in enumerate(vectors) if k not in (i, j)]
        vectors = [v + form.evaluate(v, z) * w - form.evaluate(v, w) * z for v in rest]
        pairs.append((z, w))
    leftovers = [v for v in vectors if not v.is_zero()]
    for i, u in enumerate(leftovers):
        for v in leftovers[i + 1:]:
            if form.evaluate(u, v):
                raise NonUnimodularError()
    return SymplecticBasisResult(tuple(pairs), tuple(v.primitive() for v in leftovers))


def random_class(rank: int, rng: random.Random, bound: int) -> HomologyClass:
    return HomologyClass(tuple(rng.randint(-bound, bound) for _ in range(rank)))


def random_primitive_class(rank: int, rng: random.Random, bound: int) -> HomologyClass:
    """Slumpad primitiv klass (nollklassen och icke-primitiva förkastas)"""
    while True:
        v = random_class(rank, rng, bound)
        if v.is_primitive():
            return v
