"""
Algebraiska målrum: ⋀³ H över Z och Boolska polynom av grad ≤ 3 över F2
"""
from dataclasses import dataclass

from app.config import SIGMA_DEGREE
from app.exceptions import InputError
from app.models.homology import basis_labels

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Wedge3Vec:
    """
    Element i ⋀³ Z^rank, lagrat som sorterade (i<j<k, koefficient)-par

    Nollkoefficienter lagras aldrig, så två lika vektorer har lika terms.
    """
    rank: int
    terms: tuple[tuple[Triple, int], ...] = ()

    def __post_init__(self):
        coeffs: dict[Triple, int] = {}
        for (i, j, k), c in self.terms:
            if not 0 <= i < j < k < self.rank:
                raise InputError(f"invalid wedge triple {(i, j, k)} for rank {self.rank}")
            coeffs[(i, j, k)] = coeffs.get((i, j, k), 0) + c
        object.__setattr__(self, "terms", tuple(sorted((t, c) for t, c in coeffs.items() if c)))

    @classmethod
    def from_dict(cls, rank: int, coeffs: dict[Triple, int]) -> "Wedge3Vec":
        return cls(rank, tuple(coeffs.items()))

    @classmethod
    def zero(cls, rank: int) -> "Wedge3Vec":
        return cls(rank)

    def as_dict(self) -> dict[Triple, int]:
        return dict(self.terms)

    def coefficient(self, triple: Triple) -> int:
        return self.as_dict().get(triple, 0)

    def _combine(self, other: "Wedge3Vec", factor: int) -> "Wedge3Vec":
        if other.rank != self.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")
        coeffs = self.as_dict()
        for triple, c in other.terms:
            coeffs[triple] = coeffs.get(triple, 0) + factor * c
        return Wedge3Vec.from_dict(self.rank, coeffs)

    def __add__(self, other: "Wedge3Vec") -> "Wedge3Vec":
        return self._combine(other, 1)

    def __sub__(self, other: "Wedge3Vec") -> "Wedge3Vec":
        return self._combine(other, -1)

    def __neg__(self) -> "Wedge3Vec":
        return Wedge3Vec(self.rank, tuple((t, -c) for t, c in self.terms))

    def __mul__(self, scalar: int) -> "Wedge3Vec":
        return Wedge3Vec.from_dict(self.rank, {t: scalar * c for t, c in self.terms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def mod2(self) -> "Wedge3Vec":
        """Reducera koefficienterna till representanter {0, 1}"""
        return Wedge3Vec.from_dict(self.rank, {t: c % 2 for t, c in self.terms})

    def involves(self, index: int) -> bool:
        return any(index in t for t, _ in self.terms)

    def labelled(self) -> list[list]:
        """[[etikett, etikett, etikett, koefficient], ...] för JSON-utdata"""
        labels = basis_labels(self.rank)
        return [[labels[i], labels[j], labels[k], c] for (i, j, k), c in self.terms]


def _monomial_key(monomial: tuple[int, ...]) -> tuple:
    return (len(monomial), monomial)


@dataclass(frozen=True)
class BoolPoly:
    """
    Boolskt polynom i ē_1..ē_rank över F2, trunkerat vid grad `degree`

    Monomen är sorterade indextupler; det tomma monomet är konstanten 1.
    """
    rank: int
    monomials: frozenset[tuple[int, ...]] = frozenset()
    degree: int = SIGMA_DEGREE

    def __post_init__(self):
        monomials = frozenset(tuple(m) for m in self.monomials)
        for m in monomials:
            if list(m) != sorted(set(m)) or any(not 0 <= i < self.rank for i in m):
                raise InputError(f"invalid monomial {m} for rank {self.rank}")
            if len(m) > self.degree:
                raise InputError(f"monomial {m} exceeds degree {self.degree}")
        object.__setattr__(self, "monomials", monomials)

    @classmethod
    def zero(cls, rank: int, degree: int = SIGMA_DEGREE) -> "BoolPoly":
        return cls(rank, frozenset(), degree)

    @classmethod
    def one(cls, rank: int, degree: int = SIGMA_DEGREE) -> "BoolPoly":
        return cls(rank, frozenset({()}), degree)

    @classmethod
    def variable(cls, rank: int, index: int, degree: int = SIGMA_DEGREE) -> "BoolPoly":
        return cls(rank, frozenset({(index,)}), degree)

    def _check(self, other: "BoolPoly") -> None:
        if other.rank != self.rank or other.degree != self.degree:
            raise InputError("boolean polynomials live in different rings")

    def __add__(self, other: "BoolPoly") -> "BoolPoly":
        self._check(other)
        return BoolPoly(self.rank, self.monomials ^ other.monomials, self.degree)

    def __mul__(self, other: "BoolPoly") -> "BoolPoly":
        self._check(other)
        result: set[tuple[int, ...]] = set()
        for a in self.monomials:
            for b in other.monomials:
                product = tuple(sorted(set(a) | set(b)))
                if len(product) <= self.degree:
                    result ^= {product}
        return BoolPoly(self.rank, frozenset(result), self.degree)

    def is_zero(self) -> bool:
        return not self.monomials

    def sorted_monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.monomials, key=_monomial_key)

    def labelled(self) -> list[list[str]]:
        labels = basis_labels(self.rank)
        return [[labels[i] for i in m] or ["1"] for m in self.sorted_monomials()]
