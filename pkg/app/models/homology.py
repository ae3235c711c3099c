"""
Homologiklasser, snittform och delgitter

Basen ordnas alltid som x_1..x_m, y_1..y_m med ι(x_i, y_i) = 1.
"""
from dataclasses import dataclass
from math import gcd
from typing import Optional

from sympy import Matrix

from app.exceptions import InputError


def basis_labels(rank: int) -> list[str]:
    """Etiketter x1..xm, y1..ym för ett gitter av rang 2m"""
    if rank <= 0 or rank % 2:
        raise InputError(f"rank must be a positive even number, got {rank}")
    half = rank // 2
    return [f"x{i}" for i in range(1, half + 1)] + [f"y{i}" for i in range(1, half + 1)]


def label_index(label: str, rank: int) -> int:
    """Position för en basetikett, t.ex. 'y2' -> m + 1"""
    try:
        return basis_labels(rank).index(label)
    except ValueError:
        raise InputError(f"unknown basis label {label!r} for rank {rank}") from None


@dataclass(frozen=True)
class HomologyClass:
    """
    Ett element i H_1(Σ; Z) ≅ Z^{2m}

    Koordinaterna följer basordningen x_1..x_m, y_1..y_m.
    """
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if not coords or len(coords) % 2:
            raise InputError(f"homology class needs an even number of coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "HomologyClass":
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, label: str) -> "HomologyClass":
        """Basvektor med given etikett"""
        coords = [0] * rank
        coords[label_index(label, rank)] = 1
        return cls(tuple(coords))

    @classmethod
    def from_terms(cls, rank: int, terms: dict[str, int]) -> "HomologyClass":
        """Bygg en klass från {'y2': 1, 'x2': -1}"""
        coords = [0] * rank
        for label, coefficient in terms.items():
            coords[label_index(label, rank)] += coefficient
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def half_rank(self) -> int:
        return len(self.coords) // 2

    def _check_rank(self, other: "HomologyClass") -> None:
        if other.rank != self.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check_rank(other)
        return HomologyClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        self._check_rank(other)
        return HomologyClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "HomologyClass":
        return HomologyClass(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def content(self) -> int:
        """Största gemensamma delare av koordinaterna"""
        result = 0
        for c in self.coords:
            result = gcd(result, c)
        return result

    def is_primitive(self) -> bool:
        return self.content() == 1

    def primitive(self) -> "HomologyClass":
        """Dela bort innehållet; nollklassen returneras oförändrad"""
        content = self.content()
        if content <= 1:
            return self
        return HomologyClass(tuple(c // content for c in self.coords))

    def pair(self, other: "HomologyClass") -> int:
        """Standardformen ι(u, v) = Σ (u_xi v_yi - u_yi v_xi)"""
        self._check_rank(other)
        m = self.half_rank
        u, v = self.coords, other.coords
        return sum(u[i] * v[m + i] - u[m + i] * v[i] for i in range(m))

    def support(self) -> frozenset[int]:
        """Handtag (1-indexerade) där klassen har nollskild x- eller y-koordinat"""
        m = self.half_rank
        return frozenset(
            i + 1 for i in range(m) if self.coords[i] or self.coords[m + i]
        )

    def terms(self) -> dict[str, int]:
        labels = basis_labels(self.rank)
        return {labels[i]: c for i, c in enumerate(self.coords) if c}

    def __str__(self) -> str:
        parts = []
        for label, c in self.terms().items():
            sign = "-" if c < 0 else "+"
            magnitude = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(f"{sign} {magnitude}{label}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class IntersectionForm:
    """Alternerande heltalsform given av sin Gram-matris"""
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(int(a) for a in row) for row in self.gram)
        size = len(gram)
        if any(len(row) != size for row in gram):
            raise InputError("intersection form must be square")
        for i in range(size):
            if gram[i][i] != 0:
                raise InputError("intersection form must vanish on the diagonal")
            for j in range(i + 1, size):
                if gram[i][j] != -gram[j][i]:
                    raise InputError("intersection form must be alternating")
        object.__setattr__(self, "gram", gram)

    @classmethod
    def standard(cls, rank: int) -> "IntersectionForm":
        m = len(basis_labels(rank)) // 2
        gram = [[0] * rank for _ in range(rank)]
        for i in range(m):
            gram[i][m + i] = 1
            gram[m + i][i] = -1
        return cls(tuple(tuple(row) for row in gram))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def evaluate(self, u: HomologyClass, v: HomologyClass) -> int:
        if u.rank != self.rank or v.rank != self.rank:
            raise InputError("class rank does not match the form")
        return sum(
            u.coords[i] * self.gram[i][j] * v.coords[j]
            for i in range(self.rank) if u.coords[i]
            for j in range(self.rank) if v.coords[j]
        )


@dataclass(frozen=True)
class Sublattice:
    """Delgitter spänt av linjärt oberoende klasser"""
    generators: tuple[HomologyClass, ...]
    form: Optional[IntersectionForm] = None

    def __post_init__(self):
        generators = tuple(self.generators)
        if not generators:
            raise InputError("sublattice needs at least one generator")
        rank = generators[0].rank
        if any(v.rank != rank for v in generators):
            raise InputError("sublattice generators must share a rank")
        if Matrix([list(v.coords) for v in generators]).rank() != len(generators):
            raise InputError("sublattice generators are linearly dependent")
        object.__setattr__(self, "generators", generators)
        if self.form is None:
            object.__setattr__(self, "form", IntersectionForm.standard(rank))

    @property
    def rank(self) -> int:
        return self.generators[0].rank

    def pair(self, u: HomologyClass, v: HomologyClass) -> int:
        return self.form.evaluate(u, v)


@dataclass(frozen=True)
class SymplecticBasisResult:
    """Symplektiska par (z_j, w_j) med ι(z_j, w_j) = 1 samt en bas för radikalen"""
    pairs: tuple[tuple[HomologyClass, HomologyClass], ...]
    radical_basis: tuple[HomologyClass, ...]

    @property
    def genus(self) -> int:
        return len(self.pairs)
