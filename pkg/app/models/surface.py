"""
Ytmodell: genus-g-yta med en eller två ränder och dess kurvtabell
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from app.config import SubsurfaceKind
from app.exceptions import InputError
from app.models.homology import HomologyClass


@dataclass(frozen=True)
class SurfaceModel:
    """
    Σ_{g,n} för n ∈ {1, 2}

    För n = 2 ses ytan inuti Σ_{g+1,1}; homologin har då rang 2g+2 och
    randklassen är y_{g+1}. Kurvtabellen bestäms helt av (g, n).
    """
    genus: int
    boundary_count: int
    curve_table: Mapping[str, HomologyClass] = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "curve_table", MappingProxyType(dict(self.curve_table)))

    @property
    def rank(self) -> int:
        return 2 * self.handle_count

    @property
    def handle_count(self) -> int:
        return self.genus + (1 if self.boundary_count == 2 else 0)

    @property
    def chain_length(self) -> int:
        """Antal kurvor c_1..c_{2g+1} i den yttre kedjan"""
        return 2 * self.genus + 1

    @property
    def max_index(self) -> int:
        """Största index i en kedjenotation; (1 2 ... 2g+2) är hela kedjan"""
        return 2 * self.genus + 2

    def has_curve(self, name: str) -> bool:
        return name in self.curve_table

    def curve(self, name: str) -> HomologyClass:
        try:
            return self.curve_table[name]
        except KeyError:
            raise InputError(f"curve {name!r} is not defined for genus {self.genus}") from None

    def chain_curve(self, index: int) -> HomologyClass:
        if not 1 <= index <= self.chain_length:
            raise InputError(f"chain curve c{index} outside 1..{self.chain_length}")
        return self.curve_table[f"c{index}"]


@dataclass(frozen=True)
class SubsurfaceDescriptor:
    """Delyta i en av familjerna R_i, S_I, W_I, Y_i, X_I"""
    kind: SubsurfaceKind
    index_set: frozenset[int]
    genus: int
    boundary_count: int
    support_handles: frozenset[int] = frozenset()

    @property
    def label(self) -> str:
        indices = ",".join(str(i) for i in sorted(self.index_set))
        return f"{self.kind.value.split('_')[0]}_{{{indices}}}"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "index_set": sorted(self.index_set),
            "genus": self.genus,
            "boundary_count": self.boundary_count,
            "support_handles": sorted(self.support_handles),
        }
