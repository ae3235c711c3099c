"""
Delrum i ⋀³ över Q och disjunkthetsgrafer
"""
import bisect
from dataclasses import dataclass
from math import gcd

import networkx as nx

from app.exceptions import InputError
from app.models.algebra import Triple, Wedge3Vec
from app.models.surface import SubsurfaceDescriptor


def _normalize(row: dict[Triple, int]) -> dict[Triple, int]:
    """Dela bort innehållet och gör pivotkoefficienten positiv"""
    content = 0
    for c in row.values():
        content = gcd(content, c)
    if row[min(row)] < 0:
        content = -content
    return {t: c // content for t, c in row.items()}


class SubspaceBasisQ:
    """
    Trappstegsbas över Q med heltalsrader (bråkfri elimination)

    Raderna hålls sorterade efter pivot; varje rad är primitiv med positiv
    pivot och saknar nollskilda poster före sin pivot.
    """

    def __init__(self, rank: int):
        self.rank = rank
        self._pivots: list[Triple] = []
        self._rows: dict[Triple, dict[Triple, int]] = {}

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, vector: Wedge3Vec) -> dict[Triple, int]:
        """Rest av vektorn efter eliminering mot alla pivoter (i stigande ordning)"""
        if vector.rank != self.rank:
            raise InputError(f"rank mismatch: {vector.rank} vs {self.rank}")
        residue = vector.as_dict()
        for pivot in self._pivots:
            if not residue:
                break
            c = residue.get(pivot)
            if not c:
                continue
            row = self._rows[pivot]
            p = row[pivot]
            updated = {t: p * v for t, v in residue.items()}
            for t, v in row.items():
                updated[t] = updated.get(t, 0) - c * v
            residue = {t: v for t, v in updated.items() if v}
            if residue:
                residue = _normalize(residue)
        return residue

    def add(self, vector: Wedge3Vec) -> bool:
        """Lägg till vektorn; returnerar True om dimensionen växte"""
        residue = self.reduce(vector)
        if not residue:
            return False
        residue = _normalize(residue)
        pivot = min(residue)
        bisect.insort(self._pivots, pivot)
        self._rows[pivot] = residue
        return True

    def contains(self, vector: Wedge3Vec) -> bool:
        return not self.reduce(vector)

    def pivots(self) -> list[Triple]:
        return list(self._pivots)


@dataclass(frozen=True)
class GraphModel:
    """Hörn är delytor; kanter förbinder par med disjunkta indexmängder"""
    vertices: tuple[SubsurfaceDescriptor, ...]
    edges: tuple[tuple[int, int], ...]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.vertices)))
        graph.add_edges_from(self.edges)
        return graph
