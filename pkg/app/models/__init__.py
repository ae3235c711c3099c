"""
Värdetyper för Torelli-laboratoriet
"""
from app.models.homology import (
    HomologyClass,
    IntersectionForm,
    Sublattice,
    SymplecticBasisResult,
    basis_labels,
    label_index,
)
from app.models.algebra import BoolPoly, Wedge3Vec
from app.models.surface import SubsurfaceDescriptor, SurfaceModel
from app.models.chain import (
    ChainMapValue,
    ChainNotation,
    ExplicitChain,
    GroupWord,
    SeparatingTwist,
    WordToken,
)
from app.models.span import GraphModel, SubspaceBasisQ
from app.models.report import RunReport

__all__ = [
    "HomologyClass",
    "IntersectionForm",
    "Sublattice",
    "SymplecticBasisResult",
    "basis_labels",
    "label_index",
    "BoolPoly",
    "Wedge3Vec",
    "SubsurfaceDescriptor",
    "SurfaceModel",
    "ChainMapValue",
    "ChainNotation",
    "ExplicitChain",
    "GroupWord",
    "SeparatingTwist",
    "WordToken",
    "GraphModel",
    "SubspaceBasisQ",
    "RunReport",
]
