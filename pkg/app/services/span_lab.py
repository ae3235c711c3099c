"""
Spann- och rangberäkningar, banslutning och disjunkthetsgrafer
"""
import logging
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from app.config import CLAIMED_GENERATOR_COUNT, SIGMA_DEGREE, SubsurfaceKind
from app.exceptions import InputError
from app.models.algebra import BoolPoly, Wedge3Vec
from app.models.homology import basis_labels
from app.models.span import GraphModel, SubspaceBasisQ
from app.models.surface import SurfaceModel
from app.services.bcj_sigma import all_monomials, bool_rank
from app.services.johnson_tau import act_wedge3
from app.services.surface import build_surface, enumerate_subsurfaces
from app.services.symplectic import IntMatrix, sp_membership, twist_matrix

logger = logging.getLogger(__name__)


def span_dim_Q(vectors: Iterable[Wedge3Vec]) -> int:
    """Rang över Q med bråkfri elimination"""
    basis = None
    for v in vectors:
        if basis is None:
            basis = SubspaceBasisQ(v.rank)
        basis.add(v)
    return 0 if basis is None else basis.dim


def span_dim_F2(polys: Iterable[BoolPoly]) -> int:
    """Rang över F2; varje polynom blir ett heltal där bit i är monom nummer i"""
    pivots: dict[int, int] = {}
    index = None
    shape = None
    for p in polys:
        if index is None:
            shape = (p.rank, p.degree)
            index = {m: i for i, m in enumerate(all_monomials(p.rank, p.degree))}
        elif (p.rank, p.degree) != shape:
            raise InputError(f"polynomial of rank {p.rank} and degree {p.degree} does not match {shape}")
        row = 0
        for m in p.monomials:
            row |= 1 << index[m]
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def expected_tau_dim(g: int, boundary_count: int = 2) -> int:
    """C(2g+1, 3) för två ränder, C(2g, 3) för en"""
    return comb(2 * g + (1 if boundary_count == 2 else 0), 3)


def expected_sigma_dim(g: int, boundary_count: int = 2) -> int:
    return bool_rank(2 * g + (1 if boundary_count == 2 else 0), SIGMA_DEGREE)


def humphries_matrices(model: SurfaceModel) -> list[IntMatrix]:
    """Homologiverkan av T_{c_1}..T_{c_2g} och T_b"""
    names = [f"c{i}" for i in range(1, 2 * model.genus + 1)] + ["b"]
    return [twist_matrix(model.curve(name)) for name in names]


def seed_subspace(model: SurfaceModel, handles: Iterable[int]) -> list[Wedge3Vec]:
    """
    V_I: bastripler i ⋀³V_Z vars handtagsstöd ligger i I ∪ {g+1}

    V_Z saknar x_{g+1}, så randhandtaget bidrar bara med y_{g+1}.
    """
    g = model.genus
    labels = basis_labels(model.rank)
    allowed = set(handles)
    letters = []
    for position, label in enumerate(labels):
        handle = int(label[1:])
        if handle == g + 1:
            if label[0] == "y":
                letters.append(position)
        elif handle in allowed:
            letters.append(position)
    return [Wedge3Vec(model.rank, ((triple, 1),)) for triple in combinations(sorted(letters), 3)]


def orbit_closure_span(
    seed_subspaces: Sequence[Sequence[Wedge3Vec]],
    generators: Sequence[IntMatrix],
    target_dim: int,
) -> tuple[int, int]:
    """
    Minsta delrum som innehåller fröna och är stabilt under generatorerna

    Bara nytillkomna vektorer avbildas i varje varv. Returnerar (dimension,
    antal varv där dimensionen växte).

    Raises:
        InputError om någon generator inte är symplektisk
    """
    if any(not sp_membership(matrix) for matrix in generators):
        raise InputError("orbit generators must be symplectic")
    basis = None
    frontier = []
    for seed in seed_subspaces:
        for v in seed:
            if basis is None:
                basis = SubspaceBasisQ(v.rank)
            if basis.add(v):
                frontier.append(v)
    if basis is None:
        return 0, 0

    rounds = 0
    while frontier:
        grown = []
        for v in frontier:
            for matrix in generators:
                image = act_wedge3(matrix, v)
                if basis.add(image):
                    grown.append(image)
        if grown:
            rounds += 1
            logger.debug("orbit closure round %d: dimension %d", rounds, basis.dim)
        if rounds > target_dim:
            raise RuntimeError(f"orbit closure did not stabilise within {target_dim} rounds")
        frontier = grown
    return basis.dim, rounds


def closure_for_size(g: int, d: int) -> tuple[int, int]:
    """Banslutning från alla V_I med |I| = d, I ⊆ {1..g+1}"""
    model = build_surface(g, 2)
    seeds = [
        seed_subspace(model, descriptor.index_set)
        for descriptor in enumerate_subsurfaces(SubsurfaceKind.W, g, d)
    ]
    return orbit_closure_span(seeds, humphries_matrices(model), expected_tau_dim(g))


def d_min_search(g: int) -> int:
    """Minsta d där frön med |I| = d når hela ⋀³V_Z"""
    if g < 3:
        raise InputError(f"d_min search needs g >= 3, got {g}")
    target = expected_tau_dim(g)
    for d in range(1, g + 2):
        final_dim, rounds = closure_for_size(g, d)
        logger.info("g=%d, |I|=%d: closure dimension %d/%d after %d rounds", g, d, final_dim, target, rounds)
        if final_dim == target:
            return d
    raise RuntimeError(f"no seed size reaches dimension {target} at genus {g}")


def disjointness_graph(g: int, m: int) -> GraphModel:
    """Hörn: m-delmängder av {1..g+1}; kanter mellan disjunkta mängder"""
    if not 1 <= m <= g + 1:
        raise InputError(f"m must lie in 1..{g + 1}, got {m}")
    vertices = tuple(enumerate_subsurfaces(SubsurfaceKind.W, g, m))
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vertices)))
    graph.add_edges_from(
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if vertices[i].index_set.isdisjoint(vertices[j].index_set)
    )
    return GraphModel(vertices, tuple(sorted(graph.edges())))


def is_connected(graph: GraphModel) -> bool:
    """Sammanhängande och icke-trivial (minst två hörn)"""
    if len(graph.vertices) < 2:
        return False
    return nx.is_connected(graph.to_networkx())


def vertex_classes(graph: GraphModel, g: int) -> dict[str, int]:
    """Antal hörn som innehåller randhandtaget g+1 respektive inte"""
    with_boundary = sum(1 for v in graph.vertices if g + 1 in v.index_set)
    return {"with_boundary_handle": with_boundary, "without_boundary_handle": len(graph.vertices) - with_boundary}


def cubic_count_report(g: int, generators_per_subsurface: int) -> dict:
    """C(g,3)·|gens(3)| jämfört med den publicerade räkningen 85·C(g,3)"""
    subsurfaces = comb(g, 3)
    return {
        "subsurfaces": subsurfaces,
        "generators_per_subsurface": generators_per_subsurface,
        "total": subsurfaces * generators_per_subsurface,
        "claimed_total": subsurfaces * CLAIMED_GENERATOR_COUNT,
    }
