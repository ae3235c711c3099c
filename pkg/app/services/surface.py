"""
Ytmodell - kurvtabell och delytefamiljer

Kedjekurvorna normeras som c_1 = y_1, c_{2i} = -x_i, c_{2i+1} = y_{i+1} - y_i.
Övriga namngivna kurvor (b, γ_3) löses ur sina snittvillkor mot hela kedjan.
"""
import logging
from functools import lru_cache
from itertools import combinations

from sympy import Matrix

from app.config import SubsurfaceKind
from app.exceptions import InputError
from app.models.homology import HomologyClass
from app.models.surface import SubsurfaceDescriptor, SurfaceModel

logger = logging.getLogger(__name__)


def _chain_curves(g: int, boundary_count: int, rank: int) -> dict[str, HomologyClass]:
    def x(i: int) -> HomologyClass:
        return HomologyClass.basis(rank, f"x{i}")

    def y(i: int) -> HomologyClass:
        return HomologyClass.basis(rank, f"y{i}")

    table = {"c1": y(1)}
    for i in range(1, g + 1):
        table[f"c{2 * i}"] = -x(i)
        if i < g or boundary_count == 2:
            table[f"c{2 * i + 1}"] = y(i + 1) - y(i)
        else:
            table[f"c{2 * i + 1}"] = -y(g)
    if boundary_count == 2:
        # fortsättning av kedjan i Σ_{g+1,1}; ligger inte i S
        table[f"c{2 * g + 2}"] = -x(g + 1)
    return table


def _solve_by_pairings(chain: list[HomologyClass], targets: dict[int, int]) -> HomologyClass:
    """
    Unik klass v med ι(v, c_j) = targets.get(j, 0) för alla kedjekurvor

    Raises:
        RuntimeError om systemet saknar unik heltalslösning
    """
    rank = chain[0].rank
    basis = [HomologyClass(tuple(1 if k == i else 0 for k in range(rank))) for i in range(rank)]
    system = Matrix([[e.pair(c) for e in basis] for c in chain])
    rhs = Matrix([targets.get(j + 1, 0) for j in range(len(chain))])
    try:
        solution, params = system.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise RuntimeError(f"curve constraints are unsatisfiable: {targets}") from exc
    if params.shape[0]:
        raise RuntimeError(f"curve constraints do not determine a unique class: {targets}")
    if any(not entry.is_integer for entry in solution):
        raise RuntimeError(f"curve constraints have no integral solution: {targets}")
    return HomologyClass(tuple(int(entry) for entry in solution))


def _verify(table: dict[str, HomologyClass], chain: list[HomologyClass]) -> None:
    for i, a in enumerate(chain):
        for j in range(i + 1, len(chain)):
            expected = 1 if j == i + 1 else 0
            if a.pair(chain[j]) != expected:
                raise RuntimeError(f"c{i + 1} and c{j + 1} pair to {a.pair(chain[j])}, expected {expected}")
    if "b" in table:
        for j, c in enumerate(chain, start=1):
            if table["b"].pair(c) != (1 if j == 4 else 0):
                raise RuntimeError(f"b pairs wrongly with c{j}")
    for name, v in table.items():
        if not v.is_primitive():
            raise RuntimeError(f"curve {name} is not primitive: {v}")


def solve_curve_table(g: int, boundary_count: int) -> dict[str, HomologyClass]:
    """
    Kurvtabell för Σ_{g,1} (rang 2g) eller S ⊂ Σ_{g+1,1} (rang 2g+2)

    Returns:
        Namn -> klass för c_i, b, beta, gamma3 samt d1, d2 (två ränder)
    """
    if g < 1:
        raise InputError(f"genus must be at least 1, got {g}")
    if boundary_count not in (1, 2):
        raise InputError(f"boundary count must be 1 or 2, got {boundary_count}")
    rank = 2 * g + (2 if boundary_count == 2 else 0)
    table = _chain_curves(g, boundary_count, rank)
    chain = [table[f"c{j}"] for j in range(1, len(table) + 1)]

    if g >= 2:
        table["b"] = _solve_by_pairings(chain, {4: 1})
        table["beta"] = table["b"] + table["c4"]
    if g >= 3:
        # skär c_2 och c_6 en gång var och är disjunkt från resten av kedjan
        table["gamma3"] = _solve_by_pairings(chain, {2: -1, 6: 1})
    if boundary_count == 2:
        boundary = HomologyClass.zero(rank)
        for v in chain[0::2]:
            boundary = boundary + v
        table["d1"] = boundary
        table["d2"] = -boundary

    _verify(table, chain)
    logger.debug("curve table for g=%d, n=%d: %s", g, boundary_count, {k: str(v) for k, v in table.items()})
    return table


@lru_cache(maxsize=None)
def build_surface(g: int, boundary_count: int = 2) -> SurfaceModel:
    """Bygg ytmodellen; resultatet cachas eftersom tabellen bara beror på (g, n)"""
    table = solve_curve_table(g, boundary_count)
    return SurfaceModel(genus=g, boundary_count=boundary_count, curve_table=table)


def curve_support(v: HomologyClass) -> frozenset[int]:
    return v.support()


def _descriptor(kind: SubsurfaceKind, index_set: frozenset[int], g: int) -> SubsurfaceDescriptor:
    size = len(index_set)
    if kind == SubsurfaceKind.R:
        return SubsurfaceDescriptor(kind, index_set, 1, 1, index_set)
    if kind == SubsurfaceKind.S:
        return SubsurfaceDescriptor(kind, index_set, size, 2, index_set)
    if kind == SubsurfaceKind.W:
        if g + 1 in index_set:
            return SubsurfaceDescriptor(kind, index_set, size - 1, 2, index_set)
        return SubsurfaceDescriptor(kind, index_set, size, 1, index_set)
    if kind == SubsurfaceKind.Y:
        rest = frozenset(range(1, g + 1)) - index_set
        return SubsurfaceDescriptor(kind, index_set, g - 1, 3, rest)
    return SubsurfaceDescriptor(kind, index_set, size, 2 + g - size, index_set)


def enumerate_subsurfaces(kind: SubsurfaceKind, g: int, m: int) -> list[SubsurfaceDescriptor]:
    """
    Alla delytor av given familj med |I| = m

    R_i och Y_i indexeras av ett enda handtag och kräver m = 1;
    W_I tillåter randhandtaget g+1.
    """
    kind = SubsurfaceKind(kind)
    top = g + 1 if kind == SubsurfaceKind.W else g
    if kind in (SubsurfaceKind.R, SubsurfaceKind.Y) and m != 1:
        raise InputError(f"{kind.value} is indexed by a single handle")
    if not 1 <= m <= top:
        raise InputError(f"subset size {m} outside 1..{top}")
    return [
        _descriptor(kind, frozenset(subset), g)
        for subset in combinations(range(1, top + 1), m)
    ]


def generator_support_cover(g: int, m: int) -> bool:
    """
    True om varje Humphries-kurva (c_1..c_{2g+1}, b) ryms i något W_J med |J| = m

    Stödet för en kurva är de handtag dess klass berör i tvårandsmodellen.
    """
    if m < 1:
        raise InputError(f"subset size must be positive, got {m}")
    if m > g + 1:
        raise InputError(f"subset size {m} exceeds the {g + 1} available handles")
    model = build_surface(g, 2)
    names = [f"c{i}" for i in range(1, model.chain_length + 1)] + ["b"]
    widest = max(len(curve_support(model.curve(name))) for name in names)
    logger.debug("widest generator support at g=%d is %d handles", g, widest)
    return widest <= m
