"""
Kedjekalkyl - delkedjor, randklasser, omskrivning och relationsord

Hanterar:
- expansion av notation till homologiklasser
- konjugering av kedjeavbildningar med T_{c_j} och T_b
- relationsorden J1, J2, J3 och lyktrelationen
- uppräkning av genererande kedjeavbildningar
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence, Union

from app.config import MIN_RELATION_GENUS, RelationName
from app.exceptions import InputError, NoRewriteRuleError
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
from app.services.surface import build_surface

logger = logging.getLogger(__name__)

# β skär c_3 och c_4, så vridningar längs dem har ingen regel för β-kedjor
BETA_BLOCKED_TWISTS = (3, 4)


def chain_sum(a: HomologyClass, b: HomologyClass) -> HomologyClass:
    """Homologiklassen för T^{-1}_b(a) när a och b är kedjegrannar"""
    if a.pair(b) not in (1, -1):
        raise InputError(f"{a} and {b} are not chain neighbours (pairing {a.pair(b)})")
    return a + b


def boundary_class(chain: Union[ChainMapValue, Sequence[HomologyClass]]) -> HomologyClass:
    """Summan av kurvorna på udda platser"""
    curves = chain.curves if isinstance(chain, ChainMapValue) else tuple(chain)
    if not curves or len(curves) % 2 == 0:
        raise InputError(f"boundary class needs an odd chain, got {len(curves)} curves")
    total = curves[0]
    for a in curves[2::2]:
        total = total + a
    return total


@lru_cache(maxsize=None)
def expand_subchain(n: ChainNotation, model: SurfaceModel) -> ChainMapValue:
    """
    Kurvorna i en delkedja som homologiklasser

    (1346) ger c_1 + c_2, c_3, c_4 + c_5.
    """
    if n.indices[-1] > model.max_index:
        raise InputError(f"chain {n} exceeds index {model.max_index} at genus {model.genus}")
    curves = []
    if n.beta:
        if not model.has_curve("beta"):
            raise InputError(f"genus {model.genus} has no beta curve")
        curves.append(model.curve("beta"))
    for start, end in n.blocks():
        block = model.chain_curve(start)
        for index in range(start + 1, end + 1):
            block = block + model.chain_curve(index)
        curves.append(block)
    return ChainMapValue.from_curves(tuple(curves))


def explicit_chain_value(chain: ExplicitChain) -> ChainMapValue:
    return ChainMapValue.from_curves(chain.curves)


def commutes_with_twist(j: int, n: ChainNotation) -> bool:
    """
    T_{c_j} kommuterar med [i_1 i_2 ...] omm j och j+1 båda finns bland
    indexen eller båda saknas. För β-kedjor kommuterar c_3 och c_4 aldrig.
    """
    if n.beta and j in BETA_BLOCKED_TWISTS:
        return False
    return n.contains(j) == n.contains(j + 1)


def conjugate_by_twist(j: int, sign: int, n: ChainNotation, max_index: Optional[int] = None) -> GroupWord:
    """
    T_{c_j}^sign * n uttryckt i kedjeavbildningar

    Regler (n' = j flyttad till j+1, n'' = j+1 flyttad till j):
    - j i indexen, j+1 inte: sign -1 ger n', sign +1 ger n·n'^{-1}·n
    - j+1 i indexen, j inte: sign +1 ger n'', sign -1 ger n·n''^{-1}·n
    - annars kommuterar vridningen och n returneras

    Raises:
        InputError om j eller sign är ogiltiga
        NoRewriteRuleError för β-kedjor där β själv skulle flyttas
    """
    if sign not in (1, -1):
        raise InputError(f"twist sign must be ±1, got {sign}")
    if j < 1 or (max_index is not None and j + 1 > max_index):
        raise InputError(f"twist index c{j} is outside the chain")
    if n.beta and j in BETA_BLOCKED_TWISTS:
        raise NoRewriteRuleError(f"T_c{j} meets beta in {n}")
    if commutes_with_twist(j, n):
        return GroupWord.of(WordToken(n))

    if n.contains(j):
        if n.beta and j == n.indices[0]:
            raise NoRewriteRuleError(f"T_c{j} would move the start of {n}")
        moved = n.replace(j, j + 1)
        single_sign = -1
    else:
        moved = n.replace(j + 1, j)
        single_sign = 1

    if sign == single_sign:
        word = GroupWord.of(WordToken(moved))
    else:
        word = GroupWord.of(WordToken(n), WordToken(moved, -1), WordToken(n))
    logger.debug("T_c%d^%d * %s = %s", j, sign, n, word)
    return word


def conjugate_by_b(sign: int, n: ChainNotation) -> GroupWord:
    """
    T_b^sign * n; b skär bara c_4, så T_b * [4 5 i_3 ...] = [β 5 i_3 ...]

    Raises:
        NoRewriteRuleError när bilden inte är en notation
    """
    if sign not in (1, -1):
        raise InputError(f"twist sign must be ±1, got {sign}")
    if n.beta:
        raise NoRewriteRuleError(f"T_b meets beta in {n}")
    if not any(start <= 4 <= end for start, end in n.blocks()):
        return GroupWord.of(WordToken(n))
    if sign == 1 and n.indices[:2] == (4, 5):
        image = ChainNotation((5,) + n.indices[2:], beta=True)
        return GroupWord.of(WordToken(image))
    raise NoRewriteRuleError(f"T_b^{sign} * {n} is not a chain notation")


def _straight(first: int, last: int) -> ChainNotation:
    return ChainNotation(tuple(range(first, last + 1)))


def gamma_chain(k: int, model: SurfaceModel) -> ExplicitChain:
    """Kedjan [2 3' 6 7 ... 2k+1] där blocket 3'..5 är γ_3"""
    curves = [model.chain_curve(2), model.curve("gamma3")]
    curves += [model.chain_curve(i) for i in range(6, 2 * k + 1)]
    label = "[2,3',6,...,%d]" % (2 * k + 1) if k > 3 else "[23'67]"
    return ExplicitChain(label, tuple(curves))


def lantern_words(k: int, model: SurfaceModel) -> tuple[GroupWord, GroupWord]:
    """
    Lyktrelationen på handtagen p = k-1 och q = k

    Den separerande vridningen runt båda handtagen skrivs som en produkt av
    tre begränsande par, här som explicita 3-kedjor (b, δ, randklass - b).
    """
    if not 2 <= k <= model.genus:
        raise InputError(f"lantern handles k-1, k need 2 <= k <= {model.genus}, got {k}")
    rank = model.rank
    p, q = k - 1, k
    x_p, y_p = HomologyClass.basis(rank, f"x{p}"), HomologyClass.basis(rank, f"y{p}")
    x_q, y_q = HomologyClass.basis(rank, f"x{q}"), HomologyClass.basis(rank, f"y{q}")

    b2, b3, b4 = y_p, y_q - y_p, -y_q
    d23, d34, d24 = -x_p, -x_q, -x_p - x_q
    separating = SeparatingTwist(f"T_b1[{p},{q}]", ((x_p, y_p), (x_q, y_q)))
    bounding_pairs = (
        ExplicitChain("T_x T_b4^-1", (b2, d23, b4 - b2)),
        ExplicitChain("T_y T_b2^-1", (b3, d34, b2 - b3)),
        ExplicitChain("T_z T_b3^-1", (b2, d24, b3 - b2)),
    )
    lhs = GroupWord.of(WordToken(separating))
    rhs = GroupWord(tuple(WordToken(bp) for bp in bounding_pairs))
    return lhs, rhs


def relation_words(name: RelationName, k: int, model: SurfaceModel) -> tuple[GroupWord, GroupWord]:
    """
    Vänster- och högerled för J1, J2, J3 eller lyktrelationen

    J1 bär faktorn [6 7 ... 2k+1] i vänsterledet när k >= 4; för k = 3 är
    den en enkurvskedja och utelämnas. J3 tillåter k = g+1.
    """
    name = RelationName(name)
    if name == RelationName.LANTERN:
        return lantern_words(k, model)

    top = model.genus + 1 if name == RelationName.J3 else model.genus
    if not MIN_RELATION_GENUS <= k <= top:
        raise InputError(f"{name.value} needs {MIN_RELATION_GENUS} <= k <= {top}, got {k}")
    conj_b = (("b", 1),)

    if name == RelationName.J1:
        lhs = [WordToken(_straight(2, 2 * k + 1))]
        if k > 3:
            lhs.append(WordToken(_straight(6, 2 * k + 1)))
        rhs = [
            WordToken(gamma_chain(k, model)),
            WordToken(_straight(4, 2 * k + 1)),
            WordToken(_straight(2, 5)),
        ]
    elif name == RelationName.J2:
        full = _straight(2, 2 * k + 1)
        lhs = [WordToken(full, -1), WordToken(full, 1, conj_b)]
        rhs = [
            WordToken(_straight(2, 5), -1),
            WordToken(_straight(4, 2 * k + 1), -1),
            WordToken(ChainNotation(tuple(range(5, 2 * k + 2)), beta=True)),
            WordToken(_straight(2, 5), 1, conj_b),
        ]
    else:
        lhs = [
            WordToken(_straight(1, 4)),
            WordToken(ChainNotation((1, 2) + tuple(range(5, 2 * k + 1)))),
            WordToken(_straight(3, 2 * k), 1, conj_b),
        ]
        rhs = [
            WordToken(_straight(5, 2 * k)),
            WordToken(_straight(1, 2 * k)),
        ]
    return GroupWord(tuple(lhs)), GroupWord(tuple(rhs))


def enumerate_generators(g: int, boundary_count: int = 2) -> list[ChainNotation]:
    """
    Udda delkedjor av (1 2 ... 2g+2) samt β-kedjor (β 5 T), T ⊆ {6..2g+2}, |T| jämn

    Varje notation valideras genom expansion i modellen.
    """
    if g < MIN_RELATION_GENUS:
        raise InputError(f"generator enumeration needs g >= {MIN_RELATION_GENUS}, got {g}")
    model = build_surface(g, boundary_count)
    top = model.max_index
    generators = []
    for size in range(2, top + 1, 2):
        generators.extend(ChainNotation(subset) for subset in combinations(range(1, top + 1), size))
    tail = range(6, top + 1)
    for size in range(0, len(tail) + 1, 2):
        generators.extend(ChainNotation((5,) + subset, beta=True) for subset in combinations(tail, size))
    for n in generators:
        expand_subchain(n, model)
    logger.info("enumerated %d generators at genus %d", len(generators), g)
    return generators
