"""
Kedjenotation, gruppord och kedjeavbildningar

En notation (i_1 i_2 ... i_l) står för de l-1 kurvorna
c_{i_j} + c_{i_j + 1} + ... + c_{i_{j+1} - 1}. En β-notation (β 5 i_3 ...)
har β som första kurva och sedan blocken ur (5 i_3 ...).
"""
import re
from dataclasses import dataclass
from typing import Union

from app.exceptions import InputError
from app.models.homology import HomologyClass

BETA_PREFIXES = ("beta", "β", "b")
BETA_START = 5


@dataclass(frozen=True)
class ChainNotation:
    indices: tuple[int, ...]
    beta: bool = False

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        if not indices:
            raise InputError("chain notation needs at least one index")
        if indices[0] < 1:
            raise InputError("chain indices start at 1")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise InputError(f"chain indices must be strictly increasing: {indices}")
        if self.beta and indices[0] != BETA_START:
            raise InputError(f"a beta chain continues at index {BETA_START}")
        object.__setattr__(self, "indices", indices)
        count = self.curve_count
        if count < 1 or count % 2 == 0:
            raise InputError(f"chain {self} has {count} curves; an odd positive number is required")

    @classmethod
    def parse(cls, text: str) -> "ChainNotation":
        """
        Tolka notation som "1346", "[1,3,4,6]", "1 3 4 6" eller "β5678"

        Utan avgränsare räknas varje siffra som ett index.
        """
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1].strip()
        beta = False
        for prefix in BETA_PREFIXES:
            if body.lower().startswith(prefix):
                beta = True
                body = body[len(prefix):].lstrip(" ,")
                break
        if not body:
            raise InputError(f"empty chain notation: {text!r}")
        if re.search(r"[,\s]", body):
            parts = [p for p in re.split(r"[,\s]+", body) if p]
        else:
            parts = list(body)
        if not all(p.isdigit() for p in parts):
            raise InputError(f"malformed chain notation: {text!r}")
        return cls(tuple(int(p) for p in parts), beta)

    @property
    def curve_count(self) -> int:
        return len(self.indices) - 1 + (1 if self.beta else 0)

    @property
    def genus(self) -> int:
        return (self.curve_count - 1) // 2

    def blocks(self) -> list[tuple[int, int]]:
        """Indexintervall [i_j, i_{j+1} - 1] för varje block"""
        return [(a, b - 1) for a, b in zip(self.indices, self.indices[1:])]

    def contains(self, index: int) -> bool:
        return index in self.indices

    def replace(self, old: int, new: int) -> "ChainNotation":
        return ChainNotation(
            tuple(new if i == old else i for i in self.indices), self.beta
        )

    def __str__(self) -> str:
        sep = "" if max(self.indices) < 10 else ","
        body = sep.join(str(i) for i in self.indices)
        prefix = "β" + sep if self.beta else ""
        return f"[{prefix}{body}]"


@dataclass(frozen=True)
class ExplicitChain:
    """Kedja given direkt som homologiklasser, t.ex. begränsande par i lyktrelationen"""
    label: str
    curves: tuple[HomologyClass, ...]

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SeparatingTwist:
    """Vridning längs en separerande kurva, given av en symplektisk bas för det den omsluter"""
    label: str
    pairs: tuple[tuple[HomologyClass, HomologyClass], ...]

    def __str__(self) -> str:
        return self.label


Generator = Union[ChainNotation, ExplicitChain, SeparatingTwist, str]


@dataclass(frozen=True)
class WordToken:
    """
    En faktor (T_{c_1}^{s_1} ... T_{c_r}^{s_r}) * generator^exponent

    Konjugatorerna läses utifrån och in: den första verkar sist.
    En generator som är en sträng är en ren vridning T_c.
    """
    generator: Generator
    exponent: int = 1
    conjugators: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise InputError(f"token exponent must be ±1, got {self.exponent}")
        if any(sign not in (1, -1) for _, sign in self.conjugators):
            raise InputError("conjugator signs must be ±1")

    def inverse(self) -> "WordToken":
        return WordToken(self.generator, -self.exponent, self.conjugators)

    def __str__(self) -> str:
        base = f"T_{self.generator}" if isinstance(self.generator, str) else str(self.generator)
        if self.exponent == -1:
            base += "^-1"
        for name, sign in reversed(self.conjugators):
            twist = f"T_{name}" if sign == 1 else f"T_{name}^-1"
            base = f"({twist})*{base}"
        return base


@dataclass(frozen=True)
class GroupWord:
    tokens: tuple[WordToken, ...] = ()

    @classmethod
    def of(cls, *tokens: WordToken) -> "GroupWord":
        return cls(tuple(tokens))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.tokens + other.tokens)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(t.inverse() for t in reversed(self.tokens)))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self) -> str:
        return " · ".join(str(t) for t in self.tokens) if self.tokens else "1"


@dataclass(frozen=True)
class ChainMapValue:
    """
    Kedja a_1..a_{2h+1} med ι(a_i, a_{i+1}) = 1 och övriga par disjunkta

    boundary_class är summan av kurvorna på udda platser och representerar
    begränsningsparet T_∂1 T_∂2^{-1}.
    """
    curves: tuple[HomologyClass, ...]
    boundary_class: HomologyClass
    genus: int

    def __post_init__(self):
        count = len(self.curves)
        if count % 2 == 0:
            raise InputError(f"a chain map needs an odd number of curves, got {count}")
        if self.genus != (count - 1) // 2:
            raise InputError(f"chain of {count} curves has genus {(count - 1) // 2}, not {self.genus}")
        for i, a in enumerate(self.curves):
            for j in range(i + 1, count):
                expected = 1 if j == i + 1 else 0
                if a.pair(self.curves[j]) != expected:
                    raise InputError(
                        f"curves {i + 1} and {j + 1} pair to {a.pair(self.curves[j])}, expected {expected}"
                    )
        if any(self.boundary_class.pair(a) for a in self.curves):
            raise InputError("boundary class must pair trivially with every chain curve")

    @classmethod
    def from_curves(cls, curves: tuple[HomologyClass, ...]) -> "ChainMapValue":
        if not curves:
            raise InputError("empty chain")
        boundary = curves[0]
        for a in curves[2::2]:
            boundary = boundary + a
        return cls(tuple(curves), boundary, (len(curves) - 1) // 2)
