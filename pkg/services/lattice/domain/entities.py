from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from services.lattice.domain.errors import (
    DominanceError,
    EndpointMismatchError,
    LabelOutOfRangeError,
    LengthMismatchError,
    PreconditionError,
    PresentationFormatError,
)

EAST = "E"
NORTH = "N"


@dataclass(frozen=True)
class PathWord:
    """Lattice path written over {E, N}."""

    steps: str = ""

    def __post_init__(self):
        for index, step in enumerate(self.steps, start=1):
            if step not in (EAST, NORTH):
                raise PresentationFormatError(
                    f"malformed character {step!r} at position {index}", position=index
                )

    @property
    def m(self) -> int:
        return self.steps.count(EAST)

    @property
    def r(self) -> int:
        return self.steps.count(NORTH)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __add__(self, other: "PathWord") -> "PathWord":
        return PathWord(self.steps + other.steps)

    def prefix(self, i: int) -> "PathWord":
        return PathWord(self.steps[:i])

    def suffix(self, i: int) -> "PathWord":
        """Steps after the first ``i``."""
        return PathWord(self.steps[i:])

    def north_counts(self) -> List[int]:
        """Number of N steps in each prefix of length 1..len."""
        counts = []
        total = 0
        for step in self.steps:
            total += step == NORTH
            counts.append(total)
        return counts

    def north_positions(self) -> List[int]:
        """1-based positions of the N steps."""
        return [i for i, step in enumerate(self.steps, start=1) if step == NORTH]

    def without(self, index: int) -> "PathWord":
        """Word with the step at 0-based ``index`` removed."""
        return PathWord(self.steps[:index] + self.steps[index + 1 :])

    def swapped(self) -> "PathWord":
        return PathWord(self.steps.translate(str.maketrans("EN", "NE")))


@dataclass(frozen=True)
class PathPresentation:
    """Pair of bounding paths with a contiguous ground-set labelling."""

    lower: PathWord
    upper: PathWord
    label_offset: int = 1

    def __post_init__(self):
        lower, upper = self.lower.steps, self.upper.steps
        if len(lower) != len(upper):
            raise LengthMismatchError(
                f"lower has {len(lower)} steps, upper has {len(upper)}",
                position=min(len(lower), len(upper)) + 1,
            )
        if self.lower.m != self.upper.m or self.lower.r != self.upper.r:
            raise EndpointMismatchError(
                f"lower ends at ({self.lower.m},{self.lower.r}), "
                f"upper ends at ({self.upper.m},{self.upper.r})",
                position=len(lower),
            )
        lower_norths = upper_norths = 0
        for index, (p, q) in enumerate(zip(lower, upper), start=1):
            lower_norths += p == NORTH
            upper_norths += q == NORTH
            if lower_norths > upper_norths:
                raise DominanceError(
                    f"dominance violated at position {index}", position=index
                )

    @classmethod
    def from_words(cls, lower: str, upper: str, label_offset: int = 1) -> "PathPresentation":
        return cls(PathWord(lower), PathWord(upper), label_offset)

    @property
    def m(self) -> int:
        return self.lower.m

    @property
    def r(self) -> int:
        return self.lower.r

    @property
    def size(self) -> int:
        return len(self.lower)

    @property
    def first_label(self) -> int:
        return self.label_offset

    @property
    def last_label(self) -> int:
        return self.label_offset + self.size - 1

    @property
    def ground_set(self) -> range:
        return range(self.label_offset, self.label_offset + self.size)

    @property
    def key(self) -> Tuple[str, str]:
        """Word pair, ignoring labels."""
        return self.lower.steps, self.upper.steps

    def index_of(self, label: int) -> int:
        """0-based step index of ``label``."""
        if not self.label_offset <= label <= self.last_label:
            raise LabelOutOfRangeError(label, self.first_label, self.last_label)
        return label - self.label_offset

    def check_labels(self, labels: Iterable[int]) -> FrozenSet[int]:
        labels = frozenset(labels)
        for label in sorted(labels):
            self.index_of(label)
        return labels

    def normalized(self) -> "PathPresentation":
        if self.label_offset == 1:
            return self
        return PathPresentation(self.lower, self.upper, 1)

    def with_words(self, lower: str, upper: str) -> "PathPresentation":
        return PathPresentation(PathWord(lower), PathWord(upper), self.label_offset)

    def __str__(self) -> str:
        return f"{self.lower.steps}/{self.upper.steps}"


@dataclass(frozen=True)
class IntervalSystem:
    """Transversal presentation (N_i : i in [r]) of a lattice path matroid."""

    intervals: Tuple[Tuple[int, int], ...]

    def containing(self, label: int) -> List[int]:
        """0-based indices of the intervals that contain ``label``."""
        return [i for i, (low, high) in enumerate(self.intervals) if low <= label <= high]


class ElementClass(str, Enum):
    LOOP = "loop"
    ISTHMUS = "isthmus"
    ORDINARY = "ordinary"


class StepKind(str, Enum):
    DELETE = "D"
    CONTRACT = "C"


@dataclass(frozen=True)
class WitnessStep:
    """One deletion or contraction, labelled in the presentation current at that step."""

    op: StepKind
    label: int

    def __str__(self) -> str:
        return f"{self.op.value} {self.label}"


@dataclass(frozen=True)
class MinorWitness:
    """Ordered delete/contract steps certifying a presentation minor."""

    steps: Tuple[WitnessStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def deletions(self) -> int:
        return sum(step.op is StepKind.DELETE for step in self.steps)

    @property
    def contractions(self) -> int:
        return sum(step.op is StepKind.CONTRACT for step in self.steps)


@dataclass(frozen=True)
class SquareRecord:
    """A k x k square at prefix position i."""

    position: int
    size: int
    proper: bool


@dataclass(frozen=True)
class ExplicitMatroid:
    """Matroid on [n] stored as its sorted basis family."""

    ground_size: int
    bases: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.bases:
            raise PreconditionError("a matroid needs at least one basis")
        rank = len(self.bases[0])
        for basis in self.bases:
            if len(basis) != rank:
                raise PreconditionError("bases must all have the same size")
            if list(basis) != sorted(set(basis)):
                raise PreconditionError(f"basis {basis} is not a sorted set")
            for label in basis:
                if not 1 <= label <= self.ground_size:
                    raise LabelOutOfRangeError(label, 1, self.ground_size)
        if list(self.bases) != sorted(set(self.bases)):
            raise PreconditionError("basis family must be sorted and duplicate-free")

    @classmethod
    def from_bases(cls, ground_size: int, bases: Iterable[Iterable[int]]) -> "ExplicitMatroid":
        family = sorted({tuple(sorted(basis)) for basis in bases})
        return cls(ground_size, tuple(family))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def ground_set(self) -> range:
        return range(1, self.ground_size + 1)

    @cached_property
    def basis_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << (x - 1) for x in basis) for basis in self.bases)

    @cached_property
    def basis_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(basis) for basis in self.bases)

    def mask_of(self, labels: Iterable[int]) -> int:
        mask = 0
        for label in labels:
            if not 1 <= label <= self.ground_size:
                raise LabelOutOfRangeError(label, 1, self.ground_size)
            mask |= 1 << (label - 1)
        return mask

    def rank_of_mask(self, mask: int) -> int:
        return max(bin(basis & mask).count("1") for basis in self.basis_masks)

    def rank_of(self, labels: Iterable[int]) -> int:
        return self.rank_of_mask(self.mask_of(labels))

    def is_independent(self, labels: Iterable[int]) -> bool:
        mask = self.mask_of(labels)
        return any(basis & mask == mask for basis in self.basis_masks)

    def is_basis(self, labels: Iterable[int]) -> bool:
        return frozenset(labels) in self.basis_sets

    def loops(self) -> List[int]:
        used = 0
        for basis in self.basis_masks:
            used |= basis
        return [x for x in self.ground_set if not used >> (x - 1) & 1]

    def coloops(self) -> List[int]:
        common = (1 << self.ground_size) - 1
        for basis in self.basis_masks:
            common &= basis
        return [x for x in self.ground_set if common >> (x - 1) & 1]

    def element_degrees(self) -> Dict[int, int]:
        """Number of bases containing each element."""
        degrees = {x: 0 for x in self.ground_set}
        for basis in self.bases:
            for x in basis:
                degrees[x] += 1
        return degrees

    def satisfies_basis_exchange(self) -> bool:
        basis_sets = self.basis_sets
        for first, second in combinations(basis_sets, 2):
            for a, b in ((first, second), (second, first)):
                for x in a - b:
                    if not any((a - {x}) | {y} in basis_sets for y in b - a):
                        return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.ground_size, "bases": [list(basis) for basis in self.bases]}


@dataclass(frozen=True)
class OracleMinorCertificate:
    """Removed elements and the isomorphism from large \\ D / C onto small."""

    deleted: Tuple[int, ...]
    contracted: Tuple[int, ...]
    mapping: Dict[int, int] = field(hash=False)


@dataclass(frozen=True, eq=False)
class BranchDecomposition:
    """Cubic tree whose leaves are the ground elements (int nodes)."""

    tree: nx.Graph
    width: int

    @property
    def leaves(self) -> List[int]:
        return sorted(node for node in self.tree.nodes if isinstance(node, int))


@dataclass(frozen=True)
class LoopColoopCode:
    """Square-width-0 matroid as (loops, coloops)."""

    loops: int
    coloops: int

    def __post_init__(self):
        if self.loops < 0 or self.coloops < 0:
            raise PreconditionError("loop and coloop counts must be non-negative")


@dataclass(frozen=True)
class MinorPoset:
    """Items with the pairwise minor relation; relation[i][j] means items[i] <= items[j]."""

    items: Tuple[Any, ...]
    relation: Tuple[Tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.items)

    def le(self, i: int, j: int) -> bool:
        return self.relation[i][j]

    def comparable(self, i: int, j: int) -> bool:
        return self.relation[i][j] or self.relation[j][i]


@dataclass(frozen=True)
class EvidenceRow:
    """One sample of the anti-chain evidence table."""

    sample_id: int
    size: int
    square_width: int
    max_antichain: int
    longest_chain: int

    def as_tuple(self) -> Sequence[int]:
        return (
            self.sample_id,
            self.size,
            self.square_width,
            self.max_antichain,
            self.longest_chain,
        )
