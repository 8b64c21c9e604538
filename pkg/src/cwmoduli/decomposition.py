"""Partitions of Hurwitz items by representation type, and their refinements.

Items carrying equal multiplicity vectors at level k share a block of the
level-k decomposition; the canonical decomposition is the common refinement
over k = 1..|G|, which the periodicity of the multiplicity formulas proves is
already the limit. The stabilization report re-checks that claim numerically
instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .characters import CharacterTable
from .chevalley_weil import MultiplicityVector, _genus_of, cw_character
from .errors import InternalConsistencyError
from .hurwitz import HurwitzVector

__all__ = [
    "RepresentationType",
    "Decomposition",
    "CanonicalDecomposition",
    "LevelReport",
    "StabilizationReport",
    "decompose_at_k",
    "refine",
    "canonical_decomposition",
    "stabilization_report",
]

# A block key is one multiplicity tuple per covered level, in level order.
BlockKey = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class RepresentationType:
    """Multiplicity vectors over a consecutive range of levels."""

    k_range: Tuple[int, int]
    vectors: Tuple[MultiplicityVector, ...]

    def __post_init__(self) -> None:
        lo, hi = self.k_range
        expected = tuple(range(lo, hi + 1))
        if tuple(mv.k for mv in self.vectors) != expected:
            raise ValueError(
                f"vector levels {[mv.k for mv in self.vectors]} do not cover {lo}..{hi}")

    @property
    def key(self) -> BlockKey:
        return tuple(mv.mults for mv in self.vectors)


@dataclass(frozen=True)
class Decomposition:
    """A partition of an item sequence, blocks keyed by representation type.

    blocks[b] lists item indices ascending; keys[b] is the shared key; blocks
    are ordered by key, lexicographically, so reports are diffable.
    """

    items: Tuple[HurwitzVector, ...]
    ks: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    keys: Tuple[BlockKey, ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def partition(self) -> FrozenSet[FrozenSet[int]]:
        """The underlying set partition, forgetting keys and order."""
        return frozenset(frozenset(b) for b in self.blocks)

    def key_of_item(self, index: int) -> BlockKey:
        for block, key in zip(self.blocks, self.keys):
            if index in block:
                return key
        raise IndexError(f"item index {index} not in any block")


def _assemble(items: Tuple[HurwitzVector, ...], ks: Tuple[int, ...],
              item_keys: Sequence[BlockKey]) -> Decomposition:
    groups: Dict[BlockKey, List[int]] = {}
    for idx, key in enumerate(item_keys):
        groups.setdefault(key, []).append(idx)
    ordered = sorted(groups)
    return Decomposition(items, ks,
                         tuple(tuple(groups[key]) for key in ordered),
                         tuple(ordered))


def _require_uniform_genus(items: Tuple[HurwitzVector, ...],
                           T: CharacterTable) -> None:
    genera = {_genus_of(v, T) for v in items}
    if len(genera) > 1:
        raise ValueError(f"items span several genera {sorted(genera)}; "
                         "a decomposition needs a single genus")


def decompose_at_k(items: Sequence[HurwitzVector], T: CharacterTable,
                   k: int) -> Decomposition:
    """Partition items by their level-k multiplicity vector."""
    items = tuple(items)
    _require_uniform_genus(items, T)
    item_keys = [(cw_character(v, T, k).mults,) for v in items]
    return _assemble(items, (k,), item_keys)


def _item_keys(D: Decomposition) -> List[BlockKey]:
    keys: List[BlockKey] = [()] * len(D.items)
    for block, key in zip(D.blocks, D.keys):
        for idx in block:
            keys[idx] = key
    return keys


def refine(D1: Decomposition, D2: Decomposition) -> Decomposition:
    """Common refinement: blocks are the nonempty pairwise intersections.

    Keys concatenate, so a refined block is keyed by the representation type
    over both level sets. Requires the identical item sequence.
    """
    if D1.items != D2.items:
        raise ValueError("decompositions cover different item sequences")
    k1, k2 = _item_keys(D1), _item_keys(D2)
    return _assemble(D1.items, D1.ks + D2.ks,
                     [a + b for a, b in zip(k1, k2)])


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Refinement through k = |G| plus the depth at which it stabilized."""

    decomposition: Decomposition
    stabilization_depth: int


def _refine_through(items: Tuple[HurwitzVector, ...], T: CharacterTable,
                    k_hi: int) -> CanonicalDecomposition:
    running = decompose_at_k(items, T, 1)
    depth = 1
    for k in range(2, k_hi + 1):
        refined = refine(running, decompose_at_k(items, T, k))
        if refined.partition() != running.partition():
            depth = k
        running = refined
    return CanonicalDecomposition(running, depth)


def canonical_decomposition(items: Sequence[HurwitzVector],
                            T: CharacterTable) -> CanonicalDecomposition:
    """The common refinement of the level-k partitions for k = 1..|G|.

    The periodicity of the multiplicity formulas makes levels beyond |G|
    redundant, so this is the full representation-type decomposition. The
    stabilization depth is the smallest K with refinement through K already
    equal to the result.
    """
    return _refine_through(tuple(items), T, T.group.order)


@dataclass(frozen=True)
class LevelReport:
    """One level of the stabilization scan.

    block_count is the standalone level-k partition size; split_running says
    whether level k strictly refined the running refinement of levels < k.
    """

    k: int
    block_count: int
    split_running: bool


@dataclass(frozen=True)
class StabilizationReport:
    granularity: str
    levels: Tuple[LevelReport, ...]
    stabilization_depth: int
    final: Decomposition


def stabilization_report(items: Sequence[HurwitzVector], T: CharacterTable,
                         k_max: int, *, granularity: str = "raw"
                         ) -> StabilizationReport:
    """Scan levels 1..k_max and verify the two periodicity consequences.

    Checks, raising on violation: no level beyond |G| refines the running
    partition further, and the standalone partitions at k and k + |G| are
    identical whenever both are in range. granularity is a free-form label
    ("raw" or "orbit") recording what the items are.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    items = tuple(items)
    order = T.group.order
    per_level: Dict[int, Decomposition] = {}
    levels: List[LevelReport] = []
    running = None
    depth = 1
    for k in range(1, k_max + 1):
        Dk = decompose_at_k(items, T, k)
        per_level[k] = Dk
        if running is None:
            refined = Dk
            split = len(items) > 0 and Dk.block_count > 1
        else:
            refined = refine(running, Dk)
            split = refined.partition() != running.partition()
        if split:
            depth = k
            if k > order:
                raise InternalConsistencyError(
                    f"level {k} split the refinement of levels 1..{k - 1} although "
                    f"periodicity caps new splits at |G| = {order}")
        levels.append(LevelReport(k, Dk.block_count, split))
        running = refined
    for k in range(1, k_max - order + 1):
        if per_level[k].partition() != per_level[k + order].partition():
            raise InternalConsistencyError(
                f"partitions at levels {k} and {k + order} differ, contradicting "
                "the periodicity of the multiplicity formulas")
    return StabilizationReport(granularity, tuple(levels), depth, running)
