from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Tuple

from enums import EVEN, ODD, Player


@dataclass(frozen=True)
class ParityGame:
    """
    Two-player arena. The least priority seen infinitely often decides a play:
    even for Even, odd for Odd. A player stuck at a dead end loses.
    """

    owner: Mapping[Hashable, Player]
    priority: Mapping[Hashable, int]
    edges: Mapping[Hashable, Tuple[Hashable, ...]]

    def __post_init__(self):
        for name in ("owner", "priority", "edges"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))
        for position in self.owner:
            if position not in self.priority:
                raise ValueError(f"Position {position!r} has no priority")
            if self.priority[position] < 0:
                raise ValueError(f"Position {position!r} has negative priority")
        for position, successors in self.edges.items():
            if position not in self.owner:
                raise ValueError(f"Edge source {position!r} is not a position")
            for successor in successors:
                if successor not in self.owner:
                    raise ValueError(f"Edge target {successor!r} is not a position")

    @classmethod
    def build(
        cls,
        positions: Iterable[Tuple[Hashable, Player, int]],
        edges: Iterable[Tuple[Hashable, Hashable]],
    ) -> "ParityGame":
        owner: Dict[Hashable, Player] = {}
        priority: Dict[Hashable, int] = {}
        successors: Dict[Hashable, List[Hashable]] = {}
        for position, player, value in positions:
            owner[position] = player
            priority[position] = value
            successors[position] = []
        for source, target in edges:
            successors[source].append(target)
        return cls(owner, priority, {position: tuple(targets) for position, targets in successors.items()})

    @property
    def positions(self) -> List[Hashable]:
        return list(self.owner)

    def successors(self, position: Hashable) -> Tuple[Hashable, ...]:
        return self.edges.get(position, ())

    def dual(self) -> "ParityGame":
        """Swap the owners and shift every priority by one."""
        return ParityGame(
            {position: player.opponent for position, player in self.owner.items()},
            {position: value + 1 for position, value in self.priority.items()},
            self.edges,
        )

    def __len__(self) -> int:
        return len(self.owner)


@dataclass(frozen=True)
class GameSolution:
    even_region: FrozenSet[Hashable]
    odd_region: FrozenSet[Hashable]
    even_strategy: Mapping[Hashable, Hashable] = field(default_factory=dict)
    odd_strategy: Mapping[Hashable, Hashable] = field(default_factory=dict)

    def region(self, player: Player) -> FrozenSet[Hashable]:
        return self.even_region if player is EVEN else self.odd_region

    def strategy(self, player: Player) -> Mapping[Hashable, Hashable]:
        return self.even_strategy if player is EVEN else self.odd_strategy

    def winner(self, position: Hashable) -> Player:
        return EVEN if position in self.even_region else ODD
