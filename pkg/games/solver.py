import logging
from collections import deque
from typing import Dict, Hashable, Iterable, List, Set

from enums import EVEN, ODD, Player, player_of_priority
from games.parity_game import GameSolution, ParityGame

logger = logging.getLogger(__name__)


class _Sink:
    """Absorbing position that the dead ends of the losing player are redirected to."""

    def __init__(self, winner: Player):
        self.winner = winner

    def __repr__(self):
        return f"<sink won by {self.winner}>"


def solve(game: ParityGame) -> GameSolution:
    """
    Recursive decomposition on the least priority: attract to it, solve the rest,
    and peel off whatever the opponent wins there until the opponent wins nothing.
    """
    solver = _Solver(game)
    winning, strategy = solver.solve(set(solver.order))
    sinks = solver.sinks

    def clean(moves: Dict[Hashable, Hashable]) -> Dict[Hashable, Hashable]:
        return {position: target for position, target in moves.items() if position not in sinks}

    logger.debug(
        "Solved game with %d positions: Even wins %d", len(game), len(winning[EVEN] - sinks)
    )
    return GameSolution(
        frozenset(winning[EVEN] - sinks),
        frozenset(winning[ODD] - sinks),
        clean(strategy[EVEN]),
        clean(strategy[ODD]),
    )


class _Solver:
    def __init__(self, game: ParityGame):
        self.owner: Dict[Hashable, Player] = dict(game.owner)
        self.priority: Dict[Hashable, int] = dict(game.priority)
        self.successors: Dict[Hashable, List[Hashable]] = {
            position: list(game.successors(position)) for position in game.positions
        }
        self.sinks: Set[Hashable] = set()

        sink_of = {}
        for winner in (EVEN, ODD):
            sink = _Sink(winner)
            sink_of[winner] = sink
            self.owner[sink] = winner
            self.priority[sink] = winner.parity
            self.successors[sink] = [sink]
            self.sinks.add(sink)
        for position in game.positions:
            if not self.successors[position]:
                self.successors[position] = [sink_of[self.owner[position].opponent]]

        self.order = {position: index for index, position in enumerate(self.owner)}
        self.predecessors: Dict[Hashable, List[Hashable]] = {position: [] for position in self.order}
        for position in self.order:
            for successor in self.successors[position]:
                self.predecessors[successor].append(position)

    def ordered(self, positions: Iterable[Hashable]) -> List[Hashable]:
        return sorted(positions, key=self.order.__getitem__)

    def solve(self, region: Set[Hashable]):
        winning: Dict[Player, Set[Hashable]] = {EVEN: set(), ODD: set()}
        strategy: Dict[Player, Dict[Hashable, Hashable]] = {EVEN: {}, ODD: {}}
        current = set(region)
        while current:
            lowest = min(self.priority[position] for position in current)
            alpha = player_of_priority(lowest)
            beta = alpha.opponent
            top = {position for position in current if self.priority[position] == lowest}
            attracted, attractor_moves = self.attractor(current, top, alpha)
            sub_winning, sub_strategy = self.solve(current - attracted)

            if not sub_winning[beta]:
                winning[alpha] |= current
                strategy[alpha].update(sub_strategy[alpha])
                strategy[alpha].update(attractor_moves)
                for position in self.ordered(top):
                    if self.owner[position] is alpha:
                        strategy[alpha][position] = next(
                            successor for successor in self.successors[position] if successor in current
                        )
                break

            escaped, escape_moves = self.attractor(current, sub_winning[beta], beta)
            winning[beta] |= escaped
            strategy[beta].update(sub_strategy[beta])
            strategy[beta].update(escape_moves)
            current -= escaped
        return winning, strategy

    def attractor(self, region: Set[Hashable], target: Set[Hashable], player: Player):
        attracted = set(target)
        moves: Dict[Hashable, Hashable] = {}
        remaining = {
            position: sum(1 for successor in self.successors[position] if successor in region)
            for position in region
            if self.owner[position] is not player
        }
        queue = deque(self.ordered(target))
        while queue:
            reached = queue.popleft()
            for position in self.predecessors[reached]:
                if position not in region or position in attracted:
                    continue
                if self.owner[position] is player:
                    attracted.add(position)
                    moves[position] = reached
                    queue.append(position)
                else:
                    remaining[position] -= 1
                    if remaining[position] == 0:
                        attracted.add(position)
                        queue.append(position)
        return attracted, moves
