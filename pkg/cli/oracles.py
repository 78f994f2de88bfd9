"""
Brute-force deciders and random generators the test suite and the report
pipeline check the real algorithms against.
"""
import logging
from itertools import product
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from automata.automaton import ParityTreeAutomaton, Transition
from automata.runs import RunProfile, check_run
from enums import EVEN, ODD, Player, get_players
from games.parity_game import ParityGame
from terms.alphabet import RankedAlphabet
from terms.enumeration import enumerate_terms
from terms.regular_tree import GraphNode, RegularTree, compact
from terms.term import Node, Term, TermNode, Var, positions

logger = logging.getLogger(__name__)


def oracle_enumerate_terms(alphabet: RankedAlphabet, arity: int, max_height: int) -> Iterator[Term]:
    """Every well-formed term of the given arity up to the height bound, each once."""
    return enumerate_terms(alphabet, arity, max_height)


def oracle_winners(game: ParityGame) -> Dict[Hashable, Player]:
    """
    Winner of every position by trying all positional strategies of Even:
    Even wins from a position iff some strategy leaves Odd neither a reachable
    dead end of Even nor a reachable cycle whose least priority is odd.
    """
    choices = [
        [(position, successor) for successor in game.successors(position)]
        for position in game.positions
        if game.owner[position] is EVEN and game.successors(position)
    ]
    even_wins = set()
    for strategy in product(*choices):
        graph = nx.DiGraph()
        graph.add_nodes_from(game.positions)
        graph.add_edges_from(strategy)
        for position in game.positions:
            if game.owner[position] is ODD:
                graph.add_edges_from((position, successor) for successor in game.successors(position))
        losing = _odd_targets(game, graph)
        for position in game.positions:
            if position in even_wins:
                continue
            if not (nx.descendants(graph, position) | {position}) & losing:
                even_wins.add(position)
    return {position: EVEN if position in even_wins else ODD for position in game.positions}


def _odd_targets(game: ParityGame, graph: nx.DiGraph) -> set:
    """Positions from which Odd has already won once reached: Even dead ends and odd cycles."""
    targets = {
        position for position in game.positions if game.owner[position] is EVEN and not game.successors(position)
    }
    for lowest in sorted(set(game.priority.values())):
        if lowest % 2 == 0:
            continue
        subgraph = graph.subgraph(p for p in game.positions if game.priority[p] >= lowest)
        for component in nx.strongly_connected_components(subgraph):
            cyclic = len(component) > 1 or any(subgraph.has_edge(p, p) for p in component)
            if cyclic:
                targets |= {p for p in component if game.priority[p] == lowest}
    return targets


def oracle_runs(automaton: ParityTreeAutomaton, t: Term) -> List[RunProfile]:
    """Profiles of every labelling of t by states that is a run, tried one by one."""
    paths = [path for path, _ in positions(t.root)]
    found = []
    for states in product(automaton.states, repeat=len(paths)):
        result = check_run(automaton, t, dict(zip(paths, states)))
        if isinstance(result, RunProfile):
            found.append(result)
    return found


def oracle_accepts(automaton: ParityTreeAutomaton, t: Term) -> bool:
    return any(run.root == automaton.initial for run in oracle_runs(automaton, t))


def random_term(rng: np.random.Generator, alphabet: RankedAlphabet, arity: int, max_size: int) -> Term:
    """
    Random term with at most `max_size` labelled vertices in which each of the
    `arity` variables occurs at most once.
    """
    nullary = [name for name, rank in alphabet if rank == 0]
    inner = [(name, rank) for name, rank in alphabet if rank > 0]
    if not nullary:
        raise ValueError("Random terms need a nullary symbol")
    free = [int(index) for index in rng.permutation(arity)]
    remaining = [int(rng.integers(1, max_size + 1))]

    def build(is_root: bool) -> TermNode:
        if not is_root and free and rng.random() < 0.3:
            return Var(free.pop())
        options = [(name, rank) for name, rank in inner if remaining[0] >= 1 + rank]
        if options and rng.random() < 0.7:
            name, rank = options[rng.integers(len(options))]
            remaining[0] -= 1 + rank
            children = []
            for _ in range(rank):
                remaining[0] += 1
                children.append(build(False))
            return Node(name, tuple(children))
        remaining[0] -= 1
        return Node(nullary[rng.integers(len(nullary))])

    return Term(arity, build(True))


def random_regular_tree(rng: np.random.Generator, alphabet: RankedAlphabet, max_nodes: int) -> RegularTree:
    """Arity-0 tree given by a random graph with at most `max_nodes` nodes."""
    count = int(rng.integers(1, max_nodes + 1))
    symbols = list(alphabet)
    nodes = {}
    for index in range(count):
        name, rank = symbols[rng.integers(len(symbols))]
        nodes[f"n{index}"] = GraphNode(name, None, tuple(f"n{rng.integers(count)}" for _ in range(rank)))
    return compact(RegularTree(0, "n0", nodes))


def random_game(
    rng: np.random.Generator, size: int, max_out: int = 2, max_priority: int = 3
) -> ParityGame:
    players = get_players()
    names = [f"p{index}" for index in range(size)]
    entries = [(name, players[rng.integers(2)], int(rng.integers(max_priority + 1))) for name in names]
    edges = []
    for name in names:
        out = int(rng.integers(max_out + 1))
        for target in rng.choice(size, size=min(out, size), replace=False):
            edges.append((name, names[target]))
    return ParityGame.build(entries, edges)


def random_automaton(
    rng: np.random.Generator,
    alphabet: RankedAlphabet,
    states: int = 2,
    max_priority: int = 2,
    density: float = 0.5,
) -> ParityTreeAutomaton:
    names = tuple(f"q{index}" for index in range(states))
    transitions = [
        Transition(state, symbol, successors)
        for state in names
        for symbol, rank in alphabet
        for successors in product(names, repeat=rank)
        if rng.random() < density
    ]
    priority = {state: int(rng.integers(max_priority + 1)) for state in names}
    return ParityTreeAutomaton(names, alphabet, tuple(transitions), names[0], priority)


def shuffle_successors(rng: np.random.Generator, g: RegularTree, names: Optional[Sequence[str]] = None) -> RegularTree:
    """
    Rearrange the successor list of every node, or only of the nodes labelled
    by one of `names`.
    """
    nodes = {}
    for node_id, node in g.nodes.items():
        if node.is_variable or (names is not None and node.label not in names):
            nodes[node_id] = node
            continue
        order = rng.permutation(len(node.successors))
        nodes[node_id] = GraphNode(node.label, None, tuple(node.successors[int(i)] for i in order))
    return RegularTree(g.arity, g.root, nodes)


def game_grid(size: int, max_out: int = 2, max_priority: int = 3) -> Iterator[ParityGame]:
    """
    All games on `size` positions with up to `max_out` distinct successors each,
    up to the choice of priorities and owners. Grows quickly past four positions.
    """
    names = [f"p{index}" for index in range(size)]
    successor_sets: List[Tuple[int, ...]] = [
        targets
        for out in range(max_out + 1)
        for targets in _subsets(size, out)
    ]
    players = get_players()
    for owners in product(players, repeat=size):
        for priorities in product(range(max_priority + 1), repeat=size):
            for outs in product(successor_sets, repeat=size):
                yield ParityGame.build(
                    [(name, owner, value) for name, owner, value in zip(names, owners, priorities)],
                    [(names[source], names[target]) for source, targets in enumerate(outs) for target in targets],
                )


def _subsets(size: int, count: int) -> List[Tuple[int, ...]]:
    if count == 0:
        return [()]
    return [
        (first,) + rest
        for first in range(size)
        for rest in _subsets(size, count - 1)
        if not rest or first < rest[0]
    ]
