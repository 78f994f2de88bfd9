import json
from typing import Any, Dict, Hashable, List, Mapping, Set

from automata.automaton import ParityTreeAutomaton
from games.parity_game import GameSolution, ParityGame
from profiles.profile_set import Branch, ProfileSet, ordered
from syntactic.algebra import SyntacticAlgebra
from terms.alphabet import RankedAlphabet
from terms.context import Context
from terms.regular_tree import RegularTree, Tree
from terms.term import Factorization, Term, TermNode, Var


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def _name(value: Hashable) -> str:
    return value if isinstance(value, str) else str(value)


def _label_to_json(value: Hashable) -> Any:
    return profile_set_to_json(value) if isinstance(value, frozenset) else _name(value)


def alphabet_to_json(alphabet: RankedAlphabet) -> Dict:
    return {"symbols": [{"name": name, "arity": arity} for name, arity in alphabet]}


def _node_to_json(node: TermNode) -> Dict:
    if isinstance(node, Var):
        return {"var": node.index}
    return {"symbol": _label_to_json(node.label), "children": [_node_to_json(child) for child in node.children]}


def term_to_json(t: Term) -> Dict:
    return {"arity": t.arity, "root": _node_to_json(t.root)}


def regular_tree_to_json(g: RegularTree) -> Dict:
    return {
        "arity": g.arity,
        "root": g.root,
        "nodes": [
            {
                "id": node_id,
                "symbol": None if node.is_variable else _name(node.label),
                "var": node.var,
                "successors": list(node.successors),
            }
            for node_id, node in g.nodes.items()
        ],
    }


def tree_to_json(tree: Tree) -> Dict:
    return term_to_json(tree) if isinstance(tree, Term) else regular_tree_to_json(tree)


def context_to_json(c: Context) -> Dict:
    return {**regular_tree_to_json(c.tree), "hole_arity": c.hole_arity}


def _outer_to_json(node: TermNode) -> Dict:
    if isinstance(node, Var):
        return {"var": node.index}
    return {"factor": term_to_json(node.label), "children": [_outer_to_json(child) for child in node.children]}


def factorization_to_json(outer: Factorization) -> Dict:
    return {"arity": outer.arity, "root": _outer_to_json(outer.root)}


def automaton_to_json(automaton: ParityTreeAutomaton) -> Dict:
    return {
        "states": [_name(state) for state in automaton.states],
        "initial": _name(automaton.initial),
        "priority": {_name(state): value for state, value in automaton.priority.items()},
        "alphabet": alphabet_to_json(automaton.alphabet),
        "transitions": [
            {
                "state": _name(transition.state),
                "symbol": transition.symbol,
                "successors": [_name(successor) for successor in transition.successors],
            }
            for transition in automaton.transitions
        ],
    }


def game_to_json(game: ParityGame) -> Dict:
    return {
        "positions": [
            {"id": _name(position), "owner": game.owner[position].name, "priority": game.priority[position]}
            for position in game.positions
        ],
        "edges": [[_name(source), _name(target)] for source in game.positions for target in game.successors(source)],
    }


def solution_to_json(solution: GameSolution) -> Dict:
    return {
        "even_region": sorted(_name(position) for position in solution.even_region),
        "odd_region": sorted(_name(position) for position in solution.odd_region),
        "even_strategy": {_name(k): _name(v) for k, v in solution.even_strategy.items()},
        "odd_strategy": {_name(k): _name(v) for k, v in solution.odd_strategy.items()},
    }


def profile_set_to_json(value: ProfileSet) -> List[List[Dict]]:
    return [
        [
            {"branch": _name(atom.state)}
            if isinstance(atom, Branch)
            else {
                "var": {
                    "from": _name(atom.source),
                    "min": atom.priority,
                    "to": _name(atom.target),
                    "index": atom.index,
                }
            }
            for atom in disjunct
        ]
        for disjunct in ordered(value)
    ]


def algebra_to_json(algebra: SyntacticAlgebra) -> Dict:
    arities = {}
    for arity, classes in sorted(algebra.classes.items()):
        entries = []
        for algebra_class in classes:
            entry = {
                "id": algebra_class.id,
                "witness": regular_tree_to_json(algebra_class.representative.witness),
                "size": len(algebra_class.members),
            }
            if algebra_class.accepting is not None:
                entry["accepting"] = algebra_class.accepting
            entries.append(entry)
        arities[str(arity)] = {"classes": entries}
    return {
        "arities": arities,
        "table": [{"root": entry.root, "args": list(entry.args), "result": entry.result} for entry in algebra.table],
    }


def table_to_json(table: Mapping[Term, Hashable]) -> Dict:
    entries = [{"term": term_to_json(t), "value": _label_to_json(value)} for t, value in table.items()]
    return {"entries": sorted(entries, key=dumps)}


def h_sets_to_json(h: Mapping[Hashable, Set[Term]]) -> List[Dict]:
    entries = [
        {"label": _label_to_json(label), "trees": sorted((term_to_json(t) for t in trees), key=dumps)}
        for label, trees in h.items()
    ]
    return sorted(entries, key=lambda entry: dumps(entry["label"]))
