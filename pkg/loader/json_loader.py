import json
import logging
from contextlib import contextmanager
from typing import Any, Dict, Hashable, List, Mapping, Set, Tuple

from automata.automaton import ParityTreeAutomaton, Transition
from automata.language_pair import LanguagePair, require_language_pair
from enums import HOLE, get_player
from errors import MalformedDocumentError
from games.parity_game import ParityGame
from profiles.profile_set import Branch, ProfileSet, VarAtom, normalize, partial_profile
from terms.alphabet import RankedAlphabet
from terms.context import Context
from terms.regular_tree import GraphNode, RegularTree, Tree
from terms.term import Node, Term, TermNode, Var

logger = logging.getLogger(__name__)


def load_document(file_path: str) -> Any:
    logger.info("Loading %s", file_path)
    with open(file_path, "r", encoding="utf-8") as file:
        return json.load(file)


@contextmanager
def _document(kind: str):
    try:
        yield
    except (KeyError, TypeError, AttributeError) as error:
        raise MalformedDocumentError(f"Malformed {kind} document: {error!r}") from error


def parse_alphabet(doc: Mapping) -> RankedAlphabet:
    with _document("alphabet"):
        return RankedAlphabet(tuple((symbol["name"], symbol["arity"]) for symbol in doc["symbols"]))


def _parse_node(doc: Mapping) -> TermNode:
    if "var" in doc:
        return Var(int(doc["var"]))
    return Node(_parse_label(doc["symbol"]), tuple(_parse_node(child) for child in doc.get("children", [])))


def parse_term(doc: Mapping) -> Term:
    with _document("term"):
        return Term(int(doc["arity"]), _parse_node(doc["root"]))


def parse_regular_tree(doc: Mapping) -> RegularTree:
    with _document("regular tree"):
        nodes: Dict[str, GraphNode] = {}
        for node in doc["nodes"]:
            if node["id"] in nodes:
                raise MalformedDocumentError(f"Duplicate node id '{node['id']}'")
            var = node.get("var")
            nodes[node["id"]] = GraphNode(
                node.get("symbol"), None if var is None else int(var), tuple(node.get("successors", []))
            )
            if var is None and node.get("symbol") is None:
                raise MalformedDocumentError(f"Node '{node['id']}' has neither a symbol nor a variable")
        return RegularTree(int(doc["arity"]), doc["root"], nodes)


def parse_tree(doc: Mapping) -> Tree:
    """A term when the root is a node object, a regular tree when it names a node id."""
    with _document("tree"):
        if isinstance(doc["root"], str):
            return parse_regular_tree(doc)
        return parse_term(doc)


def parse_context(doc: Mapping) -> Context:
    with _document("context"):
        return Context.of(parse_tree(doc), int(doc["hole_arity"]))


def parse_automaton(doc: Mapping) -> ParityTreeAutomaton:
    with _document("automaton"):
        alphabet = parse_alphabet(doc["alphabet"])
        if HOLE in alphabet:
            raise MalformedDocumentError(f"'{HOLE}' is reserved for contexts")
        transitions = tuple(
            Transition(transition["state"], transition["symbol"], tuple(transition.get("successors", [])))
            for transition in doc["transitions"]
        )
        return ParityTreeAutomaton(
            tuple(doc["states"]),
            alphabet,
            transitions,
            doc["initial"],
            {state: int(value) for state, value in doc["priority"].items()},
        )


def parse_language_pair(doc: Mapping) -> LanguagePair:
    with _document("language pair"):
        samples = [parse_tree(sample) for sample in doc.get("samples", [])]
        return require_language_pair(
            parse_automaton(doc["positive"]), parse_automaton(doc["complement"]), samples
        )


def parse_game(doc: Mapping) -> ParityGame:
    with _document("game"):
        positions = [
            (position["id"], get_player(position["owner"]), int(position["priority"]))
            for position in doc["positions"]
        ]
        known = {position for position, _, _ in positions}
        edges: List[Tuple[str, str]] = []
        for source, target in doc["edges"]:
            if source not in known or target not in known:
                raise MalformedDocumentError(f"Edge {source} -> {target} uses an unknown position")
            edges.append((source, target))
        return ParityGame.build(positions, edges)


def _parse_atom(doc: Mapping):
    if "branch" in doc:
        return Branch(doc["branch"])
    var = doc["var"]
    return VarAtom(var["from"], int(var["min"]), var["to"], int(var["index"]))


def parse_profile_set(doc: List) -> ProfileSet:
    with _document("profile set"):
        try:
            return normalize(partial_profile(_parse_atom(atom) for atom in disjunct) for disjunct in doc)
        except ValueError as error:
            raise MalformedDocumentError(str(error)) from error


def _parse_label(doc: Any) -> Hashable:
    return parse_profile_set(doc) if isinstance(doc, list) else doc


def parse_table(doc: Mapping) -> Dict[Term, Hashable]:
    with _document("evaluation table"):
        return {parse_term(entry["term"]): _parse_label(entry["value"]) for entry in doc["entries"]}


def parse_h_sets(doc: Any) -> Dict[Hashable, Set[Term]]:
    """One {"label", "trees"} document or a list of them."""
    with _document("H-set"):
        documents = doc if isinstance(doc, list) else [doc]
        h: Dict[Hashable, Set[Term]] = {}
        for entry in documents:
            h.setdefault(_parse_label(entry["label"]), set()).update(parse_term(tree) for tree in entry["trees"])
        return h
