import logging
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from enums import CUT
from errors import MalformedDocumentError
from terms.alphabet import RankedAlphabet
from terms.term import Node, Term, TermNode, Var, Violation, positions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphNode:
    """A vertex of a regular tree: a label with successors, or a variable leaf."""

    label: Optional[Hashable]
    var: Optional[int] = None
    successors: Tuple[str, ...] = ()

    @property
    def is_variable(self) -> bool:
        return self.var is not None


@dataclass(frozen=True, eq=False)
class RegularTree:
    """
    Finite pointed graph standing for its unravelling. Node ids are opaque;
    equality of the trees themselves is `bisimilar`, not graph identity.
    """

    arity: int
    root: str
    nodes: Mapping[str, GraphNode]

    def __post_init__(self):
        object.__setattr__(self, "nodes", MappingProxyType(dict(self.nodes)))
        if self.root not in self.nodes:
            raise MalformedDocumentError(f"Root '{self.root}' is not a node of the graph")
        for node_id, node in self.nodes.items():
            for successor in node.successors:
                if successor not in self.nodes:
                    raise MalformedDocumentError(
                        f"Node '{node_id}' points to unknown node '{successor}'"
                    )

    def __repr__(self):
        return f"RegularTree(arity={self.arity}, root={self.root!r}, nodes={len(self.nodes)})"

    @property
    def labels(self) -> set:
        return {node.label for node in self.nodes.values() if not node.is_variable}


Tree = Union[Term, RegularTree]


def to_graph(g: RegularTree) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(g.nodes)
    for node_id, node in g.nodes.items():
        for successor in node.successors:
            graph.add_edge(node_id, successor)
    return graph


def reachable(g: RegularTree) -> set:
    return nx.descendants(to_graph(g), g.root) | {g.root}


def spine(g: RegularTree) -> set:
    """Nodes lying on a root path to some variable leaf, the variable leaves included."""
    graph = to_graph(g)
    result = set()
    for node_id, node in g.nodes.items():
        if node.is_variable:
            result |= nx.ancestors(graph, node_id) | {node_id}
    return result


def validate_regular_tree(g: RegularTree, alphabet: Optional[RankedAlphabet] = None) -> List[Violation]:
    violations = []
    graph = to_graph(g)
    seen = nx.descendants(graph, g.root) | {g.root}
    for node_id in g.nodes:
        if node_id not in seen:
            violations.append(Violation("unreachable node", node_id, f"'{node_id}' is not reachable"))

    if g.nodes[g.root].is_variable:
        violations.append(Violation("root is a variable", g.root, f"root is x{g.nodes[g.root].var}"))

    for node_id, node in g.nodes.items():
        if node.is_variable:
            if not 0 <= node.var < g.arity:
                violations.append(
                    Violation(
                        "variable index out of range",
                        node_id,
                        f"x{node.var} used in a tree of arity {g.arity}",
                    )
                )
            if node.successors:
                violations.append(
                    Violation("variable with successors", node_id, f"x{node.var} has successors")
                )
        elif alphabet is not None:
            if node.label not in alphabet:
                violations.append(
                    Violation("unknown symbol", node_id, f"'{node.label}' is not in the alphabet")
                )
            elif alphabet.arity(node.label) != len(node.successors):
                violations.append(
                    Violation(
                        "arity mismatch",
                        node_id,
                        f"'{node.label}' has arity {alphabet.arity(node.label)} "
                        f"but {len(node.successors)} successors",
                    )
                )

    occurrences: Dict[int, int] = {}
    for node_id, node in g.nodes.items():
        if not node.is_variable or node_id not in seen:
            continue
        ancestors = graph.subgraph(nx.ancestors(graph, node_id) | {node_id})
        if not nx.is_directed_acyclic_graph(ancestors):
            violations.append(
                Violation(
                    "variable below a cycle",
                    node_id,
                    f"x{node.var} is reached by infinitely many root paths",
                )
            )
            continue
        occurrences[node.var] = occurrences.get(node.var, 0) + _count_paths(ancestors, g.root, node_id)
        if occurrences[node.var] > 1:
            violations.append(
                Violation("variable occurs twice", node_id, f"x{node.var} has several root paths")
            )
    return violations


def _count_paths(dag: nx.MultiDiGraph, source: str, target: str) -> int:
    counts = {source: 1}
    for node_id in nx.topological_sort(dag):
        for _, successor in dag.out_edges(node_id):
            counts[successor] = counts.get(successor, 0) + counts.get(node_id, 0)
    return counts.get(target, 0)


def from_term(t: Term) -> RegularTree:
    nodes: Dict[str, GraphNode] = {}
    ids = {path: f"n{index}" for index, (path, _) in enumerate(positions(t.root))}
    for path, vertex in positions(t.root):
        if isinstance(vertex, Var):
            nodes[ids[path]] = GraphNode(None, vertex.index)
        else:
            nodes[ids[path]] = GraphNode(
                vertex.label,
                None,
                tuple(ids[path + (index,)] for index in range(len(vertex.children))),
            )
    return RegularTree(t.arity, ids[()], nodes)


def as_regular_tree(t: Tree) -> RegularTree:
    return from_term(t) if isinstance(t, Term) else t


def unravel(g: RegularTree, depth: int) -> Term:
    """Depth-bounded unravelling; vertices at the bound that still have successors become `#cut`."""
    if depth < 0:
        raise ValueError(f"Depth must be a natural number, got {depth}")
    return Term(g.arity, _unravel_node(g, g.root, depth))


def _unravel_node(g: RegularTree, node_id: str, budget: int) -> TermNode:
    node = g.nodes[node_id]
    if node.is_variable:
        return Var(node.var)
    if not node.successors:
        return Node(node.label)
    if budget == 0:
        return Node(CUT)
    return Node(node.label, tuple(_unravel_node(g, successor, budget - 1) for successor in node.successors))


def to_term(g: RegularTree) -> Term:
    """The finite tree of an acyclic graph."""
    if not nx.is_directed_acyclic_graph(to_graph(g).subgraph(reachable(g))):
        raise ValueError("Only acyclic regular trees unravel to finite terms")
    return Term(g.arity, _unravel_node(g, g.root, len(g.nodes)))


def compact(g: RegularTree) -> RegularTree:
    """Drop unreachable nodes and rename the rest n0, n1, ... in breadth-first order."""
    names: Dict[str, str] = {g.root: "n0"}
    queue = deque([g.root])
    while queue:
        node_id = queue.popleft()
        for successor in g.nodes[node_id].successors:
            if successor not in names:
                names[successor] = f"n{len(names)}"
                queue.append(successor)
    nodes = {
        names[node_id]: GraphNode(
            g.nodes[node_id].label,
            g.nodes[node_id].var,
            tuple(names[successor] for successor in g.nodes[node_id].successors),
        )
        for node_id in names
    }
    return RegularTree(g.arity, "n0", nodes)


def relabel_tree(g: RegularTree, h: Union[Mapping, Callable]) -> RegularTree:
    mapping = h if callable(h) else h.__getitem__
    nodes = {
        node_id: node if node.is_variable else GraphNode(mapping(node.label), None, node.successors)
        for node_id, node in g.nodes.items()
    }
    return RegularTree(g.arity, g.root, nodes)


def rename_tree_variables(g: RegularTree, renaming: Mapping[int, int], arity: int) -> RegularTree:
    nodes = {
        node_id: GraphNode(None, renaming[node.var]) if node.is_variable else node
        for node_id, node in g.nodes.items()
    }
    return RegularTree(arity, g.root, nodes)


def tree_variables(g: RegularTree) -> List[int]:
    return sorted({g.nodes[node_id].var for node_id in reachable(g) if g.nodes[node_id].is_variable})


def compose(label: Hashable, slots: Sequence[Union[int, Tuple[RegularTree, Mapping[int, int]]]], arity: int) -> RegularTree:
    """
    Glue a root labelled `label` over its children: an int slot is the variable
    of that index, a (tree, renaming) slot is a copy of the tree whose variables
    are renamed into the result.
    """
    nodes: Dict[str, GraphNode] = {}
    successors = []
    for position, slot in enumerate(slots):
        if isinstance(slot, int):
            node_id = f"v{position}"
            nodes[node_id] = GraphNode(None, slot)
            successors.append(node_id)
            continue
        child, renaming = slot
        prefix = f"c{position}:"
        for node_id, node in child.nodes.items():
            if node.is_variable:
                nodes[prefix + node_id] = GraphNode(None, renaming[node.var])
            else:
                nodes[prefix + node_id] = GraphNode(
                    node.label, None, tuple(prefix + successor for successor in node.successors)
                )
        successors.append(prefix + child.root)
    nodes["root"] = GraphNode(label, None, tuple(successors))
    return compact(RegularTree(arity, "root", nodes))


def close_loops(g: RegularTree) -> RegularTree:
    """Arity-0 tree obtained by sending every variable leaf back to the root."""
    if g.nodes[g.root].is_variable:
        raise ValueError("A variable root cannot be looped")

    def target(node_id: str) -> str:
        return g.root if g.nodes[node_id].is_variable else node_id

    nodes = {
        node_id: GraphNode(node.label, None, tuple(target(successor) for successor in node.successors))
        for node_id, node in g.nodes.items()
        if not node.is_variable
    }
    return compact(RegularTree(0, g.root, nodes))
