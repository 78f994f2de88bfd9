from dataclasses import dataclass
from typing import Dict

from enums import HOLE
from errors import ArityMismatchError
from terms.regular_tree import GraphNode, RegularTree, Tree, as_regular_tree, compact


@dataclass(frozen=True)
class Context:
    """A tree over the alphabet plus the hole, which may occur any number of times."""

    tree: RegularTree
    hole_arity: int

    def __post_init__(self):
        for node_id in self.holes:
            arity = len(self.tree.nodes[node_id].successors)
            if arity != self.hole_arity:
                raise ArityMismatchError(
                    f"Hole at '{node_id}' has {arity} successors, expected {self.hole_arity}"
                )

    @classmethod
    def of(cls, tree: Tree, hole_arity: int) -> "Context":
        return cls(as_regular_tree(tree), hole_arity)

    @property
    def holes(self) -> list:
        return [node_id for node_id, node in self.tree.nodes.items() if node.label == HOLE]


def substitute_hole(c: Context, u: RegularTree) -> RegularTree:
    """
    Replace every hole of `c` by a copy of `u` whose variable x_i is bound to the
    i-th successor of that hole occurrence.
    """
    if u.arity != c.hole_arity:
        raise ArityMismatchError(f"Hole arity is {c.hole_arity} but the argument has arity {u.arity}")
    holes = set(c.holes)

    def resolve(node_id: str) -> str:
        if node_id in holes:
            return f"u:{node_id}:{u.root}"
        return f"c:{node_id}"

    nodes: Dict[str, GraphNode] = {}
    for node_id, node in c.tree.nodes.items():
        if node_id not in holes:
            nodes[f"c:{node_id}"] = GraphNode(
                node.label, node.var, tuple(resolve(successor) for successor in node.successors)
            )
            continue
        hole_successors = node.successors

        def target(copied_id: str) -> str:
            copied = u.nodes[copied_id]
            if copied.is_variable:
                return resolve(hole_successors[copied.var])
            return f"u:{node_id}:{copied_id}"

        for copied_id, copied in u.nodes.items():
            if copied.is_variable:
                continue
            nodes[f"u:{node_id}:{copied_id}"] = GraphNode(
                copied.label, None, tuple(target(successor) for successor in copied.successors)
            )
    return compact(RegularTree(c.tree.arity, resolve(c.tree.root), nodes))
