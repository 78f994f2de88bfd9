from itertools import permutations, product
from typing import Callable, Set, Tuple

from terms.regular_tree import RegularTree, Tree, as_regular_tree, reachable


def bisimilar(s: Tree, t: Tree) -> bool:
    """Whether two presentations unravel to the same tree."""
    return _related(s, t, lambda arity: [tuple(range(arity))])


def is_permutation(s: Tree, t: Tree) -> bool:
    """Whether the successor lists of `s` can be rearranged vertex by vertex to give `t`."""
    return _related(s, t, lambda arity: permutations(range(arity)))


def _related(s: Tree, t: Tree, orders: Callable) -> bool:
    left, right = as_regular_tree(s), as_regular_tree(t)
    if left.arity != right.arity:
        return False

    relation: Set[Tuple[str, str]] = {
        (x, y)
        for x, y in product(reachable(left), reachable(right))
        if _same_shape(left, x, right, y)
    }
    changed = True
    while changed:
        changed = False
        for x, y in list(relation):
            xs = left.nodes[x].successors
            ys = right.nodes[y].successors
            if not any(
                all((xs[i], ys[order[i]]) in relation for i in range(len(xs)))
                for order in orders(len(xs))
            ):
                relation.discard((x, y))
                changed = True
    return (left.root, right.root) in relation


def _same_shape(left: RegularTree, x: str, right: RegularTree, y: str) -> bool:
    a, b = left.nodes[x], right.nodes[y]
    return a.label == b.label and a.var == b.var and len(a.successors) == len(b.successors)
