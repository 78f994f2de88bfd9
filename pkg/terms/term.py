from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterator, List, Mapping, Optional, Tuple, Union

from errors import ArityMismatchError
from terms.alphabet import RankedAlphabet

Path = Tuple[int, ...]


@dataclass(frozen=True)
class Var:
    index: int

    def __repr__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Node:
    """
    Inner vertex of a term. The label is usually a symbol name, but terms are
    also labelled by factors (factorizations) and by profile sets (evaluation).
    """

    label: Hashable
    children: Tuple["TermNode", ...] = ()

    def __repr__(self):
        if not self.children:
            return f"{self.label}"
        return f"{self.label}({', '.join(repr(child) for child in self.children)})"


TermNode = Union[Node, Var]


@dataclass(frozen=True)
class Term:
    arity: int
    root: TermNode

    def __repr__(self):
        return f"Term[{self.arity}]({self.root!r})"


# A factorization is a term whose node labels are terms over one alphabet.
Factorization = Term


@dataclass(frozen=True)
class Violation:
    rule: str
    location: Union[Path, str]
    message: str


def positions(node: TermNode, path: Path = ()) -> Iterator[Tuple[Path, TermNode]]:
    """Pre-order walk yielding the path of every vertex together with the vertex."""
    yield path, node
    if isinstance(node, Node):
        for index, child in enumerate(node.children):
            yield from positions(child, path + (index,))


def node_at(node: TermNode, path: Path) -> TermNode:
    for index in path:
        node = node.children[index]
    return node


def variables(node: TermNode) -> List[int]:
    """Variable indices in left-to-right order."""
    return [vertex.index for _, vertex in positions(node) if isinstance(vertex, Var)]


def height(node: TermNode) -> int:
    if isinstance(node, Var) or not node.children:
        return 0
    return 1 + max(height(child) for child in node.children)


def size(node: TermNode) -> int:
    return sum(1 for _ in positions(node))


def validate_term(t: Term, alphabet: Optional[RankedAlphabet] = None) -> List[Violation]:
    """
    Check the term invariants. Returns the violations found, empty when the term
    is well formed. With an alphabet, labels are also checked against it.
    """
    violations = []
    if isinstance(t.root, Var):
        violations.append(Violation("root is a variable", (), f"root is x{t.root.index}"))

    seen: Dict[int, Path] = {}
    for path, vertex in positions(t.root):
        if isinstance(vertex, Var):
            if not 0 <= vertex.index < t.arity:
                violations.append(
                    Violation(
                        "variable index out of range",
                        path,
                        f"x{vertex.index} used in a term of arity {t.arity}",
                    )
                )
            if vertex.index in seen:
                violations.append(
                    Violation(
                        "variable occurs twice",
                        path,
                        f"x{vertex.index} already occurs at {seen[vertex.index]}",
                    )
                )
            else:
                seen[vertex.index] = path
        elif alphabet is not None:
            if vertex.label not in alphabet:
                violations.append(
                    Violation("unknown symbol", path, f"'{vertex.label}' is not in the alphabet")
                )
            elif alphabet.arity(vertex.label) != len(vertex.children):
                violations.append(
                    Violation(
                        "arity mismatch",
                        path,
                        f"'{vertex.label}' has arity {alphabet.arity(vertex.label)} "
                        f"but {len(vertex.children)} children",
                    )
                )
    return violations


def singleton(alphabet: RankedAlphabet, name: str) -> Term:
    arity = alphabet.arity(name)
    return Term(arity, Node(name, tuple(Var(i) for i in range(arity))))


def is_singleton(t: Term) -> bool:
    return (
        isinstance(t.root, Node)
        and t.arity == len(t.root.children)
        and all(child == Var(i) for i, child in enumerate(t.root.children))
    )


def sing(t: Term) -> Factorization:
    """One outer vertex carrying the whole term, with the outer variables attached."""
    return Term(t.arity, Node(t, tuple(Var(i) for i in range(t.arity))))


def flatten(outer: Factorization) -> Term:
    return Term(outer.arity, _flatten_node(outer.root))


def _flatten_node(node: TermNode) -> TermNode:
    if isinstance(node, Var):
        return node
    factor = node.label
    if not isinstance(factor, Term):
        raise ArityMismatchError(f"Outer vertex label {factor!r} is not a term")
    if factor.arity != len(node.children):
        raise ArityMismatchError(
            f"Factor {factor!r} has arity {factor.arity} "
            f"but its outer vertex has {len(node.children)} successors"
        )
    expansions = [_flatten_node(child) for child in node.children]
    return _splice(factor.root, expansions)


def _splice(node: TermNode, expansions: List[TermNode]) -> TermNode:
    if isinstance(node, Var):
        return expansions[node.index]
    return Node(node.label, tuple(_splice(child, expansions) for child in node.children))


def is_in_f(outer: Factorization) -> bool:
    """Every branching outer vertex carries a singleton factor."""
    for _, vertex in positions(outer.root):
        if isinstance(vertex, Node) and len(vertex.children) > 1 and not is_singleton(vertex.label):
            return False
    return True


def relabel_term(t: Term, h: Union[Mapping, Callable]) -> Term:
    mapping = h if callable(h) else h.__getitem__
    return Term(t.arity, _relabel_node(t.root, mapping))


def _relabel_node(node: TermNode, mapping: Callable) -> TermNode:
    if isinstance(node, Var):
        return node
    return Node(mapping(node.label), tuple(_relabel_node(child, mapping) for child in node.children))


def rename_variables(t: Term, renaming: Mapping[int, int], arity: int) -> Term:
    return Term(arity, _rename_node(t.root, renaming))


def _rename_node(node: TermNode, renaming: Mapping[int, int]) -> TermNode:
    if isinstance(node, Var):
        return Var(renaming[node.index])
    return Node(node.label, tuple(_rename_node(child, renaming) for child in node.children))


def canonical_variables(t: Term) -> Tuple[Term, List[int]]:
    """
    Renumber the occurring variables 0, 1, ... in left-to-right order.
    Returns the renumbered term and the original index of each new variable.
    """
    order = variables(t.root)
    renaming = {old: new for new, old in enumerate(order)}
    return rename_variables(t, renaming, len(order)), order
