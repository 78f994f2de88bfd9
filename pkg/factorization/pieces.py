from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from terms.term import Node, Path, Term, TermNode, Var, node_at, positions


@dataclass(frozen=True)
class Piece:
    """
    The labelled vertices of the subtree at `root`, minus those of the subtree
    at `cut` when there is one. Its arity counts the cut and the variable
    leaves hanging below the piece.
    """

    root: Path
    cut: Optional[Path]
    nodes: FrozenSet[Path]
    arity: int

    @property
    def size(self) -> int:
        return len(self.nodes)


def _counts(node: TermNode) -> Dict[Path, Tuple[int, int]]:
    """Labelled vertices and variable leaves below every path."""
    counts: Dict[Path, Tuple[int, int]] = {}

    def walk(vertex: TermNode, path: Path) -> Tuple[int, int]:
        if isinstance(vertex, Var):
            counts[path] = (0, 1)
            return counts[path]
        labelled, leaves = 1, 0
        for index, child in enumerate(vertex.children):
            child_labelled, child_leaves = walk(child, path + (index,))
            labelled += child_labelled
            leaves += child_leaves
        counts[path] = (labelled, leaves)
        return counts[path]

    walk(node, ())
    return counts


def _labelled_below(node: TermNode, path: Path) -> Iterator[Path]:
    for relative, vertex in positions(node_at(node, path)):
        if isinstance(vertex, Node):
            yield path + relative


def _piece(node: TermNode, root: Path, cut: Optional[Path], arity: int) -> Piece:
    removed = set(_labelled_below(node, cut)) if cut is not None else set()
    return Piece(root, cut, frozenset(p for p in _labelled_below(node, root) if p not in removed), arity)


def pieces(t: Term, max_arity: Optional[int] = None) -> Iterator[Piece]:
    """Every piece of t, roots in pre-order, the uncut piece before the cut ones."""
    counts = _counts(t.root)
    labelled = [path for path, vertex in positions(t.root) if isinstance(vertex, Node)]
    for root in labelled:
        _, leaves = counts[root]
        if max_arity is None or leaves <= max_arity:
            yield _piece(t.root, root, None, leaves)
        for cut in labelled:
            if len(cut) <= len(root) or cut[: len(root)] != root:
                continue
            arity = 1 + leaves - counts[cut][1]
            if max_arity is None or arity <= max_arity:
                yield _piece(t.root, root, cut, arity)


def find_piece(t: Term, largest: bool = False) -> Optional[Piece]:
    """A piece with at least two labelled vertices and arity at most one."""
    counts = _counts(t.root)
    labelled = [path for path, vertex in positions(t.root) if isinstance(vertex, Node)]
    best: Optional[Tuple[int, Path, Optional[Path], int]] = None
    for root in labelled:
        size, leaves = counts[root]
        candidates: List[Tuple[int, Optional[Path], int]] = [(size, None, leaves)]
        for cut in labelled:
            if len(cut) > len(root) and cut[: len(root)] == root:
                candidates.append((size - counts[cut][0], cut, 1 + leaves - counts[cut][1]))
        for nodes, cut, arity in candidates:
            if nodes < 2 or arity > 1:
                continue
            if not largest:
                return _piece(t.root, root, cut, arity)
            if best is None or nodes > best[0]:
                best = (nodes, root, cut, arity)
    if best is None:
        return None
    return _piece(t.root, best[1], best[2], best[3])


def is_reduced(t: Term) -> Tuple[bool, Optional[Piece]]:
    piece = find_piece(t)
    return piece is None, piece


Attachment = Union[Path, int]


def extract(node: TermNode, cut: Optional[Path]) -> Tuple[TermNode, List[Attachment]]:
    """
    The piece rooted at `node` with the cut and the variable leaves replaced by
    fresh variables numbered left to right. Each fresh variable is attached to
    the cut path (relative to `node`) or to the index of the replaced variable.
    """
    attachments: List[Attachment] = []

    def walk(vertex: TermNode, path: Path) -> TermNode:
        if path == cut:
            attachments.append(path)
            return Var(len(attachments) - 1)
        if isinstance(vertex, Var):
            attachments.append(vertex.index)
            return Var(len(attachments) - 1)
        return Node(vertex.label, tuple(walk(child, path + (index,)) for index, child in enumerate(vertex.children)))

    return walk(node, ()), attachments


def replace_at(node: TermNode, path: Path, replacement: TermNode) -> TermNode:
    if not path:
        return replacement
    children = list(node.children)
    children[path[0]] = replace_at(children[path[0]], path[1:], replacement)
    return Node(node.label, tuple(children))
