import logging
from itertools import product
from typing import Callable, Hashable, Iterator, List, Optional

from factorization.pieces import Piece, extract, find_piece, replace_at
from terms.term import Factorization, Node, Path, Term, TermNode, Var, flatten, node_at

logger = logging.getLogger(__name__)

Evaluate = Callable[[Term], Hashable]


def singleton_factorization(t: Term) -> Factorization:
    """Every vertex of t becomes its own factor."""
    return Term(t.arity, _singletons(t.root))


def _singletons(node: TermNode) -> TermNode:
    if isinstance(node, Var):
        return node
    factor = Term(len(node.children), Node(node.label, tuple(Var(i) for i in range(len(node.children)))))
    return Node(factor, tuple(_singletons(child) for child in node.children))


def _collapse(outer: Factorization, piece: Piece, evaluate: Optional[Evaluate]) -> Factorization:
    subtree = node_at(outer.root, piece.root)
    cut = None if piece.cut is None else piece.cut[len(piece.root):]
    body, attachments = extract(subtree, cut)
    factor = flatten(Term(len(attachments), body))
    if evaluate is not None:
        evaluate(factor)
    children = tuple(
        Var(attachment) if isinstance(attachment, int) else node_at(subtree, attachment)
        for attachment in attachments
    )
    return Term(outer.arity, replace_at(outer.root, piece.root, Node(factor, children)))


def reduce(t: Term, evaluate: Optional[Evaluate] = None) -> Factorization:
    """
    A factorization of t in which branching outer vertices carry singletons and
    no piece of the outer tree with two or more vertices has arity at most one.
    Largest such pieces are collapsed into single factors until none is left.
    `evaluate` is called on every collapsed factor and may raise on missing entries.
    """
    if isinstance(t.root, Var):
        raise ValueError("The root of a term must not be a variable")
    outer = singleton_factorization(t)
    collapsed = 0
    while True:
        piece = find_piece(outer, largest=True)
        if piece is None:
            break
        outer = _collapse(outer, piece, evaluate)
        collapsed += 1
    logger.debug("Reduced a term of arity %d after %d collapses", t.arity, collapsed)
    return outer


def enumerate_factorizations(t: Term, max_height: Optional[int] = None) -> Iterator[Factorization]:
    """
    The factorizations of t whose branching outer vertices are singletons: at
    every vertex either its singleton or a larger factor of arity at most one.
    With `max_height`, only outer trees of at most that height.
    """
    budget = max_height if max_height is not None else len(list(_labelled(t.root, ())))
    for root in _factorizations(t.root, budget):
        yield Term(t.arity, root)


def _labelled(node: TermNode, path: Path) -> Iterator[Path]:
    if isinstance(node, Node):
        yield path
        for index, child in enumerate(node.children):
            yield from _labelled(child, path + (index,))


def _factorizations(node: TermNode, budget: int) -> Iterator[TermNode]:
    if isinstance(node, Var):
        yield node
        return
    arity = len(node.children)
    if arity == 0 or budget > 0:
        factor = Term(arity, Node(node.label, tuple(Var(i) for i in range(arity))))
        options: List[List[TermNode]] = [list(_factorizations(child, budget - 1)) for child in node.children]
        for children in product(*options):
            yield Node(factor, tuple(children))

    for cut in [None] + [path for path in _labelled(node, ()) if path]:
        body, attachments = extract(node, cut)
        if len(attachments) > 1 or _size(body) < 2:
            continue
        factor = Term(len(attachments), body)
        if not attachments:
            yield Node(factor)
        elif isinstance(attachments[0], int):
            if budget > 0:
                yield Node(factor, (Var(attachments[0]),))
        elif budget > 0:
            for below in _factorizations(node_at(node, attachments[0]), budget - 1):
                yield Node(factor, (below,))


def _size(body: TermNode) -> int:
    return sum(1 for _ in _labelled(body, ()))
