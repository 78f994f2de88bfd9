from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Tuple

from terms.term import Node, Term, TermNode, Var

Option = Tuple[TermNode, FrozenSet[int]]


def enumerate_terms(symbols: Iterable[Tuple[Hashable, int]], arity: int, max_height: int) -> Iterator[Term]:
    """
    Every term of the given arity and height <= max_height over the labelled
    symbols, using each variable at most once. A label may be listed with
    several arities.
    """
    if max_height < 0:
        return
    table = _Enumeration(list(symbols), frozenset(range(arity)))
    for node, _ in table.nodes(max_height, with_variables=False):
        yield Term(arity, node)


class _Enumeration:
    def __init__(self, symbols: List[Tuple[Hashable, int]], available: FrozenSet[int]):
        self.symbols = symbols
        self.available = available
        self._cache: Dict[Tuple[int, bool], List[Option]] = {}

    def nodes(self, height: int, with_variables: bool) -> List[Option]:
        key = (height, with_variables)
        if key in self._cache:
            return self._cache[key]
        result: List[Option] = []
        if with_variables:
            result.extend((Var(index), frozenset([index])) for index in sorted(self.available))
        for label, arity in self.symbols:
            if arity == 0:
                result.append((Node(label), frozenset()))
            elif height > 0:
                result.extend(self._combinations(label, arity, self.nodes(height - 1, True)))
        self._cache[key] = result
        return result

    @staticmethod
    def _combinations(label: Hashable, arity: int, options: List[Option]) -> List[Option]:
        result: List[Option] = []

        def extend(prefix: List[TermNode], used: FrozenSet[int]):
            if len(prefix) == arity:
                result.append((Node(label, tuple(prefix)), used))
                return
            for child, child_used in options:
                if not child_used & used:
                    extend(prefix + [child], used | child_used)

        extend([], frozenset())
        return result
