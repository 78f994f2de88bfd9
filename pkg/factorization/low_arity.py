import logging
from typing import AbstractSet, Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Set, Tuple

from automata.automaton import ParityTreeAutomaton
from errors import MissingTableEntryError
from factorization.reduction import enumerate_factorizations
from profiles.evaluation import generator_labels, phi, pi_eval
from profiles.profile_set import rename
from profiles.saturation import compose_profile_sets, saturate
from terms.enumeration import enumerate_terms
from terms.term import Factorization, Term, is_singleton, relabel_term

logger = logging.getLogger(__name__)


class PhiTable(Mapping[Term, Hashable]):
    """Evaluation table of the arity <= 1 terms by an automaton's profile sets, filled on demand."""

    def __init__(self, automaton: ParityTreeAutomaton):
        self.automaton = automaton
        self._values: Dict[Term, Hashable] = {}

    def __getitem__(self, factor: Term) -> Hashable:
        if not isinstance(factor, Term) or factor.arity > 1:
            raise KeyError(factor)
        if factor not in self._values:
            self._values[factor] = phi(self.automaton, factor)
        return self._values[factor]

    def __iter__(self) -> Iterator[Term]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)


def evaluated_label(factor: Term, table: Mapping[Term, Hashable]) -> Hashable:
    """Table value of an arity <= 1 factor; a wider factor must be a singleton and keeps its symbol."""
    if factor.arity > 1:
        if not is_singleton(factor):
            raise MissingTableEntryError(f"Factor {factor!r} of arity {factor.arity} is not a singleton")
        return factor.root.label
    try:
        return table[factor]
    except KeyError:
        raise MissingTableEntryError(f"No table entry for the factor {factor!r}") from None


def evaluated_tree(outer: Factorization, table: Mapping[Term, Hashable]) -> Term:
    return relabel_term(outer, lambda factor: evaluated_label(factor, table))


def h_sets(
    labels: Iterable[Tuple[Hashable, int]], evaluate: Callable[[Term], Hashable], arity: int, max_height: int
) -> Dict[Hashable, Set[Term]]:
    """All label trees of the given arity up to `max_height`, grouped by their evaluation."""
    grouped: Dict[Hashable, Set[Term]] = {}
    count = 0
    for s in enumerate_terms(labels, arity, max_height):
        grouped.setdefault(evaluate(s), set()).add(s)
        count += 1
    logger.debug("Grouped %d label trees into %d H-sets", count, len(grouped))
    return grouped


def profile_label_evaluator(automaton: ParityTreeAutomaton) -> Callable[[Term], Hashable]:
    """Evaluate a label tree whose labels are profile sets or symbols of arity >= 2."""
    symbols = generator_labels(automaton)

    def evaluate(s: Term) -> Hashable:
        return pi_eval(relabel_term(s, lambda label: symbols[label] if isinstance(label, str) else label))

    return evaluate


def decide_low_arity(
    t: Term,
    target: Hashable,
    table: Mapping[Term, Hashable],
    h: Mapping[Hashable, AbstractSet[Term]],
) -> bool:
    """
    Whether some factorization of t of outer height <= 2 * arity evaluates,
    factor by factor, to a label tree in H(target).
    """
    allowed = h.get(target, set())
    if not allowed:
        return False
    for outer in enumerate_factorizations(t, max_height=2 * t.arity):
        if evaluated_tree(outer, table) in allowed:
            return True
    return False


def profile_labels(automaton: ParityTreeAutomaton) -> List[Tuple[Hashable, int]]:
    """Labels a factorization can evaluate to: reachable values of arity <= 1 and the wider symbols."""
    generators = [
        (name, automaton.alphabet.arity(name), value) for name, value in generator_labels(automaton).items()
    ]
    elements = saturate(generators, compose_profile_sets, rename, 1)
    labels: List[Tuple[Hashable, int]] = [(element.value, element.arity) for element in elements]
    labels.extend((name, arity) for name, arity in automaton.alphabet if arity > 1)
    return labels
