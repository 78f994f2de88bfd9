import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from automata.language_pair import LanguagePair
from automata.membership import membership
from errors import ArityMismatchError, UnreachableElementError
from profiles.evaluation import generator_labels, profile_set_of_regular
from profiles.profile_set import ProfileSet
from profiles.saturation import compose_profile_sets
from syntactic.congruence import HoleAutomata, separate
from syntactic.elements import AlgebraElement, reachable_elements
from terms.regular_tree import Tree, as_regular_tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraClass:
    id: str
    arity: int
    representative: AlgebraElement
    members: Tuple[AlgebraElement, ...]
    # Only decided at the language's arity.
    accepting: Optional[bool] = None


@dataclass(frozen=True)
class TableEntry:
    root: str
    args: Tuple[str, ...]
    result: str


@dataclass(frozen=True)
class SyntacticAlgebra:
    language: LanguagePair
    max_arity: int
    classes: Mapping[int, Tuple[AlgebraClass, ...]]
    table: Tuple[TableEntry, ...] = ()
    _lookup: Dict[Tuple[int, ProfileSet], AlgebraClass] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        for arity_classes in self.classes.values():
            for algebra_class in arity_classes:
                for member in algebra_class.members:
                    self._lookup[(member.arity, member.value)] = algebra_class

    def class_by_id(self, class_id: str) -> AlgebraClass:
        arity = int(class_id.split(":")[0])
        for algebra_class in self.classes.get(arity, ()):
            if algebra_class.id == class_id:
                return algebra_class
        raise KeyError(f"No class '{class_id}'")

    def class_of_value(self, arity: int, value: ProfileSet) -> AlgebraClass:
        try:
            return self._lookup[(arity, value)]
        except KeyError:
            raise UnreachableElementError(
                f"Value of arity {arity} was not reached by saturation up to arity {self.max_arity}"
            ) from None

    @property
    def accepting(self) -> List[str]:
        return [c.id for c in self.classes.get(self.language.arity, ()) if c.accepting]


def _classify(language: LanguagePair, elements: Sequence[AlgebraElement], arity: int) -> Tuple[AlgebraClass, ...]:
    representatives: List[Tuple[AlgebraElement, HoleAutomata]] = []
    members: List[List[AlgebraElement]] = []
    for element in tqdm(elements, desc=f"classes of arity {arity}", disable=None):
        automata = HoleAutomata(language, element)
        for index, (_, known) in enumerate(representatives):
            if separate(known, automata) is None:
                members[index].append(element)
                break
        else:
            representatives.append((element, automata))
            members.append([element])

    classes = []
    for index, ((representative, _), group) in enumerate(zip(representatives, members)):
        accepting = membership(language.positive, representative.witness) if arity == language.arity else None
        classes.append(AlgebraClass(f"{arity}:{index}", arity, representative, tuple(group), accepting))
    logger.info("Arity %d: %d elements in %d classes", arity, len(elements), len(classes))
    return tuple(classes)


def syntactic_algebra(language: LanguagePair, max_arity: int) -> SyntacticAlgebra:
    """Reachable elements up to `max_arity`, quotiented by the syntactic congruence."""
    elements = reachable_elements(language, max_arity)
    classes = {
        arity: _classify(language, [element for element in elements if element.arity == arity], arity)
        for arity in range(max_arity + 1)
    }
    algebra = SyntacticAlgebra(language, max_arity, classes)
    return SyntacticAlgebra(language, max_arity, classes, tuple(_composition_table(algebra)))


def compose_classes(algebra: SyntacticAlgebra, root: str, args: Sequence[AlgebraElement]) -> AlgebraClass:
    """Class of root(args), the variables of the arguments numbered left to right."""
    automaton = algebra.language.positive
    if automaton.alphabet.arity(root) != len(args):
        raise ArityMismatchError(f"'{root}' takes {automaton.alphabet.arity(root)} arguments, got {len(args)}")
    slots = []
    offset = 0
    for element in args:
        slots.append((element, {index: offset + index for index in range(element.arity)}))
        offset += element.arity
    value = compose_profile_sets(generator_labels(automaton)[root], slots, offset)
    return algebra.class_of_value(offset, value)


def _composition_table(algebra: SyntacticAlgebra) -> List[TableEntry]:
    entries = []
    available = [c for arity in sorted(algebra.classes) for c in algebra.classes[arity]]
    for name, arity in algebra.language.alphabet:
        for args in cartesian(available, repeat=arity):
            if sum(c.arity for c in args) > algebra.max_arity:
                continue
            result = compose_classes(algebra, name, [c.representative for c in args])
            entries.append(TableEntry(name, tuple(c.id for c in args), result.id))
    return entries


@dataclass(frozen=True)
class CongruenceViolation:
    entry: TableEntry
    args: Tuple[AlgebraElement, ...]
    result: str


def check_congruence(
    algebra: SyntacticAlgebra, samples: int = 100, rng: Optional[np.random.Generator] = None
) -> List[CongruenceViolation]:
    """
    Recompute sampled table entries with other members of the argument classes
    in place of the representatives; the result class must not change.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    candidates = [entry for entry in algebra.table if entry.args]
    violations = []
    if not candidates:
        return violations
    for _ in range(samples):
        entry = candidates[rng.integers(len(candidates))]
        args = []
        for class_id in entry.args:
            members = algebra.class_by_id(class_id).members
            args.append(members[rng.integers(len(members))])
        result = compose_classes(algebra, entry.root, args)
        if result.id != entry.result:
            violations.append(CongruenceViolation(entry, tuple(args), result.id))
    return violations


def classify(algebra: SyntacticAlgebra, tree: Tree) -> AlgebraClass:
    g = as_regular_tree(tree)
    return algebra.class_of_value(g.arity, profile_set_of_regular(algebra.language.positive, g))


def recognizes(language: LanguagePair, algebra: SyntacticAlgebra, tree: Tree) -> bool:
    g = as_regular_tree(tree)
    if g.arity != language.arity:
        raise ArityMismatchError(f"Tree of arity {g.arity} for a language of arity {language.arity}")
    return bool(classify(algebra, g).accepting)


def class_sizes(algebra: SyntacticAlgebra) -> Dict[int, int]:
    return {arity: len(classes) for arity, classes in algebra.classes.items()}