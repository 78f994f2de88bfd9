import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from profiles.evaluation import pi_eval
from profiles.profile_set import ProfileSet
from terms.regular_tree import RegularTree, close_loops, compose, rename_tree_variables
from terms.term import Node, Term, Var

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Element:
    """A reachable value of some arity, with a tree over the generator symbols evaluating to it."""

    arity: int
    value: Hashable
    witness: RegularTree


# An int slot is a variable of the result, otherwise an element whose variables are renamed into it.
Slot = Union[int, Tuple[Element, Mapping[int, int]]]
Generator = Tuple[str, int, Hashable]
Compose = Callable[[Hashable, Sequence[Slot], int], Optional[Hashable]]
Rename = Callable[[Hashable, Mapping[int, int]], Hashable]


def one_level_term(root: Hashable, slots: Sequence[Slot], arity: int, label_of: Callable[[Element], Hashable]) -> Term:
    children = []
    for slot in slots:
        if isinstance(slot, int):
            children.append(Var(slot))
        else:
            element, renaming = slot
            children.append(Node(label_of(element), tuple(Var(renaming[i]) for i in range(element.arity))))
    return Term(arity, Node(root, tuple(children)))


def compose_profile_sets(root: ProfileSet, slots: Sequence[Slot], arity: int) -> ProfileSet:
    return pi_eval(one_level_term(root, slots, arity, lambda element: element.value))


def _slot_assignments(slot_count: int, elements: Sequence[Element], budget: int) -> Iterator[Tuple[List[Slot], int]]:
    """Fill the slots left to right with fresh variables or elements, numbering variables in order."""

    def extend(prefix: List[Slot], used: int):
        if len(prefix) == slot_count:
            yield prefix, used
            return
        if used < budget:
            yield from extend(prefix + [used], used + 1)
        for element in elements:
            if used + element.arity <= budget:
                renaming = {index: used + index for index in range(element.arity)}
                yield from extend(prefix + [(element, renaming)], used + element.arity)

    yield from extend([], 0)


def saturation_rounds(
    generators: Sequence[Generator],
    compose_values: Compose,
    rename: Rename,
    max_arity: int,
    loop: Optional[Callable[[RegularTree], Hashable]] = None,
    loop_arity: int = 0,
) -> Iterator[List[Element]]:
    """
    Close the generators under one-level products whose root is a generator,
    keeping one element per (arity, value). Elements built here use each of
    their variables once, in left-to-right order; every round is yielded after
    closing under injective variable renamings into arities <= max_arity.
    With `loop`, every element of positive arity also contributes the arity-0
    tree obtained by sending its variables back to its root. Elements up to
    `loop_arity` are then built for their loops, but only those of arity
    <= max_arity are yielded.
    """
    budget = max(max_arity, loop_arity) if loop is not None else max_arity
    core: Dict[Tuple[int, Hashable], Element] = {}
    round_number = 0
    while True:
        round_number += 1
        snapshot = list(core.values())
        added = 0
        for name, arity, value in tqdm(generators, desc=f"saturation round {round_number}", disable=None):
            for slots, result_arity in _slot_assignments(arity, snapshot, budget):
                composed = compose_values(value, slots, result_arity)
                if composed is None or (result_arity, composed) in core:
                    continue
                witness = compose(
                    name,
                    [slot if isinstance(slot, int) else (slot[0].witness, slot[1]) for slot in slots],
                    result_arity,
                )
                core[(result_arity, composed)] = Element(result_arity, composed, witness)
                added += 1
        if loop is not None:
            for element in snapshot:
                if element.arity == 0:
                    continue
                looped = close_loops(element.witness)
                value = loop(looped)
                if (0, value) not in core:
                    core[(0, value)] = Element(0, value, looped)
                    added += 1
        logger.debug("Saturation round %d added %d elements", round_number, added)
        listed = [element for element in core.values() if element.arity <= max_arity]
        yield _with_renamings(listed, rename, max_arity)
        if not added:
            return


def _with_renamings(core: Sequence[Element], rename: Rename, max_arity: int) -> List[Element]:
    elements: Dict[Tuple[int, Hashable], Element] = {(element.arity, element.value): element for element in core}
    for element in core:
        for arity in range(element.arity, max_arity + 1):
            for image in permutations(range(arity), element.arity):
                renaming = dict(enumerate(image))
                value = rename(element.value, renaming)
                if (arity, value) in elements:
                    continue
                elements[(arity, value)] = Element(
                    arity, value, rename_tree_variables(element.witness, renaming, arity)
                )
    return list(elements.values())


def saturate(
    generators: Sequence[Generator],
    compose_values: Compose,
    rename: Rename,
    max_arity: int,
    loop: Optional[Callable[[RegularTree], Hashable]] = None,
    loop_arity: int = 0,
) -> List[Element]:
    elements: List[Element] = []
    for elements in saturation_rounds(generators, compose_values, rename, max_arity, loop, loop_arity):
        pass
    return elements
