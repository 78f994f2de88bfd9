import logging
from functools import partial
from typing import Iterator, List

from automata.language_pair import LanguagePair
from profiles.evaluation import generator_labels, profile_set_of_regular
from profiles.profile_set import rename
from profiles.saturation import Element, compose_profile_sets, saturation_rounds
from terms.regular_tree import Tree, as_regular_tree

logger = logging.getLogger(__name__)

# An element of the profile algebra reachable from the symbols: its arity,
# its profile set value and a regular tree over the symbols evaluating to it.
AlgebraElement = Element


def element_of(language: LanguagePair, tree: Tree) -> AlgebraElement:
    g = as_regular_tree(tree)
    return AlgebraElement(g.arity, profile_set_of_regular(language.positive, g), g)


def reachable_rounds(language: LanguagePair, max_arity: int) -> Iterator[List[AlgebraElement]]:
    automaton = language.positive
    generators = [
        (name, automaton.alphabet.arity(name), value) for name, value in generator_labels(automaton).items()
    ]
    return saturation_rounds(
        generators,
        compose_profile_sets,
        rename,
        max_arity,
        loop=partial(profile_set_of_regular, automaton),
        loop_arity=automaton.alphabet.max_arity,
    )


def reachable_elements(language: LanguagePair, max_arity: int) -> List[AlgebraElement]:
    """
    Values of all trees of arity <= max_arity built from the symbols by finite
    products and by sending all variables of a tree back to its root. Trees up
    to the widest symbol are looped whatever `max_arity` is.
    """
    elements: List[AlgebraElement] = []
    for elements in reachable_rounds(language, max_arity):
        pass
    logger.info("Reached %d elements up to arity %d", len(elements), max_arity)
    return elements
