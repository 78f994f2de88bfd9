from typing import List, Mapping, Optional, Sequence, Tuple

from automata.automaton import ParityTreeAutomaton
from profiles.evaluation import generator_labels, pi_eval
from profiles.profile_set import (
    Branch,
    PartialProfile,
    ProfileSet,
    VarAtom,
    disjunct_key,
    normalize,
    rename,
)
from profiles.saturation import Element, Slot, one_level_term, saturate

# A single conjunction, or None for the empty disjunction.
TransitionElement = Optional[PartialProfile]
BOTTOM: TransitionElement = None

HatPair = Tuple[ProfileSet, TransitionElement]


def t_meet(x: TransitionElement, y: TransitionElement) -> TransitionElement:
    if x is None or y is None:
        return BOTTOM
    meet = x | y
    targets = {}
    for atom in meet:
        if isinstance(atom, VarAtom):
            if targets.setdefault(atom.index, atom) != atom:
                return BOTTOM
    return meet


def as_profile_set(x: TransitionElement) -> ProfileSet:
    return frozenset() if x is None else frozenset([x])


def _meet_sets(left: ProfileSet, right: ProfileSet) -> ProfileSet:
    meets = (t_meet(x, y) for x in left for y in right)
    return normalize(meet for meet in meets if meet is not None)


def is_rectangular(e: ProfileSet, arity: int) -> bool:
    """Whether e is the meet of its branch projection and its projections onto single variables."""
    projections = [normalize(frozenset(atom for atom in d if isinstance(atom, Branch)) for d in e)]
    for index in range(arity):
        projections.append(
            normalize(
                frozenset(atom for atom in d if isinstance(atom, VarAtom) and atom.index == index)
                for d in e
            )
        )
    meet: ProfileSet = frozenset([frozenset()])
    for projection in projections:
        meet = _meet_sets(meet, projection)
    return meet == normalize(e)


def hat_generators(automaton: ParityTreeAutomaton) -> List[Tuple[str, HatPair]]:
    """
    One generator per symbol and run on its singleton term: the symbol's value
    paired with that run's conjunction. A symbol without runs gives (bottom, bottom).
    """
    generators = []
    for name, value in generator_labels(automaton).items():
        if not value:
            generators.append((name, (value, BOTTOM)))
        for disjunct in sorted(value, key=disjunct_key):
            generators.append((name, (value, disjunct)))
    return generators


def _compose_pairs(root: HatPair, slots: Sequence[Slot], arity: int) -> Optional[HatPair]:
    value = pi_eval(one_level_term(root[0], slots, arity, lambda element: element.value[0]))
    run: TransitionElement = BOTTOM
    # A child the root run never descends into does not constrain the product.
    if root[1] is not None:
        product = pi_eval(
            one_level_term(
                as_profile_set(root[1]), slots, arity, lambda element: as_profile_set(element.value[1])
            )
        )
        run = min(product, key=disjunct_key, default=BOTTOM)
    if run is None and value:
        return None
    return value, run


def _rename_pair(pair: HatPair, renaming: Mapping[int, int]) -> HatPair:
    value, run = pair
    renamed_run = None if run is None else next(iter(rename(frozenset([run]), renaming)))
    return rename(value, renaming), renamed_run


def hat_closure(
    automaton: ParityTreeAutomaton,
    generators: Sequence[Tuple[str, HatPair]],
    max_arity: int,
) -> List[Element]:
    """
    Pairs (value of a tree, conjunction of one partial run on it) reachable from
    the generators by one-level products up to arity `max_arity`. A pair with an
    empty run part is kept only over the empty value.
    """
    return saturate(
        [(name, automaton.alphabet.arity(name), pair) for name, pair in generators],
        _compose_pairs,
        _rename_pair,
        max_arity,
    )


def first_projection(elements: Sequence[Element]) -> set:
    return {(element.arity, element.value[0]) for element in elements}
