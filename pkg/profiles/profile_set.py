from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, Hashable, Iterable, Mapping, Set, Tuple, Union

from automata.runs import RunProfile


@dataclass(frozen=True)
class Branch:
    """Obligation: a run from `state` exists on the variable-free remainder."""

    state: Hashable


@dataclass(frozen=True)
class VarAtom:
    """A path from `source` reaching variable `index` in `target`, least priority `priority`."""

    source: Hashable
    priority: int
    target: Hashable
    index: int


Atom = Union[Branch, VarAtom]
PartialProfile = FrozenSet[Atom]
ProfileSet = FrozenSet[PartialProfile]

EMPTY: ProfileSet = frozenset()


def partial_profile(atoms: Iterable[Atom]) -> PartialProfile:
    conjunction = frozenset(atoms)
    indices = [atom.index for atom in conjunction if isinstance(atom, VarAtom)]
    if len(indices) != len(set(indices)):
        raise ValueError(f"Several atoms for one variable in {sorted(conjunction, key=atom_key)}")
    return conjunction


def normalize(disjuncts: Iterable[AbstractSet[Atom]]) -> ProfileSet:
    """Keep the disjuncts with no proper subset among the others (the larger elements)."""
    candidates: Set[PartialProfile] = {frozenset(disjunct) for disjunct in disjuncts}
    return frozenset(
        disjunct for disjunct in candidates if not any(other < disjunct for other in candidates)
    )


def conjunction_leq(left: AbstractSet[Atom], right: AbstractSet[Atom]) -> bool:
    """More atoms means a stronger obligation, hence a smaller element."""
    return left >= right


def profile_set_leq(left: ProfileSet, right: ProfileSet) -> bool:
    return all(any(conjunction_leq(mine, theirs) for theirs in right) for mine in left)


def is_run_shaped(disjunct: PartialProfile) -> bool:
    """One Branch atom, and every variable atom leaves the Branch state."""
    branches = [atom for atom in disjunct if isinstance(atom, Branch)]
    if len(branches) != 1:
        return False
    return all(atom.source == branches[0].state for atom in disjunct if isinstance(atom, VarAtom))


def from_run_profile(profile: RunProfile) -> PartialProfile:
    return frozenset(
        [Branch(profile.root)]
        + [VarAtom(profile.root, exit_.min_priority, exit_.state, exit_.index) for exit_ in profile.exits]
    )


def rename(value: ProfileSet, renaming: Mapping[int, int]) -> ProfileSet:
    return frozenset(
        frozenset(
            VarAtom(atom.source, atom.priority, atom.target, renaming[atom.index])
            if isinstance(atom, VarAtom)
            else atom
            for atom in disjunct
        )
        for disjunct in value
    )


def variable_indices(value: ProfileSet) -> Set[int]:
    return {atom.index for disjunct in value for atom in disjunct if isinstance(atom, VarAtom)}


def max_priority(value: ProfileSet) -> int:
    return max(
        (atom.priority for disjunct in value for atom in disjunct if isinstance(atom, VarAtom)),
        default=0,
    )


def atom_key(atom: Atom) -> Tuple:
    if isinstance(atom, Branch):
        return (0, str(atom.state))
    return (1, atom.index, str(atom.source), atom.priority, str(atom.target))


def disjunct_key(disjunct: PartialProfile) -> Tuple:
    return tuple(atom_key(atom) for atom in sorted(disjunct, key=atom_key))


def ordered(value: ProfileSet) -> list:
    """Disjuncts and atoms in a canonical order, for output and stable iteration."""
    return [sorted(disjunct, key=atom_key) for disjunct in sorted(value, key=disjunct_key)]
