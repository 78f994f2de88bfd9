import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from automata.automaton import ParityTreeAutomaton
from automata.emptiness import emptiness
from automata.membership import membership
from automata.operations import product
from errors import InconsistentLanguagePairError
from terms.alphabet import RankedAlphabet
from terms.regular_tree import RegularTree, Tree, as_regular_tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LanguagePair:
    """A language of arity-0 trees given by an automaton for it and one for its complement."""

    positive: ParityTreeAutomaton
    complement: ParityTreeAutomaton
    arity: int = 0

    @property
    def alphabet(self) -> RankedAlphabet:
        return self.positive.alphabet


@dataclass(frozen=True)
class InconsistencyReport:
    check: str
    detail: str
    witness: Optional[RegularTree] = None


def load_language_pair(
    positive: ParityTreeAutomaton,
    complement: ParityTreeAutomaton,
    samples: Sequence[Tree] = (),
) -> Union[LanguagePair, InconsistencyReport]:
    """
    Accept the pair if the two languages are disjoint and every sample tree is
    accepted by exactly one of them; otherwise report the first failed check.
    """
    if positive.alphabet.arities != complement.alphabet.arities:
        return InconsistencyReport(
            "alphabet",
            f"positive alphabet {positive.alphabet.arities} differs from "
            f"complement alphabet {complement.alphabet.arities}",
        )

    overlap = emptiness(product(positive, complement))
    if not overlap.empty:
        return InconsistencyReport(
            "disjointness", "both automata accept the witness tree", overlap.witness
        )

    for index, sample in enumerate(samples):
        accepted_by = [
            name
            for name, automaton in (("positive", positive), ("complement", complement))
            if membership(automaton, sample)
        ]
        if len(accepted_by) != 1:
            return InconsistencyReport(
                "sample completeness",
                f"sample {index} is accepted by {accepted_by or 'neither automaton'}",
                as_regular_tree(sample),
            )
    logger.info("Language pair is consistent on %d samples", len(samples))
    return LanguagePair(positive, complement)


def require_language_pair(
    positive: ParityTreeAutomaton,
    complement: ParityTreeAutomaton,
    samples: Sequence[Tree] = (),
) -> LanguagePair:
    result = load_language_pair(positive, complement, samples)
    if isinstance(result, InconsistencyReport):
        raise InconsistentLanguagePairError(result)
    return result
