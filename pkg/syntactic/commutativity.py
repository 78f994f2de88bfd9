import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Tuple

from automata.language_pair import LanguagePair
from syntactic.algebra import SyntacticAlgebra
from syntactic.congruence import synt_equiv
from syntactic.elements import element_of
from terms.term import Node, Term, Var, singleton

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutativityResult:
    commutative: bool
    symbol: Optional[str] = None
    permutation: Optional[Tuple[int, ...]] = None


def permuted_singleton(name: str, permutation: Tuple[int, ...]) -> Term:
    """a(x_p(0), ..., x_p(m-1)) for the permutation p."""
    return Term(len(permutation), Node(name, tuple(Var(index) for index in permutation)))


def is_commutative(language: LanguagePair, algebra: Optional[SyntacticAlgebra] = None) -> CommutativityResult:
    """
    Whether a(x_0, ..., x_{m-1}) is equivalent to every rearrangement of its
    variables, for every symbol a. Uses the algebra's classes when it reaches the
    symbol's arity and decides the congruence directly otherwise.
    """
    alphabet = language.alphabet
    for name, arity in alphabet:
        if arity < 2:
            continue
        plain = element_of(language, singleton(alphabet, name))
        for permutation in permutations(range(arity)):
            if permutation == tuple(range(arity)):
                continue
            swapped = element_of(language, permuted_singleton(name, permutation))
            if algebra is not None and arity <= algebra.max_arity:
                same = (
                    algebra.class_of_value(arity, plain.value).id
                    == algebra.class_of_value(arity, swapped.value).id
                )
            else:
                same = synt_equiv(language, plain, swapped)
            if not same:
                logger.info("'%s' is not commutative under %s", name, permutation)
                return CommutativityResult(False, name, permutation)
    return CommutativityResult(True)
