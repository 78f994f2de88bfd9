import os
from typing import List

from automata.automaton import ParityTreeAutomaton
from automata.language_pair import LanguagePair
from loader.json_loader import load_document, parse_automaton, parse_language_pair, parse_tree
from terms.regular_tree import Tree

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


def corpus_path(name: str) -> str:
    return os.path.join(CORPUS_DIR, f"{name}.json")


def corpus_names() -> List[str]:
    return sorted(file[: -len(".json")] for file in os.listdir(CORPUS_DIR) if file.endswith(".json"))


def load_language(name: str) -> LanguagePair:
    return parse_language_pair(load_document(corpus_path(name)))


def load_automaton(name: str) -> ParityTreeAutomaton:
    return parse_automaton(load_document(corpus_path(name)))


def load_tree(name: str) -> Tree:
    return parse_tree(load_document(corpus_path(name)))


def contains_a() -> LanguagePair:
    """Trees over binary a, b and the leaf c with at least one vertex labelled a."""
    return load_language("contains_a")


def first_child_a() -> LanguagePair:
    """Trees whose root is binary and whose first child is labelled a."""
    return load_language("first_child_a")


def everything() -> LanguagePair:
    return load_language("everything")


def infinite_b_words() -> LanguagePair:
    """The infinite word b b b ... over unary b and the leaf c; its complement is the finite words."""
    return load_language("infinite_b_words")


def infinitely_many_a() -> LanguagePair:
    """Infinite words over unary a, b with infinitely many a; finite words end in c."""
    return load_language("infinitely_many_a")
