import numpy as np
import pytest

from cli.corpus import contains_a, everything, first_child_a, infinite_b_words, infinitely_many_a, load_tree
from terms.alphabet import RankedAlphabet


@pytest.fixture(scope="session")
def alphabet():
    return RankedAlphabet.of({"a": 2, "b": 2, "c": 0})


@pytest.fixture(scope="session")
def unary_alphabet():
    return RankedAlphabet.of({"a": 2, "b": 1, "c": 0})


@pytest.fixture(scope="session")
def contains_a_language():
    return contains_a()


@pytest.fixture(scope="session")
def first_child_a_language():
    return first_child_a()


@pytest.fixture(scope="session")
def everything_language():
    return everything()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def all_b():
    return load_tree("all_b")


@pytest.fixture(scope="session")
def a_rooted():
    return load_tree("a_rooted")




@pytest.fixture(scope="session")
def infinite_b_words_language():
    return infinite_b_words()


@pytest.fixture(scope="session")
def infinitely_many_a_language():
    return infinitely_many_a()
