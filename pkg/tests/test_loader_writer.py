import json

import pytest

from cli.corpus import corpus_path
from enums import EVEN, HOLE, ODD
from errors import InconsistentLanguagePairError, MalformedDocumentError
from factorization.low_arity import PhiTable, h_sets, profile_label_evaluator, profile_labels
from loader.json_loader import (
    load_document,
    parse_automaton,
    parse_context,
    parse_game,
    parse_h_sets,
    parse_language_pair,
    parse_profile_set,
    parse_regular_tree,
    parse_table,
    parse_term,
    parse_tree,
)
from profiles.profile_set import Branch, VarAtom
from terms.permutation import bisimilar
from terms.regular_tree import GraphNode, RegularTree
from terms.term import Node, Term, Var, sing
from writer.json_writer import (
    dumps,
    factorization_to_json,
    h_sets_to_json,
    profile_set_to_json,
    regular_tree_to_json,
    table_to_json,
    term_to_json,
)

C = Node("c")


def test_parse_sample_term():
    t = parse_tree(load_document(corpus_path("sample_term")))
    assert t == Term(2, Node("a", (Node("b", (Node("b", (Var(0), C)), C)), Var(1))))


def test_parse_regular_tree():
    g = parse_tree(load_document(corpus_path("all_b")))
    assert isinstance(g, RegularTree)
    assert (g.arity, g.root, dict(g.nodes)) == (0, "n0", {"n0": GraphNode("b", None, ("n0", "n0"))})
    assert bisimilar(g, RegularTree(0, "m", {"m": GraphNode("b", None, ("m", "m"))}))


def test_parse_game():
    game = parse_game(load_document(corpus_path("small_game")))
    assert game.owner["v0"] is EVEN
    assert game.owner["v1"] is ODD
    assert game.priority["v1"] == 2
    assert list(game.successors("v0")) == ["v1", "v2"]


def test_parse_language_pair():
    language = parse_language_pair(load_document(corpus_path("contains_a")))
    assert language.positive.initial == "s"
    assert language.arity == 0
    assert language.alphabet.arities == {"a": 2, "b": 2, "c": 0}


def test_parse_language_pair_checks_disjointness():
    automaton = load_document(corpus_path("contains_a_automaton"))
    with pytest.raises(InconsistentLanguagePairError):
        parse_language_pair({"positive": automaton, "complement": automaton})


def test_parse_context_with_hole():
    doc = {
        "arity": 0,
        "hole_arity": 1,
        "root": {"symbol": "a", "children": [{"symbol": HOLE, "children": [{"symbol": "c"}]}, {"symbol": "c"}]},
    }
    context = parse_context(doc)
    assert context.hole_arity == 1
    assert HOLE in [node.label for node in context.tree.nodes.values()]


@pytest.mark.parametrize(
    "parse, doc",
    [
        (parse_term, {"arity": 0}),
        (parse_term, {"arity": 0, "root": {"children": []}}),
        (parse_regular_tree, {"arity": 0, "root": "n0", "nodes": [{"id": "n0"}]}),
        (
            parse_regular_tree,
            {"arity": 0, "root": "n0", "nodes": [{"id": "n0", "symbol": "c"}, {"id": "n0", "symbol": "c"}]},
        ),
        (parse_game, {"positions": [{"id": "v", "owner": "even", "priority": 0}], "edges": [["v", "w"]]}),
        (parse_profile_set, [[{"var": {"from": "p", "min": 0, "to": "p"}}]]),
        (parse_table, {"entries": [{"value": "x"}]}),
        (parse_h_sets, [{"label": "x"}]),
    ],
)
def test_malformed_documents(parse, doc):
    with pytest.raises(MalformedDocumentError):
        parse(doc)


def test_automata_must_not_use_the_hole_symbol():
    doc = load_document(corpus_path("contains_a_automaton"))
    doc["alphabet"]["symbols"].append({"name": HOLE, "arity": 1})
    with pytest.raises(MalformedDocumentError):
        parse_automaton(doc)


def test_profile_sets_allow_one_atom_per_variable():
    doc = [[{"var": {"from": "p", "min": 0, "to": "p", "index": 0}}, {"var": {"from": "p", "min": 1, "to": "q", "index": 0}}]]
    with pytest.raises(MalformedDocumentError):
        parse_profile_set(doc)


def test_parse_profile_set_normalizes():
    weak = [{"branch": "p"}]
    strong = [{"branch": "p"}, {"var": {"from": "p", "min": 0, "to": "q", "index": 0}}]
    assert parse_profile_set([weak, strong]) == frozenset([frozenset([Branch("p")])])
    assert parse_profile_set([strong]) == frozenset([frozenset([Branch("p"), VarAtom("p", 0, "q", 0)])])


def test_h_sets_merge_entries_with_one_label():
    tree = {"arity": 0, "root": {"symbol": "c"}}
    other = {"arity": 0, "root": {"symbol": "d"}}
    h = parse_h_sets([{"label": "x", "trees": [tree]}, {"label": "x", "trees": [other]}])
    assert h == {"x": {Term(0, C), Term(0, Node("d"))}}


def test_load_document_reads_utf8(tmp_path):
    path = tmp_path / "term.json"
    path.write_text(json.dumps({"arity": 0, "root": {"symbol": "é"}}), encoding="utf-8")
    assert parse_term(load_document(str(path))) == Term(0, Node("é"))


def test_dumps_is_deterministic():
    assert dumps({"b": 1, "a": [2, {"d": 3, "c": 4}]}) == '{"a": [2, {"c": 4, "d": 3}], "b": 1}'


def test_term_and_factorization_documents():
    t = Term(1, Node("b", (Var(0), C)))
    assert term_to_json(t) == {
        "arity": 1,
        "root": {"symbol": "b", "children": [{"var": 0}, {"symbol": "c", "children": []}]},
    }
    assert factorization_to_json(sing(t)) == {
        "arity": 1,
        "root": {"factor": term_to_json(t), "children": [{"var": 0}]},
    }


def test_regular_tree_document(all_b):
    assert regular_tree_to_json(all_b) == {
        "arity": 0,
        "root": "n0",
        "nodes": [{"id": "n0", "symbol": "b", "var": None, "successors": ["n0", "n0"]}],
    }


def test_profile_set_document_is_ordered():
    value = frozenset(
        [
            frozenset([VarAtom("q", 1, "p", 0), Branch("q")]),
            frozenset([Branch("p")]),
        ]
    )
    assert profile_set_to_json(value) == [
        [{"branch": "p"}],
        [{"branch": "q"}, {"var": {"from": "q", "min": 1, "to": "p", "index": 0}}],
    ]
    assert parse_profile_set(profile_set_to_json(value)) == value


def test_profile_set_labels_are_written_as_documents(contains_a_language):
    automaton = contains_a_language.positive
    h = h_sets(profile_labels(automaton), profile_label_evaluator(automaton), 0, 0)
    doc = h_sets_to_json(h)
    assert all(isinstance(entry["label"], list) for entry in doc)
    assert dumps(doc) == dumps(h_sets_to_json(parse_h_sets(doc)))
    assert parse_h_sets(doc) == h

    table = PhiTable(automaton)
    table[Term(1, Node("b", (Var(0), C)))]
    assert parse_table(table_to_json(table)) == dict(table)
