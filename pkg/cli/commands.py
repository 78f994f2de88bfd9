import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from automata.emptiness import emptiness
from automata.membership import membership
from factorization.pieces import is_reduced
from factorization.reduction import reduce
from games.solver import solve
from games.verification import verify_strategy
from loader.json_loader import (
    load_document,
    parse_automaton,
    parse_game,
    parse_language_pair,
    parse_term,
    parse_tree,
)
from pipeline.report_pipeline import run_report_pipeline
from profiles.evaluation import accepts_via_phi, phi, profile_set_of_regular
from syntactic.algebra import syntactic_algebra
from syntactic.commutativity import is_commutative
from syntactic.congruence import separating_context
from syntactic.elements import element_of
from terms.term import Term, flatten, height
from writer.json_writer import (
    algebra_to_json,
    context_to_json,
    dumps,
    factorization_to_json,
    profile_set_to_json,
    regular_tree_to_json,
    solution_to_json,
)

logger = logging.getLogger(__name__)


def _env_int(key: str, default: int) -> int:
    value = os.getenv(key)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f".env has a non-integer {key}: {value!r}") from None


def _result(command: str, verdict: Optional[bool], payload: Dict[str, Any]) -> Dict[str, Any]:
    return {"command": command, "verdict": verdict, "payload": payload}


def cmd_empty(args: argparse.Namespace) -> Dict[str, Any]:
    automaton = parse_automaton(load_document(args.automaton))
    result = emptiness(automaton)
    payload: Dict[str, Any] = {"witness": None}
    if not result.empty:
        payload["witness"] = regular_tree_to_json(result.witness)
        payload["witness_accepted"] = membership(automaton, result.witness)
    return _result("empty", result.empty, payload)


def cmd_member(args: argparse.Namespace) -> Dict[str, Any]:
    automaton = parse_automaton(load_document(args.automaton))
    tree = parse_tree(load_document(args.tree))
    return _result("member", membership(automaton, tree), {})


def cmd_equiv(args: argparse.Namespace) -> Dict[str, Any]:
    language = parse_language_pair(load_document(args.language))
    left = element_of(language, parse_tree(load_document(args.left)))
    right = element_of(language, parse_tree(load_document(args.right)))
    context = separating_context(language, left, right)
    payload = {"context": None if context is None else context_to_json(context)}
    return _result("equiv", context is None, payload)


def cmd_syntactic(args: argparse.Namespace) -> Dict[str, Any]:
    language = parse_language_pair(load_document(args.language))
    algebra = syntactic_algebra(language, args.max_arity)
    return _result("syntactic", None, algebra_to_json(algebra))


def cmd_commutative(args: argparse.Namespace) -> Dict[str, Any]:
    language = parse_language_pair(load_document(args.language))
    result = is_commutative(language)
    payload: Dict[str, Any] = {}
    if not result.commutative:
        payload = {"symbol": result.symbol, "permutation": list(result.permutation)}
    return _result("commutative", result.commutative, payload)


def cmd_reduce(args: argparse.Namespace) -> Dict[str, Any]:
    t = parse_term(load_document(args.term))
    outer = reduce(t)
    reduced, _ = is_reduced(outer)
    outer_height = height(outer.root)
    payload = {
        "factorization": factorization_to_json(outer),
        "height": outer_height,
        "bound": 2 * t.arity,
        "within_bound": outer_height <= 2 * t.arity,
        "is_reduced": reduced,
        "flattens_back": flatten(outer) == t,
    }
    verdict = reduced and payload["within_bound"] and payload["flattens_back"]
    return _result("reduce", verdict, payload)


def cmd_eval(args: argparse.Namespace) -> Dict[str, Any]:
    automaton = parse_automaton(load_document(args.automaton))
    tree = parse_tree(load_document(args.tree))
    if isinstance(tree, Term):
        value = phi(automaton, tree)
    else:
        value = profile_set_of_regular(automaton, tree)
    verdict = accepts_via_phi(automaton, value) if tree.arity == 0 else None
    return _result("eval", verdict, {"profile_set": profile_set_to_json(value)})


def cmd_solve(args: argparse.Namespace) -> Dict[str, Any]:
    game = parse_game(load_document(args.game))
    solution = solve(game)
    return _result("solve", verify_strategy(game, solution), solution_to_json(solution))


def cmd_report(args: argparse.Namespace) -> Dict[str, Any]:
    language = parse_language_pair(load_document(args.language))
    files = run_report_pipeline(language, args.max_arity, args.output_dir, args.seed)
    return _result("report", None, {"files": files})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treealg", description="Regular languages of infinite trees.")
    parser.add_argument(
        "--seed", type=int, default=_env_int("TREEALG_SEED", 0), help="seed of randomized probes"
    )
    # Also accepted after `report`.
    seed_option = argparse.ArgumentParser(add_help=False)
    seed_option.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed of randomized probes")
    commands = parser.add_subparsers(dest="command", required=True)

    empty = commands.add_parser("empty", help="emptiness of an automaton")
    empty.add_argument("--automaton", required=True)
    empty.set_defaults(handler=cmd_empty)

    member = commands.add_parser("member", help="membership of an arity-0 tree")
    member.add_argument("--automaton", required=True)
    member.add_argument("--tree", required=True)
    member.set_defaults(handler=cmd_member)

    equiv = commands.add_parser("equiv", help="syntactic equivalence of two trees")
    equiv.add_argument("--language", required=True)
    equiv.add_argument("--left", required=True)
    equiv.add_argument("--right", required=True)
    equiv.set_defaults(handler=cmd_equiv)

    max_arity = _env_int("TREEALG_MAX_ARITY", 1)
    syntactic = commands.add_parser("syntactic", help="syntactic algebra up to an arity")
    syntactic.add_argument("--language", required=True)
    syntactic.add_argument("--max-arity", type=int, default=max_arity)
    syntactic.set_defaults(handler=cmd_syntactic)

    commutative = commands.add_parser("commutative", help="whether the language ignores child order")
    commutative.add_argument("--language", required=True)
    commutative.set_defaults(handler=cmd_commutative)

    reduce_parser = commands.add_parser("reduce", help="reduced factorization of a finite term")
    reduce_parser.add_argument("--term", required=True)
    reduce_parser.set_defaults(handler=cmd_reduce)

    eval_parser = commands.add_parser("eval", help="profile set of a term or regular tree")
    eval_parser.add_argument("--automaton", required=True)
    eval_parser.add_argument("--tree", required=True)
    eval_parser.set_defaults(handler=cmd_eval)

    solve_parser = commands.add_parser("solve", help="solve a parity game")
    solve_parser.add_argument("--game", required=True)
    solve_parser.set_defaults(handler=cmd_solve)

    report = commands.add_parser(
        "report", help="Excel, CSV and plot report of the syntactic algebra", parents=[seed_option]
    )
    report.add_argument("--language", required=True)
    report.add_argument("--max-arity", type=int, default=max_arity)
    report.add_argument("--output-dir", default=None)
    report.set_defaults(handler=cmd_report)
    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run one command and print its result document. Returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
        result = args.handler(args)
    except (ValueError, KeyError, OSError) as error:
        # TreeAlgError and JSONDecodeError are ValueErrors
        logger.debug("Command failed", exc_info=True)
        print(f"treealg: error: {error}", file=sys.stderr)
        return 2
    print(dumps(result))
    return 0
