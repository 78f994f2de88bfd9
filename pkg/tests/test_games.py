from itertools import permutations

import pytest

from cli.oracles import game_grid, oracle_winners, random_game
from enums import EVEN, ODD, get_player
from games.parity_game import GameSolution, ParityGame
from games.solver import solve
from games.verification import verify_strategy


def small_game():
    return ParityGame.build(
        [("v0", EVEN, 1), ("v1", ODD, 2), ("v2", EVEN, 0)],
        [("v0", "v1"), ("v0", "v2"), ("v1", "v0"), ("v2", "v2")],
    )


def test_solve_small_game():
    game = small_game()
    solution = solve(game)
    assert solution.even_region == frozenset({"v0", "v1", "v2"})
    assert solution.even_strategy["v0"] == "v2"
    assert verify_strategy(game, solution)


def test_odd_loop_is_won_by_odd():
    game = ParityGame.build([("v", EVEN, 1)], [("v", "v")])
    assert solve(game).odd_region == frozenset({"v"})


def test_stuck_player_loses():
    game = ParityGame.build([("e", EVEN, 0), ("o", ODD, 0)], [])
    solution = solve(game)
    assert solution.winner("e") is ODD
    assert solution.winner("o") is EVEN
    assert verify_strategy(game, solution)


def test_verify_strategy_rejects_wrong_regions():
    game = small_game()
    wrong = GameSolution(frozenset(), frozenset({"v0", "v1", "v2"}), {}, {})
    assert not verify_strategy(game, wrong)


def test_verify_strategy_rejects_overlapping_regions():
    game = small_game()
    solution = solve(game)
    overlapping = GameSolution(
        solution.even_region, frozenset({"v0"}), solution.even_strategy, solution.odd_strategy
    )
    assert not verify_strategy(game, overlapping)


def test_negative_priority_is_rejected():
    with pytest.raises(ValueError):
        ParityGame.build([("v", EVEN, -1)], [])


def test_unknown_player_name():
    with pytest.raises(ValueError):
        get_player("nobody")


def shape(game, order):
    index = {name: position for position, name in enumerate(order)}
    return tuple(
        (game.owner[name].name, game.priority[name], tuple(sorted(index[target] for target in game.successors(name))))
        for name in order
    )


def canonical(game):
    return min(shape(game, order) for order in permutations(sorted(game.positions)))


def assert_solved_like_brute_force(game):
    solution = solve(game)
    assert {position: solution.winner(position) for position in game.positions} == oracle_winners(game)
    assert verify_strategy(game, solution)


@pytest.mark.parametrize("size", [1, 2])
def test_solve_agrees_with_brute_force_on_all_small_games(size):
    for game in game_grid(size):
        assert_solved_like_brute_force(game)


def test_solve_agrees_with_brute_force_on_all_three_position_games():
    seen = set()
    for game in game_grid(3, max_priority=2):
        key = canonical(game)
        if key in seen:
            continue
        seen.add(key)
        assert_solved_like_brute_force(game)
    assert len(seen) > 1000


def test_solve_agrees_with_brute_force_on_sampled_games(rng):
    for _ in range(300):
        game = random_game(rng, int(rng.integers(3, 7)))
        solution = solve(game)
        assert {position: solution.winner(position) for position in game.positions} == oracle_winners(game)
        assert verify_strategy(game, solution)


def test_dual_game_swaps_regions(rng):
    for _ in range(50):
        game = random_game(rng, 5)
        solution, dual = solve(game), solve(game.dual())
        assert dual.even_region == solution.odd_region
        assert dual.odd_region == solution.even_region
