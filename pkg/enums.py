from typing import List

HOLE = "HOLE"
CUT = "#cut"


class Player:
    def __init__(self, name: str, parity: int):
        self.name = name
        self.parity = parity

    @property
    def opponent(self) -> "Player":
        return ODD if self is EVEN else EVEN

    def wins(self, priority: int) -> bool:
        """Whether this player wins a play whose least recurring priority is `priority`."""
        return priority % 2 == self.parity

    def __repr__(self):
        return f"Player({self.name})"

    def __str__(self):
        return f"{self.name}"


EVEN = Player("even", 0)
ODD = Player("odd", 1)


def get_players() -> List[Player]:
    return [EVEN, ODD]


def player_of_priority(priority: int) -> Player:
    return EVEN if priority % 2 == 0 else ODD


def get_player(name: str) -> Player:
    for player in get_players():
        if player.name == name:
            return player
    raise ValueError(f"Unknown player '{name}', expected one of {get_players()}")
