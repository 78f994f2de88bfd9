from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple

from errors import UnknownSymbolError


@dataclass(frozen=True)
class RankedAlphabet:
    """
    Finite set of symbol names, each with an arity.
    Symbols keep the order in which they were declared.
    """

    symbols: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate symbol names in alphabet: {names}")
        for name, arity in self.symbols:
            if not isinstance(arity, int) or arity < 0:
                raise ValueError(f"Symbol '{name}' has invalid arity {arity!r}")

    @classmethod
    def of(cls, arities: Mapping[str, int]) -> "RankedAlphabet":
        return cls(tuple((name, arity) for name, arity in arities.items()))

    @property
    def arities(self) -> Dict[str, int]:
        return dict(self.symbols)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.symbols), default=0)

    def arity(self, name: str) -> int:
        for symbol, arity in self.symbols:
            if symbol == name:
                return arity
        raise UnknownSymbolError(f"Symbol '{name}' is not in the alphabet {self.names}")

    def extended(self, name: str, arity: int) -> "RankedAlphabet":
        """The alphabet with one more symbol, e.g. the hole of a context."""
        return RankedAlphabet(self.symbols + ((name, arity),))

    def __contains__(self, name) -> bool:
        return any(symbol == name for symbol, _ in self.symbols)

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)
