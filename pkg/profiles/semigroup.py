from dataclasses import dataclass
from typing import Hashable, Optional, Sequence, Union


@dataclass(frozen=True)
class Fin:
    """A finite path segment from `source` to `target` whose least priority is `priority`."""

    source: Hashable
    priority: int
    target: Hashable


@dataclass(frozen=True)
class Inf:
    """An accepting infinite branch starting in `state`."""

    state: Hashable


SElement = Union[Fin, Inf]


def s_mul(x: SElement, y: SElement) -> Optional[SElement]:
    if isinstance(x, Inf):
        return None
    if isinstance(y, Fin):
        if x.target != y.source:
            return None
        return Fin(x.source, min(x.priority, y.priority), y.target)
    if x.target != y.state:
        return None
    return Inf(x.source)


def s_omega(prefix: Sequence[Fin], loop: Sequence[Fin]) -> Optional[Inf]:
    """
    Infinite product prefix . loop . loop ...; defined when the segments chain
    and the least priority of the loop, which is the liminf of the segment
    minima, is even.
    """
    if not loop:
        raise ValueError("The repeated part of an infinite product must not be empty")
    chain = list(prefix) + list(loop)
    for left, right in zip(chain, chain[1:]):
        if left.target != right.source:
            return None
    if loop[-1].target != loop[0].source:
        return None
    if min(segment.priority for segment in loop) % 2 != 0:
        return None
    return Inf(chain[0].source)
