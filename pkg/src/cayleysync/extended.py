"""Extended naturals: non-negative integers plus a distinct infinity."""

from __future__ import annotations

from functools import total_ordering
from typing import Union


@total_ordering
class Infinity:
    """The top element of the extended naturals.

    Compares greater than every int and equal only to itself. It is not a
    float, so arithmetic with it is deliberately unsupported.
    """

    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("cayleysync.inf")

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ExtNat = Union[int, Infinity]


def ext_to_json(value: ExtNat) -> Union[int, str]:
    return "inf" if value is INF else int(value)


def ext_from_json(value: Union[int, str]) -> ExtNat:
    if value == "inf":
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"not an extended natural: {value!r}")
    return value
