"""The threshold activation process and its stationarity certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .digraph import Digraph, VertexSet, full_set, members, peel_core
from .errors import InvalidArgumentError
from .extended import INF, ExtNat
from .groups import Group


@dataclass(frozen=True)
class Finite:
    """Synchrony reached after ``steps`` rounds."""

    steps: int


@dataclass(frozen=True)
class Stuck:
    """The process stalled with ``active`` != V."""

    active: VertexSet


SynchronyResult = Union[Finite, Stuck]


@dataclass(frozen=True)
class SpreadTrace:
    sets: tuple[VertexSet, ...]
    threshold: int
    result: SynchronyResult

    def to_json(self, d: Digraph) -> str:
        return json.dumps([d.labels_of(s) for s in self.sets])


def _check_threshold(t: int) -> None:
    if t < 1:
        raise InvalidArgumentError(f"threshold must be >= 1, got {t}")


def step(d: Digraph, active: VertexSet, t: int) -> VertexSet:
    """One synchronous round: acquire every inactive vertex with >= t active in-neighbours."""
    _check_threshold(t)
    acquired = 0
    in_adj = d.in_adj
    for v in range(d.n):
        if not active >> v & 1 and (in_adj[v] & active).bit_count() >= t:
            acquired |= 1 << v
    return active | acquired


def sync_steps(d: Digraph, seed: VertexSet, t: int) -> ExtNat:
    """d(S, t) without building a trace."""
    _check_threshold(t)
    full = full_set(d.n)
    in_adj = d.in_adj
    active = seed
    rounds = 0
    while active != full:
        acquired = 0
        inactive = full & ~active
        while inactive:
            low = inactive & -inactive
            inactive ^= low
            v = low.bit_length() - 1
            if (in_adj[v] & active).bit_count() >= t:
                acquired |= low
        if not acquired:
            return INF
        active |= acquired
        rounds += 1
    return rounds


def run(d: Digraph, seed: VertexSet, t: int) -> tuple[SynchronyResult, SpreadTrace]:
    _check_threshold(t)
    full = full_set(d.n)
    sets = [seed]
    active = seed
    while active != full:
        nxt = step(d, active, t)
        if nxt == active:
            result: SynchronyResult = Stuck(active)
            return result, SpreadTrace(tuple(sets), t, result)
        sets.append(nxt)
        active = nxt
    result = Finite(len(sets) - 1)
    return result, SpreadTrace(tuple(sets), t, result)


def is_stationary(d: Digraph, active: VertexSet, t: int) -> bool:
    """Every vertex outside ``active`` has fewer than t in-neighbours inside it."""
    for v in members(full_set(d.n) & ~active):
        if (d.in_adj[v] & active).bit_count() >= t:
            return False
    return True


def is_stationary_regular(d: Digraph, active: VertexSet, t: int, h: int) -> bool:
    """Complement form for h-regular digraphs: id_I(x) > h - t on the inactive set I."""
    inactive = full_set(d.n) & ~active
    return all((d.in_adj[v] & inactive).bit_count() > h - t for v in members(inactive))


def verify_stuck_certificate(d: Digraph, active: VertexSet, t: int) -> bool:
    """Check that ``active`` is a proper stationary set at threshold ``t``.

    On regular digraphs the complement-degree form is evaluated as well and
    must agree; disagreement raises AssertionError since it would mean the
    in-degree bookkeeping is broken.
    """
    if active == full_set(d.n):
        return False
    ok = is_stationary(d, active, t)
    h = d.regular_degree()
    if h is not None:
        ok_regular = is_stationary_regular(d, active, t, h)
        if ok != ok_regular:
            raise AssertionError(
                f"stationarity forms disagree on {d.labels_of(active)} at t={t}"
            )
    return ok


def synchronizes_by_peeling(d: Digraph, seed: VertexSet, k: int) -> bool:
    """Decide synchrony at threshold h - k from the inactive set's (k+1)-in-core.

    The digraph must be regular of degree h. The seed synchronizes iff the
    core of V \\ S is empty.
    """
    h = d.regular_degree()
    if h is None:
        raise InvalidArgumentError("peeling criterion needs a regular digraph")
    if not 0 <= k < h:
        raise InvalidArgumentError(f"k must satisfy 0 <= k < h={h}, got {k}")
    return peel_core(d, full_set(d.n) & ~seed, k) == 0


def right_translate(group: Group, mask: VertexSet, g: int) -> VertexSet:
    """The set {x g : x in S} as a bitmask."""
    out = 0
    for x in members(mask):
        out |= 1 << group.mul[x][g]
    return out
