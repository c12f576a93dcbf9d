"""Bit-vector digraphs, Cayley digraph construction, girth and in-core peeling.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is a
member. Each digraph keeps out- and in-neighbour rows as bitmasks so that
``in_adj[v] & active`` gives the active in-neighbours of ``v`` in one step.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError
from .extended import INF, ExtNat
from .groups import GeneratingSet, Group

VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def iter_subsets(n: int, s: int) -> Iterator[VertexSet]:
    """All s-subsets of ``range(n)`` as bitmasks, in combinations order."""
    for combo in itertools.combinations(range(n), s):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask


@dataclass(frozen=True)
class Digraph:
    n: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    # True when vertex j is a^j in Cay(C_n, H); enables the cyclic orbit shortcut.
    cyclic: bool = False

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Digraph":
        out_adj = [0] * n
        in_adj = [0] * n
        for x, y in edges:
            if not (0 <= x < n and 0 <= y < n):
                raise InvalidArgumentError(f"edge ({x}, {y}) outside 0..{n - 1}")
            out_adj[x] |= 1 << y
            in_adj[y] |= 1 << x
        return cls(n, tuple(out_adj), tuple(in_adj), tuple(labels) if labels else None)

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in members(self.out_adj[x])]

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.out_adj[x] >> y & 1)

    def with_edge(self, x: int, y: int) -> "Digraph":
        """Return ``self`` plus the edge ``(x, y)``; adding an existing edge is a no-op."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise InvalidArgumentError(f"edge ({x}, {y}) outside 0..{self.n - 1}")
        out_adj = list(self.out_adj)
        in_adj = list(self.in_adj)
        out_adj[x] |= 1 << y
        in_adj[y] |= 1 << x
        return Digraph(self.n, tuple(out_adj), tuple(in_adj), self.labels)

    def in_degree(self, x: int) -> int:
        return self.in_adj[x].bit_count()

    def out_degree(self, x: int) -> int:
        return self.out_adj[x].bit_count()

    def regular_degree(self) -> int | None:
        """The common in/out degree if the digraph is regular, else None."""
        if self.n == 0:
            return 0
        h = self.in_degree(0)
        for x in range(self.n):
            if self.in_degree(x) != h or self.out_degree(x) != h:
                return None
        return h

    def max_in_degree(self) -> int:
        return max((row.bit_count() for row in self.in_adj), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def labels_of(self, mask: VertexSet) -> list[str]:
        return [self.label(v) for v in members(mask)]


def cayley_digraph(group: Group, gens: GeneratingSet) -> Digraph:
    """Cay(G, H): an edge from x to h*x for every h in H."""
    n = group.order
    out_adj = [0] * n
    in_adj = [0] * n
    for x in range(n):
        for h in gens.elements:
            y = group.mul[h][x]
            out_adj[x] |= 1 << y
            in_adj[y] |= 1 << x
    return Digraph(n, tuple(out_adj), tuple(in_adj), group.labels, cyclic=group.cyclic)


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_edges(n, [(x, y) for x in range(n) for y in range(n) if x != y])


def in_degree_within(d: Digraph, x: int, within: VertexSet) -> int:
    return (d.in_adj[x] & within).bit_count()


def peel_core(
    d: Digraph, within: VertexSet, k: int, order: Sequence[int] | None = None
) -> VertexSet:
    """Largest K inside ``within`` where every vertex has >= k+1 in-neighbours in K.

    Vertices with at most ``k`` in-neighbours in the current set are deleted
    until none remain. ``order`` fixes the scan order of the deletion sweep;
    the fixpoint does not depend on it.
    """
    if k < 0:
        raise InvalidArgumentError(f"k must be non-negative, got {k}")
    scan = range(d.n) if order is None else order
    core = within
    changed = True
    while changed:
        changed = False
        for v in scan:
            if core >> v & 1 and (d.in_adj[v] & core).bit_count() <= k:
                core &= ~(1 << v)
                changed = True
    return core


def is_acyclic(d: Digraph, within: VertexSet) -> bool:
    """True iff the subdigraph induced on ``within`` has no directed cycle.

    Sources (in-degree 0 inside the set) are removed repeatedly; a loop keeps
    its vertex at in-degree >= 1, so loops count as cycles.
    """
    remaining = within
    while remaining:
        sources = 0
        for v in members(remaining):
            if not d.in_adj[v] & remaining:
                sources |= 1 << v
        if not sources:
            return False
        remaining &= ~sources
    return True


def bfs_distances(d: Digraph, source: int) -> list[ExtNat]:
    """Directed distances from ``source`` along out-edges."""
    dist: list[ExtNat] = [INF] * d.n
    dist[source] = 0
    reached = 1 << source
    frontier = reached
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        for v in members(frontier):
            nxt |= d.out_adj[v]
        nxt &= ~reached
        for v in members(nxt):
            dist[v] = depth
        reached |= nxt
        frontier = nxt
    return dist


def eccentricity(d: Digraph, source: int) -> ExtNat:
    return max(bfs_distances(d, source), default=0)


def diameter(d: Digraph) -> ExtNat:
    """Classical directed diameter: max over ordered pairs of the distance."""
    return max((eccentricity(d, v) for v in range(d.n)), default=0)


def girth_bfs(d: Digraph) -> ExtNat:
    """Length of a shortest directed cycle (a loop has length 1), INF if none."""
    best: ExtNat = INF
    for v in range(d.n):
        target = 1 << v
        reached = target
        frontier = target
        depth = 0
        while frontier and (best is INF or depth + 1 < best):
            depth += 1
            nxt = 0
            for u in members(frontier):
                nxt |= d.out_adj[u]
            if nxt & target:
                best = depth
                break
            nxt &= ~reached
            reached |= nxt
            frontier = nxt
    return best


def _check_cyclic_exponents(p: int, exponents: Sequence[int]) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise InvalidArgumentError(f"{p} is not prime")
    if len(set(exponents)) != len(exponents):
        raise InvalidArgumentError(f"duplicate exponents in {list(exponents)}")
    for k in exponents:
        if not 2 <= k <= p - 1:
            raise InvalidArgumentError(f"exponent {k} outside 2..{p - 1}")


def _weighted_cycle_length(p: int, exponents: Sequence[int], weights: Sequence[int]) -> int:
    # w_i steps along a^{k_i}, then the fewest a-steps closing the walk.
    total = sum(w * k for w, k in zip(weights, exponents))
    return p * -(-total // p) - sum(w * (k - 1) for w, k in zip(weights, exponents))


def girth_formula_cyclic(p: int, exponents: Sequence[int]) -> int:
    """Girth of Cay(C_p, {a, a^k1, ..., a^kq}) from the weighted-sum minimum.

    Weights range over 0..p (not all zero) and the pure ``a`` cycle of
    length ``p`` is a candidate, so every closed walk is covered.
    """
    _check_cyclic_exponents(p, exponents)
    best = p
    for weights in itertools.product(range(p + 1), repeat=len(exponents)):
        if any(weights):
            best = min(best, _weighted_cycle_length(p, exponents, weights))
    return best


def girth_formula_literal(p: int, exponents: Sequence[int]) -> int | None:
    """The same minimum with every weight restricted to 1..p and no pure-a term.

    Kept only as a diagnostic against :func:`girth_formula_cyclic`; returns
    None when there are no exponents (the minimum is then over nothing).
    """
    _check_cyclic_exponents(p, exponents)
    if not exponents:
        return None
    return min(
        _weighted_cycle_length(p, exponents, weights)
        for weights in itertools.product(range(1, p + 1), repeat=len(exponents))
    )


def read_edge_list(path: str | Path) -> Digraph:
    """Read ``n m`` then ``m`` lines of ``x y`` (directed edges)."""
    lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InvalidArgumentError(f"{path}: first line must be 'n m'")
    n, m = map(int, lines[0])
    body = lines[1:]
    if len(body) != m:
        raise InvalidArgumentError(f"{path}: expected {m} edges, found {len(body)}")
    edges = []
    for parts in body:
        if len(parts) != 2:
            raise InvalidArgumentError(f"{path}: bad edge line {' '.join(parts)!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Digraph.from_edges(n, edges)


def write_edge_list(d: Digraph, path: str | Path) -> None:
    edges = d.edges()
    text = [f"{d.n} {len(edges)}"] + [f"{x} {y}" for x, y in edges]
    Path(path).write_text("\n".join(text) + "\n")
