"""Slow, independent reference implementations used only by the tests.

Nothing here touches the bitmask code paths: digraphs are edge sets, vertex
sets are Python sets, and graph-theoretic answers come from networkx.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx

INF = math.inf


def cyclic_edges(n, exponents):
    return {(x, (x + h) % n) for x in range(n) for h in exponents}


def sync_rounds(n, edges, seed, t):
    preds = {v: {x for x, y in edges if y == v} for v in range(n)}
    active = set(seed)
    rounds = 0
    while len(active) < n:
        new = {v for v in range(n) if v not in active and len(preds[v] & active) >= t}
        if not new:
            return INF
        active |= new
        rounds += 1
    return rounds


def measures(n, edges, s, t):
    """(p, v, d) over all s-subsets, d as float (inf allowed)."""
    ds = [sync_rounds(n, edges, S, t) for S in itertools.combinations(range(n), s)]
    total = len(ds)
    p = Fraction(sum(d != INF for d in ds), total)
    v = sum((Fraction(1, int(d)) for d in ds if d != INF), Fraction(0)) / total
    return p, v, max(ds)


def rotation_orbits(n, k):
    """Orbits of k-subsets of Z_n under translation, each as a frozenset of subsets."""
    seen = set()
    orbits = []
    for S in itertools.combinations(range(n), k):
        key = frozenset(S)
        if key in seen:
            continue
        orbit = {frozenset((x + g) % n for x in S) for g in range(n)}
        seen |= orbit
        orbits.append(orbit)
    return orbits


def girth(n, edges):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    if any(x == y for x, y in edges):
        return 1
    lengths = [len(c) for c in nx.simple_cycles(g)]
    return min(lengths) if lengths else INF


def diameter(n, edges):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    dist = dict(nx.all_pairs_shortest_path_length(g))
    worst = 0
    for x in range(n):
        for y in range(n):
            worst = max(worst, dist[x].get(y, INF))
    return worst


def has_core(n, edges, inactive, k):
    """Brute force: some nonempty K within ``inactive`` has internal in-degree >= k+1 everywhere."""
    inactive = sorted(inactive)
    for r in range(1, len(inactive) + 1):
        for K in itertools.combinations(inactive, r):
            Ks = set(K)
            if all(sum((x, v) in edges for x in Ks) >= k + 1 for v in Ks):
                return True
    return False
