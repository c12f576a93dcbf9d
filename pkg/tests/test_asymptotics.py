import itertools
import math
import random

import numpy as np
import pytest
from jsonschema import validate

from cayleysync import load_schema
from cayleysync.asymptotics import (
    TrialConfig,
    adjacency_matrix,
    failure_bound,
    in_ball2,
    sample_cayley,
    sample_random_digraph,
    within_two_rounds,
    within_two_threshold_one,
)
from cayleysync.digraph import Digraph, diameter, eccentricity
from cayleysync.errors import InvalidArgumentError, ResourceLimitError

import oracles
from conftest import cyclic_cayley


def _brute_within_two(d, s, t):
    edges = set(d.edges())
    return all(
        oracles.sync_rounds(d.n, edges, S, t) <= 2 for S in itertools.combinations(range(d.n), s)
    )


def test_failure_bound_examples():
    assert failure_bound(50, 1.0, 2, 2) == 0.0
    assert failure_bound(10, 0.0, 2, 1) == pytest.approx(math.comb(10, 3))
    # Frozen from direct evaluation: C(200,2) * 0.8775**198 = 1.15287933246e-07
    assert failure_bound(200, 0.35, 1, 1) == pytest.approx(1.15287933246e-07, rel=1e-9)
    assert failure_bound(200, 0.35, 1, 1) < 1e-6
    assert failure_bound(100, 0.7, 2, 2) == pytest.approx(4.386166740e-07, rel=1e-8)


def test_failure_bound_reduces_and_overflows():
    for n in (10, 40, 300):
        direct = math.comb(n, 2) * (1 - 0.3**2) ** (n - 2)
        assert failure_bound(n, 0.3, 1, 1) == pytest.approx(direct, rel=1e-10)
    assert failure_bound(5000, 0.0, 2000, 1) == math.inf
    assert failure_bound(3, 0.5, 3, 1) == 0.0
    with pytest.raises(InvalidArgumentError):
        failure_bound(10, 1.5, 1, 1)


def test_threshold_one_ball_criterion_matches_brute_force():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(2, 8)
        edges = {(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.45}
        d = Digraph.from_edges(n, edges)
        for s in range(1, n):
            assert within_two_threshold_one(d, s) == _brute_within_two(d, s, 1)
        assert within_two_threshold_one(d, 1) == (diameter(d) <= 2)


def test_vertex_transitive_shortcut():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(2, 64)
        H = rng.sample(range(n), rng.randint(1, n))
        d = cyclic_cayley(n, H)
        edges = set(d.edges())
        by_identity = eccentricity(d, 0) <= 2
        assert by_identity == (oracles.diameter(n, edges) <= 2)
        assert within_two_threshold_one(d, 1, [0]) == by_identity
        assert within_two_threshold_one(d, 1) == by_identity
        assert in_ball2(d, 0).bit_count() == in_ball2(d, n - 1).bit_count()


def test_within_two_rounds_matches_brute_force():
    rng = random.Random(6)
    gen = np.random.default_rng(0)
    for _ in range(60):
        n = rng.randint(3, 8)
        edges = {(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.6}
        d = Digraph.from_edges(n, edges)
        s = rng.randint(1, n - 1)
        t = rng.randint(1, s)
        ok, sampled = within_two_rounds(adjacency_matrix(d), s, t, gen)
        assert sampled is None
        assert ok == _brute_within_two(d, s, t)


def test_within_two_rounds_sampling_is_reported():
    adj = np.ones((30, 30), dtype=np.float32)
    np.fill_diagonal(adj, 0)
    ok, sampled = within_two_rounds(adj, 3, 2, np.random.default_rng(1), max_subsets=100)
    assert ok and sampled == 100


def test_cayley_trivial_cases():
    full = sample_cayley(TrialConfig("cayley", n=7, h=7, s=1, trials=5, seed=1))
    assert full.fraction == 1.0
    cycle = sample_cayley(TrialConfig("cayley", n=7, h=1, s=1, trials=5, seed=1))
    assert cycle.fraction == 0.0


def test_random_trivial_cases():
    assert sample_random_digraph(TrialConfig("random", n=12, p=1.0, s=2, t=2, trials=3)).fraction == 1.0
    assert sample_random_digraph(TrialConfig("random", n=10, p=0.0, s=2, t=1, trials=3)).fraction == 0.0


def test_cayley_higher_threshold_uses_subset_check():
    rep = sample_cayley(TrialConfig("cayley", n=12, h=8, s=3, t=2, trials=4, seed=3))
    assert 0 <= rep.successes <= 4
    assert rep.bound == failure_bound(12, 8 / 12, 3, 2)


def test_reports_are_deterministic_and_valid():
    cfg = TrialConfig("random", n=40, p=0.5, s=2, t=1, trials=6, seed=9)
    a = sample_random_digraph(cfg)
    assert a == sample_random_digraph(cfg)
    assert a == sample_random_digraph(cfg, threads=2)
    validate(a.to_dict(), load_schema("trial_report"))
    assert a.consistent_with_bound()


def test_config_validation():
    with pytest.raises(InvalidArgumentError):
        TrialConfig("cayley", n=5, s=1)
    with pytest.raises(InvalidArgumentError):
        TrialConfig("random", n=5, s=1, t=2, p=0.5)
    with pytest.raises(InvalidArgumentError):
        TrialConfig("lattice", n=5, s=1)
    with pytest.raises(ResourceLimitError):
        TrialConfig("cayley", n=5000, h=10, s=1)


def test_custom_group_hook():
    from cayleysync.groups import load_cayley_table

    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    g = load_cayley_table([[idx[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms])
    rep = sample_cayley(TrialConfig("cayley", n=6, h=6, s=1, trials=3), group=g)
    assert rep.fraction == 1.0
    with pytest.raises(InvalidArgumentError):
        sample_cayley(TrialConfig("cayley", n=7, h=2, s=1), group=g)
