"""Monte Carlo checks that random Cayley digraphs and random digraphs have d_st <= 2.

Every trial draws from its own child stream of ``numpy.random.SeedSequence(seed)``
(child ``i`` for trial ``i``), so a report depends only on the config and
trials may run in any order or in parallel.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterator, Optional, Union

import numpy as np

from .digraph import Digraph, cayley_digraph, members
from .errors import InvalidArgumentError, ResourceLimitError
from .groups import Group, generating_set, make_cyclic
from .parallel import pmap

MODELS = ("cayley", "random")
DEFAULT_MAX_N = 2000
DEFAULT_MAX_SUBSETS = 200_000
_BATCH = 4096


@dataclass(frozen=True)
class TrialConfig:
    model: str
    n: int
    s: int
    t: int = 1
    trials: int = 1
    seed: int = 0
    h: Optional[int] = None
    p: Optional[float] = None
    max_subsets: int = DEFAULT_MAX_SUBSETS
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise InvalidArgumentError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.n < 1 or self.trials < 1 or self.s < 1 or self.t < 1:
            raise InvalidArgumentError("n, s, t and trials must all be positive")
        if self.model == "cayley":
            if self.h is None or not 1 <= self.h <= self.n:
                raise InvalidArgumentError(f"cayley model needs 1 <= h <= n, got h={self.h}")
        else:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise InvalidArgumentError(f"random model needs 0 <= p <= 1, got p={self.p}")
            if self.s < self.t:
                raise InvalidArgumentError("random model is only sampled for s >= t")
        if self.n > self.max_n:
            raise ResourceLimitError(f"n={self.n} exceeds the sampling cap {self.max_n} (--max-n)")

    @property
    def edge_probability(self) -> float:
        return self.h / self.n if self.model == "cayley" else float(self.p)


@dataclass(frozen=True)
class TrialReport:
    model: str
    n: int
    h_or_p: Union[int, float]
    s: int
    t: int
    trials: int
    successes: int
    fraction: float
    bound: float
    seed: int
    subsets_sampled: Optional[int] = None

    @property
    def standard_error(self) -> float:
        f = self.fraction
        return math.sqrt(f * (1.0 - f) / self.trials)

    def consistent_with_bound(self) -> bool:
        """Empirical failure rate within bound + 3 standard errors."""
        return 1.0 - self.fraction <= self.bound + 3.0 * self.standard_error

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def failure_bound(n: int, p: float, s: int, t: int) -> float:
    """C(n, s+1) (1 - p^{2t})^{n-s-1}, evaluated in log space.

    With s = t = 1 this is C(n, 2)(1 - p^2)^{n-2}. Returns ``math.inf`` if
    the (vacuous) bound overflows a float.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"p must lie in [0, 1], got {p}")
    if s + 1 > n:
        return 0.0
    log_comb = math.lgamma(n + 1) - math.lgamma(s + 2) - math.lgamma(n - s)
    reps = n - s - 1
    q = p ** (2 * t)
    if reps == 0:
        log_tail = 0.0
    elif q >= 1.0:
        return 0.0
    else:
        log_tail = reps * math.log1p(-q)
    total = log_comb + log_tail
    if total > 709.0:
        return math.inf
    return math.exp(total)


def trial_streams(seed: int, trials: int) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(trials)


def in_ball2(d: Digraph, v: int) -> int:
    """Vertices that reach ``v`` in at most two steps, as a bitmask."""
    ball = (1 << v) | d.in_adj[v]
    for u in members(d.in_adj[v]):
        ball |= d.in_adj[u]
    return ball


def within_two_threshold_one(d: Digraph, s: int, vertices=None) -> bool:
    """d_s1 <= 2 iff no vertex has n - |ball| >= s vertices farther than 2 from it.

    A seed set stalls vertex ``v`` beyond two rounds exactly when it avoids
    the radius-two in-ball of ``v``. ``vertices`` restricts the check (one
    vertex suffices on a vertex-transitive digraph).
    """
    check = range(d.n) if vertices is None else vertices
    return all(d.n - in_ball2(d, v).bit_count() < s for v in check)


def adjacency_matrix(d: Digraph) -> np.ndarray:
    a = np.zeros((d.n, d.n), dtype=np.float32)
    for x in range(d.n):
        for y in members(d.out_adj[x]):
            a[x, y] = 1.0
    return a


def _subset_batches(n: int, s: int) -> Iterator[np.ndarray]:
    combos = itertools.combinations(range(n), s)
    while True:
        chunk = list(itertools.islice(combos, _BATCH))
        if not chunk:
            return
        idx = np.array(chunk, dtype=np.intp)
        m = np.zeros((len(chunk), n), dtype=np.float32)
        np.put_along_axis(m, idx, 1.0, axis=1)
        yield m


def _sampled_batches(n: int, s: int, count: int, rng: np.random.Generator) -> Iterator[np.ndarray]:
    done = 0
    while done < count:
        b = min(_BATCH, count - done)
        idx = np.argsort(rng.random((b, n)), axis=1)[:, :s]
        m = np.zeros((b, n), dtype=np.float32)
        np.put_along_axis(m, idx, 1.0, axis=1)
        done += b
        yield m


def within_two_rounds(
    adj: np.ndarray,
    s: int,
    t: int,
    rng: np.random.Generator,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> tuple[bool, Optional[int]]:
    """Whether two rounds at threshold t activate everything from every s-seed.

    Exhaustive when C(n, s) <= ``max_subsets``; otherwise ``max_subsets``
    uniform seeds are drawn and their count is returned alongside the verdict.
    """
    n = adj.shape[0]
    if s >= n:
        return True, None
    if math.comb(n, s) <= max_subsets:
        batches, sampled = _subset_batches(n, s), None
    else:
        batches, sampled = _sampled_batches(n, s, max_subsets, rng), max_subsets
    for m in batches:
        active = m > 0
        for _ in range(2):
            active |= (active.astype(np.float32) @ adj) >= t
        if not active.all():
            return False, sampled
    return True, sampled


def _cayley_trial(args) -> tuple[bool, Optional[int]]:
    cfg, group, stream = args
    rng = np.random.default_rng(stream)
    elems = sorted(int(x) for x in rng.choice(group.order, size=cfg.h, replace=False))
    d = cayley_digraph(group, generating_set(group, elems))
    if cfg.t == 1:
        # Translations act transitively, so the identity's ball decides.
        return within_two_threshold_one(d, cfg.s, [group.identity]), None
    return within_two_rounds(adjacency_matrix(d), cfg.s, cfg.t, rng, cfg.max_subsets)


def _random_trial(args) -> tuple[bool, Optional[int]]:
    cfg, stream = args
    rng = np.random.default_rng(stream)
    adj = (rng.random((cfg.n, cfg.n)) < cfg.p).astype(np.float32)
    np.fill_diagonal(adj, 0.0)
    return within_two_rounds(adj, cfg.s, cfg.t, rng, cfg.max_subsets)


def _report(cfg: TrialConfig, outcomes, bound: float) -> TrialReport:
    successes = sum(ok for ok, _ in outcomes)
    sampled = max((k for _, k in outcomes if k is not None), default=None)
    return TrialReport(
        model=cfg.model,
        n=cfg.n,
        h_or_p=cfg.h if cfg.model == "cayley" else float(cfg.p),
        s=cfg.s,
        t=cfg.t,
        trials=cfg.trials,
        successes=successes,
        fraction=successes / cfg.trials,
        bound=bound,
        seed=cfg.seed,
        subsets_sampled=sampled,
    )


def sample_cayley(cfg: TrialConfig, group: Group | None = None, threads: int = 1) -> TrialReport:
    """Fraction of random Cay(G, H), |H| = h, with d_st <= 2 (G defaults to C_n)."""
    if cfg.model != "cayley":
        raise InvalidArgumentError("sample_cayley needs model='cayley'")
    if group is None:
        group = make_cyclic(cfg.n)
    elif group.order != cfg.n:
        raise InvalidArgumentError(f"group order {group.order} != n={cfg.n}")
    streams = trial_streams(cfg.seed, cfg.trials)
    outcomes = pmap(_cayley_trial, [(cfg, group, st) for st in streams], threads)
    p = cfg.edge_probability
    # At t = 1 the diameter bound covers every s, since d_s1 <= d_11.
    bound = failure_bound(cfg.n, p, 1, 1) if cfg.t == 1 else failure_bound(cfg.n, p, cfg.s, cfg.t)
    return _report(cfg, outcomes, bound)


def sample_random_digraph(cfg: TrialConfig, threads: int = 1) -> TrialReport:
    """Fraction of loopless G(n, p) digraphs with d_st <= 2."""
    if cfg.model != "random":
        raise InvalidArgumentError("sample_random_digraph needs model='random'")
    streams = trial_streams(cfg.seed, cfg.trials)
    outcomes = pmap(_random_trial, [(cfg, st) for st in streams], threads)
    return _report(cfg, outcomes, failure_bound(cfg.n, cfg.p, cfg.s, cfg.t))
