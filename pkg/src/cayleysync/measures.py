"""Exact synchrony measures p_st, v_st, d_st and the best-generating-set search.

For an s-subset S let d(S, t) be its number of rounds to synchrony (INF if
it stalls). Over all s-subsets:

* ``p`` is the fraction of seeds that synchronize,
* ``v`` is the mean of 1/d(S, t), with stalled seeds contributing 0,
* ``d`` is the maximum of d(S, t).

Cayley digraphs of C_n with gcd(n, s) = 1 are evaluated on one path
representative per rotation orbit, each weighted by n.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, cayley_digraph, iter_subsets
from .errors import InvalidArgumentError, ResourceLimitError
from .extended import INF, ExtNat, ext_to_json
from .groups import generating_set, make_cyclic
from .orbits import enumerate_path_reps
from .parallel import pmap
from .spread import sync_steps

DEFAULT_MAX_N = 20


@dataclass(frozen=True)
class MeasureEntry:
    p: Fraction
    v: Fraction
    d: ExtNat

    def to_json(self, s: int, t: int) -> dict:
        return {"s": s, "t": t, "p": _frac(self.p), "v": _frac(self.v), "d": ext_to_json(self.d)}


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _weighted_seeds(d: Digraph, s: int, orbits: bool | None) -> Iterator[tuple[int, int]]:
    """Yield (seed mask, multiplicity) pairs covering every s-subset once."""
    use_orbits = d.cyclic if orbits is None else orbits
    if use_orbits and 0 < s < d.n and math.gcd(d.n, s) == 1:
        for rep in enumerate_path_reps(d.n, s):
            yield rep.mask, d.n
    else:
        for mask in iter_subsets(d.n, s):
            yield mask, 1


def _check_s(d: Digraph, s: int) -> None:
    if not 1 <= s <= d.n - 1:
        raise InvalidArgumentError(f"s must lie in 1..{d.n - 1}, got {s}")


def measure_entry(d: Digraph, s: int, t: int, orbits: bool | None = None) -> MeasureEntry:
    """All three measures at (s, t) from one pass over the seeds."""
    _check_s(d, s)
    total = math.comb(d.n, s)
    hits = 0
    speed = Fraction(0)
    worst: ExtNat = 0
    for mask, weight in _weighted_seeds(d, s, orbits):
        steps = sync_steps(d, mask, t)
        if steps is INF:
            worst = INF
        else:
            hits += weight
            speed += Fraction(weight, steps)
            if worst is not INF and steps > worst:
                worst = steps
    return MeasureEntry(Fraction(hits, total), speed / total, worst)


def prob_sync(d: Digraph, s: int, t: int, orbits: bool | None = None) -> Fraction:
    return measure_entry(d, s, t, orbits).p


def velocity(d: Digraph, s: int, t: int, orbits: bool | None = None) -> Fraction:
    return measure_entry(d, s, t, orbits).v


def higher_diameter(d: Digraph, s: int, t: int, orbits: bool | None = None) -> ExtNat:
    """d_st, stopping at the first stalled seed."""
    _check_s(d, s)
    worst = 0
    for mask, _ in _weighted_seeds(d, s, orbits):
        steps = sync_steps(d, mask, t)
        if steps is INF:
            return INF
        worst = max(worst, steps)
    return worst


def diameter_from_girth(n: int, girth: ExtNat, s: int, h: int) -> ExtNat:
    """Closed form of d_sh for a Cayley digraph of order n, degree h and given girth.

    ``h`` only fixes the threshold t = h the formula applies to.
    """
    if not 1 <= s < n:
        raise InvalidArgumentError(f"s must lie in 1..{n - 1}, got {s}")
    if h < 1:
        raise InvalidArgumentError(f"h must be positive, got {h}")
    if girth is INF or s > n - girth:
        return n - s
    return INF


@dataclass
class MeasureTable:
    n: int
    h: int
    entries: dict[tuple[int, int], MeasureEntry] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> MeasureEntry:
        return self.entries[key]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "entries": [e.to_json(s, t) for (s, t), e in sorted(self.entries.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["s", "t", "p", "v", "d"])
        for (s, t), e in sorted(self.entries.items()):
            writer.writerow([s, t, _frac(e.p), _frac(e.v), ext_to_json(e.d)])
        return buf.getvalue()

    def to_markdown(self) -> str:
        ss = sorted({s for s, _ in self.entries})
        ts = sorted({t for _, t in self.entries})
        lines = []
        for name in ("d", "p", "v"):
            lines.append(f"**{name}**\n")
            lines.append("| s | " + " | ".join(f"t = {t}" for t in ts) + " |")
            lines.append("|---" * (len(ts) + 1) + "|")
            for s in ss:
                cells = []
                for t in ts:
                    e = self.entries.get((s, t))
                    if e is None:
                        cells.append("")
                    elif name == "d":
                        cells.append(str(e.d))
                    else:
                        cells.append(_frac(getattr(e, name)))
                lines.append(f"| {s} | " + " | ".join(cells) + " |")
            lines.append("")
        return "\n".join(lines)


def monotonicity_violations(table: MeasureTable) -> list[str]:
    """Entries breaking triangularity or the s/t monotonicity of the measures.

    p and v must be nondecreasing in s and nonincreasing in t; d the reverse,
    with INF on top. Cells with s < t must read (0, 0, INF).
    """
    bad = []
    for (s, t), e in table.entries.items():
        if s < t and (e.p != 0 or e.v != 0 or e.d is not INF):
            bad.append(f"({s},{t}) not triangular")
        up = table.entries.get((s + 1, t))
        if up is not None:
            if up.p < e.p or up.v < e.v or up.d > e.d:
                bad.append(f"({s},{t})->({s + 1},{t}) breaks s-monotonicity")
        right = table.entries.get((s, t + 1))
        if right is not None:
            if right.p > e.p or right.v > e.v or right.d < e.d:
                bad.append(f"({s},{t})->({s},{t + 1}) breaks t-monotonicity")
    return bad


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise ResourceLimitError(
            f"n={n} exceeds the exhaustive cap {max_n}; raise --max-n or use asymptotics sampling"
        )


def measure_table(
    d: Digraph,
    s_range: Iterable[int] | None = None,
    t_range: Iterable[int] | None = None,
    max_n: int = DEFAULT_MAX_N,
    orbits: bool | None = None,
) -> MeasureTable:
    _check_cap(d.n, max_n)
    h = d.max_in_degree()
    ss = list(range(1, d.n)) if s_range is None else list(s_range)
    ts = list(range(1, h + 1)) if t_range is None else list(t_range)
    table = MeasureTable(d.n, h)
    for s in ss:
        for t in ts:
            table.entries[(s, t)] = measure_entry(d, s, t, orbits)
    bad = monotonicity_violations(table)
    if bad:
        raise AssertionError("measure table breaks monotonicity: " + "; ".join(bad))
    return table


def exponent_labels(exponents: Sequence[int]) -> list[str]:
    return ["1" if e == 0 else "a" if e == 1 else f"a{e}" for e in exponents]


def automorphism_class(n: int, exponents: Sequence[int]) -> tuple[int, ...]:
    """Least image of an exponent set under multiplication by units mod n."""
    return min(
        tuple(sorted(u * e % n for e in exponents))
        for u in range(1, n)
        if math.gcd(u, n) == 1
    ) if n > 1 else tuple(exponents)


@dataclass(frozen=True)
class BestHReport:
    n: int
    h: int
    s: int
    t: int
    d: ExtNat
    argmin: tuple[tuple[int, ...], ...]

    @property
    def argmin_classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({automorphism_class(self.n, a) for a in self.argmin}))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "s": self.s,
            "t": self.t,
            "d": ext_to_json(self.d),
            "argmin": [exponent_labels(a) for a in self.argmin],
            "argmin_up_to_automorphism": [exponent_labels(a) for a in self.argmin_classes],
        }


def _diameters_for(args: tuple[int, tuple[int, ...]]) -> dict[tuple[int, int], ExtNat]:
    n, exponents = args
    group = make_cyclic(n)
    d = cayley_digraph(group, generating_set(group, exponents))
    h = len(exponents)
    return {(s, t): higher_diameter(d, s, t) for s in range(1, n) for t in range(1, h + 1)}


def _candidate_sets(n: int, h: int, include_identity: bool) -> list[tuple[int, ...]]:
    pool = range(0 if include_identity else 1, n)
    if len(pool) < h:
        raise InvalidArgumentError(f"no {h}-subsets available in C{n}")
    return list(itertools.combinations(pool, h))


def best_generating_sets_all(
    n: int,
    h: int,
    include_identity: bool = False,
    max_n: int = DEFAULT_MAX_N,
    threads: int = 1,
) -> dict[tuple[int, int], BestHReport]:
    """Minimal d_st over all h-subsets H of C_n, for every (s, t) at once."""
    _check_cap(n, max_n)
    if not 1 <= h <= (n if include_identity else n - 1):
        raise InvalidArgumentError(f"h={h} out of range for C{n}")
    candidates = _candidate_sets(n, h, include_identity)
    results = pmap(_diameters_for, [(n, H) for H in candidates], threads)
    reports = {}
    for s in range(1, n):
        for t in range(1, h + 1):
            values = [r[(s, t)] for r in results]
            best = min(values)
            argmin = tuple(H for H, v in zip(candidates, values) if v == best)
            reports[(s, t)] = BestHReport(n, h, s, t, best, argmin)
    return reports


def best_generating_sets(
    n: int, h: int, s: int, t: int, include_identity: bool = False, max_n: int = DEFAULT_MAX_N
) -> BestHReport:
    if not 1 <= s <= n - 1 or t < 1:
        raise InvalidArgumentError(f"need 1 <= s <= {n - 1} and t >= 1")
    if t > h:
        candidates = _candidate_sets(n, h, include_identity)
        return BestHReport(n, h, s, t, INF, tuple(candidates))
    return best_generating_sets_all(n, h, include_identity, max_n)[(s, t)]


def table1(
    n: int,
    hs: Iterable[int] | None = None,
    include_identity: bool = False,
    max_n: int = DEFAULT_MAX_N,
    threads: int = 1,
) -> list[BestHReport]:
    """Reports for every (h, t, s), ordered by h, then t, then s."""
    hs = list(range(1, n)) if hs is None else list(hs)
    out = []
    for h in hs:
        reports = best_generating_sets_all(n, h, include_identity, max_n, threads)
        out.extend(reports[(s, t)] for t in range(1, h + 1) for s in range(1, n))
    return out


def table1_markdown(reports: Sequence[BestHReport]) -> str:
    """One block per h with rows s and columns t; cells with s < t stay blank."""
    lines = []
    for h in sorted({r.h for r in reports}):
        block = {(r.s, r.t): r for r in reports if r.h == h}
        ss = sorted({s for s, _ in block})
        ts = sorted({t for _, t in block})
        lines.append(f"|H| = {h}\n")
        lines.append("| s | " + " | ".join(f"t = {t}" for t in ts) + " |")
        lines.append("|---" * (len(ts) + 1) + "|")
        for s in ss:
            cells = ["" if s < t else str(block[(s, t)].d) for t in ts]
            lines.append(f"| {s} | " + " | ".join(cells) + " |")
        lines.append("")
    return "\n".join(lines)


def table1_csv(reports: Sequence[BestHReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["h", "t", "s", "d", "argmin", "argmin_up_to_automorphism"])
    for r in reports:
        writer.writerow([
            r.h, r.t, r.s, ext_to_json(r.d),
            " ".join("{" + ",".join(exponent_labels(a)) + "}" for a in r.argmin),
            " ".join("{" + ",".join(exponent_labels(a)) + "}" for a in r.argmin_classes),
        ])
    return buf.getvalue()


def edge_monotonicity_check(d: Digraph, edge: tuple[int, int], s: int, t: int) -> bool:
    """Adding ``edge`` must not lower p or v, nor raise d."""
    before = measure_entry(d, s, t, orbits=False)
    after = measure_entry(d.with_edge(*edge), s, t, orbits=False)
    return after.p >= before.p and after.v >= before.v and after.d <= before.d
