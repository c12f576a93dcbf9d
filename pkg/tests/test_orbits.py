import math

import pytest
from hypothesis import given, strategies as st

from cayleysync.groups import make_cyclic, orbit_count
from cayleysync.orbits import (
    PathRep,
    canonical_path,
    enumerate_path_reps,
    format_bits,
    is_path,
    least_rotation,
    orbit_size,
    parse_bits,
    rotate,
)

import oracles


def test_is_path_examples():
    assert is_path((1, 1, 0, 0, 1, 0, 0))
    assert not is_path((0, 1, 0, 0, 1, 1, 0))
    assert is_path((1,) * 5)
    assert is_path(())


def test_canonical_path_examples():
    assert canonical_path((0, 1, 0, 0, 1, 1, 0)) == (1, 1, 0, 0, 1, 0, 0)
    assert canonical_path((0, 0, 0, 1)) == (1, 0, 0, 0)
    assert canonical_path((0, 0, 0)) == (0, 0, 0)
    assert canonical_path((1, 1)) == (1, 1)
    for bits in [(1, 1, 0, 0, 1, 0, 0), (1, 0, 1, 0, 1, 0, 0)]:
        assert canonical_path(bits) == bits


def test_enumerate_examples():
    assert [str(r) for r in enumerate_path_reps(7, 3)] == [
        "1110000", "1101000", "1100100", "1011000", "1010100",
    ]
    assert [str(r) for r in enumerate_path_reps(7, 1)] == ["1000000"]
    assert [str(r) for r in enumerate_path_reps(5, 2)] == ["11000", "10100"]
    assert [str(r) for r in enumerate_path_reps(7, 0)] == ["0000000"]


def test_pathrep_subset_mapping():
    rep = PathRep(parse_bits("1011000"))
    assert rep.subset == (0, 2, 3)
    assert rep.mask == 0b1101
    assert format_bits(rep.bits) == "1011000"


def test_five_two_matches_brute_force_orbits():
    orbits = oracles.rotation_orbits(5, 2)
    hit = [
        next(i for i, orbit in enumerate(orbits) if frozenset(r.subset) in orbit)
        for r in enumerate_path_reps(5, 2)
    ]
    assert sorted(hit) == list(range(len(orbits)))


@st.composite
def binary_seqs(draw):
    n = draw(st.integers(min_value=1, max_value=14))
    return tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))


@given(binary_seqs())
def test_canonical_path_is_rotation_and_path(bits):
    c = canonical_path(bits)
    assert c in {rotate(bits, i) for i in range(len(bits))}
    k = sum(bits)
    if 0 < k < len(bits):
        assert is_path(c)
        if math.gcd(len(bits), k) == 1:
            # constant on orbits
            assert all(canonical_path(rotate(bits, i)) == c for i in range(len(bits)))


@pytest.mark.parametrize("n", range(1, 13))
def test_path_counts(n):
    g = make_cyclic(n)
    for k in range(n + 1):
        paths = enumerate_path_reps(n, k)
        deduped = enumerate_path_reps(n, k, dedup=True)
        assert all(is_path(p.bits) and sum(p.bits) == k for p in paths)
        assert len(deduped) == orbit_count(g, k) <= len(paths)
        assert len({least_rotation(p.bits) for p in deduped}) == len(deduped)
        if math.gcd(n, k) == 1:
            assert len(paths) == orbit_count(g, k)
            if 0 < k < n:
                assert len(paths) * n == math.comb(n, k)


def test_composite_overcount():
    # 101100 and 110010 are rotations of one another and both are paths.
    paths = {str(p) for p in enumerate_path_reps(6, 3)}
    assert {"101100", "110010"} <= paths
    assert len(paths) > orbit_count(make_cyclic(6), 3)


def test_orbit_size():
    assert orbit_size((1, 0, 1, 0)) == 2
    assert orbit_size((1, 1, 0, 0)) == 4
