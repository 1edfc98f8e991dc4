from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricatalan.errors import DomainError, ParseError
from tricatalan.lattice import enumerate_paths, weight_exponent
from tricatalan.matching import (
    FORBIDDEN_PATTERN,
    PartialMatching,
    canonical_sequence,
    completed_sequence,
    contains_forbidden,
    contains_pattern,
    crossing_poly,
    crossings,
    enumerate_matchings,
    is_admissible,
    lift,
    matching_from_json,
    matching_to_json,
    matching_to_path,
    path_to_matching,
    sequence_text,
    shift,
)
from tricatalan.lattice import lattice_poly
from tricatalan.poly import Poly


def test_construction_validates():
    PartialMatching(0)
    PartialMatching(5, ((1, 4), (3, 5)))
    with pytest.raises(ParseError):
        PartialMatching(3, ((1, 4),))
    with pytest.raises(ParseError):
        PartialMatching(4, ((2, 2),))
    with pytest.raises(ParseError):
        PartialMatching(4, ((1, 3), (3, 4)))
    with pytest.raises(ParseError):
        PartialMatching(-1)


def test_edges_stored_sorted():
    m = PartialMatching(6, ((3, 5), (1, 2)))
    assert m.edges == ((1, 2), (3, 5))
    assert m.isolated() == (4, 6)


def test_canonical_sequence_examples():
    assert canonical_sequence(PartialMatching(8, ((1, 7), (2, 4), (3, 8), (5, 6)))) == (
        1, 2, 3, 2, 4, 4, 1, 3,
    )
    assert canonical_sequence(PartialMatching(5, ((1, 4), (3, 5)))) == (1, 2, 3, 1, 3)
    assert canonical_sequence(PartialMatching(1)) == (1,)
    assert sequence_text((1, 2, 3, 1, 3)) == "1,2,3,1,3"


def test_completed_sequence_appends_virtual_closes():
    # Isolated points dangle past the right end and do not cross each other.
    assert completed_sequence(PartialMatching(5, ((1, 4), (3, 5)))) == (
        1, 2, 3, 1, 3, 2,
    )
    assert completed_sequence(PartialMatching(3)) == (1, 2, 3, 3, 2, 1)
    assert completed_sequence(PartialMatching(4, ((1, 2), (3, 4)))) == (1, 1, 2, 2)


def test_contains_pattern_examples():
    assert contains_pattern((1, 2, 3, 2, 4, 4, 1, 3), FORBIDDEN_PATTERN)
    assert not contains_pattern((1, 2, 3, 1, 3), FORBIDDEN_PATTERN)
    assert contains_pattern((5, 7), (1,))
    assert not contains_pattern((), (1,))
    assert contains_pattern((4, 4), (2, 2))
    assert not contains_pattern((4, 5), (2, 2))


def _naive_contains(seq, pattern):
    for positions in combinations(range(len(seq)), len(pattern)):
        values = [seq[p] for p in positions]
        if all(
            (values[a] < values[b]) == (pattern[a] < pattern[b])
            and (values[a] == values[b]) == (pattern[a] == pattern[b])
            for a in range(len(pattern))
            for b in range(a + 1, len(pattern))
        ):
            return True
    return False


@given(
    st.lists(st.integers(min_value=1, max_value=6), max_size=12),
    st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=5),
)
def test_pattern_engine_agrees_with_naive_matcher(seq, pattern):
    assert contains_pattern(seq, pattern) == _naive_contains(tuple(seq), tuple(pattern))


def test_crossings_micro_values():
    assert crossings(PartialMatching(5, ((1, 4), (2, 5)))) == 3
    assert crossings(PartialMatching(5, ((1, 4), (3, 5)))) == 2
    assert crossings(PartialMatching(5, ((1, 5), (3, 4)))) == 1
    assert crossings(PartialMatching(4, ((1, 3), (2, 4)))) == 1
    assert crossings(PartialMatching(0)) == 0


def test_admissibility_examples():
    assert is_admissible(PartialMatching(4, ((1, 3),)))
    assert not is_admissible(PartialMatching(4, ((1, 4),)))
    assert not is_admissible(PartialMatching(4, ((2, 4),)))


def test_contains_forbidden_uses_dangling_reading():
    # Passes the bare-sequence check but is forbidden once isolated points
    # are read as dangling edges.
    extra = PartialMatching(6, ((1, 4), (3, 5)))
    assert not contains_pattern(canonical_sequence(extra), FORBIDDEN_PATTERN)
    assert contains_forbidden(extra)
    assert contains_forbidden(PartialMatching(6, ((1, 5), (3, 4))))
    assert not contains_forbidden(PartialMatching(6, ((1, 3), (4, 5))))
    assert not contains_forbidden(PartialMatching(6, ((2, 4), (3, 5))))
    assert not contains_forbidden(PartialMatching(3))


def test_enumerate_matchings_small():
    assert enumerate_matchings(2, 1) == [PartialMatching(2, ((1, 2),))]
    assert enumerate_matchings(1, 0) == [PartialMatching(1)]
    assert [m.edges for m in enumerate_matchings(4, 1)] == [
        ((1, 2),),
        ((1, 3),),
        ((2, 3),),
    ]
    assert len(enumerate_matchings(4, 2)) == 3
    with pytest.raises(ValueError):
        enumerate_matchings(3, 2)


def test_crossing_poly_examples():
    assert crossing_poly(4, 1) == Poly((2, 1))
    assert crossing_poly(6, 3) == Poly((5, 5, 2))
    assert crossing_poly(4, 2) == Poly((2, 1))
    assert crossing_poly(7, 0) == Poly((1,))


def test_shift_examples():
    assert shift(PartialMatching(0)) == PartialMatching(1)
    assert shift(PartialMatching(2, ((1, 2),))) == PartialMatching(3, ((1, 2),))


def test_lift_examples():
    assert lift(PartialMatching(2)).edges == ((1, 2),)
    lifted = lift(PartialMatching(4))
    assert lifted.edges == ((2, 3),) and crossings(lifted) == 0
    odd = lift(PartialMatching(3))
    assert odd.edges == ((1, 3),) and crossings(odd) == 1


def test_lift_unavailable():
    with pytest.raises(DomainError, match="lift unavailable"):
        lift(PartialMatching(1))
    with pytest.raises(DomainError, match="lift unavailable"):
        lift(PartialMatching(0))
    with pytest.raises(DomainError, match="lift unavailable"):
        lift(PartialMatching(3, ((1, 2),)))


def test_path_to_matching_examples():
    assert path_to_matching("") == PartialMatching(0)
    assert path_to_matching("EEN") == PartialMatching(2, ((1, 2),))
    folded = path_to_matching("EEENEN")
    assert folded == PartialMatching(4, ((1, 3), (2, 4)))
    assert crossings(folded) == 1


def test_matching_to_path_examples():
    assert matching_to_path(PartialMatching(0)) == ""
    assert matching_to_path(PartialMatching(2, ((1, 2),))) == "EEN"
    assert matching_to_path(PartialMatching(4, ((1, 3), (2, 4)))) == "EEENEN"


def test_matching_to_path_rejections_name_the_condition():
    with pytest.raises(DomainError, match=r"covers 2 isolated points"):
        matching_to_path(PartialMatching(4, ((1, 4),)))
    with pytest.raises(DomainError, match=r"isolated points before"):
        matching_to_path(PartialMatching(4, ((2, 4),)))
    with pytest.raises(DomainError, match="pattern"):
        matching_to_path(PartialMatching(5, ((1, 4), (2, 5))))
    with pytest.raises(DomainError, match="pattern"):
        matching_to_path(PartialMatching(6, ((1, 4), (3, 5))))


def test_bijection_sweep():
    for i in range(9):
        for j in range(i // 2 + 1):
            paths = enumerate_paths(i, j)
            images = [path_to_matching(p) for p in paths]
            assert len(set(images)) == len(images)
            assert set(images) == set(enumerate_matchings(i, j))
            for p, m in zip(paths, images):
                assert crossings(m) == weight_exponent(p)
                assert is_admissible(m) and not contains_forbidden(m)
                assert matching_to_path(m) == p
            assert crossing_poly(i, j) == lattice_poly(i, j)


matchings_strategy = st.builds(
    lambda m, pairs: _build_matching(m, pairs),
    st.integers(min_value=0, max_value=10),
    st.lists(st.integers(min_value=0, max_value=10 ** 6), max_size=5),
)


def _build_matching(m, seeds):
    points = list(range(1, m + 1))
    edges = []
    for seed in seeds:
        if len(points) < 2:
            break
        a = points.pop(seed % len(points))
        b = points.pop(seed % len(points) if points else 0)
        edges.append((min(a, b), max(a, b)))
    return PartialMatching(m, tuple(edges))


@given(matchings_strategy)
def test_shift_preserves_crossings(m):
    assert crossings(shift(m)) == crossings(m)
    assert shift(m).m == m.m + 1
    assert shift(m).edges == m.edges


@given(matchings_strategy)
def test_json_roundtrip(m):
    assert matching_from_json(matching_to_json(m)) == m


def test_json_shape_errors():
    with pytest.raises(ParseError):
        matching_from_json({"m": 2})
    with pytest.raises(ParseError):
        matching_from_json({"m": "2", "edges": []})
    with pytest.raises(ParseError):
        matching_from_json({"m": 2, "edges": [[1, 2, 3]]})
    with pytest.raises(ParseError):
        matching_from_json([1, 2])
