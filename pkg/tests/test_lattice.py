import pytest

from tricatalan.errors import ParseError
from tricatalan.lattice import (
    catalan3,
    catalan3_coeff,
    descent_poly,
    enumerate_paths,
    lattice_poly,
    lattice_table,
    parse_path,
    path_endpoint,
    weight_exponent,
)
from tricatalan.poly import Poly

# The full printed table of weighted path counts, row by row.
GOLDEN = [
    *[(i, 0, (1,)) for i in range(9)],
    (2, 1, (1,)),
    (3, 1, (1, 1)),
    (4, 1, (2, 1)),
    (5, 1, (2, 2)),
    (6, 1, (3, 2)),
    (7, 1, (3, 3)),
    (8, 1, (4, 3)),
    (4, 2, (2, 1)),
    (5, 2, (2, 3, 2)),
    (6, 2, (5, 5, 2)),
    (7, 2, (5, 8, 5)),
    (8, 2, (9, 11, 5)),
    (6, 3, (5, 5, 2)),
    (7, 3, (5, 10, 10, 5)),
    (8, 4, (14, 21, 15, 5)),
]


@pytest.mark.parametrize("i,j,coeffs", GOLDEN)
def test_golden_table(i, j, coeffs):
    assert lattice_poly(i, j) == Poly(coeffs)


def test_above_line_is_zero():
    assert lattice_poly(1, 1).is_zero()
    assert lattice_poly(5, 3).is_zero()
    assert lattice_poly(-1, 0).is_zero()
    assert lattice_poly(3, -1).is_zero()


def test_parse_path_accepts_valid():
    assert parse_path("") == ""
    assert parse_path("EEENEN") == "EEENEN"
    assert path_endpoint("EEENEN") == (4, 2)


def test_parse_path_reports_bad_character_index():
    with pytest.raises(ParseError, match="index 2"):
        parse_path("EEXEN")


def test_parse_path_reports_first_violation_index():
    with pytest.raises(ParseError, match="index 0"):
        parse_path("N")
    with pytest.raises(ParseError, match="index 1"):
        parse_path("ENE")
    with pytest.raises(ParseError, match="index 3"):
        parse_path("EENN")


def test_weight_exponent():
    assert weight_exponent("EENEEN") == 0
    assert weight_exponent("EEENEN") == 1
    assert weight_exponent("") == 0
    assert weight_exponent("EEEENEEENNEN") == 2


def test_enumerate_paths_base_cases():
    assert enumerate_paths(0, 0) == [""]
    assert enumerate_paths(2, 1) == ["EEN"]
    assert enumerate_paths(1, 1) == []


def test_enumerate_paths_lexicographic():
    paths = enumerate_paths(4, 1)
    assert paths == sorted(paths)
    assert paths == ["EEEEN", "EEENE", "EENEE"]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_paths_corner_counts(n):
    assert len(enumerate_paths(2 * n, n)) == catalan3(n)


def test_enumeration_matches_table():
    # Independent route: explicit paths, weights summed by exponent.
    for i in range(11):
        for j in range(i // 2 + 1):
            counts = {}
            for p in enumerate_paths(i, j):
                w = weight_exponent(p)
                counts[w] = counts.get(w, 0) + 1
            coeffs = [counts.get(k, 0) for k in range(max(counts, default=-1) + 1)]
            assert Poly(tuple(coeffs)) == lattice_poly(i, j), (i, j)


def test_catalan3_values():
    assert [catalan3(n) for n in range(8)] == [1, 1, 3, 12, 55, 273, 1428, 7752]
    with pytest.raises(ValueError):
        catalan3(-1)


def test_catalan3_coeff_values():
    assert catalan3_coeff(4, 0) == 14
    assert catalan3_coeff(3, 1) == 5
    assert catalan3_coeff(4, 3) == 5
    with pytest.raises(ValueError):
        catalan3_coeff(0, 0)
    with pytest.raises(ValueError):
        catalan3_coeff(3, 3)


def test_descent_poly_values():
    assert descent_poly(2) == Poly((1,))
    assert descent_poly(3) == Poly((2, 1))
    assert descent_poly(4) == Poly((5, 5, 2))
    with pytest.raises(ValueError):
        descent_poly(1)


@pytest.mark.parametrize("n", range(1, 13))
def test_corner_identities(n):
    corner = lattice_poly(2 * n, n)
    assert descent_poly(n + 1) == corner
    assert corner == lattice_poly(2 * n, n - 1)
    assert corner.eval_at_one() == catalan3(n)
    assert [corner.coefficient(k) for k in range(n)] == [
        catalan3_coeff(n, k) for k in range(n)
    ]


@pytest.mark.parametrize("n", range(1, 13))
def test_row_sum_identity(n):
    total = Poly.zero()
    for j in range(n):
        total = total + lattice_poly(2 * n - 1, j)
    assert total == lattice_poly(2 * n, n)


def test_lattice_table_shape():
    cells = lattice_table(4)
    assert [(i, j) for i, j, _ in cells] == [
        (0, 0), (1, 0), (2, 0), (2, 1), (3, 0), (3, 1),
        (4, 0), (4, 1), (4, 2),
    ]
    with pytest.raises(ValueError):
        lattice_table(-1)
