"""Lattice paths weakly below the line x = 2y and their weight polynomials.

A path is a string over {E, N} read from the origin: E moves (1,0), N moves
(0,1).  After every step the current point (x, y) must satisfy x >= 2y, so a
north step from (x, y) is legal only when x >= 2(y + 1).  A north step taken
at odd x carries weight x (the formal variable); all other steps have weight
1.  lattice_poly(i, j) is the weighted count of all such paths ending at
(i, j), computed by dynamic programming; enumerate_paths lists the paths
explicitly and is kept independent of the DP so each can check the other.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import ParseError
from .poly import Poly

EAST = "E"
NORTH = "N"


def parse_path(text: str) -> str:
    """Validate a path string, naming the first offending step (0-based)."""
    x = y = 0
    for k, ch in enumerate(text):
        if ch == EAST:
            x += 1
        elif ch == NORTH:
            y += 1
        else:
            raise ParseError(f"invalid step {ch!r} at index {k}: expected 'E' or 'N'")
        if x < 2 * y:
            raise ParseError(f"step at index {k} moves above the line x = 2y")
    return text


def path_endpoint(path: str) -> tuple[int, int]:
    """Endpoint (i, j) of a path: i east steps, j north steps."""
    return path.count(EAST), path.count(NORTH)


def weight_exponent(path: str) -> int:
    """Number of north steps taken at odd x, i.e. the exponent of the path weight."""
    x = 0
    exponent = 0
    for ch in path:
        if ch == EAST:
            x += 1
        elif x % 2 == 1:
            exponent += 1
    return exponent


def enumerate_paths(i: int, j: int) -> list[str]:
    """All valid paths from the origin to (i, j), in lexicographic order (E < N).

    Returns the empty list when (i, j) lies strictly above the line or has a
    negative coordinate.
    """
    if i < 0 or j < 0 or i < 2 * j:
        return []
    found: list[str] = []
    steps: list[str] = []

    def walk(x: int, y: int) -> None:
        if x == i and y == j:
            found.append("".join(steps))
            return
        if x < i:
            steps.append(EAST)
            walk(x + 1, y)
            steps.pop()
        if y < j and x >= 2 * (y + 1):
            steps.append(NORTH)
            walk(x, y + 1)
            steps.pop()

    walk(0, 0)
    return found


@lru_cache(maxsize=None)
def lattice_poly(i: int, j: int) -> Poly:
    """Weighted count of paths from the origin to (i, j).

    Zero for positions strictly above the line (or negative), so callers may
    sum over a rectangle freely.  Recurrence over the last step: a path into
    (i, j) arrives by E from (i-1, j) or by N from (i, j-1), the latter
    weighted by x exactly when i is odd.
    """
    if i < 0 or j < 0 or i < 2 * j:
        return Poly.zero()
    if i == 0:
        return Poly.one()
    left = lattice_poly(i - 1, j)
    below = lattice_poly(i, j - 1)
    if i % 2 == 1:
        below = below.mul_x()
    return left + below


def _exact_div(numerator: int, divisor: int, what: str) -> int:
    q, r = divmod(numerator, divisor)
    if r:
        raise ArithmeticError(f"{what}: division by {divisor} is not exact")
    return q


def catalan3(n: int) -> int:
    """3-Catalan number: C(3n, n) / (2n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _exact_div(comb(3 * n, n), 2 * n + 1, f"catalan3({n})")


def catalan3_coeff(n: int, k: int) -> int:
    """Refinement of the 3-Catalan numbers: C(n-1+k, n-1) * C(2n-k, n+1) / n.

    Equals the coefficient of x^k in lattice_poly(2n, n) for 0 <= k <= n-1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1}, got {k}")
    return _exact_div(
        comb(n - 1 + k, n - 1) * comb(2 * n - k, n + 1), n, f"catalan3_coeff({n},{k})"
    )


def descent_poly(n: int) -> Poly:
    """Closed binomial formula for the on-line weight distribution.

    descent_poly(n) has coefficient C(n-2+k, n-2) * C(2n-2-k, n) / (n - 1)
    at x^k for 0 <= k <= n-2; it equals lattice_poly(2(n-1), n-1).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    coeffs = [
        _exact_div(
            comb(n - 2 + k, n - 2) * comb(2 * n - 2 - k, n), n - 1, f"descent_poly({n})"
        )
        for k in range(n - 1)
    ]
    return Poly(tuple(coeffs))


def lattice_table(max_i: int) -> list[tuple[int, int, Poly]]:
    """All (i, j, lattice_poly(i, j)) with 0 <= i <= max_i, 0 <= 2j <= i."""
    if max_i < 0:
        raise ValueError("max_i must be nonnegative")
    return [
        (i, j, lattice_poly(i, j))
        for i in range(max_i + 1)
        for j in range(i // 2 + 1)
    ]
