"""Partial matchings on a line, their crossing statistic, and the path bijection.

A partial matching places points 1..m on a line and joins some of them by
disjoint edges; uncovered points are isolated.  Crossings are counted in the
generalized sense: two interleaved edges (a < c < b < d) cross, and an
isolated point strictly inside an edge crosses it.  An isolated point
behaves throughout like a dangling edge reaching past the right end of the
matching: it crosses every edge covering it but never crosses another
isolated point.

The admissible class consists of matchings in which every edge covers at
most one isolated point and no edge has more isolated points before its left
endpoint than after its right endpoint.  Within that class, the matchings
avoiding the pattern 1,2,3,1,2 are exactly the objects generated from
lattice paths by the shift/lift operations below, with the crossing number
tracking the path's weight exponent.  Pattern avoidance for a matching is
checked on its completed sequential form (canonical form plus a virtual
right endpoint per isolated point, see completed_sequence): the dangling
reading above, not the bare canonical form, is what makes the generated
class match the path counts.

enumerate_matchings is a deliberately naive brute force (choose the covered
points, try every pairing, filter) so that it can serve as an independent
oracle for the bijection; it shares no code with shift/lift.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import NOT_IN_IMAGE, DomainError, ParseError
from .lattice import EAST, NORTH, parse_path
from .poly import Poly

FORBIDDEN_PATTERN = (1, 2, 3, 1, 2)


@dataclass(frozen=True)
class PartialMatching:
    """Points 1..m with disjoint edges (a, b), a < b; edges kept sorted by a."""

    m: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ParseError("point count must be nonnegative")
        edges = tuple(sorted(tuple(e) for e in self.edges))
        seen: set[int] = set()
        for e in edges:
            if len(e) != 2 or not all(isinstance(p, int) for p in e):
                raise ParseError(f"edge {e!r} is not a pair of integers")
            a, b = e
            if not (1 <= a < b <= self.m):
                raise ParseError(f"edge ({a},{b}) is not inside 1..{self.m}")
            if a in seen or b in seen:
                raise ParseError(f"edge ({a},{b}) reuses an endpoint")
            seen.update(e)
        object.__setattr__(self, "edges", edges)

    def covered(self) -> set[int]:
        return {p for e in self.edges for p in e}

    def isolated(self) -> tuple[int, ...]:
        covered = self.covered()
        return tuple(p for p in range(1, self.m + 1) if p not in covered)


def canonical_sequence(matching: PartialMatching) -> tuple[int, ...]:
    """Label sequence of the matching, labels assigned in order of first occurrence.

    Scanning points left to right, an isolated point or a left endpoint opens
    the next unused label; a right endpoint repeats its edge's label.
    """
    return _sequence(matching.m, matching.edges)


def sequence_text(seq: Sequence[int]) -> str:
    """Comma-separated rendering, e.g. "1,2,3,1,3" (labels can exceed 9)."""
    return ",".join(str(v) for v in seq)


def completed_sequence(matching: PartialMatching) -> tuple[int, ...]:
    """Canonical sequence plus virtual right endpoints for isolated points.

    Each isolated point is read as an edge dangling past the right end of
    the matching, so its label recurs after every real point.  The virtual
    endpoints are appended in descending label order (danglings do not cross
    each other, mirroring the crossing statistic, which counts no crossing
    between two isolated points).
    """
    return _completed(matching.m, matching.edges)


def contains_forbidden(matching: PartialMatching) -> bool:
    """True iff the matching contains the forbidden pattern 1,2,3,1,2.

    Containment is order-isomorphic subsequence containment on the completed
    sequential form, so an isolated point can close a pattern edge the way a
    crossing edge would.
    """
    return contains_pattern(_completed(matching.m, matching.edges), FORBIDDEN_PATTERN)


def contains_pattern(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of seq is order-isomorphic to pattern.

    Order isomorphism honors equalities: positions i, t of the subsequence
    must compare (<, =, >) exactly as pattern[i] and pattern[t] do.
    """
    seq = tuple(seq)
    pattern = tuple(pattern)
    n, k = len(seq), len(pattern)
    if k == 0:
        return True
    if k > n:
        return False
    chosen: list[int] = []

    def compatible(value: int, depth: int) -> bool:
        for t, prev in enumerate(chosen):
            if (prev < value) != (pattern[t] < pattern[depth]):
                return False
            if (prev == value) != (pattern[t] == pattern[depth]):
                return False
        return True

    def extend(start: int, depth: int) -> bool:
        if depth == k:
            return True
        for pos in range(start, n - (k - depth) + 1):
            if compatible(seq[pos], depth):
                chosen.append(seq[pos])
                if extend(pos + 1, depth + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def crossings(matching: PartialMatching) -> int:
    """Edge pairs a < c < b < d, plus (edge, isolated point inside it) pairs."""
    return _crossings(matching.edges, matching.isolated())


def _crossings(edges: Sequence[tuple[int, int]], isolated: Sequence[int]) -> int:
    count = 0
    for (a, b), (c, d) in combinations(edges, 2):
        if a < c < b < d or c < a < d < b:
            count += 1
    iso = sorted(isolated)
    for a, b in edges:
        count += bisect_left(iso, b) - bisect_right(iso, a)
    return count


def admissibility_violation(matching: PartialMatching) -> str | None:
    """Name the first violated class condition, or None if admissible."""
    return _violation(matching.edges, matching.isolated())


def _violation(edges: Sequence[tuple[int, int]], isolated: Sequence[int]) -> str | None:
    iso = sorted(isolated)
    for a, b in edges:
        inside = bisect_left(iso, b) - bisect_right(iso, a)
        if inside > 1:
            return f"edge ({a},{b}) covers {inside} isolated points"
        before = bisect_left(iso, a)
        after = len(iso) - bisect_right(iso, b)
        if before > after:
            return (
                f"edge ({a},{b}) has {before} isolated points before it"
                f" and only {after} after"
            )
    return None


def is_admissible(matching: PartialMatching) -> bool:
    return admissibility_violation(matching) is None


def _pairings(points: list[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect pairings of the (sorted) points, each pair and list ascending."""
    if not points:
        yield ()
        return
    first = points[0]
    for t in range(1, len(points)):
        rest = points[1:t] + points[t + 1 :]
        for tail in _pairings(rest):
            yield ((first, points[t]),) + tail


def _sequence(m: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    left_label: dict[int, int] = {}
    left_of = {b: a for a, b in edges}
    seq: list[int] = []
    next_label = 1
    for p in range(1, m + 1):
        if p in left_of:
            seq.append(left_label[left_of[p]])
        else:
            left_label[p] = next_label
            seq.append(next_label)
            next_label += 1
    return tuple(seq)


def _completed(m: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    seq = _sequence(m, edges)
    covered = {p for e in edges for p in e}
    virtual = [seq[p - 1] for p in range(1, m + 1) if p not in covered]
    return seq + tuple(reversed(virtual))


def enumerate_matchings(points: int, edge_count: int) -> list[PartialMatching]:
    """Brute-force oracle: all admissible, pattern-avoiding matchings.

    Generates every way to choose 2*edge_count covered points and pair them,
    then filters; order is lexicographic on the sorted edge list.
    """
    if points < 0 or edge_count < 0 or 2 * edge_count > points:
        raise ValueError(f"need 0 <= 2*{edge_count} <= {points}")
    all_points = range(1, points + 1)
    kept: list[tuple[tuple[int, int], ...]] = []
    for chosen in combinations(all_points, 2 * edge_count):
        covered = set(chosen)
        isolated = [p for p in all_points if p not in covered]
        for edges in _pairings(list(chosen)):
            if _violation(edges, isolated) is not None:
                continue
            if contains_pattern(_completed(points, edges), FORBIDDEN_PATTERN):
                continue
            kept.append(edges)
    kept.sort()
    return [PartialMatching(points, edges) for edges in kept]


def crossing_poly(points: int, edge_count: int) -> Poly:
    """Generating polynomial of the crossing number over enumerate_matchings."""
    counts: list[int] = []
    for matching in enumerate_matchings(points, edge_count):
        c = crossings(matching)
        while len(counts) <= c:
            counts.append(0)
        counts[c] += 1
    return Poly(tuple(counts))


def shift(matching: PartialMatching) -> PartialMatching:
    """Append an isolated point after the last point; crossings unchanged."""
    return PartialMatching(matching.m + 1, matching.edges)


def lift(matching: PartialMatching) -> PartialMatching:
    """Join two middle isolated points by a new edge.

    With 2k isolated points the k-th and (k+1)-st (by position, 1-indexed)
    are joined, creating no crossing; with 2k+1 the k-th and (k+2)-nd are
    joined, covering one point and creating exactly one crossing.
    """
    iso = matching.isolated()
    count = len(iso)
    if count < 2 or (count % 2 == 1 and count < 3):
        raise DomainError("lift unavailable at this position")
    if count % 2 == 0:
        k = count // 2
        edge = (iso[k - 1], iso[k])
    else:
        k = count // 2
        edge = (iso[k - 1], iso[k + 1])
    return PartialMatching(matching.m, matching.edges + (edge,))


def path_to_matching(path: str) -> PartialMatching:
    """Fold a path into a matching: shift per east step, lift per north step."""
    parse_path(path)
    matching = PartialMatching(0)
    for ch in path:
        matching = shift(matching) if ch == EAST else lift(matching)
    return matching


def matching_to_path(matching: PartialMatching) -> str:
    """Reverse construction: recover the unique path folding to this matching.

    Unstepping from (m, #edges): while any edge has equally many isolated
    points on both sides, the balanced edge with the rightmost right endpoint
    is unlinked (its endpoints become isolated again, the point count stays)
    and a north step is recorded; otherwise every edge is strictly
    left-light, the last point must be isolated, and removing it records an
    east step.  The recorded steps, reversed, form the path.
    """
    violation = admissibility_violation(matching)
    if violation is not None:
        raise DomainError(f"not in the generating class: {violation}")
    if contains_forbidden(matching):
        raise DomainError(
            "completed sequential form contains the pattern "
            + sequence_text(FORBIDDEN_PATTERN)
        )
    m = matching.m
    edges = list(matching.edges)
    steps: list[str] = []
    while m > 0:
        covered = {p for e in edges for p in e}
        iso = [p for p in range(1, m + 1) if p not in covered]
        balanced: list[tuple[int, int]] = []
        for a, b in edges:
            before = bisect_left(iso, a)
            after = len(iso) - bisect_right(iso, b)
            if before > after:
                raise DomainError(NOT_IN_IMAGE)
            if before == after:
                balanced.append((a, b))
        if balanced:
            edges.remove(max(balanced, key=lambda e: e[1]))
            steps.append(NORTH)
        elif iso and iso[-1] == m:
            m -= 1
            steps.append(EAST)
        else:
            raise DomainError(NOT_IN_IMAGE)
    return "".join(reversed(steps))


def matching_to_json(matching: PartialMatching) -> dict:
    """JSON object {"m": ..., "edges": [[a, b], ...]} with 1-indexed endpoints."""
    return {"m": matching.m, "edges": [list(e) for e in matching.edges]}


def matching_from_json(obj: object) -> PartialMatching:
    if not isinstance(obj, dict) or set(obj) != {"m", "edges"}:
        raise ParseError('matching JSON must be {"m": int, "edges": [[a,b],...]}')
    m = obj["m"]
    edges = obj["edges"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise ParseError('"m" must be an integer')
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list of pairs')
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"edge {e!r} is not a pair")
        pairs.append(tuple(e))
    return PartialMatching(m, tuple(pairs))
