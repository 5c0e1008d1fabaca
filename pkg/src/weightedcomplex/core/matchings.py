"""Maximal matchings on [n], their crossings and signs. 🔗

A maximal matching is a perfect matching of [n] when n is even, and a
perfect matching of [n] minus one isolated vertex when n is odd.
"""

from dataclasses import dataclass
from typing import Iterator

from weightedcomplex.core.permutations import Permutation
from weightedcomplex.errors import check_cap
from weightedcomplex.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Matching:
    """Edges (i, j) with i < j, sorted by smaller endpoint, plus the isolated vertex for odd n."""

    edges: tuple[tuple[int, int], ...]
    n: int
    isolated: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"matchings need n >= 1, got {self.n}")
        if len(self.edges) != self.n // 2:
            raise ValueError(f"expected {self.n // 2} edges for n={self.n}, got {len(self.edges)}")
        covered: set[int] = set()
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"edge ({i}, {j}) must satisfy 1 <= i < j <= {self.n}")
            covered.update((i, j))
        if len(covered) != 2 * len(self.edges):
            raise ValueError("edges must be pairwise disjoint")
        if self.n % 2:
            missing = set(range(1, self.n + 1)) - covered
            if self.isolated is None or missing != {self.isolated}:
                raise ValueError("odd n needs exactly the uncovered vertex as isolated")
        elif self.isolated is not None:
            raise ValueError("even n has no isolated vertex")

    @classmethod
    def from_pairs(cls, pairs: list[tuple[int, int]], n: int) -> "Matching":
        """Normalize arbitrary pairs and infer the isolated vertex."""
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
        isolated = None
        if n % 2:
            covered = {v for edge in edges for v in edge}
            isolated = next((v for v in range(1, n + 1) if v not in covered), None)
        return cls(edges, n, isolated)

    def __str__(self) -> str:
        body = " ".join(f"{{{i},{j}}}" for i, j in self.edges)
        if self.isolated is not None:
            body = f"{body} | {self.isolated}".strip()
        return body


def maximal_matching_count(n: int) -> int:
    """(n-1)!! for even n, n * (n-2)!! for odd n."""
    count = n if n % 2 else 1
    for k in range(n - 1 if n % 2 == 0 else n - 2, 0, -2):
        count *= k
    return count


def _perfect_matchings(vertices: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _perfect_matchings(remaining):
            yield ((first, partner), *tail)


def enumerate_maximal_matchings(n: int) -> Iterator[Matching]:
    """Yield every maximal matching on [n] exactly once.

    The smallest unmatched vertex is always paired first; for odd n the
    isolated vertex runs through 1..n in increasing order.

    Raises:
        CapExceededError: If n exceeds `settings.matching_cap`.
    """
    if n < 1:
        raise ValueError(f"matchings need n >= 1, got {n}")
    check_cap("matching enumeration", n, "matching_cap")
    logger.debug(f"🔗 Enumerating {maximal_matching_count(n):,} maximal matchings on [{n}]")
    vertices = tuple(range(1, n + 1))
    if n % 2 == 0:
        for edges in _perfect_matchings(vertices):
            yield Matching(edges, n)
        return
    for isolated in vertices:
        rest = tuple(v for v in vertices if v != isolated)
        for edges in _perfect_matchings(rest):
            yield Matching(edges, n, isolated)


def crossings(p: Matching) -> int:
    """Count edge pairs {a, c}, {b, d} with a < b < c < d."""
    edges = p.edges
    return sum(
        1
        for x in range(len(edges))
        for y in range(x + 1, len(edges))
        if edges[x][0] < edges[y][0] < edges[x][1] < edges[y][1]
        or edges[y][0] < edges[x][0] < edges[y][1] < edges[x][1]
    )


def matching_sign(p: Matching) -> int:
    """(-1)^cross(p), times (-1)^(i-1) for the isolated vertex i when n is odd."""
    exponent = crossings(p)
    if p.isolated is not None:
        exponent += p.isolated - 1
    return -1 if exponent % 2 else 1


def is_sstar(tau: Permutation) -> bool:
    """Pairs (tau_{2j-1}, tau_{2j}) ascend and their first entries ascend."""
    e = tau.entries
    m = tau.n // 2
    if any(e[2 * j] > e[2 * j + 1] for j in range(m)):
        return False
    return all(e[2 * j] < e[2 * j + 2] for j in range(m - 1))


def sstar_to_matching(tau: Permutation) -> Matching:
    """Read consecutive pairs of tau as edges; tau_n is isolated for odd n.

    Raises:
        ValueError: If tau is not in the pair-sorted subset of S_n.
    """
    if not is_sstar(tau):
        raise ValueError(f"{tau} does not have sorted consecutive pairs")
    e = tau.entries
    edges = tuple((e[2 * j], e[2 * j + 1]) for j in range(tau.n // 2))
    return Matching(edges, tau.n, e[-1] if tau.n % 2 else None)


def matching_to_sstar(p: Matching) -> Permutation:
    """Inverse of `sstar_to_matching`."""
    entries = [v for edge in p.edges for v in edge]
    if p.isolated is not None:
        entries.append(p.isolated)
    return Permutation(tuple(entries))


def matching_lift(p: Matching) -> Matching:
    """Join the isolated vertex to a new vertex n+1 (odd n only)."""
    if p.isolated is None:
        raise ValueError(f"matching_lift needs odd n, got n={p.n}")
    return Matching.from_pairs([*p.edges, (p.isolated, p.n + 1)], p.n + 1)
