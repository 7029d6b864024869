"""Maximal-period order-2 orientable starters from Euler circuits of K_q.

For odd q every vertex of K_q has even degree.  For even q a one-factor
(perfect matching) is removed first.  A circuit visits each unordered pair
{a, b} once in one direction, which is exactly an orientable sequence of
order 2 with period equal to the edge count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .bounds import os2_max_period
from .seq import RingSequence
from .verify import check_orientable

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class MatchingInfeasible(ValueError):
    pass


class NoCircuit(RuntimeError):
    pass


@dataclass(frozen=True)
class EulerGraph:
    q: int
    edges: frozenset  # of sorted (a, b) pairs
    removed_factor: frozenset | None = None

    def neighbours(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.q)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


def _matchings(q: int, forbidden: frozenset) -> Iterator[frozenset]:
    """Perfect matchings of K_q avoiding ``forbidden``: i <-> i + q/2 first, then lexicographic search."""
    half = q // 2
    default = frozenset(_edge(i, i + half) for i in range(half))
    seen = set()
    if not default & forbidden:
        seen.add(default)
        yield default

    def search(free: list[int], acc: list[Edge]):
        if not free:
            yield frozenset(acc)
            return
        a = free[0]
        for b in free[1:]:
            e = (a, b)
            if e in forbidden:
                continue
            rest = [v for v in free[1:] if v != b]
            yield from search(rest, acc + [e])

    for mt in search(list(range(q)), []):
        if mt not in seen:
            seen.add(mt)
            yield mt


def _blocking_edge(q: int, forbidden: frozenset) -> Edge | None:
    for e in sorted(forbidden):
        if next(_matchings(q, forbidden - {e}), None) is not None:
            return e
    return None


def build_graph(q: int, forbidden_edges=(), attempt: int = 0) -> EulerGraph:
    """K_q for odd q; K_q minus a one-factor disjoint from ``forbidden_edges`` for even q.

    ``attempt`` selects the next candidate matching when an earlier one left
    the graph without a suitable circuit.
    """
    if q < 3:
        raise ValueError(f"need q >= 3, got {q}")
    full = frozenset(combinations(range(q), 2))
    if q % 2:
        return EulerGraph(q, full)
    forbidden = frozenset(_edge(a, b) for a, b in forbidden_edges)
    for k, mt in enumerate(_matchings(q, forbidden)):
        if k == attempt:
            return EulerGraph(q, full - mt, mt)
    if attempt == 0:
        blocker = _blocking_edge(q, forbidden)
        raise MatchingInfeasible(
            f"no perfect matching of K_{q} avoids {sorted(forbidden)}"
            + (f"; dropping {blocker} would fix it" if blocker else "")
        )
    raise MatchingInfeasible(f"only {attempt} admissible matchings of K_{q}")


def _trail(adj: dict[int, list[int]], start: int) -> list[int]:
    # Hierholzer, always leaving by the smallest unused neighbour
    adj = {v: list(ns) for v, ns in adj.items()}
    stack = [start]
    out = []
    while stack:
        v = stack[-1]
        if adj[v]:
            w = adj[v].pop(0)
            adj[w].remove(v)
            stack.append(w)
        else:
            out.append(stack.pop())
    return out[::-1]


def eulerian_with_prefix(g: EulerGraph, prefix: Sequence[int] = ()) -> RingSequence:
    """Ring sequence of an Euler circuit of ``g`` whose vertex stream starts with ``prefix``."""
    prefix = [int(v) for v in prefix]
    adj = g.neighbours()
    used = []
    for a, b in zip(prefix, prefix[1:]):
        if a == b:
            raise ValueError(f"prefix repeats symbol {a}")
        e = _edge(a, b)
        if e not in g.edges:
            raise ValueError(f"prefix edge {e} not in graph")
        if e in used:
            raise ValueError(f"prefix uses edge {e} twice")
        used.append(e)
    for a, b in used:
        adj[a].remove(b)
        adj[b].remove(a)

    first = prefix[0] if prefix else 0
    start = prefix[-1] if prefix else 0
    odd = sorted(v for v, ns in adj.items() if len(ns) % 2)
    expected = [] if start == first else sorted((start, first))
    if odd != expected:
        raise NoCircuit(f"odd-degree vertices {odd} after prefix, expected {expected}")

    remaining = sum(len(ns) for ns in adj.values()) // 2
    trail = _trail(adj, start)
    if len(trail) != remaining + 1 or trail[-1] != first:
        raise NoCircuit("edges left over after removing the prefix are not connected")
    ring = prefix[:-1] + trail[:-1] if prefix else trail[:-1]
    return RingSequence(ring, g.q)


def os2_starter(q: int, prefix: Sequence[int] = (0,)) -> RingSequence:
    """A maximal-period orientable sequence of order 2 beginning with ``prefix`` (default: with 0)."""
    forbidden = [_edge(a, b) for a, b in zip(prefix, prefix[1:])]
    last_error: Exception | None = None
    for attempt in range(max(1, q)):
        try:
            g = build_graph(q, forbidden, attempt)
        except MatchingInfeasible as exc:
            if attempt == 0:
                raise
            last_error = exc
            break
        try:
            s = eulerian_with_prefix(g, prefix)
        except NoCircuit as exc:
            last_error = exc
            continue
        if s.period != os2_max_period(q) or not check_orientable(s, 2):
            raise AssertionError(f"Euler circuit for q={q} is not a maximal orientable sequence")
        return s
    raise NoCircuit(f"no Euler circuit of K_{q} with prefix {list(prefix)}: {last_error}")


def os2_maximal(q: int, x: int, y: int, z: int, lead_zero: bool = False) -> RingSequence:
    """Maximal OS_q(2) whose ring starts ``[x, y, z, x, ...]`` or ``[0, x, y, z, x, ...]``."""
    if q <= 4:
        raise ValueError(f"need q > 4, got {q}")
    if len({x % q, y % q, z % q}) != 3:
        raise ValueError(f"x, y, z must be distinct mod {q}")
    x, y, z = x % q, y % q, z % q
    if lead_zero:
        if 0 in (x, y, z):
            raise ValueError("lead_zero needs x, y, z nonzero")
        prefix = [0, x, y, z, x]
    else:
        prefix = [x, y, z, x]
    return os2_starter(q, prefix)
