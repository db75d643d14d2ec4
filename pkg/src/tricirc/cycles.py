"""Exact longest-cycle search, good cycles, extension and rerouting moves.

The search is a depth-first path extension over integer bitmasks.  Each
cycle is anchored at its least vertex; neighbors are tried in ascending
order, so witnesses are deterministic.  A branch is cut when an upper bound
on any completion does not beat the incumbent.  Two bounds are combined:

* path length plus the number of still-reachable vertices;
* for a fixed independent set ``I``: every ``I`` vertex on a cycle is
  followed by a vertex outside ``I``, so a cycle holds at most as many
  ``I`` vertices as non-``I`` vertices.

For good cycles every vertex that can no longer join the cycle must have
degree 3 and no neighbor that is also left out.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .embedding import Embedding
from .errors import Acyclic, ConfigMismatch, NoGoodCycle, NotACycle, NotExtendable, Timeout

log = logging.getLogger(__name__)

DEFAULT_BUDGET_SECS = 60.0


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the least vertex; orient toward the smaller neighbor."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = [cycle[(i + j) % k] for j in range(k)]
    if k > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


def _independent_set(g: Embedding) -> int:
    """Greedy independent set, low degrees first."""
    mask = 0
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        if not g.nbr_mask[v] & mask:
            mask |= 1 << v
    return mask


class _Search:
    def __init__(
        self,
        g: Embedding,
        good: bool,
        budget_secs: float | None,
        target: int | None = None,
    ):
        self.g = g
        self.n = g.n
        self.nbr = g.nbr_mask
        self.full = (1 << g.n) - 1
        self.deg3 = sum(1 << v for v in range(g.n) if g.degree(v) == 3)
        self.indep = _independent_set(g)
        self.good = good
        self.target = target
        self.deadline = None if budget_secs is None else time.monotonic() + budget_secs
        self.nodes = 0
        self.best_len = 0
        self.best: tuple[int, ...] | None = None
        self.found: list[tuple[int, ...]] = []

    # -- helpers ----------------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise Timeout(f"search exceeded its budget after {self.nodes} nodes")

    def _reach(self, v: int, avail: int) -> int:
        nbr = self.nbr
        seen = 0
        frontier = nbr[v] & avail
        while frontier:
            seen |= frontier
            nxt = 0
            for x in _bits(frontier):
                nxt |= nbr[x]
            frontier = nxt & avail & ~seen
        return seen

    def _outside_ok(self, out: int) -> bool:
        if out & ~self.deg3:
            return False
        nbr = self.nbr
        return all(not nbr[x] & out for x in _bits(out))

    def _beats(self, bound: int) -> bool:
        if self.target is not None:
            return bound >= self.target
        return bound > self.best_len

    # -- driver -----------------------------------------------------------------

    def run(self) -> None:
        before = 0
        for s in range(self.n):
            if self.good and s > 0:
                # vertices below the anchor stay off the cycle
                if not self._outside_ok(before):
                    break
            allowed = self.full & ~before
            if not self._beats(allowed.bit_count()):
                break
            self.anchor = s
            self.allowed = allowed
            self.path = [s]
            self._dfs(s, 1 << s)
            before |= 1 << s

    def _dfs(self, v: int, visited: int) -> None:
        self._tick()
        s = self.anchor
        nbr = self.nbr
        depth = len(self.path)
        if depth >= 3 and nbr[v] >> s & 1:
            self._close(visited)
        avail = self.allowed & ~visited
        reach = self._reach(v, avail)
        if not nbr[s] & (reach | (1 << v)):
            return
        total = visited | reach
        bound = total.bit_count()
        inside = (total & self.indep).bit_count()
        bound = min(bound, 2 * (bound - inside) if inside > bound - inside else bound)
        if not self._beats(bound) or bound <= depth:
            return
        if self.good and not self._outside_ok(self.full & ~total):
            return
        for w in _bits(nbr[v] & avail):
            self.path.append(w)
            self._dfs(w, visited | (1 << w))
            self.path.pop()

    def _close(self, visited: int) -> None:
        length = len(self.path)
        if not self._beats(length):
            return
        if self.good and not self._outside_ok(self.full & ~visited):
            return
        cycle = canonical_cycle(self.path)
        if self.target is not None:
            if length == self.target:
                self.found.append(cycle)
            return
        self.best_len = length
        self.best = cycle


# -- circumference ------------------------------------------------------------------


def circumference(
    g: Embedding,
    budget_secs: float | None = None,
    known: Sequence[int] | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Exact length of a longest cycle and a witness.

    ``known`` (a cycle of ``g``) seeds the incumbent; it is returned when no
    strictly longer cycle exists.
    """
    search = _Search(g, good=False, budget_secs=budget_secs)
    if known is not None:
        _require_cycle(g, known)
        search.best_len = len(known)
        search.best = canonical_cycle(known)
    search.run()
    if search.best is None:
        raise Acyclic("graph has no cycle")
    return search.best_len, search.best


def is_hamiltonian(g: Embedding, budget_secs: float | None = None) -> bool:
    if g.n < 3:
        return False
    try:
        length, _ = circumference(g, budget_secs)
    except Acyclic:
        return False
    return length == g.n


# -- good cycles -------------------------------------------------------------------


@dataclass(frozen=True)
class GoodCycle:
    """A cycle whose complement is an independent set of degree-3 vertices."""

    verts: tuple[int, ...]
    outside: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.verts)

    def __len__(self) -> int:
        return len(self.verts)

    def v(self, i: int) -> int:
        """Vertex at position ``i`` taken cyclically."""
        return self.verts[i % len(self.verts)]

    def edges(self) -> list[tuple[int, int]]:
        k = len(self.verts)
        return [(self.verts[i], self.verts[(i + 1) % k]) for i in range(k)]

    def has_edge(self, x: int, y: int) -> bool:
        return frozenset((x, y)) in self.edge_set

    @property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges())


def _require_cycle(g: Embedding, cycle: Sequence[int]) -> None:
    k = len(cycle)
    if k < 3:
        raise NotACycle(f"a cycle needs >= 3 vertices, got {k}")
    if len(set(cycle)) != k:
        raise NotACycle("cycle repeats a vertex")
    for i in range(k):
        x, y = cycle[i], cycle[(i + 1) % k]
        if not 0 <= x < g.n or not g.has_edge(x, y):
            raise NotACycle(f"{x}{y} is not an edge")


def goodness_violations(g: Embedding, cycle: Sequence[int]) -> list[str]:
    """Reasons ``cycle`` is not good (empty list when it is)."""
    _require_cycle(g, cycle)
    on = set(cycle)
    out = [v for v in range(g.n) if v not in on]
    problems = []
    for x in out:
        if g.degree(x) != 3:
            problems.append(f"outside vertex {x} has degree {g.degree(x)}")
        for y in g.rot[x]:
            if y not in on and x < y:
                problems.append(f"outside vertices {x} and {y} are adjacent")
    return problems


def is_good_cycle(g: Embedding, cycle: Sequence[int]) -> bool:
    return not goodness_violations(g, cycle)


def good_cycle(g: Embedding, cycle: Sequence[int]) -> GoodCycle:
    """Validate ``cycle`` and wrap it as a :class:`GoodCycle`."""
    problems = goodness_violations(g, cycle)
    if problems:
        raise ValueError("not a good cycle: " + "; ".join(problems))
    on = set(cycle)
    return GoodCycle(tuple(cycle), frozenset(v for v in range(g.n) if v not in on))


def extendable_edges(g: Embedding, c: GoodCycle) -> list[tuple[tuple[int, int], int]]:
    out = []
    for x, y in c.edges():
        common = g.adj[x] & g.adj[y] & c.outside
        if common:
            out.append(((x, y), min(common)))
    return out


def extend(g: Embedding, c: GoodCycle, edge: tuple[int, int]) -> GoodCycle:
    """Replace cycle edge ``xy`` by the detour ``x z y`` through an outside vertex."""
    x, y = edge
    k = c.k
    for i in range(k):
        a, b = c.verts[i], c.verts[(i + 1) % k]
        if {a, b} == {x, y}:
            break
    else:
        raise NotExtendable(f"{x}{y} is not an edge of the cycle")
    common = g.adj[a] & g.adj[b] & c.outside
    if not common:
        raise NotExtendable(f"{x}{y} has no common neighbor off the cycle")
    z = min(common)
    verts = c.verts[: i + 1] + (z,) + c.verts[i + 1 :]
    return good_cycle(g, verts)


def extend_fully(g: Embedding, c: GoodCycle) -> GoodCycle:
    while True:
        ext = extendable_edges(g, c)
        if not ext:
            return c
        c = extend(g, c, ext[0][0])


def longest_good_cycle(g: Embedding, budget_secs: float | None = None) -> GoodCycle:
    """An exactly maximum good cycle (first in the deterministic search order)."""
    search = _Search(g, good=True, budget_secs=budget_secs)
    search.run()
    if search.best is None:
        log.error(
            "NO GOOD CYCLE in graph with n=%d: precondition violated or lemma refuted", g.n
        )
        raise NoGoodCycle(f"graph on {g.n} vertices has no good cycle")
    return good_cycle(g, search.best)


def all_longest_good_cycles(
    g: Embedding, length: int | None = None, budget_secs: float | None = None
) -> list[GoodCycle]:
    """Every good cycle of maximum length (or of the given ``length``), canonicalized."""
    if length is None:
        length = longest_good_cycle(g, budget_secs).k
    search = _Search(g, good=True, budget_secs=budget_secs, target=length)
    search.run()
    return [good_cycle(g, c) for c in sorted(set(search.found))]


# -- rerouting ---------------------------------------------------------------------


@dataclass(frozen=True)
class RimLabels:
    """Cyclic labelling ``v_j = verts[start + direction * (j - 1)]`` of a good cycle."""

    cycle: GoodCycle
    start: int
    direction: int

    def __call__(self, j: int) -> int:
        return self.cycle.v(self.start + self.direction * (j - 1))


def reroute(g: Embedding, c: GoodCycle, move: str, start: int, direction: int, r: int) -> GoodCycle:
    """Apply one of the three same-length rerouting moves around a branch.

    Labels run ``v_j = c.v(start + direction*(j-1))``.  Moves:

    ``"a"``  ``(v0, v1, ..., v_{r+1})  -> (v0, v2, ..., v_r, v1, v_{r+1})``; gains ``v1 v_{r+1}``
    ``"b"``  ``(v_-1, v0, ..., v_r)    -> (v_-1, v2, ..., v_{r-1}, v1, v0, v_r)``; gains ``v0 v_r``
    ``"c"``  ``(v_-1, v0, ..., v_r)    -> (v_-1, v2, v1, v3, ..., v_{r-1}, v0, v_r)``; gains ``v0 v_r``
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    lab = RimLabels(c, start, direction)
    k = c.k
    if move == "a":
        first, span = 0, r + 2
        new = [lab(0)] + [lab(j) for j in range(2, r + 1)] + [lab(1), lab(r + 1)]
        gained = (lab(1), lab(r + 1))
    elif move in ("b", "c"):
        first, span = -1, r + 2
        if move == "b":
            mid = [lab(j) for j in range(2, r)] + [lab(1)]
        else:
            mid = [lab(2), lab(1)] + [lab(j) for j in range(3, r)]
        new = [lab(-1)] + mid + [lab(0), lab(r)]
        gained = (lab(0), lab(r))
    else:
        raise ValueError(f"unknown move {move!r}")
    if span > k or r < 2:
        raise ConfigMismatch(f"move {move} with r={r} does not fit a cycle of length {k}")
    rest = [lab(j) for j in range(first + span, first + k)]
    verts = new + rest
    missing = [(verts[i], verts[(i + 1) % k]) for i in range(k) if not g.has_edge(verts[i], verts[(i + 1) % k])]
    if missing or len(set(verts)) != k:
        raise ConfigMismatch(f"move {move}: required edges absent: {missing}")
    out = good_cycle(g, verts)
    assert out.has_edge(*gained)
    return out


def rerouted_edge(c: GoodCycle, move: str, start: int, direction: int, r: int) -> tuple[int, int]:
    """The edge a successful :func:`reroute` brings onto the cycle."""
    lab = RimLabels(c, start, direction)
    return (lab(1), lab(r + 1)) if move == "a" else (lab(0), lab(r))
