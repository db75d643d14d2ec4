"""Vertex cuts, separating triangles and essential 4-connectivity.

Two independent routes find the 3-cuts of a triangulation: brute force over
every vertex triple (the baseline, valid for any embedding) and a scan of
triangles that are not faces (the fast path, valid for triangulations with
at least five vertices).  Tests cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .embedding import Embedding, Triangulation
from .errors import NotThreeConnected


@dataclass(frozen=True)
class CutSet:
    vertices: frozenset[int]
    components: tuple[frozenset[int], ...]

    @property
    def trivial(self) -> bool:
        return sum(1 for comp in self.components if len(comp) >= 2) <= 1

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


def components_without(g: Embedding, removed: frozenset[int]) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by least vertex."""
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.rot[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(frozenset(comp))
    return comps


def connectivity_at_least(g: Embedding, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no cut of fewer than ``k`` vertices."""
    if g.n <= k:
        return False
    for size in range(k):
        for subset in combinations(range(g.n), size):
            if len(components_without(g, frozenset(subset))) > 1:
                return False
    return True


def three_cuts(g: Embedding) -> list[CutSet]:
    """Every 3-cut of a 3-connected embedding, by brute force over vertex triples."""
    if not connectivity_at_least(g, 3):
        raise NotThreeConnected("three_cuts requires a 3-connected graph")
    cuts = []
    for triple in combinations(range(g.n), 3):
        s = frozenset(triple)
        comps = components_without(g, s)
        if len(comps) > 1:
            # holds for every 3-connected planar graph
            assert len(comps) == 2, f"3-cut {triple} leaves {len(comps)} components"
            cuts.append(CutSet(s, tuple(comps)))
    return cuts


def separating_triangles(tri: Triangulation) -> list[CutSet]:
    """Triangles of ``tri`` that are not faces, in lexicographic order."""
    out = []
    for u in range(tri.n):
        for v in sorted(tri.adj[u]):
            if v <= u:
                continue
            for w in sorted(tri.adj[u] & tri.adj[v]):
                if w <= v:
                    continue
                s = frozenset((u, v, w))
                if not tri.is_face(s):
                    out.append(CutSet(s, tuple(components_without(tri, s))))
    return out


def _cuts(g: Embedding) -> list[CutSet]:
    if isinstance(g, Triangulation) and g.n >= 5:
        return separating_triangles(g)
    return three_cuts(g)


def is_essentially_4_connected(g: Embedding) -> bool:
    """3-connected with every 3-cut trivial.

    Also evaluates the planar shortcut (every 3-cut is the neighborhood of a
    degree-3 vertex) and asserts the two verdicts agree.
    """
    if not connectivity_at_least(g, 3):
        raise NotThreeConnected("essential 4-connectivity needs a 3-connected graph")
    cuts = _cuts(g)
    by_trivial = all(cut.trivial for cut in cuts)
    deg3_hoods = {g.adj[v] for v in range(g.n) if g.degree(v) == 3}
    by_neighborhood = all(cut.vertices in deg3_hoods for cut in cuts)
    assert by_trivial == by_neighborhood, "trivial-cut and degree-3 characterizations disagree"
    return by_trivial


def nontrivial_cuts(g: Embedding) -> list[CutSet]:
    return [cut for cut in _cuts(g) if not cut.trivial]
