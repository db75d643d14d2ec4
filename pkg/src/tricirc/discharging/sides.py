"""Split ``H = G[V(C)]`` along a good cycle ``C`` into its two outerplanar sides.

Inside this module vertices are addressed by their position ``0..k-1`` on
the cycle; ``C.verts[p]`` recovers the vertex id of ``G``.  Faces are
frozensets of positions.  Side 1 holds the faces lying to the right of the
darts ``C.verts[p] -> C.verts[p+1]`` of ``H``'s embedding.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from ..cycles import GoodCycle
from ..embedding import Reduction, Triangulation, delete_independent_deg3
from ..errors import ChordConflict, Claim1Violation, NoZeroFace, RimNotPath, ThreeFaceFound

PFace = frozenset[int]


def is_cycle_pair(p: int, q: int, k: int) -> bool:
    return (p - q) % k in (1, k - 1)


def face_jclass(face: PFace, k: int) -> int:
    """Number of the face's sides that are edges of the cycle."""
    return sum(1 for p, q in combinations(sorted(face), 2) if is_cycle_pair(p, q, k))


def weak_dual(k: int, chords) -> dict[PFace, tuple[PFace, ...]]:
    """Weak dual of the maximal outerplanar graph on the ``k``-gon ``0..k-1`` plus ``chords``.

    Triangles are found as 3-cliques (an outerplanar graph has no separating
    triangle); two are adjacent when they share a chord.
    """
    adj: dict[int, set[int]] = {p: {(p - 1) % k, (p + 1) % k} for p in range(k)}
    chord_set = set()
    for c in chords:
        p, q = tuple(c)
        adj[p].add(q)
        adj[q].add(p)
        chord_set.add(frozenset((p, q)))
    triangles = []
    for p in range(k):
        for q in adj[p]:
            if q <= p:
                continue
            for r in adj[p] & adj[q]:
                if r > q:
                    triangles.append(frozenset((p, q, r)))
    by_chord: dict[frozenset[int], list[PFace]] = {c: [] for c in chord_set}
    for t in triangles:
        for pair in combinations(sorted(t), 2):
            key = frozenset(pair)
            if key in by_chord:
                by_chord[key].append(t)
    nbrs: dict[PFace, list[PFace]] = {t: [] for t in triangles}
    for key, ts in by_chord.items():
        if len(ts) != 2:
            raise ValueError(f"chord {sorted(key)} borders {len(ts)} triangles")
        a, b = ts
        nbrs[a].append(b)
        nbrs[b].append(a)
    return {t: tuple(sorted(ns, key=sorted)) for t, ns in nbrs.items()}


def tree_violations(dual: dict[PFace, tuple[PFace, ...]], k: int) -> list[str]:
    """Ways in which ``dual`` fails to be a tree on ``k-2`` nodes of max degree 3."""
    problems = []
    nodes = len(dual)
    edges = sum(len(v) for v in dual.values()) // 2
    if nodes != k - 2:
        problems.append(f"{nodes} nodes, expected {k - 2}")
    if edges != nodes - 1:
        problems.append(f"{edges} edges on {nodes} nodes")
    if dual:
        start = next(iter(dual))
        seen = {start}
        queue = deque([start])
        while queue:
            for u in dual[queue.popleft()]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != nodes:
            problems.append("disconnected")
    big = [sorted(t) for t, ns in dual.items() if len(ns) > 3]
    if big:
        problems.append(f"nodes of degree > 3: {big}")
    return problems


@dataclass
class Branch:
    side: int
    faces: tuple[PFace, ...]
    rim_edges: frozenset[int]  # cycle edge p joins positions p and p+1
    rim: tuple[int, ...] | None  # rim as a position path, None if not a path

    @property
    def owner(self) -> PFace:
        return self.faces[0]

    @property
    def end(self) -> PFace:
        return self.faces[-1]

    @property
    def r(self) -> int:
        return len(self.faces)


@dataclass
class SidePartition:
    graph: Triangulation
    cycle: GoodCycle
    reduction: Reduction
    faces: tuple[PFace, ...]
    side: dict[PFace, int]
    chords: dict[int, tuple[frozenset[int], ...]]
    jclass: dict[PFace, int]
    empty: dict[PFace, bool]
    dual: dict[int, dict[PFace, tuple[PFace, ...]]]
    edge_faces: tuple[tuple[PFace, PFace], ...]
    checks: dict[str, list[str]] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.cycle.k

    def v(self, p: int) -> int:
        return self.cycle.v(p)

    def to_g(self, face) -> list[int]:
        return sorted(self.cycle.v(p) for p in face)

    def faces_on(self, side: int) -> list[PFace]:
        return [f for f in self.faces if self.side[f] == side]

    def face_at(self, p: int, side: int) -> PFace:
        return self.edge_faces[p % self.k][side - 1]

    def edge_class(self, p: int) -> tuple[int, int]:
        a, b = self.edge_faces[p % self.k]
        return tuple(sorted((self.jclass[a], self.jclass[b])))  # type: ignore[return-value]

    def cycle_edges_of(self, face: PFace) -> list[int]:
        k = self.k
        return sorted(p for p in face if (p + 1) % k in face)

    def has_chord(self, p: int, q: int, side: int) -> bool:
        return frozenset((p % self.k, q % self.k)) in self._chord_sets[side]

    @property
    def _chord_sets(self) -> dict[int, frozenset[frozenset[int]]]:
        cache = self.__dict__.get("_chord_cache")
        if cache is None:
            cache = {s: frozenset(cs) for s, cs in self.chords.items()}
            self.__dict__["_chord_cache"] = cache
        return cache

    def count(self, side: int, j: int, empty_only: bool = True) -> int:
        return sum(
            1
            for f in self.faces_on(side)
            if self.jclass[f] == j and (self.empty[f] or not empty_only)
        )

    def f_counts(self, side: int) -> dict[str, int]:
        """Empty j-face counts of one side."""
        return {f"f{j}": self.count(side, j) for j in (0, 1, 2)}


def _assign_sides(h: Triangulation, hcycle: list[int]) -> list[int]:
    """Side (1 or 2) of each face of ``h`` relative to the Hamiltonian cycle ``hcycle``."""
    k = len(hcycle)
    on_cycle = {frozenset((hcycle[i], hcycle[(i + 1) % k])) for i in range(k)}
    side = [0] * len(h.faces)

    def flood(seed: int, label: int) -> None:
        side[seed] = label
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            face = h.faces[f]
            for i in range(len(face)):
                a, b = face[i], face[(i + 1) % len(face)]
                if frozenset((a, b)) in on_cycle:
                    continue
                g = h.face_of_dart(b, a)
                if side[g] == 0:
                    side[g] = label
                    queue.append(g)
                elif side[g] != label:
                    raise ChordConflict(f"faces {face} and {h.faces[g]} straddle the cycle")

    flood(h.face_of_dart(hcycle[0], hcycle[1]), 1)
    flood(h.face_of_dart(hcycle[1], hcycle[0]), 2)
    if 0 in side:
        raise ChordConflict("some face of H is on neither side of the cycle")
    for i in range(k):
        a, b = hcycle[i], hcycle[(i + 1) % k]
        if side[h.face_of_dart(a, b)] != 1 or side[h.face_of_dart(b, a)] != 2:
            raise ChordConflict(f"cycle edge {a}{b} does not separate the two sides")
    return side


def _interleave(c: frozenset[int], d: frozenset[int]) -> bool:
    a, b = sorted(c)
    x, y = sorted(d)
    return (a < x < b) != (a < y < b) and not (c & d)


def check_chord_coloring(k: int, chords: dict[int, tuple[frozenset[int], ...]]) -> None:
    """Two-color the chord interleaving graph and compare with the given sides.

    Within each connected component of the interleaving graph the sides must
    match the coloring or its complement.
    """
    allc = [c for s in (1, 2) for c in chords[s]]
    side_of = {c: s for s in (1, 2) for c in chords[s]}
    color: dict[frozenset[int], int] = {}
    for root in allc:
        if root in color:
            continue
        color[root] = 0
        component = [root]
        queue = deque([root])
        while queue:
            c = queue.popleft()
            for d in allc:
                if d == c or not _interleave(c, d):
                    continue
                if d not in color:
                    color[d] = 1 - color[c]
                    component.append(d)
                    queue.append(d)
                elif color[d] == color[c]:
                    raise ChordConflict(
                        f"interleaving graph is not bipartite at {sorted(c)}, {sorted(d)}"
                    )
        flip = side_of[root] - 1
        for c in component:
            if side_of[c] - 1 != color[c] ^ flip:
                raise ChordConflict(f"chord {sorted(c)}: embedding side disagrees with 2-coloring")


def build_side_partition(g: Triangulation, cycle: GoodCycle) -> SidePartition:
    k = cycle.k
    red = delete_independent_deg3(g, cycle.outside)
    h = red.graph
    pos_of_g = {v: p for p, v in enumerate(cycle.verts)}
    hcycle = [red.old_to_new[v] for v in cycle.verts]
    to_pos = [pos_of_g[red.new_to_old[x]] for x in range(h.n)]

    side_list = _assign_sides(h, hcycle)
    faces = tuple(frozenset(to_pos[x] for x in f) for f in h.faces)
    side = {f: s for f, s in zip(faces, side_list)}

    chords: dict[int, list[frozenset[int]]] = {1: [], 2: []}
    for a, b in h.edges():
        pa, pb = to_pos[a], to_pos[b]
        if is_cycle_pair(pa, pb, k):
            continue
        s1 = side_list[h.face_of_dart(a, b)]
        s2 = side_list[h.face_of_dart(b, a)]
        if s1 != s2:
            raise ChordConflict(f"chord {sorted((pa, pb))} borders both sides")
        chords[s1].append(frozenset((pa, pb)))
    chord_tuple = {s: tuple(sorted(cs, key=sorted)) for s, cs in chords.items()}
    check_chord_coloring(k, chord_tuple)

    jclass = {f: face_jclass(f, k) for f in faces}
    threes = [f for f in faces if jclass[f] == 3]
    if threes:
        raise ThreeFaceFound(f"face {sorted(threes[0])} has all three sides on the cycle")

    empty = {f: g.is_face(cycle.v(p) for p in f) for f in faces}
    # independent bookkeeping from the deletion step must agree
    for f, x in zip(faces, h.faces):
        assert empty[f] == red.is_empty_face(x), f"empty flag mismatch on {sorted(f)}"

    edge_faces = []
    for p in range(k):
        a, b = hcycle[p], hcycle[(p + 1) % k]
        edge_faces.append((faces[h.face_of_dart(a, b)], faces[h.face_of_dart(b, a)]))

    dual = {s: weak_dual(k, chord_tuple[s]) for s in (1, 2)}
    part = SidePartition(
        graph=g,
        cycle=cycle,
        reduction=red,
        faces=faces,
        side=side,
        chords=chord_tuple,
        jclass=jclass,
        empty=empty,
        dual=dual,
        edge_faces=tuple(edge_faces),
    )
    part.checks = side_partition_checks(part)
    return part


def side_partition_checks(part: SidePartition) -> dict[str, list[str]]:
    """Structural invariants of a partition, each mapped to its list of violations."""
    k = part.k
    out: dict[str, list[str]] = {}
    problems = []
    cycle_pairs = {frozenset((p, (p + 1) % k)) for p in range(k)}
    if set(part.chords[1]) & set(part.chords[2]):
        problems.append("a chord lies on both sides")
    if set(part.chords[1]) & cycle_pairs or set(part.chords[2]) & cycle_pairs:
        problems.append("a cycle edge was classified as a chord")
    for s in (1, 2):
        if len(part.faces_on(s)) != k - 2:
            problems.append(f"side {s} has {len(part.faces_on(s))} triangles, expected {k - 2}")
        if len(part.chords[s]) != k - 3:
            problems.append(f"side {s} has {len(part.chords[s])} chords, expected {k - 3}")
        if set(part.dual[s]) != set(part.faces_on(s)):
            problems.append(f"side {s}: outerplanar triangles differ from embedded faces")
    out["side_partition"] = problems
    out["weak_duals"] = [f"side {s}: {p}" for s in (1, 2) for p in tree_violations(part.dual[s], k)]
    n_faces = len(part.faces)
    h = part.reduction.graph
    out["faces_count"] = (
        [] if n_faces == 2 * k - 4 and len(part.graph.faces) == 2 * part.graph.n - 4 and h.n == k
        else [f"H has {n_faces} faces on {k} vertices"]
    )
    leaves = []
    for s in (1, 2):
        for f, ns in part.dual[s].items():
            if (len(ns) == 1) != (part.jclass[f] == 2) and k > 4:
                leaves.append(f"side {s}: face {part.to_g(f)} has degree {len(ns)} but class {part.jclass[f]}")
    out["leaves_are_2_faces"] = leaves
    return out


@dataclass
class Classification:
    f_counts: dict[int, dict[str, int]]
    all_counts: dict[int, dict[str, int]]
    edge_classes: tuple[tuple[int, int], ...]
    empty_faces: int
    nonempty_faces: int


def claim1_violations(part: SidePartition) -> list[PFace]:
    return [f for f in part.faces if part.jclass[f] in (1, 2) and not part.empty[f]]


def classify(part: SidePartition, strict: bool = True) -> Classification:
    """Summarize face and edge classes; every 1- or 2-face must be empty."""
    bad = claim1_violations(part)
    if bad and strict:
        raise Claim1Violation(f"{len(bad)} non-empty faces touch the cycle, e.g. {part.to_g(bad[0])}")
    f_counts = {s: part.f_counts(s) for s in (1, 2)}
    all_counts = {s: {f"f{j}": part.count(s, j, empty_only=False) for j in (0, 1, 2)} for s in (1, 2)}
    n_empty = sum(1 for f in part.faces if part.empty[f])
    return Classification(
        f_counts=f_counts,
        all_counts=all_counts,
        edge_classes=tuple(part.edge_class(p) for p in range(part.k)),
        empty_faces=n_empty,
        nonempty_faces=len(part.faces) - n_empty,
    )


# -- branches --------------------------------------------------------------------------


def _rim_path(edges: frozenset[int], k: int) -> tuple[int, ...] | None:
    if not edges or len(edges) >= k:
        return None
    starts = [p for p in edges if (p - 1) % k not in edges]
    if len(starts) != 1:
        return None
    p0 = starts[0]
    return tuple((p0 + i) % k for i in range(len(edges) + 1))


def branch_of(part: SidePartition, side: int, face: PFace) -> Branch:
    """Walk the weak dual from a 2-face through 1-faces to the first 0-face."""
    dual = part.dual[side]
    seq = [face]
    prev: PFace | None = None
    cur = face
    while True:
        nxt = [u for u in dual[cur] if u != prev]
        if cur != face and len(dual[cur]) >= 3:
            break
        if not nxt:
            raise NoZeroFace(f"side {side} has no 0-face; branches are undefined")
        prev, cur = cur, nxt[0]
        seq.append(cur)
    rim_edges = frozenset(p for f in seq for p in part.cycle_edges_of(f))
    return Branch(side, tuple(seq), rim_edges, _rim_path(rim_edges, part.k))


def branches(part: SidePartition, side: int, strict: bool = True) -> list[Branch]:
    """One branch per 2-face of the side, ordered by the 2-face's least position."""
    if not any(part.jclass[f] == 0 for f in part.faces_on(side)):
        raise NoZeroFace(f"side {side} has no 0-face; branches are undefined")
    out = []
    for f in sorted(part.faces_on(side), key=sorted):
        if part.jclass[f] != 2:
            continue
        b = branch_of(part, side, f)
        if strict and (b.rim is None or len(b.rim) - 1 != b.r):
            raise RimNotPath(f"rim of branch at {part.to_g(f)} is not a path of length {b.r}")
        out.append(b)
    return out


def branch_violations(part: SidePartition, side: int, bs: list[Branch]) -> dict[str, list[str]]:
    """Claim-style structural checks on the branches of one side."""
    rim = []
    shape = []
    for b in bs:
        if b.rim is None or len(b.rim) - 1 != b.r:
            rim.append(f"side {side}: branch at {part.to_g(b.owner)} has rim edges "
                       f"{sorted(b.rim_edges)} for r={b.r}")
        if part.jclass[b.end] != 0 or any(part.jclass[f] != 1 for f in b.faces[1:-1]) or b.r < 2:
            shape.append(f"side {side}: branch at {part.to_g(b.owner)} has classes "
                         f"{[part.jclass[f] for f in b.faces]}")
    member: dict[PFace, int] = {}
    for b in bs:
        for f in b.faces[1:-1]:
            member[f] = member.get(f, 0) + 1
    claim4 = [f"side {side}: 1-face {part.to_g(f)} in {c} branches" for f, c in member.items() if c > 1]
    ends: dict[PFace, int] = {}
    for b in bs:
        ends[b.end] = ends.get(b.end, 0) + 1
    zero = [f"side {side}: 0-face {part.to_g(f)} ends {c} branches" for f, c in ends.items()
            if c > 2 and part.empty[f]]
    return {"claim2": rim, "branch_shape": shape, "claim4": claim4, "zero_face_branches": zero}
