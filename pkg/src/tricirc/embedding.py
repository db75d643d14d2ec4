"""Combinatorial planar embeddings stored as rotation systems.

Every vertex carries the counterclockwise cyclic order of its neighbors.
Faces are traced by the rule ``(u, v) -> (v, succ_v(u))`` where ``succ_v``
is the next neighbor counterclockwise around ``v``; with this rule each face
lies to the right of its darts, so traced boundaries run clockwise.
Planarity of a rotation system is certified by Euler's relation on the
traced faces.

Vertices are dense integers ``0 .. n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    InconsistentRotation,
    NotAFace,
    NotIndependent,
    NotPlanarGenus,
    RotFormatError,
    WrongDegree,
)

Face = tuple[int, ...]


class Embedding:
    """An immutable, validated rotation system of a connected simple planar graph."""

    def __init__(self, n: int, rot: Sequence[Sequence[int]]):
        rot = tuple(tuple(int(u) for u in r) for r in rot)
        if len(rot) != n:
            raise InconsistentRotation(f"expected {n} rotation lists, got {len(rot)}")
        pos: list[dict[int, int]] = []
        for v, r in enumerate(rot):
            idx = {}
            for i, u in enumerate(r):
                if u == v:
                    raise InconsistentRotation(f"loop at vertex {v}")
                if not 0 <= u < n:
                    raise InconsistentRotation(f"vertex {v} lists unknown neighbor {u}")
                if u in idx:
                    raise InconsistentRotation(f"vertex {v} lists {u} twice")
                idx[u] = i
            pos.append(idx)
        for v in range(n):
            for u in rot[v]:
                if v not in pos[u]:
                    raise InconsistentRotation(f"{v} lists {u} but {u} does not list {v}")
        self.n = n
        self.rot = rot
        self._pos = tuple(pos)
        if not _is_connected(n, rot):
            raise Disconnected(f"graph on {n} vertices is not connected")
        self.faces, self._dart_face = self._trace()
        if n - self.m + len(self.faces) != 2:
            raise NotPlanarGenus(
                f"n - m + f = {n} - {self.m} + {len(self.faces)} != 2"
            )

    # -- construction helpers -------------------------------------------------

    def _trace(self) -> tuple[tuple[Face, ...], dict[tuple[int, int], int]]:
        if self.n == 1:
            return ((0,),), {}
        dart_face: dict[tuple[int, int], int] = {}
        faces: list[Face] = []
        for v in range(self.n):
            for u in self.rot[v]:
                if (v, u) in dart_face:
                    continue
                fid = len(faces)
                boundary = []
                a, b = v, u
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = fid
                    boundary.append(a)
                    a, b = b, self.succ(b, a)
                faces.append(tuple(boundary))
        return tuple(faces), dart_face

    # -- basic queries ------------------------------------------------------

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rot)

    @cached_property
    def nbr_mask(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set iff ``u`` adjacent)."""
        out = []
        for r in self.rot:
            mask = 0
            for u in r:
                mask |= 1 << u
            out.append(mask)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.rot[u]) if u < v]

    def succ(self, v: int, u: int) -> int:
        """Neighbor of ``v`` following ``u`` counterclockwise."""
        r = self.rot[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def pred(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[(self._pos[v][u] - 1) % len(r)]

    def face_of_dart(self, u: int, v: int) -> int:
        """Index into :attr:`faces` of the face to the right of dart ``u -> v``."""
        return self._dart_face[(u, v)]

    @cached_property
    def face_sets(self) -> dict[frozenset[int], int]:
        return {frozenset(f): i for i, f in enumerate(self.faces)}

    def is_face(self, t: Iterable[int]) -> bool:
        return frozenset(t) in self.face_sets

    def find_face(self, t: Iterable[int]) -> Face:
        key = frozenset(t)
        try:
            return self.faces[self.face_sets[key]]
        except KeyError:
            raise NotAFace(f"{sorted(key)} is not a face") from None

    @property
    def is_triangulation(self) -> bool:
        return self.n >= 3 and all(len(f) == 3 for f in self.faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.n == other.n and self.rot == other.rot

    def __hash__(self) -> int:
        return hash((self.n, self.rot))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m}, faces={len(self.faces)})"


class Triangulation(Embedding):
    """An embedding in which every face is a triangle (a maximal planar graph)."""

    def __init__(self, n: int, rot: Sequence[Sequence[int]]):
        super().__init__(n, rot)
        if not self.is_triangulation:
            bad = next((f for f in self.faces if len(f) != 3), None)
            raise ValueError(f"not a triangulation: face {bad}")

    @cached_property
    def is_3_connected(self) -> bool:
        from .connectivity import connectivity_at_least

        return connectivity_at_least(self, 3)

    @cached_property
    def is_4_connected(self) -> bool:
        from .connectivity import connectivity_at_least

        return connectivity_at_least(self, 4)

    @cached_property
    def is_essentially_4_connected(self) -> bool:
        from .connectivity import is_essentially_4_connected

        return is_essentially_4_connected(self)


def _is_connected(n: int, rot: Sequence[Sequence[int]]) -> bool:
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def from_rotation(n: int, rot: Sequence[Sequence[int]]) -> Embedding:
    """Validate a rotation system; all-triangle results come back as :class:`Triangulation`."""
    emb = Embedding(n, rot)
    if emb.is_triangulation:
        return Triangulation(n, emb.rot)
    return emb


def as_triangulation(emb: Embedding) -> Triangulation:
    if isinstance(emb, Triangulation):
        return emb
    return Triangulation(emb.n, emb.rot)


def is_maximal_planar(emb: Embedding) -> bool:
    return emb.is_triangulation


def is_face(emb: Embedding, t: Iterable[int]) -> bool:
    return emb.is_face(t)


@dataclass(frozen=True)
class Reduction:
    """Result of deleting an independent set of degree-3 vertices.

    ``nonempty`` holds the faces of ``graph`` (new ids) that replaced a deleted
    vertex; ``filled_by`` maps each of them to the deleted vertex's old id.
    """

    graph: Triangulation
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]
    nonempty: frozenset[frozenset[int]]
    filled_by: dict[frozenset[int], int]

    def is_empty_face(self, t: Iterable[int]) -> bool:
        return frozenset(t) not in self.nonempty


def delete_independent_deg3(tri: Triangulation, removed: Iterable[int]) -> Reduction:
    removed = frozenset(removed)
    for x in removed:
        if tri.degree(x) != 3:
            raise WrongDegree(f"vertex {x} has degree {tri.degree(x)}, expected 3")
        hit = tri.adj[x] & removed
        if hit:
            raise NotIndependent(f"vertices {x} and {min(hit)} are adjacent")
    keep = [v for v in range(tri.n) if v not in removed]
    old_to_new = {v: i for i, v in enumerate(keep)}
    rot = [[old_to_new[u] for u in tri.rot[v] if u not in removed] for v in keep]
    graph = as_triangulation(from_rotation(len(keep), rot))
    filled = {}
    for x in sorted(removed):
        face = frozenset(old_to_new[u] for u in tri.rot[x])
        filled[face] = x
    for face in filled:
        if face not in graph.face_sets:
            raise RuntimeError(f"deleted vertex did not leave triangle {sorted(face)}")
    return Reduction(graph, old_to_new, tuple(keep), frozenset(filled), filled)


def insert_vertex(tri: Triangulation, face: Iterable[int]) -> Triangulation:
    """Add a new vertex ``n`` inside ``face`` joined to its three corners."""
    a, b, c = tri.find_face(face)
    x = tri.n
    rot = [list(r) for r in tri.rot]
    # traced a->b->c means c follows a around b, etc.; slot x in between
    for v, before in ((b, a), (c, b), (a, c)):
        r = rot[v]
        r.insert(r.index(before) + 1, x)
    rot.append([c, b, a])
    return as_triangulation(from_rotation(x + 1, rot))


# -- "rot" text format ----------------------------------------------------------


def format_rot(emb: Embedding) -> str:
    lines = [f"{emb.n} {emb.m}"]
    for v, r in enumerate(emb.rot):
        lines.append(f"{v}: " + " ".join(str(u) for u in r))
    return "\n".join(lines) + "\n"


def parse_rot(text: str) -> Embedding:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise RotFormatError("empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise RotFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise RotFormatError(f"non-integer header {rows[0]!r}") from None
    if len(rows) - 1 != n:
        raise RotFormatError(f"expected {n} vertex lines, got {len(rows) - 1}")
    rot: list[list[int] | None] = [None] * n
    for line in rows[1:]:
        label, sep, rest = line.partition(":")
        if not sep:
            raise RotFormatError(f"missing ':' in {line!r}")
        try:
            v = int(label)
            nbrs = [int(tok) for tok in rest.split()]
        except ValueError:
            raise RotFormatError(f"non-integer token in {line!r}") from None
        if not 0 <= v < n or rot[v] is not None:
            raise RotFormatError(f"bad or repeated vertex id {v}")
        rot[v] = nbrs
    emb = from_rotation(n, rot)  # type: ignore[arg-type]
    if emb.m != m:
        raise RotFormatError(f"header declares m={m} but lists give m={emb.m}")
    return emb


def read_rot(path: str | Path) -> Embedding:
    return parse_rot(Path(path).read_text())


def write_rot(emb: Embedding, path: str | Path) -> None:
    Path(path).write_text(format_rot(emb))
