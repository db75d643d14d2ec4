"""Triangulation families: double wheels, random walks over diagonal flips,
face stacking and the tight extremal construction.

All randomized generators take an integer seed and are fully deterministic
for a given ``(parameters, seed)``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .connectivity import is_essentially_4_connected
from .embedding import Triangulation, as_triangulation, from_rotation, insert_vertex
from .errors import NotFourConnected, TooSmall, Unsatisfiable

log = logging.getLogger(__name__)


@dataclass
class GeneratorConfig:
    flips_per_vertex: int = 10
    retry_budget: int = 1000
    # separating triangles tolerated in intermediate states of the 4-connected walk
    walk_separating_slack: int = 1


DEFAULT_CONFIG = GeneratorConfig()


def double_wheel(r: int) -> Triangulation:
    """Cycle ``0..r-1`` plus apexes ``r`` (inside) and ``r+1`` (outside)."""
    if r < 4:
        raise TooSmall(f"double wheel needs a rim of length >= 4, got {r}")
    north, south = r, r + 1
    rot: list[list[int]] = []
    for i in range(r):
        rot.append([south, (i + 1) % r, north, (i - 1) % r])
    rot.append(list(range(r)))
    rot.append(list(reversed(range(r))))
    return as_triangulation(from_rotation(r + 2, rot))


def octahedron() -> Triangulation:
    return double_wheel(4)


def tetrahedron() -> Triangulation:
    # vertex 3 at the center of triangle 0,1,2 drawn counterclockwise
    return as_triangulation(from_rotation(4, [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]]))


def stack_vertex(tri: Triangulation, face) -> Triangulation:
    """Insert a degree-3 vertex (id ``tri.n``) into ``face``."""
    return insert_vertex(tri, face)


def stack_faces(tri: Triangulation, faces) -> Triangulation:
    """Stack one vertex into each of ``faces`` (faces of ``tri``), in order."""
    out = tri
    for f in faces:
        out = insert_vertex(out, f)
    return out


def extremal_expand(base: Triangulation) -> Triangulation:
    """Stack a vertex into every face of a 4-connected triangulation.

    The inserted vertices get ids ``n' .. 3n'-5`` in the order of ``base.faces``.
    """
    if base.n < 6:
        raise TooSmall(f"base needs >= 6 vertices, got {base.n}")
    if not base.is_4_connected:
        raise NotFourConnected("extremal_expand needs a 4-connected base")
    return stack_faces(base, list(base.faces))


# -- flips ---------------------------------------------------------------------


def _flip_target(rot: list[list[int]], u: int, v: int) -> tuple[int, int]:
    """Opposite corners ``(w, x)`` of the faces ``u v w`` and ``v u x``."""
    ru, rv = rot[u], rot[v]
    # with face-on-the-right tracing: face (u, v, w) has w = succ_v(u)
    w = rv[(rv.index(u) + 1) % len(rv)]
    x = ru[(ru.index(v) + 1) % len(ru)]
    return w, x


def _apply_flip(rot: list[list[int]], u: int, v: int, w: int, x: int) -> None:
    rot[u].remove(v)
    rot[v].remove(u)
    rw = rot[w]
    rw.insert(rw.index(v) + 1, x)
    rx = rot[x]
    rx.insert(rx.index(u) + 1, w)


def _separating_delta(adj: list[set[int]], u: int, v: int, w: int, x: int) -> int:
    """Change in the number of separating triangles when ``uv`` flips to ``wx``."""
    created = len(adj[w] & adj[x] - {u, v})
    destroyed = len(adj[u] & adj[v] - {w, x})
    return created - destroyed


def _random_walk(
    tri: Triangulation,
    steps: int,
    rng: random.Random,
    max_separating: int | None = None,
    budget: int = 0,
) -> Triangulation:
    """Random flip walk of ``steps`` proposals.

    With ``max_separating`` set, states never carry more than that many
    separating triangles, and after ``steps`` proposals the walk keeps going
    (up to ``budget`` more) until it sits on a state with none.
    """
    rot = [list(r) for r in tri.rot]
    adj = [set(r) for r in rot]
    separating = 0
    if max_separating is not None:
        from .connectivity import separating_triangles

        separating = len(separating_triangles(tri))
    proposals = 0
    while True:
        if proposals >= steps and (max_separating is None or separating == 0):
            break
        if proposals >= steps + budget:
            raise Unsatisfiable(f"flip walk found no 4-connected state in {budget} extra steps")
        proposals += 1
        u = rng.randrange(len(rot))
        v = rng.choice(sorted(adj[u]))
        w, x = _flip_target(rot, u, v)
        if x in adj[w] or len(adj[u]) <= 3 or len(adj[v]) <= 3:
            continue
        if max_separating is not None:
            delta = _separating_delta(adj, u, v, w, x)
            if separating + delta > max_separating:
                continue
            separating += delta
        _apply_flip(rot, u, v, w, x)
        adj[u].discard(v)
        adj[v].discard(u)
        adj[w].add(x)
        adj[x].add(w)
    return as_triangulation(from_rotation(len(rot), rot))


def flip(tri: Triangulation, u: int, v: int) -> Triangulation:
    """Replace edge ``uv`` by the other diagonal of its two incident faces."""
    rot = [list(r) for r in tri.rot]
    w, x = _flip_target(rot, u, v)
    if tri.has_edge(w, x):
        raise ValueError(f"flipping {u}{v} would duplicate edge {w}{x}")
    _apply_flip(rot, u, v, w, x)
    return as_triangulation(from_rotation(tri.n, rot))


def random_4connected_triangulation(
    n: int, seed: int, config: GeneratorConfig = DEFAULT_CONFIG
) -> Triangulation:
    """Flip random walk from ``double_wheel(n - 2)``.

    Every flip out of a double wheel creates a separating triangle, so the
    walk is allowed through states with at most ``walk_separating_slack``
    of them; only a state with none is returned.
    """
    if n < 6:
        raise TooSmall(f"4-connected triangulations need >= 6 vertices, got {n}")
    rng = random.Random(f"random4c:{n}:{seed}")
    tri = _random_walk(
        double_wheel(n - 2),
        config.flips_per_vertex * n,
        rng,
        max_separating=config.walk_separating_slack,
        budget=config.retry_budget * n,
    )
    assert tri.is_4_connected
    return tri


def random_triangulation(n: int, seed: int, config: GeneratorConfig = DEFAULT_CONFIG) -> Triangulation:
    """Any simple triangulation: random stacking on the tetrahedron, then random flips."""
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    rng = random.Random(f"randomtri:{n}:{seed}")
    tri = tetrahedron()
    while tri.n < n:
        tri = insert_vertex(tri, rng.choice(tri.faces))
    return _random_walk(tri, config.flips_per_vertex * n, rng)


def random_essentially_4connected_triangulation(
    n: int, seed: int, config: GeneratorConfig = DEFAULT_CONFIG
) -> Triangulation:
    """Random 4-connected base of size ``n'`` with ``n - n'`` vertices stacked into distinct faces.

    Each candidate is re-checked with :func:`is_essentially_4_connected` and
    rejected on failure.
    """
    if n < 6:
        raise TooSmall(f"need n >= 6, got {n}")
    rng = random.Random(f"randome4c:{n}:{seed}")
    lo = max(6, -(-(n + 4) // 3))
    for attempt in range(config.retry_budget):
        n_base = rng.randint(lo, n)
        base = random_4connected_triangulation(n_base, rng.randrange(2**31), config)
        faces = rng.sample(list(base.faces), n - n_base)
        tri = stack_faces(base, faces)
        if is_essentially_4_connected(tri):
            return tri
        log.debug("randome4c n=%d seed=%d: attempt %d rejected", n, seed, attempt)
    raise Unsatisfiable(f"no essentially 4-connected triangulation on {n} vertices found")
