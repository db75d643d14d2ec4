"""Independent reference implementations used to freeze and cross-check values.

Nothing here shares code with the package beyond reading adjacency.
"""

from __future__ import annotations

import networkx as nx


def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def _good_mask(G: nx.Graph, inside: int) -> bool:
    out = [v for v in G if not inside >> v & 1]
    return all(G.degree(v) == 3 for v in out) and not any(G.has_edge(a, b) for a in out for b in out if a < b)


def dp_longest_cycles(G: nx.Graph) -> tuple[int, int]:
    """(circumference, longest good cycle length) by subset dynamic programming.

    For each least vertex ``s``, ``reach[mask]`` holds the endpoints of paths
    from ``s`` through exactly the vertices of ``mask`` (all greater than ``s``).
    """
    n = G.number_of_nodes()
    nbr = [sum(1 << u for u in G[v]) for v in range(n)]
    cyc_masks: set[int] = set()
    for s in range(n):
        hi = ((1 << n) - 1) ^ ((1 << (s + 1)) - 1)
        reach: dict[int, int] = {}
        for u in range(s + 1, n):
            if nbr[s] >> u & 1:
                reach[1 << u] = reach.get(1 << u, 0) | 1 << u
        # masks only grow, so processing by popcount is a valid order
        layer = dict(reach)
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                if ends & nbr[s] and bin(mask).count("1") >= 2:
                    cyc_masks.add(mask | 1 << s)
                e = ends
                while e:
                    low = e & -e
                    v = low.bit_length() - 1
                    e ^= low
                    free = nbr[v] & hi & ~mask
                    while free:
                        lu = free & -free
                        free ^= lu
                        nxt[mask | lu] = nxt.get(mask | lu, 0) | lu
            layer = nxt
    circ = max((bin(m).count("1") for m in cyc_masks), default=0)
    good = max((bin(m).count("1") for m in cyc_masks if _good_mask(G, m)), default=0)
    return circ, good


def enum_longest_cycles(G: nx.Graph) -> tuple[int, int]:
    """Same pair by listing every simple cycle (small graphs only)."""
    circ = good = 0
    for cyc in nx.simple_cycles(G):
        if len(cyc) < 3:
            continue
        circ = max(circ, len(cyc))
        if len(cyc) > good and _good_mask(G, sum(1 << v for v in cyc)):
            good = len(cyc)
    return circ, good


def is_good_cycle(G: nx.Graph, cyc) -> bool:
    k = len(cyc)
    return (
        len(set(cyc)) == k
        and all(G.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
        and _good_mask(G, sum(1 << v for v in cyc))
    )


def essentially_4_connected(G: nx.Graph) -> bool:
    """3-connected and every 3-cut isolates a single vertex."""
    from itertools import combinations

    if nx.node_connectivity(G) < 3:
        return False
    for cut in combinations(G, 3):
        H = G.subgraph(set(G) - set(cut))
        comps = list(nx.connected_components(H))
        if len(comps) > 1 and min(len(c) for c in comps) > 1:
            return False
    return True
