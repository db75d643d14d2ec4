"""Regenerate tests/fixtures/*.json from the independent oracles.

    python tests/freeze_fixtures.py

Instances are rebuilt from (family, n, seed); their rot text is stored so a
generator change shows up as a fixture mismatch rather than silently
shifting expectations.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracle  # noqa: E402

from tricirc.embedding import format_rot  # noqa: E402
from tricirc.generators import (  # noqa: E402
    double_wheel,
    extremal_expand,
    random_essentially_4connected_triangulation,
    random_triangulation,
)

HERE = Path(__file__).parent / "fixtures"

# rerouting configurations found by scanning the randome4c corpus
REROUTE_CASES = [
    # (n, seed, move, start position of v1, direction, r)
    (11, 0, "a", 2, 1, 2),
    (11, 1, "a", 6, 1, 3),
    (11, 2, "a", 0, -1, 4),
    (11, 2, "b", 10, 1, 3),
    (11, 15, "b", 10, 1, 4),
    (14, 20, "c", 13, 1, 4),
]


def entry(g, **meta):
    G = oracle.to_nx(g)
    circ, good = oracle.dp_longest_cycles(G)
    return {**meta, "n": g.n, "rot": format_rot(g), "circ": circ, "good": good,
            "e4c": oracle.essentially_4_connected(G)}


def main() -> None:
    HERE.mkdir(exist_ok=True)
    extremal = [entry(extremal_expand(double_wheel(r)), family="extremal", base_rim=r) for r in (4, 5, 6)]
    corpus = [
        entry(random_essentially_4connected_triangulation(n, s), family="randome4c", seed=s)
        for n in range(8, 17)
        for s in range(10 if n >= 11 else 4)
    ]
    small = []
    for n in range(4, 11):
        for s in range(4):
            e = entry(random_triangulation(n, s), family="randomtri", seed=s)
            e["enum"] = list(oracle.enum_longest_cycles(oracle.to_nx(random_triangulation(n, s))))
            assert e["enum"] == [e["circ"], e["good"]], e
            small.append(e)
    (HERE / "oracle_values.json").write_text(
        json.dumps({"extremal": extremal, "corpus": corpus, "small": small}, indent=1) + "\n"
    )

    from tricirc.cycles import longest_good_cycle

    reroutes = []
    for n, s, move, start, d, r in REROUTE_CASES:
        g = random_essentially_4connected_triangulation(n, s)
        cyc = list(longest_good_cycle(g).verts)
        k = len(cyc)

        def v(j: int) -> int:
            return cyc[(start + d * (j - 1)) % k]

        edge = sorted((v(1), v(r + 1)) if move == "a" else (v(0), v(r)))
        reroutes.append({"n": n, "seed": s, "rot": format_rot(g), "cycle": cyc, "move": move,
                         "start": start, "direction": d, "r": r, "gained": edge})
    (HERE / "reroute.json").write_text(json.dumps(reroutes, indent=1) + "\n")


if __name__ == "__main__":
    main()
