"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line to the terminal.
Expected values come from ``fixtures/oracle_values.json``, frozen from the
independent oracles in ``oracle.py`` (subset DP, networkx enumeration).
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

import oracle
from tricirc.connectivity import separating_triangles, three_cuts
from tricirc.cycles import circumference, extendable_edges, good_cycle, longest_good_cycle, reroute
from tricirc.discharging import weights as W
from tricirc.discharging.sides import (
    branch_violations,
    branches,
    build_side_partition,
    claim1_violations,
    tree_violations,
)
from tricirc.discharging.verify import lower_bound, verify_bound
from tricirc.embedding import parse_rot
from tricirc.generators import double_wheel, extremal_expand


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def corpus(oracle_values):
    """Frozen n >= 11 instances with their longest good cycles and side partitions."""
    out = []
    for e in oracle_values["corpus"]:
        if e["n"] < 11:
            continue
        g = parse_rot(e["rot"])
        c = longest_good_cycle(g)
        out.append((e, g, c, build_side_partition(g, c)))
    return out


def _zero_faces(part, side):
    return [f for f in part.faces_on(side) if part.jclass[f] == 0]


def _case1_side(part, side):
    zs = _zero_faces(part, side)
    return len(zs) >= 2 or any(not part.empty[f] for f in zs)


def test_criterion_1_tight_family(oracle_values, verdict):
    bad = []
    for r, e in zip((4, 5, 6), oracle_values["extremal"]):
        base = double_wheel(r)
        g = extremal_expand(base)
        t = time.perf_counter()
        circ, _ = circumference(g)
        secs = time.perf_counter() - t
        n1 = base.n
        row = (g.n, circ, g.is_essentially_4_connected)
        want = (3 * n1 - 4, 2 * n1, True)
        if row != want or circ != e["circ"] or 3 * circ != 2 * (g.n + 4) or secs > 120:
            bad.append(f"n'={n1}: got {row}, want {want}, oracle {e['circ']}, {secs:.1f}s")
    verdict(1, not bad, "; ".join(bad) or "n = 14, 17, 20 with circ = 12, 14, 16 = 2(n+4)/3")


def test_criterion_2_theorem_bound(corpus, verdict):
    bad = []
    t = time.perf_counter()
    for e, g, c, _ in corpus:
        circ, _ = circumference(g, known=c.verts)
        b = lower_bound(g.n)
        if circ != e["circ"] or c.k != e["good"] or circ < b or c.k < b:
            bad.append(f"n={g.n} seed={e['seed']}: circ={circ}/{e['circ']} k={c.k}/{e['good']} bound={b}")
    secs = time.perf_counter() - t
    ok = not bad and len(corpus) >= 50 and secs < 1800
    verdict(2, ok, "; ".join(bad) or f"{len(corpus)} instances, 11 <= n <= 16, circ and k >= bound ({secs:.1f}s)")


def test_criterion_3_lemma1(corpus, oracle_values, verdict):
    bad = [f"n={e['n']} seed={e['seed']}" for e, g, c, _ in corpus if not oracle.is_good_cycle(oracle.to_nx(g), c.verts)]
    for e in oracle_values["extremal"]:
        g = parse_rot(e["rot"])
        if not oracle.is_good_cycle(oracle.to_nx(g), longest_good_cycle(g).verts):
            bad.append(f"extremal n={g.n}")
    verdict(3, not bad, "; ".join(bad) or f"good cycle found on all {len(corpus) + 3} instances with n >= 11")


def test_criterion_4_small_hamiltonicity(oracle_values, verdict):
    small = [e for e in oracle_values["corpus"] if 8 <= e["n"] <= 10]
    bad = []
    for e in small:
        g = parse_rot(e["rot"])
        rep = verify_bound(g)
        if not e["e4c"] or circumference(g)[0] != g.n or e["circ"] != g.n or rep.claims["hamiltonian"] != "pass":
            bad.append(f"n={g.n} seed={e['seed']}")
    sizes = sorted({e["n"] for e in small})
    verdict(4, not bad and sizes == [8, 9, 10], "; ".join(bad) or f"{len(small)} instances with n in {sizes} Hamiltonian")


def test_criterion_5_case1_ledger(corpus, verdict):
    bad = []
    seen = 0
    for e, g, c, part in corpus:
        if not (_case1_side(part, 1) and _case1_side(part, 2)):
            continue
        seen += 1
        k, n = part.k, g.n
        ledger = W.redistribute_first(part)
        W.redistribute_second(part, ledger, {b.owner: b for s in (1, 2) for b in branches(part, s)})
        s1 = sum(Fraction(w, 6) for w in ledger.w1.values())
        s2 = sum(Fraction(w, 6) for w in ledger.w2.values())
        cap = max(Fraction(w, 6) for w in ledger.w2.values())
        ef = sum(1 for f in part.faces if part.empty[f])
        identity = 2 * n - 4 == ef + 3 * (n - k)
        # 2n - 4 = ef + 3(n - k) and ef >= 3k/2 give k >= 2(n + 4)/3
        derived = 3 * k >= 2 * (n + 4) and k >= lower_bound(n)
        if not (s1 == s2 == k and cap <= Fraction(2, 3) and identity and derived and 2 * ef >= 3 * k):
            bad.append(f"n={n} seed={e['seed']}: sums {s1},{s2} k={k} cap={cap} ef={ef}")
    verdict(5, not bad and seen > 0, "; ".join(bad) or f"{seen} Case-1 instances: sums = k, w2 <= 2/3, identity exact")


def test_criterion_6_case2(corpus, verdict):
    bad = []
    seen = shortcut = 0
    for e, g, c, part in corpus:
        failing = [s for s in (1, 2) if not _case1_side(part, s)]
        if not failing:
            continue
        seen += 1
        k, n = part.k, g.n
        for i in failing:
            opp = 3 - i
            if len(_zero_faces(part, opp)) < 2:
                shortcut += 1
                if n > k + 1:
                    bad.append(f"n={n} seed={e['seed']}: shortcut n <= k+1 fails")
                continue
            ledger = W.distribute_points(part, i, strict=False)
            f = part.f_counts(opp)
            value = f["f1"] + 2 * f["f0"]
            total = sum(ledger.points.values())
            nonempty = sum(1 for x in part.faces if not part.empty[x])
            if not (2 * f["f2"] + f["f1"] == k and value >= total and value >= 4 and 2 * nonempty <= k - 8):
                bad.append(f"n={n} seed={e['seed']} side {i}: f={f} points={total} nonempty={nonempty} k={k}")
    verdict(6, not bad and seen > 0,
            "; ".join(bad) or f"{seen} Case-2 instances ({shortcut} via n <= k+1): chain, Claims 5 and 6 exact")


def test_criterion_7_structure(corpus, verdict):
    bad = []
    for e, g, c, part in corpus:
        tag = f"n={g.n} seed={e['seed']}"
        if len(g.faces) != 2 * g.n - 4:
            bad.append(f"{tag}: |F|")
        for s in (1, 2):
            dual = part.dual[s]
            if tree_violations(dual, part.k) or len(dual) != part.k - 2 or max(map(len, dual.values())) > 3:
                bad.append(f"{tag}: weak dual side {s}")
            if _zero_faces(part, s):
                v = branch_violations(part, s, branches(part, s, strict=False))
                if v["claim2"] or v["claim4"]:
                    bad.append(f"{tag}: {v['claim2'] + v['claim4']}")
        if claim1_violations(part) or extendable_edges(g, c):
            bad.append(f"{tag}: claim 1 or extendable edge")
        cuts = {x.vertices for x in three_cuts(g)}
        if cuts != {x.vertices for x in separating_triangles(g)}:
            bad.append(f"{tag}: 3-cuts differ from separating triangles")
    verdict(7, not bad, "; ".join(bad[:5]) or f"all structural properties hold on {len(corpus)} instances")


def test_criterion_8_oracle_equivalence(oracle_values, verdict):
    small = oracle_values["small"]
    bad = []
    for e in small:
        g = parse_rot(e["rot"])
        got = [circumference(g)[0], longest_good_cycle(g).k if e["good"] else 0]
        if got != e["enum"] or got != [e["circ"], e["good"]]:
            bad.append(f"n={g.n} seed={e['seed']}: {got} vs {e['enum']}")
    ok = not bad and len(small) >= 20 and max(e["n"] for e in small) <= 10
    verdict(8, ok, "; ".join(bad) or f"{len(small)} maximal planar graphs, n <= 10, match exhaustive enumeration")


def test_criterion_9_rerouting(reroute_cases, verdict):
    bad = []
    moves = set()
    for case in reroute_cases:
        g = parse_rot(case["rot"])
        c = good_cycle(g, case["cycle"])
        out = reroute(g, c, case["move"], case["start"], case["direction"], case["r"])
        part = build_side_partition(g, c)
        pos = {v: p for p, v in enumerate(c.verts)}
        gained = frozenset(pos[v] for v in case["gained"])
        on_end = any(
            gained <= b.end and part.empty[b.end]
            for s in (1, 2) if _zero_faces(part, s)
            for b in branches(part, s)
        )
        if not (out.k == c.k and oracle.is_good_cycle(oracle.to_nx(g), out.verts)
                and out.has_edge(*case["gained"]) and on_end):
            bad.append(f"n={case['n']} seed={case['seed']} move {case['move']}")
        moves.add(case["move"])
    ok = not bad and {"a", "b"} <= moves
    verdict(9, ok, "; ".join(bad) or f"{len(reroute_cases)} fixtures (moves {sorted(moves)}): same length, good, designated edge on empty end face")
