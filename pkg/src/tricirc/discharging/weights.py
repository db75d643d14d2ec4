"""Exact discharging: cycle-edge weights redistributed onto the faces of ``H``.

All amounts are integers counting sixths.  The second redistribution is
evaluated as one simultaneous batch from the first-stage weights, so no
rule sees another rule's output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import Claim5Violation, Claim6Violation, RuleAmbiguity
from .sides import Branch, PFace, SidePartition, branches

TWO_THIRDS = 4  # in sixths


@dataclass(frozen=True)
class Transfer:
    rule: str
    src: tuple[int, ...]  # cycle edge (2 positions) or face (3 positions), sorted
    dst: tuple[int, ...]
    amount: int  # sixths
    via: tuple[int, ...] = ()  # intermediate face for R7/R8


def _key(face) -> tuple[int, ...]:
    return tuple(sorted(face))


@dataclass
class WeightLedger:
    k: int
    w0: dict[int, int] = field(default_factory=dict)  # cycle edge -> sixths
    w1: dict[PFace, int] = field(default_factory=dict)
    w2: dict[PFace, int] = field(default_factory=dict)
    transfers: list[Transfer] = field(default_factory=list)
    points: dict[PFace, int] = field(default_factory=dict)
    point_log: list[tuple[str, tuple[int, ...], tuple[int, ...], int]] = field(default_factory=list)

    @staticmethod
    def as_fraction(sixths: int) -> Fraction:
        return Fraction(sixths, 6)


def w1_table(part: SidePartition, face: PFace) -> int:
    """First-stage weight of a face read off its incident edge classes."""
    j = part.jclass[face]
    if j == 0:
        return 0
    classes = sorted(part.edge_class(p) for p in part.cycle_edges_of(face))
    if j == 1:
        return {(1, 2): 4, (1, 1): 3}[classes[0]]
    return {
        ((2, 2), (2, 2)): 6,
        ((1, 2), (2, 2)): 5,
        ((1, 2), (1, 2)): 4,
    }[tuple(classes)]


def redistribute_first(part: SidePartition) -> WeightLedger:
    """Rules R1-R3: every cycle edge hands its unit weight to its two faces."""
    ledger = WeightLedger(part.k)
    w1 = {f: 0 for f in part.faces}
    for p in range(part.k):
        ledger.w0[p] = 6
        f1, f2 = part.edge_faces[p]
        j1, j2 = part.jclass[f1], part.jclass[f2]
        edge = (p, (p + 1) % part.k)
        if j1 == j2:
            rule = "R1" if j1 == 1 else "R3"
            shares = ((f1, 3), (f2, 3))
        else:
            one, two = (f1, f2) if j1 == 1 else (f2, f1)
            rule = "R2"
            shares = ((one, 4), (two, 2))
        for face, amount in shares:
            w1[face] += amount
            ledger.transfers.append(Transfer(rule, tuple(sorted(edge)), _key(face), amount))
    ledger.w1 = w1
    return ledger


def _other(side: int) -> int:
    return 3 - side


def _second_stage_transfers(
    part: SidePartition, ledger: WeightLedger, branch_map: dict[PFace, Branch]
) -> list[Transfer]:
    k = part.k
    out: list[Transfer] = []
    for phi in sorted(branch_map, key=sorted):
        if part.jclass[phi] != 2 or ledger.w1[phi] <= TWO_THIRDS:
            continue
        b = branch_map[phi]
        side = b.side
        opp = _other(side)
        src = _key(phi)
        end = b.end
        r = b.r
        if part.empty[end] and r <= 3:
            out.append(Transfer("R4", src, _key(end), ledger.w1[phi] - TWO_THIRDS))
        for f in b.faces[1:-1]:
            (p,) = part.cycle_edges_of(f)
            if part.jclass[f] == 1 and part.edge_class(p) == (1, 1):
                out.append(Transfer("R5", src, _key(f), 1))
        if part.empty[end] and r >= 4:
            out.append(Transfer("R6", src, _key(end), 1))
        for p in part.cycle_edges_of(phi):
            alpha = part.face_at(p, opp)
            if part.jclass[alpha] != 2:
                continue
            (alpha2,) = part.dual[opp][alpha]
            has_12 = any(part.edge_class(q) == (1, 2) for q in part.cycle_edges_of(alpha))
            if has_12 and part.jclass[alpha2] == 0 and part.empty[alpha2]:
                out.append(Transfer("R7", src, _key(alpha2), 1, _key(alpha)))
        for beta in part.faces_on(opp):
            if part.jclass[beta] != 2 or len(beta & phi) != 1:
                continue
            if not all(part.edge_class(q) == (1, 2) for q in part.cycle_edges_of(beta)):
                continue
            (beta2,) = part.dual[opp][beta]
            if part.jclass[beta2] == 0 and part.empty[beta2]:
                out.append(Transfer("R8", src, _key(beta2), 1, _key(beta)))
    return out


def redistribute_second(
    part: SidePartition, ledger: WeightLedger, branch_map: dict[PFace, Branch] | None = None
) -> WeightLedger:
    """Rules R4-R8, applied to every 2-face whose first-stage weight exceeds 2/3."""
    if branch_map is None:
        branch_map = {b.owner: b for s in (1, 2) for b in branches(part, s)}
    moves = _second_stage_transfers(part, ledger, branch_map)
    dup = [t for t, c in Counter(moves).items() if c > 1]
    if dup:
        raise RuleAmbiguity(f"transfer {dup[0]} would be applied twice")
    by_key = {_key(f): f for f in part.faces}
    w2 = {f: w for f, w in ledger.w1.items() if part.empty[f]}
    for t in moves:
        w2[by_key[t.src]] -= t.amount
        dst = by_key[t.dst]
        if dst not in w2:
            raise RuleAmbiguity(f"{t.rule} sends weight to the non-empty face {t.dst}")
        w2[dst] += t.amount
    ledger.w2 = w2
    ledger.transfers.extend(moves)
    return ledger


def replay(part: SidePartition, ledger: WeightLedger) -> dict[PFace, int]:
    """Recompute second-stage weights from ``w1`` and the logged R4-R8 transfers."""
    by_key = {_key(f): f for f in part.faces}
    out = {f: w for f, w in ledger.w1.items() if part.empty[f]}
    for t in ledger.transfers:
        if t.rule in ("R1", "R2", "R3"):
            continue
        out[by_key[t.src]] = out.get(by_key[t.src], 0) - t.amount
        out[by_key[t.dst]] = out.get(by_key[t.dst], 0) + t.amount
    return out


# -- points -------------------------------------------------------------------------


def distribute_points(
    part: SidePartition, side: int, ledger: WeightLedger | None = None, strict: bool = True
) -> WeightLedger:
    """Rules P1-P4: each 2-face of ``side`` hands points to faces across the cycle.

    Needs at least one 0-face on the opposite side (for its branches).
    """
    ledger = ledger or WeightLedger(part.k)
    opp = _other(side)
    bmap = {b.owner: b for b in branches(part, opp, strict=False)}
    points: dict[PFace, int] = {f: 0 for f in part.faces_on(opp)}
    for alpha in sorted(part.faces_on(side), key=sorted):
        if part.jclass[alpha] != 2:
            continue
        across = [part.face_at(p, opp) for p in part.cycle_edges_of(alpha)]
        twos = [f for f in across if part.jclass[f] == 2]
        ones = [f for f in across if part.jclass[f] == 1]
        if len(twos) == 2:
            rule, gets = "P1", [bmap[twos[0]].end, bmap[twos[1]].end]
        elif len(ones) == 2:
            rule, gets = "P2", ones
        elif ones[0] in bmap[twos[0]].faces:
            rule, gets = "P4", ones
        else:
            rule, gets = "P3", [bmap[twos[0]].end, ones[0]]
        for f in gets:
            points[f] += 1
            ledger.point_log.append((rule, _key(alpha), _key(f), 1))
    ledger.points = points
    if strict:
        problems = claim5_violations(part, side, ledger)
        if problems:
            raise Claim5Violation("; ".join(problems))
        if claim6_value(part, side) < 4:
            raise Claim6Violation(f"f1 + 2 f0 = {claim6_value(part, side)} < 4 on side {opp}")
    return ledger


def point_bound_violations(part: SidePartition, side: int, ledger: WeightLedger) -> list[str]:
    """Per-face bounds behind the point count: 1-faces carry at most 1 point,
    0-faces at most 2, and only empty faces carry any."""
    problems = []
    for f, p in ledger.points.items():
        j = part.jclass[f]
        if j == 1 and p > 1:
            problems.append(f"1-face {part.to_g(f)} got {p} points")
        if j == 0 and p > 2:
            problems.append(f"0-face {part.to_g(f)} got {p} points")
        if p and not part.empty[f]:
            problems.append(f"non-empty face {part.to_g(f)} got {p} points")
        if j == 2 and p:
            problems.append(f"2-face {part.to_g(f)} got {p} points")
    return problems


def claim5_violations(part: SidePartition, side: int, ledger: WeightLedger) -> list[str]:
    """The point total on the far side is at most ``f1 + 2 f0`` there."""
    total = sum(ledger.points.values())
    value = claim6_value(part, side)
    if value < total:
        return [f"f1 + 2 f0 = {value} < {total} points on side {_other(side)}"]
    return []


def claim6_value(part: SidePartition, side: int) -> int:
    counts = part.f_counts(_other(side))
    return counts["f1"] + 2 * counts["f0"]
