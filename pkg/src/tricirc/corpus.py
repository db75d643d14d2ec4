"""Persistent instance corpora and batch verification.

A corpus is a directory of rot files plus ``manifest.json``.  Batch runs
emit one CSV row per manifest entry, in manifest order.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .embedding import Embedding, read_rot, write_rot
from .errors import PreconditionFailed, Timeout, TricircError
from .generators import (
    double_wheel,
    extremal_expand,
    random_4connected_triangulation,
    random_essentially_4connected_triangulation,
)

log = logging.getLogger(__name__)

MANIFEST_SCHEMA = "tricirc-corpus/1"
CSV_SCHEMA = "tricirc-batch/1"
CSV_COLUMNS = ("n", "k", "bound", "case", "all_claims_pass", "circ", "runtime_ms", "seed")
FAMILIES = ("doublewheel", "random4c", "randome4c", "extremal")

# batch exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3
EXIT_CLAIM_FAILED = 4


def generate(family: str, n: int, seed: int | None = None) -> Embedding:
    """Build one instance with ``n`` vertices.

    ``extremal`` needs ``n = 3n' - 4`` and uses the double wheel on ``n'``
    vertices as base.
    """
    if family == "doublewheel":
        return double_wheel(n - 2)
    if family == "random4c":
        return random_4connected_triangulation(n, seed or 0)
    if family == "randome4c":
        return random_essentially_4connected_triangulation(n, seed or 0)
    if family == "extremal":
        if (n + 4) % 3:
            raise ValueError(f"extremal instances have n = 3n' - 4; {n} is not of that form")
        return extremal_expand(double_wheel((n + 4) // 3 - 2))
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


@dataclass
class Instance:
    id: str
    file: str
    family: str
    n: int
    seed: int | None = None
    params: dict[str, Any] = field(default_factory=dict)


@dataclass
class Manifest:
    instances: list[Instance] = field(default_factory=list)
    schema: str = MANIFEST_SCHEMA

    def to_json(self) -> str:
        return json.dumps({"schema": self.schema, "instances": [asdict(i) for i in self.instances]}, indent=2)

    @classmethod
    def load(cls, path: str | Path) -> Manifest:
        data = json.loads(Path(path).read_text())
        if data.get("schema") != MANIFEST_SCHEMA:
            raise ValueError(f"unsupported manifest schema {data.get('schema')!r}")
        return cls([Instance(**i) for i in data["instances"]])


def build_corpus(
    directory: str | Path, family: str, sizes: Iterable[int], seeds: Iterable[int]
) -> Manifest:
    """Generate instances for every (size, seed), write them and the manifest."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    seeds = list(seeds)
    manifest = Manifest()
    for n in sizes:
        for seed in seeds if family in ("random4c", "randome4c") else [None]:
            iid = f"{family}-n{n}" + ("" if seed is None else f"-s{seed}")
            write_rot(generate(family, n, seed), root / f"{iid}.rot")
            manifest.instances.append(Instance(iid, f"{iid}.rot", family, n, seed))
    (root / "manifest.json").write_text(manifest.to_json() + "\n")
    return manifest


@dataclass
class Row:
    id: str
    n: int
    k: int | None
    bound: int | None
    case: str | None
    status: str  # true, false, timeout or error
    circ: int | None
    runtime_ms: int
    seed: int | None
    reason: str = ""

    def csv_values(self) -> list[Any]:
        vals = [self.n, self.k, self.bound, self.case, self.status, self.circ, self.runtime_ms, self.seed]
        return ["" if v is None else v for v in vals]


def verify_instance(path: str | Path, inst: Instance, budget_secs: float | None) -> Row:
    from .discharging.verify import lower_bound, verify_bound

    start = time.perf_counter()

    def row(status: str, rep=None, reason: str = "") -> Row:
        ms = round((time.perf_counter() - start) * 1000)
        if rep is None:
            return Row(inst.id, inst.n, None, None, None, status, None, ms, inst.seed, reason)
        return Row(inst.id, rep.n, rep.k, rep.bound, rep.case, status, rep.circ, ms, inst.seed, reason)

    try:
        g = read_rot(path)
        rep = verify_bound(g, budget_secs)
    except Timeout as exc:
        return row("timeout", reason=str(exc))
    except (PreconditionFailed, TricircError, OSError, ValueError) as exc:
        log.error("instance %s: %s", inst.id, exc)
        r = row("error", reason=f"{type(exc).__name__}: {exc}")
        r.bound = lower_bound(inst.n)
        return r
    failed = sorted(c for c, s in rep.claims.items() if s == "fail")
    return row("true" if rep.all_pass else "false", rep, ", ".join(failed))


def _verify_job(args: tuple[str, Instance, float | None]) -> Row:
    return verify_instance(*args)


def run_batch(
    manifest: Manifest, root: str | Path, jobs: int = 1, budget_secs: float | None = None
) -> list[Row]:
    """Verify every manifest instance; rows come back in manifest order."""
    jobs_args = [(str(Path(root) / i.file), i, budget_secs) for i in manifest.instances]
    if jobs <= 1 or len(jobs_args) <= 1:
        return [_verify_job(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, jobs_args))


def format_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema: {CSV_SCHEMA}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_values())
    return buf.getvalue()


def batch_exit_code(rows: list[Row]) -> int:
    statuses = {r.status for r in rows}
    if "false" in statuses:
        return EXIT_CLAIM_FAILED
    if "error" in statuses:
        return EXIT_ERROR
    if "timeout" in statuses:
        return EXIT_TIMEOUT
    return EXIT_OK
