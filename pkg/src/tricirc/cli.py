"""``tricirc`` command line: gen, check, circ, verify, batch."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import corpus
from .connectivity import (
    connectivity_at_least,
    is_essentially_4_connected,
    nontrivial_cuts,
    separating_triangles,
)
from .cycles import circumference, longest_good_cycle
from .embedding import as_triangulation, format_rot, read_rot
from .errors import (
    NoGoodCycle,
    NotFourConnected,
    PreconditionFailed,
    RotFormatError,
    Timeout,
    TooSmall,
    TricircError,
)
from .generators import extremal_expand

log = logging.getLogger("tricirc")


class UsageError(Exception):
    pass


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--jobs", type=int, default=d if suppress else 1, help="worker processes for batch")
    p.add_argument("--budget-secs", type=float, default=d, help="time budget per exact search")
    p.add_argument("--seed", type=int, default=d if suppress else 0, help="seed for random families")
    p.add_argument("-v", "--verbose", action="count", default=d if suppress else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tricirc", description=__doc__)
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a triangulation")
    g.add_argument("--family", required=True, choices=corpus.FAMILIES)
    g.add_argument("--n", type=int, help="number of vertices of the output")
    g.add_argument("--base", help="rot file of the 4-connected base (extremal family)")
    g.add_argument("-o", "--output", default="-")

    c = sub.add_parser("check", parents=[common], help="report maximality and connectivity")
    c.add_argument("-i", "--input", required=True)

    ci = sub.add_parser("circ", parents=[common], help="exact circumference")
    ci.add_argument("-i", "--input", required=True)
    ci.add_argument("--good", action="store_true", help="longest good cycle instead")

    v = sub.add_parser("verify", parents=[common], help="check the bound and its proof on one instance")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--all-longest-good", action="store_true",
                   help="if the first longest good cycle fails a check, try all of them")
    v.add_argument("--json", help="write the JSON report here ('-' for stdout)")

    b = sub.add_parser("batch", parents=[common], help="verify a corpus, one CSV row per instance")
    b.add_argument("--manifest", help="existing corpus manifest")
    b.add_argument("--family", choices=corpus.FAMILIES, help="generate a corpus of this family")
    b.add_argument("--n-min", type=int)
    b.add_argument("--n-max", type=int)
    b.add_argument("--seeds", type=int, default=1, help="seeds 0..N-1 per size (random families)")
    b.add_argument("--corpus-dir", help="where a generated corpus is written")
    b.add_argument("-o", "--output", default="-")
    return parser


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def cmd_gen(args) -> int:
    if args.family == "extremal" and args.base:
        try:
            base = as_triangulation(read_rot(args.base))
        except (RotFormatError, OSError, ValueError) as exc:
            raise UsageError(f"bad base: {exc}") from None
        try:
            g = extremal_expand(base)
        except (TooSmall, NotFourConnected) as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.n is None:
            raise UsageError("--n is required (or --base for the extremal family)")
        try:
            g = corpus.generate(args.family, args.n, args.seed)
        except TooSmall as exc:
            raise UsageError(str(exc)) from None
        except TricircError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(format_rot(g), args.output)
    return 0


def cmd_check(args) -> int:
    g = read_rot(args.input)
    out = [f"n={g.n} m={g.m} faces={len(g.faces)}"]
    if not g.is_triangulation:
        out.append("maximal planar: no")
        print("\n".join(out))
        return 0
    tri = as_triangulation(g)
    out.append("maximal planar: yes")
    if g.n < 4 or not connectivity_at_least(tri, 3):
        out.append("NOT 3-connected")
        print("\n".join(out))
        return 0
    four = tri.is_4_connected
    ess = is_essentially_4_connected(tri)
    sep = len(separating_triangles(tri)) if g.n >= 5 else 0
    out.append(
        f"{'4-connected' if four else '3-connected, not 4-connected'}, "
        f"{'essentially 4-connected' if ess else 'NOT essentially 4-connected'}, "
        f"{sep} separating triangles"
    )
    if not ess:
        cut = nontrivial_cuts(tri)[0]
        out.append("witness cut: " + " ".join(map(str, cut.sorted_vertices())))
    print("\n".join(out))
    return 0


def cmd_circ(args) -> int:
    g = read_rot(args.input)
    if args.good:
        c = longest_good_cycle(g, args.budget_secs)
        print(f"longest good cycle: {c.k}")
        print("cycle: " + " ".join(map(str, c.verts)))
        print("outside: " + " ".join(map(str, sorted(c.outside))))
    else:
        length, cyc = circumference(g, args.budget_secs)
        print(f"circumference: {length}")
        print("cycle: " + " ".join(map(str, cyc)))
    return 0


def cmd_verify(args) -> int:
    from .discharging.verify import verify_bound

    g = read_rot(args.input)
    rep = verify_bound(g, args.budget_secs, all_longest_good=args.all_longest_good)
    if args.json:
        _emit(rep.to_json(indent=2) + "\n", args.json)
    if args.json != "-":
        print(rep.summary())
    return 0 if rep.all_pass else corpus.EXIT_CLAIM_FAILED


def cmd_batch(args) -> int:
    if args.manifest:
        manifest = corpus.Manifest.load(args.manifest)
        root = Path(args.manifest).parent
    elif args.family:
        if args.n_min is None or args.corpus_dir is None:
            raise UsageError("--family needs --n-min and --corpus-dir")
        n_max = args.n_max if args.n_max is not None else args.n_min
        seeds = range(args.seed, args.seed + args.seeds)
        manifest = corpus.build_corpus(args.corpus_dir, args.family, range(args.n_min, n_max + 1), seeds)
        root = Path(args.corpus_dir)
    else:
        raise UsageError("give --manifest or --family")
    rows = corpus.run_batch(manifest, root, jobs=args.jobs, budget_secs=args.budget_secs)
    for r in rows:
        if r.status != "true":
            log.warning("%s: %s %s", r.id, r.status, r.reason)
    _emit(corpus.format_csv(rows), args.output)
    return corpus.batch_exit_code(rows)


COMMANDS = {"gen": cmd_gen, "check": cmd_check, "circ": cmd_circ, "verify": cmd_verify, "batch": cmd_batch}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tricirc: error: {exc}", file=sys.stderr)
        return corpus.EXIT_USAGE
    except Timeout as exc:
        print(f"tricirc: timeout: {exc}", file=sys.stderr)
        return corpus.EXIT_TIMEOUT
    except (PreconditionFailed, NoGoodCycle, RotFormatError, TricircError, OSError, ValueError) as exc:
        print(f"tricirc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return corpus.EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
