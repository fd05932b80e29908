# main.py
"""ramsey-arena command line: play, sweep, solve, bounds, verify."""
import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

# bundled runs unpack next to core/ and modules/; make them importable
if hasattr(sys, "_MEIPASS"):
    sys.path.append(sys._MEIPASS)

from core.config import ArenaConfig
from core.engine import GameEngine, GameTrace
from core.errors import ArenaError, BadToken
from core.measures import (lower_bound_online, noninduced_cycle_reference, size_ramsey_lower,
                           spider_reference, upper_bound)
from core.solver import solve_exact
from core.targets import CENTIPEDE, CYCLE, PATH, SPIDER, TargetSpec
from manager import StrategyManager, split_painter_list
from utils.path_utils import get_resource_path

logger = logging.getLogger("ramsey_arena")

EXIT_WIN = 0
EXIT_LOST = 1
EXIT_USAGE = 2

CSV_COLUMNS = ["target", "builder", "painter", "seed", "induced", "rounds", "bound", "lower", "outcome"]
DEFAULT_CONFIG_FILE = "arena.ini"


def parse_range(text):
    """``"2..16"``, ``"3"`` or ``"2,4,8"`` as a list of integers."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            if lo > hi:
                raise BadToken(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise BadToken(f"bad range {text!r}") from exc


def _seed_of(token):
    name, _, rest = token.partition(":")
    if name.lower() == "random":
        return int(rest.split(",")[0])
    return None


def load_config(path):
    if path is None:
        candidate = get_resource_path(DEFAULT_CONFIG_FILE)
        path = candidate if os.path.exists(candidate) else None
    return ArenaConfig.load(path)


def run_game(manager, target, builder_name, painter_token, induced, strict=True, budget=None,
             check_every=1, stream=None):
    builder = manager.builder(builder_name, target, induced)
    painter = manager.painter(painter_token, target, induced, strict, stream)
    if budget is None:
        budget = GameEngine.default_budget(target, induced, manager.config)
    return GameEngine.play(builder, painter, target, induced, budget, strict, check_every)


# --- play -----------------------------------------------------------------

def cmd_play(args, config):
    manager = StrategyManager(config)
    target = TargetSpec.parse(args.target)
    strict = not args.loose
    builder_name = args.builder or manager.default_builder(target, args.induced)
    trace = run_game(manager, target, builder_name, args.painter, args.induced, strict,
                     args.budget, args.check_every)
    if args.trace:
        trace.save(args.trace)
        logger.info("trace written to %s", args.trace)

    outcome = trace.outcome
    bound = upper_bound(target, args.induced)
    mode = "induced" if args.induced else "non-induced"
    print(f"target {target} ({mode}), builder {builder_name}, painter {args.painter}")
    line = f"outcome {outcome.kind} after {outcome.rounds_used} rounds"
    if outcome.reason:
        line += f" ({outcome.reason})"
    print(line)
    if bound is not None:
        verdict = "within" if outcome.rounds_used <= bound else "ABOVE"
        print(f"bound {bound}: {verdict}")
    if outcome.won:
        emb = outcome.embedding
        print(f"copy {emb.color.value}: {' '.join(str(x) for x in emb.mapping)}")
    return EXIT_WIN if outcome.won else EXIT_LOST


# --- sweep ----------------------------------------------------------------

def sweep_targets(args):
    family = args.family.lower()
    if family in (PATH, CYCLE):
        if not args.n:
            raise BadToken(f"--n is required for {family}")
        make = TargetSpec.path if family == PATH else TargetSpec.cycle
        return [make(n) for n in parse_range(args.n)]
    if family in (SPIDER, CENTIPEDE):
        if not args.k or not args.l:
            raise BadToken(f"--k and --l are required for {family}")
        make = TargetSpec.spider if family == SPIDER else TargetSpec.centipede
        return [make(k, l) for k in parse_range(args.k) for l in parse_range(args.l)]
    raise BadToken(f"unknown family {args.family!r}")


def _sweep_row(config, target, builder_name, token, induced, strict, gap):
    manager = StrategyManager(config)
    trace = run_game(manager, target, builder_name, token, induced, strict)
    seed = _seed_of(token)
    row = {
        "target": target.token,
        "builder": builder_name,
        "painter": token,
        "seed": "" if seed is None else seed,
        "induced": induced,
        "rounds": trace.outcome.rounds_used,
        "bound": upper_bound(target, induced),
        "lower": lower_bound_online(target, config),
        "outcome": trace.outcome.kind,
    }
    if gap:
        row["ratio"] = row["rounds"] / size_ramsey_lower(target) if target.is_tree() else float("nan")
    return row


def cmd_sweep(args, config):
    tokens = split_painter_list(args.painters)
    if not tokens:
        raise BadToken("empty painter list")
    targets = sweep_targets(args)
    manager = StrategyManager(config)
    jobs = []
    for target in targets:
        builder_name = args.builder or manager.default_builder(target, args.induced)
        manager.painters(tokens, target, args.induced)
        jobs.extend((target, builder_name, token) for token in tokens)

    threads = max(1, args.threads or config.threads)
    logger.info("sweeping %d games on %d threads", len(jobs), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(
            lambda job: _sweep_row(config, job[0], job[1], job[2], args.induced, not args.loose, args.gap),
            jobs,
        ))

    columns = CSV_COLUMNS + (["ratio"] if args.gap else [])
    table = pd.DataFrame(rows, columns=columns)
    text = table.to_csv(index=False, lineterminator="\n", float_format="%.6f")
    text += summary_line(table, args.gap) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    lost = (table["outcome"] != "win").sum()
    return EXIT_WIN if lost == 0 else EXIT_LOST


def summary_line(table, gap=False):
    wins = table[table["outcome"] == "win"]
    with_bound = wins[wins["bound"].notna()]
    worst = (with_bound["rounds"] / with_bound["bound"]).max() if len(with_bound) else float("nan")
    line = f"# summary rows={len(table)} wins={len(wins)} max_rounds_over_bound={worst:.6f}"
    if gap:
        ratios = wins["ratio"].dropna()
        line += f" max_gap_ratio={ratios.max():.6f}" if len(ratios) else " max_gap_ratio=nan"
    return line


# --- solve / bounds / verify ------------------------------------------------

def cmd_solve(args, config):
    target = TargetSpec.parse(args.target)
    result = solve_exact(target, args.induced, args.max_vertices, args.max_rounds, config)
    print(result)
    for i, (u, v, c) in enumerate(result.principal_variation, start=1):
        print(f"{i}: {u}-{v} {c.value}")
    return EXIT_WIN if result.known else EXIT_LOST


def cmd_bounds(args, config):
    target = TargetSpec.parse(args.target)
    induced = not args.noninduced
    print(f"lower {lower_bound_online(target, config)}")
    bound = upper_bound(target, induced)
    print(f"upper {bound if bound is not None else 'n/a'}")
    if target.kind == CYCLE and not induced:
        print(f"reference {noninduced_cycle_reference(target.params[0])}")
    if target.kind == SPIDER and not induced:
        print(f"reference {spider_reference(*target.params)}")
    if target.is_tree():
        print(f"beta/4 {size_ramsey_lower(target):g}")
    return EXIT_WIN


def cmd_verify(args, config):
    trace = GameTrace.load(args.trace)
    report = GameEngine.verify(trace)
    print(report)
    if report.clean:
        print(f"outcome {trace.outcome.kind} after {trace.outcome.rounds_used} rounds")
    return EXIT_WIN if report.clean else EXIT_LOST


# --- entry ----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="ramsey-arena", description="Online Ramsey Builder-Painter arena")
    parser.add_argument("--config", help=f"INI file with an [arena] section (default: {DEFAULT_CONFIG_FILE} if present)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    play = sub.add_parser("play", help="run one game")
    play.add_argument("--target", required=True)
    play.add_argument("--induced", action="store_true")
    play.add_argument("--loose", action="store_true", help="induced check ignores other-colour edges")
    play.add_argument("--builder")
    play.add_argument("--painter", default="lemma5")
    play.add_argument("--budget", type=int)
    play.add_argument("--check-every", type=int, default=1)
    play.add_argument("--trace")
    play.set_defaults(handler=cmd_play)

    sweep = sub.add_parser("sweep", help="play a grid of games and print CSV")
    sweep.add_argument("--family", required=True)
    sweep.add_argument("--n")
    sweep.add_argument("--k")
    sweep.add_argument("--l")
    sweep.add_argument("--painters", default="lemma5")
    sweep.add_argument("--builder")
    sweep.add_argument("--induced", action="store_true")
    sweep.add_argument("--loose", action="store_true")
    sweep.add_argument("--gap", action="store_true", help="add rounds/(beta/4) for tree targets")
    sweep.add_argument("--threads", type=int)
    sweep.add_argument("--output")
    sweep.set_defaults(handler=cmd_sweep)

    solve = sub.add_parser("solve", help="exact game value under caps")
    solve.add_argument("--target", required=True)
    solve.add_argument("--induced", action="store_true")
    solve.add_argument("--max-vertices", type=int)
    solve.add_argument("--max-rounds", type=int)
    solve.set_defaults(handler=cmd_solve)

    bounds = sub.add_parser("bounds", help="lower and upper round bounds")
    bounds.add_argument("--target", required=True)
    bounds.add_argument("--noninduced", action="store_true")
    bounds.set_defaults(handler=cmd_bounds)

    verify = sub.add_parser("verify", help="replay and check a trace file")
    verify.add_argument("--trace", required=True)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(name)s - %(message)s")
    try:
        config = load_config(args.config)
        return args.handler(args, config)
    except BadToken as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArenaError, OSError, KeyError, ValueError) as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_LOST


if __name__ == "__main__":
    sys.exit(main())
