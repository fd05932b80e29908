import configparser
import logging
import os
from dataclasses import dataclass, fields, replace

logger = logging.getLogger(__name__)

THREADS_ENV = "RAMSEY_ARENA_THREADS"


@dataclass(frozen=True)
class ArenaConfig:
    """Tunables of the arena. Defaults match the documented behaviour."""

    # exact vertex cover is refused above this many vertices (trees excepted)
    vertex_cover_cap: int = 64
    # default round budget = budget_factor * proven round bound
    budget_factor: int = 4
    transposition_entries: int = 2 ** 20
    # skipped vertices between carved subpaths of a long induced path
    carve_gap: int = 1
    solver_max_vertices: int = 6
    solver_max_rounds: int = 6
    # cycles with fewer vertices than this try the exact strategy first
    cycle_exact_below: int = 0
    threads: int = os.cpu_count() or 1

    @classmethod
    def load(cls, path=None, environ=None):
        """Defaults, then the ``[arena]`` section of an INI file, then the environment."""
        cfg = cls()
        if path:
            parser = configparser.ConfigParser()
            if not parser.read(path):
                logger.warning("config file %s not found, using defaults", path)
            elif parser.has_section("arena"):
                section = parser["arena"]
                overrides = {}
                for f in fields(cls):
                    if f.name in section:
                        overrides[f.name] = section.getint(f.name)
                cfg = replace(cfg, **overrides)
        environ = os.environ if environ is None else environ
        raw = environ.get(THREADS_ENV)
        if raw:
            try:
                cfg = replace(cfg, threads=max(1, int(raw)))
            except ValueError:
                logger.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
        return cfg


DEFAULT_CONFIG = ArenaConfig()
