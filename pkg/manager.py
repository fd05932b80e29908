# manager.py
import importlib
import logging

from core.config import DEFAULT_CONFIG
from core.errors import BadToken
from core.targets import CENTIPEDE, CYCLE, EXPLICIT, PATH, SPIDER

logger = logging.getLogger(__name__)

# builder name -> (plugin module, factory, target family or None for any)
BUILDERS = {
    "path": ("path", "create_builder", PATH),
    "cycle": ("cycle", "create_builder", CYCLE),
    "cycle-noninduced": ("cycle", "create_noninduced_builder", CYCLE),
    "spider": ("spider", "create_builder", SPIDER),
    "spider-noninduced": ("spider", "create_noninduced_builder", SPIDER),
    "centipede": ("centipede", "create_builder", CENTIPEDE),
    "exact": ("exact", "create_builder", None),
}

PAINTER_MODULE = "painters"


class StrategyManager:
    """Loads strategy plugins from ``modules.<name>`` on demand.

    Each plugin exposes factory functions taking ``(params, config, induced)``;
    painters all live in one plugin with a ``create_painter`` factory.
    """

    def __init__(self, config=DEFAULT_CONFIG):
        self.config = config
        self._loaded = {}

    def _module(self, name):
        if name not in self._loaded:
            self._loaded[name] = importlib.import_module(f"modules.{name}")
            logger.debug("loaded plugin modules.%s", name)
        return self._loaded[name]

    @staticmethod
    def builder_names():
        return sorted(BUILDERS)

    @staticmethod
    def plugin_modules():
        """Dotted names of every plugin, for bundlers that cannot see importlib."""
        names = {module for module, _, _ in BUILDERS.values()} | {PAINTER_MODULE}
        return [f"modules.{name}" for name in sorted(names)]

    @staticmethod
    def default_builder(target, induced=True):
        if target.kind == PATH:
            return "path"
        if target.kind == CENTIPEDE:
            return "centipede"
        if target.kind in (CYCLE, SPIDER):
            return target.kind if induced else f"{target.kind}-noninduced"
        return "exact"

    def builder(self, name, target, induced=True):
        """Fresh builder ``name`` for ``target``; ``BadToken`` for unknown or mismatched names."""
        key = name.strip().lower()
        if key not in BUILDERS:
            raise BadToken(f"unknown builder {name!r}; choose from {', '.join(self.builder_names())}")
        module, factory, family = BUILDERS[key]
        if family is not None and family != target.kind:
            raise BadToken(f"builder {key!r} plays {family} targets, not {target}")
        create = getattr(self._module(module), factory)
        if key == "exact":
            return create(target.params, self.config, induced, target=target)
        return create(target.params, self.config, induced)

    def painter(self, token, target, induced=True, strict=True, stream=None):
        create = self._module(PAINTER_MODULE).create_painter
        return create(token, target, induced, self.config, strict, stream)

    def painters(self, tokens, target, induced=True, strict=True):
        """One painter per token; an empty list is a usage error."""
        if not tokens:
            raise BadToken("empty painter list")
        return [self.painter(t, target, induced, strict) for t in tokens]


def split_painter_list(text):
    """``"lemma5,random:1,0.3,minimax:3,6"`` -> ``["lemma5", "random:1,0.3", "minimax:3,6"]``.

    A comma-separated part without ``:`` that is not a bare painter name
    continues the previous token's parameters.
    """
    tokens = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        if tokens and ":" not in part and part.lower() not in ("lemma5", "stdin"):
            tokens[-1] += "," + part
        else:
            tokens.append(part)
    return tokens
