# modules/spider.py
"""Spider strategies.

Both variants start from a long path in colour C cut into blocks and grow k
legs from a fresh hub in the other colour D. Each probe round sends edges
from the current leg tip to the next position of other blocks; if all of
them come back C, the tip is the centre of a C spider running along the
blocks, otherwise the first D edge extends the leg.
"""
import logging

from core.config import DEFAULT_CONFIG
from core.detect import Embedding
from core.engine import ScriptBuilder
from core.errors import StrategyError
from core.targets import spider_vertex
from modules.path import InducedPathProvider, grow_induced_path

logger = logging.getLogger(__name__)


def spider_embedding(k, l, center, legs, color, induced):
    """Embedding from a centre and k legs, each a list of l vertices outward from the centre."""
    mapping = [None] * (1 + k * l)
    mapping[spider_vertex(k, l, 0, 0)] = center
    for leg, verts in enumerate(legs):
        for depth, x in enumerate(verts[:l], start=1):
            mapping[spider_vertex(k, l, leg, depth)] = x
    return Embedding(tuple(mapping), color, induced)


class InducedSpiderBuilder(ScriptBuilder):
    """k^2 blocks of 2l+1 path vertices in k sets of k; one D leg per set."""

    name = "spider"

    def __init__(self, k, l):
        super().__init__()
        self.k, self.l = k, l
        self.path_rounds = None
        self.legs = []

    @property
    def block_size(self):
        return 2 * self.l + 1

    @property
    def path_length(self):
        return self.k * self.k * self.block_size - 1

    def _script(self):
        k, l = self.k, self.l
        color, path = yield from grow_induced_path(self, self.path_length, tag="spider-path")
        self.path_rounds = self.view.edge_count
        size = self.block_size
        blocks = [path[b * size:(b + 1) * size] for b in range(k * k)]
        hub = self.fresh()
        for j in range(k):
            group = blocks[j * k:(j + 1) * k]
            leg, spider = yield from self._leg(hub, group, color, j)
            if spider:
                return spider
            self.legs.append(leg)
        return spider_embedding(k, l, hub, self.legs, color.other, True)

    def _leg(self, hub, group, color, j):
        k, l = self.k, self.l
        tip, z = hub, None
        leg = []
        for i in range(1, l + 1):
            reached = None
            for zz, block in enumerate(group):
                if zz == z:
                    continue
                c = yield from self.draw(tip, block[i - 1], f"leg={j + 1}:depth={i}:block={zz + 1}")
                if c is not color:
                    reached = zz
                    break
            if reached is None:
                return None, self._c_spider(tip, z, group, i, color)
            z = reached
            tip = group[z][i - 1]
            leg.append(tip)
        return leg, None

    def _c_spider(self, center, z, group, i, color):
        """All probes at depth ``i`` were C: legs run along the blocks."""
        l = self.l
        legs = [block[i - 1:i - 1 + l] for zz, block in enumerate(group) if zz != z]
        if z is not None:
            legs.append(group[z][i - 1:i - 1 + l])
        return spider_embedding(self.k, l, center, legs, color, True)


class SpiderBuilder(ScriptBuilder):
    """Non-induced spider over 2k blocks of 2l vertices shared by all legs."""

    name = "spider-noninduced"

    def __init__(self, k, l, provider=None):
        super().__init__()
        self.k, self.l = k, l
        self.provider = provider or InducedPathProvider()
        self.path_rounds = None
        self.legs = []

    @property
    def path_length(self):
        return 4 * self.k * self.l - 1

    def _script(self):
        k, l = self.k, self.l
        color, path = yield from self.provider.grow(self, self.path_length, tag="spider-path")
        self.path_rounds = self.view.edge_count
        size = 2 * l
        blocks = [path[b * size:(b + 1) * size] for b in range(2 * k)]
        hub = self.fresh()
        hub_c = []
        taken = set()
        untried = list(range(2 * k))
        for j in range(k):
            # first D edge from the hub onto a block start not probed before
            z = None
            while untried:
                zz = untried.pop(0)
                c = yield from self.draw(hub, blocks[zz][0], f"leg={j + 1}:hub:block={zz + 1}")
                if c is color:
                    hub_c.append(zz)
                    if len(hub_c) == k:
                        legs = [blocks[b][:l] for b in hub_c]
                        return spider_embedding(k, l, hub, legs, color, False)
                else:
                    z = zz
                    break
            if z is None:
                raise StrategyError("hub ran out of blocks")
            tip = blocks[z][0]
            taken.add(tip)
            leg = [tip]
            for i in range(2, l + 1):
                c_blocks = []
                reached = None
                for zz in range(2 * k):
                    if zz == z or blocks[zz][i - 1] in taken:
                        continue
                    c = yield from self.draw(tip, blocks[zz][i - 1],
                                             f"leg={j + 1}:depth={i}:block={zz + 1}")
                    if c is color:
                        c_blocks.append(zz)
                        if len(c_blocks) == k - 1:
                            legs = [blocks[b][i - 1:i - 1 + l] for b in c_blocks]
                            legs.append(blocks[z][i - 1:i - 1 + l])
                            return spider_embedding(k, l, tip, legs, color, False)
                    else:
                        reached = zz
                        break
                if reached is None:
                    raise StrategyError("no free block position left for a leg")
                z = reached
                tip = blocks[z][i - 1]
                taken.add(tip)
                leg.append(tip)
            self.legs.append(leg)
        return spider_embedding(k, l, hub, self.legs, color.other, False)


def create_builder(params, config=DEFAULT_CONFIG, induced=True):
    k, l = params
    return InducedSpiderBuilder(k, l)


def create_noninduced_builder(params, config=DEFAULT_CONFIG, induced=False):
    k, l = params
    return SpiderBuilder(k, l)
