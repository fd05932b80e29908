"""Exception hierarchy shared by the engine, strategies, solver and CLI."""


class ArenaError(Exception):
    """Base class for every error raised by ramsey-arena."""


class DuplicateEdge(ArenaError):
    def __init__(self, u, v):
        super().__init__(f"edge {{{u},{v}}} already present")
        self.u, self.v = u, v


class SelfLoop(ArenaError):
    def __init__(self, v):
        super().__init__(f"self-loop at vertex {v}")
        self.v = v


class InstanceTooLarge(ArenaError):
    """An exact computation was asked for an instance above its configured cap."""


class NotATree(ArenaError):
    pass


class IllegalMove(ArenaError):
    pass


class InvalidWinClaim(ArenaError):
    pass


class UnsupportedSize(ArenaError):
    pass


class StrategyError(ArenaError):
    """A builder strategy reached a state its construction does not allow."""


class PainterInputClosed(ArenaError):
    """The interactive painter ran out of input."""


class BadToken(ArenaError, ValueError):
    """A registry or target token could not be parsed."""
