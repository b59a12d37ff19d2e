"""Exception types raised across the toolkit."""


class CutsetKitError(Exception):
    """Base class for all toolkit errors."""


class PosetError(CutsetKitError, ValueError):
    pass


class CycleError(PosetError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("relation contains a directed cycle: " + " -> ".join(map(str, self.cycle)))


class SelfLoopError(PosetError):
    def __init__(self, element, line=None):
        self.element = element
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}self-loop on element {element}")


class NotComparableError(PosetError):
    pass


class NotBoundedError(PosetError):
    pass


class ParseError(CutsetKitError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class HypergraphError(CutsetKitError, ValueError):
    pass


class NotUniformError(HypergraphError):
    def __init__(self, message, sizes=()):
        self.sizes = tuple(sizes)
        super().__init__(message)


class NotSemimodularError(CutsetKitError, ValueError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"not semimodular: {pair[0]} and {pair[1]} cover their meet, but their join does not cover both")


class NoJoinIrreducibleError(CutsetKitError, RuntimeError):
    pass


class NotELError(CutsetKitError, ValueError):
    pass


class NotAPermutationError(CutsetKitError, ValueError):
    pass


class InvalidParamError(CutsetKitError, ValueError):
    pass
