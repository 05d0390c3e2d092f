from __future__ import annotations


class WeilJetError(Exception):
    """Base class for every error raised by this package."""


class ParseError(WeilJetError, ValueError):
    pass


class VariableCountMismatch(WeilJetError, ValueError):
    pass


class InfiniteDimensional(WeilJetError, ValueError):
    pass


class AlgebraMismatch(WeilJetError, ValueError):
    pass


class NonAugmented(WeilJetError, ValueError):
    pass


class IllDefined(WeilJetError, ValueError):
    """A proposed homomorphism sends a relation to something nonzero."""

    def __init__(self, generator, residue):
        self.generator = generator
        self.residue = residue
        super().__init__(f"relation {generator} maps to {residue}, not 0")


class NotMonomial(WeilJetError, ValueError):
    pass


class CapExceeded(WeilJetError, ValueError):
    pass


class Inconsistent(WeilJetError, ValueError):
    """A linear system has no solution; ``row`` names an offending equation."""

    def __init__(self, message, row=None):
        self.row = row
        super().__init__(message)


class NotHolonomic(WeilJetError, ValueError):
    pass


class SchemaError(WeilJetError, ValueError):
    pass
