"""Exception types shared across the package.

Everything derives from :class:`DivideForgeError` so callers can catch the
whole family at once.  Most types also inherit ``ValueError`` because they
signal bad input rather than internal failure.
"""


class DivideForgeError(Exception):
    """Base class for all errors raised by divide_forge."""


class DuplicateDart(DivideForgeError, ValueError):
    """A dart appears more than once in the vertex rotations."""


class UnpairedDart(DivideForgeError, ValueError):
    """Dart labels are not exactly 0..n-1 or the pairing misses a dart."""


class FixedDart(DivideForgeError, ValueError):
    """The edge pairing has a fixed point; edges need two distinct darts."""


class Disconnected(DivideForgeError, ValueError):
    """Operation requires a connected map."""


class OddCharacteristic(DivideForgeError, RuntimeError):
    """V - E + F came out odd.

    Impossible for a valid orientable combinatorial map, so this always
    signals internal data corruption rather than bad user input.
    """


class NotBipartite(DivideForgeError, ValueError):
    """Face adjacency contains an odd cycle, so no checkerboard coloring."""


class NotAdmissible(DivideForgeError, ValueError):
    """The divide fails one of the admissibility axioms."""


class GenusTooSmall(DivideForgeError, ValueError):
    """Requested a bound or family that only exists for larger genus."""


class ParityMismatch(DivideForgeError, ValueError):
    """Chain gluing kind does not match the parity of the circle count."""


class CapExceeded(DivideForgeError, ValueError):
    """Census request above the configured double point cap."""


class BasisMismatch(DivideForgeError, ValueError):
    """Cycle does not live on the fiber whose homology basis is in use."""


class DocumentSyntaxError(DivideForgeError, ValueError):
    """Divide document is not valid JSON; carries line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(DivideForgeError, ValueError):
    """Divide document is valid JSON but violates the document schema."""


class InvariantMismatch(DivideForgeError, ValueError):
    """Stored metadata expectations disagree with computed invariants."""
