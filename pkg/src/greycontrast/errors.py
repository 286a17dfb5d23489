"""Exception hierarchy.

Every error carries a stable machine-parsable ``code`` so that callers (and
the command line front-end) can react without string matching.
"""

from __future__ import annotations


class GreycontrastError(Exception):
    """Base class for all library errors."""

    code = "E_GENERIC"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class RationalError(GreycontrastError):
    code = "E_RATIONAL"


class GraphFormatError(GreycontrastError):
    """Malformed edge-list input (bad header, bad line, trailing junk)."""

    code = "E_GRAPH_FORMAT"


class VertexRangeError(GreycontrastError):
    code = "E_VERTEX_RANGE"


class DuplicateEdgeError(GreycontrastError):
    code = "E_DUPLICATE_EDGE"


class SelfLoopError(GreycontrastError):
    code = "E_SELF_LOOP"


class DisconnectedError(GreycontrastError):
    code = "E_DISCONNECTED"


class GreyscaleError(GreycontrastError):
    """Invalid greyscale: tones outside [0,1], missing vertices, or an image
    that does not contain both extreme tones 0 and 1."""

    code = "E_GREYSCALE"


class ImproperColouringError(GreycontrastError):
    """A tone-bucket colouring put two adjacent vertices in the same class.

    ``details['edge']`` holds the violating edge.
    """

    code = "E_IMPROPER_COLOURING"


class DomainError(GreycontrastError):
    """Precondition violation (wrong k, non-bipartite input, wrong shape...)."""

    code = "E_DOMAIN"


class FixedToneError(GreycontrastError):
    """Invalid incomplete greyscale (empty/full fixed set, non-extreme tone,
    or two adjacent vertices fixed to the same tone)."""

    code = "E_FIXED_TONES"


class BudgetExceededError(GreycontrastError):
    """Search ran past its node budget.  ``details['partial']`` carries the
    best result found before the cutoff, when one exists."""

    code = "E_BUDGET"
