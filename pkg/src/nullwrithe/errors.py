"""Exception hierarchy shared by the parsers, graph builders and verifiers."""


class DiagramError(ValueError):
    """Base class for anything wrong with an input diagram code."""


class CodeSyntaxError(DiagramError):
    """Malformed token or statement in a pd-signed / gauss-signed code."""


class ArcConsistencyError(DiagramError):
    """An arc label is not used exactly once as an incoming and once as an
    outgoing end, or the declared signs disagree with the cyclic order."""


class TruncatedCrossingError(CodeSyntaxError, ArcConsistencyError):
    """A crossing statement with fewer than four arc labels."""


class DegenerateError(DiagramError):
    """Zero crossings without the explicit ``unknot`` / ``unlink k`` literal."""


class LoopEdgeError(DiagramError):
    """A crossing joins a Seifert circle to itself (not a planar diagram)."""


class NotAlternatingError(ValueError):
    pass


class NotApplicableError(ValueError):
    pass


class CatalogError(ValueError):
    """Bad record in a catalog file."""


class DuplicateNameError(CatalogError):
    pass
