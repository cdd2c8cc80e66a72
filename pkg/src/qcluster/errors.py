"""Exceptions shared across the workbench."""


class QClusterError(Exception):
    """Base class for all workbench errors."""


class NotDivisible(QClusterError):
    """Exact division failed (scalar ring or noncommutative factor)."""


class FrozenMutation(QClusterError):
    """Attempted to mutate at a frozen vertex."""


class UnknownVertex(QClusterError):
    """Vertex id not present in the quiver."""


class GlueNonFrozen(QClusterError):
    """Amalgamation glue pair contains a non-frozen vertex."""


class DuplicateGlueTarget(QClusterError):
    """A vertex appears in more than one glue pair."""


class NotReduced(QClusterError):
    """Word is not reduced (repeated root in the induced root sequence)."""


class NotLongest(QClusterError):
    """Word is reduced but does not represent the longest element."""


class SeedMismatch(QClusterError):
    """Operation mixing elements over different seeds."""


class MixedWeight(QClusterError):
    """Element is not homogeneous for the frozen-boundary grading."""


class NotLaurent(QClusterError):
    """Transport left the Laurent ring: some denominator did not divide out.

    This is a meaningful mathematical outcome, not a bug: the element is
    not a Laurent polynomial in the target chart.
    """


class NonCasimirRelation(QClusterError):
    """Quotient relation vector is not a Casimir exponent vector."""


class NotAutomorphism(QClusterError):
    """Index permutation does not preserve the Cartan matrix."""
