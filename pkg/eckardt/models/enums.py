from .model_abc import StrEnumModel


class FamilyTag(StrEnumModel):
    """An :class:`~enum.Enum` of the distinguished families of Sylvester forms, read off the pattern of equal
    coefficients (see :func:`~.classify_family`)."""

    #: Five distinct nonzero coefficients; no Eckardt point.
    GENERIC = "Generic"

    #: Coefficient pattern (a,b,b,c,c): generic member of the first component of the singular locus image.
    S1 = "S1"

    #: Coefficient pattern (a,b,b,b,c): generic member of the second component.
    S2 = "S2"

    #: Coefficient pattern (a,b,b,b,a): the first intersection curve of the two components.
    C1 = "C1"

    #: Coefficient pattern (a,b,b,b,b): the second intersection curve.
    C2 = "C2"

    #: All coefficients equal: the Clebsch diagonal surface.
    CLEBSCH = "Clebsch"

    #: Some coefficient is zero (degenerate Sylvester form); includes the Fermat cubic.
    DEGENERATE = "Degenerate"


class ComponentKind(StrEnumModel):
    """An :class:`~enum.Enum` listing the three kinds of linear components of the singular locus."""

    #: A coordinate hyperplane V(a_i).
    HYPERPLANE = "Hyperplane"

    #: A plane V(a_i - a_j, a_k - a_l) with disjoint index pairs.
    PAIR_PAIR = "PairPair"

    #: A plane V(a_i - a_j, a_k - a_j): three equal coefficients.
    TRIPLE = "Triple"


class EckardtMode(StrEnumModel):
    """How Eckardt points are counted by the command line."""
    EXACT = "exact"  #: Pentahedron vertex criterion.
    NUMERIC = "numeric"  #: Concurrent lines among the 27 tracked lines.
    CROSS = "cross"  #: Both, checked against each other.


class ModuliDirection(StrEnumModel):
    """Which direction of the moduli map the command line evaluates."""
    FORWARD = "forward"  #: Sylvester coefficients to Salmon invariants.
    INVERSE = "inverse"  #: Salmon invariants to sigma coordinates.
    ROUNDTRIP = "roundtrip"  #: Forward, then inverse, then compare with the sigma coordinates.


class PathStatus(StrEnumModel):
    """Final state of one homotopy path."""
    CONVERGED = "converged"  #: Reached t = 0 and polished to a regular solution.
    SINGULAR = "singular"  #: Reached a solution with a singular Jacobian.
    DIVERGED = "diverged"  #: Escaped to infinity (norm bound, or stalled inside the endgame zone).
    FAILED = "failed"  #: Step size underflow outside the endgame zone, or the step budget ran out.
