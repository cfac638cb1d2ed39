from .rat import Rat, RatLike, as_rat, parse_rat, format_rat, to_ground, from_ground
from .multipoly import MultiPoly, Exponents, elem_sym, grlex_key, monomials_of_degree, polynomial_ring
from .factored import FactoredPoly, FactoredSum, derive, substitute, evaluate
from .linalg import rref, rank, nullspace, row_space_contains
from .series import TruncatedSeries
