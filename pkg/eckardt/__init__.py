__version__ = "0.1.0"

from .exceptions import *
from .models import *
from .invariants import (
    sigma_values, sigma_vector, salmon_values, salmon_invariants, i100_factored, i100, inverse_map,
    base_locus_forward, maps_to_q, READING_NOTES
)
from .pentahedron import (
    sylvester_form, to_cubic_p3, eckardt_vertices, classify_family, stabilizer, eckardt_involutions, contains_line,
    collinear, vertices_on_face, normal_form, family_representative, surface_report
)
from .singular import (
    claimed_components, verify_component_in_singular_locus, arrangement_oracle, smoothness_off_components,
    multiplicity_at, image_family, component_intersection, curve_family, curve_endpoints, verification_certificate
)
