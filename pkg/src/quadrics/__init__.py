"""Exact computations on the variety of complete quadrics: Poincare
polynomials of its special subvarieties by two independent routes (closed
product formula and torus fixed-point cells), the generalized
Kostant-Macdonald identity, and a linear-algebra re-derivation of the
regular = special classification.
"""

from quadrics.cells import (
    CellRecord,
    NotMinimalRepError,
    SubsetViolationError,
    betti,
    cell_dim_in_subvariety,
    descent_characterization_check,
    fixed_points,
    fixed_points_full_variety,
    full_variety_orbit_sum,
    per_orbit_closed_form_check,
    per_orbit_sum,
    plus_cell_dim,
    poincare_full_variety,
    poincare_sum,
    r_set,
    s_value,
    verify_km,
)
from quadrics.kernel import BACKEND as kernel_backend
from quadrics.nilfix import (
    FixedQuadricSpace,
    NotSymmetricError,
    PrimeTooSmallError,
    RationalMatrix,
    RegularityResult,
    RegularityWitness,
    diagonal_h,
    fixed_flag,
    fixed_flag_uniqueness_oracle,
    fixed_quadric_space,
    infinitesimal_fixed_condition,
    regular_nilpotent,
    regularity_classifier,
)
from quadrics.parabolic import (
    NotSpecialError,
    SimpleSubset,
    enumerate_special,
    is_minimal_rep,
    longest_element,
    minimal_coset_rep_count,
    minimal_coset_reps,
    parabolic_subgroup,
)
from quadrics.qpoly import (
    InexactDivisionError,
    QPolynomial,
    exact_div,
    height_identity_check,
    is_palindromic,
    monomial,
    product_formula,
    q_factorial,
    q_integer,
)
from quadrics.symmetric_group import (
    Permutation,
    WeightVector,
    enumerate_permutations,
    height,
    identity,
    simple_reflection,
    simple_root,
)

__version__ = "0.1.0"
