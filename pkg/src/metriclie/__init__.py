"""Metric Lie algebras and the left-invariant geometry of H3, G0 and G1.

Exact rational computation for the algebraic side (brackets, ad-invariant
forms, curvature identities, isometry conditions) plus floating-point group
models and a geodesic integrator for the coordinate side.
"""

from .algebra import (LieAlgebra, Subspace, bracket, center, change_of_basis,
                      check_h3_subalgebra, commutator, is_abelian, is_ideal,
                      is_nilpotent, is_solvable, jacobi_check, lower_central,
                      restricted_algebra, upper_central)
from .base import (CheckResult, DegenerateMetricError, InputError, JacobiError,
                   MetricLieError, NumericalError, ParseError)
from .catalog import (CatalogEntry, classify_dim4_metric, get, get_metric,
                      metric_names, names)
from .connection import (Connection, CurvatureTensor, IsotropyReport,
                         SolitonResult, ahc_isometry_check, bianchi_check,
                         biinvariant_curvature_check, curvature,
                         extract_family_parameters, h3_isotropy, is_derivation,
                         is_flat, is_isometric_automorphism,
                         is_locally_symmetric, isometry_family, levi_civita,
                         linearized_isotropy_dim, metric_compatibility_check,
                         nabla_R, naturally_reductive_check, ricci_form,
                         ricci_operator, skew_adjoint_form_space,
                         soliton_solve, torsion_check)
from .forms import (FormSearch, Signature, SplitResult, SymBilinearForm,
                    has_nondegenerate_invariant_form, invariant_form_space,
                    is_ad_invariant, killing_form, orthogonal_complement,
                    restrict_form, series_duality_check, signature,
                    split_nondegenerate_ideal, transform_form)
from .groups import (GeodesicSpec, GroupElement, ad_matrix, coordinate_metric,
                     exp_map, frame, g1_product_exp_coords,
                     geodesic_closed_form, group_identity, inverse, multiply,
                     rho, rotation_block)
from .integrate import (MetricChart, Trajectory, chart, christoffel,
                        compare_to_closed_form, energy_series,
                        flow_left_invariant_field, initial_velocity,
                        integrate_geodesic, integrate_spec,
                        write_trajectory_csv)
from .scalars import QuadExt, frac

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
