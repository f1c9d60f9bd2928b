"""Strain bounds for planar single-slip polycrystals.

Inner (constant-strain) bounds and outer (boundary rank-one
compatibility) bounds on the attainable affine boundary strains, plus the
explicit tilted-square construction separating the two.
"""

from .errors import (DegenerateBeta, DomainError, EmptyInput, GammaOutOfRange,
                     InvalidPolycrystal, NotSL2, ParallelSlips, PolyslipError)
from .mat2 import DEFAULT_TOL, E1, E2, Mat2, ShearFrame, Vec2, decompose, det, is_SO2, rotation
from .slip import SlipSystem, energy, in_M, in_N, psi, sl2_shear, slip_direction
from .taylor import (AngleSet, TaylorBound, gamma_bounds, in_lambda, is_trivial,
                     normalize, reduce_angles, taylor_M_member, taylor_member,
                     taylor_member_batch)
from .compat import (LaminateSplit, RankOneConnection, connector_search,
                     find_connection, laminate_split, nu_compatible)
from .geometry import (Arc, BoundaryAnalysis, Grain, OuterBound, Polycrystal,
                       Segment, analyze_boundary, boundary_samples, chord_disk,
                       equal_perp_full, halfdisk_bicrystal, load_polycrystal,
                       outer_bound_full_member, outer_bound_perp,
                       polycrystal_from_dict, polycrystal_to_dict, quadrant_disk,
                       random_chord_disk, sheared_square_polycrystal)
from .random_textures import (McConfig, McResult, estimate_trivial_probability,
                              find_kl, trivial_probability)
from .shear_square import (GAMMA_MAX, PwAffineMap, ShearSquareBuild,
                           VerificationReport, average_gradient, boundary_matrix,
                           build, conclusion, grain_components, mesh_dict, verify)

__version__ = "0.1.0"
