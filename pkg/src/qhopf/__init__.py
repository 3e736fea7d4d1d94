"""Exact computations with finite dimensional (quasi-)Hopf algebras over GF(p)."""
from .errors import (ChevalleyViolation, InputError, NotIdempotentModRadical, NotInvertible,
                     QHopfError, ResourceLimit, SpecError, Unsupported)
from .algebra import (Algebra, TensorElement, apply_slotwise, coface_apply, permute_slots,
                      place_legs, radical, tensor, truncated_polynomial_algebra)
from .hopf import (HopfStructure, associated_graded, check_bialgebra, dual_hopf, is_grouplike,
                   primitives)
from .quasi import (QuasiData, check_pentagon, check_rmatrix, check_twist, lift_idempotent,
                    pseudotwist_transform, sqrt_one_plus, trivialize_rmatrix, twisted_associator,
                    verify_quasi)
from .truncexp import certify_nilpotent, trunc_exp, trunc_exp_extended, trunc_log, trunc_log_extended
from .cohomology import (AdditiveCochain, MultiplicativeCochain, additive_cohomology,
                         additive_differential, brute_force_h2_multiplicative, canonical_h3_basis,
                         is_multiplicative_coboundary, is_multiplicative_cocycle,
                         multiplicative_coboundary, trivialize_associator, xi_map)
from .catalog import (associator_phi, cyclic_group_algebra, function_algebra, kalpha_phi, make_alpha,
                      make_alpha_dual, make_alpha_product, make_u_abelian, make_u_dual, r_epsilon,
                      scaling_automorphism, skew_twist)
from .specfile import SpecDocument, build, parse_spec, serialize_spec

__version__ = "0.1.0"
