"""Combinatorics of parabolically induced mod-p representations of p-adic reductive groups.

Representations are handled only through combinatorial descriptors: subsets
of simple roots for standard parabolics, triviality data for representations
of Levi subgroups, and triples (P, sigma, Q) naming irreducible
representations.  The Weyl group engine underneath (Bruhat order, coset and
double coset representatives) works for any finite-type Cartan matrix.
"""
from .errors import (GroupTooLarge, InconsistentDescriptor, InputError, InvalidCartanMatrix,
                     InvalidM1Triple, InvalidNesting, MixedAmbient, NonFiniteType, NotEMinimal,
                     NotSupercuspidal, ParindError, QOutOfRange, ResourceGuard, SemanticError,
                     UnknownRoot, UpsetGuard, WitnessMissing)
from .rootsys import (CartanDatum, RootSystem, build_root_system, cartan_from_spec, cartan_from_type,
                      orthogonal_subsets, phi_split, reflect, root_system)
from .weyl import (WeylElement, WeylGroup, bruhat_leq, check_separating_root, double_coset_reps,
                   filtration_cells, generate_weyl, longest_element, min_coset_reps, separating_root)
from .parabolic import ParabolicSet, join, levi_intersection, meet, parabolic
from .triples import (GTriple, SigmaDescriptor, check_e_minimal_orthogonality, minimize, minimize_triple,
                      p_sigma, sigma_descriptor, triple, validate_triple)
from .calculus import (constituents, cuspidality, geometric_lemma_report, is_irreducible_induction,
                       left_adjoint, right_adjoint, socle_cosocle, steinberg_lattice, subrep_lattice,
                       unramified_twist_conditions)

__version__ = "0.1.0"
