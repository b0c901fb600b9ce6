"""Finite-scale computations with corings over Z/n.

Everything is exact: modules are finitely presented over ``Z/n``, structures
are integer matrices, and every construction comes with a verification
report that names the failing identity and a witness.

>>> from corings import RingContext, matrix_coalgebra, verify_coalgebra
>>> verify_coalgebra(matrix_coalgebra(RingContext(6), 2)).passed
True
"""

__version__ = "0.1.0"

from .zn import RingContext, ZnMatrix, Lattice, smith_normal_form, solve_linear, kernel
from .fpmod import (FPModule, Element, ModuleMap, Submodule, free_module, cyclic_module,
                    direct_sum, tensor, hom_module, dual, decompose, is_projective,
                    is_pure_submodule)
from .report import Report, Check
from .errors import (CoringsError, ParseError, UnresolvedReference, VerificationFailed,
                     UnknownExample, AxiomViolation, NotRational, AmbiguousCoaction,
                     NotGrouplike, NotSubalgebra)
from .algebra import (Algebra, Coalgebra, Bialgebra, FiniteGroup, GSet, RightModule,
                      LeftModule, group_algebra, matrix_algebra, matrix_coalgebra,
                      gset_coalgebra, dual_algebra, convolution_algebra, verify_algebra,
                      verify_coalgebra, verify_bialgebra, verify_right_module)
from .coring import (ACoring, coring_from_coalgebra, dual_ring, verify_coring, check_coideal,
                     check_subcoring, coseparability_check, kernel_coideal_check)
from .comodule import (Comodule, MeasuringPairing, RationalPart, canonical_pairing,
                       verify_comodule, alpha_check, rat, rat_by_scan, rat_laws,
                       finite_subcomodule, rationality_profile, induced_module,
                       subcoring_alpha, hom_equality_check)
from .topology import (Pairing, evaluation_pairing, orthogonal_of_subset, orthogonal_of_w,
                       closure, is_dense, double_orthogonal, double_orthogonal_law,
                       galois_connection_law, topology_coincidence, ke_pullback_law,
                       tensor_pairing)
from .entwine import (Entwining, DKStructure, AltDKStructure, EntwinedModule, verify_entwining,
                      coring_from_entwining, koppinen_ring, phi_isomorphism, verify_dk,
                      dk_to_entwining, alt_dk_to_entwining, yetter_drinfeld_builder,
                      smash_ring, smash_pairing, beta_density, verify_entwined_module,
                      adjunction_check, dk_corpus)
from .document import StructureDocument, DocBuilder, load, save, parse
from .catalog import EXAMPLES, emit_example, example_names
