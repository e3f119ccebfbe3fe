"""Exact-arithmetic spinor map, Clifford/spin machinery, Cayley classes,
and abelian fourfolds of Weil type with trivial discriminant."""

from .lattices import (BilinearLattice, LatticeVector, MukaiVector, make_V,
                       make_Splus, mukai_pairing, orthogonal_complement,
                       signature)
from .multivector import Multivector, contract, hodge_star, pfaffian, pluecker, wedge
from .clifford import (CV, CliffordAlgebra, CliffordElement, conjugation,
                       exp_nilpotent, sigma_action, spin_so_iso, so_to_spin,
                       twisted_conjugation)
from .scalars import QuadExt, Rational, TowerScalar, hilbert_symbol, is_norm
from .spingeo import (IsotropicSubspace, Spinor, move_to_cell, spinor_inverse,
                      spinor_map, subspace_of_spinor, transversality,
                      veronese_pluecker_check)
from .reps import (RepSpace, branching_dims, cayley_class, derived_action,
                   invariant_subspace, stabilizer_algebra,
                   weight_decomposition)
from .weil import (Period, WeilDatum, cayley_hodge_test, complex_structure,
                   h2_split, hermitian_and_discriminant, k_action,
                   make_weil_datum, polarization, sample_period,
                   weil_class_space, weil_condition)
from .kuga import KSDatum, ks_center, ks_complex_structure, ks_spin_rep_check

__version__ = "0.1.0"
