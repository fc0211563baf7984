"""Hyperbolic-complex Clifford algebra with paravectors, rotors, and spinors."""

from .hypernum import I, IJ, J, HyperComplex, ZeroDivisor
from .cayley import (E0, E1, E2, E3, PSEUDOSCALAR, S1, S2, S3, FourVector,
                     IndexOutOfRange, Multivector, NotAParavector, antisym,
                     embed, extract, minkowski_dot, sym, triparavector)
from .lorentz import (LorentzParams, NoConvergence, Rotor, apply, boost,
                      commutator, exp_general, generators, matrix_of,
                      rotation, spin_transform)
from .spinor import (ColumnSpinor, EvenComponents, HMat2, NonScalarResidual,
                     NotInSpinorAlgebra, OddComponents, Spinor, act,
                     even_components, from_column, from_even_components,
                     from_matrix, from_multivector, from_odd_components,
                     from_rotor, mott_factor, nonrel_vector, odd_components,
                     product_modulus_sq, sprod_algebraic, sprod_column,
                     to_column, to_matrix)

__all__ = [
    "HyperComplex", "ZeroDivisor", "I", "J", "IJ",
    "Multivector", "FourVector", "NotAParavector", "IndexOutOfRange",
    "sym", "antisym", "triparavector", "embed", "extract", "minkowski_dot",
    "S1", "S2", "S3", "E0", "E1", "E2", "E3", "PSEUDOSCALAR",
    "LorentzParams", "Rotor", "NoConvergence", "rotation", "boost",
    "exp_general", "apply", "generators", "commutator", "spin_transform",
    "matrix_of",
    "Spinor", "ColumnSpinor", "HMat2", "EvenComponents", "OddComponents",
    "NotInSpinorAlgebra", "NonScalarResidual", "from_rotor",
    "from_multivector", "even_components", "from_even_components",
    "odd_components", "from_odd_components", "to_matrix", "from_matrix",
    "to_column", "from_column", "act", "sprod_column", "sprod_algebraic",
    "product_modulus_sq", "mott_factor", "nonrel_vector",
]

__version__ = "0.1.0"
