"""Algebraic spinors, column spinors, and the spinor products.

A spinor lives in the eight-real-dimensional subalgebra spanned by
``{1, i*s_k, j*s_k, ij}``, the closure of the operators that the basis
paravectors can generate.  The identity rotor is the standard spinor; a
general one is the spin transformation itself.

Component conventions follow the expansion

    psi = s + b32*i*s1 + b13*i*s2 + b21*i*s3
            + b10*j*s1 + b20*j*s2 + b30*j*s3 + p*ij

whose names record the (antisymmetric) biparavector index pairs.  The same
eight numbers relabel as a paravector plus pseudovector: v = (s, b10, b20,
b30) on the paravector basis and eta = (p, b32, b13, b21) with the ij*eta^mu
pseudovector expanding to ij*eta0 + i*eta^k*s_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cayley import E3, ONE, Multivector, _mul_i, sym
from .hypernum import HyperComplex, J
from .lorentz import Rotor


class NotInSpinorAlgebra(ValueError):
    """A multivector with components outside span{1, i*s_k, j*s_k, ij}."""


class NonScalarResidual(ArithmeticError):
    """A spinor product left non-scalar terms above tolerance."""


def subalgebra_residual(m: Multivector) -> float:
    """Largest coefficient outside the spinor span (exactly 0 for members)."""
    z0, z1, z2, z3 = m.slots()
    return max(abs(z0.y), abs(z0.v),
               *(q for z in (z1, z2, z3) for q in (abs(z.x), abs(z.w))))


def _check_member(m: Multivector, tol: float = 1e-12) -> Multivector:
    residual = subalgebra_residual(m)
    if residual > tol * max(1.0, m.max_abs()):
        raise NotInSpinorAlgebra(
            f"residual {residual:.3e} outside the spinor subalgebra")
    return m


@dataclass(frozen=True, slots=True)
class Spinor:
    """A multivector confined to the spinor subalgebra."""

    value: Multivector

    @classmethod
    def standard(cls) -> "Spinor":
        return cls(ONE)

    def isclose(self, other: "Spinor", tol: float = 1e-12) -> bool:
        return self.value.isclose(other.value, tol)


def from_rotor(t: Rotor) -> Spinor:
    """Identify the spin transformation itself as the spinor."""
    return Spinor(_check_member(t.value))


def from_multivector(m: Multivector) -> Spinor:
    return Spinor(_check_member(m))


# -- component views ----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class EvenComponents:
    """The eight scalars of the even-index expansion (see module docstring)."""

    s: float
    b32: float
    b13: float
    b21: float
    b10: float
    b20: float
    b30: float
    p: float

    @property
    def b(self) -> tuple[float, float, float, float, float, float]:
        """The six biparavector scalars in canonical listing order."""
        return (self.b32, self.b13, self.b21, self.b10, self.b20, self.b30)

    def biparavector_tensor(self) -> list[list[float]]:
        """Redundant 4x4 antisymmetric view reconstructed from the six scalars."""
        t = [[0.0] * 4 for _ in range(4)]
        for (mu, nu), val in (((3, 2), self.b32), ((1, 3), self.b13),
                              ((2, 1), self.b21), ((1, 0), self.b10),
                              ((2, 0), self.b20), ((3, 0), self.b30)):
            t[mu][nu] = val
            t[nu][mu] = -val
        return t

    def as_dict(self) -> dict[str, float]:
        return {"s": self.s, "b32": self.b32, "b13": self.b13, "b21": self.b21,
                "b10": self.b10, "b20": self.b20, "b30": self.b30, "p": self.p}


@dataclass(frozen=True, slots=True)
class OddComponents:
    """Paravector components v and pseudovector components eta."""

    v: tuple[float, float, float, float]
    eta: tuple[float, float, float, float]


def even_components(psi: Spinor) -> EvenComponents:
    z0, z1, z2, z3 = psi.value.slots()
    return EvenComponents(s=z0.x, b32=z1.y, b13=z2.y, b21=z3.y,
                          b10=z1.v, b20=z2.v, b30=z3.v, p=z0.w)


def from_even_components(ec: EvenComponents) -> Spinor:
    return Spinor(Multivector(HyperComplex(ec.s, 0.0, 0.0, ec.p),
                              HyperComplex(0.0, ec.b32, ec.b10),
                              HyperComplex(0.0, ec.b13, ec.b20),
                              HyperComplex(0.0, ec.b21, ec.b30)))


def odd_components(psi: Spinor) -> OddComponents:
    ec = even_components(psi)
    return OddComponents(v=(ec.s, ec.b10, ec.b20, ec.b30),
                         eta=(ec.p, ec.b32, ec.b13, ec.b21))


def from_odd_components(oc: OddComponents) -> Spinor:
    v, eta = oc.v, oc.eta
    return from_even_components(EvenComponents(
        s=v[0], b32=eta[1], b13=eta[2], b21=eta[3],
        b10=v[1], b20=v[2], b30=v[3], p=eta[0]))


# -- matrix representation -------------------------------------------------------

@dataclass(frozen=True, slots=True)
class HMat2:
    """2x2 matrix with hyperbolic-complex entries."""

    m11: HyperComplex
    m12: HyperComplex
    m21: HyperComplex
    m22: HyperComplex

    def __mul__(self, other: "HMat2") -> "HMat2":
        if not isinstance(other, HMat2):
            return NotImplemented
        return HMat2(self.m11 * other.m11 + self.m12 * other.m21,
                     self.m11 * other.m12 + self.m12 * other.m22,
                     self.m21 * other.m11 + self.m22 * other.m21,
                     self.m21 * other.m12 + self.m22 * other.m22)

    def apply(self, c: "ColumnSpinor") -> "ColumnSpinor":
        return ColumnSpinor(self.m11 * c.c1 + self.m12 * c.c2,
                            self.m21 * c.c1 + self.m22 * c.c2)


@dataclass(frozen=True, slots=True)
class ColumnSpinor:
    """Two-component matrix-picture spinor."""

    c1: HyperComplex
    c2: HyperComplex

    def isclose(self, other: "ColumnSpinor", tol: float = 1e-12) -> bool:
        return self.c1.isclose(other.c1, tol) and self.c2.isclose(other.c2, tol)


def to_matrix(a: Multivector) -> HMat2:
    """Pauli representation s1=[[0,1],[1,0]], s2=[[0,-i],[i,0]], s3=[[1,0],[0,-1]].

    An algebra isomorphism onto all 16 real dimensions; from_matrix inverts it
    exactly.
    """
    z0, z1, z2, z3 = a.slots()
    iz2 = _mul_i(z2)
    return HMat2(z0 + z3, z1 - iz2, z1 + iz2, z0 - z3)


def from_matrix(m: HMat2) -> Multivector:
    return Multivector((m.m11 + m.m22) * 0.5,
                       (m.m12 + m.m21) * 0.5,
                       _mul_i(m.m12 - m.m21) * 0.5,
                       (m.m11 - m.m22) * 0.5)


def to_column(psi: Spinor) -> ColumnSpinor:
    """The matrix of psi applied to the standard column (1, 0).

    Componentwise: (s + i*b21 + j*b30 + ij*p, -b13 + i*b32 + j*b10 + ij*b20).
    """
    z0, z1, z2, z3 = psi.value.slots()
    return ColumnSpinor(z0 + z3, z1 + _mul_i(z2))


def from_column(c: ColumnSpinor) -> Spinor:
    """Exact inverse of to_column (eight real components each way)."""
    return from_even_components(EvenComponents(
        s=c.c1.x, b21=c.c1.y, b30=c.c1.v, p=c.c1.w,
        b13=-c.c2.x, b32=c.c2.y, b10=c.c2.v, b20=c.c2.w))


def act(omega: Multivector, psi: Spinor) -> Spinor:
    """Left multiplication by a spinor-subalgebra operator."""
    _check_member(omega)
    return Spinor(omega * psi.value)


# -- spinor products ------------------------------------------------------------

def sprod_column(a: ColumnSpinor, b: ColumnSpinor) -> HyperComplex:
    """conj(a1)*b1 + conj(a2)*b2, the correlation via conjugation."""
    return a.c1.conj() * b.c1 + a.c2.conj() * b.c2


def sprod_algebraic(a: Spinor, b: Spinor, tol: float = 1e-12) -> HyperComplex:
    """a . b + j (a . (b e3)), read off as a hyperbolic-complex scalar.

    Equals sprod_column of the column pictures.  The symmetric products leave
    the scalar slot exactly on spinor-subalgebra arguments; any residual above
    tolerance raises NonScalarResidual.
    """
    total = sym(a.value, b.value) + sym(a.value, b.value * E3) * J
    residual = max(z.max_abs() for z in total.slots()[1:])
    if residual > tol * max(1.0, total.max_abs()):
        raise NonScalarResidual(
            f"non-scalar residual {residual:.3e} in spinor product")
    return total.scalar()


def product_modulus_sq(a: Spinor, b: Spinor) -> HyperComplex:
    """Squared modulus of the spinor product, of the form re + ij*hyper."""
    return sprod_algebraic(a, b).modulus_sq()


def mott_factor(theta: float) -> float:
    """cos^2(theta/2): the spin contribution to elastic scattering."""
    return math.cos(theta / 2.0) ** 2


def nonrel_vector(phi: float, theta: float) -> tuple[float, float, float]:
    """(b32, b13, b21) at zero rapidity: a rotation parametrized with 4-pi period."""
    return (math.sin(phi / 2.0) * math.sin(theta / 2.0),
            -math.cos(phi / 2.0) * math.sin(theta / 2.0),
            -math.sin(phi / 2.0) * math.cos(theta / 2.0))
