"""Multivectors over hyperbolic-complex scalars on the Pauli basis.

An element is ``z0 + z1*s1 + z2*s2 + z3*s3`` with hyperbolic-complex
coefficients (16 real dimensions).  The basis obeys
``s_a s_b = delta_ab + i eps_abc s_c`` with i and j central.  Minkowski
four-vectors embed as paravectors ``x0 + x1*j*s1 + x2*j*s2 + x3*j*s3``.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from .hypernum import HyperComplex, ZeroDivisor  # noqa: F401  (re-raised here)


class NotAParavector(ValueError):
    """A multivector expected to be an embedded four-vector is not one."""


class IndexOutOfRange(IndexError):
    """A spacetime index outside 0..3."""


def _mul_i(h: HyperComplex) -> HyperComplex:
    # i * (x + iy + jv + ijw) = -y + ix - jw + ijv
    return HyperComplex(-h.y, h.x, -h.w, h.v)


@dataclass(frozen=True, slots=True)
class Multivector:
    z0: HyperComplex = HyperComplex()
    z1: HyperComplex = HyperComplex()
    z2: HyperComplex = HyperComplex()
    z3: HyperComplex = HyperComplex()

    # -- linear structure --------------------------------------------------

    def __add__(self, other) -> "Multivector":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self.z0 + o.z0, self.z1 + o.z1,
                           self.z2 + o.z2, self.z3 + o.z3)

    __radd__ = __add__

    def __sub__(self, other) -> "Multivector":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Multivector(self.z0 - o.z0, self.z1 - o.z1,
                           self.z2 - o.z2, self.z3 - o.z3)

    def __rsub__(self, other) -> "Multivector":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Multivector":
        return Multivector(-self.z0, -self.z1, -self.z2, -self.z3)

    def __mul__(self, other) -> "Multivector":
        """Geometric product (scalar operands multiply coefficientwise)."""
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self.z0, self.z1, self.z2, self.z3
        b0, b1, b2, b3 = o.z0, o.z1, o.z2, o.z3
        return Multivector(
            a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 + _mul_i(a2 * b3 - a3 * b2),
            a0 * b2 + a2 * b0 + _mul_i(a3 * b1 - a1 * b3),
            a0 * b3 + a3 * b0 + _mul_i(a1 * b2 - a2 * b1),
        )

    def __rmul__(self, other) -> "Multivector":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    # -- involutions ---------------------------------------------------------

    def bar(self) -> "Multivector":
        """Conjugation: hypernum.conj on every coefficient.  Anti-involution."""
        return Multivector(self.z0.conj(), self.z1.conj(),
                           self.z2.conj(), self.z3.conj())

    def dagger(self) -> "Multivector":
        """Reversion: hypernum.rev on every coefficient.  Anti-involution."""
        return Multivector(self.z0.rev(), self.z1.rev(),
                           self.z2.rev(), self.z3.rev())

    def hat(self) -> "Multivector":
        """Graduation: hypernum.grade on every coefficient.  Automorphism."""
        return Multivector(self.z0.grade(), self.z1.grade(),
                           self.z2.grade(), self.z3.grade())

    # -- inversion -------------------------------------------------------------

    def inverse(self) -> "Multivector":
        """(z0 - z1*s1 - z2*s2 - z3*s3) / (z0^2 - z1^2 - z2^2 - z3^2).

        The denominator is a central hyperbolic-complex scalar; ZeroDivisor
        propagates from its inversion when the multivector is singular.
        """
        d = self.z0 * self.z0 - self.z1 * self.z1 - self.z2 * self.z2 \
            - self.z3 * self.z3
        f = d.inverse()
        return Multivector(self.z0 * f, -(self.z1 * f), -(self.z2 * f),
                           -(self.z3 * f))

    # -- helpers -----------------------------------------------------------------

    def scalar(self) -> HyperComplex:
        """The coefficient of 1."""
        return self.z0

    def slots(self) -> tuple[HyperComplex, HyperComplex, HyperComplex, HyperComplex]:
        return (self.z0, self.z1, self.z2, self.z3)

    def max_abs(self) -> float:
        return max(self.z0.max_abs(), self.z1.max_abs(),
                   self.z2.max_abs(), self.z3.max_abs())

    def isclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return (self.z0.isclose(other.z0, tol) and self.z1.isclose(other.z1, tol)
                and self.z2.isclose(other.z2, tol) and self.z3.isclose(other.z3, tol))

    def coeffs16(self) -> list[float]:
        """Flat real coefficients, ordered (1, i, j, ij) x (1, s1, s2, s3)."""
        zs = self.slots()
        out: list[float] = []
        for part in ("x", "y", "v", "w"):
            out.extend(getattr(z, part) for z in zs)
        return out

    @classmethod
    def from_coeffs16(cls, coeffs) -> "Multivector":
        c = list(coeffs)
        if len(c) != 16:
            raise ValueError("expected 16 coefficients")
        return cls(*(HyperComplex(c[k], c[4 + k], c[8 + k], c[12 + k])
                     for k in range(4)))

    def __str__(self) -> str:
        from .hypernum import render_terms
        labels = ("",) + BASIS_LABELS[1:]
        return render_terms(zip(self.coeffs16(), labels))


def _coerce(value) -> Multivector | None:
    if isinstance(value, Multivector):
        return value
    if isinstance(value, HyperComplex):
        return Multivector(value)
    if isinstance(value, numbers.Real):
        return Multivector(HyperComplex(float(value)))
    return None


def scalar(value) -> Multivector:
    """Embed a real or hyperbolic-complex scalar."""
    m = _coerce(value)
    if m is None:
        raise TypeError(f"not a scalar: {value!r}")
    return m


# -- symmetric / antisymmetric products ------------------------------------------

def sym(a: Multivector, b: Multivector) -> Multivector:
    """(a * bar(b) + b * bar(a)) / 2, the scalar product of paravectors."""
    return (a * b.bar() + b * a.bar()) * 0.5


def antisym(a: Multivector, b: Multivector) -> Multivector:
    """(a * bar(b) - b * bar(a)) / 2, the wedge product (biparavector)."""
    return (a * b.bar() - b * a.bar()) * 0.5


def triparavector(mu: int, nu: int, sig: int) -> Multivector:
    """Fully antisymmetrized triple product of basis paravectors.

    Vanishes when two indices coincide; the nonzero values span the
    pseudovector directions {ij, i*s1, i*s2, i*s3}.
    """
    for idx in (mu, nu, sig):
        if not 0 <= idx <= 3:
            raise IndexOutOfRange(f"index {idx} outside 0..3")
    a, b, c = E[mu], E[nu], E[sig]
    total = (a * b.bar() * c + b * c.bar() * a + c * a.bar() * b
             - b * a.bar() * c - a * c.bar() * b - c * b.bar() * a)
    return total * (1.0 / 6.0)


# -- Minkowski four-vectors ---------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FourVector:
    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def components(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def isclose(self, other: "FourVector", tol: float = 1e-12) -> bool:
        return all(abs(p - q) <= tol
                   for p, q in zip(self.components(), other.components()))


def embed(x: FourVector) -> Multivector:
    """x0 + x1*j*s1 + x2*j*s2 + x3*j*s3."""
    return Multivector(HyperComplex(x.x0),
                       HyperComplex(0.0, 0.0, x.x1),
                       HyperComplex(0.0, 0.0, x.x2),
                       HyperComplex(0.0, 0.0, x.x3))


def extract(m: Multivector, tol: float = 1e-12) -> FourVector:
    """Invert embed; raises NotAParavector if m has other components."""
    z0, z1, z2, z3 = m.slots()
    residual = max(abs(z0.y), abs(z0.v), abs(z0.w),
                   *(q for z in (z1, z2, z3) for q in (abs(z.x), abs(z.y), abs(z.w))))
    if residual > tol * max(1.0, m.max_abs()):
        raise NotAParavector(f"residual {residual:.3e} outside the paravector span")
    return FourVector(z0.x, z1.v, z2.v, z3.v)


def minkowski_dot(x: FourVector, y: FourVector) -> float:
    """Scalar part of sym(embed(x), embed(y)); signature (+,-,-,-)."""
    return x.x0 * y.x0 - x.x1 * y.x1 - x.x2 * y.x2 - x.x3 * y.x3


# -- fixed elements ------------------------------------------------------------------

ONE = Multivector(HyperComplex(1.0))
S1 = Multivector(z1=HyperComplex(1.0))
S2 = Multivector(z2=HyperComplex(1.0))
S3 = Multivector(z3=HyperComplex(1.0))
E0 = ONE
E1 = Multivector(z1=HyperComplex(0.0, 0.0, 1.0))
E2 = Multivector(z2=HyperComplex(0.0, 0.0, 1.0))
E3 = Multivector(z3=HyperComplex(0.0, 0.0, 1.0))
E = (E0, E1, E2, E3)

# Volume element e1*e2*e3 of the paravector basis.
PSEUDOSCALAR = Multivector(HyperComplex(0.0, 0.0, 0.0, 1.0))

BASIS_LABELS = (
    "1", "s1", "s2", "s3",
    "i", "i*s1", "i*s2", "i*s3",
    "j", "j*s1", "j*s2", "j*s3",
    "ij", "ij*s1", "ij*s2", "ij*s3",
)
