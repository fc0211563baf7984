"""Hyperbolic-complex scalars.

The commutative ring of numbers ``x + y*i + v*j + w*ij`` with two central
units satisfying ``i*i = -1`` and ``j*j = +1``.  The ring has zero divisors
(``1 + j`` is one), so inversion is partial.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass


class ZeroDivisor(ArithmeticError):
    """Inversion attempted on an element of the null cone."""


def format_real(value: float) -> str:
    """12-significant-digit rendering with negative zero normalized."""
    if value == 0.0:
        value = 0.0
    return f"{value:.12g}"


@dataclass(frozen=True, slots=True)
class HyperComplex:
    """One hyperbolic-complex number, stored as the real quadruple (1, i, j, ij)."""

    x: float = 0.0
    y: float = 0.0
    v: float = 0.0
    w: float = 0.0

    # -- ring structure ---------------------------------------------------

    def __add__(self, other) -> "HyperComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return HyperComplex(self.x + o.x, self.y + o.y, self.v + o.v, self.w + o.w)

    __radd__ = __add__

    def __sub__(self, other) -> "HyperComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return HyperComplex(self.x - o.x, self.y - o.y, self.v - o.v, self.w - o.w)

    def __rsub__(self, other) -> "HyperComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "HyperComplex":
        return HyperComplex(-self.x, -self.y, -self.v, -self.w)

    def __mul__(self, other) -> "HyperComplex":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        ax, ay, av, aw = self.x, self.y, self.v, self.w
        bx, by, bv, bw = o.x, o.y, o.v, o.w
        # terms are paired symmetrically so that a*b == b*a holds bit-exactly
        return HyperComplex(
            (ax * bx - ay * by) + (av * bv - aw * bw),
            (ax * by + ay * bx) + (av * bw + aw * bv),
            (ax * bv + av * bx) - (ay * bw + aw * by),
            (ax * bw + aw * bx) + (ay * bv + av * by),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HyperComplex":
        if isinstance(other, numbers.Real):
            return HyperComplex(self.x / other, self.y / other,
                                self.v / other, self.w / other)
        if isinstance(other, HyperComplex):
            return self * other.inverse()
        return NotImplemented

    # -- involutions -------------------------------------------------------

    def conj(self) -> "HyperComplex":
        """Flip the sign of both i and j (ij is kept)."""
        return HyperComplex(self.x, -self.y, -self.v, self.w)

    def rev(self) -> "HyperComplex":
        """Flip the sign of i only (so ij flips too)."""
        return HyperComplex(self.x, -self.y, self.v, -self.w)

    def grade(self) -> "HyperComplex":
        """Flip the sign of j only.  conj == rev o grade == grade o rev."""
        return HyperComplex(self.x, self.y, -self.v, -self.w)

    # -- modulus and inversion ----------------------------------------------

    def modulus_sq(self) -> "HyperComplex":
        """z * conj(z); always of the form a + ij*b."""
        x, y, v, w = self.x, self.y, self.v, self.w
        return HyperComplex(x * x + y * y - v * v - w * w, 0.0, 0.0,
                            2.0 * (x * w - y * v))

    def real_norm(self) -> float:
        """a^2 + b^2 for modulus_sq = a + ij*b; real, degree 4, >= 0.

        Vanishes exactly on the null cone, where the element has no inverse.
        """
        m = self.modulus_sq()
        return m.x * m.x + m.w * m.w

    def inverse(self) -> "HyperComplex":
        """Multiplicative inverse conj(z) * (a - ij*b) / (a^2 + b^2).

        Raises ZeroDivisor when the real norm is below 1e-14 times the fourth
        power of the largest component (the norm is degree 4 in the components).
        """
        m = self.modulus_sq()
        a, b = m.x, m.w
        nrm = a * a + b * b
        scale = self.max_abs()
        if nrm <= 1e-14 * scale ** 4:
            raise ZeroDivisor(f"no inverse: {self} lies on the null cone")
        f = 1.0 / nrm
        x, y, v, w = self.x, self.y, self.v, self.w
        return HyperComplex((x * a + w * b) * f, (v * b - y * a) * f,
                            (-v * a - y * b) * f, (w * a - x * b) * f)

    # -- helpers -------------------------------------------------------------

    def max_abs(self) -> float:
        return max(abs(self.x), abs(self.y), abs(self.v), abs(self.w))

    def isclose(self, other: "HyperComplex", tol: float = 1e-12) -> bool:
        """Componentwise comparison with an absolute tolerance."""
        return (abs(self.x - other.x) <= tol and abs(self.y - other.y) <= tol
                and abs(self.v - other.v) <= tol and abs(self.w - other.w) <= tol)

    def coeffs(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.v, self.w)

    def __str__(self) -> str:
        return render_terms(zip(self.coeffs(), ("", "i", "j", "ij")))


def _coerce(value) -> HyperComplex | None:
    if isinstance(value, HyperComplex):
        return value
    if isinstance(value, numbers.Real):
        return HyperComplex(float(value))
    return None


def render_terms(terms) -> str:
    """Join (coefficient, basis-label) pairs into reparseable text.

    Zero terms are suppressed; an all-zero value renders as "0".  Products
    are written with an explicit '*' so the output stays inside the CLI
    expression grammar.
    """
    parts: list[str] = []
    for coeff, label in terms:
        if coeff == 0.0:
            continue
        if not label:
            body = format_real(abs(coeff))
        elif abs(coeff) == 1.0:
            body = label
        else:
            body = f"{format_real(abs(coeff))}*{label}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


ZERO = HyperComplex()
ONE = HyperComplex(1.0)
I = HyperComplex(0.0, 1.0)
J = HyperComplex(0.0, 0.0, 1.0)
IJ = HyperComplex(0.0, 0.0, 0.0, 1.0)
