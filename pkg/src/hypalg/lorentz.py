"""Rotors, boosts, Lorentz generators, and the spin transformation.

Rotations are ``exp(-i theta^k s_k / 2)`` and boosts ``exp(j xi^k s_k / 2)``;
both act on embedded four-vectors by the two-sided sandwich ``t x dagger(t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cayley import ONE, S1, S2, S3, FourVector, Multivector, embed, extract
from .hypernum import HyperComplex


class NoConvergence(ArithmeticError):
    """Exponential series failed to settle; the input is pathological."""


@dataclass(frozen=True, slots=True)
class LorentzParams:
    """Azimuth phi, polar angle theta (radians) and rapidity xi."""

    phi: float = 0.0
    theta: float = 0.0
    xi: float = 0.0


@dataclass(frozen=True, slots=True)
class Rotor:
    """A spin-group element: value * bar(value) == 1."""

    value: Multivector

    def __mul__(self, other: "Rotor") -> "Rotor":
        """Composition; (t2 * t1) acts as t2 after t1."""
        if not isinstance(other, Rotor):
            return NotImplemented
        return Rotor(self.value * other.value)

    def inverse(self) -> "Rotor":
        return Rotor(self.value.bar())

    def is_unit(self, tol: float = 1e-12) -> bool:
        return (self.value * self.value.bar()).isclose(ONE, tol)


IDENTITY = Rotor(ONE)


def rotation(axis_angle) -> Rotor:
    """Closed form cos(|t|/2) - i sin(|t|/2) (t_hat . s) for axis-angle t."""
    tx, ty, tz = axis_angle
    t = math.sqrt(tx * tx + ty * ty + tz * tz)
    if t == 0.0:
        return IDENTITY
    s = -math.sin(t / 2.0) / t
    return Rotor(Multivector(HyperComplex(math.cos(t / 2.0)),
                             HyperComplex(0.0, s * tx),
                             HyperComplex(0.0, s * ty),
                             HyperComplex(0.0, s * tz)))


def boost(rapidity) -> Rotor:
    """Closed form cosh(|x|/2) + j sinh(|x|/2) (x_hat . s) for rapidity x."""
    bx, by, bz = rapidity
    t = math.sqrt(bx * bx + by * by + bz * bz)
    if t == 0.0:
        return IDENTITY
    s = math.sinh(t / 2.0) / t
    return Rotor(Multivector(HyperComplex(math.cosh(t / 2.0)),
                             HyperComplex(0.0, 0.0, s * bx),
                             HyperComplex(0.0, 0.0, s * by),
                             HyperComplex(0.0, 0.0, s * bz)))


def exp_general(a: Multivector) -> Multivector:
    """Taylor exponential with scaling and squaring.

    Agrees with the rotation/boost closed forms on their generators; exists
    as an independent cross-check of those formulas.
    """
    scale = a.max_abs()
    squarings = 0
    if math.isfinite(scale) and scale > 1.0:
        squarings = max(1, math.ceil(math.log2(scale)))
        a = a * (2.0 ** -squarings)
    acc = ONE
    term = ONE
    for n in range(1, 201):
        term = term * a * (1.0 / n)
        acc = acc + term
        if term.max_abs() < 1e-16 * max(1.0, acc.max_abs()):
            break
    else:
        raise NoConvergence("exponential series did not settle in 200 terms")
    for _ in range(squarings):
        acc = acc * acc
    return acc


def apply(t: Rotor, x: FourVector) -> FourVector:
    """Sandwich t x dagger(t) on the embedded paravector.

    NotAParavector propagates when the sandwich leaves the paravector span,
    which signals that t is not actually a rotor.
    """
    image = t.value * embed(x) * t.value.dagger()
    return extract(image, 1e-12)


def generators() -> tuple[tuple[Multivector, ...], tuple[Multivector, ...]]:
    """The rotation generators s_k/2 and boost generators ij s_k/2."""
    half = HyperComplex(0.5)
    ij_half = HyperComplex(0.0, 0.0, 0.0, 0.5)
    J = tuple(sigma * half for sigma in (S1, S2, S3))
    K = tuple(sigma * ij_half for sigma in (S1, S2, S3))
    return J, K


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a * b - b * a


def spin_transform(p: LorentzParams) -> Rotor:
    """exp(-i phi s3/2) exp(-i theta s2/2) exp(j xi s3/2), in that order."""
    return rotation((0.0, 0.0, p.phi)) * rotation((0.0, p.theta, 0.0)) \
        * boost((0.0, 0.0, p.xi))


def matrix_of(t: Rotor) -> np.ndarray:
    """The 4x4 real matrix M with M x = apply(t, x), built column by column."""
    m = np.empty((4, 4))
    for mu in range(4):
        basis = [0.0, 0.0, 0.0, 0.0]
        basis[mu] = 1.0
        m[:, mu] = apply(t, FourVector(*basis)).components()
    return m
