"""Acceptance suite: the library's contract, one check per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.  Checks are deterministic (fixed seeds and grids).
"""

import math
import random

from hypalg import (E0, E1, E2, E3, S1, S2, S3, FourVector, HyperComplex,
                    LorentzParams, Multivector, Rotor, Spinor, act, apply,
                    boost, commutator, even_components, exp_general,
                    from_column, from_rotor, generators, minkowski_dot,
                    mott_factor, product_modulus_sq, rotation,
                    spin_transform, sprod_algebraic, sprod_column, sym,
                    to_column, to_matrix)
from hypalg.cayley import ONE, PSEUDOSCALAR, scalar
from hypalg.cli import main
from hypalg.hypernum import I, J

from conftest import rand_multivector, rand_subalgebra

H = HyperComplex


def _report(num: int, desc: str, ok: bool, detail: str = "") -> bool:
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'} {desc}"
    if detail and not ok:
        line += f" [{detail}]"
    print(line)
    return ok


def _grid(n_phi: int, n_theta: int, n_xi: int):
    for a in range(n_phi):
        for b in range(n_theta):
            for c in range(n_xi):
                yield (2.0 * math.pi * a / n_phi,
                       math.pi * b / max(1, n_theta - 1),
                       -3.0 + 6.0 * c / max(1, n_xi - 1))


def _random_rotor(rng) -> Rotor:
    r1 = rotation(tuple(rng.uniform(-math.pi, math.pi) for _ in range(3)))
    r2 = rotation(tuple(rng.uniform(-math.pi, math.pi) for _ in range(3)))
    scale = rng.uniform(0.0, 1.0)
    b = boost(tuple(scale * q for q in _unit3(rng)))
    return r2 * b * r1


def _unit3(rng):
    while True:
        q = tuple(rng.gauss(0.0, 1.0) for _ in range(3))
        n = math.sqrt(sum(c * c for c in q))
        if n > 1e-3:
            return tuple(3.0 * c / n for c in q)


def test_c01_involution_sign_table():
    table = [
        (E0, 1, 1, 1),
        (E1, -1, 1, -1), (E2, -1, 1, -1), (E3, -1, 1, -1),
        (S1, 1, 1, 1), (S2, 1, 1, 1), (S3, 1, 1, 1),
        (scalar(I), -1, -1, 1),
        (scalar(J), -1, 1, -1),
    ]
    ok = all(m.bar() == m * float(sb) and m.dagger() == m * float(sd)
             and m.hat() == m * float(sh)
             for m, sb, sd, sh in table)
    assert _report(1, "involution sign table, exact", ok)


def test_c02_metric():
    basis = (E0, E1, E2, E3)
    ok = True
    for mu in range(4):
        for nu in range(4):
            want = 0.0 if mu != nu else (1.0 if mu == 0 else -1.0)
            ok = ok and sym(basis[mu], basis[nu]) == scalar(want)
    worst = 0.0
    for phi, theta, xi in _grid(10, 10, 10):
        x = FourVector(math.sinh(xi),
                       math.cosh(xi) * math.sin(theta) * math.cos(phi),
                       math.cosh(xi) * math.sin(theta) * math.sin(phi),
                       math.cosh(xi) * math.cos(theta))
        worst = max(worst, abs(minkowski_dot(x, x) + 1.0))
    ok = ok and worst <= 1e-12
    assert _report(2, "metric diag(1,-1,-1,-1) and unit spacelike orbit", ok,
                   f"worst self-dot error {worst:.3e}")


def test_c03_anti_involution_laws():
    rng = random.Random(3)
    worst = 0.0
    ok = True
    for _ in range(1000):
        a, b = rand_multivector(rng), rand_multivector(rng)
        ab = a * b
        for lhs, rhs in ((ab.bar(), b.bar() * a.bar()),
                         (ab.dagger(), b.dagger() * a.dagger()),
                         (ab.hat(), a.hat() * b.hat())):
            ok = ok and lhs.isclose(rhs, 1e-12)
        ok = ok and a.bar() == a.hat().dagger()
    assert _report(3, "anti-involution laws on 1000 random pairs", ok,
                   f"worst {worst:.3e}")


def test_c04_lorentz_invariance():
    rng = random.Random(4)
    ok = True
    worst_dot, worst_unit = 0.0, 0.0
    for _ in range(1000):
        t = _random_rotor(rng)
        x = FourVector(*(rng.uniform(-2, 2) for _ in range(4)))
        y = FourVector(*(rng.uniform(-2, 2) for _ in range(4)))
        err = abs(minkowski_dot(apply(t, x), apply(t, y)) -
                  minkowski_dot(x, y))
        worst_dot = max(worst_dot, err)
        unit = t.value * t.value.bar()
        worst_unit = max(worst_unit, (unit - ONE).max_abs())
    ok = worst_dot <= 1e-10 and worst_unit <= 1e-12
    assert _report(4, "dot preservation and rotor unitarity, 1000 triples",
                   ok, f"dot {worst_dot:.3e}, unit {worst_unit:.3e}")


def test_c05_lie_algebra():
    J_gen, K_gen = generators()
    eps_tab = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
               (2, 1, 0): -1, (0, 2, 1): -1, (1, 0, 2): -1}
    ok = True
    for a in range(3):
        for b in range(3):
            if a == b:
                wants = (scalar(0.0),) * 3
            else:
                c = 3 - a - b
                i_eps = H(0, float(eps_tab[(a, b, c)]))
                wants = (J_gen[c] * i_eps, K_gen[c] * i_eps,
                         J_gen[c] * -i_eps)
            got = (commutator(J_gen[a], J_gen[b]),
                   commutator(J_gen[a], K_gen[b]),
                   commutator(K_gen[a], K_gen[b]))
            ok = ok and all(g.isclose(w, 1e-14) for g, w in zip(got, wants))
    assert _report(5, "all 27 Lorentz bracket identities", ok)


def test_c06_orbit_identity():
    standard = FourVector(0, 0, 0, 1)
    worst = 0.0
    for phi, theta, xi in _grid(10, 10, 10):
        image = apply(spin_transform(LorentzParams(phi, theta, xi)), standard)
        want = FourVector(math.sinh(xi),
                          math.cosh(xi) * math.sin(theta) * math.cos(phi),
                          math.cosh(xi) * math.sin(theta) * math.sin(phi),
                          math.cosh(xi) * math.cos(theta))
        worst = max(worst, *(abs(p - q) for p, q in
                             zip(image.components(), want.components())))
    assert _report(6, "spin-transform orbit of the standard vector",
                   worst <= 1e-12, f"worst {worst:.3e}")


def test_c07_closed_form_components():
    worst = 0.0
    for phi, theta, xi in _grid(10, 10, 10):
        ec = even_components(from_rotor(
            spin_transform(LorentzParams(phi, theta, xi))))
        cp, sp = math.cos(phi / 2), math.sin(phi / 2)
        ct, st = math.cos(theta / 2), math.sin(theta / 2)
        ch, sh = math.cosh(xi / 2), math.sinh(xi / 2)
        # canonical positive-index forms; pair-reversed entries flip sign,
        # and the 3210-ordered pseudoscalar enters the 0123 expansion
        # with a sign flip as well
        want = {"s": cp * ct * ch, "b10": cp * st * sh, "b20": sp * st * sh,
                "b30": cp * ct * sh, "b21": -(sp * ct * ch),
                "b13": -(cp * st * ch), "b32": sp * st * ch,
                "p": -(sp * ct * sh)}
        got = ec.as_dict()
        worst = max(worst, *(abs(got[k] - v) for k, v in want.items()))
    assert _report(7, "eight closed-form spinor components on the grid",
                   worst <= 1e-12, f"worst {worst:.3e}")


def test_c08_column_correspondence():
    rng = random.Random(8)
    ok = True
    for _ in range(1000):
        psi = Spinor(rand_subalgebra(rng))
        back = from_column(to_column(psi))
        ok = ok and back.value.isclose(psi.value, 1e-14)
    operators = (PSEUDOSCALAR,
                 Multivector(z1=H(0, 1)), Multivector(z2=H(0, 1)),
                 Multivector(z3=H(0, 1)),
                 Multivector(z1=H(0, 0, 1)), Multivector(z2=H(0, 0, 1)),
                 Multivector(z3=H(0, 0, 1)))
    worst = 0.0
    for omega in operators:
        mat = to_matrix(omega)
        for _ in range(100):
            psi = Spinor(rand_subalgebra(rng))
            lhs = to_column(act(omega, psi))
            rhs = mat.apply(to_column(psi))
            worst = max(worst, (lhs.c1 - rhs.c1).max_abs(),
                        (lhs.c2 - rhs.c2).max_abs())
    ok = ok and worst <= 1e-12
    assert _report(8, "column bijection and 7-operator equivariance", ok,
                   f"worst {worst:.3e}")


def test_c09_product_equivalence():
    rng = random.Random(9)
    worst = 0.0
    for _ in range(1000):
        a, b = Spinor(rand_subalgebra(rng)), Spinor(rand_subalgebra(rng))
        lhs = sprod_algebraic(a, b)
        rhs = sprod_column(to_column(a), to_column(b))
        worst = max(worst, (lhs - rhs).max_abs())
    assert _report(9, "algebraic vs column spinor product, 1000 pairs",
                   worst <= 1e-12, f"worst {worst:.3e}")


def test_c10_cross_section_closed_form():
    standard = Spinor.standard()
    worst = 0.0
    worst_at = None
    for a in range(12):
        for b in range(12):
            for c in range(9):
                phi = 2.0 * math.pi * a / 12
                theta = math.pi * b / 11
                xi = -3.0 + 6.0 * c / 8
                psi = from_rotor(spin_transform(LorentzParams(phi, theta, xi)))
                got = product_modulus_sq(psi, standard)
                ct2 = math.cos(theta / 2) ** 2
                want = H(ct2, 0.0, 0.0, ct2 * math.sinh(xi) * math.sin(phi))
                err = (got - want).max_abs()
                if err > worst:
                    worst, worst_at = err, (phi, theta, xi)
    grid_ok = worst <= 1e-12

    elastic_ok = True
    for b in range(12):
        theta = math.pi * b / 11
        for phi in (0.0, 1.1, 2.7):
            got = product_modulus_sq(from_rotor(
                spin_transform(LorentzParams(phi, theta, 0.0))), standard)
            elastic_ok = elastic_ok and abs(got.w) <= 1e-12 \
                and abs(got.x - mott_factor(theta)) <= 1e-12

    ok = grid_ok and elastic_ok
    assert _report(
        10, "cross-section closed form cos^2(theta/2)(1+ij sinh xi sin phi)",
        ok, f"grid worst {worst:.3e} at {worst_at}; "
            f"elastic clause {'ok' if elastic_ok else 'failed'}")


def test_c11_normalization():
    rng = random.Random(11)
    worst = 0.0
    for _ in range(1000):
        params = LorentzParams(rng.uniform(0, 2 * math.pi),
                               rng.uniform(0, math.pi), rng.uniform(-3, 3))
        psi = from_rotor(spin_transform(params))
        col = to_column(psi)
        worst = max(worst, (sprod_column(col, col) - H(1)).max_abs(),
                    (psi.value.bar() * psi.value - ONE).max_abs())
    assert _report(11, "spinor normalization, 1000 parameter triples",
                   worst <= 1e-12, f"worst {worst:.3e}")


def test_c12_exponential_and_matrix_homomorphism():
    rng = random.Random(12)
    worst_exp = 0.0
    for _ in range(100):
        axis = _unit3(rng)
        mag = rng.uniform(0.0, 6.0)
        vec = tuple(mag * q / 3.0 for q in axis)
        rot_arg = Multivector(z1=H(0, -vec[0] / 2), z2=H(0, -vec[1] / 2),
                              z3=H(0, -vec[2] / 2))
        boost_arg = Multivector(z1=H(0, 0, vec[0] / 2), z2=H(0, 0, vec[1] / 2),
                                z3=H(0, 0, vec[2] / 2))
        worst_exp = max(
            worst_exp,
            (exp_general(rot_arg) - rotation(vec).value).max_abs(),
            (exp_general(boost_arg) - boost(vec).value).max_abs())
    ok = worst_exp <= 1e-10

    worst_hom = 0.0
    for _ in range(1000):
        a, b = rand_multivector(rng), rand_multivector(rng)
        lhs = to_matrix(a * b)
        rhs = to_matrix(a) * to_matrix(b)
        worst_hom = max(worst_hom,
                        *((getattr(lhs, s) - getattr(rhs, s)).max_abs()
                          for s in ("m11", "m12", "m21", "m22")))
    ok = ok and worst_hom <= 1e-12
    assert _report(12, "series exponential and 2x2 representation", ok,
                   f"exp {worst_exp:.3e}, hom {worst_hom:.3e}")


def test_c13_cli_golden_outputs(capsys):
    def run(*argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    ok = True
    outs = [run("cross-section", "--theta", "1.5707963", "--xi", "0",
                "--phi", "0") for _ in range(2)]
    ok = ok and outs[0] == outs[1] and outs[0][0] == 0
    lines = dict(line.split() for line in outs[0][1].splitlines())
    ok = ok and abs(float(lines["re"]) - 0.5) < 1e-7 \
        and float(lines["ij"]) == 0.0

    outs = [run("spinor", "--phi", "0", "--theta", "0", "--xi", "0", "--even")
            for _ in range(2)]
    ok = ok and outs[0] == outs[1]
    lines = dict(line.split() for line in outs[0][1].splitlines())
    ok = ok and lines["s"] == "1" \
        and all(lines[k] == "0" for k in ("b32", "b13", "b21", "b10",
                                          "b20", "b30", "p"))

    code, _ = run("verify")
    ok = ok and code == 0
    _report(13, "CLI golden outputs byte-stable, verify exits 0", ok)
    assert ok
