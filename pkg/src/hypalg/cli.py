"""Command-line front end with a small expression language.

Grammar (left-associative, unary minus binds tightest):

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | atom
    atom  := NUMBER | CONST | IDENT "(" [expr ("," expr)*] ")" | "(" expr ")"

Constants: e0 e1 e2 e3 s1 s2 s3 i j ij.  Functions: bar rev grad exp inv
dot wedge boost rot spinor sprod norm2 commutator.  Angles are radians,
rapidities dimensionless.  Exit codes: 2 parse/type error, 3 zero divisor,
1 verify failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

from . import cayley, lorentz, spinor
from .cayley import (E, E0, E1, E2, E3, S1, S2, S3, FourVector, Multivector,
                     NotAParavector, antisym, extract, minkowski_dot, scalar,
                     sym)
from .hypernum import I, IJ, J, HyperComplex, ZeroDivisor, format_real
from .lorentz import LorentzParams, boost, commutator, exp_general, \
    generators, rotation, spin_transform
from .spinor import (NotInSpinorAlgebra, Spinor, even_components, from_rotor,
                     mott_factor, product_modulus_sq, sprod_algebraic)

CONSTANTS: dict[str, Multivector | HyperComplex] = {
    "e0": E0, "e1": E1, "e2": E2, "e3": E3,
    "s1": S1, "s2": S2, "s3": S3,
    "i": I, "j": J, "ij": IJ,
}

FUNCTION_ARITY = {
    "bar": 1, "rev": 1, "grad": 1, "exp": 1, "inv": 1, "norm2": 1,
    "dot": 2, "wedge": 2, "sprod": 2, "commutator": 2,
    "boost": 3, "rot": 3, "spinor": 3,
}


class ExprSyntaxError(ValueError):
    def __init__(self, offset: int, expected: tuple[str, ...]):
        self.offset = offset
        self.expected = expected
        super().__init__(
            f"syntax error at offset {offset}: expected {', '.join(expected)}")


class EvalTypeError(TypeError):
    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"type error at offset {offset}: {message}")


# -- abstract syntax ----------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Const:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: object
    rhs: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False)


# -- tokenizer / parser -------------------------------------------------------

_PUNCT = "+-*(),"


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    """(kind, text, offset) triples; kinds NUMBER, NAME, one-char punct, EOF."""
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch in " \t\r\n":
            pos += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < n and src[pos + 1].isdigit()):
            start = pos
            while pos < n and src[pos].isdigit():
                pos += 1
            if pos < n and src[pos] == ".":
                pos += 1
                while pos < n and src[pos].isdigit():
                    pos += 1
            if pos < n and src[pos] in "eE":
                mark = pos
                pos += 1
                if pos < n and src[pos] in "+-":
                    pos += 1
                if pos < n and src[pos].isdigit():
                    while pos < n and src[pos].isdigit():
                        pos += 1
                else:
                    pos = mark
            tokens.append(("NUMBER", src[start:pos], start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            tokens.append(("NAME", src[start:pos], start))
            continue
        raise ExprSyntaxError(pos, ("a number", "a name", "an operator"))
    tokens.append(("EOF", "", n))
    return tokens


_ATOM_EXPECTED = ("a number", "a constant", "a function call", "'('", "'-'")


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ExprSyntaxError(tok[2], (f"'{kind}'",))
        return self.advance()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ExprSyntaxError(tok[2], ("'+'", "'-'", "'*'", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, pos = self.advance()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "*":
            _, _, pos = self.advance()
            node = BinOp("*", node, self.unary(), pos)
        return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "-":
            self.advance()
            return Neg(self.unary(), tok[2])
        return self.atom()

    def atom(self):
        kind, text, pos = self.peek()
        if kind == "NUMBER":
            self.advance()
            return Num(float(text), pos)
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "NAME":
            self.advance()
            if text in FUNCTION_ARITY:
                self.expect("(")
                args = []
                if self.peek()[0] != ")":
                    args.append(self.expr())
                    while self.peek()[0] == ",":
                        self.advance()
                        args.append(self.expr())
                self.expect(")")
                return Call(text, tuple(args), pos)
            if text in CONSTANTS:
                return Const(text, pos)
            raise ExprSyntaxError(pos, ("a constant", "a function name"))
        raise ExprSyntaxError(pos, _ATOM_EXPECTED)


def parse(src: str):
    """Parse source text into an AST; positions are source offsets."""
    return _Parser(src).parse()


def render(node) -> str:
    """Canonical text for an AST; reparsing it yields an equal AST."""
    if isinstance(node, Num):
        return format_real(node.value)
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Call):
        return f"{node.name}({', '.join(render(a) for a in node.args)})"
    if isinstance(node, Neg):
        inner = render(node.operand)
        if isinstance(node.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, BinOp):
        lhs = render(node.lhs)
        rhs = render(node.rhs)
        if node.op == "*":
            if isinstance(node.lhs, BinOp) and node.lhs.op != "*":
                lhs = f"({lhs})"
            if isinstance(node.rhs, BinOp):
                rhs = f"({rhs})"
            return f"{lhs}*{rhs}"
        if isinstance(node.rhs, BinOp) and node.rhs.op != "*":
            rhs = f"({rhs})"
        return f"{lhs} {node.op} {rhs}"
    raise TypeError(f"not an AST node: {node!r}")


# -- evaluation ------------------------------------------------------------------

def _as_multivector(value) -> Multivector:
    if isinstance(value, Multivector):
        return value
    if isinstance(value, HyperComplex):
        return Multivector(value)
    return Multivector(HyperComplex(float(value)))


def _as_hyper(value, pos: int) -> HyperComplex:
    if isinstance(value, Multivector):
        raise EvalTypeError(pos, "expected a scalar, got a multivector")
    if isinstance(value, HyperComplex):
        return value
    return HyperComplex(float(value))


def _as_real(value, pos: int) -> float:
    if isinstance(value, float):
        return value
    if isinstance(value, HyperComplex) and value.y == value.v == value.w == 0.0:
        return value.x
    raise EvalTypeError(pos, "expected a real number")


def _binary(op: str, a, b):
    if isinstance(a, Multivector) or isinstance(b, Multivector):
        a, b = _as_multivector(a), _as_multivector(b)
    elif isinstance(a, HyperComplex) or isinstance(b, HyperComplex):
        if not isinstance(a, HyperComplex):
            a = HyperComplex(float(a))
        if not isinstance(b, HyperComplex):
            b = HyperComplex(float(b))
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    return a * b


def _eval_call(name: str, args: list, positions: list[int], pos: int):
    if name in ("bar", "rev", "grad"):
        val = args[0]
        if isinstance(val, float):
            return val
        if isinstance(val, HyperComplex):
            return {"bar": val.conj, "rev": val.rev, "grad": val.grade}[name]()
        return {"bar": val.bar, "rev": val.dagger, "grad": val.hat}[name]()
    if name == "exp":
        val = args[0]
        if isinstance(val, float):
            return math.exp(val)
        if isinstance(val, HyperComplex):
            return exp_general(Multivector(val)).scalar()
        return exp_general(val)
    if name == "inv":
        val = args[0]
        if isinstance(val, float):
            val = HyperComplex(val)
        return val.inverse()
    if name == "norm2":
        return _as_hyper(args[0], positions[0]).modulus_sq()
    if name == "dot":
        vectors = []
        for value, p in zip(args, positions):
            try:
                vectors.append(extract(_as_multivector(value)))
            except NotAParavector as exc:
                raise EvalTypeError(p, f"dot needs embedded four-vectors ({exc})")
        return minkowski_dot(*vectors)
    if name == "wedge":
        return antisym(_as_multivector(args[0]), _as_multivector(args[1]))
    if name == "commutator":
        return commutator(_as_multivector(args[0]), _as_multivector(args[1]))
    if name == "sprod":
        spinors = []
        for value, p in zip(args, positions):
            try:
                spinors.append(spinor.from_multivector(_as_multivector(value)))
            except NotInSpinorAlgebra as exc:
                raise EvalTypeError(p, str(exc))
        return sprod_algebraic(*spinors)
    reals = [_as_real(value, p) for value, p in zip(args, positions)]
    if name == "boost":
        return boost(reals).value
    if name == "rot":
        return rotation(reals).value
    return spin_transform(LorentzParams(*reals)).value


def evaluate(node):
    """Evaluate an AST to a real, hyperbolic-complex, or multivector value."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Const):
        value = CONSTANTS[node.name]
        return value
    if isinstance(node, Neg):
        return _binary("-", 0.0, evaluate(node.operand))
    if isinstance(node, BinOp):
        return _binary(node.op, evaluate(node.lhs), evaluate(node.rhs))
    if isinstance(node, Call):
        arity = FUNCTION_ARITY[node.name]
        if len(node.args) != arity:
            raise EvalTypeError(
                node.pos,
                f"{node.name} takes {arity} argument(s), got {len(node.args)}")
        args = [evaluate(a) for a in node.args]
        positions = [a.pos for a in node.args]
        return _eval_call(node.name, args, positions, node.pos)
    raise TypeError(f"not an AST node: {node!r}")


# -- output formatting --------------------------------------------------------------

def _round12(value: float) -> float:
    return float(format_real(value))


def value_to_json(value) -> dict:
    if isinstance(value, Multivector):
        return {"kind": "multivector",
                "coeffs": [_round12(c) for c in value.coeffs16()],
                "basis": list(cayley.BASIS_LABELS)}
    if isinstance(value, HyperComplex):
        return {"kind": "hypercomplex",
                "coeffs": [_round12(c) for c in value.coeffs()],
                "basis": ["1", "i", "j", "ij"]}
    return {"kind": "real", "coeffs": [_round12(value)], "basis": ["1"]}


def value_to_text(value) -> str:
    if isinstance(value, (Multivector, HyperComplex)):
        return str(value)
    return format_real(value)


# -- subcommands -------------------------------------------------------------------

def _cmd_eval(args) -> int:
    value = evaluate(parse(args.expr))
    if args.json:
        print(json.dumps(value_to_json(value)))
    else:
        print(value_to_text(value))
    return 0


def _triple(text: str):
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values: {text!r}")
    return tuple(parts)


def _cmd_transform(args) -> int:
    parts = [float(p) for p in args.vector.split(",")]
    if len(parts) != 4:
        print(f"error: --vector needs four components: {args.vector!r}",
              file=sys.stderr)
        return 2
    total = boost(_triple(args.boost)) * rotation(_triple(args.rotate))
    image = lorentz.apply(total, FourVector(*parts))
    if args.json:
        print(json.dumps({"kind": "fourvector",
                          "coeffs": [_round12(c) for c in image.components()]}))
    else:
        print(" ".join(format_real(c) for c in image.components()))
    return 0


def _closed_form_even(p: LorentzParams) -> dict[str, float]:
    cp, sp = math.cos(p.phi / 2.0), math.sin(p.phi / 2.0)
    ct, st = math.cos(p.theta / 2.0), math.sin(p.theta / 2.0)
    ch, sh = math.cosh(p.xi / 2.0), math.sinh(p.xi / 2.0)
    return {"s": cp * ct * ch, "b32": sp * st * ch, "b13": -cp * st * ch,
            "b21": -sp * ct * ch, "b10": cp * st * sh, "b20": sp * st * sh,
            "b30": cp * ct * sh, "p": -sp * ct * sh}


def _cmd_spinor(args) -> int:
    params = LorentzParams(args.phi, args.theta, args.xi)
    psi = from_rotor(spin_transform(params))
    if args.check:
        expected = _closed_form_even(params)
        got = even_components(psi).as_dict()
        worst = max(abs(got[k] - expected[k]) for k in expected)
        if worst > 1e-12:
            print(f"check failed: max component error {worst:.3e}",
                  file=sys.stderr)
            return 1
    if args.view == "odd":
        oc = spinor.odd_components(psi)
        if args.json:
            print(json.dumps({"v": [_round12(c) for c in oc.v],
                              "eta": [_round12(c) for c in oc.eta]}))
        else:
            print("v " + " ".join(format_real(c) for c in oc.v))
            print("eta " + " ".join(format_real(c) for c in oc.eta))
    elif args.view == "column":
        col = spinor.to_column(psi)
        if args.json:
            print(json.dumps({"c1": [_round12(c) for c in col.c1.coeffs()],
                              "c2": [_round12(c) for c in col.c2.coeffs()]}))
        else:
            print(f"c1 {col.c1}")
            print(f"c2 {col.c2}")
    else:
        ec = even_components(psi).as_dict()
        if args.json:
            print(json.dumps({k: _round12(v) for k, v in ec.items()}))
        else:
            for key, val in ec.items():
                print(f"{key} {format_real(val)}")
    return 0


def _cmd_cross_section(args) -> int:
    params = LorentzParams(args.phi, args.theta, args.xi)
    psi = from_rotor(spin_transform(params))
    m2 = product_modulus_sq(psi, Spinor.standard())
    mott = mott_factor(args.theta)
    if args.json:
        print(json.dumps({"kind": "cross-section", "re": _round12(m2.x),
                          "ij": _round12(m2.w), "mott": _round12(mott)}))
    else:
        print(f"re {format_real(m2.x)}")
        print(f"ij {format_real(m2.w)}")
        print(f"mott {format_real(mott)}")
    return 0


_SIGN_TABLE = (
    ("e0", E0, (1, 1, 1)),
    ("e1", E1, (-1, 1, -1)),
    ("e2", E2, (-1, 1, -1)),
    ("e3", E3, (-1, 1, -1)),
    ("s1", S1, (1, 1, 1)),
    ("s2", S2, (1, 1, 1)),
    ("s3", S3, (1, 1, 1)),
    ("i", scalar(I), (-1, -1, 1)),
    ("j", scalar(J), (-1, 1, -1)),
)

_EPS = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
        (3, 2, 1): -1, (1, 3, 2): -1, (2, 1, 3): -1}


def _verify_checks():
    """Yield (name, passed, detail) for the built-in identity suites."""
    for name, element, signs in _SIGN_TABLE:
        got = (element.bar(), element.dagger(), element.hat())
        want = tuple(element * float(s) for s in signs)
        yield (f"involution signs of {name}", got == want, f"{signs}")

    for mu in range(4):
        for nu in range(4):
            want = 0.0
            if mu == nu:
                want = 1.0 if mu == 0 else -1.0
            got = sym(E[mu], E[nu])
            ok = got == scalar(want)
            yield (f"metric e{mu}.e{nu} = {format_real(want)}", ok, str(got))

    J_gen, K_gen = generators()
    zero = cayley.ONE * 0.0
    for a in range(3):
        for b in range(3):
            if a == b:
                eps, c = 0, 0
            else:
                c = 3 - a - b
                eps = _EPS[(a + 1, b + 1, c + 1)]
            i_eps = HyperComplex(0.0, float(eps))
            checks = (
                ("J,J", commutator(J_gen[a], J_gen[b]),
                 J_gen[c] * i_eps if eps else zero),
                ("J,K", commutator(J_gen[a], K_gen[b]),
                 K_gen[c] * i_eps if eps else zero),
                ("K,K", commutator(K_gen[a], K_gen[b]),
                 J_gen[c] * (-i_eps) if eps else zero),
            )
            for label, got, want in checks:
                ok = got.isclose(want, 1e-14)
                yield (f"bracket [{label}] indices ({a + 1},{b + 1})", ok, "")


def _cmd_verify(_args) -> int:
    failed = 0
    for name, ok, detail in _verify_checks():
        if ok:
            print(f"ok {name}")
        else:
            failed += 1
            print(f"FAIL {name}: {detail}")
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypalg",
        description="Hyperbolic-complex Clifford algebra calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expr")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=_cmd_eval)

    p_tr = sub.add_parser("transform",
                          help="apply a rotation then a boost to a four-vector")
    p_tr.add_argument("--boost", default="0,0,0", metavar="BX,BY,BZ")
    p_tr.add_argument("--rotate", default="0,0,0", metavar="AX,AY,AZ")
    p_tr.add_argument("--vector", required=True, metavar="X0,X1,X2,X3")
    p_tr.add_argument("--json", action="store_true")
    p_tr.set_defaults(func=_cmd_transform)

    p_sp = sub.add_parser("spinor", help="spinor components for given parameters")
    p_sp.add_argument("--phi", type=float, default=0.0)
    p_sp.add_argument("--theta", type=float, default=0.0)
    p_sp.add_argument("--xi", type=float, default=0.0)
    view = p_sp.add_mutually_exclusive_group()
    view.add_argument("--even", dest="view", action="store_const", const="even")
    view.add_argument("--odd", dest="view", action="store_const", const="odd")
    view.add_argument("--column", dest="view", action="store_const",
                      const="column")
    p_sp.set_defaults(view="even")
    p_sp.add_argument("--check", action="store_true",
                      help="cross-check against the closed-form components")
    p_sp.add_argument("--json", action="store_true")
    p_sp.set_defaults(func=_cmd_spinor)

    p_cs = sub.add_parser("cross-section",
                          help="spinor-product square and elastic factor")
    p_cs.add_argument("--phi", type=float, default=0.0)
    p_cs.add_argument("--theta", type=float, default=0.0)
    p_cs.add_argument("--xi", type=float, default=0.0)
    p_cs.add_argument("--json", action="store_true")
    p_cs.set_defaults(func=_cmd_cross_section)

    p_v = sub.add_parser("verify", help="run the built-in identity suites")
    p_v.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, EvalTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
