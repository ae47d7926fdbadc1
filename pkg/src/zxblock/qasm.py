"""Reader and writer for a small OpenQASM 2.0 subset.

Accepted input::

    OPENQASM 2.0;            // optional header
    qreg q[3];               // exactly one register, before any gate
    rx(pi/4) q[0];           // also ry, rz; argument is a constant expression
    h q[1];                  // also x, z
    cx q[0], q[2];

Angle expressions use numeric literals, ``pi``, ``+ - * /``, unary minus and
parentheses.  Errors carry the line and column of the offending token.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .circuit import CNOT, ROTATIONS, Circuit, Gate, H, Rx, Ry, Rz, X, Z


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan) -> None:
        self.message = message
        self.span = span
        super().__init__(f"{span.line}:{span.column}: {message}")


class QasmSemanticError(ParseError):
    """Well-formed text that does not describe a valid circuit."""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>//[^\n]*)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[;,\[\]()+\-*/])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = SourceSpan(line, pos - line_start + 1)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), span))
        pos = m.end()
    out.append(Token("eof", "", SourceSpan(line, pos - line_start + 1)))
    return out


_ROTATION_NAMES = {"rx": Rx, "ry": Ry, "rz": Rz}
_FIXED_NAMES = {"h": H, "x": X, "z": Z}


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.pos = 0
        self.reg_name: str | None = None
        self.reg_size = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.span)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("punct", "ident"):
            raise self.fail(f"expected {text!r}")
        return self.advance()

    # -- expressions --------------------------------------------------------

    def expr(self) -> float:
        value = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "punct":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> float:
        value = self.unary()
        while self.tok.text in ("*", "/") and self.tok.kind == "punct":
            op_tok = self.advance()
            rhs = self.unary()
            if op_tok.text == "*":
                value *= rhs
            elif rhs == 0:
                raise QasmSemanticError("division by zero", op_tok.span)
            else:
                value /= rhs
        return value

    def unary(self) -> float:
        if self.tok.kind == "punct" and self.tok.text in ("-", "+"):
            sign = -1.0 if self.advance().text == "-" else 1.0
            return sign * self.unary()
        return self.atom()

    def atom(self) -> float:
        t = self.tok
        if t.kind == "number":
            self.advance()
            return float(t.text)
        if t.kind == "ident" and t.text == "pi":
            self.advance()
            return math.pi
        if t.kind == "punct" and t.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise self.fail("expected a number, 'pi' or '('")

    # -- statements ---------------------------------------------------------

    def qubit(self) -> int:
        name = self.tok
        if name.kind != "ident":
            raise self.fail("expected a register name")
        self.advance()
        self.expect("[")
        idx_tok = self.tok
        if idx_tok.kind != "number" or not idx_tok.text.isdigit():
            raise self.fail("expected a qubit index")
        self.advance()
        self.expect("]")
        if self.reg_name is None:
            raise QasmSemanticError("gate used before 'qreg' declaration", name.span)
        if name.text != self.reg_name:
            raise QasmSemanticError(f"unknown register {name.text!r}", name.span)
        idx = int(idx_tok.text)
        if idx >= self.reg_size:
            raise QasmSemanticError(
                f"qubit index {idx} out of range for register of size {self.reg_size}", idx_tok.span
            )
        return idx

    def header(self) -> None:
        if self.tok.kind == "ident" and self.tok.text == "OPENQASM":
            self.advance()
            ver = self.tok
            if ver.kind != "number" or ver.text != "2.0":
                raise self.fail("expected version 2.0")
            self.advance()
            self.expect(";")

    def qreg(self) -> None:
        start = self.advance()
        if self.reg_name is not None:
            raise QasmSemanticError("duplicate qreg declaration", start.span)
        name = self.tok
        if name.kind != "ident":
            raise self.fail("expected a register name")
        self.advance()
        self.expect("[")
        size_tok = self.tok
        if size_tok.kind != "number" or not size_tok.text.isdigit():
            raise self.fail("expected a register size")
        self.advance()
        self.expect("]")
        self.expect(";")
        if int(size_tok.text) < 1:
            raise QasmSemanticError("register size must be at least 1", size_tok.span)
        self.reg_name, self.reg_size = name.text, int(size_tok.text)

    def statement(self) -> Gate | None:
        t = self.tok
        if t.kind != "ident":
            raise self.fail("expected a statement")
        if t.text == "qreg":
            self.qreg()
            return None
        if t.text in _ROTATION_NAMES:
            self.advance()
            self.expect("(")
            arg_tok = self.tok
            theta = self.expr()
            if not math.isfinite(theta):
                raise QasmSemanticError("angle is not a finite number", arg_tok.span)
            self.expect(")")
            target = self.qubit()
            self.expect(";")
            return _ROTATION_NAMES[t.text](theta, target)
        if t.text in _FIXED_NAMES:
            self.advance()
            target = self.qubit()
            self.expect(";")
            return _FIXED_NAMES[t.text](target)
        if t.text == "cx":
            self.advance()
            control = self.qubit()
            self.expect(",")
            target = self.qubit()
            self.expect(";")
            if control == target:
                raise QasmSemanticError("control equals target", t.span)
            return CNOT(control, target)
        raise ParseError(f"unsupported statement {t.text!r}", t.span)

    def circuit(self) -> Circuit:
        self.header()
        gates: list[Gate] = []
        while self.tok.kind != "eof":
            g = self.statement()
            if g is not None:
                gates.append(g)
        if self.reg_name is None:
            raise QasmSemanticError("missing qreg declaration", self.tok.span)
        return Circuit(self.reg_size, tuple(gates))


def parse_qasm(text: str) -> Circuit:
    parser = _Parser(text)
    try:
        return parser.circuit()
    except RecursionError:
        raise ParseError("expression nested too deeply", parser.tok.span) from None


def to_qasm(c: Circuit, reg: str = "q") -> str:
    lines = ["OPENQASM 2.0;", f"qreg {reg}[{c.qubits}];"]
    for g in c.gates:
        if isinstance(g, ROTATIONS):
            name = type(g).__name__.lower()
            lines.append(f"{name}({g.theta!r}) {reg}[{g.target}];")
        elif isinstance(g, CNOT):
            lines.append(f"cx {reg}[{g.control}], {reg}[{g.target}];")
        else:
            lines.append(f"{type(g).__name__.lower()} {reg}[{g.target}];")
    return "\n".join(lines) + "\n"
