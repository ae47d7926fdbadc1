import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS
from zxblock.circuit import CNOT, Circuit, H, Rx, Ry, Rz, X, Z
from zxblock.qasm import ParseError, QasmSemanticError, parse_qasm, to_qasm, tokenize

VALID = sorted((CORPUS / "valid").glob("*.qasm"))
MALFORMED = sorted((CORPUS / "malformed").glob("*.qasm"))


def test_examples():
    assert parse_qasm("qreg q[2]; cx q[0], q[1];") == Circuit(2, (CNOT(0, 1),))
    c = parse_qasm("qreg q[1]; rz(pi/2) q[0];")
    assert c.qubits == 1 and c.gates[0] == Rz(math.pi / 2, 0)
    with pytest.raises(QasmSemanticError, match="control equals target"):
        parse_qasm("qreg q[2]; cx q[1], q[1];")


def test_expressions():
    c = parse_qasm("qreg q[1]; rx(-(pi + 1) * 2 / 4) q[0]; ry(1.5e-1) q[0]; rz(.5) q[0];")
    assert c.gates[0].theta == pytest.approx(-(math.pi + 1) / 2)
    assert c.gates[1].theta == pytest.approx(0.15)
    assert c.gates[2].theta == pytest.approx(0.5)


def test_header_and_comments():
    text = "OPENQASM 2.0; // header\nqreg r[3];\n// gap\nh r[2]; x r[0]; z r[1];\n"
    assert parse_qasm(text) == Circuit(3, (H(2), X(0), Z(1)))


def test_error_spans():
    with pytest.raises(ParseError) as info:
        parse_qasm("qreg q[2];\nh q[5];")
    assert info.value.span.line == 2
    with pytest.raises(ParseError) as info:
        parse_qasm("qreg q[1];\n  h q[0]\n")
    assert info.value.span.line >= 2
    assert str(info.value).startswith(f"{info.value.span.line}:{info.value.span.column}: ")


def test_tokenize_positions():
    toks = tokenize("qreg q[2];\n  h")
    last = [t for t in toks if t.text == "h"][0]
    assert (last.span.line, last.span.column) == (2, 3)


def test_corpus_sizes():
    assert len(VALID) >= 30 and len(MALFORMED) >= 15


@pytest.mark.parametrize("path", VALID, ids=lambda p: p.stem)
def test_valid_corpus_round_trips(path):
    c = parse_qasm(path.read_text())
    assert parse_qasm(to_qasm(c)) == c


@pytest.mark.parametrize("path", MALFORMED, ids=lambda p: p.stem)
def test_malformed_corpus_reports_span(path):
    text = path.read_text()
    with pytest.raises(ParseError) as info:
        parse_qasm(text)
    span = info.value.span
    lines = text.split("\n")
    assert 1 <= span.line <= len(lines)
    assert 1 <= span.column <= len(lines[span.line - 1]) + 1


gate_st = st.one_of(
    st.builds(
        lambda cls, t, q: cls(t, q),
        st.sampled_from([Rx, Ry, Rz]),
        st.floats(-10, 10, allow_nan=False),
        st.integers(0, 3),
    ),
    st.builds(lambda cls, q: cls(q), st.sampled_from([H, X, Z]), st.integers(0, 3)),
    st.tuples(st.integers(0, 3), st.integers(0, 3))
    .filter(lambda p: p[0] != p[1])
    .map(lambda p: CNOT(*p)),
)


@given(st.lists(gate_st, max_size=10))
def test_round_trip_property(gates):
    c = Circuit(4, tuple(gates))
    assert parse_qasm(to_qasm(c)) == c


@given(st.text(alphabet="qreg[]();,hxzcrp0123456789.+-*/ \n", max_size=60))
def test_never_crashes(text):
    try:
        parse_qasm(text)
    except ParseError:
        pass
