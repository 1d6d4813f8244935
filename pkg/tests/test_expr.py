"""Expression text parsing and its agreement with an independent evaluator."""

import itertools

import pytest

from qcamaj import parse_expr, format_expr, truth_table
from qcamaj.errors import ParseError, UnknownVariableError

import _oracles

NAMES = ("A", "B", "C")


def minterms(text, names=NAMES):
    return truth_table(parse_expr(text, names)).minterms()


def test_single_variable_and_constants():
    assert minterms("A") == frozenset({4, 5, 6, 7})
    assert minterms("C'") == frozenset({0, 2, 4, 6})
    assert minterms("0") == frozenset()
    assert minterms("1") == frozenset(range(8))


def test_majority_gate():
    assert minterms("M(A,B,C)") == frozenset({3, 5, 6, 7})


def test_and_or_via_constant_operands():
    assert minterms("M(A,B,0)") == frozenset({6, 7})
    assert minterms("M(A,B,1)") == frozenset({2, 3, 4, 5, 6, 7})
    assert minterms("M5(A,B,C,0,0)") == frozenset({7})
    assert minterms("M5(A,B,C,1,1)") == frozenset({1, 2, 3, 4, 5, 6, 7})


def test_postfix_complement_stacks():
    assert minterms("A''") == minterms("A")
    assert minterms("M(A,B,C)'") == frozenset(range(8)) - {3, 5, 6, 7}


def test_whitespace_and_case_insensitive_gate_names():
    assert minterms(" m ( A , B , C ) ") == minterms("M(A,B,C)")
    assert minterms("m5(A,A,B,C,1)") == minterms("M5(A,A,B,C,1)")


def test_agrees_with_independent_evaluator():
    samples = [
        "M(A,B,C)",
        "M(M(A,B,0),C,0)",
        "M5(A,B,C,1,1)'",
        "M(M(A,B,C'),M(A,B',C),M(A',B,C))",
        "M5(M(A,B,C)',M5(A,A,B,C,1),A,B,C)",
    ]
    for text in samples:
        assert minterms(text) == _oracles.minterms_of_expr(text, NAMES), text


def test_wrong_arity_raises():
    for text in ["M(A,B)", "M5(A,B,C)", "M(A,B,C,A,B)"]:
        with pytest.raises(ParseError) as exc:
            parse_expr(text, NAMES)
        assert "operands" in str(exc.value)


def test_unknown_variable_raises():
    with pytest.raises(UnknownVariableError):
        parse_expr("M(A,B,D)", NAMES)


def test_malformed_text_raises_with_position():
    cases = {
        "": 0,
        "M(A,B": 5,
        "M(A,B,C))": 8,
        "2": 0,
        "M(A,,B)": 4,
        "A B": 2,
    }
    for text, pos in cases.items():
        with pytest.raises(ParseError) as exc:
            parse_expr(text, NAMES)
        assert exc.value.position == pos, text


def test_duplicate_or_empty_variable_names_rejected():
    with pytest.raises(ValueError):
        parse_expr("A", ("A", "A"))
    with pytest.raises(ValueError):
        parse_expr("A", ())


def test_format_parse_round_trip():
    texts = [
        "M(A,B,C)",
        "M(M(A,B,0),C,0)",
        "M5(M(A,B,C)',M5(A,A,B,C,1),A,B,C)",
        "M(A',B',1)'",
    ]
    for text in texts:
        net = parse_expr(text, NAMES)
        again = parse_expr(format_expr(net), NAMES)
        assert truth_table(again) == truth_table(net)


def test_shared_subterms_parse_to_one_node():
    from qcamaj import cost

    net = parse_expr("M(M(A,B,0),M(A,B,0)',C)", NAMES)
    report = cost(net)
    assert report.maj3_count == 2
    assert report.inverter_count == 1
