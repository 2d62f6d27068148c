"""Tests for the eta/pochhammer expression language."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etaq import dsl, series
from etaq.dsl import (
    Add,
    CATALOG_EXPRESSIONS,
    Div,
    Eta,
    IntLit,
    Mul,
    Neg,
    ParseError,
    Poch,
    Pow,
    Q,
    Sub,
    evaluate,
    parse,
)
from etaq.eta import FractionalSeries, expand_eta, f_series, hauptmodul
from etaq.series import coeff, pochhammer, reduce_mod


def test_parse_atoms():
    assert parse("eta(2)") == Eta(2)
    assert parse("poch(3,5)") == Poch(3, 5)
    assert parse("q") == Q()
    assert parse("7") == IntLit(7)
    assert parse("-3") == Neg(IntLit(3))
    assert parse(" eta( 2 ) ^ 3 ") == Pow(Eta(2), 3)


def test_parse_precedence():
    assert parse("eta(1)+eta(25)*2") == Add(Eta(1), Mul(Eta(25), IntLit(2)))
    assert parse("eta(1)/eta(2)/eta(3)") == Div(Div(Eta(1), Eta(2)), Eta(3))
    assert parse("eta(1)-2-3") == Sub(Sub(Eta(1), IntLit(2)), IntLit(3))
    assert parse("-eta(1)^2") == Neg(Pow(Eta(1), 2))
    assert parse("2*-3") == Mul(IntLit(2), Neg(IntLit(3)))
    assert parse("eta(2)^-3") == Pow(Eta(2), -3)
    assert parse("(eta(1)^2)^3") == Pow(Pow(Eta(1), 2), 3)


def err_position(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    return info.value.position


def test_parse_error_positions():
    assert err_position("eta(2)^") == 7
    assert err_position("eta(1)^2^3") == 8
    assert err_position("eta(2)$") == 6
    assert err_position("(eta(2)") == 7
    assert err_position("poch(2)") == 6
    assert err_position("") == 0
    assert err_position("eta(-2)") == 4
    assert err_position("q q") == 2
    assert err_position("foo(1)") == 0


def test_parse_error_is_value_error():
    assert issubclass(ParseError, ValueError)


def test_format_minimal_parens():
    assert dsl.format(Mul(Add(Eta(1), IntLit(2)), Q())) == "(eta(1)+2)*q"
    assert dsl.format(Pow(Pow(Eta(1), 2), 3)) == "(eta(1)^2)^3"
    assert dsl.format(Neg(Mul(Eta(1), Eta(2)))) == "-(eta(1)*eta(2))"
    assert dsl.format(Mul(Neg(Eta(1)), Eta(2))) == "-eta(1)*eta(2)"
    assert dsl.format(Sub(Eta(1), Sub(Eta(2), Eta(3)))) == "eta(1)-(eta(2)-eta(3))"
    assert dsl.format(Pow(Eta(2), -3)) == "eta(2)^-3"


def expr_strategy():
    atoms = st.one_of(
        st.builds(Eta, st.integers(1, 30)),
        st.builds(Poch, st.integers(1, 12), st.integers(1, 12)),
        st.just(Q()),
        st.builds(IntLit, st.integers(0, 9)),
    )
    return st.recursive(
        atoms,
        lambda inner: st.one_of(
            st.builds(Neg, inner),
            st.builds(Add, inner, inner),
            st.builds(Sub, inner, inner),
            st.builds(Mul, inner, inner),
            st.builds(Div, inner, inner),
            st.builds(Pow, inner, st.integers(-6, 6)),
        ),
        max_leaves=12,
    )


@settings(max_examples=300)
@given(expr_strategy())
def test_format_parse_round_trip(e):
    assert parse(dsl.format(e)) == e


def test_evaluate_monomials():
    out = evaluate(parse("q*q"), 10)
    lau = out.as_laurent()
    assert lau.precision == 10
    assert coeff(lau, 2) == 1
    assert sum(1 for c in lau.coeffs if c) == 1
    inv = evaluate(parse("1/q"), 10).as_laurent()
    assert inv.valuation == -1 and coeff(inv, -1) == 1


def test_evaluate_atoms_match_library():
    assert evaluate(parse("eta(1)"), 8) == expand_eta(1, 8)
    out = evaluate(parse("poch(2,3)"), 20)
    assert out == FractionalSeries(0, pochhammer(2, 3, 20))


def test_evaluate_requires_compatible_offsets():
    with pytest.raises(ValueError):
        evaluate(parse("eta(1)+eta(2)"), 10)
    out = evaluate(parse("eta(25)+eta(1)"), 10)
    assert out.offset24 == 1


def test_evaluate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        evaluate(parse("eta(0)"), 10)
    with pytest.raises(ValueError):
        evaluate(parse("poch(1,0)"), 10)


def test_evaluate_precision_is_exact():
    for text in [
        "(poch(1,1)/poch(2,2))^3-1+q",
        "eta(2)^-3*q",
        "q^-5*poch(1,2)",
        "5",
        "(eta(1)*eta(5)/(eta(2)*eta(10)))^4+4",
    ]:
        out = evaluate(parse(text), 40)
        assert out.body.precision == 40, text


def test_evaluate_mod_matches_reduction():
    for text in ["poch(1,1)^3/poch(3,3)", "(eta(2)*eta(6)/(eta(1)*eta(3)))^6"]:
        exact = evaluate(parse(text), 60)
        modded = evaluate(parse(text), 60, mod=2)
        assert modded.body == reduce_mod(exact.body, 2)


def test_evaluate_is_multiplicative_on_contraction():
    a = parse("poch(1,1)^2/poch(2,2)")
    b = parse("poch(5,5)*poch(2,2)")
    both = evaluate(Mul(a, b), 30).as_laurent()
    split = series.mul(evaluate(a, 30).as_laurent(), evaluate(b, 30).as_laurent())
    hi = min(both.precision, split.precision)
    assert series.first_mismatch(both, split, hi) is None


def test_catalog_expressions_match_catalog():
    for name in ("j6", "j10s", "F10"):
        e = parse(CATALOG_EXPRESSIONS[name])
        got = evaluate(e, 30).as_laurent()
        want = hauptmodul(name, 30) if name.startswith("j") else f_series(name, 30)
        assert got == want, name


def test_catalog_expression_list():
    assert sorted(CATALOG_EXPRESSIONS) == [
        "F10", "F10s", "F6", "F6s",
        "j10", "j10s", "j2", "j2s", "j6", "j6s",
    ]
