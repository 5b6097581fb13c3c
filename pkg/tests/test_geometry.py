import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from latticecert.geometry import (
    DimensionMismatch,
    IntegerBox,
    LinearInequality,
    Polyhedron,
    Relation,
    evaluate,
    format_rational,
    parse_rational,
    polyhedron_from_json,
    polyhedron_to_json,
)

from conftest import ineq


class TestRationalLiterals:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("3/4", Fraction(3, 4)),
            ("-3/4", Fraction(-3, 4)),
            ("+2", Fraction(2)),
            ("0", Fraction(0)),
            ("4/6", Fraction(2, 3)),
            ("-10/4", Fraction(-5, 2)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize(
        "text", ["1.5", " 1", "1 ", "3/-4", "1/0", "", "a", "1/ 2", "--1", "1e3"]
    )
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_emits_lowest_terms(self):
        assert format_rational(Fraction(4, 6)) == "2/3"
        assert format_rational(Fraction(-4, 6)) == "-2/3"
        assert format_rational(Fraction(8, 4)) == "2"

    @given(st.fractions())
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    @given(st.integers(-10**9, 10**9), st.integers(1, 10**6), st.integers(1, 50))
    def test_non_lowest_terms_accepted(self, p, q, scale):
        value = Fraction(p, q)
        blown = f"{p * scale}/{q * scale}"
        assert parse_rational(blown) == value


class TestInequality:
    def test_zero_normal_rejected(self):
        with pytest.raises(ValueError):
            ineq([0, 0], 1)

    def test_evaluate_examples(self):
        q = ineq([1], 1)
        assert evaluate(q, (Fraction(0),)) is Relation.STRICTLY_SATISFIED
        assert evaluate(q, (Fraction(1),)) is Relation.TIGHT
        q2 = ineq([1, Fraction(1, 2)], 1)
        assert evaluate(q2, (1, 1)) is Relation.VIOLATED

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            evaluate(ineq([1, 2], 1), (1,))


class TestPolyhedron:
    def test_row_dimensions_checked(self):
        with pytest.raises(DimensionMismatch):
            Polyhedron(2, (ineq([1], 1),))

    def test_subsystem_keeps_order_and_validates(self):
        poly = Polyhedron(1, (ineq([1], 3), ineq([-1], 0), ineq([1], 5)))
        sub = poly.subsystem([2, 0])
        assert sub.ineqs == (poly.ineqs[0], poly.ineqs[2])
        with pytest.raises(IndexError):
            poly.subsystem([3])
        with pytest.raises(ValueError):
            poly.subsystem([0, 0])

    def test_json_round_trip_is_fixed_point(self):
        poly = Polyhedron(
            2,
            (
                ineq([1, Fraction(1, 2)], 1),
                ineq([Fraction(-2, 4), 1], Fraction(6, 4)),
            ),
        )
        text = polyhedron_to_json(poly)
        again = polyhedron_to_json(polyhedron_from_json(text))
        assert text == again
        # non-lowest input terms normalize on the first emit
        raw = '{"n": 1, "inequalities": [{"a": ["2/4"], "b": "-6/8"}]}'
        emitted = polyhedron_to_json(polyhedron_from_json(raw))
        assert json.loads(emitted)["inequalities"][0] == {"a": ["1/2"], "b": "-3/4"}

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            polyhedron_from_json('{"inequalities": []}')
        with pytest.raises(ValueError):
            Polyhedron.from_json_dict({"n": "2", "inequalities": []})


class TestIntegerBox:
    def test_validation(self):
        with pytest.raises(ValueError):
            IntegerBox((0,), (-1,))

    def test_lexicographic_iteration(self):
        box = IntegerBox((0, 0), (1, 2))
        pts = list(box.iter_points())
        assert pts == sorted(pts)
        assert len(pts) == box.volume() == 6
