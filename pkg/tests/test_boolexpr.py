import pytest
from hypothesis import given, strategies as st

from segdec.boolexpr import (
    Cube,
    SopExpr,
    Status,
    check_equivalence,
    eval_sop,
    paper_expressions,
    parse_sop,
    print_sop,
)
from segdec.errors import ParseError
from segdec.glyphs import Input4, SegmentSet, TruthTable, bengali_table

cubes = st.builds(Cube, st.tuples(*[st.sampled_from((0, 1, None))] * 4))
exprs = st.builds(SopExpr, st.lists(cubes, max_size=6).map(tuple))


def test_parse_examples():
    e = parse_sop("z' + x' + y'")
    assert len(e.cubes) == 3
    assert all(c.literal_count == 1 and 0 in c.literals for c in e.cubes)
    h = parse_sop("x'y + x'z")
    assert [c.literal_count for c in h.cubes] == [2, 2]


@pytest.mark.parametrize(
    "text,pos",
    [("w'q", 2), ("'x", 0), ("x''", 2), ("x + ", 4), ("+x", 0), ("x ++ y", 3), ("xx'", 2)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_sop(text)
    assert info.value.position == pos


def test_print():
    assert print_sop(paper_expressions()["h"]) == "x'y + x'z"
    assert print_sop(SopExpr()) == "0"
    assert print_sop(SopExpr((Cube(),))) == "1"
    assert print_sop(SopExpr((Cube((1, None, None, 0)),))) == "wz'"
    assert parse_sop("1") == SopExpr((Cube(),))
    assert parse_sop(" 0 ") == SopExpr()


def test_eval():
    e = paper_expressions()["e"]
    assert eval_sop(e, 7) == 0
    assert eval_sop(e, Input4.from_value(0)) == 1
    assert all(eval_sop(SopExpr(), v) == 0 for v in range(16))


def test_paper_expressions_as_printed():
    p = paper_expressions()
    assert str(p["a"]) == "w'y' + wz + xyz + x'yz'"
    assert str(p["g"]) == "w + xy'z' + x'y'z + x'yz'"
    assert str(p["j"]) == "x'z + y'z + xyz'"
    assert sorted(p) == list("abcdefghij")


def test_equivalence_findings():
    table = bengali_table()
    reports = {s: check_equivalence(e, s, table) for s, e in paper_expressions().items()}
    bad = {s for s, r in reports.items() if r.status is Status.MISMATCH}
    assert bad == {"c", "g"}
    assert [(m.input, m.expr_value, m.table_value) for m in reports["c"].mismatches] == [(5, 1, 0)]
    assert [(m.input, m.expr_value, m.table_value) for m in reports["g"].mismatches] == [(7, 0, 1)]
    assert reports["e"].equivalent and not reports["e"].mismatches


def test_mismatches_skip_dont_cares():
    table = TruthTable(rows={0: SegmentSet.of("a")}, dont_care=frozenset(range(1, 16)))
    report = check_equivalence(SopExpr(), "a", table)
    assert [m.input for m in report.mismatches] == [0]
    report = check_equivalence(SopExpr((Cube(),)), "a", table)
    assert report.equivalent


@given(exprs)
def test_round_trip(expr):
    again = parse_sop(print_sop(expr))
    assert again.normalize() == expr.normalize()
    assert parse_sop(print_sop(again)) == again


@given(exprs)
def test_normalize_preserves_function(expr):
    n = expr.normalize()
    assert [eval_sop(n, v) for v in range(16)] == [eval_sop(expr, v) for v in range(16)]
    assert len(set(n.cubes)) == len(n.cubes)


@given(exprs, cubes)
def test_adding_cube_is_monotone(expr, extra):
    bigger = SopExpr(expr.cubes + (extra,))
    for v in range(16):
        assert eval_sop(bigger, v) >= eval_sop(expr, v)
