import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_min_cost, brute_primes, cube_minterms
from segdec.boolexpr import Cube, SopExpr, check_equivalence, paper_expressions, parse_sop, truth_vector
from segdec.errors import DomainError
from segdec.glyphs import SEGMENTS, bengali_table, minterm_list
from segdec.minimizer import MinimizeSpec, minimize, minimize_segments, prime_implicants, verify_cover

DC = frozenset(range(10, 16))


@st.composite
def specs(draw):
    roles = draw(st.lists(st.sampled_from("on dc off".split()), min_size=16, max_size=16))
    on = frozenset(v for v, r in enumerate(roles) if r == "on")
    dc = frozenset(v for v, r in enumerate(roles) if r == "dc")
    return MinimizeSpec(on, dc)


def test_spec_validation():
    with pytest.raises(DomainError):
        MinimizeSpec({1}, {1})
    with pytest.raises(DomainError):
        MinimizeSpec({16})


def test_primes_trivial():
    assert prime_implicants(MinimizeSpec(set())) == set()
    (only,) = prime_implicants(MinimizeSpec(set(range(16))))
    assert only.cube.is_tautology and only.covered == frozenset(range(16))


def test_primes_segment_h():
    primes = {str(p.cube): p.covered for p in prime_implicants(MinimizeSpec({1, 2, 3, 9}, DC))}
    assert primes["x'y"] == {2, 3, 10, 11}
    assert primes["x'z"] == {1, 3, 9, 11}


@given(specs())
def test_primes_match_brute_force(spec):
    got = {p.cube.literals for p in prime_implicants(spec)}
    assert got == brute_primes(spec.on_set, spec.dc_set)
    for p in prime_implicants(spec):
        assert p.covered == cube_minterms(p.cube.literals)
        assert len(p.covered) & (len(p.covered) - 1) == 0


def test_minimize_examples():
    e = minimize(MinimizeSpec(minterm_list("e"), DC - minterm_list("e")))
    assert (len(e.cubes), e.literal_count) == (3, 3)
    assert truth_vector(e) == truth_vector(parse_sop("z' + x' + y'"))
    h = minimize(MinimizeSpec({1, 2, 3, 9}, DC))
    assert (len(h.cubes), h.literal_count) == (2, 4)
    assert truth_vector(h) == truth_vector(parse_sop("x'y + x'z"))
    assert str(minimize(MinimizeSpec({5}))) == "w'xy'z"
    assert minimize(MinimizeSpec(set())) == SopExpr()
    assert minimize(MinimizeSpec(set(range(16)))) == SopExpr((Cube(),))


def test_verify_cover_examples():
    spec_c = MinimizeSpec(minterm_list("c"), DC)
    assert verify_cover(paper_expressions()["c"], spec_c) == 0
    assert verify_cover(minimize(spec_c), spec_c) == 1
    assert verify_cover(SopExpr(), MinimizeSpec({3})) == 0


def test_segments_against_truth_table():
    table = bengali_table()
    printed = paper_expressions()
    for s, expr in minimize_segments({s: minterm_list(s) for s in SEGMENTS}).items():
        assert check_equivalence(expr, s, table).equivalent
        if s not in ("c", "g"):
            assert len(expr.cubes) <= len(printed[s].cubes)


@settings(max_examples=300, deadline=None)
@given(specs())
def test_minimize_sound_prime_and_optimal(spec):
    expr = minimize(spec)
    assert verify_cover(expr, spec)
    primes = {p.cube for p in prime_implicants(spec)}
    assert set(expr.cubes) <= primes
    assert (len(expr.cubes), expr.literal_count) == brute_min_cost(spec.on_set, spec.dc_set)


@given(specs())
def test_minimize_deterministic(spec):
    assert minimize(spec) == minimize(MinimizeSpec(set(spec.on_set), set(spec.dc_set)))
