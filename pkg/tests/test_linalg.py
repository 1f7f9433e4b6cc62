from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import _rank
from skewpbw.linalg import Echelon, nullspace, rank

row_st = st.dictionaries(st.integers(0, 4), st.fractions(-3, 3, max_denominator=3), max_size=5)


def test_echelon_basic():
    e = Echelon()
    assert e.add({0: 1, 1: 1})
    assert e.add({1: 1})
    assert not e.add({0: 2, 1: 5})
    assert e.rank == 2
    assert e.contains({0: Fraction(1, 2)})


def test_nullspace():
    ns = nullspace([{0: 1, 1: -1}], [0, 1, 2])
    assert len(ns) == 2
    for v in ns:
        assert v.get(0, 0) - v.get(1, 0) == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(row_st, max_size=6))
def test_rank_matches_sympy(rows):
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    assert rank(rows) == _rank(rows, list(range(5)))
