import pytest
from hypothesis import given, strategies as st

from oracles import rascal, representable_by_dp
from rascal_lab.errors import InsufficientDataError, PositionError
from rascal_lab.sequences import APProfile, ap_profile, diagonal, representable_values
from rascal_lab.triangle import build_pascal, build_rascal_closed_form, build_rascal_diamond


@pytest.fixture(scope="module")
def rascal10():
    return build_rascal_diamond(10)


def test_diagonal_examples(rascal10):
    assert diagonal(rascal10, "constant-col", 2) == [1, 3, 5, 7, 9, 11, 13, 15]
    assert diagonal(rascal10, "constant-col", 0) == [1] * 10
    assert diagonal(rascal10, "constant-anti", 1) == [1, 2, 3, 4, 5, 6, 7, 8, 9]
    assert diagonal(rascal10, "constant-col", 2) == [rascal(n, 2) for n in range(2, 10)]


def test_diagonal_out_of_extent(rascal10):
    with pytest.raises(PositionError):
        diagonal(rascal10, "constant-col", 10)
    with pytest.raises(ValueError):
        diagonal(rascal10, "sideways", 0)


def test_ap_profile_examples():
    assert ap_profile([1, 3, 5, 7]) == APProfile(1, 2)
    assert ap_profile([1, 2, 4]) is None
    with pytest.raises(InsufficientDataError):
        ap_profile([4])


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(2, 30))
def test_ap_profile_recovers_generated_progressions(start, diff, length):
    seq = [start + i * diff for i in range(length)]
    prof = ap_profile(seq)
    assert prof == APProfile(start, diff)
    assert [prof.term(i) for i in range(length)] == seq


def test_every_rascal_diagonal_is_arithmetic():
    t = build_rascal_closed_form(101)
    for family in ("constant-col", "constant-anti"):
        for d in range(100):
            assert ap_profile(diagonal(t, family, d)) == APProfile(1, d)


def test_pascal_triangular_numbers_not_arithmetic():
    assert ap_profile(diagonal(build_pascal(12), "constant-col", 2)) is None


def test_representable_examples():
    reach, missing = representable_values(3, 5, 20)
    assert missing == [1, 2, 4, 7]
    assert representable_values(3, 5, 0) == ({0}, [])
    reach8, _ = representable_values(3, 5, 8)
    assert reach8 == {0, 3, 5, 6, 8}


def test_representable_complement_stabilises():
    assert representable_values(3, 5, 20)[1] == representable_values(3, 5, 1000)[1] == [1, 2, 4, 7]


@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 120))
def test_representable_matches_dp_oracle(a, b, limit):
    reach, missing = representable_values(a, b, limit)
    assert reach == representable_by_dp(a, b, limit)
    assert sorted(reach | set(missing)) == list(range(limit + 1))


def test_representable_rejects_negative_limit():
    with pytest.raises(ValueError):
        representable_values(3, 5, -1)
