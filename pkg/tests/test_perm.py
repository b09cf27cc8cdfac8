import pytest
from hypothesis import given, strategies as st

from kpcat.perm import (Permutation, all_perms, bar, code, conjugate_w0, inverse,
                        in_lambda_n, lambda_n, length, linear_extension, lt,
                        lt_prime, multiply, perm_from_code, prec, preceq,
                        shift_perm, simple, w0, weight_order)

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def P(s):
    return Permutation.parse(s)


def test_code_of_longest_element():
    assert code(w0(3), 3) == (2, 1, 0)


def test_code_2143():
    assert code(P("2143"), 4) == (1, 0, 1, 0)


def test_perm_from_code_inverts_code():
    assert perm_from_code((2, 1, 0)) == P("321")


def test_code_outside_box_leaves_s3():
    w = perm_from_code((3, 0, 0))
    assert w(1) == 4
    assert not w.in_S(3)
    assert w.in_S_inf(3)


def test_conjugation_by_w0():
    assert conjugate_w0(P("312"), 3) == P("231")


def test_bar_matches_conjugation():
    assert bar(code(P("312"), 3)) == code(P("231"), 3)


def test_order_example():
    assert prec((1, 0, 0), (0, 1, 0))
    assert not prec((0, 1, 0), (1, 0, 0))


def test_parse_forms():
    assert P("[2,1,4,3]") == P("2143")
    assert P("2143").one_line(4) == "2143"
    with pytest.raises(ValueError):
        P("2243")
    with pytest.raises(ValueError):
        P("21a")


def test_trailing_fixed_points_are_trimmed():
    assert P("2134") == P("21")
    assert P("123") == Permutation([])


def test_lambda_n_is_the_code_box():
    assert len(lambda_n(3)) == 6
    assert sorted(code(w, 3) for w in all_perms(3)) == lambda_n(3)
    assert in_lambda_n((2, 1, 0)) and not in_lambda_n((0, 2, 0))


def test_weight_order_is_three_valued():
    vals = {weight_order(a, b) for a in lambda_n(3) for b in lambda_n(3) if a != b}
    assert vals <= {True, False, None}


def test_linear_extension_respects_prec():
    L = linear_extension(lambda_n(3))
    for i, a in enumerate(L):
        for b in L[:i]:
            assert not prec(a, b)


@given(perms)
def test_code_round_trip(w):
    assert perm_from_code(code(w)) == w


@given(perms)
def test_length_is_code_sum(w):
    assert length(w) == sum(code(w))


@given(perms, perms)
def test_inverse_and_product(w, v):
    assert multiply(w, inverse(w)) == Permutation([])
    assert length(multiply(w, v)) <= length(w) + length(v)


@given(perms)
def test_conjugation_is_an_involution(w):
    n = max(len(w.window), 1)
    assert conjugate_w0(conjugate_w0(w, n), n) == w
    assert length(conjugate_w0(w, n)) == length(w)


@given(perms)
def test_shift_prepends_a_fixed_point(w):
    s = shift_perm(w)
    assert s(1) == 1
    n = len(w.window)
    assert code(s, n + 1) == (0,) + code(w, n)


@given(st.sampled_from(lambda_n(4)), st.sampled_from(lambda_n(4)))
def test_prec_is_antisymmetric(a, b):
    if a != b:
        assert not (prec(a, b) and prec(b, a))
    assert preceq(a, a)


def test_simple_reflections():
    assert simple(2) == P("132")
    assert lt((1, 0, 0), (0, 1, 0)) and not lt((0, 1, 0), (1, 0, 0))
    assert lt_prime((1, 0, 0), (0, 1, 0))
