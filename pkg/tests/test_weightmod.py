import pytest
from hypothesis import given, settings, strategies as st

from kpcat.linalg import SparseMatrix
from kpcat.perm import Permutation, all_perms
from kpcat.schubert import Poly
from kpcat.kp import kp_module
from kpcat.weightmod import (ValidationError, WeightModule, character, direct_sum,
                             dual_twist, exterior_power, hom_space, is_isomorphic,
                             largest_quotient, largest_submodule_le, module_from_json,
                             module_to_json, one_dim, quotient, submodule_generated,
                             tensor, truncated_vector, twist, validate, vector_rep)

x = lambda i: Poly.var(3, i)
perm3 = st.sampled_from(all_perms(3))


def test_truncated_vector():
    for i in range(4):
        M = truncated_vector(3, i)
        assert M.dim == i
        assert not validate(M)
    K3 = vector_rep(3)
    assert character(K3) == x(1) + x(2) + x(3)
    assert K3.act((1, 2), {1: 1}) == {0: 1}


def test_wedge_square():
    W = exterior_power(vector_rep(3), 2)
    assert W.dim == 3
    assert character(W) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert not validate(W)


def test_top_of_wedge_square_is_killed():
    W = exterior_power(vector_rep(3), 2)
    # u1 ^ u2 has weight (1,1,0)
    v = {W.weights.index((1, 1, 0)): 1}
    S, _ = submodule_generated(W, [v])
    assert S.dim == 1


def test_validate_catches_bad_weights():
    M = WeightModule(2, [(1, 0), (1, 0)], {(1, 2): SparseMatrix(2, 2, {0: {1: 1}})})
    assert validate(M)
    with pytest.raises(ValidationError):
        validate(M, raise_error=True)


def test_costandard_has_lambda_once_on_top():
    from kpcat.homological import costandard_module
    from kpcat.perm import lambda_n, prec
    for lam in lambda_n(3):
        D = costandard_module(lam)
        assert not validate(D)
        assert D.weights.count(lam) == 1
        assert all(w == lam or prec(w, lam) for w in D.weights)


def test_quotient_and_largest_quotient():
    K3 = vector_rep(3)
    Q, proj = largest_quotient(K3, lambda w: w != (0, 0, 1))
    # u3 generates everything
    assert Q.dim == 0
    Q, proj = quotient(K3, [{0: 1}])
    assert Q.dim == 2 and proj.is_valid() and proj.is_surjective()
    with pytest.raises(ValueError):
        quotient(K3, [{2: 1}])


def test_largest_submodule_le():
    K3 = vector_rep(3)
    S, inc = largest_submodule_le(K3, (0, 1, 0), order="prec")
    assert S.dim == 2 and inc.is_injective()


def test_hom_between_small_modules():
    K2 = truncated_vector(3, 2)
    K3 = vector_rep(3)
    assert hom_space(K2, K3).dim == 1
    assert hom_space(K3, K2).dim == 0
    assert hom_space(one_dim((1, 0, 0)), K3).dim == 1


def test_json_round_trip_and_format():
    M = kp_module(Permutation.parse("1432"), 4)
    data = module_to_json(M)
    assert data["format"] == 1
    assert all(isinstance(e[2], str) for ents in data["gens"].values() for e in ents)
    N = module_from_json(data)
    assert not validate(N)
    assert character(N) == character(M)
    assert module_to_json(N) == data


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        module_from_json({"weights": []})


@given(perm3, perm3)
def test_tensor_character_is_multiplicative(w, v):
    M, N = kp_module(w, 3), kp_module(v, 3)
    T = tensor(M, N)
    assert not validate(T)
    assert character(T) == character(M) * character(N)


@given(perm3, st.tuples(*[st.integers(-2, 2)] * 3))
def test_twist_and_dual(w, lam):
    M = kp_module(w, 3)
    assert character(twist(M, lam)) == character(M) * Poly.monomial(lam)
    D = dual_twist(M)
    assert not validate(D)
    assert dual_twist(D).weights == M.weights


@settings(max_examples=25)
@given(perm3, perm3)
def test_hom_basis_elements_are_module_maps(w, v):
    H = hom_space(kp_module(w, 3), kp_module(v, 3))
    for f in H.basis:
        assert f.is_valid()
    assert len(H.free) == H.dim


@given(perm3)
def test_isomorphic_to_itself_and_direct_sum(w):
    M = kp_module(w, 3)
    assert is_isomorphic(M, M) is not None
    D = direct_sum(M, one_dim((0, 0, 0)))
    assert is_isomorphic(D, M) is None
    assert D.dim == M.dim + 1
