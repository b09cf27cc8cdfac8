import pytest
from hypothesis import given, strategies as st

from kpcat.linalg import SparseMatrix
from kpcat.perm import (Permutation, all_perms, conjugate_w0, lambda_n, length,
                        multiply, permutations_of_length, prec, simple,
                        transposition, code)
from kpcat.schubert import Poly, schubert_poly, specialize_ones
from kpcat.weightmod import (character, hom_space, is_isomorphic, truncated_vector,
                             twist, validate)
from kpcat.kp import (J_set, check_lemma_pqpq, embed_kp_in_T, full_tilting,
                      kp_module, kp_module_gen, m_pq, swap_sign, tilting_module, v_pq)


def P(s):
    return Permutation.parse(s)


def test_simple_reflection_gives_truncated_vector():
    for n in (3, 4):
        for i in range(1, n):
            assert is_isomorphic(kp_module(simple(i), n), truncated_vector(n, i)) is not None


def test_kp_231():
    M = kp_module(P("231"), 3)
    assert M.dim == 1
    assert character(M) == Poly.var(3, 1) * Poly.var(3, 2)


@pytest.mark.parametrize("w", all_perms(4), ids=lambda w: w.one_line(4))
def test_character_is_schubert(w):
    M = kp_module(w, 4)
    assert not validate(M)
    assert character(M) == schubert_poly(w, 4)


def test_kp_module_gen_shift():
    M = kp_module_gen((-1, 0, -1))
    assert M.shift == 1
    base = kp_module(M.w, 3)
    assert character(M) == character(base) * Poly.monomial((-1, -1, -1))
    assert is_isomorphic(kp_module_gen((-1, 0, -1), k=2),
                         twist(kp_module_gen((0, 1, 0), k=1), (-1, -1, -1))) is not None


def test_tilting_rho_is_one_dimensional():
    T = tilting_module((2, 1, 0))
    assert T.dim == 1 and T.weights == [(2, 1, 0)]


@pytest.mark.parametrize("lam", lambda_n(3))
def test_tilting_top_weight(lam):
    T = tilting_module(lam)
    assert T.weights.count(lam) == 1
    assert all(w == lam or prec(w, lam) for w in T.weights)


def test_full_tilting_small_cases():
    T2 = full_tilting(2)
    assert T2.dim == 2 and character(T2) == Poly.var(2, 1) + 1
    T3 = full_tilting(3)
    x = lambda i: Poly.var(3, i)
    assert T3.dim == 8 and character(T3) == (x(1) + 1) ** 2 * (x(2) + 1)
    assert full_tilting(4).dim == 64


@pytest.mark.parametrize("n", [2, 3, 4])
def test_second_action_commutes_with_first(n):
    T = full_tilting(n)
    for A in T.gens.values():
        for B in T.bprime.values():
            assert A @ B == B @ A
    S = T.swap
    assert S @ S == SparseMatrix.identity(T.dim)


def test_J_sets():
    assert J_set(Permutation([]), 3) == ()
    T = full_tilting(3)
    assert len(J_set(P("321"), 3)) == len(T.letters)


@pytest.mark.parametrize("w", all_perms(3), ids=lambda w: w.one_line(3))
def test_swap_sends_u_w_to_u_wbar(w):
    T = full_tilting(3)
    (k, _), = embed_kp_in_T(w, 3).items()
    img = T.swap.apply({k: 1})
    (j, c), = img.items()
    assert {j: 1} == embed_kp_in_T(conjugate_w0(w, 3), 3) and c in (1, -1)


def test_swap_signs_frozen():
    # sorted-basis convention; computed once and frozen
    got = {w.one_line(3): swap_sign(w, 3) for w in all_perms(3)}
    assert got == {"123": 1, "132": 1, "213": 1, "231": 1, "312": 1, "321": -1}
    assert sum(swap_sign(w, 4) == -1 for w in all_perms(4)) == 10


@pytest.mark.parametrize("w", all_perms(3), ids=lambda w: w.one_line(3))
def test_hom_into_T(w):
    dim = hom_space(kp_module(w, 3), full_tilting(3)).dim
    assert dim == specialize_ones(schubert_poly(conjugate_w0(w, 3), 3))


def test_m_pq():
    assert m_pq(P("2143"), 1, 3) == 1
    for w in all_perms(3):
        for p in (1, 2, 3):
            assert m_pq(w, p, 4) == 0


def test_v_pq_weight():
    x = P("132")
    for p, q in [(1, 2), (1, 3), (2, 4)]:
        if length(multiply(x, transposition(p, q))) != length(x) + 1:
            continue
        M, v = v_pq(x, p, q, 3)
        assert v
        assert {M.weights[k] for k in v} == {code(multiply(x, transposition(p, q)), 3)}


def test_v_pq_rejects_non_covers():
    with pytest.raises(ValueError):
        v_pq(P("213"), 1, 2, 3)


@pytest.mark.parametrize("w", all_perms(3), ids=lambda w: w.one_line(3))
@pytest.mark.parametrize("i", [1, 2])
def test_lemma_pqpq_s3(w, i):
    rep = check_lemma_pqpq(w, i, 3)
    assert rep.ok, rep.failures


def test_lemma_pqpq_s4_short():
    for ell in range(4):
        for w in permutations_of_length(4, ell):
            for i in (1, 2, 3):
                rep = check_lemma_pqpq(w, i, 4)
                assert rep.ok, (w, i, rep.failures)


def test_lemma_diagonal_identity_case():
    rep = check_lemma_pqpq(Permutation([]), 1, 3)
    assert rep.ok and rep.checked >= 1


def corrupted_swap(n, index):
    S = full_tilting(n).swap
    cols = {c: dict(v) for c, v in S.cols.items()}
    cols[index] = {r: -x for r, x in cols[index].items()}
    return SparseMatrix(S.nrows, S.ncols, cols)


def test_lemma_negative_control():
    bad = corrupted_swap(3, 1)
    fails = [w for w in all_perms(3) for i in (1, 2) if not check_lemma_pqpq(w, i, 3, swap=bad).ok]
    assert fails


@given(st.sampled_from(all_perms(4)))
def test_dimension_is_schubert_at_ones(w):
    assert kp_module(w, 4).dim == specialize_ones(schubert_poly(w, 4))
