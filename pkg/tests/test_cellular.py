from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jmsym.algebra import Element
from jmsym.cellular import (coeff_lambda, expand_in_murphy_basis, gram_block_check, gram_matrices,
                            gram_murphy, gram_psi, gram_to_csv, jm_triangularity_check,
                            murphy_basis_rank_check, psi_basis, psi_elements,
                            psi_triangularity_and_basis_check, specht_elements, specht_rank_check,
                            vanishing_check, x_lambda, x_st, xi_check, xi_image_check, xi_lambda,
                            y_lambda, y_st, z_lambda)
from jmsym.errors import PreconditionError
from jmsym.linalg import fp_rank
from jmsym.perms import transposition
from jmsym.seminormal import class_idempotent
from jmsym.tableaux import (Tableau, class_of, d_of_tableau, enumerate_partitions, highest_tableau,
                            hooks, lowest_tableau, standard_tableaux)


def T(*rows):
    return Tableau(tuple(tuple(r) for r in rows))


def perm(i, j, n):
    return Element.perm(transposition(i, j, n))


def test_murphy_elements():
    assert x_lambda((2, 1)) == Element.one(3) + perm(1, 2, 3)
    assert y_lambda((1, 1)) == Element.one(2)
    assert y_lambda((2,)) == Element.one(2) - perm(1, 2, 2)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_star_of_x_st(lam):
    tabs = standard_tableaux(lam)
    for s in tabs:
        assert x_st(s, s) == Element.from_terms(s.n, [(w, 1) for w in x_st(s, s).terms()])
        for t in tabs:
            assert x_st(s, t).star() == x_st(t, s)
            assert y_st(s, t).star() == y_st(t, s)


def test_x_st_shape_mismatch():
    with pytest.raises(PreconditionError):
        x_st(highest_tableau((2, 1)), highest_tableau((3,)))


def test_xi_examples():
    assert xi_lambda((2,)) == x_lambda((2,))
    assert xi_lambda((1, 1)) == Element.one(2) * 2 + perm(1, 2, 2)


def test_specht_examples():
    one, s = Element.one(2), perm(1, 2, 2)
    assert z_lambda((2,)) == one + s
    assert z_lambda((1, 1)) == one - s


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_young_symmetrizer_square(lam):
    # e = z_lambda s_lambda^-1 is the Young symmetrizer of t^lambda: e^2 = h_lambda e
    e = z_lambda(lam).right_perm(d_of_tableau(lowest_tableau(lam)).perm.inverse())
    assert e * e == e * hooks(lam).h_lambda


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_specht_basis_rank(n):
    for lam in enumerate_partitions(n):
        assert specht_rank_check(lam).passed


@pytest.mark.parametrize("n,p", [(3, None), (4, None), (5, None), (5, 2), (5, 3), (6, 2)])
def test_murphy_basis_rank(n, p):
    assert murphy_basis_rank_check(n, p).passed


def test_expansion_examples():
    s, t = standard_tableaux((2, 1))
    ex = expand_in_murphy_basis(x_st(s, t))
    assert ex.coefficients == {(s, t): 1}
    assert expand_in_murphy_basis(Element.zero(3)).coefficients == {}
    tl = highest_tableau((2, 1))
    ex = expand_in_murphy_basis(xi_lambda((2, 1)))
    assert ex[(tl, tl)] == 1


@given(st.lists(st.tuples(st.integers(0, 23), st.fractions(-2, 2, max_denominator=3)), max_size=5))
def test_expansion_reconstructs(terms):
    from jmsym.perms import all_perms
    a = Element.from_terms(4, [(all_perms(4)[i], c) for i, c in terms])
    ex = expand_in_murphy_basis(a)
    back = Element.zero(4)
    for (s, t), c in ex.coefficients.items():
        back = back + x_st(s, t) * c
    assert back == a


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_xi_basis(n):
    assert xi_check(n).passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_xi_image_in_cell_module(n):
    assert xi_image_check(n).passed


def test_jm_triangularity_examples():
    t = highest_tableau((2,))
    ex = expand_in_murphy_basis(x_st(t, t).right_jm(2))
    assert ex.coefficients == {(t, t): 1}
    u = highest_tableau((1, 1))
    ex = expand_in_murphy_basis(x_st(u, u).right_jm(2))
    assert ex[(u, u)] == -1 and ex[(t, t)] == 1


@pytest.mark.parametrize("n,p", [(4, None), (4, 2), (4, 3)])
def test_jm_triangularity(n, p):
    assert jm_triangularity_check(n, p).passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vanishing(n):
    assert vanishing_check(n).passed


def test_psi_examples():
    t = highest_tableau((2,))
    psi = psi_elements((2,), 3)
    E = class_idempotent(class_of(t, 3)).element_p
    assert psi[(t, t)] == xi_lambda((2,), 3) * E
    assert len(psi_basis(4, 2)) == 24


@pytest.mark.parametrize("n,p", [(2, 2), (3, 3), (4, 2), (4, 3), (4, 5)])
def test_psi_basis(n, p):
    assert psi_triangularity_and_basis_check(n, p).passed


def test_gram_examples():
    assert gram_murphy((2,)) == [[2]]
    assert gram_murphy((1, 1)) == [[1]]
    # x_lambda (2,3) x_lambda = x_(3) - x_lambda, so the off-diagonal entry is -1
    assert gram_murphy((2, 1)) == [[2, -1], [-1, 2]]
    order, G = gram_psi((2, 1), 3)
    assert G[0][1] == G[1][0] == 0


@pytest.mark.parametrize("n,p", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_gram_blocks(n, p):
    assert gram_block_check(n, p).passed


def test_gram_matrices_datum():
    d = gram_matrices((3, 1), 3)
    assert len(d.gram_murphy) == len(d.tableaux) == 3
    assert all(d.gram_murphy[i][j] == d.gram_murphy[j][i] for i in range(3) for j in range(3))
    assert d.x_lambda == x_lambda((3, 1), 3)


def test_gram_csv():
    tabs = standard_tableaux((2, 1))
    text = gram_to_csv(tabs, gram_murphy((2, 1)))
    assert text.splitlines() == [",T12/3,T13/2", "T12/3,2,-1", "T13/2,-1,2"]


def test_coeff_lambda():
    assert coeff_lambda(x_lambda((2, 1)) * 3, (2, 1)) == 3
