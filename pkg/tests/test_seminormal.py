from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jmsym.algebra import Element, all_perms
from jmsym.errors import PreconditionError
from jmsym.seminormal import (char0_intertwiners, class_idempotent, commutation_lemma_check,
                              due_to_murphy_check, eigen_relation_check, f_idempotent,
                              hl_inverse, idempotent_E_lambda_fast, idempotent_E_t,
                              jm_element, jm_relations_check, murphy_formula_check,
                              psi_L_applied)
from jmsym.tableaux import (Tableau, all_standard_tableaux, class_of, enumerate_partitions,
                            highest_tableau, hooks, standard_tableaux, tableau_classes)

from oracles import character

ONE2 = Element.one(2)
S2 = Element.sigma(2, 2)


def T(*rows):
    return Tableau(tuple(tuple(r) for r in rows))


def test_jm_elements():
    assert jm_element(1, 3).is_zero()
    assert jm_element(2, 3) == Element.sigma(2, 3)
    assert jm_element(3, 3).support_size() == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jm_relations(n):
    assert jm_relations_check(n).passed


def test_jm_relation_n2():
    assert S2 * jm_element(2, 2) == jm_element(1, 2) * S2 + 1


def test_E_t_examples():
    assert idempotent_E_t(highest_tableau((2,))) == (ONE2 + S2) / 2
    assert idempotent_E_t(highest_tableau((1, 1))) == (ONE2 - S2) / 2
    assert idempotent_E_t(T((2, 1))).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_E_t_window_matches_literal_product(n):
    for t in all_standard_tableaux(n):
        assert idempotent_E_t(t) == idempotent_E_t(t, full_range=True)


def test_E_t_nonstandard_zero_or_idempotent():
    # entries k-1, k swapped inside a row give 0
    assert idempotent_E_t(T((1, 3, 2), (4,))).is_zero()
    for rows in [((2, 1), (3,)), ((1, 2), (3,)), ((3, 1), (2,))]:
        E = idempotent_E_t(T(*rows))
        assert E.is_zero() or any(E == idempotent_E_t(s) for s in all_standard_tableaux(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_eigen_relations(n):
    assert eigen_relation_check(n).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_E_lambda_block_sum_equals_character_idempotent(n):
    """sum_{t in Std(lambda)} E_t = (f/n!) sum_w chi(w) w, chi by Murnaghan-Nakayama."""
    from math import factorial
    from oracles import cycle_type
    for lam in enumerate_partitions(n):
        f = len(standard_tableaux(lam))
        central = Element.from_terms(n, [(w, Fraction(f * character(tuple(lam), cycle_type(w)), factorial(n)))
                                         for w in all_perms(n)])
        total = Element.zero(n)
        for t in standard_tableaux(lam):
            total = total + idempotent_E_t(t)
        assert total == central


def test_fast_E_lambda():
    assert idempotent_E_lambda_fast((2,)) == (ONE2 + S2) / 2
    assert idempotent_E_lambda_fast((1, 1)) == (ONE2 - S2) / 2
    assert idempotent_E_lambda_fast((2, 1)).coeff_identity() == Fraction(1, 3)


@pytest.mark.parametrize("lam", enumerate_partitions(6))
def test_fast_E_lambda_n6(lam):
    assert idempotent_E_lambda_fast(lam, cross_check=False) == idempotent_E_t(highest_tableau(lam))


def test_intertwiner_example():
    t = T((1, 3), (2,))
    phi, psi = char0_intertwiners(t)
    s3 = Element.sigma(3, 3)
    assert phi == s3 - Fraction(1, 2)
    assert psi == s3 + Fraction(1, 2)
    phi0, psi0 = char0_intertwiners(highest_tableau((2, 1)))
    assert phi0 == Element.one(3) == psi0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_intertwiner_key_property(n):
    for t in all_standard_tableaux(n):
        phi, psi = char0_intertwiners(t)
        E_lam = idempotent_E_t(highest_tableau(t.shape))
        assert E_lam * psi == phi * idempotent_E_t(t)


def test_F_t_example():
    F, w = f_idempotent(highest_tableau((2,)), 2)
    assert F == jm_element(2, 2)
    assert w == -1


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 6) for p in (2, 3)])
def test_F_t_relations(n, p):
    tabs = all_standard_tableaux(n)
    ws = {t: f_idempotent(t, p)[1] for t in tabs}
    for t in tabs:
        F, w = f_idempotent(t, p)
        assert F.is_p_integral(p)
        for s in tabs:
            lhs = F * idempotent_E_t(s)
            if class_of(s, p) == class_of(t, p):
                assert lhs == idempotent_E_t(s) * Fraction(ws[s], w)
            else:
                assert lhs.is_zero()


def test_class_idempotent_examples():
    T0 = class_of(highest_tableau((2,)), 3)
    ci = class_idempotent(T0)
    assert ci.element_Q == (ONE2 + S2) / 2
    assert ci.element_p == ci.element_Q.reduce_mod(3)
    T1 = class_of(highest_tableau((2, 1)), 2)
    assert len(T1.members) >= 2
    assert class_idempotent(T1).element_Q.den % 2 == 1
    total = Element.zero(3)
    for C in tableau_classes(3, 2):
        total = total + class_idempotent(C).element_Q
    assert total == Element.one(3)


@pytest.mark.parametrize("p", [2, 3])
def test_class_idempotents_n6_spot(p):
    # spot check at n = 6: idempotent and p-integral for the first few classes
    for C in tableau_classes(6, p)[:3]:
        E = class_idempotent(C).element_p
        assert E * E == E


def test_hl_inverse_example():
    C = class_of(highest_tableau((2,)), 3)
    inv = hl_inverse(C, 2)
    E = class_idempotent(C).element_p
    assert inv.h == -1 and inv.nilpotency_degree == 1
    assert inv.G == -E


@pytest.mark.parametrize("n,p", [(3, 2), (4, 2), (4, 3), (5, 3)])
def test_hl_inverse_property(n, p):
    for C in tableau_classes(n, p):
        E = class_idempotent(C).element_p
        for k in range(2, n + 1):
            if (C.r(k - 1) - C.r(k)) % p == 0:
                with pytest.raises(PreconditionError):
                    hl_inverse(C, k)
                continue
            inv = hl_inverse(C, k)
            hL = Element.jm(k - 1, n, p) - Element.jm(k, n, p)
            assert hL * inv.G == E
            assert inv.G * E == inv.G == E * inv.G
            assert inv.G.star() == inv.G
            x = E * Element.sigma(2, n, p)
            assert hL * inv.apply(x) == x


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 6) for p in (2, 3)])
def test_absorption(n, p):
    for t in all_standard_tableaux(n):
        u = psi_L_applied(t, p)
        E = class_idempotent(class_of(highest_tableau(t.shape), p)).element_p
        assert E * u == u and not u.is_zero()


@pytest.mark.parametrize("n,p", [(4, 2), (4, 3), (5, 2)])
def test_commutation_lemma(n, p):
    assert commutation_lemma_check(n, p).passed


def test_due_to_murphy():
    t = highest_tableau((2, 1))
    rep = due_to_murphy_check(t, 3, 3)
    assert rep.passed


def test_murphy_formula_singleton():
    C = class_of(highest_tableau((2,)), 3)
    rep = murphy_formula_check(C, (1,))
    assert rep.passed
    assert rep.data["valuations"][1] >= 1


@given(st.sampled_from([(3, 2), (3, 3), (4, 2), (4, 3)]), st.data())
def test_murphy_formula_exact_and_monotone(np_, data):
    n, p = np_
    C = data.draw(st.sampled_from(tableau_classes(n, p)))
    rep = murphy_formula_check(C, (1, 2, 4))
    assert rep.passed


def test_coeff_identity_E_lambda():
    for lam in enumerate_partitions(5):
        assert idempotent_E_t(highest_tableau(lam)).coeff_identity() == Fraction(1, hooks(lam).h_lambda)
