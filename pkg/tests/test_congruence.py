"""Polynomial congruence suites."""

import json

import pytest

from qcatalan.congruence import (
    boundary_swap_residue,
    check_congruence,
    verify_central_qbinom_congruence,
    verify_liu_mod_phi2,
    verify_liu_petrov,
    verify_lucas_qbinom,
    verify_main_theorem,
    verify_maj_oracle,
    verify_reduction_chain,
    verify_row_qbinom_congruence,
    verify_tauraso13_identity,
    verify_tauraso_mod_phi,
)
from qcatalan.cyclotomic import reduce_mod_phi_power
from qcatalan.qcomb import catalan_sum
from qcatalan.ring import Poly, Q

from test_ring import schoolbook_divmod


def test_check_congruence_examples():
    assert check_congruence(Poly.monomial(1, 5), Poly([1]), 5, 1).passed
    rep = check_congruence(Poly.monomial(1, 5), Poly([1]), 5, 2)
    assert rep.status == "fail"
    # witness is the residue of q^5 - 1 mod Phi_5^2, cross-checked by hand division
    _, oracle = schoolbook_divmod(
        Poly([-1, 0, 0, 0, 0, 1]), Poly([1, 1, 1, 1, 1]) ** 2
    )
    assert rep.witness == oracle.render()
    p = Poly([3, 1, 4])
    assert check_congruence(p, p, 7, 2).passed


def test_report_shape():
    rep = check_congruence(Q, Q, 3, 1)
    obj = json.loads(rep.to_json())
    assert set(obj) == {"suite", "params", "status", "elapsed_ms"}
    assert obj["status"] == "pass"
    bad = check_congruence(Q, Q + 1, 3, 1)
    obj = json.loads(bad.to_json())
    assert obj["witness"]  # fail => witness present and nonzero


def test_tauraso_phi_hand_example():
    # n = 2: sum is 1 + q, right side -1 - q, difference 2 + 2q = 2 Phi_2
    assert catalan_sum(2) == Poly([1, 1])
    rep = verify_tauraso_mod_phi(2)
    assert rep.passed
    assert verify_tauraso_mod_phi(3).passed
    assert verify_tauraso_mod_phi(4).passed
    with pytest.raises(ValueError):
        verify_tauraso_mod_phi(1)


def test_tauraso_phi_sweep():
    for n in range(2, 61):
        assert verify_tauraso_mod_phi(n).passed, n


def test_liu_phi2():
    assert verify_liu_mod_phi2(2).passed
    assert verify_liu_mod_phi2(4).passed
    with pytest.raises(ValueError):
        verify_liu_mod_phi2(3)
    for n in range(2, 41):
        if n % 3:
            assert verify_liu_mod_phi2(n).passed, n


def test_main_theorem():
    assert verify_main_theorem(3).passed
    assert verify_main_theorem(6).passed
    with pytest.raises(ValueError):
        verify_main_theorem(4)
    for n in range(3, 61, 3):
        assert verify_main_theorem(n).passed, n


def test_main_theorem_n3_by_hand():
    # 1 + q + q^2 + q^4 vs q^7 + (1/3)(q^3 - 1)(2 + 4 q^2) mod (q^2+q+1)^2
    from fractions import Fraction

    lhs = Poly([1, 1, 1, 0, 1])
    rhs = Poly.monomial(1, 7) + (Poly.monomial(1, 3) - 1) * Poly(
        [2, 0, 4]
    ) * Fraction(1, 3)
    assert reduce_mod_phi_power(lhs - rhs, 3, 2).is_zero()


def test_liu_petrov():
    for n in (2, 3, 5):
        assert verify_liu_petrov(n).passed
    for n in range(2, 41):
        assert verify_liu_petrov(n).passed, n


def test_tauraso13():
    assert verify_tauraso13_identity(1).passed
    # n = 2 by hand: lhs = q^2 [2,2] = q^2; rhs = k=2 term with unit Legendre factor
    from qcatalan.qcomb import shifted_central_sum

    assert shifted_central_sum(2) == Poly.monomial(1, 2)
    assert verify_tauraso13_identity(2).passed
    assert verify_tauraso13_identity(5).passed
    for n in range(1, 21):
        assert verify_tauraso13_identity(n).passed, n


def test_lucas():
    assert verify_lucas_qbinom(1, 1, 0, 2, 3).passed
    assert verify_lucas_qbinom(2, 0, 1, 0, 4).passed
    assert verify_lucas_qbinom(1, 0, 1, 1, 5).passed
    with pytest.raises(ValueError):
        verify_lucas_qbinom(1, 5, 0, 0, 5)  # b must be < n


def test_central_row_congruences():
    assert verify_central_qbinom_congruence(3, 1).passed
    assert verify_central_qbinom_congruence(5, 2).passed
    with pytest.raises(ValueError):
        verify_central_qbinom_congruence(4, 4)
    assert verify_row_qbinom_congruence(3, 1).passed
    assert verify_row_qbinom_congruence(3, 2).passed
    assert verify_row_qbinom_congruence(7, 3).passed
    with pytest.raises(ValueError):
        verify_row_qbinom_congruence(5, 0)
    for n in range(2, 26):
        for k in range(1, n):
            assert verify_central_qbinom_congruence(n, k).passed, (n, k)
            assert verify_row_qbinom_congruence(n, k).passed, (n, k)


def test_row_n3_k2_by_hand():
    # [2,1] q = q + q^2 = Phi_3 - 1, so congruent to -1 mod Phi_3
    assert reduce_mod_phi_power(Poly([1, 1, 1]), 3, 1).is_zero()
    assert verify_row_qbinom_congruence(3, 2).passed


def test_maj_oracle_suite():
    for k in range(0, 9):
        assert verify_maj_oracle(k).passed


def test_reduction_chain_holds_with_boundary_term():
    for n in range(2, 19):
        assert verify_reduction_chain(n).passed, n


def test_boundary_swap_is_a_real_discrepancy():
    # The k = 0 term of the zero-based sum, -[2n, n], does NOT agree with
    # the k = n boundary monomial modulo Phi_n^2; the chain only balances
    # because the honest form keeps the boundary term.  Recorded, not patched.
    for n in range(2, 13):
        assert not boundary_swap_residue(n).is_zero(), n


def test_consistency_chain_on_shared_n():
    # on a shared multiple of 3 every link of the reduction must pass
    from qcatalan.rootid import galois_orbit, verify_main3n

    for n in (3, 6, 9, 12):
        assert verify_liu_petrov(n).passed
        assert verify_tauraso13_identity(n).passed
        for k in range(1, n):
            assert verify_central_qbinom_congruence(n, k).passed
        for j in galois_orbit(n):
            assert verify_main3n(n // 3, j).passed
        assert verify_main_theorem(n).passed


def test_exactly_one_rhs_applies():
    # the three residue-class right-hand sides partition the sweep
    for n in range(2, 31):
        forms = [n % 3 in (0, 1), n % 3 == 2]
        assert sum(forms) == 1
