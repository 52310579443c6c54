import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macsym.partitions import conjugate, partitions_of, z_coeff
from macsym.ratfunc import ONE, ZERO, RatQT, q, t
from macsym.symfunc import (
    F1, FORMAL, HALL, Q2_Q, SWAPPED, TRIV, Basis, Family, PartitionFn, SymFunc, e_cycle_index, elem,
    h_cycle_index, inner_dual, inner_hall, inner_qt, inner_sp, multiply, newton_e, newton_h, omega,
    omega_qt, p_elem, p_in_m, s_in_p, schur_by_characters, tensor, to_basis, to_p,
)

CLASSICAL = ["m", "e", "h", "p", "s"]


def sym_st(max_deg=4, family=None):
    """Random homogeneous element in a random classical basis."""
    fam = family or Family("x", "M", 1)

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_deg))
        basis = draw(st.sampled_from(CLASSICAL))
        lams = partitions_of(n)
        coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(lams), max_size=len(lams)))
        F = SymFunc()
        for lam, c in zip(lams, coeffs):
            if c:
                F = F + elem(basis, lam, fam).scale(RatQT(c))
        return F
    return build()


# ---------------------------------------------------------------- examples

def test_to_basis_examples():
    assert to_basis(elem("e", [2]), Basis("m")) == elem("m", [1, 1])
    assert to_basis(elem("e", [2]), Basis("m")).terms == elem("m", [1, 1]).terms
    expected = p_elem([1, 1, 1]).scale(RatQT(Fraction(1, 3))) - p_elem([3]).scale(RatQT(Fraction(1, 3)))
    assert to_p(elem("s", [2, 1])).terms == expected.terms
    assert to_basis(p_elem([2]), Basis("s")).terms == (elem("s", [2]) - elem("s", [1, 1])).terms


def test_multiply_examples():
    assert multiply(p_elem([2], F1), p_elem([1], F1)).terms == p_elem([2, 1], F1).terms
    s1 = elem("s", [1])
    assert to_basis(multiply(s1, s1), Basis("s")).terms == (elem("s", [2]) + elem("s", [1, 1])).terms
    F = elem("s", [2, 1])
    assert multiply(SymFunc.one(), F) == F


def test_inner_qt_examples():
    assert inner_qt(p_elem([1]), p_elem([1])) == (q - 1) / (t - 1)
    assert inner_qt(p_elem([2]), p_elem([1, 1])) == ZERO
    assert inner_qt(p_elem([1, 1]), p_elem([1, 1])) == 2 * (q - 1) ** 2 / (t - 1) ** 2
    with pytest.raises(ValueError, match="mixed families"):
        inner_qt(p_elem([1], F1), p_elem([1]))


def test_inner_sp_examples():
    assert inner_sp(p_elem([1], F1), p_elem([1], F1)) == 1 / (q**2 - 1)
    assert inner_sp(p_elem([2], F1), p_elem([1, 1], F1)) == ZERO
    for m in range(1, 6):
        assert inner_sp(p_elem([m], F1), p_elem([m], F1)) == RatQT(m) / (q ** (2 * m) - 1)
    with pytest.raises(ValueError, match="project first"):
        inner_sp(p_elem([1], TRIV), p_elem([1], TRIV))


def test_inner_dual_examples():
    phi, psi = Family("phi", "L", 1), Family("psi", "L", 1)
    assert inner_dual(p_elem([1], phi), p_elem([1], phi)) == 1 / (q + 1)
    assert inner_dual(p_elem([1], phi), p_elem([1], psi)) == ZERO
    phi2 = Family("phi2", "L", 2)
    assert inner_dual(p_elem([2], phi2), p_elem([2], phi2)) == 2 * (q**4 - 1) / (q**8 - 1)
    with pytest.raises(ValueError):
        inner_dual(p_elem([1], F1), p_elem([1], F1))


def test_omega_examples():
    assert omega(p_elem([2])) == -p_elem([2])
    assert omega(elem("s", [2, 1])) == elem("s", [2, 1])
    assert omega_qt(p_elem([1]), Q2_Q) == p_elem([1]).scale(q + 1)


def test_symfunc_json_round_trip():
    F = tensor(elem("s", [2, 1], TRIV).scale(q / (1 + t)), p_elem([3], F1))
    assert SymFunc.from_json(F.to_json()).terms == F.terms


def test_partition_fn_weight_and_json():
    pf = PartitionFn.from_json({"triv": [2, 1], "phi": {"deg": 2, "partition": [1]}}, "L")
    assert pf.weight == 5 and pf.size == 4 and pf.length == 3
    assert PartitionFn.from_json(pf.to_json(), "L") == pf
    with pytest.raises(ValueError):
        PartitionFn.from_json([1, 2], "L")


# ---------------------------------------------------------------- oracles

def test_schur_matches_murnaghan_nakayama():
    for n in range(1, 9):
        table = s_in_p(n)
        for lam in partitions_of(n):
            assert table[lam] == schur_by_characters(lam)


def test_newton_identities_match_cycle_index():
    for n in range(1, 9):
        assert newton_h(n) == h_cycle_index(n)
        assert newton_e(n) == e_cycle_index(n)


def _evaluate_m(lam, xs):
    total = 0
    exps = list(lam) + [0] * (len(xs) - len(lam))
    for perm in set(itertools.permutations(exps)):
        term = 1
        for x, e in zip(xs, perm):
            term *= x**e
        total += term
    return total


def test_power_sums_in_monomials_by_evaluation():
    rng = random.Random(7)
    for n in range(1, 7):
        table = p_in_m(n)
        for _ in range(3):
            xs = [rng.randint(-4, 4) for _ in range(n)]
            for rho in partitions_of(n):
                direct = 1
                for part in rho:
                    direct *= sum(x**part for x in xs)
                via_m = sum(c * _evaluate_m(lam, xs) for lam, c in table[rho].items())
                assert direct == via_m


# ---------------------------------------------------------------- invariants

def test_basis_round_trips_to_degree_8():
    paths = [["m", "e", "h", "s", "p", "m"], ["s", "h", "e", "m", "p", "s"], ["e", "s", "m", "h", "e"]]
    for n in range(1, 9):
        for lam in partitions_of(n):
            for path in paths:
                F0 = elem(path[0], lam)
                F = F0
                for b in path[1:]:
                    F = to_basis(F, Basis(b))
                assert F.terms == to_basis(F0, Basis(path[-1])).terms
                assert F == F0


def test_omega_is_involution_and_omega_qt_inverts():
    for n in range(1, 7):
        for lam in partitions_of(n):
            F = elem("s", lam)
            assert omega(omega(F)) == F
            assert omega(F) == elem("s", conjugate(lam))
            assert omega_qt(omega_qt(F, FORMAL), SWAPPED) == F


def test_hall_specialization_makes_schur_orthonormal():
    for n in range(1, 7):
        lams = partitions_of(n)
        for a in lams:
            for b in lams:
                v = inner_qt(elem("s", a), elem("s", b), HALL)
                assert v == (ONE if a == b else ZERO)
                assert inner_hall(elem("s", a), elem("s", b)) == v


@settings(max_examples=60)
@given(sym_st(), sym_st())
def test_omega_is_hall_isometry(F, G):
    assert inner_hall(omega(F), omega(G)) == inner_hall(F, G)


@settings(max_examples=60)
@given(sym_st(3), sym_st(3, F1))
def test_grading_adds_across_families(F, G):
    prod = multiply(F, G)
    degs = {sum(f.deg * lam.size for f, _, lam in key) for key in prod.terms}
    if prod:
        assert degs == {max(F.degrees()) + max(G.degrees())}


@settings(max_examples=60)
@given(sym_st(3), sym_st(3), sym_st(3))
def test_multiplication_is_associative_and_distributive(A, B, C):
    assert multiply(multiply(A, B), C) == multiply(A, multiply(B, C))
    assert multiply(A, B + C) == multiply(A, B) + multiply(A, C)


def test_p_pairing_weights():
    for n in range(1, 6):
        for rho in partitions_of(n):
            w = inner_qt(p_elem(rho), p_elem(rho))
            expected = RatQT(z_coeff(rho))
            for part in rho:
                expected = expected * (q**part - 1) / (t**part - 1)
            assert w == expected
