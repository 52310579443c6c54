from fractions import Fraction

import pytest

from macsym.charmap import index_types
from macsym.macdonald import green_polynomials, hall_littlewood_P, macdonald_J
from macsym.partitions import Partition, partitions_of
from macsym.ratfunc import ONE, ZERO, RatQT, eval_q, q, t
from macsym.spherical import (
    delta_specialize, e_split_identity, identity_coset, identity_lemma_rhs, pair_dual_unipotent,
    pieri_expansion_lemma_check, spherical_value, sum_rule, sum_rule_expected, transvection,
    unipotent_projection, value_route_A, value_route_B, value_route_C_transvection,
)
from macsym.symfunc import (
    F1, Q2_Q, TRIV, Family, PartitionFn, SymFunc, elem, omega, p_elem, tensor, to_p,
)

PHI2 = Family("phi2", "L", 2)
M1 = Family("m1", "M", 1)


def triv(part):
    return PartitionFn({TRIV: Partition(part)})


def low_degree_types(n):
    return [lam for mset, lam in index_types(n, "L") if all(d <= 2 for d, _ in mset)]


# ---------------------------------------------------------------- delta and projection

def test_delta_examples():
    assert delta_specialize(p_elem([1], TRIV)) == 1 / (q - 1)
    assert delta_specialize(p_elem([2, 1], TRIV)) == 1 / ((q**2 - 1) * (q - 1))
    assert delta_specialize(p_elem([1], PHI2)) == 1 / (q**2 - 1)
    with pytest.raises(ValueError):
        delta_specialize(p_elem([1], M1))


def test_delta_of_omega_J_example():
    # (-1)^3 q^{a'} summed over the cells of (2, 1): only (1, 2) has a' = 1
    assert delta_specialize(omega(macdonald_J([2, 1], Q2_Q, TRIV))) == -q


def test_projection_examples():
    assert unipotent_projection(p_elem([1], TRIV)) == p_elem([1], F1)
    assert unipotent_projection(p_elem([1], PHI2)) == -p_elem([2], F1)
    assert unipotent_projection(p_elem([2], TRIV)) == -p_elem([2], F1)


def test_pair_dual_examples():
    for n in range(1, 5):
        assert pair_dual_unipotent(p_elem([n], TRIV), elem("e", [n], F1)) == 1 / (q ** (2 * n) - 1)
    assert pair_dual_unipotent(p_elem([1], TRIV), p_elem([2], F1)) == ZERO
    assert pair_dual_unipotent(p_elem([1], PHI2), p_elem([2], F1)) == RatQT(-2) / (q**4 - 1)
    with pytest.raises(ValueError):
        pair_dual_unipotent(p_elem([1], TRIV), p_elem([1], TRIV))


def _lemma_cases(n):
    """p-products over one or two degree-1 families and a degree-2 family, weight n."""
    phi = Family("phi", "L", 1)
    for rho in partitions_of(n):
        yield p_elem(rho, TRIV)
    for k in range(1, n):
        for a in partitions_of(k):
            for b in partitions_of(n - k):
                yield tensor(p_elem(a, TRIV), p_elem(b, phi))
    for k in range(1, n // 2 + 1):
        for b in partitions_of(k):
            rest = n - 2 * k
            for a in (partitions_of(rest) if rest else [None]):
                yield tensor(p_elem(b, PHI2), p_elem(a, TRIV)) if a else p_elem(b, PHI2)


def test_identity_lemma_on_power_sums():
    for n in range(1, 6):
        for F in _lemma_cases(n):
            assert pair_dual_unipotent(F, elem("e", [n], F1)) == identity_lemma_rhs(F)


def test_generating_identity():
    for n in range(1, 5):
        table = green_polynomials(n)
        for lam in low_degree_types(n):
            rho = Partition.from_multiset([f.deg * x for f, part in lam.items() for x in part])
            lhs = SymFunc()
            for mu in partitions_of(n):
                hl = hall_littlewood_P(mu, t**-1, F1)
                lhs = lhs + hl.scale(table.value(rho, mu) * t ** (-sum(i * x for i, x in enumerate(mu))))
            sign = -1 if (n - lam.length) % 2 else 1
            p_lam = tensor(*(p_elem(part, f) for f, part in lam.items())).scale(sign)
            assert to_p(lhs) == unipotent_projection(p_lam)


# ---------------------------------------------------------------- routes

def test_transvection_coset():
    assert transvection(2) == Partition([2])
    assert transvection(4) == Partition([2, 1, 1])
    with pytest.raises(ValueError, match="transvection needs n>=2"):
        transvection(1)
    with pytest.raises(ValueError, match="transvection needs n>=2"):
        value_route_C_transvection(triv([1]))


def test_route_examples():
    assert value_route_A(triv([1]), [1]) == ONE
    assert value_route_B(triv([1]), [1]) == ONE
    for route in ("a", "b", "c"):
        assert spherical_value(triv([1, 1]), [2], route) == ONE
    # all three routes and the sum rule give 1/(1+q+q^2+q^3) for lam = (2)
    expected = (q - 1) / (q**4 - 1)
    for route in ("a", "b", "c"):
        assert spherical_value(triv([2]), [2], route) == expected
    assert eval_q(expected, 3) == Fraction(1, 40)
    deg2 = PartitionFn({PHI2: Partition([1])})
    for route in ("a", "b", "c"):
        assert spherical_value(deg2, [2], route) == -1 / (q**2 - 1)


def test_route_errors():
    with pytest.raises(ValueError, match="degree mismatch"):
        value_route_A(triv([2]), [1])
    with pytest.raises(ValueError, match="degree mismatch"):
        value_route_B(triv([2]), [1, 1, 1])
    with pytest.raises(ValueError):
        spherical_value(triv([2]), [1, 1], "c")
    with pytest.raises(ValueError):
        spherical_value(triv([2]), [2], "z")


def test_identity_value_is_one():
    for n in range(1, 4):
        for lam in low_degree_types(n):
            assert value_route_A(lam, identity_coset(n)) == ONE
            assert value_route_B(lam, identity_coset(n)) == ONE


def test_routes_agree_with_bound():
    for n in range(2, 4):
        for lam in low_degree_types(n):
            for mu in partitions_of(n):
                a = value_route_A(lam, mu)
                assert a == value_route_B(lam, mu)
                if mu == transvection(n):
                    assert a == value_route_C_transvection(lam)
                for q0 in (3, 5, 9):
                    assert abs(eval_q(a, q0)) <= 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sum_rule(n):
    for mu in partitions_of(n):
        assert sum_rule(mu, "a") == sum_rule_expected(mu)
        assert sum_rule(mu, "b") == sum_rule_expected(mu)


# ---------------------------------------------------------------- Pieri-based checks

def test_e_split_identity():
    for n in range(2, 6):
        assert e_split_identity(n)


def test_pieri_expansion_lemma():
    for n in (2, 3, 4):
        assert pieri_expansion_lemma_check(n)
    with pytest.raises(ValueError):
        pieri_expansion_lemma_check(1)
