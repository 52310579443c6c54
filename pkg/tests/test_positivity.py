from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from macsym.macdonald import c_coeff, cprime_coeff, schur_expansion_C, skew_P
from macsym.partitions import Partition, partitions_of
from macsym.positivity import (
    falsifications, haglund_check, haglund_scan, haglund_skew_check, haglund_value, lr_coefficient,
    lr_product, positivity_scan, skew_schur_row, vanishing_predicate, vanishing_scan,
)
from macsym.ratfunc import ZERO, eval_q, q
from macsym.symfunc import HALL, Q_Q2, Binding, p_in_s, s_in_p

INVERTED = Binding(q**-1, q**-2, "1/q,1/q2")


# ---------------------------------------------------------------- LR coefficients

def test_lr_examples():
    assert lr_coefficient([4], [[2], [2]]) == 1
    assert lr_coefficient([1, 1, 1, 1], [[2], [2]]) == 0
    # s_2 s_11 = s_31 + s_211
    assert lr_coefficient([3, 2], [[2], [1, 1]]) == 0
    assert lr_coefficient([3, 1], [[2], [1, 1]]) == 1
    assert lr_coefficient([2, 2], [[2], [2]]) == 1
    assert lr_coefficient([3], [[2]]) == 0


def test_lr_self_pairing():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert lr_coefficient(lam, [lam]) == 1


def _schur_product_via_power_sums(mu, nu):
    """s_mu s_nu expanded in s, through the character tables."""
    n = mu.size + nu.size
    prod = {}
    for a, ca in (s_in_p(mu.size)[mu].items() if mu else [(Partition(), 1)]):
        for b, cb in (s_in_p(nu.size)[nu].items() if nu else [(Partition(), 1)]):
            rho = Partition.from_multiset(a + b)
            prod[rho] = prod.get(rho, 0) + Fraction(ca) * Fraction(cb)
    to_s = p_in_s(n)
    out = {}
    for rho, c in prod.items():
        for lam, d in to_s[rho].items():
            out[lam] = out.get(lam, 0) + c * Fraction(d)
    return {lam: c for lam, c in out.items() if c}


def test_lr_matches_power_sum_multiplication():
    for a in range(0, 5):
        for b in range(0, 5 - a):
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    expected = _schur_product_via_power_sums(mu, nu)
                    got = {lam: c for lam, c in lr_product(mu, nu).items() if c}
                    assert got == expected


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3).map(lambda xs: sorted(xs, reverse=True)),
       st.lists(st.integers(1, 3), min_size=1, max_size=3).map(lambda xs: sorted(xs, reverse=True)))
def test_lr_is_commutative(mu, nu):
    assert lr_product(mu, nu) == lr_product(nu, mu)


def test_lr_weight_mismatch_is_zero():
    assert lr_coefficient([3], [[1]]) == 0


def test_vanishing_examples():
    assert vanishing_predicate([1, 1], [], [2]) is True
    assert vanishing_predicate([2], [], [2]) is False
    assert vanishing_predicate([2], [2], []) is False


# ---------------------------------------------------------------- C coefficients

def test_C_examples():
    witness = schur_expansion_C([2], [], [1, 1], Q_Q2)
    assert witness == q / (1 + q + q**2)
    assert eval_q(witness, 3) == Fraction(3, 13)
    assert schur_expansion_C([1, 1], [], [2], Q_Q2) == ZERO
    assert skew_schur_row(Partition([2]), Partition([2]))[Partition()] == 1


def test_schur_row_at_q_equals_t_is_skew_lr():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for m in range(n + 1):
                for mu in partitions_of(m):
                    if not lam.contains(mu):
                        continue
                    for nu, c in skew_schur_row(lam, mu, HALL).items():
                        assert c == lr_coefficient(lam, [mu, nu])


def test_inversion_of_parameters():
    """P_{lam/mu} is unchanged by (q, t) -> (1/q, 1/t); Q_{lam/mu} picks up (q/t)^{|lam|-|mu|}."""
    for n in range(1, 5):
        for lam in partitions_of(n):
            b_inv = c_coeff(lam, INVERTED) / cprime_coeff(lam, INVERTED)
            b = c_coeff(lam, Q_Q2) / cprime_coeff(lam, Q_Q2)
            assert b_inv == q ** (-n) * b
            for m in range(n + 1):
                for mu in partitions_of(m):
                    if lam.contains(mu):
                        assert skew_P(lam, mu, INVERTED) == skew_P(lam, mu, Q_Q2)
                        assert skew_schur_row(lam, mu, INVERTED) == skew_schur_row(lam, mu, Q_Q2)


# ---------------------------------------------------------------- scans

def test_small_positivity_scan():
    reports = positivity_scan(4, [3, 5, 9])
    assert reports
    assert falsifications(reports) == []
    for r in reports:
        if r.vanishing_predicted:
            assert r.coefficient == ZERO
        assert all(v >= 0 for v in r.evaluations.values())
    witness = next(r for r in reports if (r.lam, r.mu, r.nu) == ((2,), (), (1, 1)))
    assert witness.evaluations[Fraction(3)] == Fraction(3, 13)
    js = witness.to_json()
    assert js["lambda"] == [2] and js["falsifications"] == []


def test_parallel_scan_matches_serial():
    a = positivity_scan(4, [3], jobs=1)
    b = positivity_scan(4, [3], jobs=4)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]


def test_small_vanishing_scan():
    rows = vanishing_scan(4)
    assert rows
    assert all(c == ZERO for *_, c in rows)
    assert (Partition([1, 1]), Partition(), Partition([2]), ZERO) in rows


# ---------------------------------------------------------------- Haglund-type reports

def test_haglund_examples():
    # J_(1)(q, q^2) = (1 - t) P_(1) = (1 - q^2) p_1, so the quotient is 1 + q
    assert haglund_check([1], [1]) == [1, 1]
    assert haglund_check([1, 1], [1, 1]) == [1, 2, 2, 2, 1]
    assert haglund_check([2], [1, 1]) == [0, 1, 1]
    assert haglund_value([1], [1]) == 1 + q


def test_haglund_skew_examples():
    assert haglund_skew_check([1], [1], []) == [1, 1]
    for lam in partitions_of(3):
        for nu in partitions_of(3):
            assert haglund_skew_check(lam, [], nu) == haglund_check(lam, nu)


def test_haglund_scans_report_certificates():
    rows = haglund_scan(4)
    assert len(rows) == sum(len(partitions_of(n)) ** 2 for n in range(1, 5))
    assert all(cert is not None and min(cert) >= 0 for *_, cert in rows)
    skew_rows = haglund_scan(3, skew=True)
    assert all(cert is not None for *_, cert in skew_rows)
