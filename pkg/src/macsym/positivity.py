"""Positivity and vanishing of C^nu_{lam/mu}(q, q^2), and Haglund-type reports.

Scans never raise on a counterexample: each violation becomes a
falsification record so a full grid always completes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .macdonald import macdonald_to_p, macdonald_table, skew_P
from .partitions import Partition, partitions_of, union_double, z_coeff
from .ratfunc import ZERO, RatQT, eval_q, is_polynomial_with_nonneg_int_coeffs, q, q_coefficients
from .symfunc import Q_Q2, Binding, s_in_p

DEFAULT_QS = (3, 5, 7, 9)

# --------------------------------------------------------------------------
# Littlewood-Richardson coefficients (combinatorial)


def _lr_fillings(mu, nu, bound=None):
    """s_mu s_nu = sum_lam c s_lam via LR fillings of lam/mu with content nu.

    Labels 1..l(nu) are added as horizontal strips in order.  The reverse
    reading word is a lattice word iff for every label i >= 2 and row r the
    number of i's in rows <= r is at most the number of (i-1)'s in rows < r.
    """
    nu = tuple(nu)
    rows = len(mu) + len(nu)
    out = {}

    def place(i, shape, prev):
        if i == len(nu):
            lam = Partition([x for x in shape if x])
            out[lam] = out.get(lam, 0) + 1
            return
        prefix = None
        if prev is not None:
            prefix = [0]
            for c in prev:
                prefix.append(prefix[-1] + c)

        def row(r, left, new, cnt, run):
            if r == rows:
                if left == 0:
                    place(i + 1, new, cnt)
                return
            base = shape[r]
            cap = left
            if r:
                cap = min(cap, shape[r - 1] - base)
            if bound is not None:
                cap = min(cap, (bound[r] if r < len(bound) else 0) - base)
            if prefix is not None:
                cap = min(cap, prefix[r] - run)
            for k in range(cap, -1, -1):
                row(r + 1, left - k, new + [base + k], cnt + [k], run + k)

        row(0, nu[i], [], [], 0)

    place(0, list(mu) + [0] * len(nu), None)
    return out


def lr_product(mu, nu, bound=None) -> dict:
    mu, nu = Partition(mu), Partition(nu)
    if bound is not None:
        bound = tuple(bound)
    return _lr_cached(mu, nu, bound)


@lru_cache(maxsize=None)
def _lr_cached(mu, nu, bound):
    if not nu:
        return {mu: 1}
    if not mu:
        if bound is None or Partition(bound).contains(nu):
            return {nu: 1}
        return {}
    return _lr_fillings(mu, nu, bound)


def lr_coefficient(alpha, factors) -> int:
    """<s_alpha, prod s_factor>, multiplying left to right inside alpha."""
    alpha = Partition(alpha)
    factors = [Partition(f) for f in factors]
    if alpha.size != sum(f.size for f in factors):
        return 0
    acc = {Partition(): 1}
    for f in factors:
        nxt = {}
        for shape, c in acc.items():
            for lam, d in lr_product(shape, f, alpha).items():
                if alpha.contains(lam):
                    nxt[lam] = nxt.get(lam, 0) + c * d
        acc = nxt
    return acc.get(alpha, 0)


def vanishing_predicate(lam, mu, nu) -> bool:
    """True iff <s_{lam u lam}, s_{mu u mu} s_nu s_nu> = 0."""
    return lr_coefficient(union_double(lam), [union_double(mu), nu, nu]) == 0


# --------------------------------------------------------------------------
# skew Schur expansion


@lru_cache(maxsize=None)
def skew_schur_row(lam: Partition, mu: Partition, binding: Binding = Q_Q2) -> dict:
    """{nu: C^nu_{lam/mu}} for all nu of the right size (zeros included)."""
    k = lam.size - mu.size
    if k < 0:
        return {}
    skew = skew_P(lam, mu, binding)
    if k == 0:
        return {Partition(): skew.coefficient()}
    sp = s_in_p(k)
    out = {}
    for nu in partitions_of(k):
        total = ZERO
        for key, c in skew.terms.items():
            (_, _, sigma), = key
            sc = sp[nu].get(sigma)
            if sc:
                total = total + c * sc * z_coeff(sigma)
        out[nu] = total
    return out


@dataclass
class PositivityReport:
    lam: Partition
    mu: Partition
    nu: Partition
    coefficient: RatQT
    evaluations: dict
    vanishing_predicted: bool
    haglund_certificate: list | None = None
    falsifications: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "mu": list(self.mu), "nu": list(self.nu),
            "coefficient": self.coefficient.to_json(), "coefficient_str": str(self.coefficient),
            "evaluations": {str(k): str(v) for k, v in self.evaluations.items()},
            "vanishing_predicted": self.vanishing_predicted,
            "haglund_certificate": self.haglund_certificate,
            "falsifications": self.falsifications,
        }


def _scan_pair(lam, mu, qs):
    reports = []
    for nu, coeff in skew_schur_row(lam, mu, Q_Q2).items():
        evals = {q0: eval_q(coeff, q0) for q0 in qs}
        vanish = vanishing_predicate(lam, mu, nu)
        bad = [f"negative at q={q0}: {v}" for q0, v in evals.items() if v < 0]
        if vanish and coeff:
            bad.append("vanishing predicted but coefficient is nonzero")
        reports.append(PositivityReport(lam, mu, nu, coeff, evals, vanish, None, bad))
    return reports


def positivity_scan(max_n: int, qs=DEFAULT_QS, max_mu: int | None = None, jobs: int = 1):
    """Reports for every (lam, mu, nu) with |lam| <= max_n, |lam| = |mu| + |nu|.

    mu runs over partitions contained in lam with |mu| <= max_mu.
    """
    qs = tuple(Fraction(x) for x in qs)
    max_mu = max_n if max_mu is None else max_mu
    pairs = []
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            for m in range(min(n, max_mu) + 1):
                for mu in partitions_of(m):
                    if lam.contains(mu):
                        pairs.append((lam, mu))
    # warm the shared tables in order so threads only read
    for n in range(max_n + 1):
        macdonald_table(n, Q_Q2)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda pr: _scan_pair(pr[0], pr[1], qs), pairs))
    else:
        chunks = [_scan_pair(lam, mu, qs) for lam, mu in pairs]
    return [r for chunk in chunks for r in chunk]


def falsifications(reports) -> list:
    return [r for r in reports if r.falsifications]


def vanishing_scan(max_n: int, max_mu: int | None = None):
    """(lam, mu, nu, coefficient) for every triple where vanishing is predicted."""
    out = []
    max_mu = max_n if max_mu is None else max_mu
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            for m in range(min(n, max_mu) + 1):
                for mu in partitions_of(m):
                    if not lam.contains(mu):
                        continue
                    for nu, coeff in skew_schur_row(lam, mu, Q_Q2).items():
                        if vanishing_predicate(lam, mu, nu):
                            out.append((lam, mu, nu, coeff))
    return out


# --------------------------------------------------------------------------
# Haglund-type certificates (reported, never asserted)


def haglund_value(lam, mu) -> RatQT:
    """<J_lam(q, q^2), s_mu> / (1 - q)^{|lam|}."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("haglund_check needs |lam| = |mu|")
    J = macdonald_to_p("J", lam.size, Q_Q2)[lam]
    s_row = s_in_p(lam.size)[mu] if lam else {Partition(): 1}
    total = ZERO
    for rho, c in J.items():
        sc = s_row.get(rho)
        if sc:
            total = total + c * sc * z_coeff(rho)
    return total / (1 - q) ** lam.size


def haglund_check(lam, mu):
    v = haglund_value(lam, mu)
    return q_coefficients(v) if is_polynomial_with_nonneg_int_coeffs(v) else None


def perp_apply(G: dict, F: dict, deg_F: int, deg_G: int, binding: Binding) -> dict:
    """Adjoint of multiplication by G (p-coordinates), applied to F.

    <G^perp F, p_sigma> = <F, G p_sigma>, so
    [p_sigma] G^perp F = sum_tau G[tau] F[tau u sigma] w(tau u sigma) / w(sigma).
    """
    k = deg_F - deg_G
    if k < 0:
        return {}
    out = {}
    for sigma in partitions_of(k):
        acc = ZERO
        for tau, gc in G.items():
            union = Partition.from_multiset(tau + sigma)
            fc = F.get(union)
            if fc is None:
                continue
            w = RatQT(Fraction(z_coeff(union), z_coeff(sigma)))
            for part in tau:
                w = w * binding.weight(part)
            acc = acc + gc * fc * w
        if acc:
            out[sigma] = acc
    return out


def J_perp_J(lam, mu, binding: Binding = Q_Q2) -> dict:
    """J_mu^perp J_lam in p-coordinates."""
    lam, mu = Partition(lam), Partition(mu)
    J_lam = macdonald_to_p("J", lam.size, binding)[lam] if lam else {Partition(): RatQT(1)}
    J_mu = macdonald_to_p("J", mu.size, binding)[mu] if mu else {Partition(): RatQT(1)}
    return perp_apply(J_mu, J_lam, lam.size, mu.size, binding)


def haglund_skew_value(lam, mu, nu) -> RatQT:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size - mu.size != nu.size:
        raise ValueError("haglund_skew_check needs |lam| - |mu| = |nu|")
    vec = J_perp_J(lam, mu)
    s_row = s_in_p(nu.size)[nu] if nu else {Partition(): 1}
    total = ZERO
    for sigma, c in vec.items():
        sc = s_row.get(sigma)
        if sc:
            total = total + c * sc * z_coeff(sigma)
    return total / (1 - q) ** (lam.size + mu.size)


def haglund_skew_check(lam, mu, nu):
    v = haglund_skew_value(lam, mu, nu)
    return q_coefficients(v) if is_polynomial_with_nonneg_int_coeffs(v) else None


def haglund_scan(max_n: int, skew: bool = False):
    """Report rows (lam, mu, nu, certificate or None) up to |lam| = max_n."""
    rows = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            if not skew:
                for mu in partitions_of(n):
                    rows.append((lam, Partition(), mu, haglund_check(lam, mu)))
                continue
            for m in range(n + 1):
                for mu in partitions_of(m):
                    if not lam.contains(mu):
                        continue
                    for nu in partitions_of(n - m):
                        rows.append((lam, mu, nu, haglund_skew_check(lam, mu, nu)))
    return rows


__all__ = [
    "lr_product", "lr_coefficient", "vanishing_predicate", "skew_schur_row",
    "PositivityReport", "positivity_scan", "falsifications", "vanishing_scan",
    "haglund_value", "haglund_check", "perp_apply", "J_perp_J", "haglund_skew_value",
    "haglund_skew_check", "haglund_scan", "DEFAULT_QS",
]
