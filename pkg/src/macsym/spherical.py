"""Spherical function values of GL(2n,q)/Sp(2n,q) on unipotent double cosets.

Three independent evaluations are provided:

* route A pairs the characteristic image of phi_lam against that of the
  coset indicator (isometry of the characteristic map);
* route B sums basic functions over W(lam) = prod_phi S_|lam(phi)|, with
  unipotent basic-function values read off the Green polynomials at q^2;
* route C is the Pieri-rule closed form, valid on the transvection coset.

A fourth check, `sum_rule`, is the permutation-character identity
sum_lam dim(chi_{lam u lam}) phi_lam(g) = [G:H] [g in H], summed over all
character types with their orbit multiplicities as polynomials in q.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .charmap import (ch_sp_indicator, ch_spherical, dim_irreducible, doubled, double_coset_size,
                      gl_order, index_types, sp_order, unipotent)
from .macdonald import (c_coeff, cprime_coeff, green_polynomials, macdonald_table,
                        pieri_psi_prime)
from .partitions import (Partition, conjugate, n_stat, partitions_of, removable_cells,
                         remove_cell, sign)
from .ratfunc import ONE, ZERO, RatQT, q
from .symfunc import P as P_BASIS
from .symfunc import (F1, Q_Q2, Binding, PartitionFn, SymFunc, elem, inner_dual,
                      inner_sp, omega, omega_qt, to_p)

ROUTES = ("a", "b", "c")


def transvection(n: int) -> Partition:
    """mu(f1) = (2, 1^{n-2})."""
    if n < 2:
        raise ValueError("transvection needs n>=2")
    return Partition([2] + [1] * (n - 2))


def identity_coset(n: int) -> Partition:
    return Partition([1] * n)


# --------------------------------------------------------------------------
# specializations of dual-variable functions


def delta_specialize(F: SymFunc) -> RatQT:
    """Algebra map p_n(phi) -> 1/(q_phi^n - 1)."""
    total = ZERO
    for key, c in to_p(F).terms.items():
        v = c
        for fam, _, lam in key:
            if fam.kind != "L":
                raise ValueError("delta_specialize is defined on L-families only")
            for part in lam:
                v = v / (q ** (fam.deg * part) - 1)
        total = total + v
    return total


def unipotent_projection(F: SymFunc) -> SymFunc:
    """p_n(phi) -> (-1)^{n d(phi) - 1} p_{n d(phi)}(f1).

    The dual power sum p_n(phi) is a signed character sum over elements x
    of the degree-n d(phi) extension.  Paired against functions supported on
    unipotent classes, only x = 1 contributes (its minimal polynomial is
    x - 1, the orbit f1), and every character takes the value 1 there.
    What survives is the f1 power sum of degree n d(phi) with the sign of
    the dual power sum's definition.
    """
    out = {}
    for key, c in to_p(F).terms.items():
        parts = []
        sgn = 1
        for fam, _, lam in key:
            if fam.kind != "L":
                raise ValueError("unipotent_projection is defined on L-families only")
            for part in lam:
                k = part * fam.deg
                parts.append(k)
                if k % 2 == 0:
                    sgn = -sgn
        rho = Partition.from_multiset(parts)
        k = ((F1, P_BASIS, rho),) if rho else ()
        v = out.get(k, ZERO) + (c if sgn > 0 else -c)
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return SymFunc._raw(out)


def pair_dual_unipotent(F: SymFunc, G: SymFunc) -> RatQT:
    """<F, G> for F on L-families and G on f1, via the unipotent projection."""
    if G.families() - {F1}:
        raise ValueError("second argument must be supported on f1")
    return inner_sp(unipotent_projection(F), G)


def identity_lemma_rhs(F: SymFunc) -> RatQT:
    """delta(omega omega_{q,q^2} F), the closed form for <F, e_n(f1)>."""
    return delta_specialize(omega(omega_qt(F, Q_Q2)))


# --------------------------------------------------------------------------
# route A


def _coset_weight(lam: PartitionFn, mu) -> int:
    mu = Partition(mu)
    if lam.weight != mu.size:
        raise ValueError(f"degree mismatch: ||lam|| = {lam.weight}, |mu| = {mu.size}")
    return mu.size


def value_route_A(lam: PartitionFn, mu) -> RatQT:
    """phi_lam(g_mu) = q^{-n}|Sp|^2 <ch phi_lam, ch I_mu> / |H g_mu H|."""
    n = _coset_weight(lam, mu)
    coset = unipotent(mu)
    pairing = pair_dual_unipotent(ch_spherical(lam), ch_sp_indicator(coset))
    return q ** (-n) * sp_order(n) ** 2 * pairing / double_coset_size(coset)


# --------------------------------------------------------------------------
# route B


@lru_cache(maxsize=None)
def _green_at_q2(n: int) -> dict:
    table = green_polynomials(n).Q
    return {rho: {mu: c.subst_monomial((1, 0), (2, 0)) for mu, c in row.items()}
            for rho, row in table.items()}


@lru_cache(maxsize=None)
def _family_terms(part: Partition, d: int):
    """[(rho, [p_rho] J_{part'}(q_phi^2, q_phi) * sgn(rho))] for one family of degree d."""
    conj = conjugate(part)
    qf = q**d
    binding = Binding(qf**2, qf)
    row = macdonald_table(conj.size, binding).P_in_p[conj]
    c = c_coeff(conj, binding)
    return tuple((rho, row[rho] * c * sign(rho)) for rho in partitions_of(part.size) if rho in row)


def value_route_B(lam: PartitionFn, mu) -> RatQT:
    """Basic-function expansion of phi_lam, summed over cycle types of W(lam).

    The 1/|W| sum over w becomes a sum over cycle types rho_phi weighted by
    1/z_rho; d_{lam'}(rho)/z_rho * c_{lam'} is the p_rho coefficient of the
    integral form J_{lam'}(q_phi^2, q_phi).  The basic function at the torus
    of type rho = u_phi d(phi) rho_phi is unipotent-supported here, so its
    value at g_mu is the Green polynomial Q_rho^mu at q^2.
    """
    n = _coset_weight(lam, mu)
    mu = Partition(mu)
    green = _green_at_q2(n)
    ones = identity_coset(n)
    prefactor = RatQT((-1) ** lam.size)
    per_family = []
    for fam, part in lam.items():
        prefactor = prefactor * q ** (-fam.deg * n_stat(conjugate(part)))
        per_family.append((fam.deg, _family_terms(part, fam.deg)))
    total = ZERO
    for choice in product(*(terms for _, terms in per_family)):
        coeff = ONE
        parts = []
        torus = ONE
        for (d, _), (rho, c) in zip(per_family, choice):
            coeff = coeff * c
            for r in rho:
                parts.append(d * r)
                torus = torus * (q ** (d * r) - 1)
        big = Partition.from_multiset(parts)
        row = green[big]
        val = row.get(mu, ZERO)
        if val:
            total = total + coeff * val / (torus * row[ones])
    return prefactor * total


# --------------------------------------------------------------------------
# route C


def value_route_C_transvection(lam: PartitionFn) -> RatQT:
    """Closed form on the transvection coset (requires n >= 2)."""
    n = lam.weight
    if n < 2:
        raise ValueError("transvection needs n>=2")
    b = Q_Q2
    pref = q ** (2 * n - 2) * (q**2 - 1) / ((q ** (2 * n) - 1) * (q ** (2 * n - 2) - 1))
    acc = ZERO
    for fam, part in lam.items():
        if fam.deg != 1:
            continue
        for r, _ in removable_cells(part):
            small = remove_cell(part, r)
            term = cprime_coeff(part, b) * pieri_psi_prime(part, small, b)
            term = term / (cprime_coeff(small, b) * (1 - q))
            term = term * q ** (n_stat(conjugate(small)) - n_stat(conjugate(part)))
            acc = acc + term
    acc = acc - (q ** (2 * n) - 1) / (q ** (2 * n - 2) * (q**2 - 1))
    return pref * acc


def spherical_value(lam: PartitionFn, mu, route: str = "a") -> RatQT:
    route = route.lower()
    if route == "a":
        return value_route_A(lam, mu)
    if route == "b":
        return value_route_B(lam, mu)
    if route == "c":
        if Partition(mu) != transvection(Partition(mu).size):
            raise ValueError("route c only evaluates the transvection coset")
        return value_route_C_transvection(lam)
    raise ValueError(f"unknown route {route!r}")


# --------------------------------------------------------------------------
# checks built from the Pieri rule


def e_split_identity(n: int) -> bool:
    """P_{(2,1^{n-2})}(x; t) = e_{n-1} e_1 - (1 + t + ... + t^{n-1}) e_n."""
    from .macdonald import hall_littlewood_P
    from .ratfunc import t as tvar
    lhs = hall_littlewood_P(transvection(n))
    qint = sum((tvar**i for i in range(n)), ZERO)
    rhs = elem("e", [n - 1, 1]) - elem("e", [n]).scale(qint)
    return lhs == rhs


def pieri_expansion_coefficient(lam: PartitionFn) -> RatQT:
    """Coefficient of the dual basis element hat J_lam in e_{n-1}(f1) e_1(f1).

    (-1)^{|lam|} sum_{lam0} q^{n(lam0')} c'_lam / (c'_lam0 (1 - q)) psi'_{lam/lam0},
    lam0 running over removals of one box from a degree-1 family; the power
    of q is the product over all families of q_phi^{n(lam0(phi)')}.
    """
    b = Q_Q2
    total = ZERO
    for fam, part in lam.items():
        if fam.deg != 1:
            continue
        others = ONE
        for g, other in lam.items():
            if g != fam:
                others = others * q ** (g.deg * n_stat(conjugate(other)))
        for r, _ in removable_cells(part):
            small = remove_cell(part, r)
            term = q ** n_stat(conjugate(small)) * cprime_coeff(part, b)
            term = term / (cprime_coeff(small, b) * (1 - q)) * pieri_psi_prime(part, small, b)
            total = total + term * others
    return total if lam.size % 2 == 0 else -total


def pieri_expansion_lemma_check(n: int) -> bool:
    """Pair both sides of the Pieri expansion of e_{n-1}(f1) e_1(f1) with every J_lam.

    The right side is a combination of the basis dual to J_lam(q, q^2) under
    the dual-variable pairing, so its pairing with J_lam is the coefficient.
    The left side is paired through the unipotent projection.
    """
    if n < 2:
        raise ValueError("pieri expansion needs n >= 2")
    target = elem("e", [n - 1, 1], F1)
    for _, lam in index_types(n, "L"):
        J = _J_dual(lam)
        lhs = pair_dual_unipotent(J, target)
        if lhs != pieri_expansion_coefficient(lam):
            return False
        # hat J really is dual to J under the dual pairing
        if inner_dual(J, J) != _J_norm(lam):
            return False
    return True


def _J_dual(lam: PartitionFn) -> SymFunc:
    from .macdonald import macdonald_J
    from .symfunc import tensor
    return tensor(*(macdonald_J(part, Binding(q**f.deg, q ** (2 * f.deg)), f)
                    for f, part in lam.items()))


def _J_norm(lam: PartitionFn) -> RatQT:
    out = ONE
    for f, part in lam.items():
        b = Binding(q**f.deg, q ** (2 * f.deg))
        out = out * c_coeff(part, b) * cprime_coeff(part, b)
    return out


# --------------------------------------------------------------------------
# permutation-character sum rule


def orbit_count_poly(d: int) -> RatQT:
    """Number of degree-d orbits on the units, as a polynomial in q."""
    from sympy import divisors, mobius
    total = ZERO
    for e in divisors(d):
        total = total + int(mobius(d // e)) * q**e
    total = total / d
    return total - 1 if d == 1 else total


def type_count_poly(mset) -> RatQT:
    by_deg = {}
    for d, lam in mset:
        by_deg.setdefault(d, []).append(lam)
    total = ONE
    for d, lams in by_deg.items():
        avail = orbit_count_poly(d)
        for i in range(len(lams)):
            total = total * (avail - i)
        counts = {}
        for lam in lams:
            counts[lam] = counts.get(lam, 0) + 1
        for m in counts.values():
            for k in range(2, m + 1):
                total = total / k
    return total


def sum_rule(mu, route: str = "a") -> RatQT:
    """sum over character types of count(q) * dim chi_{lam u lam} * phi_lam(g_mu).

    Equals |GL_2n|/|Sp_2n| on the identity coset and 0 on every other coset.
    """
    mu = Partition(mu)
    total = ZERO
    for mset, lam in index_types(mu.size, "L"):
        total = total + type_count_poly(mset) * dim_irreducible(doubled(lam)) \
            * spherical_value(lam, mu, route)
    return total


def sum_rule_expected(mu) -> RatQT:
    mu = Partition(mu)
    n = mu.size
    return gl_order(2 * n) / sp_order(n) if mu == identity_coset(n) else ZERO


__all__ = [
    "transvection", "identity_coset", "delta_specialize", "unipotent_projection",
    "pair_dual_unipotent", "identity_lemma_rhs", "value_route_A", "value_route_B",
    "value_route_C_transvection", "spherical_value", "e_split_identity",
    "pieri_expansion_coefficient", "pieri_expansion_lemma_check", "orbit_count_poly",
    "type_count_poly", "sum_rule", "sum_rule_expected", "ROUTES",
]
