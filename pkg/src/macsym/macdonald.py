"""Macdonald, Hall-Littlewood and Green polynomial data.

P_lambda(q, t) is produced by Gram-Schmidt on the monomial basis, taken in a
linear extension of dominance, against the (q, t)-deformed power-sum pairing.
All work happens in power-sum coordinates where that pairing is diagonal.
A table is built once per (degree, binding) and shared through the cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cache
from .partitions import (Partition, arms_legs, conjugate, n_stat, partitions_of,
                         vertical_strip_cells, z_coeff)
from .ratfunc import ONE, ZERO, RatQT, as_ratqt, t
from .symfunc import (FORMAL, HL_TINV, M, P, Basis, Binding, SymFunc, X, Family,
                      m_in_p, p_in_m, to_p)


def lex_increasing(n: int) -> list:
    """Linear extension of dominance, smallest first."""
    return list(reversed(partitions_of(n)))


def reverse_conjugate_extension(n: int) -> list:
    """A second linear extension: conjugates of the reverse-lex list.

    mu <= lam in dominance iff lam' <= mu', so ordering by decreasing
    lex order of the conjugate is again compatible with dominance; it
    differs from lex order from degree 6 on ([3,1,1,1] vs [2,2,2]).
    """
    return [conjugate(lam) for lam in partitions_of(n)]


def _pweight(binding: Binding, rho: Partition) -> RatQT:
    w = RatQT(z_coeff(rho))
    for part in rho:
        w = w * binding.weight(part)
    return w


@dataclass(frozen=True)
class MacdonaldTable:
    degree: int
    binding: Binding
    P_in_m: dict      # lam -> {mu: RatQT}, dominance-unitriangular
    P_in_p: dict      # lam -> {rho: RatQT}
    norms: dict       # lam -> <P_lam, P_lam>

    def to_json(self) -> dict:
        def enc(mat):
            return {_pkey(a): {_pkey(b): c.to_json() for b, c in row.items()} for a, row in mat.items()}
        return {"P_in_m": enc(self.P_in_m), "P_in_p": enc(self.P_in_p),
                "norms": {_pkey(a): c.to_json() for a, c in self.norms.items()}}

    @classmethod
    def from_json(cls, degree, binding, obj) -> MacdonaldTable:
        def dec(mat):
            return {_unpkey(a): {_unpkey(b): RatQT.from_json(c) for b, c in row.items()}
                    for a, row in mat.items()}
        return cls(degree, binding, dec(obj["P_in_m"]), dec(obj["P_in_p"]),
                   {_unpkey(a): RatQT.from_json(c) for a, c in obj["norms"].items()})


def _pkey(lam) -> str:
    return ",".join(map(str, lam))


def _unpkey(s: str) -> Partition:
    return Partition(int(x) for x in s.split(",")) if s else Partition()


def gram_schmidt(n: int, binding: Binding, order=None) -> MacdonaldTable:
    """Orthogonalize m_lam in the given linear extension (default lex increasing)."""
    order = list(order) if order is not None else lex_increasing(n)
    mp = m_in_p(n)
    rhos = partitions_of(n)
    weights = {rho: _pweight(binding, rho) for rho in rhos}
    done = []   # (lam, p-coords, m-coords, norm)
    P_in_m, P_in_p, norms = {}, {}, {}
    for lam in order:
        pv = {rho: RatQT(c) for rho, c in mp[lam].items()}
        mv = {lam: ONE}
        m_lam = mp[lam]
        for mu, qv, qm, nrm in done:
            ip = ZERO
            for rho, c in m_lam.items():
                v = qv.get(rho)
                if v is not None:
                    ip = ip + v * weights[rho] * c
            if not ip:
                continue
            coef = ip / nrm
            for rho, v in qv.items():
                _sub_into(pv, rho, coef * v)
            for nu, v in qm.items():
                _sub_into(mv, nu, coef * v)
        nrm = ZERO
        for rho, v in pv.items():
            nrm = nrm + v * v * weights[rho]
        if not nrm:
            raise ArithmeticError(f"degenerate pairing at binding {binding} for {list(lam)}")
        done.append((lam, pv, mv, nrm))
        P_in_m[lam], P_in_p[lam], norms[lam] = mv, pv, nrm
    return MacdonaldTable(n, binding, P_in_m, P_in_p, norms)


def _sub_into(vec, key, val):
    cur = vec.get(key)
    new = -val if cur is None else cur - val
    if new:
        vec[key] = new
    else:
        vec.pop(key, None)


def macdonald_table(n: int, binding: Binding = FORMAL) -> MacdonaldTable:
    return cache.active().get_or_build(
        "macdonald", n, binding.key(),
        lambda: gram_schmidt(n, binding),
        MacdonaldTable.to_json,
        lambda obj: MacdonaldTable.from_json(n, binding, obj))


def specialize_table(table: MacdonaldTable, binding: Binding) -> MacdonaldTable:
    """Substitute a binding into a formal (q, t) table, entry by entry."""
    def sub(mat):
        return {a: {b: v for b, c in row.items() if (v := binding.specialize(c))}
                for a, row in mat.items()}
    return MacdonaldTable(table.degree, binding, sub(table.P_in_m), sub(table.P_in_p),
                          {a: binding.specialize(c) for a, c in table.norms.items()})


# --------------------------------------------------------------------------
# cell products


def c_coeff(lam, binding: Binding = FORMAL) -> RatQT:
    """prod_s (1 - q^a t^(l+1))."""
    out = ONE
    for _, a, l in arms_legs(Partition(lam)):
        out = out * (1 - binding.q**a * binding.t ** (l + 1))
    return out


def cprime_coeff(lam, binding: Binding = FORMAL) -> RatQT:
    """prod_s (1 - q^(a+1) t^l)."""
    out = ONE
    for _, a, l in arms_legs(Partition(lam)):
        out = out * (1 - binding.q ** (a + 1) * binding.t**l)
    return out


def _scale(name: str, lam, binding: Binding) -> RatQT:
    if name == "P":
        return ONE
    if name == "Q":
        return c_coeff(lam, binding) / cprime_coeff(lam, binding)
    if name == "J":
        return c_coeff(lam, binding)
    raise ValueError(f"not a Macdonald basis: {name}")


# --------------------------------------------------------------------------
# basis transitions used by symfunc.to_basis


def macdonald_to_p(name: str, n: int, binding: Binding) -> dict:
    table = macdonald_table(n, binding)
    out = {}
    for lam, row in table.P_in_p.items():
        s = _scale(name, lam, binding)
        out[lam] = row if s == ONE else {rho: c * s for rho, c in row.items()}
    return out


def macdonald_from_p(name: str, n: int, binding: Binding) -> dict:
    """p_rho = sum_lam <p_rho, Q_lam> P_lam (P and Q are dual)."""
    table = macdonald_table(n, binding)
    out = {rho: {} for rho in partitions_of(n)}
    for lam, row in table.P_in_p.items():
        # coefficient of P_lam in p_rho is P_lam[rho] w_rho / <P_lam, P_lam>
        s = table.norms[lam] * _scale(name, lam, binding)
        for rho, c in row.items():
            out[rho][lam] = c * _pweight(binding, rho) / s
    return out


# --------------------------------------------------------------------------
# elements


def _element(name: str, lam, binding: Binding, family: Family) -> SymFunc:
    lam = Partition(lam)
    if not lam:
        return SymFunc.one()
    s = _scale(name, lam, binding)
    row = macdonald_table(lam.size, binding).P_in_m[lam]
    return SymFunc._raw({((family, M, mu),): c * s for mu, c in row.items()})


def macdonald_P(lam, binding: Binding = FORMAL, family: Family = X) -> SymFunc:
    """P_lam in the monomial basis."""
    return _element("P", lam, binding, family)


def macdonald_Q(lam, binding: Binding = FORMAL, family: Family = X) -> SymFunc:
    return _element("Q", lam, binding, family)


def macdonald_J(lam, binding: Binding = FORMAL, family: Family = X) -> SymFunc:
    return _element("J", lam, binding, family)


def macdonald_basis(name: str, binding: Binding = FORMAL) -> Basis:
    return Basis(name, binding)


def hall_littlewood_P(lam, tval: RatQT = t, family: Family = X) -> SymFunc:
    """P_lam(x; t) = P_lam(x; 0, t)."""
    return macdonald_P(lam, Binding(ZERO, as_ratqt(tval)), family)


# --------------------------------------------------------------------------
# Green polynomials


@dataclass(frozen=True)
class GreenTable:
    degree: int
    Q: dict   # rho -> {mu: RatQT in t}

    def value(self, rho, mu) -> RatQT:
        return self.Q[Partition(rho)].get(Partition(mu), ZERO)


def green_polynomials(n: int) -> GreenTable:
    """Q_rho^mu(t) from p_rho = sum_mu Q_rho^mu(t) t^(-n(mu)) P_mu(x; t^-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    inv = macdonald_from_p("P", n, HL_TINV)
    return GreenTable(n, {rho: {mu: c * t ** n_stat(mu) for mu, c in row.items()}
                          for rho, row in inv.items()})


def green_value(rho, mu) -> RatQT:
    rho = Partition(rho)
    return green_polynomials(rho.size).value(rho, mu)


# --------------------------------------------------------------------------
# Pieri coefficients, skew functions


def _b(lam, cell, conj, binding):
    r, c = cell
    a = lam[r - 1] - c
    leg = conj[c - 1] - r
    return (1 - binding.q**a * binding.t ** (leg + 1)) / (1 - binding.q ** (a + 1) * binding.t**leg)


def pieri_psi_prime(lam, mu, binding: Binding = FORMAL) -> RatQT:
    """Coefficient of P_lam in P_mu e_r for a vertical strip lam/mu."""
    lam, mu = Partition(lam), Partition(mu)
    strip = vertical_strip_cells(lam, mu)
    if strip is None:
        raise ValueError(f"{list(lam)}/{list(mu)} is not a vertical strip")
    cols = {c for _, c in strip}
    rows = {r for r, _ in strip}
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    out = ONE
    for r, c in mu.cells():
        # cells of C \ R all lie in mu: a strip cell's row is in R
        if c in cols and r not in rows:
            out = out * _b(lam, (r, c), lam_c, binding) / _b(mu, (r, c), mu_c, binding)
    return out


def skew_P(lam, mu, binding: Binding = FORMAL, family: Family = X) -> SymFunc:
    """P_{lam/mu} in the power-sum basis, from <P_{lam/mu}, f> = <P_lam, Q_mu f>.

    With f = p_sigma and both sides expanded in p:
        [p_sigma] P_{lam/mu} = sum_tau [p_tau]Q_mu [p_{tau u sigma}]P_lam
                               * z_{tau u sigma} / z_sigma * prod_{tau} w_i
    where w_i = (q^i - 1)/(t^i - 1) at the binding.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return SymFunc()
    if lam == mu:
        return SymFunc.one()
    k = lam.size - mu.size
    P_lam = macdonald_table(lam.size, binding).P_in_p[lam]
    if mu:
        Q_mu = macdonald_to_p("Q", mu.size, binding)[mu]
    else:
        Q_mu = {Partition(): ONE}
    out = {}
    for sigma in partitions_of(k):
        acc = ZERO
        for tau, qc in Q_mu.items():
            union = Partition.from_multiset(tau + sigma)
            pc = P_lam.get(union)
            if pc is None:
                continue
            w = RatQT(Fraction(z_coeff(union), z_coeff(sigma)))
            for part in tau:
                w = w * binding.weight(part)
            acc = acc + qc * pc * w
        if acc:
            out[((family, P, sigma),)] = acc
    return SymFunc._raw(out)


def schur_expansion_C(lam, mu, nu, binding: Binding = FORMAL) -> RatQT:
    """C^nu_{lam/mu} = <P_{lam/mu}, s_nu> under the Hall pairing."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return ZERO
    skew = skew_P(lam, mu, binding)
    if not nu:
        return skew.coefficient()
    from .symfunc import s_in_p
    s_row = s_in_p(nu.size)[nu]
    total = ZERO
    for key, c in skew.terms.items():
        (_, _, sigma), = key
        sc = s_row.get(sigma)
        if sc:
            total = total + c * sc * z_coeff(sigma)
    return total


def d_coeff(lam, rho, binding: Binding | None = None) -> RatQT:
    """d_lam(rho) = z_rho [p_rho] P_lam at binding (q^2, q) by default."""
    from .symfunc import Q2_Q
    binding = binding or Q2_Q
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("d_coeff needs |lam| = |rho|")
    c = macdonald_table(lam.size, binding).P_in_p[lam].get(rho, ZERO)
    return c * z_coeff(rho)


def macdonald_in_m(lam, binding: Binding = FORMAL) -> dict:
    return dict(macdonald_table(Partition(lam).size, binding).P_in_m[Partition(lam)])


def p_to_m(vec: dict, n: int) -> dict:
    """Re-express a p-coordinate vector in the monomial basis."""
    pm = p_in_m(n)
    out = {}
    for rho, c in vec.items():
        for mu, d in pm[rho].items():
            v = out.get(mu, ZERO) + c * d
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
    return out


__all__ = [
    "MacdonaldTable", "gram_schmidt", "macdonald_table", "specialize_table",
    "lex_increasing", "reverse_conjugate_extension", "c_coeff", "cprime_coeff",
    "macdonald_P", "macdonald_Q", "macdonald_J", "macdonald_basis", "hall_littlewood_P",
    "GreenTable", "green_polynomials", "green_value", "pieri_psi_prime", "skew_P",
    "schur_expansion_C", "d_coeff", "macdonald_to_p", "macdonald_from_p", "to_p",
]
