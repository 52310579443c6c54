"""GL_n(q) class and character data and the two characteristic maps.

Class data are partition-valued functions on M-families (Frobenius orbits of
the multiplicative group, i.e. monic irreducibles other than x); character
data live on L-families.  Everything is exact in Q(q); numeric q only enters
through the orbit counts.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import prod

from .macdonald import macdonald_J, macdonald_P
from .partitions import Partition, arms_legs, conjugate, n_stat, partitions_of, union_double
from .ratfunc import ONE, ZERO, RatQT, eval_q, q, subst_q_q2
from .symfunc import (F1, TRIV, Binding, Family, PartitionFn, SymFunc, elem, inner_dual,
                      inner_sp, omega, omega_qt, p_elem, tensor, Q2_Q)

# --------------------------------------------------------------------------
# group orders and q-products


def psi(n: int, qv: RatQT = q) -> RatQT:
    """psi_n(q) = prod_{i=1}^n (q^i - 1)."""
    return prod((qv**i - 1 for i in range(1, n + 1)), start=ONE)


def gl_order(n: int) -> RatQT:
    return q ** (n * (n - 1) // 2) * psi(n)


def sp_order(n: int) -> RatQT:
    """|Sp_{2n}(q)| = q^{n^2} prod_{i=1}^n (q^{2i} - 1)."""
    return q ** (n * n) * psi(n, q**2)


def hook_product(lam, qv: RatQT = q) -> RatQT:
    """H_lam(q) = prod_cells (q^hook - 1)."""
    return prod((qv ** (a + l + 1) - 1 for _, a, l in arms_legs(Partition(lam))), start=ONE)


def _check_kind(pf: PartitionFn, kind: str, what: str):
    if not isinstance(pf, PartitionFn):
        raise TypeError(f"{what} must be a PartitionFn")
    bad = pf.kinds() - {kind}
    if bad:
        raise ValueError(f"{what} must live on {kind}-families")


def _check_n(pf: PartitionFn, n):
    if n is not None and pf.weight != n:
        raise ValueError(f"weight mismatch: ||.|| = {pf.weight}, expected n = {n}")


# --------------------------------------------------------------------------
# classes and characters of GL_n(q)


def a_mu(mu: PartitionFn) -> RatQT:
    """Centralizer order q^n prod_f q_f^{2n(mu_f)} prod_i prod_{j<=m_i} (1 - q_f^-j)."""
    _check_kind(mu, "M", "class data")
    out = q**mu.weight
    for fam, lam in mu.items():
        qf = q**fam.deg
        out = out * qf ** (2 * n_stat(lam))
        for m in Counter(lam).values():
            for j in range(1, m + 1):
                out = out * (1 - qf ** (-j))
    return out


def class_size(mu: PartitionFn) -> RatQT:
    return gl_order(mu.weight) / a_mu(mu)


def dim_irreducible(lam: PartitionFn) -> RatQT:
    """d_lam = psi_n(q) prod_phi q_phi^{n(lam')} / H_lam(q_phi); a polynomial."""
    _check_kind(lam, "L", "character data")
    out = psi(lam.weight)
    for fam, part in lam.items():
        qf = q**fam.deg
        out = out * qf ** n_stat(conjugate(part)) / hook_product(part, qf)
    if not out.is_polynomial():
        raise ArithmeticError(f"dimension of {lam!r} is not a polynomial: {out}")
    return out


def doubled(lam: PartitionFn) -> PartitionFn:
    """lam u lam, family by family."""
    return lam.map(union_double)


# --------------------------------------------------------------------------
# characteristic maps


def _hl(lam, tval: RatQT, fam: Family) -> SymFunc:
    return macdonald_P(lam, Binding(ZERO, tval), fam)


def ch_GL_indicator(mu: PartitionFn) -> SymFunc:
    """prod_f q_f^{-n(mu_f)} P_{mu_f}(f; q_f^-1)."""
    _check_kind(mu, "M", "class data")
    scale = ONE
    factors = []
    for fam, lam in mu.items():
        qf = q**fam.deg
        scale = scale * qf ** (-n_stat(lam))
        factors.append(_hl(lam, qf**-1, fam))
    return tensor(*factors).scale(scale)


def ch_GL_character(lam: PartitionFn) -> SymFunc:
    """prod_phi s_{lam_phi}(phi)."""
    _check_kind(lam, "L", "character data")
    return tensor(*(elem("s", part, fam) for fam, part in lam.items()))


def ch_sp_indicator(mu: PartitionFn) -> SymFunc:
    """Characteristic of the double-coset indicator: prod_f q_f^{-2n} P(f; q_f^-2)."""
    _check_kind(mu, "M", "class data")
    scale = ONE
    factors = []
    for fam, lam in mu.items():
        qf = q**fam.deg
        scale = scale * qf ** (-2 * n_stat(lam))
        factors.append(_hl(lam, qf**-2, fam))
    return tensor(*factors).scale(scale)


def ch_spherical(lam: PartitionFn, n: int | None = None) -> SymFunc:
    """(-1)^{|lam|}/psi_n(q^2) prod_phi q_phi^{-n(lam_phi')} J_{lam_phi}(phi; q_phi, q_phi^2)."""
    _check_kind(lam, "L", "character data")
    _check_n(lam, n)
    scale = RatQT((-1) ** lam.size) / psi(lam.weight, q**2)
    factors = []
    for fam, part in lam.items():
        qf = q**fam.deg
        scale = scale * qf ** (-n_stat(conjugate(part)))
        factors.append(macdonald_J(part, Binding(qf, qf**2), fam))
    return tensor(*factors).scale(scale)


def ch_DL(lam: PartitionFn) -> SymFunc:
    """Image of the basic function with combinatorial data lam: (-1)^{n - l} p_lam."""
    _check_kind(lam, "L", "character data")
    sign = -1 if (lam.weight - lam.length) % 2 else 1
    return tensor(*(p_elem(part, fam) for fam, part in lam.items())).scale(sign)


# --------------------------------------------------------------------------
# double cosets of Sp_{2n} in GL_{2n}


def double_coset_size(mu: PartitionFn) -> RatQT:
    """|Sp_{2n}(q)| |C_mu|_{q -> q^2}."""
    return sp_order(mu.weight) * subst_q_q2(class_size(mu))


def isometry_pair(F: SymFunc, G: SymFunc, n: int) -> RatQT:
    """q^{-n} |Sp_{2n}|^2 <F, G>, with the M- or L-side pairing as appropriate."""
    kinds = {f.kind for f in F.families() | G.families()}
    if kinds == {"L"}:
        pairing = inner_dual(F, G)
    elif kinds <= {"M"}:
        pairing = inner_sp(F, G)
    else:
        raise ValueError("isometry_pair needs both arguments on one side (M or L)")
    return q ** (-n) * sp_order(n) ** 2 * pairing


def mixed_product(F: SymFunc, G: SymFunc) -> SymFunc:
    """Image of the induction product: F * omega(omega_{q^2,q} G)."""
    return F * omega(omega_qt(G, Q2_Q))


# --------------------------------------------------------------------------
# orbit counting and enumeration of index types


def count_orbits_M(d: int, q0: int) -> int:
    """Degree-d Frobenius orbits on the units of the algebraic closure of F_q0.

    Necklace count of monic irreducibles of degree d, minus the orbit of 0
    (the polynomial x) when d = 1.
    """
    if d < 1 or q0 < 2:
        raise ValueError("need d >= 1 and q0 >= 2")
    from sympy import divisors, mobius
    total = sum(mobius(d // e) * q0**e for e in divisors(d)) // d
    return int(total) - (1 if d == 1 else 0)


count_orbits_L = count_orbits_M  # L is the character group of M; orbit counts agree


def _multisets_of_weight(n: int):
    """Multisets of (deg, nonempty partition) with sum deg*|lam| = n, canonically sorted."""
    atoms = [(d, lam) for d in range(1, n + 1) for k in range(1, n // d + 1)
             for lam in partitions_of(k)]
    atoms.sort(key=lambda a: (a[0], -a[1].size, tuple(-x for x in a[1])))
    out = []

    def rec(start, left, cur):
        if left == 0:
            out.append(tuple(cur))
            return
        for i in range(start, len(atoms)):
            d, lam = atoms[i]
            if d * lam.size <= left:
                rec(i, left - d * lam.size, cur + [atoms[i]])

    rec(0, n, [])
    return out


def index_types(n: int, kind: str = "M"):
    """Representative PartitionFns, one per type (multiset of (degree, partition)).

    Families are generic: ids "{kind}{d}_{k}".  Each type stands for all
    PartitionFns obtained by choosing distinct actual orbits.
    """
    reps = []
    for mset in _multisets_of_weight(n):
        used = Counter()
        mapping = {}
        for d, lam in mset:
            used[d] += 1
            mapping[Family(f"{kind.lower()}{d}_{used[d]}", kind, d)] = lam
        reps.append((mset, PartitionFn(mapping)))
    return reps


def type_count(mset, q0: int, kind: str = "M") -> int:
    """Number of PartitionFns of the given type at q = q0."""
    by_deg = {}
    for d, lam in mset:
        by_deg.setdefault(d, []).append(lam)
    total = 1
    for d, lams in by_deg.items():
        avail = count_orbits_M(d, q0)
        k = len(lams)
        if k > avail:
            return 0
        ways = 1
        for i in range(k):
            ways *= avail - i
        for m in Counter(lams).values():
            ways //= prod(range(1, m + 1))
        total *= ways
    return total


def unipotent(mu) -> PartitionFn:
    """The class (or double coset) supported on f1 with partition mu."""
    return PartitionFn({F1: Partition(mu)})


def trivial_character(n: int) -> PartitionFn:
    return PartitionFn({TRIV: Partition([1] * n)})


def evaluate(value: RatQT, q0) -> Fraction:
    return eval_q(value, q0)


__all__ = [
    "psi", "gl_order", "sp_order", "hook_product", "a_mu", "class_size", "dim_irreducible",
    "doubled", "ch_GL_indicator", "ch_GL_character", "ch_sp_indicator", "ch_spherical",
    "ch_DL", "double_coset_size", "isometry_pair", "mixed_product", "count_orbits_M",
    "count_orbits_L", "index_types", "type_count", "unipotent", "trivial_character",
    "evaluate",
]
