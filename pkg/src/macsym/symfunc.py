"""Symmetric functions in several variable families over Q(q, t).

An element is a finite sum of coefficient * (product of basis elements), one
factor per variable family.  The power sums are the pivot basis: products,
inner products and the involutions all act on p-expansions, and every other
basis is reached through an exact transition matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, partitions_of, sign, z_coeff
from .ratfunc import ONE, ZERO, RatQT, as_ratqt, q, t

# --------------------------------------------------------------------------
# families, bindings, bases


@dataclass(frozen=True, order=True)
class Family:
    """A variable family: a Frobenius orbit of M (kind "M") or of L (kind "L")."""

    id: str
    kind: str = "M"
    deg: int = 1

    def __post_init__(self):
        if self.kind not in ("M", "L"):
            raise ValueError(f"family kind must be 'M' or 'L', got {self.kind!r}")
        if self.deg < 1:
            raise ValueError("family degree must be positive")
        if self.id == "f1" and (self.kind, self.deg) != ("M", 1):
            raise ValueError("f1 is reserved for the degree-1 M-orbit of x - 1")

    @property
    def is_f1(self) -> bool:
        return self.id == "f1"

    def q_family(self) -> RatQT:
        return q**self.deg

    def to_json(self) -> dict:
        return {"kind": self.kind, "deg": self.deg, "id": self.id}

    @classmethod
    def from_json(cls, obj) -> Family:
        return cls(obj["id"], obj.get("kind", "M"), obj.get("deg", 1))

    def __str__(self):
        return self.id


F1 = Family("f1", "M", 1)
TRIV = Family("triv", "L", 1)
X = Family("x", "M", 1)  # default alphabet for single-family work


@dataclass(frozen=True)
class Binding:
    """Values substituted for the Macdonald parameters (q, t)."""

    q: RatQT
    t: RatQT
    name: str = field(default="", compare=False)

    def key(self) -> str:
        return f"{self.q.to_json()}|{self.t.to_json()}"

    def label(self) -> str:
        return self.name or f"{self.q},{self.t}"

    def for_degree(self, d: int) -> Binding:
        """The same binding read in q_f = q^d, t_f = t^d."""
        if d == 1:
            return self
        def up(r):
            return r.subst_monomial((d, 0), (0, d))
        return Binding(up(self.q), up(self.t), f"{self.label()}@d{d}")

    def swapped(self) -> Binding:
        return Binding(self.t, self.q, f"swap({self.label()})")

    def weight(self, n: int) -> RatQT:
        """(q^n - 1)/(t^n - 1) at this binding."""
        return _binding_weight(self, n)

    def specialize(self, r: RatQT) -> RatQT:
        """Substitute this binding into a formal (q, t) expression."""
        return r.subst(self.q, self.t)

    def __str__(self):
        return self.label()


@lru_cache(maxsize=None)
def _binding_weight(b: Binding, n: int) -> RatQT:
    return (b.q**n - 1) / (b.t**n - 1)


FORMAL = Binding(q, t, "q,t")
SWAPPED = Binding(t, q, "t,q")
HALL = Binding(q, q, "q,q")
Q_Q2 = Binding(q, q**2, "q,q2")
Q2_Q = Binding(q**2, q, "q2,q")
HL = Binding(ZERO, t, "0,t")
HL_TINV = Binding(ZERO, t**-1, "0,1/t")


def hl_binding(tval: RatQT, name: str = "") -> Binding:
    return Binding(ZERO, tval, name or f"0,{tval}")


CLASSICAL = ("m", "e", "h", "p", "s")
MACDONALD = ("P", "Q", "J")


@dataclass(frozen=True)
class Basis:
    name: str
    binding: Binding | None = None

    def __post_init__(self):
        if self.name not in CLASSICAL + MACDONALD:
            raise ValueError(f"unknown basis {self.name!r}")
        if (self.name in MACDONALD) != (self.binding is not None):
            raise ValueError(f"basis {self.name} binding mismatch")

    def __str__(self):
        return self.name if self.binding is None else f"{self.name}[{self.binding}]"


M, E, H, P, S = (Basis(n) for n in CLASSICAL)


class PartitionFn:
    """Finitely supported map family -> nonempty partition.

    Indexes classes (M-families), characters and spherical functions
    (L-families) and double cosets.
    """

    __slots__ = ("_items",)

    def __init__(self, mapping=None):
        items = {}
        for fam, lam in dict(mapping or {}).items():
            lam = Partition(lam)
            if lam:
                items[fam] = lam
        self._items = tuple(sorted(items.items(), key=lambda kv: (kv[0].id, kv[0].kind, kv[0].deg)))

    def items(self):
        return self._items

    def families(self):
        return [f for f, _ in self._items]

    def __getitem__(self, fam):
        for f, lam in self._items:
            if f == fam:
                return lam
        return Partition()

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        return isinstance(other, PartitionFn) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    @property
    def weight(self) -> int:
        """||mu|| = sum_f deg(f) |mu(f)|."""
        return sum(f.deg * lam.size for f, lam in self._items)

    @property
    def size(self) -> int:
        """|lam| = sum_f |lam(f)| (no degree weighting)."""
        return sum(lam.size for _, lam in self._items)

    @property
    def length(self) -> int:
        return sum(len(lam) for _, lam in self._items)

    def kinds(self) -> set:
        return {f.kind for f, _ in self._items}

    def map(self, fn) -> PartitionFn:
        return PartitionFn({f: fn(lam) for f, lam in self._items})

    def to_json(self) -> dict:
        out = {}
        for f, lam in self._items:
            out[f.id] = list(lam) if f.deg == 1 else {"deg": f.deg, "partition": list(lam)}
        return out

    @classmethod
    def from_json(cls, obj, kind: str) -> PartitionFn:
        """Parse {"id": [..]} or {"id": {"deg": d, "partition": [..]}}.

        "triv" is the degree-1 L-family of the trivial character and "f1"
        the degree-1 M-family of x - 1; other ids take the given kind.
        """
        if not isinstance(obj, dict):
            raise ValueError("a partition-valued function is a JSON object keyed by family id")
        mapping = {}
        for fid, val in obj.items():
            if isinstance(val, dict):
                deg, parts = int(val.get("deg", 1)), val.get("partition", [])
            else:
                deg, parts = 1, val
            fkind = "L" if fid == "triv" else "M" if fid == "f1" else kind
            fam = Family(fid, fkind, deg)
            if fid == "triv" and deg != 1:
                raise ValueError("triv is a degree-1 family")
            mapping[fam] = Partition(parts)
        return cls(mapping)

    def __repr__(self):
        inner = ", ".join(f"{f.id}{'' if f.deg == 1 else f'@{f.deg}'}: {list(lam)}" for f, lam in self._items)
        return f"PartitionFn({{{inner}}})"


# --------------------------------------------------------------------------
# the element type


class SymFunc:
    """Immutable finite sum  coeff * prod_f b_f(lambda_f)(f).

    Keys are tuples of (Family, Basis, Partition) sorted by family; values
    are nonzero RatQT coefficients.  The empty key is the unit.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for key, c in (terms or {}).items():
            c = as_ratqt(c)
            if c:
                out[_canon_key(key)] = out.get(_canon_key(key), ZERO) + c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def _raw(cls, terms):
        f = cls.__new__(cls)
        f.terms = terms
        return f

    @classmethod
    def one(cls) -> SymFunc:
        return cls._raw({(): ONE})

    @classmethod
    def scalar(cls, c) -> SymFunc:
        c = as_ratqt(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def basis_element(cls, basis: Basis, lam, family: Family = X) -> SymFunc:
        lam = Partition(lam)
        if not lam:
            return cls.one()
        return cls._raw({((family, basis, lam),): ONE})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatQT)):
            other = SymFunc.scalar(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.terms == other.terms:
            return True
        return to_p(self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(to_p(self).terms.items()))

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.scalar(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> SymFunc:
        c = as_ratqt(c)
        if not c:
            return SymFunc()
        return SymFunc._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coeffs(self, fn) -> SymFunc:
        out = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return SymFunc._raw(out)

    def families(self) -> set:
        return {f for key in self.terms for f, _, _ in key}

    def degrees(self) -> set:
        """Graded degrees sum_f deg(f) |lambda_f| of the terms."""
        return {sum(f.deg * lam.size for f, _, lam in key) for key in self.terms}

    def coefficient(self, *factors) -> RatQT:
        return self.terms.get(_canon_key(factors), ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            mono = "*".join(f"{b.name}_{{{','.join(map(str, lam))}}}({f})" for f, b, lam in key)
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymFunc({self})"

    def to_json(self) -> dict:
        return {"terms": [
            {"coeff": c.to_json(),
             "factors": [{"family": f.to_json(), "basis": _basis_json(b), "partition": list(lam)}
                         for f, b, lam in key]}
            for key, c in self.items()]}

    @classmethod
    def from_json(cls, obj) -> SymFunc:
        terms = {}
        for term in obj["terms"]:
            key = tuple((Family.from_json(fa["family"]), _basis_from_json(fa["basis"]),
                         Partition(fa["partition"])) for fa in term["factors"])
            terms[key] = RatQT.from_json(term["coeff"])
        return cls(terms)


def _basis_json(b: Basis):
    if b.binding is None:
        return b.name
    return {"name": b.name, "q": b.binding.q.to_json(), "t": b.binding.t.to_json()}


def _basis_from_json(obj) -> Basis:
    if isinstance(obj, str):
        return Basis(obj)
    return Basis(obj["name"], Binding(RatQT.from_json(obj["q"]), RatQT.from_json(obj["t"])))


def _sort_key(key):
    return tuple((f.id, f.kind, f.deg, b.name, tuple(-x for x in lam)) for f, b, lam in key)


def _canon_key(key):
    key = tuple((f, b, Partition(lam)) for f, b, lam in key if len(lam))
    fams = [f for f, _, _ in key]
    if len(set(fams)) != len(fams):
        raise ValueError("at most one factor per family in a term")
    return tuple(sorted(key, key=lambda fac: (fac[0].id, fac[0].kind, fac[0].deg)))


# --------------------------------------------------------------------------
# classical transition matrices (exact rationals); single alphabet


def _dict_add(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _p_product(a: dict, b: dict) -> dict:
    out = {}
    for ra, ca in a.items():
        for rb, cb in b.items():
            _dict_add(out, Partition.from_multiset(ra + rb), ca * cb)
    return out


@lru_cache(maxsize=None)
def _count_assignments(rho: Partition, mu: Partition) -> int:
    """Number of maps parts(rho) -> rows(mu) whose fibres sum to the rows."""
    mu = tuple(mu)

    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(rho):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= rho[i]:
                nxt = remaining[:j] + (r - rho[i],) + remaining[j + 1:]
                total += rec(i + 1, nxt)
        return total

    return rec(0, mu)


@lru_cache(maxsize=None)
def p_in_m(n: int) -> dict:
    """p_rho = sum_mu R[rho][mu] m_mu, integer entries."""
    parts = partitions_of(n)
    return {rho: {mu: c for mu in parts if (c := _count_assignments(rho, mu))} for rho in parts}


@lru_cache(maxsize=None)
def m_in_p(n: int) -> dict:
    return _invert(p_in_m(n), partitions_of(n))


@lru_cache(maxsize=None)
def h_cycle_index(n: int) -> dict:
    if n == 0:
        return {Partition(): Fraction(1)}
    return {rho: Fraction(1, z_coeff(rho)) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def e_cycle_index(n: int) -> dict:
    if n == 0:
        return {Partition(): Fraction(1)}
    return {rho: Fraction(sign(rho), z_coeff(rho)) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def newton_h(n: int) -> dict:
    """h_n in p via n h_n = sum_i p_i h_{n-i}."""
    if n == 0:
        return {Partition(): Fraction(1)}
    acc = {}
    for i in range(1, n + 1):
        for rho, c in newton_h(n - i).items():
            _dict_add(acc, Partition.from_multiset(rho + (i,)), c / n)
    return acc


@lru_cache(maxsize=None)
def newton_e(n: int) -> dict:
    """e_n in p via n e_n = sum_i (-1)^{i-1} p_i e_{n-i}."""
    if n == 0:
        return {Partition(): Fraction(1)}
    acc = {}
    for i in range(1, n + 1):
        s = 1 if i % 2 else -1
        for rho, c in newton_e(n - i).items():
            _dict_add(acc, Partition.from_multiset(rho + (i,)), s * c / n)
    return acc


def _multiplicative_in_p(single, lam) -> dict:
    out = {Partition(): Fraction(1)}
    for part in lam:
        out = _p_product(out, single(part))
    return out


@lru_cache(maxsize=None)
def h_in_p(n: int) -> dict:
    return {lam: _multiplicative_in_p(newton_h, lam) for lam in partitions_of(n)}


@lru_cache(maxsize=None)
def e_in_p(n: int) -> dict:
    return {lam: _multiplicative_in_p(newton_e, lam) for lam in partitions_of(n)}


def jacobi_trudi_h(lam) -> dict:
    """s_lam = det(h_{lam_i - i + j}) as {h-partition: integer}."""
    lam = tuple(lam)
    ell = len(lam)
    out = {}

    def rec(i, used, sgn, parts):
        if i == ell:
            _dict_add(out, Partition.from_multiset([p for p in parts if p]), sgn)
            return
        for j in range(ell):
            if j in used:
                continue
            idx = lam[i] - i + j
            if idx < 0:
                continue
            inversions = sum(1 for u in used if u > j)
            rec(i + 1, used | {j}, -sgn if inversions % 2 else sgn, parts + [idx])

    rec(0, frozenset(), 1, [])
    return out


@lru_cache(maxsize=None)
def s_in_p(n: int) -> dict:
    hp = h_in_p(n)
    out = {}
    for lam in partitions_of(n):
        acc = {}
        for nu, c in jacobi_trudi_h(lam).items():
            for rho, d in hp[nu].items():
                _dict_add(acc, rho, c * d)
        out[lam] = acc
    return out


@lru_cache(maxsize=None)
def p_in_s(n: int) -> dict:
    return _invert(s_in_p(n), partitions_of(n))


@lru_cache(maxsize=None)
def p_in_e(n: int) -> dict:
    return _invert(e_in_p(n), partitions_of(n))


@lru_cache(maxsize=None)
def p_in_h(n: int) -> dict:
    return _invert(h_in_p(n), partitions_of(n))


def _invert(rows: dict, index) -> dict:
    """Invert a transition {a: {b: c}} (a = sum_b c b) to {b: {a: c}} with Fractions."""
    index = list(index)
    pos = {k: i for i, k in enumerate(index)}
    n = len(index)
    mat = [[Fraction(0)] * n + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for a, row in rows.items():
        for b, c in row.items():
            mat[pos[a]][pos[b]] = Fraction(c)
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    out = {}
    for i, b in enumerate(index):
        out[b] = {index[j]: mat[i][n + j] for j in range(n) if mat[i][n + j]}
    return out


def classical_to_p(name: str, n: int) -> dict:
    if name == "p":
        return {lam: {lam: Fraction(1)} for lam in partitions_of(n)}
    if name == "m":
        return m_in_p(n)
    if name == "e":
        return e_in_p(n)
    if name == "h":
        return h_in_p(n)
    if name == "s":
        return s_in_p(n)
    raise ValueError(name)


def classical_from_p(name: str, n: int) -> dict:
    if name == "p":
        return {lam: {lam: Fraction(1)} for lam in partitions_of(n)}
    if name == "m":
        return p_in_m(n)
    if name == "e":
        return p_in_e(n)
    if name == "h":
        return p_in_h(n)
    if name == "s":
        return p_in_s(n)
    raise ValueError(name)


def _basis_to_p(basis: Basis, n: int) -> dict:
    if basis.binding is None:
        return classical_to_p(basis.name, n)
    from . import macdonald
    return macdonald.macdonald_to_p(basis.name, n, basis.binding)


def _basis_from_p(basis: Basis, n: int) -> dict:
    if basis.binding is None:
        return classical_from_p(basis.name, n)
    from . import macdonald
    return macdonald.macdonald_from_p(basis.name, n, basis.binding)


# --------------------------------------------------------------------------
# conversions


def _expand_factors(factor_maps, coeff, out):
    """Multiply out per-family expansions {partition: c} into out (p-keys)."""
    acc = {(): coeff}
    for fam, basis, mp in factor_maps:
        nxt = {}
        for key, c in acc.items():
            for lam, d in mp.items():
                k = key + ((fam, basis, lam),) if lam else key
                v = c * d
                if k in nxt:
                    nxt[k] = nxt[k] + v
                else:
                    nxt[k] = v
        acc = nxt
    for k, c in acc.items():
        if c:
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)


def to_p(F: SymFunc) -> SymFunc:
    """Expand every factor in the power-sum basis."""
    if all(b is P for key in F.terms for _, b, _ in key):
        return F
    out = {}
    for key, c in F.terms.items():
        maps = []
        for fam, basis, lam in key:
            if basis is P or basis == P:
                maps.append((fam, P, {lam: 1}))
            else:
                maps.append((fam, P, _basis_to_p(basis, lam.size)[lam]))
        _expand_factors(maps, c, out)
    return SymFunc._raw(out)


def to_basis(F: SymFunc, target: Basis, families=None) -> SymFunc:
    """Express F in the target basis on every family (or only on `families`)."""
    Fp = to_p(F)
    if target == P:
        return Fp
    out = {}
    for key, c in Fp.terms.items():
        maps = []
        for fam, basis, lam in key:
            if families is not None and fam not in families:
                maps.append((fam, basis, {lam: 1}))
            else:
                maps.append((fam, target, _basis_from_p(target, lam.size)[lam]))
        _expand_factors(maps, c, out)
    return SymFunc._raw(out)


def multiply(F: SymFunc, G: SymFunc) -> SymFunc:
    """Graded product; families multiply independently."""
    Fp, Gp = to_p(F), to_p(G)
    out = {}
    for ka, ca in Fp.terms.items():
        da = {f: lam for f, _, lam in ka}
        for kb, cb in Gp.terms.items():
            merged = dict(da)
            for f, _, lam in kb:
                merged[f] = Partition.from_multiset(merged[f] + lam) if f in merged else lam
            key = _canon_key(tuple((f, P, lam) for f, lam in merged.items()))
            v = out.get(key, ZERO) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SymFunc._raw(out)


def tensor(*factors: SymFunc) -> SymFunc:
    """Product of elements on pairwise disjoint families, bases untouched."""
    out = {(): ONE}
    seen = set()
    for F in factors:
        fams = F.families()
        if fams & seen:
            raise ValueError("tensor needs disjoint families; use multiply")
        seen |= fams
        nxt = {}
        for ka, ca in out.items():
            for kb, cb in F.terms.items():
                key = _canon_key(ka + kb)
                nxt[key] = nxt.get(key, ZERO) + ca * cb
        out = {k: c for k, c in nxt.items() if c}
    return SymFunc._raw(out)


def p_elem(lam, family: Family = X) -> SymFunc:
    return SymFunc.basis_element(P, lam, family)


def elem(name: str, lam, family: Family = X) -> SymFunc:
    return SymFunc.basis_element(Basis(name), lam, family)


# --------------------------------------------------------------------------
# inner products


def _pair(F: SymFunc, G: SymFunc, weight) -> RatQT:
    Fp, Gp = to_p(F), to_p(G)
    if len(Fp.terms) > len(Gp.terms):
        Fp, Gp = Gp, Fp
    total = ZERO
    for key, c in Fp.terms.items():
        d = Gp.terms.get(key)
        if d is None:
            continue
        w = ONE
        for fam, _, lam in key:
            w = w * weight(fam, lam)
        total = total + c * d * w
    return total


def _single_family(F: SymFunc, G: SymFunc):
    fams = F.families() | G.families()
    if len(fams) > 1:
        raise ValueError("mixed families: inner_qt needs a single common family")


def inner_qt(F: SymFunc, G: SymFunc, binding: Binding = FORMAL) -> RatQT:
    """<p_l, p_m>_{q,t} = delta z_l prod (q^{l_i} - 1)/(t^{l_i} - 1)."""
    _single_family(F, G)

    def weight(fam, lam):
        w = RatQT(z_coeff(lam))
        for part in lam:
            w = w * binding.weight(part)
        return w

    return _pair(F, G, weight)


def inner_hall(F: SymFunc, G: SymFunc) -> RatQT:
    """The Hall inner product <p_l, p_m> = delta z_l, family by family."""
    return _pair(F, G, lambda fam, lam: RatQT(z_coeff(lam)))


@lru_cache(maxsize=None)
def _sp_weight(d: int, lam: Partition) -> RatQT:
    w = RatQT(z_coeff(lam))
    for part in lam:
        w = w / (q ** (2 * d * part) - 1)
    return w


@lru_cache(maxsize=None)
def _gl_weight(d: int, lam: Partition) -> RatQT:
    w = RatQT(z_coeff(lam))
    for part in lam:
        w = w / (q ** (d * part) - 1)
    return w


@lru_cache(maxsize=None)
def _dual_weight(d: int, lam: Partition) -> RatQT:
    w = RatQT(z_coeff(lam))
    for part in lam:
        w = w * (q ** (d * part) - 1) / (q ** (2 * d * part) - 1)
    return w


def _require_kind(F: SymFunc, kind: str, msg: str):
    for fam in F.families():
        if fam.kind != kind:
            raise ValueError(msg)


def inner_sp(F: SymFunc, G: SymFunc) -> RatQT:
    """Pairing on M-families with weight z_mu prod 1/(q_f^{2 mu_i} - 1)."""
    _require_kind(F, "M", "project first: L-family content in inner_sp")
    _require_kind(G, "M", "project first: L-family content in inner_sp")
    return _pair(F, G, lambda fam, lam: _sp_weight(fam.deg, lam))


def inner_gl(F: SymFunc, G: SymFunc) -> RatQT:
    """The GL_n(q) isometry pairing: z_mu prod 1/(q_f^{mu_i} - 1)."""
    _require_kind(F, "M", "inner_gl needs M-families")
    _require_kind(G, "M", "inner_gl needs M-families")
    return _pair(F, G, lambda fam, lam: _gl_weight(fam.deg, lam))


def inner_dual(F: SymFunc, G: SymFunc) -> RatQT:
    """Pairing on L-families: z_l prod (q_phi^{l_i} - 1)/(q_phi^{2 l_i} - 1)."""
    _require_kind(F, "L", "inner_dual needs L-families only")
    _require_kind(G, "L", "inner_dual needs L-families only")
    return _pair(F, G, lambda fam, lam: _dual_weight(fam.deg, lam))


# --------------------------------------------------------------------------
# power-sum endomorphisms


def map_power_sums(F: SymFunc, factor) -> SymFunc:
    """Algebra map scaling p_n(f) by factor(f, n) (a RatQT)."""
    out = {}
    for key, c in to_p(F).terms.items():
        w = c
        for fam, _, lam in key:
            for part in lam:
                w = w * factor(fam, part)
        if w:
            out[key] = w
    return SymFunc._raw(out)


def omega(F: SymFunc) -> SymFunc:
    return map_power_sums(F, lambda fam, n: ONE if n % 2 else -ONE)


def omega_qt(F: SymFunc, binding: Binding = FORMAL) -> SymFunc:
    """p_n(f) -> (-1)^{n-1} (q_f^n - 1)/(t_f^n - 1) p_n(f)."""
    def factor(fam, n):
        w = binding.for_degree(fam.deg).weight(n)
        return w if n % 2 else -w
    return map_power_sums(F, factor)


def relabel(F: SymFunc, family_map) -> SymFunc:
    """Move factors to other families (dict Family -> Family), multiplying on collisions."""
    out = SymFunc()
    for key, c in F.terms.items():
        term = SymFunc.scalar(c)
        for fam, basis, lam in key:
            term = term * SymFunc.basis_element(basis, lam, family_map.get(fam, fam))
        out = out + term
    return out


# --------------------------------------------------------------------------
# symmetric-group characters (independent of the transition matrices)


@lru_cache(maxsize=None)
def sn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule (border-strip removal)."""
    lam = Partition(lam)
    rho = Partition(rho)
    if lam.size != rho.size:
        raise ValueError("weights differ")
    if not rho:
        return 1
    r = rho[0]
    rest = Partition(rho[1:])
    total = 0
    # beta-numbers: removing an r-rim hook = moving a bead from b to b - r
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted([x for x in beta if x != b] + [nb], reverse=True)
        k = len(new)
        mu = Partition([x - (k - 1 - i) for i, x in enumerate(new) if x - (k - 1 - i) > 0])
        total += (-1) ** height * sn_character(mu, rest)
    return total


def schur_by_characters(lam) -> dict:
    """s_lam = sum_rho chi^lam(rho) p_rho / z_rho (Frobenius)."""
    lam = Partition(lam)
    return {rho: Fraction(c, z_coeff(rho)) for rho in partitions_of(lam.size)
            if (c := sn_character(lam, rho))}


__all__ = [
    "Family", "PartitionFn", "F1", "TRIV", "X", "Binding", "FORMAL", "SWAPPED", "HALL", "Q_Q2", "Q2_Q",
    "HL", "HL_TINV", "hl_binding", "Basis", "M", "E", "H", "P", "S", "SymFunc",
    "to_p", "to_basis", "multiply", "tensor", "inner_qt", "inner_hall", "inner_sp", "inner_gl",
    "inner_dual", "omega", "omega_qt", "map_power_sums", "p_elem", "elem",
    "sn_character", "schur_by_characters", "relabel",
]
