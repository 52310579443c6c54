"""Output formats for CLI records: JSON lines, CSV and LaTeX."""

from __future__ import annotations

import csv
import io
import json

from .ratfunc import PolyQT, RatQT
from .symfunc import SymFunc


def _latex_poly(p: PolyQT) -> str:
    if not p.terms:
        return "0"
    out = []
    for (i, j), c in sorted(p.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
        mono = ""
        if i:
            mono += "q" if i == 1 else f"q^{{{i}}}"
        if j:
            mono += "t" if j == 1 else f"t^{{{j}}}"
        mag = abs(c)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def latex_ratqt(r: RatQT) -> str:
    num = _latex_poly(r.num)
    if r.is_polynomial():
        return num
    return f"\\frac{{{num}}}{{{_latex_poly(r.den)}}}"


_FAMILY_TEX = {"triv": r"\varphi_{1}", "f1": "f_1"}


def _family_tex(fam) -> str:
    return _FAMILY_TEX.get(fam.id, fam.id.replace("_", r"\_"))


def _basis_tex(basis, lam, fam) -> str:
    idx = ",".join(map(str, lam))
    f = _family_tex(fam)
    if basis.binding is None:
        return f"{basis.name}_{{{idx}}}({f})"
    b = basis.binding
    if b.q.is_zero() and basis.name == "P":
        return f"P_{{{idx}}}({f};{latex_ratqt(b.t)})"
    return f"{basis.name}_{{{idx}}}({f};{latex_ratqt(b.q)},{latex_ratqt(b.t)})"


def latex_symfunc(F: SymFunc) -> str:
    if F.is_zero():
        return "0"
    parts = []
    for key, c in F.items():
        mono = " ".join(_basis_tex(b, lam, fam) for fam, b, lam in key)
        coeff = latex_ratqt(c)
        if not mono:
            parts.append(coeff)
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"\\left({coeff}\\right){mono}")
    return " + ".join(parts).replace("+ -", "- ")


def to_plain(value):
    """Convert record values to JSON-ready data."""
    if isinstance(value, RatQT):
        return {"ratqt": value.to_json(), "str": str(value)}
    if isinstance(value, SymFunc):
        return {"symfunc": value.to_json(), "str": str(value)}
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, int):
        return str(value)
    return value


def _flat(value):
    if isinstance(value, (RatQT, SymFunc)):
        return str(value)
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(to_plain(value), sort_keys=True)
    if value is None:
        return ""
    return str(value)


def _tex_cell(value):
    if isinstance(value, RatQT):
        return f"${latex_ratqt(value)}$"
    if isinstance(value, SymFunc):
        return f"${latex_symfunc(value)}$"
    if isinstance(value, (list, tuple)) and all(isinstance(x, int) for x in value):
        return "(" + ",".join(map(str, value)) + ")"
    return _flat(value).replace("_", r"\_")


def render(records, fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        return "".join(json.dumps(to_plain(r), sort_keys=True) + "\n" for r in records)
    keys = []
    for r in records:
        for k in r:
            if k not in keys:
                keys.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for r in records:
            w.writerow([_flat(r.get(k)) for k in keys])
        return buf.getvalue()
    if fmt == "latex":
        lines = ["\\begin{tabular}{" + "l" * len(keys) + "}",
                 " & ".join(k.replace("_", r"\_") for k in keys) + " \\\\",
                 "\\hline"]
        for r in records:
            lines.append(" & ".join(_tex_cell(r.get(k)) for k in keys) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
