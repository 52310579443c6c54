"""`macsym` command line: tables, characteristic-map data, spherical values, scans.

Every leaf command returns its exit code: 0 on success, 1 when a scan or a
route comparison finds a falsification, 2 on usage errors (click's own
convention, reused for bad index data).
"""

from __future__ import annotations

import functools
import json
import sys
from fractions import Fraction

import click

from . import cache as table_cache
from .partitions import Partition, partitions_of
from .ratfunc import RatQT, eval_q, q
from .render import render, to_plain
from .symfunc import FORMAL, HL, Q2_Q, Q_Q2, Basis, PartitionFn, to_basis

BINDINGS = {"qt": FORMAL, "q,t": FORMAL, "q,q2": Q_Q2, "q2,q": Q2_Q, "hl": HL}
BASES = ("m", "e", "h", "p", "s", "P", "Q", "J")
FORMATS = ("json", "csv", "latex")


# --------------------------------------------------------------------------
# option parsing


def _json_arg(value, param):
    try:
        return json.loads(value)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"not valid JSON ({exc.msg}): {value!r}", param=param) from None


def _partition(ctx, param, value):
    if value is None:
        return None
    obj = _json_arg(value, param)
    if not isinstance(obj, list):
        raise click.BadParameter("expected a JSON array such as [2,1]", param=param)
    try:
        return Partition(obj)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param=param) from None


def _param_named(name):
    ctx = click.get_current_context()
    return next(p for p in ctx.command.params if p.name == name)


def _pfn(kind):
    def parse(ctx, param, value):
        if value is None:
            return None
        obj = _json_arg(value, param)
        try:
            pf = PartitionFn.from_json(obj, kind)
        except (ValueError, TypeError) as exc:
            raise click.BadParameter(str(exc), param=param) from None
        bad = pf.kinds() - {kind}
        if bad:
            raise click.BadParameter(f"families must be of kind {kind}", param=param)
        return pf
    return parse


def _rational(ctx, param, value):
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"not a rational number: {value!r}", param=param) from None


def _rational_list(ctx, param, value):
    if value is None:
        return None
    try:
        out = tuple(Fraction(x) for x in value.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected comma-separated rationals: {value!r}", param=param) from None
    if not out:
        raise click.BadParameter("empty list", param=param)
    return out


def _binding(ctx, param, value):
    return BINDINGS[value]


def _coset(ctx, param, value):
    if value in ("identity", "transvection"):
        return value
    if value.startswith("unipotent:"):
        obj = _json_arg(value[len("unipotent:"):], param)
        try:
            return Partition(obj)
        except (ValueError, TypeError) as exc:
            raise click.BadParameter(str(exc), param=param) from None
    raise click.BadParameter("use identity, transvection or unipotent:<json-partition>", param=param)


def _eval_column(record, value, q0, key="value_at_q"):
    if q0 is not None and isinstance(value, RatQT):
        try:
            record[key] = str(eval_q(value, q0))
        except ZeroDivisionError:
            record[key] = None
    return record


# --------------------------------------------------------------------------
# shared command plumbing


def leaf(fn):
    """Common flags, cache lifetime, output and error mapping for leaf commands."""

    @click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
    @click.option("--cache", "cache_path", type=click.Path(dir_okay=False), default=None,
                  envvar=table_cache.ENV_VAR, help="Table cache file (default: $MACSYM_CACHE).")
    @click.option("--no-cache", is_flag=True, help="Recompute every table; do not read or write the cache.")
    @click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
                  help="Write records to a file instead of stdout.")
    @functools.wraps(fn)
    def wrapper(fmt, cache_path, no_cache, out_path, **kwargs):
        store = table_cache.configure(cache_path, enabled=not no_cache)
        try:
            records, code = fn(**kwargs)
        except (ValueError, ArithmeticError) as exc:
            raise click.UsageError(str(exc)) from None
        text = render(records, fmt)
        if out_path:
            with open(out_path, "w") as fh:
                fh.write(text)
        else:
            click.echo(text, nl=False)
        store.save()
        return code

    return wrapper


def q_option(fn):
    fn = click.option("--q", "--eval-q", "q0", callback=_rational, default=None,
                      help="Also evaluate at this rational q.")(fn)
    return fn


@click.group()
def cli():
    """Exact symmetric-function tables and spherical functions of GL(2n,q)/Sp(2n,q)."""


# --------------------------------------------------------------------------
# macdonald


@cli.group()
def macdonald():
    """Macdonald polynomials and related coefficients."""


def _macdonald_command(name):
    @macdonald.command(name=name, help=f"Expand {name}_lambda in a chosen basis.")
    @click.option("--lambda", "lam", required=True, callback=_partition)
    @click.option("--basis", type=click.Choice(BASES), default="m", show_default=True)
    @click.option("--binding", type=click.Choice(sorted(BINDINGS)), default="qt", callback=_binding)
    @leaf
    def command(lam, basis, binding):
        from .macdonald import macdonald_J, macdonald_P, macdonald_Q
        build = {"P": macdonald_P, "Q": macdonald_Q, "J": macdonald_J}[name]
        F = build(lam, binding)
        target = Basis(basis, binding if basis in "PQJ" else None)
        value = to_basis(F, target)
        return [{"kind": name, "lambda": list(lam), "binding": binding.label(),
                 "basis": basis, "value": value}], 0

    return command


for _name in ("P", "Q", "J"):
    _macdonald_command(_name)


@macdonald.command(name="skew")
@click.option("--lambda", "lam", required=True, callback=_partition)
@click.option("--mu", required=True, callback=_partition)
@click.option("--basis", type=click.Choice(BASES), default="s", show_default=True)
@click.option("--binding", type=click.Choice(sorted(BINDINGS)), default="q,q2", callback=_binding)
@leaf
def macdonald_skew(lam, mu, basis, binding):
    """Skew P_{lambda/mu} in a chosen basis."""
    from .macdonald import skew_P
    F = skew_P(lam, mu, binding)
    value = to_basis(F, Basis(basis, binding if basis in "PQJ" else None))
    return [{"kind": "skew_P", "lambda": list(lam), "mu": list(mu),
             "binding": binding.label(), "basis": basis, "value": value}], 0


@macdonald.command(name="coeff")
@click.option("--lambda", "lam", required=True, callback=_partition)
@click.option("--mu", required=True, callback=_partition)
@click.option("--nu", default=None, callback=_partition, help="Omit to list every nu.")
@click.option("--binding", type=click.Choice(sorted(BINDINGS)), default="q,q2", callback=_binding)
@q_option
@leaf
def macdonald_coeff(lam, mu, nu, binding, q0):
    """Schur coefficients C^nu_{lambda/mu} of skew P."""
    from .positivity import skew_schur_row
    row = skew_schur_row(lam, mu, binding)
    if nu is not None and nu not in row:
        raise ValueError("--nu must have size |lambda| - |mu|")
    out = []
    for key in ([nu] if nu is not None else list(row)):
        rec = {"lambda": list(lam), "mu": list(mu), "nu": list(key),
               "binding": binding.label(), "value": row[key]}
        out.append(_eval_column(rec, row[key], q0))
    return out, 0


# --------------------------------------------------------------------------
# green


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@q_option
@leaf
def green(n, q0):
    """Green polynomials Q_rho^mu(t) for |rho| = |mu| = n."""
    from .macdonald import green_polynomials
    table = green_polynomials(n)
    out = []
    for rho in partitions_of(n):
        for mu in partitions_of(n):
            v = table.value(rho, mu)
            rec = {"rho": list(rho), "mu": list(mu), "value": v}
            if q0 is not None:
                rec["value_at_t"] = str(eval_q(v.subst(q, q), q0))
            out.append(rec)
    return out, 0


# --------------------------------------------------------------------------
# charmap


@cli.group()
def charmap():
    """Class, coset and character data of GL_n(q) and their characteristic images."""


@charmap.command(name="class-size")
@click.option("--mu", required=True, callback=_pfn("M"))
@q_option
@leaf
def charmap_class_size(mu, q0):
    from .charmap import a_mu, class_size
    v = class_size(mu)
    rec = {"index": mu.to_json(), "value": v, "centralizer": a_mu(mu)}
    return [_eval_column(rec, v, q0)], 0


@charmap.command(name="dim")
@click.option("--lambda", "lam", required=True, callback=_pfn("L"))
@q_option
@leaf
def charmap_dim(lam, q0):
    from .charmap import dim_irreducible
    v = dim_irreducible(lam)
    return [_eval_column({"index": lam.to_json(), "value": v}, v, q0)], 0


@charmap.command(name="coset-size")
@click.option("--mu", required=True, callback=_pfn("M"))
@q_option
@leaf
def charmap_coset_size(mu, q0):
    from .charmap import double_coset_size
    v = double_coset_size(mu)
    return [_eval_column({"index": mu.to_json(), "value": v}, v, q0)], 0


@charmap.command(name="counts")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--q", "--eval-q", "q0", type=click.IntRange(min=2), required=True,
              help="Prime power field size.")
@leaf
def charmap_counts(n, q0):
    """Class, coset and character counts by type at q = q0, with group-order totals."""
    from .charmap import (class_size, dim_irreducible, double_coset_size, gl_order, index_types,
                          type_count)
    out = []
    totals = {"class": 0, "coset": 0, "character": 0}
    for kind, label, fn in (("M", "class", class_size), ("M", "coset", double_coset_size),
                            ("L", "character", dim_irreducible)):
        for mset, rep in index_types(n, kind):
            count = type_count(mset, q0, kind)
            v = fn(rep)
            at = eval_q(v, q0)
            contrib = count * (at * at if label == "character" else at)
            totals[label] += contrib
            out.append({"kind": label, "type": [[d, list(lam)] for d, lam in mset],
                        "representative": rep.to_json(), "count": count, "value": v,
                        "value_at_q": str(at)})
    out.append({"kind": "total", "n": n, "q": q0,
                "class_sizes": str(totals["class"]), "gl_n": str(eval_q(gl_order(n), q0)),
                "coset_sizes": str(totals["coset"]), "gl_2n": str(eval_q(gl_order(2 * n), q0)),
                "dims_squared": str(totals["character"])})
    return out, 0


@charmap.command(name="ch")
@click.option("--index", "index", required=True, help="PartitionFn JSON.")
@click.option("--map", "which", required=True,
              type=click.Choice(["gl-indicator", "gl-character", "sp-indicator", "spherical", "dl"]))
@click.option("--basis", type=click.Choice(["m", "e", "h", "p", "s"]), default="p", show_default=True)
@leaf
def charmap_ch(index, which, basis):
    """Characteristic image of an indicator or character."""
    from . import charmap as cm
    kind = "M" if which in ("gl-indicator", "sp-indicator") else "L"
    pf = _pfn(kind)(None, _param_named("index"), index)
    fn = {"gl-indicator": cm.ch_GL_indicator, "gl-character": cm.ch_GL_character,
          "sp-indicator": cm.ch_sp_indicator, "spherical": cm.ch_spherical, "dl": cm.ch_DL}[which]
    value = to_basis(fn(pf), Basis(basis))
    return [{"map": which, "index": pf.to_json(), "basis": basis, "value": value}], 0


# --------------------------------------------------------------------------
# spherical


@cli.group()
def spherical():
    """Spherical functions of GL(2n,q)/Sp(2n,q) on unipotent double cosets."""


def _coset_partition(coset, n):
    from .spherical import identity_coset, transvection
    if coset == "identity":
        return identity_coset(n)
    if coset == "transvection":
        return transvection(n)
    if coset.size != n:
        raise ValueError(f"coset partition has size {coset.size}, lambda has weight {n}")
    return coset


@spherical.command(name="value")
@click.option("--lambda", "lam", required=True, callback=_pfn("L"))
@click.option("--coset", default="transvection", callback=_coset, show_default=True)
@click.option("--route", type=click.Choice(["a", "b", "c", "all"]), default="a", show_default=True)
@q_option
@leaf
def spherical_value_cmd(lam, coset, route, q0):
    """phi_lambda on a unipotent coset, by one route or all of them."""
    from .spherical import spherical_value, transvection
    n = lam.weight
    mu = _coset_partition(coset, n)
    if route == "all":
        routes = ["a", "b"] + (["c"] if n >= 2 and mu == transvection(n) else [])
    else:
        routes = [route]
    values = {r: spherical_value(lam, mu, r) for r in routes}
    first = values[routes[0]]
    agree = all(v == first for v in values.values())
    rec = {"lambda": lam.to_json(), "coset": list(mu), "value": first}
    if len(routes) > 1:
        rec["routes"] = values
        rec["agree"] = agree
    _eval_column(rec, first, q0)
    return [rec], 0 if agree else 1


@spherical.command(name="sum-rule")
@click.option("--coset", required=True, callback=_coset)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--route", type=click.Choice(["a", "b"]), default="a", show_default=True)
@leaf
def spherical_sum_rule(coset, n, route):
    """sum_lambda dim(chi_{lambda u lambda}) phi_lambda(g) against [GL_2n : Sp_2n] [g in Sp_2n]."""
    from .spherical import sum_rule, sum_rule_expected
    mu = _coset_partition(coset, n)
    got, want = sum_rule(mu, route), sum_rule_expected(mu)
    return [{"coset": list(mu), "route": route, "value": got, "expected": want,
             "holds": got == want}], 0 if got == want else 1


# --------------------------------------------------------------------------
# scans


@cli.group()
def positivity():
    """Positivity of C^nu_{lambda/mu}(q, q^2)."""


@positivity.command(name="scan")
@click.option("--max-n", type=click.IntRange(min=0), required=True)
@click.option("--qs", callback=_rational_list, default="3,5,7,9", show_default=True)
@click.option("--max-mu", type=click.IntRange(min=0), default=None)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@leaf
def positivity_scan_cmd(max_n, qs, max_mu, jobs):
    from .positivity import falsifications, positivity_scan
    reports = positivity_scan(max_n, qs, max_mu, jobs)
    bad = falsifications(reports)
    click.echo(f"{len(reports)} reports, {len(bad)} falsifications", err=True)
    return [r.to_json() for r in reports], 1 if bad else 0


@cli.group()
def vanishing():
    """Vanishing of C^nu_{lambda/mu}(q, q^2) predicted by LR coefficients."""


@vanishing.command(name="scan")
@click.option("--max-n", type=click.IntRange(min=0), required=True)
@click.option("--max-mu", type=click.IntRange(min=0), default=None)
@leaf
def vanishing_scan_cmd(max_n, max_mu):
    from .positivity import vanishing_scan
    rows = vanishing_scan(max_n, max_mu)
    out = [{"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coefficient": c,
            "vanishes": c.is_zero()} for lam, mu, nu, c in rows]
    bad = sum(1 for r in out if not r["vanishes"])
    click.echo(f"{len(out)} predicted vanishings, {bad} nonzero", err=True)
    return out, 1 if bad else 0


@cli.group()
def haglund():
    """Coefficient reports for <J_lambda, s_mu>/(1-q)^n and the skew variant (report only)."""


@haglund.command(name="scan")
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--skew", is_flag=True, help="Use J_mu^perp J_lambda against s_nu.")
@leaf
def haglund_scan_cmd(max_n, skew):
    from .positivity import haglund_scan
    out = [{"lambda": list(lam), "mu": list(mu), "nu": list(nu), "certificate": cert,
            "in_N_q": cert is not None} for lam, mu, nu, cert in haglund_scan(max_n, skew)]
    return out, 0


# --------------------------------------------------------------------------
# cache


@cli.group(name="cache")
def cache_group():
    """Inspect, clear or prefill the table cache."""


@cache_group.command(name="info")
@leaf
def cache_info():
    return [table_cache.active().stats()], 0


@cache_group.command(name="clear")
@leaf
def cache_clear():
    store = table_cache.active()
    store.clear()
    return [store.stats()], 0


@cache_group.command(name="warm")
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--binding", type=click.Choice(sorted(BINDINGS)), default="q,q2", callback=_binding)
@leaf
def cache_warm(max_n, binding):
    from .macdonald import green_polynomials, macdonald_table
    for n in range(1, max_n + 1):
        macdonald_table(n, binding)
        green_polynomials(n)
    return [table_cache.active().stats()], 0


# --------------------------------------------------------------------------
# entry points


def run(argv=None) -> int:
    """Run the CLI on argv and return the exit code instead of exiting."""
    try:
        rv = cli.main(args=argv, prog_name="macsym", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(run())


__all__ = ["cli", "run", "main", "to_plain"]
