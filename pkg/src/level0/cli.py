"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite fails, 2 on bad input.
Output is canonical (sorted keys, fixed record order) so identical jobs give
byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from typing import Iterable

import click

from . import __version__
from .errors import Level0Error, Unsupported
from .fourier import FourierConfig, component_data, d_sign, fourier, involution_check, stable_packet
from .params import DiscreteParameter, enumerate_parameters, enumerate_sign_characters, epsilon_center
from .stability import classify_parameter, classify_pair, pair_conditions, pair_of_parameter
from .tame import enumerate_tame_characters
from .verify import DEFAULT_SUITES, SUITES, run_suites

SCHEMA = "level0/1"


class JobFailed(Exception):
    """A verification job ran to completion and found failures."""


def _key_str(key) -> str:
    return str(key) if isinstance(key, int) else f"{key[0]}:{key[1]}"


def _parameters(q, N, two_n, mode, input_path) -> list[tuple[DiscreteParameter, tuple | None]]:
    """Parameters from a file, or every parameter for (q, N, 2n, mode)."""
    if input_path is not None:
        return _read_input(input_path)
    missing = [n for n, v in (("--q", q), ("--N", N), ("--two-n", two_n)) if v is None]
    if missing:
        raise click.UsageError(f"missing {', '.join(missing)} (or pass --input)")
    out = []
    for chi in enumerate_tame_characters(q, two_n, N):
        out.extend((psi, None) for psi in enumerate_parameters(chi, mode))
    return out


def _read_input(path) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise Level0Error(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise Level0Error(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    records = data.get("records", data) if isinstance(data, dict) else data
    if not isinstance(records, list):
        raise Level0Error(f"{path}: expected a list of parameters or an object with 'records'")
    out = []
    for i, rec in enumerate(records):
        raw = rec.get("psi", rec) if isinstance(rec, dict) else rec
        if not isinstance(raw, dict):
            raise Level0Error(f"{path}: record {i}: expected an object")
        try:
            out.append(DiscreteParameter.from_json(raw))
        except Level0Error as exc:
            raise Level0Error(f"{path}: record {i}: {exc}") from exc
    return out


def _with_eps(params) -> Iterable[tuple[DiscreteParameter, tuple]]:
    for psi, eps in params:
        if eps is not None:
            yield psi, eps
        else:
            for e in enumerate_sign_characters(psi):
                yield psi, e


def _emit(ctx, command: str, records: list, extra: dict | None = None):
    opts = ctx.obj
    fmt, out = opts["format"], opts["out"]
    if fmt == "json":
        doc = {"schema": SCHEMA, "command": command, "options": opts["options"], "records": records}
        if extra:
            doc.update(extra)
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        fields = sorted({k for r in records for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True)
                        for k, v in r.items()})
        text = buf.getvalue()
    if out in (None, "-"):
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _output_options(f):
    """--out / --format accepted after the subcommand as well."""
    def set_out(ctx, _param, value):
        if value is not None:
            ctx.ensure_object(dict)["out"] = value
        return value

    def set_fmt(ctx, _param, value):
        if value is not None:
            ctx.ensure_object(dict)["format"] = value
        return value

    f = click.option("--out", "_out", type=click.Path(dir_okay=False), default=None, expose_value=False,
                     callback=set_out, help="Output file (default stdout).")(f)
    f = click.option("--format", "_fmt", type=click.Choice(["json", "csv"]), default=None, expose_value=False,
                     callback=set_fmt, help="Output format (default json).")(f)
    return f


def _common(f):
    f = _output_options(f)
    f = click.option("--input", "input_path", type=click.Path(dir_okay=False), default=None,
                     help="JSON file of parameters (e.g. an earlier enumerate output).")(f)
    f = click.option("--mode", type=click.Choice(["discrete", "elliptic"]), default="discrete", show_default=True)(f)
    f = click.option("--two-n", "two_n", type=int, default=None, help="Dimension 2n of the dual group.")(f)
    f = click.option("--N", "N", type=int, default=None, help="Order of the roots of unity.")(f)
    f = click.option("--q", type=int, default=None, help="Residue field size (odd prime power).")(f)
    return f


@click.group()
@click.version_option(__version__)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file (default stdout).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.pass_context
def cli(ctx, out, fmt):
    """Level-zero parameters, stability and packets for odd orthogonal groups."""
    ctx.obj = {"out": out, "format": fmt, "options": {}}


def _record_options(ctx, **kw):
    ctx.obj["options"].update({k: v for k, v in kw.items() if v is not None})


@cli.command("enumerate")
@_common
@click.pass_context
def enumerate_cmd(ctx, q, N, two_n, mode, input_path):
    """List every (psi, eps) for the given data."""
    _record_options(ctx, q=q, N=N, two_n=two_n, mode=mode)
    params = _parameters(q, N, two_n, mode, input_path)
    records = []
    for i, (psi, eps) in enumerate(_with_eps(params)):
        records.append({"index": i, "psi": psi.to_json(eps), "eps_Z": epsilon_center(psi, eps)})
    _emit(ctx, "enumerate", records, {"parameter_count": len(params), "pair_count": len(records)})


STABLE_CLAUSES = ("eps_I_eq_eps_P", "gap_one", "zeta_plus", "n_second_zero")
SEMISTABLE_CLAUSES = ("eps_I_eq_eps_P", "gap_one", "zeta_minus", "n_prime_zero")


def _failed_clauses(cond: dict) -> dict:
    return {"stable": [c for c in STABLE_CLAUSES if not cond[c]],
            "semistable": [c for c in SEMISTABLE_CLAUSES if not cond[c]]}


@cli.command()
@_common
@click.pass_context
def classify(ctx, q, N, two_n, mode, input_path):
    """Stability class of every (psi, eps), with the clause values behind it."""
    _record_options(ctx, q=q, N=N, two_n=two_n, mode=mode)
    records = []
    for i, (psi, eps) in enumerate(_with_eps(_parameters(q, N, two_n, mode, input_path))):
        n_data, cusp = pair_of_parameter(psi, eps)
        cls = classify_pair(n_data, cusp)
        rule = classify_parameter(psi, eps)
        records.append({
            "index": i, "psi": psi.to_json(eps), "class": cls.value, "parameter_rule": rule.value,
            "agree": cls == rule, "conditions": pair_conditions(n_data, cusp),
            "firing_conditions": _failed_clauses(pair_conditions(n_data, cusp)),
            "cusp": cusp.to_json(), "n": {_key_str(k): list(v) for k, v in n_data.items()},
        })
    _emit(ctx, "classify", records)


@cli.command("fourier")
@_common
@click.option("--sigma-U", "sigma_U", type=click.Choice(["1", "-1"]), default="1", show_default=True)
@click.option("--sigma-eps", type=click.Choice(["sigma_u", "trivial"]), default="sigma_u", show_default=True)
@click.pass_context
def fourier_cmd(ctx, q, N, two_n, mode, input_path, sigma_U, sigma_eps):
    """Transform of every (psi, eps) and the involution report of its orbits."""
    _record_options(ctx, q=q, N=N, two_n=two_n, mode=mode, sigma_U=int(sigma_U), sigma_eps=sigma_eps)
    cfg = FourierConfig(int(sigma_U), sigma_eps)
    records = []
    for i, (psi, eps) in enumerate(_with_eps(_parameters(q, N, two_n, mode, input_path))):
        rec = {"index": i, "psi": psi.to_json(eps)}
        try:
            rec["transform"] = fourier(psi, eps, cfg).to_json()
            rec["involution"] = [involution_check(b, cfg) for _, b, _ in component_data(psi, eps)]
        except Unsupported as exc:
            rec["unsupported"] = str(exc)
        records.append(rec)
    _emit(ctx, "fourier", records)


@cli.command()
@_common
@click.option("--weighted", is_flag=True, help="Weight packet members by eps_Z.")
@click.pass_context
def packets(ctx, q, N, two_n, mode, input_path, weighted):
    """Stable packets per form (iso / an) for every psi."""
    _record_options(ctx, q=q, N=N, two_n=two_n, mode=mode, weighted=weighted or None)
    records, seen = [], set()
    for psi, _ in _parameters(q, N, two_n, mode, input_path):
        tag = json.dumps(psi.to_json(), sort_keys=True)
        if tag in seen:
            continue
        seen.add(tag)
        i = len(records)
        rec = {"index": i, "psi": psi.to_json()}
        for sharp in ("iso", "an"):
            rec[sharp] = [{"eps": list(e), "coeff": c, "d_sign": d_sign(psi, e)}
                          for e, c in stable_packet(psi, sharp, weighted)]
        records.append(rec)
    _emit(ctx, "packets", records)


@cli.command()
@_output_options
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES) + ["all"]),
              help="Suite to run (repeatable); default runs mackey, cle, k-identities, sgncd.")
@click.option("--max-rank", type=int, default=None, help="Rank bound passed to every selected suite.")
@click.pass_context
def verify(ctx, suites, max_rank):
    """Run verification sweeps and write a pass/fail report."""
    names = list(DEFAULT_SUITES) if not suites or "all" in suites else list(dict.fromkeys(suites))
    _record_options(ctx, suites=names, max_rank=max_rank)
    reports = run_suites(names, max_rank)
    passed = all(r["passed"] for r in reports)
    _emit(ctx, "verify", reports, {"passed": passed})
    if not passed:
        raise JobFailed()


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="level0", standalone_mode=False)
    except JobFailed:
        return 1
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.Abort:
        return 2
    except Level0Error as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
