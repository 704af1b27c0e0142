"""Command-line front end.

Four subcommands: ``analyze`` a code file, ``transform`` it with a
propagation rule, ``table1`` to regenerate the optimal-code catalog, and
``family`` to instantiate an MDS family member.  Reports are emitted as
deterministic JSON (sorted keys), CSV (catalog only), or text.

Every flag can also be set through an environment variable with the
``SUBSYS_`` prefix, e.g. ``SUBSYS_THRESHOLD=1000000``; flags win.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import click

from . import bounds, rules, table1 as table1_mod
from .codes import DEFAULT_THRESHOLD, AdditiveCode
from .subsystem import (ParamRecord, SubsystemCode, analysis_report,
                        bracket_params, derive)

_DOWNGRADED = ("witness", "analytic")


@dataclass
class RunConfig:
    threshold: int = DEFAULT_THRESHOLD
    workers: int = 1
    seed: int = 0
    fmt: str = "json"
    strict: bool = False
    emit: Optional[str] = None
    distance: str = "exact"
    backend: Optional[str] = None

    @property
    def distance_mode(self) -> str:
        # "exact" downgrades automatically beyond the threshold; the
        # downgrade is reported (and fatal under --strict)
        return "auto" if self.distance == "exact" else self.distance


pass_config = click.make_pass_decorator(RunConfig)


@click.group(context_settings={"auto_envvar_prefix": "SUBSYS"})
@click.option("--threshold", type=int, default=DEFAULT_THRESHOLD,
              show_default=True, help="Enumeration size limit.")
@click.option("--workers", type=int, default=1, show_default=True,
              help="Worker threads for enumeration.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Random seed for witness searches.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="json", show_default=True)
@click.option("--strict", is_flag=True,
              help="Treat verification downgrades as failures.")
@click.option("--emit", type=click.Path(dir_okay=False), default=None,
              help="Write the produced code or report to this path.")
@click.option("--distance", type=click.Choice(["exact", "witness", "skip"]),
              default="exact", show_default=True,
              help="Distance verification level.")
@click.option("--backend", type=click.Choice(["numba", "numpy"]),
              default=None, help="Enumeration backend override.")
@click.version_option(package_name="artifact")
@click.pass_context
def main(ctx, threshold, workers, seed, fmt, strict, emit, distance, backend):
    """Construct and transform subsystem codes from classical codes."""
    if threshold < 1:
        raise click.BadParameter("threshold must be >= 1")
    ctx.obj = RunConfig(threshold=threshold, workers=workers, seed=seed,
                        fmt=fmt, strict=strict, emit=emit, distance=distance,
                        backend=backend)


def _dump(cfg: RunConfig, payload, text_lines=None) -> None:
    if cfg.fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "text" and text_lines is not None:
        out = "\n".join(text_lines) + "\n"
    elif cfg.fmt == "csv":
        raise click.UsageError("CSV output is only available for table1")
    else:
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    click.echo(out, nl=False)
    if cfg.emit:
        with open(cfg.emit, "w") as fh:
            fh.write(out)


def _load_code(path: str) -> AdditiveCode:
    try:
        return AdditiveCode.load(path)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"cannot load code file {path}: {exc}")


def _derive(cfg: RunConfig, C: AdditiveCode) -> SubsystemCode:
    return derive(C, distance_mode=cfg.distance_mode, threshold=cfg.threshold,
                  workers=cfg.workers, seed=cfg.seed, backend=cfg.backend)


def _check_strict(cfg: RunConfig, downgraded: bool) -> None:
    if downgraded:
        click.echo("warning: some results rest on witness or asserted "
                   "verification only", err=True)
        if cfg.strict:
            raise click.exceptions.Exit(3)


def _code_downgraded(code: SubsystemCode) -> bool:
    return (code.d_method in _DOWNGRADED
            or (code.swt_c is not None and code.swt_c_method in _DOWNGRADED))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@pass_config
def analyze(cfg: RunConfig, file):
    """Derive and analyze the subsystem code of a classical code file."""
    C = _load_code(file)
    try:
        code = _derive(cfg, C)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    report = analysis_report(code)
    rec = bracket_params(code)
    report["bounds"] = {}
    if rec.d is not None and rec.k.denominator == 1 and rec.r.denominator == 1:
        report["bounds"]["singleton"] = bounds.singleton_check(rec).to_json()
        if rec.pure:
            report["bounds"]["hamming"] = bounds.hamming_check(rec).to_json()
    lines = [
        f"code: {report['bracket']}",
        f"purity: {report['purity']['kind']} "
        f"(swt(C) = {report['purity']['swt_C']})",
        f"distance: {report['distance']['value']} "
        f"[{report['distance']['method']}]",
    ]
    for name, rep in report["bounds"].items():
        lines.append(f"{name}: slack {rep['slack']}"
                     + (" (attained)" if rep["attained"] else ""))
    _dump(cfg, report, lines)
    _check_strict(cfg, _code_downgraded(code))


_PARAM_RE = re.compile(
    r"^\[\[(\d+),(\d+(?:/\d+)?),(\d+(?:/\d+)?),(>=)?(\d+)\]\]_(\d+)"
    r"((?:\s+(?:pure|impure|linear))*)\s*$")


def parse_params(text: str) -> ParamRecord:
    """Parse '[[n,k,r,d]]_q' optionally followed by 'pure'/'linear' words."""
    m = _PARAM_RE.match(text.strip())
    if not m:
        raise click.BadParameter(
            f"cannot parse parameters {text!r}; expected "
            "'[[n,k,r,d]]_q [pure] [linear]'")
    n, k, r, ge, d, q, words = m.groups()
    flags = set(words.split())
    return ParamRecord(
        n=int(n), q=int(q), k=Fraction(k), r=Fraction(r), d=int(d),
        d_is_bound=ge is not None,
        pure=True if "pure" in flags else (False if "impure" in flags else None),
        linear=True if "linear" in flags else None,
        provenance=["cli"])


_CONSTRUCTIVE_RULES = ("shrink-k", "grow-k", "extend-n", "to-stabilizer",
                       "to-subsystem")
_PARAM_RULES = ("shorten-n", "combine-disjoint", "combine-nested")


@main.command()
@click.argument("file", required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--rule", required=True,
              type=click.Choice(_CONSTRUCTIVE_RULES + _PARAM_RULES))
@click.option("--params", "params_list", multiple=True,
              help="Parameter tuple '[[n,k,r,d]]_q pure' for "
                   "parameter-level rules (repeat for combining rules).")
@click.option("-r", "--target-r", type=int, default=0, show_default=True,
              help="Target co-subsystem dimension where applicable.")
@click.option("--subset-assumed", is_flag=True,
              help="Confirm nesting for combine-nested.")
@pass_config
def transform(cfg: RunConfig, file, rule, params_list, target_r,
              subset_assumed):
    """Apply a propagation rule to a code file or parameter tuple."""
    opts = dict(distance_mode=cfg.distance_mode, threshold=cfg.threshold,
                workers=cfg.workers, seed=cfg.seed, backend=cfg.backend)
    try:
        if rule in _CONSTRUCTIVE_RULES:
            if file is None:
                raise click.UsageError(f"rule {rule} needs a code file")
            code = _derive(cfg, _load_code(file))
            if rule == "shrink-k":
                res = rules.shrink_k(code, **opts)
            elif rule == "grow-k":
                res = rules.grow_k(code, **opts)
            elif rule == "extend-n":
                res = rules.extend_length(code, **opts)
            elif rule == "to-stabilizer":
                res = rules.subsystem_to_stabilizer(code, **opts)
            else:
                res = rules.stabilizer_to_subsystem(code, target_r, **opts)
        else:
            recs = [parse_params(t) for t in params_list]
            if rule == "shorten-n":
                if len(recs) != 1:
                    raise click.UsageError("shorten-n needs one --params")
                res = rules.shorten_length(recs[0])
            else:
                if len(recs) != 2:
                    raise click.UsageError(f"{rule} needs two --params")
                if rule == "combine-disjoint":
                    res = rules.combine_disjoint(recs[0], recs[1], target_r)
                else:
                    res = rules.combine_nested(recs[0], recs[1], target_r,
                                               subset_assumed=subset_assumed)
    except ValueError as exc:
        raise click.ClickException(str(exc))

    out = res.output
    if isinstance(out, SubsystemCode):
        payload = {"rule": res.rule, "output": analysis_report(out),
                   "claims": res.claims, "verification": res.verification}
        bracket = bracket_params(out).bracket()
        if cfg.emit:
            out.C.save(cfg.emit)
        downgraded = (_code_downgraded(out)
                      or "asserted" in res.verification.values())
    else:
        payload = {"rule": res.rule, "output": out.to_json(),
                   "claims": res.claims, "verification": res.verification}
        bracket = out.bracket()
        downgraded = False   # parameter-level rules are asserted by nature
    lines = [f"rule: {res.rule}", f"output: {bracket}"]
    lines += [f"  {c}: {res.verification[c]}" for c in res.claims]
    if cfg.emit and isinstance(out, SubsystemCode):
        if cfg.fmt == "json":
            click.echo(json.dumps(payload, indent=2, sort_keys=True))
        else:
            click.echo("\n".join(lines))
        click.echo(f"wrote {cfg.emit}", err=True)
    else:
        _dump(cfg, payload, lines)
    _check_strict(cfg, downgraded)


@main.command("table1")
@click.option("--q", type=int, required=True,
              help="Field size (one of the catalog blocks).")
@pass_config
def table1_cmd(cfg: RunConfig, q):
    """Regenerate and verify the optimal pure MDS subsystem code catalog."""
    try:
        rows = table1_mod.generate_table(
            q, threshold=cfg.threshold, workers=cfg.workers, seed=cfg.seed,
            backend=cfg.backend)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if cfg.fmt == "csv":
        out = table1_mod.rows_to_csv(rows)
        click.echo(out, nl=False)
        if cfg.emit:
            with open(cfg.emit, "w") as fh:
                fh.write(out)
    else:
        lines = [f"{r.subsystem_bracket():>18}  {r.parent_bracket():>15}  "
                 f"{r.mark or '-':9}  d:{r.verification['distance']}"
                 for r in rows]
        _dump(cfg, table1_mod.rows_to_json(rows), lines)
    downgraded = any(v != table1_mod.VERIFIED
                     for r in rows for v in r.verification.values())
    _check_strict(cfg, downgraded)


@main.command()
@click.option("--family", required=True,
              type=click.Choice(["i", "ii", "iii", "iv", "v", "vi"]))
@click.option("--q", type=int, required=True)
@click.option("--delta", type=int, default=None)
@click.option("-r", "--target-r", "r", type=int, default=0, show_default=True)
@click.option("--n", type=int, default=None, help="Length (family i only).")
@click.option("--d", type=int, default=None, help="Distance (family i only).")
@pass_config
def family(cfg: RunConfig, family, q, delta, r, n, d):
    """Instantiate a member of the MDS subsystem code families."""
    try:
        spec = rules.MdsFamilySpec(q=q, family=family, delta=delta, r=r,
                                   n=n, d=d)
        res = rules.mds_family(spec, distance_mode=cfg.distance_mode,
                               threshold=cfg.threshold, workers=cfg.workers,
                               seed=cfg.seed, backend=cfg.backend)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    out = res.output
    if isinstance(out, SubsystemCode):
        payload = {"rule": res.rule, "output": analysis_report(out),
                   "claims": res.claims, "verification": res.verification}
        bracket = bracket_params(out).bracket()
        downgraded = _code_downgraded(out)
    else:
        payload = {"rule": res.rule, "output": out.to_json(),
                   "claims": res.claims, "verification": res.verification}
        bracket = out.bracket()
        downgraded = any(v == rules.ASSERTED
                         for v in res.verification.values())
    lines = [f"family {family} over GF({q}): {bracket}"]
    lines += [f"  {c}: {res.verification[c]}" for c in res.claims]
    _dump(cfg, payload, lines)
    _check_strict(cfg, downgraded)


if __name__ == "__main__":
    main()
