"""Command-line front end: ``circleorth compute|verify|favard|report``.

Exit codes: 0 success, 1 identity failure, 2 configuration or validation error.

The configuration file is JSON::

    {
      "measure": {"weight": {"kind": "bernstein_szego", "alphas": [0.5]},
                  "atoms": [{"theta": 0.0, "mass": 0.2}], "quadrature_points": 4096},
      "measures": [...] or "acceptance",
      "N": 6, "tolerance": 1e-8, "ids": ["all"], "seed": 0, "mode": "strict",
      "coefficients": "coeffs.csv", "phase_policy": "positive-real", "out": "out"
    }

Command-line flags override the file.  Coefficient files are CSV with header
``n,a,b,beta[,iota,jmath,varsigma,zeta]`` or JSON with the same keys.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .analytic import asymptotic_diagnostics, szego_function, verblunsky_support
from .bridge import build_context
from .catalog import GROUPS, measure_catalog
from .errors import AdmissibilityError, MeasureError
from .favard import CLOSED, STRICT, SevenSeq, read_coefficients, strong_favard, validate, weak_favard
from .measure import acceptance_suite, measure_from_dict
from .opuc import build_opuc
from .otp import build_otp
from .report import SCHEMA_VERSION, ResidualReport

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    """Resolved run settings.  ``tolerance=None`` keeps each identity's own tolerance."""

    measures: list = field(default_factory=list)
    N: int = 6
    tolerance: float | None = None
    ids: list = field(default_factory=lambda: ["all"])
    seed: int = 0
    mode: str = STRICT
    out: Path = Path(".")
    coefficients: Path | None = None
    phase_policy: object = "positive-real"
    groups: tuple = GROUPS

    def __post_init__(self):
        if self.N < 1:
            raise ConfigError("N must be >= 1")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError("tolerance must be positive")
        if self.mode not in (STRICT, CLOSED):
            raise ConfigError("mode must be 'strict' or 'closed'")


def load_config(args) -> RunConfig:
    raw, base = {}, Path(".")
    if args.config:
        p = Path(args.config)
        try:
            raw = json.loads(p.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {p}: {e}") from e
        base = p.parent
    try:
        if raw.get("measures") == "acceptance":
            measures = acceptance_suite()
        elif "measures" in raw:
            measures = [measure_from_dict(d) for d in raw["measures"]]
        elif "measure" in raw:
            measures = [measure_from_dict(raw["measure"])]
        else:
            measures = []
    except (MeasureError, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"invalid measure description: {e}") from e
    ids = args.ids.split(",") if args.ids else raw.get("ids", ["all"])
    coeff = raw.get("coefficients")
    phase = raw.get("phase_policy", "positive-real")
    if isinstance(phase, dict):
        phase = ("fixed-angle", float(phase["fixed-angle"]))
    pick = lambda flag, key, default: flag if flag is not None else raw.get(key, default)
    return RunConfig(
        measures=measures,
        N=int(pick(args.n, "N", 6)),
        tolerance=pick(args.tol, "tolerance", None),
        ids=[i.strip() for i in ids],
        seed=int(pick(args.seed, "seed", 0)),
        mode=pick(args.mode, "mode", STRICT),
        out=Path(pick(args.out, "out", ".")),
        coefficients=(base / coeff) if coeff else None,
        phase_policy=phase,
        groups=tuple(raw.get("groups", GROUPS)),
    )


def _out_dir(cfg: RunConfig) -> Path:
    if not cfg.out.is_dir():
        raise ConfigError(f"output directory {cfg.out} does not exist")
    return cfg.out


def _write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema_version: {SCHEMA_VERSION}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _one_measure(cfg: RunConfig):
    if len(cfg.measures) != 1:
        raise ConfigError(f"this command needs exactly one measure, got {len(cfg.measures)}")
    return cfg.measures[0]


def _num(x) -> str:
    return repr(float(x))


# commands ---------------------------------------------------------------------

def cmd_compute(cfg: RunConfig) -> int:
    """Write ``coefficients.csv`` (OLP) and ``opuc.csv`` for one measure."""
    out = _out_dir(cfg)
    m = _one_measure(cfg)
    o = build_otp(m, cfg.N)
    s = build_opuc(m, 2 * cfg.N)
    _write_csv(out / "coefficients.csv", ["n", "a", "b", "beta", "iota", "jmath", "varsigma", "zeta"],
               [[n] + [_num(v[n]) for v in (o.a, o.b, o.beta, o.iota, o.jmath, o.varsigma, o.zeta)]
                for n in range(cfg.N + 1)])
    _write_csv(out / "opuc.csv", ["n", "alpha_re", "alpha_im", "kappa", "sublead_re", "sublead_im"],
               [[n, _num(s.alpha[n].real), _num(s.alpha[n].imag), _num(s.kappa[n]),
                 _num(s.sublead[n].real), _num(s.sublead[n].imag)] for n in range(2 * cfg.N)])
    print(f"wrote {out / 'coefficients.csv'} and {out / 'opuc.csv'}")
    return EXIT_OK


def verify_reports(cfg: RunConfig) -> list:
    reports = []
    for m in cfg.measures:
        rep = measure_catalog(m, cfg.N, cfg.seed, cfg.groups)
        rep = ResidualReport(rep.select(cfg.ids), rep.meta)
        if cfg.tolerance is not None:
            rep = rep.retolerance(cfg.tolerance)
        reports.append(rep)
    return reports


def verify_json(cfg: RunConfig, reports) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "N": cfg.N,
        "seed": cfg.seed,
        "tolerance": cfg.tolerance,
        "ids": cfg.ids,
        "pass": all(r.passed for r in reports),
        "printed_forms": "entries with gating false are printed forms kept as data",
        "measures": [{"measure": r.meta["measure"], "pass": r.passed,
                      "identities": [x.to_dict() for x in r]} for r in reports],
    }
    return json.dumps(doc, indent=2, default=_jsonable) + "\n"


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    raise TypeError(type(x))


def cmd_verify(cfg: RunConfig) -> int:
    """Run the identity catalog; write ``report.json`` and print a summary."""
    out = _out_dir(cfg)
    if not cfg.measures:
        raise ConfigError("no measure given")
    reports = verify_reports(cfg)
    (out / "report.json").write_text(verify_json(cfg, reports))
    for r in reports:
        fails = r.failures()
        gating = sum(x.gating for x in r)
        print(f"{r.meta['measure']}: {gating - len(fails)}/{gating} gating identities pass")
        for f in fails:
            print(f"  FAIL {f.id} max={f.max_residual:.3e} tol={f.tol:.0e} at n={f.worst()}")
        data = r.data_mismatches()
        if data:
            print(f"  printed forms reported as data: {', '.join(d.id for d in data)}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_favard(cfg: RunConfig) -> int:
    """Reconstruct alphas from a coefficient file; write ``alphas.csv`` and ``roundtrip.json``."""
    out = _out_dir(cfg)
    if cfg.coefficients is None:
        raise ConfigError("favard needs a 'coefficients' file in the config")
    try:
        data = read_coefficients(cfg.coefficients)
    except (OSError, ValueError, KeyError) as e:
        raise ConfigError(f"cannot read coefficients: {e}") from e
    rep = validate(data, cfg.mode)
    if not rep.ok:
        print("admissibility violations:", file=sys.stderr)
        for v in rep.violations:
            print(f"  n={v['n']} {v['clause']} value={v['value']:.6g}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if isinstance(data, SevenSeq):
            res = strong_favard(data, mode=cfg.mode)
        else:
            res = weak_favard(data, cfg.phase_policy, mode=cfg.mode)
    except AdmissibilityError as e:
        print(f"admissibility error at n={e.index} ({e.clause}): {e}", file=sys.stderr)
        return EXIT_CONFIG
    _write_csv(out / "alphas.csv", ["n", "alpha_re", "alpha_im"],
               [[j, _num(a.real), _num(a.imag)] for j, a in enumerate(res.alphas)])
    doc = {"schema_version": SCHEMA_VERSION, "kind": "seven" if isinstance(data, SevenSeq) else "triple",
           "mode": cfg.mode, "kappa_ratio": {str(k): v for k, v in rep.kappa_ratio.items()},
           "enabled_solves": {str(k): v for k, v in rep.enabled_solves.items()},
           "notes": rep.notes, "roundtrip": [r.to_dict() for r in res.report]}
    (out / "roundtrip.json").write_text(json.dumps(doc, indent=2, default=_jsonable) + "\n")
    ok = all(r.passed for r in res.report)
    msg = f"recovered {len(res.alphas)} Verblunsky coefficients"
    if res.report:
        msg += f"; round trip {'pass' if ok else 'FAIL'}"
    print(msg)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(cfg: RunConfig) -> int:
    """Asymptotic diagnostics for every measure: ``diagnostics.csv`` and ``diagnostics.md``."""
    out = _out_dir(cfg)
    if not cfg.measures:
        raise ConfigError("empty measure list")
    rows, md = [], ["# Asymptotic diagnostics", ""]
    for m in cfg.measures:
        ctx = build_context(m, cfg.N)
        try:
            sz = szego_function(m)
        except MeasureError as e:
            md += [f"## {m.describe()}", "", f"skipped: {e}", ""]
            continue
        t = asymptotic_diagnostics(ctx, sz, support=verblunsky_support(m))
        name = m.describe()
        rows += [[name, r[0], r[1], _num(r[2]), _num(r[3]), _num(r[4])] for r in t.rows]
        md += [f"## {name}", "", f"Szego integral: {sz.szego_integral!r}", "",
               "| quantity | last n | value | reference | gap | gap monotone |", "|---|---|---|---|---|---|"]
        for q in dict.fromkeys(r[1] for r in t.rows):
            last = t.series(q)[-1]
            md.append(f"| {q} | {last[0]} | {last[2]:.10g} | {last[3]:.10g} | {last[4]:.3e} | "
                      f"{'yes' if t.monotone(q) else 'no'} |")
        md.append("")
    _write_csv(out / "diagnostics.csv", ["measure", "n", "quantity", "value", "reference", "gap"], rows)
    (out / "diagnostics.md").write_text("\n".join(md))
    print(f"wrote {out / 'diagnostics.csv'} and {out / 'diagnostics.md'}")
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "favard": cmd_favard, "report": cmd_report}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circleorth", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("--out", help="existing output directory")
    p.add_argument("--n", type=int, help="maximal OLP level N")
    p.add_argument("--tol", type=float, help="judge every identity at this tolerance")
    p.add_argument("--ids", help="comma-separated identity ids; 'PREFIX*' selects a family")
    p.add_argument("--mode", choices=[STRICT, CLOSED], help="Favard admissibility mode")
    p.add_argument("--seed", type=int, help="seed for off-circle sample points")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (AdmissibilityError, MeasureError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
