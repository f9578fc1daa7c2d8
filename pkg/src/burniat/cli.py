"""Command line front end.

    burniat tables G0
    burniat classify nodal4 --format json
    burniat pi1 all
    burniat verify --seed 1 --trials 200
    burniat report-all --out report.json

Exit codes: 0 success, 1 a result differs from the published one, 2 usage
error, 3 a numeric residual fell in the ambiguous band.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .actions import Group
from .cases import CASE_IDS
from .numoracle import PrecisionError, Tolerances
from .report import (
    ClassificationReport,
    classify_section,
    isolated_verdicts,
    nodal_section,
    pi1_section,
    tables_section,
    transport_section,
    verify_section,
)
from .search import SearchContext

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    seed: int = 1
    trials: int = 200
    format: str = "text"
    out: str | None = None
    tol_membership: float = 1e-8
    tol_band: float = 1e-4
    tol_cluster: float = 1e-7

    def validate(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be an unsigned 64-bit integer")
        if self.trials < 1:
            raise UsageError("trials must be at least 1")
        if self.format not in ("json", "text"):
            raise UsageError("format must be json or text")
        try:
            self.tolerances()
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def tolerances(self) -> Tolerances:
        return Tolerances(self.tol_membership, self.tol_band, self.tol_cluster)


_KEYS = {f: f for f in RunConfig.__dataclass_fields__}


def load_config(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise UsageError("config must be a JSON object")
    out = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        if name not in _KEYS:
            raise UsageError(f"unknown config key {key!r}")
        out[name] = value
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    values = load_config(args.config) if args.config else {}
    for name in _KEYS:
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    try:
        cfg = RunConfig(**values)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    cfg.validate()
    return cfg


# -- text rendering ---------------------------------------------------------


def _text_tables(s: dict) -> list[str]:
    lines = [f"Elements of {s['group']} with fixed points", "  label  eps0 eta1 eps1 | eta0 eta1 eps2 | zeta0 eta1 eps3  locus"]
    for r in s["rows"]:
        label = "-" if r["label"] is None else r["label"]
        lines.append(f"  {label:>5}  {r['element']:<38}  {r['tag']}")
    lines.append(f"  partition (dim 2, dim 1, isolated): {tuple(s['partition'])}, expected {tuple(s['expected_partition'])}")
    return lines


def _text_classify(s: dict) -> list[str]:
    c = s["constraints"]
    lines = [f"Search: {s['context']}", f"  avoid {len(c['avoid'])} lines: " + " ".join(a["vector"] for a in c["avoid"])]
    if "exactly_one_of" in c:
        lines.append(f"  F-set ({len(c['exactly_one_of'])}): " + " ".join(a["vector"] for a in c["exactly_one_of"]))
    if "candidates_without_f_condition" in s:
        lines.append(f"  homs avoiding the lines: {s['candidates_without_f_condition']}")
    lines.append(f"  subgroups: {len(s['subgroups'])}")
    for i, g in enumerate(s["subgroups"]):
        extra = ""
        if "case" in g:
            extra = f"  case {g['case'] or '?'}  g0 {g['fixed_element']}  {g['family_type']}"
        lines.append(f"   [{i:2}] hom {g['hom']}{extra}")
    lines.append(f"  orbits under swapping curves 1 and 2: {len(s['swap_orbits'])}")
    if "families" in s:
        lines.append("  families: " + ", ".join("{" + ",".join(f) + "}" for f in s["families"]))
    return lines


def _text_nodal(s: dict) -> list[str]:
    lines = ["Fixed points of g0"]
    for cid, c in s["cases"].items():
        mark = ""
        if "matches_published_offsets" in c:
            mark = "  (published offsets: " + ("match" if c["matches_published_offsets"] else "DIFFER") + ")"
        lines.append(
            f"  {cid}: {c['fixed_points_on_T']} on T, {c['on_xhat']} on X, orbits {c['orbit_sizes']}{mark}"
        )
        lines.append("     offsets " + " ".join("".join(map(str, v)) for v in c["lambda_hats"]))
    return lines


def _text_pi1(s: dict) -> list[str]:
    lines = [f"Fundamental groups ({s['labels']} offsets)"]
    for cid, c in s["cases"].items():
        fp = c["fingerprint"]
        status = "ok" if c["matches_published"] else f"published <{c['published_id'][0]},{c['published_id'][1]}>"
        lines.append(
            f"  {cid}: |Gamma/2L| = {c['gamma_mod_2lambda_order']}, |N| = {c['normal_closure_order']}, "
            f"order {c['order']}, <{c['catalog_id'][0]},{c['catalog_id'][1]}> {c['catalog_name']}, "
            f"center {fp['center']}, abelianization {tuple(c['abelian_invariants'])}  [{status}]"
        )
    if "isomorphism_classes" in s:
        lines.append(f"  isomorphism classes: {len(s['isomorphism_classes'])}")
    return lines


def _text_transport(s: dict) -> list[str]:
    lines = ["Curve relabellings"]
    for c in s["checks"]:
        lines.append(f"  {c['source']} -> {c['target']} by {tuple(c['perm'])}: {'ok' if c['ok'] else 'FAILED'}")
    return lines


def _text_verify(s: dict) -> list[str]:
    lines = [f"Numeric oracle, seed {s['seed']}, {s['trials']} trials"]
    for r in s["delpezzo_lemma"]:
        lam = complex(*r["lambda"])
        lines.append(
            f"  eight equations, lambda = {lam:.4g}: max on {r['max_on_residual']:.2e}, "
            f"min off {r['min_off_residual']:.2e}  {'pass' if r['pass'] else 'FAIL'}"
        )
    e = s["element_10"]
    lines.append(f"  element 10: {e['on_xhat']} points on X, {e['on_base_locus']} on the base locus")
    for cid, c in s["cases"].items():
        lines.append(
            f"  {cid}: {c['fixed_points_on_T']}/{c['on_xhat']}/{c['orbits']}"
            f"  {'agrees' if c['agrees_with_exact'] else 'DISAGREES'} with the exact count"
        )
    return lines


def _text_verdicts(s: dict) -> list[str]:
    lines = ["Isolated fixed points meeting X (G0) or the base locus (G1)"]
    for g, v in s["verdicts"].items():
        lines.append(f"  {g}: " + ", ".join(f"{k}:{'yes' if b else 'no'}" for k, b in v.items()))
    return lines


_RENDER = {
    "tables": _text_tables,
    "classify": _text_classify,
    "nodal": _text_nodal,
    "pi1": _text_pi1,
    "pi1_swapped": _text_pi1,
    "transport": _text_transport,
    "verify": _text_verify,
    "isolated": _text_verdicts,
}


def render_text(report: ClassificationReport) -> str:
    lines = []
    for name, section in report.sections.items():
        kind = name.split(":")[0]
        lines.extend(_RENDER[kind](section))
        lines.append(f"  => {'OK' if section.get('ok', True) else 'MISMATCH'}")
        lines.append("")
    lines.append("all checks passed" if report.ok else "some results differ from the published ones")
    return "\n".join(lines) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_tables(args, cfg: RunConfig) -> ClassificationReport:
    groups = [Group(args.group)] if args.group != "all" else list(Group)
    rep = ClassificationReport("tables", asdict(cfg))
    for g in groups:
        rep.sections[f"tables:{g.value}"] = tables_section(g)
    return rep


def cmd_classify(args, cfg: RunConfig) -> ClassificationReport:
    rep = ClassificationReport("classify", asdict(cfg))
    contexts = list(SearchContext) if args.context == "all" else [SearchContext(args.context)]
    for c in contexts:
        rep.sections[f"classify:{c.value}"] = classify_section(c)
    return rep


def cmd_pi1(args, cfg: RunConfig) -> ClassificationReport:
    rep = ClassificationReport("pi1", asdict(cfg))
    cases = CASE_IDS if args.case == "all" else (args.case,)
    rep.sections["pi1"] = pi1_section(cases, args.labels)
    return rep


def cmd_verify(args, cfg: RunConfig) -> ClassificationReport:
    rep = ClassificationReport("verify", asdict(cfg))
    rep.sections["verify"] = verify_section(cfg.seed, cfg.trials, cfg.tolerances())
    return rep


def cmd_report_all(args, cfg: RunConfig) -> ClassificationReport:
    rep = ClassificationReport("report-all", asdict(cfg))
    for g in Group:
        rep.sections[f"tables:{g.value}"] = tables_section(g)
    rep.sections["isolated"] = isolated_verdicts()
    for c in SearchContext:
        rep.sections[f"classify:{c.value}"] = classify_section(c)
    rep.sections["nodal"] = nodal_section()
    rep.sections["pi1"] = pi1_section()
    rep.sections["transport"] = transport_section()
    rep.sections["verify"] = verify_section(cfg.seed, cfg.trials, cfg.tolerances())
    # diagnostic only: excluded from the overall verdict
    swapped = pi1_section(labels="swapped")
    swapped["diagnostic"] = True
    swapped.pop("ok")
    rep.sections["pi1_swapped"] = swapped
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="random seed for the numeric oracle (default 1)")
    common.add_argument("--trials", type=int, help="samples per Del Pezzo check (default 200)")
    common.add_argument("--format", choices=("json", "text"), help="output format (default text)")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--tol-membership", dest="tol_membership", type=float, help="on-surface residual threshold")
    common.add_argument("--tol-band", dest="tol_band", type=float, help="ceiling of the ambiguous residual band")
    common.add_argument("--config", help="JSON file with any of the options above")

    parser = argparse.ArgumentParser(prog="burniat", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="fixed-point tables of the sign-action groups")
    p.add_argument("group", choices=("G0", "G1", "all"))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("classify", parents=[common], help="subgroup searches")
    p.add_argument("context", choices=("primary", "nodal4", "all"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pi1", parents=[common], help="fundamental groups of the 4-nodal cases")
    p.add_argument("case", choices=CASE_IDS + ("all",))
    p.add_argument(
        "--labels",
        choices=("standard", "swapped"),
        default="standard",
        help="read lattice offsets as computed, or with real and tau directions exchanged",
    )
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("verify", parents=[common], help="numeric oracle checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report-all", parents=[common], help="every section in one report")
    p.set_defaults(func=cmd_report_all)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        report = args.func(args, cfg)
    except UsageError as exc:
        print(f"burniat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"burniat: numeric ambiguity: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = report.to_json() if cfg.format == "json" else render_text(report)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
