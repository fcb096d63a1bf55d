"""
Human-readable reports.

Verdict lines have the form ``aggregate.<name>: true|false|null`` and
``finding.<name>: <status>`` so they can be parsed back and compared with
the JSON report.
"""

from typing import Dict, List, Optional

import pandas as pd
from colorama import Fore, Style

from classifier import FAIL, NOT_APPLICABLE, PASS, ClassificationReport, VERDICT_NAMES

STATUS_COLORS = {
    PASS: Fore.GREEN,
    FAIL: Fore.RED,
    NOT_APPLICABLE: Fore.YELLOW,
}

VERDICT_SHORT = {
    "flat": "flat",
    "constant_curvature": "const",
    "symmetric": "sym",
    "two_symmetric": "2-sym",
    "semisymmetric": "semi",
    "ricci_flat": "ric0",
    "generic": "generic",
}


def flag(value: Optional[bool]) -> str:
    if value is None:
        return "null"
    return "true" if value else "false"


def _paint(text: str, status: str, color: bool) -> str:
    if not color:
        return text
    return f"{STATUS_COLORS.get(status, '')}{text}{Style.RESET_ALL}"


def _format_point(point) -> str:
    return "(" + ", ".join(f"{x:.4f}" for x in point) + ")"


def _verdict_table(report: ClassificationReport) -> str:
    rows = []
    for result in report.points:
        c = result.classification
        row = {"#": result.index, "point": _format_point(c.point)}
        for name in VERDICT_NAMES:
            row[VERDICT_SHORT[name]] = {True: "T", False: "F", None: "-"}[c.verdict(name)]
        if result.holonomy is not None:
            row["ker"] = result.holonomy.kernel_dimension
            row["null"] = "T" if result.holonomy.contains_null else "F"
        rows.append(row)
    return pd.DataFrame(rows).to_string(index=False)


def _aggregate_lines(report: ClassificationReport) -> List[str]:
    lines = [f"aggregate.{name}: {flag(report.verdict(name))}" for name in VERDICT_NAMES]
    lines += [f"aggregate.k_symmetric_{k}: {flag(v)}" for k, v in sorted(report.k_symmetric.items())]
    return lines


def _holonomy_lines(summary: Optional[Dict]) -> List[str]:
    if summary is None:
        return ["holonomy: not computed (needs order >= 4)"]
    kernel = summary["kernel_dimension"]
    return [
        f"holonomy: algebra dim {summary['algebra_dimension']['min']}..{summary['algebra_dimension']['max']}, "
        f"tangent kernel dim {kernel['min']}..{kernel['max']} "
        f"({', '.join(summary['characters']) or 'none'}), "
        f"Sym2 kernel mod g {summary['sym2_kernel_dimension']['min']}..{summary['sym2_kernel_dimension']['max']}",
        f"holonomy.null_kernel_at_all_points: {flag(summary['null_kernel_at_all_points'])}",
        f"  note: {summary['note']}",
    ]


def _invariant_table(report: ClassificationReport) -> str:
    rows = [{"invariant": name, "max |value|": f"{entry['max_magnitude']:.6e}",
             "vanishes": flag(entry["vanishes_everywhere"]), "points": entry["points"]}
            for name, entry in sorted(report.invariants.items())]
    return pd.DataFrame(rows).to_string(index=False) if rows else "(no invariants)"


def _point_scalars_table(report: ClassificationReport) -> str:
    rows = []
    for result in report.points:
        if result.invariants is None:
            continue
        row = {"#": result.index}
        row.update({name: f"{value:.6e}" for name, value in sorted(result.invariants.scalars.items())})
        rows.append(row)
    return pd.DataFrame(rows).to_string(index=False) if rows else "(no points)"


def _identity_table(report: ClassificationReport) -> List[str]:
    if report.identities is None:
        return []
    rows = [{"identity": name, "holds in": entry["holds_in"], "max residual": f"{entry['max_residual']:.3e}",
             "max scale": f"{entry['max_scale']:.3e}", "pass": flag(entry["passed"]), "points": entry["points"]}
            for name, entry in report.identities.items()]
    skipped = sum(1 for p in report.points if p.identities_skipped)
    lines = [pd.DataFrame(rows).to_string(index=False)] if rows else ["(no point was evaluated)"]
    if skipped:
        lines.append(f"{skipped} points skipped: not classified 2-symmetric (use --force)")
    lines += [f"identity.{name}: {flag(entry['passed'])}" for name, entry in report.identities.items()]
    return lines


def _finding_lines(report: ClassificationReport, color: bool) -> List[str]:
    lines = []
    for finding in report.consistency:
        text = f"finding.{finding.name}: {finding.status}"
        if finding.failed:
            text += f" (witness #{finding.witness_index} at {_format_point(finding.witness)}: {finding.detail})"
        elif finding.applicable_points:
            text += f" ({finding.applicable_points} points)"
        lines.append(_paint(text, finding.status, color))
    return lines


def render_text(report: ClassificationReport, command: str = "classify", color: bool = False) -> str:
    """Report for ``command``; every command includes the aggregate verdicts and findings."""
    spec = report.spec
    lines = [
        f"metric: {spec.name} (dim {spec.dim}, coords {' '.join(spec.coords)})",
        f"points: {len(report.points)} evaluated, {len(report.skipped)} skipped "
        f"(seed {report.config.seed}, order {report.config.order})",
        "",
    ]
    if command == "invariants":
        lines += [_point_scalars_table(report), "", _invariant_table(report)]
    elif command == "identities":
        lines += _identity_table(report)
    elif command == "holonomy":
        lines += _holonomy_lines(report.holonomy)
    else:
        lines += [_verdict_table(report), ""]
        lines += _holonomy_lines(report.holonomy)
    lines.append("")
    lines += _aggregate_lines(report)
    lines.append("")
    lines += _finding_lines(report, color)
    return "\n".join(lines) + "\n"


def render_catalog_list(entries: Dict) -> str:
    rows = [{"name": name, "dim": spec.dim, "verified": flag(spec.metadata.get("verified")),
             "description": spec.metadata.get("description", "")}
            for name, spec in entries.items()]
    return pd.DataFrame(rows).to_string(index=False) + "\n"
