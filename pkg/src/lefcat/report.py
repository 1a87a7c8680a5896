"""Report documents: canonical JSON plus a plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .layers import FixedMorphismReport
from .lefschetz import LefschetzReport

TOOL = "lefcat"


def report_to_dict(report) -> dict:
    if isinstance(report, LefschetzReport):
        return {
            "kind": "fixed-object",
            "L": report.L,
            "L_R": report.L_R,
            "L_methods": {"chain": report.L_methods[0], "homology": report.L_methods[1]},
            "L_R_methods": {"chain": report.L_R_methods[0], "homology": report.L_R_methods[1]},
            "L_sd": report.L_sd,
            "chi_fixed_subcategory": report.chi_fixed_subcategory,
            "chi_fixed_poset": report.chi_fixed_poset,
            "fixed_objects": list(report.fixed_objects),
            "fixed_morphisms": list(report.fixed_morphisms),
            "strict": report.strict,
            "identities": [{"name": n, "holds": ok} for n, ok in report.identities_checked],
            "holds": report.holds,
        }
    if isinstance(report, FixedMorphismReport):
        return {
            "kind": "fixed-morphism",
            "cutoff": report.cutoff,
            "layered_L": report.layered_L,
            "fixed_chains": {str(k): {"count": report.chain_counts[k],
                                      "witnesses": [list(c) for c in w]}
                             for k, w in sorted(report.fixed_chains_by_length.items())},
            "domain_size": report.domain_size,
            "literal_domain_size": report.literal_domain_size,
            "literal_is_self_map": report.literal_is_self_map,
            "strict": report.strict,
            "holds": report.theorem_holds,
        }
    raise TypeError(f"not a report: {type(report).__name__}")


def report_from_dict(d: dict):
    if d["kind"] == "fixed-object":
        return LefschetzReport(
            d["L"], d["L_R"], d["chi_fixed_subcategory"], d["chi_fixed_poset"],
            tuple(d["fixed_objects"]), d["strict"],
            tuple((i["name"], i["holds"]) for i in d["identities"]),
            (d["L_methods"]["chain"], d["L_methods"]["homology"]),
            (d["L_R_methods"]["chain"], d["L_R_methods"]["homology"]),
            d["L_sd"], tuple(d["fixed_morphisms"]))
    if d["kind"] == "fixed-morphism":
        chains = {int(k): tuple(tuple(c) for c in v["witnesses"])
                  for k, v in d["fixed_chains"].items()}
        counts = {int(k): v["count"] for k, v in d["fixed_chains"].items()}
        return FixedMorphismReport(d["cutoff"], d["layered_L"], chains, counts, d["holds"],
                                   d["domain_size"], d["literal_domain_size"],
                                   d["literal_is_self_map"], d["strict"])
    raise ValueError(f"unknown report kind {d['kind']!r}")


@dataclass
class ReportDoc:
    command: str
    instance: str  # sha256 of the serialized instance
    body: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)
    tool: str = TOOL
    version: str = __version__

    def to_dict(self) -> dict:
        return {"tool": self.tool, "version": self.version, "command": self.command,
                "instance": self.instance, "body": self.body,
                "reports": [report_to_dict(r) for r in self.reports]}

    @classmethod
    def from_dict(cls, d: dict) -> ReportDoc:
        return cls(d["command"], d["instance"], d["body"],
                   [report_from_dict(r) for r in d["reports"]], d["tool"], d["version"])


def dumps(doc: ReportDoc) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> ReportDoc:
    return ReportDoc.from_dict(json.loads(text))


def _render_value(v):
    if isinstance(v, (list, tuple)):
        return "{" + ", ".join(map(str, v)) + "}" if v else "{}"
    return str(v)


def render_text(doc: ReportDoc) -> str:
    lines = [f"{doc.tool} {doc.version} {doc.command}", f"instance {doc.instance[:16]}"]
    for key, value in doc.body.items():
        lines.append(f"{key} = {_render_value(value)}")
    for report in doc.reports:
        d = report_to_dict(report)
        if d["kind"] == "fixed-object":
            lines.append(f"L = {d['L']}  (chain {d['L_methods']['chain']}, "
                         f"homology {d['L_methods']['homology']})")
            lines.append(f"L_R = {d['L_R']}  (chain {d['L_R_methods']['chain']}, "
                         f"homology {d['L_R_methods']['homology']})")
            lines.append(f"L(sd F) = {d['L_sd']}")
            lines.append(f"chi(C^F) = {d['chi_fixed_subcategory']}, "
                         f"chi(R(C)^R(F)) = {d['chi_fixed_poset']}")
            lines.append(f"fixed objects = {_render_value(d['fixed_objects'])}")
            lines.append(f"strict = {d['strict']}")
            for item in d["identities"]:
                lines.append(f"  [{'ok' if item['holds'] else 'FAIL'}] {item['name']}")
        else:
            lines.append(f"cutoff {d['cutoff']}: layered L = {d['layered_L']} "
                         f"(domain {d['domain_size']} elements, one-step deletion "
                         f"{d['literal_domain_size']}"
                         f"{'' if d['literal_is_self_map'] else ', not closed'})")
            for k, v in d["fixed_chains"].items():
                shown = " ".join("(" + ",".join(map(str, c)) + ")" for c in v["witnesses"])
                lines.append(f"  fixed {k}-chains: {v['count']} {shown}".rstrip())
            lines.append(f"  [{'ok' if d['holds'] else 'FAIL'}] fixed chains exist "
                         "whenever layered L != 0")
    return "\n".join(lines) + "\n"
