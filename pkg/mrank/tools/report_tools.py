import json
import logging
from typing import Optional

import jsonschema

from ..models.enums import RankMode
from ..models.multirank_profile import MultirankProfile, ProfileEntry
from ..models.report import MultirankReport, ReportEntry, ReportLevel, ReportVerdict
from ..models.state_tensor import StateTensor
from ..models.verdict import EntanglementVerdict
from ..sample_files.validation_schema import multirank_report_v1
from . import flatten_tools, partition_tools, profile_tools

ShownEntry = tuple[ProfileEntry, Optional[ProfileEntry]]


def format_profile(ranks: list[list[int]]) -> str:
    """Nested-brace form, e.g. {{2, 2, 2, 2}, {2, 4, 4, 4, 4, 2}}."""
    return "{" + ", ".join("{" + ", ".join(str(r) for r in level) + "}" for level in ranks) + "}"


def shown_levels(profile: MultirankProfile, dedupe: bool = False) -> list[list[ShownEntry]]:
    """Entries to report per level, with the complementary partner each one stands for."""
    shown = []
    for level in profile.levels:
        if not dedupe:
            shown.append([(entry, None) for entry in level])
            continue
        by_subset = {entry.bipartition.subset: entry for entry in level}
        kept = partition_tools.dedupe_level([entry.bipartition for entry in level])
        shown.append(
            [
                (by_subset[b.subset], by_subset[partner.subset] if partner else None)
                for b, partner in kept
            ]
        )
    return shown


def _generic_note(profile: MultirankProfile) -> Optional[str]:
    bound = profile_tools.max_failure_bound(profile)
    if bound is None:
        return None
    policy = profile.policy
    return (
        f"note: generic ranks, {policy.trials} trial(s) over GF({policy.prime})[i]; "
        "the verdict holds outside a measure-zero set of parameter values; "
        f"failure probability per matrix at most {float(bound):.3g}"
    )


def _dense_rows(state: StateTensor, entry: ProfileEntry) -> list[list[str]]:
    return flatten_tools.flatten(state, entry.bipartition).to_dense_strings()


def format_text_report(
    state: StateTensor,
    profile: MultirankProfile,
    verdict: Optional[EntanglementVerdict] = None,
    dedupe: bool = False,
    dump_matrices: bool = False,
) -> str:
    levels = shown_levels(profile, dedupe)
    lines = [format_profile([[entry.rank for entry, _ in level] for level in levels])]
    if verdict is not None:
        qualifier = " (generic)" if verdict.generic else ""
        lines.append(f"verdict: {verdict.describe()}{qualifier}")
    note = _generic_note(profile)
    if note:
        lines.append(note)
    for level in levels:
        pairs = [
            f"{kept.bipartition.label}~{partner.bipartition.label}"
            for kept, partner in level
            if partner
        ]
        if pairs:
            ell = level[0][0].bipartition.ell
            lines.append(f"note: level {ell} deduplicated: {', '.join(pairs)}")
    if dump_matrices:
        for level in levels:
            for entry, _ in level:
                rows = _dense_rows(state, entry)
                lines.append(
                    f"matrix {entry.bipartition.label} ({len(rows)}x{len(rows[0])}):"
                )
                lines.extend(f"  [{', '.join(row)}]" for row in rows)
    return "\n".join(lines)


def _report_entry(
    state: StateTensor,
    entry: ProfileEntry,
    partner: Optional[ProfileEntry],
    dump_matrices: bool,
) -> ReportEntry:
    result = entry.result
    return ReportEntry(
        label=entry.bipartition.label,
        subset=list(entry.bipartition.subset),
        complement=list(entry.bipartition.complement),
        rank=result.value,
        mode=result.mode.value,
        prime=result.prime,
        trials=result.trials if result.mode == RankMode.GENERIC else None,
        certainty=result.certainty.value,
        failure_bound=str(result.failure_bound) if result.failure_bound is not None else None,
        paired_with=partner.bipartition.label if partner else None,
        matrix=_dense_rows(state, entry) if dump_matrices else None,
    )


def build_structured_report(
    state: StateTensor,
    profile: MultirankProfile,
    verdict: Optional[EntanglementVerdict] = None,
    dedupe: bool = False,
    dump_matrices: bool = False,
) -> MultirankReport:
    levels = [
        ReportLevel(
            ell=level[0][0].bipartition.ell,
            entries=[
                _report_entry(state, entry, partner, dump_matrices)
                for entry, partner in level
            ],
        )
        for level in shown_levels(profile, dedupe)
    ]
    report_verdict = None
    if verdict is not None:
        report_verdict = ReportVerdict(
            gme=verdict.gme,
            fully_product=verdict.fully_product,
            product_cuts=[cut.label for cut in verdict.product_cuts],
            generic=verdict.generic,
        )
    return MultirankReport(
        dims=list(profile.dims.dims),
        policy=profile.policy.to_string(),
        seed=profile.policy.seed,
        profile=profile.ranks(),
        levels=levels,
        verdict=report_verdict,
    )


def validate_report(
    report_obj: dict, report_schema=multirank_report_v1.multirank_report_v1_schema_string
) -> bool:
    if not report_schema or not report_obj:
        return False
    try:
        jsonschema.validate(instance=report_obj, schema=report_schema)
    except jsonschema.ValidationError as e:
        logging.error(RuntimeError(str(e)))
        return False
    return True


def format_structured_report(
    state: StateTensor,
    profile: MultirankProfile,
    verdict: Optional[EntanglementVerdict] = None,
    dedupe: bool = False,
    dump_matrices: bool = False,
) -> str:
    """JSON report, validated against the bundled report schema.

    Returns:
        str: indented JSON document
    """
    report = build_structured_report(state, profile, verdict, dedupe, dump_matrices)
    report_obj = report.model_dump(mode="json")
    if not validate_report(report_obj):
        raise RuntimeError("generated report does not match the report schema")
    return json.dumps(report_obj, indent=2)


def parse_structured_report(text: str) -> MultirankReport:
    """Read a structured report back, checking it against the report schema."""
    report_obj = json.loads(text)
    if not validate_report(report_obj):
        raise ValueError("document is not a valid multirank report")
    return MultirankReport.model_validate(report_obj)
