"""Self-describing certification reports shared by every module and the CLI.

Reports are plain data: a kind, the input descriptor, a verdict, exact
values rendered as decimal/fraction strings, explicit witnesses for any
failure, and per-stage timings.  JSON output sorts keys, so two runs on
the same input are byte-identical except for the timings field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

ARTIFACT_VERSION = "0.1.0"
REPORT_SCHEMA = "darcais-report/1"


@dataclass
class CertReport:
    """Outcome of one certification task.

    kind        one of "identity", "roots", "pf", "shape", "poly"
    target      what was examined, e.g. {"n": 10} or {"coeffs": "2 2 1"}
    verdict     "pass" or "fail" (commands map this to exit codes)
    details     kind-specific exact values, everything big as strings
    witnesses   machine-readable evidence for a failure (never empty on fail
                unless a search was explicitly exhausted, which the details
                then say)
    timings     seconds per stage; excluded from determinism comparisons
    """

    kind: str
    target: dict[str, Any]
    verdict: str
    details: dict[str, Any] = field(default_factory=dict)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    schema: str = REPORT_SCHEMA
    version: str = ARTIFACT_VERSION

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": self.schema,
            "version": self.version,
            "kind": self.kind,
            "target": self.target,
            "verdict": self.verdict,
            "details": self.details,
            "witnesses": self.witnesses,
        }
        if include_timings:
            out["timings"] = self.timings
        return out

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(
            self.to_dict(include_timings=include_timings),
            sort_keys=True,
            separators=(",", ":"),
        )
