"""Verification report records and deterministic JSON / CSV emitters."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import __version__

SCHEMA_VERSION = 1


def fmt_exact(value) -> str:
    """Exact rationals always render as ``"p/q"``."""
    v = Fraction(value)
    return f"{v.numerator}/{v.denominator}"


def fmt_float(value: float) -> str:
    return format(float(value), ".17g")


@dataclass
class ClaimRecord:
    claim_id: str
    anchor: str
    expected: Any
    computed: Any
    tolerance: float | None
    passed: bool
    note: str = ""

    def __post_init__(self):
        if not self.anchor:
            raise ValueError(f"claim {self.claim_id} needs a nonempty anchor")
        self.passed = bool(self.passed)


@dataclass
class VerificationReport:
    config: dict
    claims: list[ClaimRecord] = field(default_factory=list)
    version: str = __version__

    def add(self, *args, **kwargs) -> ClaimRecord:
        rec = ClaimRecord(*args, **kwargs)
        self.claims.append(rec)
        return rec

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "toolkit_version": self.version,
            "config": self.config,
            "overall": "pass" if self.passed else "fail",
            "claims": [asdict(c) for c in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        width = max((len(c.claim_id) for c in self.claims), default=0)
        lines = []
        for c in self.claims:
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark}  {c.claim_id:<{width}}  expected={c.expected}  computed={c.computed}"
            if c.tolerance is not None:
                line += f"  tol={c.tolerance:g}"
            lines.append(line)
            if c.note:
                lines.append(f"      {c.note}")
        n_ok = sum(c.passed for c in self.claims)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({n_ok}/{len(self.claims)} claims)")
        return "\n".join(lines) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write UTF-8 text with LF endings via a temp file and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) for v in row])
    return buf.getvalue()
