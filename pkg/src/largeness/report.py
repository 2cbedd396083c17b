"""Claim summaries, exit codes and atomic JSON output."""
from __future__ import annotations

import json
import os
import tempfile
from typing import Sequence

from .claims import INCONCLUSIVE, VERIFIED, VIOLATED, ClaimOutcome

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


def exit_code(outcomes: Sequence[ClaimOutcome]) -> int:
    statuses = {o.status for o in outcomes}
    if VIOLATED in statuses:
        return EXIT_VIOLATION
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def export_report(outcomes: Sequence[ClaimOutcome], name: str = "") -> tuple[dict, str]:
    """JSON payload plus a human summary with one line per claim."""
    ordered = sorted(outcomes, key=lambda o: o.id)
    ok = sum(o.status == VERIFIED for o in ordered)
    lines = [f"{o.id} [{o.kind}] {o.status}: {o.detail}" for o in ordered]
    lines.append(f"claims: {ok}/{len(ordered)} verified" if ordered else "no claims")
    payload = {
        "construction": name,
        "claims": [o.to_json() for o in ordered],
        "verified": str(ok),
        "total": str(len(ordered)),
        "exit_code": str(exit_code(ordered)),
    }
    return payload, "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_atomic(path, text: str | bytes) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = os.fspath(path)
    folder = os.path.dirname(os.path.abspath(path))
    mode = "wb" if isinstance(text, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
