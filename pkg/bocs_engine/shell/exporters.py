from __future__ import annotations

import json

from bocs_engine.reduce import ARQuiver, ReductionLog

LOG_HEADER = ("step", "number of vertices", "number of arrows")


def emit_log_table(log: ReductionLog, grouped: bool = False) -> str:
    """An aligned text table with one row per move, starting with the initial bocs.

    Args:
        log: The reduction log.
        grouped: Collapse runs of regularisations into one row.
    """
    rows = (log.grouped() if grouped else log).rows
    body = [(r.move, str(r.vertices), str(r.arrows)) for r in rows]
    widths = [max([len(h)] + [len(row[k]) for row in body]) for k, h in enumerate(LOG_HEADER)]

    def _line(cells) -> str:
        return "  ".join(
            [cells[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        ).rstrip()

    lines = [_line(LOG_HEADER)] + [_line(row) for row in body]
    return "\n".join(lines) + "\n"


def emit_log_json(log: ReductionLog) -> str:
    """The log as a JSON array of ``{step, move, vertices, arrows}`` records."""
    return json.dumps(log.to_records(), indent=2) + "\n"


def emit_dot(arq: ARQuiver) -> str:
    return arq.to_dot()
