"""Deterministic text output: 17-significant-digit CSV, versioned JSON, atomic writes."""

from __future__ import annotations

import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from trabound import __version__


def fmt_float(v: float) -> str:
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.16e}"


def fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    return str(v)


def plain(obj):
    """numpy scalars and arrays to JSON-friendly Python values."""
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [plain(v) for v in obj.tolist()]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        obj = float(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def provenance(config_dict: dict | None, **extra) -> dict:
    out = {"tool": "trabound", "version": __version__}
    if config_dict is not None:
        out["config"] = config_dict
    out.update(extra)
    return plain(out)


def to_json(schema: str, payload: dict, prov: dict) -> str:
    doc = {"schema": schema, "provenance": prov}
    doc.update(plain(payload))
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def to_csv(header: list[str], rows: list[list], prov: dict | None = None) -> str:
    lines = []
    if prov is not None:
        lines.append("# " + json.dumps(prov, separators=(",", ":"), sort_keys=True))
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(fmt_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def read_csv_provenance(text: str) -> dict | None:
    first = text.splitlines()[0] if text else ""
    if first.startswith("# "):
        return json.loads(first[2:])
    return None


def write_text(path: str | os.PathLike | None, text: str) -> None:
    """Write atomically (temp file in the same directory, then rename); None means stdout."""
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
