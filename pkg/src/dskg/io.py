"""CSV output, JSON manifests and key=value config files.

CSV bodies use 17 significant digits so every double round-trips exactly.
Each manifest records the tool version, the run configuration and its
SHA-256 hash, and a hash of every file written by the run.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from datetime import datetime, timezone
from pathlib import Path

from .errors import ValidationError

VERSION = "0.1.0"


def format_value(v):
    """17 significant digits for floats, str() for everything else."""
    if isinstance(v, float):
        return format(v, ".17g") if math.isfinite(v) else str(v)
    return str(v)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_value(v if not hasattr(v, "item") else v.item()) for v in row])
    return buf.getvalue()


def write_csv(path, header, rows) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(csv_text(header, rows))
    return path


def read_csv(path):
    """Header and rows (as strings) of a CSV written by :func:`write_csv`."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def config_hash(config: dict) -> str:
    """SHA-256 of the canonical JSON form of a configuration."""
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()


def file_hash(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(path, config: dict, outputs=(), summary=None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    manifest = {
        "tool": "dskg",
        "version": VERSION,
        "created": datetime.now(timezone.utc).isoformat(),
        "config": config,
        "config_hash": config_hash(config),
        "outputs": {Path(p).name: file_hash(p) for p in outputs},
    }
    if summary is not None:
        manifest["summary"] = summary
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True, default=str) + "\n")
    return path


def verify_manifest(path) -> bool:
    """True if the stored hashes match the config and every listed output."""
    path = Path(path)
    m = json.loads(path.read_text())
    if config_hash(m["config"]) != m["config_hash"]:
        return False
    return all(file_hash(path.parent / name) == h for name, h in m["outputs"].items())


def parse_config_text(text: str) -> dict:
    """Flat ``key = value`` lines; '#' starts a comment; values stay strings."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ValidationError(f"config line {lineno}: empty key")
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def read_config_file(path) -> dict:
    try:
        return parse_config_text(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read config file {path}: {exc}") from exc
