"""On-disk cache of a_ell values.

File layout (little-endian)::

    header  : magic b"TWAP" (4 bytes), p (u64), ell_max (u64)
    records : (ell u64, a i64) pairs, ascending in ell, every prime <= ell_max

The directory comes from ``TWINCURVE_CACHE_DIR``; no variable, no cache.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path

import numpy as np

MAGIC = b"TWAP"
HEADER = struct.Struct("<4sQQ")
RECORD = np.dtype([("ell", "<u8"), ("a", "<i8")])
ENV_VAR = "TWINCURVE_CACHE_DIR"


def cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def cache_path(directory: Path, p: int, ell_max: int) -> Path:
    return Path(directory) / f"ap_{p}_{ell_max}.bin"


def write_ap(path, p: int, ell_max: int, ells: np.ndarray, values: np.ndarray) -> None:
    path = Path(path)
    rec = np.empty(len(ells), dtype=RECORD)
    rec["ell"] = ells
    rec["a"] = values
    tmp = path.with_suffix(".tmp")
    with open(tmp, "wb") as fh:
        fh.write(HEADER.pack(MAGIC, p, ell_max))
        fh.write(rec.tobytes())
    os.replace(tmp, path)


def read_ap(path) -> tuple[int, int, np.ndarray, np.ndarray]:
    """Return ``(p, ell_max, ells, values)``; raises ValueError on a bad file."""
    raw = Path(path).read_bytes()
    if len(raw) < HEADER.size:
        raise ValueError(f"{path}: truncated header")
    magic, p, ell_max = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}")
    body = raw[HEADER.size :]
    if len(body) % RECORD.itemsize:
        raise ValueError(f"{path}: truncated record")
    rec = np.frombuffer(body, dtype=RECORD)
    ells = rec["ell"].astype(np.int64)
    if len(ells) and (np.any(np.diff(ells) <= 0) or ells[-1] > ell_max):
        raise ValueError(f"{path}: records not sorted or out of range")
    return p, ell_max, ells, rec["a"].astype(np.int64)


def lookup(p: int, ell_max: int):
    """Cached ``(ells, values)`` covering every prime <= ell_max, or None."""
    d = cache_dir()
    if d is None or not d.is_dir():
        return None
    best = None
    for path in d.glob(f"ap_{p}_*.bin"):
        try:
            stored = int(path.stem.rsplit("_", 1)[1])
        except ValueError:
            continue
        if stored >= ell_max and (best is None or stored < best[0]):
            best = (stored, path)
    if best is None:
        return None
    try:
        fp, _, ells, values = read_ap(best[1])
    except (OSError, ValueError):
        return None
    if fp != p:
        return None
    keep = ells <= ell_max
    return ells[keep], values[keep]


def store(p: int, ell_max: int, ells, values) -> None:
    d = cache_dir()
    if d is None:
        return
    d.mkdir(parents=True, exist_ok=True)
    write_ap(cache_path(d, p, ell_max), p, ell_max, ells, values)
