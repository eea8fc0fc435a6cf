"""Point databases: build, summarize and query.

A database directory holds one file, ``moduli.db``, with a header line, one
record per canonical point sorted by (J2, J4, J6, J10), and a trailing
sha256 checksum line.  Builds run in k shards (J10 ranges) that each write a
checksummed part file under ``parts/``; the merge streams the sorted parts
into the final file and removes them, so the result does not depend on k.
A build that stops early leaves its finished parts behind and resumes from
them.
"""

from __future__ import annotations

import hashlib
import heapq
import os
import random
import shutil
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .autloci import AutClass, classify
from .enumerate import HeightBand, band_of, enumerate_shard, split_shards, unit_bands
from .igusa import BinarySextic
from .reconstruct import ReconstructionError, has_point, reconstruct
from .wpspace import COMPACT, InvalidPointError, WeightedPoint, canonicalize

FORMAT_VERSION = 1
DB_NAME = "moduli.db"
PARTS_DIR = "parts"
_HEADER_TAG = "# wmoduli-db"
_SUM_TAG = "# sha256 "


class DatabaseError(RuntimeError):
    pass


class ChecksumError(DatabaseError):
    pass


class ResumeNeeded(DatabaseError):
    """The directory holds an unfinished build."""


@dataclass(frozen=True)
class ModuliRecord:
    J: tuple
    band: HeightBand
    aut: AutClass
    fine: bool
    sextic: Optional[BinarySextic] = None

    @property
    def key(self) -> tuple:
        return self.J

    def to_line(self) -> str:
        f = ",".join(str(int(a)) for a in self.sextic.coeffs) if self.sextic else "-"
        J2, J4, J6, J10 = self.J
        return f"{J2}|{J4}|{J6}|{J10}|{self.band}|{self.aut}|{int(self.fine)}|{f}"

    @classmethod
    def from_line(cls, line: str) -> "ModuliRecord":
        parts = line.rstrip("\n").split("|")
        if len(parts) != 8:
            raise DatabaseError(f"malformed record: {line!r}")
        J = tuple(int(x) for x in parts[:4])
        sextic = None if parts[7] == "-" else BinarySextic(tuple(int(a) for a in parts[7].split(",")))
        return cls(J, HeightBand.parse(parts[4]), AutClass(parts[5]), parts[6] == "1", sextic)


def make_record(p: WeightedPoint) -> ModuliRecord:
    """Run classify, obstruction test and reconstruction for one canonical point."""
    aut = classify(p)
    try:
        r = reconstruct(p)
        fine, sextic = r.fine, r.curve
    except ReconstructionError:
        # extra automorphisms force fineness even without a stored model
        fine, sextic = aut is not AutClass.C2, None
    return ModuliRecord(p.coords, band_of(p), aut, fine, sextic)


# ---------------------------------------------------------------- file format

def _header(h: int) -> str:
    return f"{_HEADER_TAG} version={FORMAT_VERSION} height={h} weights={COMPACT}\n"


class _Writer:
    """Writes header, records and checksum line; the checksum covers every
    byte before it."""

    def __init__(self, path: Path, h: int):
        self.tmp = path.with_suffix(path.suffix + ".tmp")
        self.path = path
        self.fh = open(self.tmp, "w", encoding="utf-8", newline="\n")
        self.sha = hashlib.sha256()
        self._put(_header(h))

    def _put(self, text: str):
        self.fh.write(text)
        self.sha.update(text.encode("utf-8"))

    def write_line(self, line: str):
        self._put(line + "\n")

    def close(self):
        self.fh.write(f"{_SUM_TAG}{self.sha.hexdigest()}\n")
        self.fh.close()
        os.replace(self.tmp, self.path)


def read_lines(path: Path):
    """(height, record lines) of a checksummed file; raises ChecksumError."""
    data = Path(path).read_bytes()
    body, _, last = data.rstrip(b"\n").rpartition(b"\n")
    last = last.decode("utf-8", "replace")
    if not last.startswith(_SUM_TAG):
        raise ChecksumError(f"{path}: missing checksum line")
    body += b"\n"
    if hashlib.sha256(body).hexdigest() != last[len(_SUM_TAG):]:
        raise ChecksumError(f"{path}: checksum mismatch")
    lines = body.decode("utf-8").splitlines()
    head = lines[0].split()
    if not lines[0].startswith(_HEADER_TAG):
        raise DatabaseError(f"{path}: missing header")
    meta = dict(kv.split("=", 1) for kv in head[2:])
    if int(meta["version"]) != FORMAT_VERSION:
        raise DatabaseError(f"{path}: unsupported format version {meta['version']}")
    return int(meta["height"]), lines[1:]


def _part_path(out: Path, i: int, k: int) -> Path:
    return out / PARTS_DIR / f"shard-{i:04d}-of-{k:04d}.part"


def _part_complete(path: Path, h: int) -> bool:
    try:
        return read_lines(path)[0] == h
    except (OSError, DatabaseError):
        return False


# ---------------------------------------------------------------- build

def _build_shard(args) -> str:
    out, h, k, i = args
    shard = split_shards(h, k)[i]
    path = _part_path(Path(out), i, k)
    path.parent.mkdir(parents=True, exist_ok=True)
    w = _Writer(path, h)
    for p in enumerate_shard(shard):
        w.write_line(make_record(p).to_line())
    w.close()
    return str(w.path)


def max_workers() -> int:
    env = os.environ.get("WMODULI_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("WMODULI_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def _record_key(line: str) -> tuple:
    return tuple(int(x) for x in line.split("|", 4)[:4])


def build_database(h: int, out, shards: int = 1, workers: Optional[int] = None,
                   audit_fraction: float = 0.01) -> Path:
    """Build DIR/moduli.db for all canonical points of height <= h."""
    if h < 1:
        raise ValueError("height bound must be >= 1")
    out = Path(out)
    (out / PARTS_DIR).mkdir(parents=True, exist_ok=True)
    stale = [p for p in (out / PARTS_DIR).glob("*.part") if not p.name.endswith(f"-of-{shards:04d}.part")]
    if stale:
        raise DatabaseError(f"{out} holds parts of a build with a different shard count")
    todo = [i for i in range(shards) if not _part_complete(_part_path(out, i, shards), h)]
    n = min(workers or max_workers(), len(todo)) if todo else 0
    jobs = [(str(out), h, shards, i) for i in todo]
    if n <= 1:
        for j in jobs:
            _build_shard(j)
    else:
        with ProcessPoolExecutor(max_workers=n) as ex:
            list(ex.map(_build_shard, jobs))
    parts = [_part_path(out, i, shards) for i in range(shards)]
    streams = []
    for path in parts:
        ph, lines = read_lines(path)
        if ph != h:
            raise DatabaseError(f"{path} was built for height {ph}, not {h}")
        streams.append(lines)
    db = out / DB_NAME
    w = _Writer(db, h)
    for line in heapq.merge(*streams, key=_record_key):
        w.write_line(line)
    w.close()
    shutil.rmtree(out / PARTS_DIR)
    if audit_fraction:
        bad = audit(db, audit_fraction)
        if bad:
            raise DatabaseError(f"audit found {len(bad)} records that disagree with recomputation")
    return db


# ---------------------------------------------------------------- read path

def _db_file(path) -> Path:
    path = Path(path)
    if path.is_dir():
        if (path / PARTS_DIR).is_dir():
            raise ResumeNeeded(f"{path} holds an unfinished build; rerun build to resume")
        path = path / DB_NAME
    if not path.exists():
        raise DatabaseError(f"no database at {path}")
    return path


def load_records(path):
    """(height bound, list of records) after verifying the checksum."""
    h, lines = read_lines(_db_file(path))
    return h, [ModuliRecord.from_line(line) for line in lines]


def query_point(path, p: WeightedPoint) -> Optional[ModuliRecord]:
    """Record of the canonical form of p, or None if p is not in the database."""
    key = canonicalize(WeightedPoint(p.coords, COMPACT)).coords
    _, lines = read_lines(_db_file(path))
    prefix = "|".join(map(str, key)) + "|"
    for line in lines:
        if line.startswith(prefix):
            return ModuliRecord.from_line(line)
    return None


def audit(path, fraction: float = 0.01, seed: int = 0) -> list:
    """Recompute aut, fine and the curve round trip on a random sample of
    records; returns the keys that disagree."""
    _, records = load_records(path)
    rng = random.Random(seed)
    n = max(1, round(len(records) * fraction)) if records else 0
    bad = []
    for rec in rng.sample(records, n):
        p = WeightedPoint(rec.J, COMPACT)
        fresh = make_record(p)
        ok = fresh.aut == rec.aut and fresh.fine == rec.fine
        if rec.sextic is not None:
            ok = ok and has_point(rec.sextic, p)
        if not ok:
            bad.append(rec.J)
    return bad


# ---------------------------------------------------------------- statistics

def truncate3(r: Fraction) -> str:
    """Render a ratio in [0, 1] to 3 decimals, truncating."""
    k = (r.numerator * 1000) // r.denominator
    return f"{k // 1000}.{k % 1000:03d}"


@dataclass
class BandStats:
    band: HeightBand
    total: int = 0
    aut: Counter = field(default_factory=Counter)
    fine: int = 0

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.fine, self.total) if self.total else Fraction(0)


@dataclass
class SummaryTable:
    height: int
    bands: list

    def render(self) -> str:
        lines = ["band\tpts\taut\tfine\tratio\texact"]
        for b in self.bands:
            auts = ",".join(f"{t}:{b.aut[t]}" for t in AutClass if b.aut[t])
            lines.append(f"{b.band}\t{b.total}\t{{{auts}}}\t{b.fine}\t{truncate3(b.ratio)}\t{b.fine}/{b.total}")
        return "\n".join(lines)


def summarize(records, h: int) -> SummaryTable:
    bands = {str(b): BandStats(b) for b in unit_bands(h)}
    for rec in records:
        s = bands.get(str(rec.band))
        if s is None:
            raise DatabaseError(f"record {rec.J} lies outside the height bound {h}")
        s.total += 1
        s.aut[rec.aut] += 1
        s.fine += rec.fine
    return SummaryTable(h, list(bands.values()))


def summarize_database(path) -> SummaryTable:
    h, records = load_records(path)
    return summarize(records, h)


__all__ = [
    "ModuliRecord", "SummaryTable", "BandStats", "DatabaseError", "ChecksumError",
    "ResumeNeeded", "InvalidPointError", "build_database", "summarize", "summarize_database",
    "query_point", "load_records", "audit", "truncate3", "make_record", "max_workers",
]
