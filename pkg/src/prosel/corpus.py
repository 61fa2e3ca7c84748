"""Corpus ingestion, validation, and the versioned binary index.

Corpus files are UTF-8 JSON Lines with fields exactly
``{"id", "text", "tree", "cwe", "acoustic"}``. The binary index persists
the validated records plus the precomputed distance-vector cache and the
fitted acoustic projection, so selection never re-derives anything at
query time. All numbers are stored as little-endian 64-bit floats and the
file ends with a CRC-32 of everything before it.
"""

from __future__ import annotations

import json
import math
import struct
import zlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CorpusError, IndexFormatError, TreeParseError
from .projection import Projector
from .similarity import SentenceRepr
from .syndist import distance_vector
from .trees import ParseTree, parse_tree, serialize_tree

MAGIC = b"PSEL"
FORMAT_VERSION = 1

CORPUS_FIELDS = {"id", "text", "tree", "cwe", "acoustic"}


@dataclass(frozen=True)
class CorpusRecord:
    """One training utterance with its cached distance vector."""

    id: str
    text: str
    tree: ParseTree
    cwe: np.ndarray
    acoustic: np.ndarray
    syndist: tuple[int, ...]

    def __post_init__(self):
        for name in ("cwe", "acoustic"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "syndist", tuple(self.syndist))

    @property
    def repr(self) -> SentenceRepr:
        return SentenceRepr(cwe=self.cwe, syndist=self.syndist)


@dataclass(eq=False)
class Corpus:
    """Immutable-after-build record collection with uniform dimensions."""

    records: tuple[CorpusRecord, ...]
    d_cwe: int
    d_ac: int
    projector: Projector | None = None
    _by_id: dict[str, CorpusRecord] = field(init=False, repr=False)

    def __post_init__(self):
        self.records = tuple(self.records)
        self._by_id = {r.id: r for r in self.records}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def by_id(self, record_id: str) -> CorpusRecord:
        return self._by_id[record_id]

    def acoustic_matrix(self) -> np.ndarray:
        return np.stack([r.acoustic for r in self.records])


def _validate_vector(raw, name: str, where: str) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise CorpusError(f"{where}: {name} must be a non-empty number array")
    values = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise CorpusError(f"{where}: {name} contains a non-number: {v!r}")
        if not math.isfinite(v):
            raise CorpusError(f"{where}: {name} contains a non-finite value")
        values.append(float(v))
    return np.asarray(values, dtype=np.float64)


def _record_from_row(row: dict, where: str) -> CorpusRecord:
    if not isinstance(row, dict):
        raise CorpusError(f"{where}: expected a JSON object")
    missing = CORPUS_FIELDS - row.keys()
    extra = row.keys() - CORPUS_FIELDS
    if missing:
        raise CorpusError(f"{where}: missing fields: {sorted(missing)}")
    if extra:
        raise CorpusError(f"{where}: unexpected fields: {sorted(extra)}")
    record_id = row["id"]
    if not isinstance(record_id, str) or not record_id:
        raise CorpusError(f"{where}: id must be a non-empty string")
    where_id = f'record "{record_id}" ({where})'
    if not isinstance(row["text"], str):
        raise CorpusError(f"{where_id}: text must be a string")
    if not isinstance(row["tree"], str):
        raise CorpusError(f"{where_id}: tree must be a bracketed string")
    try:
        tree = parse_tree(row["tree"])
    except TreeParseError as err:
        raise CorpusError(f"{where_id}: unparseable tree: {err}") from err
    cwe = _validate_vector(row["cwe"], "cwe", where_id)
    acoustic = _validate_vector(row["acoustic"], "acoustic", where_id)
    return CorpusRecord(
        id=record_id,
        text=row["text"],
        tree=tree,
        cwe=cwe,
        acoustic=acoustic,
        syndist=tuple(distance_vector(tree)),
    )


def corpus_from_rows(rows, source: str = "<memory>") -> Corpus:
    """Validate row dicts (in order) and build the corpus with its cache."""
    records: list[CorpusRecord] = []
    seen: dict[str, int] = {}
    d_cwe = d_ac = None
    for lineno, row in rows:
        where = f"{source}:{lineno}" if lineno else source
        record = _record_from_row(row, where)
        if record.id in seen:
            raise CorpusError(
                f'duplicate id "{record.id}" on lines '
                f"{seen[record.id]} and {lineno}"
            )
        seen[record.id] = lineno
        if d_cwe is None:
            d_cwe, d_ac = record.cwe.size, record.acoustic.size
        else:
            if record.cwe.size != d_cwe:
                raise CorpusError(
                    f'record "{record.id}" ({where}): cwe dimension '
                    f"mismatch: expected {d_cwe}, found {record.cwe.size}"
                )
            if record.acoustic.size != d_ac:
                raise CorpusError(
                    f'record "{record.id}" ({where}): acoustic dimension '
                    f"mismatch: expected {d_ac}, found {record.acoustic.size}"
                )
        records.append(record)
    if not records:
        raise CorpusError(f"{source}: corpus has no records")
    return Corpus(records=tuple(records), d_cwe=d_cwe, d_ac=d_ac)


def ingest(path) -> Corpus:
    """Read and validate a JSONL corpus file; precompute distance vectors."""
    path = Path(path)
    if not path.is_file():
        raise CorpusError(f"corpus file not found: {path}")
    rows = []
    for lineno, line in enumerate(path.read_text("utf-8").splitlines(), 1):
        try:
            rows.append((lineno, json.loads(line)))
        except json.JSONDecodeError as err:
            raise CorpusError(
                f"{path.name}:{lineno}: invalid JSON: {err.msg}"
            ) from err
    return corpus_from_rows(rows, source=path.name)


def _pack_str(value: str) -> bytes:
    data = value.encode("utf-8")
    return struct.pack("<I", len(data)) + data


def _pack_f64(values: np.ndarray) -> bytes:
    return np.ascontiguousarray(values, dtype="<f8").tobytes()


def index_bytes(corpus: Corpus) -> bytes:
    """Serialize a corpus (and its projector, if fitted) to index bytes."""
    parts = [
        MAGIC,
        struct.pack(
            "<HIIQ", FORMAT_VERSION, corpus.d_cwe, corpus.d_ac, len(corpus)
        ),
    ]
    for record in corpus:
        parts.append(_pack_str(record.id))
        parts.append(_pack_str(record.text))
        parts.append(_pack_str(serialize_tree(record.tree)))
        parts.append(_pack_f64(record.cwe))
        parts.append(_pack_f64(record.acoustic))
        parts.append(struct.pack("<I", len(record.syndist)))
        parts.append(
            np.asarray(record.syndist, dtype="<u4").tobytes()
        )
    projector = corpus.projector
    if projector is None:
        parts.append(struct.pack("<B", 0))
    else:
        parts.append(struct.pack("<B", 1))
        parts.append(_pack_f64(projector.mean))
        parts.append(_pack_f64(projector.components))
        parts.append(_pack_f64(projector.explained_variance))
        parts.append(struct.pack("<d", projector.normalizer))
    payload = b"".join(parts)
    return payload + struct.pack("<I", zlib.crc32(payload))


def save_index(corpus: Corpus, path) -> None:
    Path(path).write_bytes(index_bytes(corpus))


class _Reader:
    """Cursor over index bytes; any overrun means a truncated file."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, count: int) -> bytes:
        if self.pos + count > len(self.data):
            raise IndexFormatError("truncated index file")
        chunk = self.data[self.pos : self.pos + count]
        self.pos += count
        return chunk

    def unpack(self, fmt: str):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def take_str(self) -> str:
        (length,) = self.unpack("<I")
        return self.take(length).decode("utf-8")

    def take_f64(self, count: int) -> np.ndarray:
        arr = np.frombuffer(self.take(8 * count), dtype="<f8").copy()
        arr.setflags(write=False)
        return arr


def load_index(path) -> Corpus:
    """Load an index written by save_index, verifying the checksum."""
    path = Path(path)
    if not path.is_file():
        raise IndexFormatError(f"index file not found: {path}")
    data = path.read_bytes()
    if len(data) < len(MAGIC) + 4:
        raise IndexFormatError("truncated index file")
    if data[: len(MAGIC)] != MAGIC:
        raise IndexFormatError(
            "not a PSEL index: bad magic bytes (version error)"
        )
    (stored_crc,) = struct.unpack("<I", data[-4:])
    if zlib.crc32(data[:-4]) != stored_crc:
        raise IndexFormatError("index checksum failure (corrupt or truncated)")
    reader = _Reader(data[:-4])
    reader.take(len(MAGIC))
    version, d_cwe, d_ac, count = reader.unpack("<HIIQ")
    if version != FORMAT_VERSION:
        raise IndexFormatError(
            f"unsupported index format version {version} "
            f"(expected {FORMAT_VERSION})"
        )
    records = []
    for _ in range(count):
        record_id = reader.take_str()
        text = reader.take_str()
        tree_text = reader.take_str()
        cwe = reader.take_f64(d_cwe)
        acoustic = reader.take_f64(d_ac)
        (n_dist,) = reader.unpack("<I")
        syndist = tuple(
            int(v)
            for v in np.frombuffer(reader.take(4 * n_dist), dtype="<u4")
        )
        try:
            tree = parse_tree(tree_text)
        except TreeParseError as err:
            raise IndexFormatError(
                f'corrupt tree for record "{record_id}": {err}'
            ) from err
        records.append(
            CorpusRecord(
                id=record_id,
                text=text,
                tree=tree,
                cwe=cwe,
                acoustic=acoustic,
                syndist=syndist,
            )
        )
    (has_projector,) = reader.unpack("<B")
    projector = None
    if has_projector:
        mean = reader.take_f64(d_ac)
        components = reader.take_f64(2 * d_ac).reshape(2, d_ac)
        components.setflags(write=False)
        explained = reader.take_f64(2)
        (normalizer,) = reader.unpack("<d")
        projector = Projector(
            mean=mean,
            components=components,
            explained_variance=explained,
            normalizer=normalizer,
        )
    if reader.pos != len(reader.data):
        raise IndexFormatError("trailing bytes after index payload")
    corpus = Corpus(records=tuple(records), d_cwe=d_cwe, d_ac=d_ac)
    corpus.projector = projector
    return corpus
