"""Benchmark harness: corpus runs, recompression chains, redundancy analysis.

The harness compresses each corpus file, verifies the round trip bit for
bit, and reports size and timing metrics. Nothing is reported as a success
unless its round trip held. The "price of economy" metric divides the
compression time by the bytes it freed, so machine-dependent timings become
comparable across letter widths on the same machine.

Reports are emitted as CSV (fixed column order, see CSV_COLUMNS) or as
aligned text. The Canterbury corpus is read from a local directory; see
scripts/fetch_corpus.py for obtaining it.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path

from . import container
from .codebook import code_length, code_set_for_alphabet, signature_total

# Canonical file set, in the corpus' conventional order.
CANTERBURY_FILES = (
    "alice29.txt",
    "asyoulik.txt",
    "cp.html",
    "fields.c",
    "grammar.lsp",
    "kennedy.xls",
    "lcet10.txt",
    "plrabn12.txt",
    "ptt5",
    "sum",
    "xargs.1",
)

CANTERBURY_URL = "http://corpus.canterbury.ac.nz/resources/cantrbry.zip"

CSV_COLUMNS = (
    "file",
    "original_bytes",
    "L",
    "compressed_bytes",
    "alphabet_bytes",
    "bits_per_byte",
    "percent",
    "encode_ms",
    "decode_ms",
    "price_of_economy",
)

TOTAL_LABEL = "TOTAL"


@dataclass(frozen=True)
class FileReport:
    name: str
    original_bytes: int
    letter_bits: int
    compressed_bytes: int
    alphabet_bytes: int
    bits_per_byte: float
    percent: float
    encode_ms: float
    decode_ms: float
    roundtrip_ok: bool
    price_of_economy: float | None


@dataclass(frozen=True)
class RecompressReport:
    name: str
    original_bytes: int
    first_bytes: int
    chained: dict[int, int]


@dataclass(frozen=True)
class RedundancyRow:
    letter_bits: int
    m: int
    min_len: int
    max_len: int
    redundancy_pct: float


def price_of_economy(time_ms: float, original_bytes: int,
                     compressed_bytes: int) -> float | None:
    """Milliseconds spent per byte freed; None when nothing changed size."""
    saved = original_bytes - compressed_bytes
    if saved == 0:
        return None
    return time_ms / saved


def price_change_percent(price_from: float | None,
                         price_to: float | None) -> float | None:
    """Relative change of the price of economy between two runs, in percent.

    Undefined (None) when either price is undefined or the baseline is zero.
    The numeric value is machine-dependent; it is reported, never asserted.
    """
    if price_from is None or price_to is None or price_from == 0:
        return None
    return (price_to / price_from - 1.0) * 100.0


def bench_file(path: Path, letter_bits: int, *,
               compress_alphabet: bool = False) -> FileReport:
    """Compress, verify the round trip, and measure one file."""
    data = path.read_bytes()
    t0 = time.perf_counter()
    blob = container.compress(data, letter_bits,
                              compress_alphabet=compress_alphabet)
    t1 = time.perf_counter()
    restored = container.decompress(blob)
    t2 = time.perf_counter()
    encode_ms = (t1 - t0) * 1000.0
    decode_ms = (t2 - t1) * 1000.0
    info = container.describe(blob, decode_payload=False)
    original = len(data)
    compressed = len(blob)
    return FileReport(
        name=path.name,
        original_bytes=original,
        letter_bits=letter_bits,
        compressed_bytes=compressed,
        alphabet_bytes=info.alphabet_block_bytes,
        bits_per_byte=compressed / original * 8 if original else 0.0,
        percent=compressed / original * 100 if original else 0.0,
        encode_ms=encode_ms,
        decode_ms=decode_ms,
        roundtrip_ok=restored == data,
        price_of_economy=price_of_economy(encode_ms, original, compressed),
    )


def _totals_row(reports: list[FileReport], letter_bits: int) -> FileReport:
    group = [r for r in reports if r.letter_bits == letter_bits]
    original = sum(r.original_bytes for r in group)
    compressed = sum(r.compressed_bytes for r in group)
    encode_ms = sum(r.encode_ms for r in group)
    return FileReport(
        name=TOTAL_LABEL,
        original_bytes=original,
        letter_bits=letter_bits,
        compressed_bytes=compressed,
        alphabet_bytes=sum(r.alphabet_bytes for r in group),
        bits_per_byte=compressed / original * 8 if original else 0.0,
        percent=compressed / original * 100 if original else 0.0,
        encode_ms=encode_ms,
        decode_ms=sum(r.decode_ms for r in group),
        roundtrip_ok=all(r.roundtrip_ok for r in group),
        price_of_economy=price_of_economy(encode_ms, original, compressed),
    )


def run_corpus(directory: str | Path,
               letter_bits_values: tuple[int, ...] = (8, 16), *,
               files: tuple[str, ...] = CANTERBURY_FILES,
               compress_alphabet: bool = False,
               jobs: int = 1) -> tuple[list[FileReport], list[FileReport], list[str]]:
    """Benchmark every corpus file at every letter width.

    Returns (per-file reports, one totals row per width, missing files).
    Missing files are skipped and reported; present files still run.
    """
    directory = Path(directory)
    present = [f for f in files if (directory / f).is_file()]
    missing = [f for f in files if f not in present]
    tasks = [(directory / f, bits) for bits in letter_bits_values for f in present]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_bench_star, [
                (path, bits, compress_alphabet) for path, bits in tasks
            ]))
    else:
        reports = [bench_file(path, bits, compress_alphabet=compress_alphabet)
                   for path, bits in tasks]
    totals = [_totals_row(reports, bits) for bits in letter_bits_values]
    return reports, totals, missing


def _bench_star(args) -> FileReport:
    path, bits, compress_alphabet = args
    return bench_file(path, bits, compress_alphabet=compress_alphabet)


def run_recompress(directory: str | Path, first_bits: int = 8,
                   second_bits: tuple[int, ...] = (3, 6, 9), *,
                   files: tuple[str, ...] = CANTERBURY_FILES,
                   ) -> tuple[list[RecompressReport], RecompressReport, list[str]]:
    """Compress at one width, then compress each result again at others.

    Chained sizes may exceed the single-pass size; that is data, not an
    error. Returns (rows, totals row, missing files).
    """
    directory = Path(directory)
    rows = []
    missing = []
    for name in files:
        path = directory / name
        if not path.is_file():
            missing.append(name)
            continue
        data = path.read_bytes()
        first = container.compress(data, first_bits)
        chained = {bits: len(container.recompress(first, bits))
                   for bits in second_bits}
        rows.append(RecompressReport(name=name, original_bytes=len(data),
                                     first_bytes=len(first), chained=chained))
    totals = RecompressReport(
        name=TOTAL_LABEL,
        original_bytes=sum(r.original_bytes for r in rows),
        first_bytes=sum(r.first_bytes for r in rows),
        chained={bits: sum(r.chained[bits] for r in rows)
                 for bits in second_bits},
    )
    return rows, totals, missing


def redundancy_table(max_letter_bits: int) -> list[RedundancyRow]:
    """Coding overhead on incompressible data, per letter width.

    Models a full alphabet of m = 2^L equiprobable letters: the mean
    signature length of the first m codewords, against the L bits each
    letter carries. Group arithmetic only; nothing is enumerated. Width 1
    is omitted because a two-letter alphabet bypasses the ternary scheme.
    """
    if not 1 <= max_letter_bits <= 32:
        raise ValueError("letter width limit must be in 1..32")
    rows = []
    for bits in range(2, max_letter_bits + 1):
        m = 1 << bits
        n = code_set_for_alphabet(m).n
        avg = signature_total(n, m) / m
        rows.append(RedundancyRow(
            letter_bits=bits,
            m=m,
            min_len=code_length(n, 1),
            max_len=code_length(n, m),
            redundancy_pct=(avg / bits - 1.0) * 100.0,
        ))
    return rows


def _report_cells(report: FileReport) -> list[str]:
    price = report.price_of_economy
    return [
        report.name,
        str(report.original_bytes),
        str(report.letter_bits),
        str(report.compressed_bytes),
        str(report.alphabet_bytes),
        f"{report.bits_per_byte:.4f}",
        f"{report.percent:.2f}",
        f"{report.encode_ms:.3f}",
        f"{report.decode_ms:.3f}",
        "" if price is None else f"{price:.6f}",
    ]


def reports_to_csv(reports: list[FileReport]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow(_report_cells(report))
    return out.getvalue()


def reports_to_text(reports: list[FileReport]) -> str:
    rows = [list(CSV_COLUMNS)] + [_report_cells(r) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.rjust(w) if i else cell.ljust(w)
                               for i, (cell, w) in enumerate(zip(row, widths))))
    return "\n".join(lines) + "\n"


def recompress_to_csv(rows: list[RecompressReport],
                      second_bits: tuple[int, ...]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["file", "original_bytes", "first_bytes"]
                    + [f"chained_L{b}" for b in second_bits])
    for row in rows:
        writer.writerow([row.name, row.original_bytes, row.first_bytes]
                        + [row.chained[b] for b in second_bits])
    return out.getvalue()


def recompress_to_text(rows: list[RecompressReport],
                       second_bits: tuple[int, ...]) -> str:
    header = ["file", "original", "first"] + [f"L'={b}" for b in second_bits]
    table = [header] + [
        [r.name, str(r.original_bytes), str(r.first_bytes)]
        + [str(r.chained[b]) for b in second_bits]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) if i else cell.ljust(w)
                       for i, (cell, w) in enumerate(zip(row, widths)))
             for row in table]
    return "\n".join(lines) + "\n"


def redundancy_to_csv(rows: list[RedundancyRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["L", "m", "min_len", "max_len", "redundancy_pct"])
    for row in rows:
        writer.writerow([row.letter_bits, row.m, row.min_len, row.max_len,
                         f"{row.redundancy_pct:.2f}"])
    return out.getvalue()


def redundancy_to_text(rows: list[RedundancyRow]) -> str:
    header = ["L", "m", "min", "max", "redundancy %"]
    table = [header] + [
        [str(r.letter_bits), str(r.m), str(r.min_len), str(r.max_len),
         f"{r.redundancy_pct:.2f}"]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths))
             for row in table]
    return "\n".join(lines) + "\n"
