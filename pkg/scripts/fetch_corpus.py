#!/usr/bin/env python3
"""Download and unpack the Canterbury corpus for the benchmark suite.

The corpus archive is fetched from the canonical distribution point,

    http://corpus.canterbury.ac.nz/resources/cantrbry.zip

and extracted into corpus/canterbury under the repository root (or a
directory given with --dest). The library itself never touches the
network; only this script does. File sizes are verified against the
known byte counts so a broken mirror cannot silently skew benchmark
numbers.

If the host has no network access, obtain cantrbry.zip elsewhere and run
this script with --archive path/to/cantrbry.zip.
"""

import argparse
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_DEST = REPO_ROOT / "corpus" / "canterbury"
DEFAULT_URL = "http://corpus.canterbury.ac.nz/resources/cantrbry.zip"

EXPECTED_SIZES = {
    "alice29.txt": 152089,
    "asyoulik.txt": 125179,
    "cp.html": 24603,
    "fields.c": 11150,
    "grammar.lsp": 3721,
    "kennedy.xls": 1029744,
    "lcet10.txt": 426754,
    "plrabn12.txt": 481861,
    "ptt5": 513216,
    "sum": 38240,
    "xargs.1": 4227,
}


def fetch(url: str) -> bytes:
    print(f"downloading {url} ...")
    with urllib.request.urlopen(url, timeout=60) as response:
        return response.read()


def extract(archive: bytes, dest: Path) -> list[str]:
    dest.mkdir(parents=True, exist_ok=True)
    problems = []
    with zipfile.ZipFile(io.BytesIO(archive)) as zf:
        names = {Path(info.filename).name: info for info in zf.infolist()
                 if not info.is_dir()}
        for name, expected in EXPECTED_SIZES.items():
            info = names.get(name)
            if info is None:
                problems.append(f"{name}: missing from archive")
                continue
            data = zf.read(info)
            if len(data) != expected:
                problems.append(
                    f"{name}: {len(data)} bytes, expected {expected}")
                continue
            (dest / name).write_bytes(data)
            print(f"  {name}: {expected} bytes ok")
    return problems


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--url", default=DEFAULT_URL)
    parser.add_argument("--archive", type=Path, default=None,
                        help="use a local cantrbry.zip instead of downloading")
    parser.add_argument("--dest", type=Path, default=DEFAULT_DEST)
    args = parser.parse_args()
    try:
        blob = args.archive.read_bytes() if args.archive else fetch(args.url)
    except OSError as exc:
        print(f"could not obtain the archive: {exc}", file=sys.stderr)
        return 1
    problems = extract(blob, args.dest)
    for problem in problems:
        print(problem, file=sys.stderr)
    if problems:
        return 1
    print(f"corpus ready at {args.dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
