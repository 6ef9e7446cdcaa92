"""Bit-exact container format, version 1.

Layout (all multi-byte integers little-endian):

    offset  size  field
    0       2     magic 0x42 0x33 ("B3")
    2       1     version (low nibble, = 1) and flags (high nibble)
    3       1     letter width L in bits, 1..32
    4       8     original length of the raw input in bits
    12      4     alphabet power m
    16      ...   alphabet letters, then the packed payload

Flag bit 0 marks a compressed alphabet. Raw alphabets store the m letters
in rank order, ceil(L/8) bytes each, little-endian. Compressed alphabets
store a 4-byte length followed by a nested container holding the raw
letter bytes recompressed at L = 8; compression is only used when it is
strictly smaller, since small alphabets usually expand.

Storing the original bit length (not a letter count) lets decompression
strip the zero bits that padded the final partial letter, so inputs of any
byte length survive any letter width bit-exactly. Decompression needs
nothing beyond the container itself.

Files conventionally use the ".btn" extension.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from . import codec
from .bitio import BitReader
from .errors import CorruptedDataError, FormatError

MAGIC = b"\x42\x33"
VERSION = 1
FLAG_PACKED_ALPHABET = 0x1
HEADER_SIZE = 12
_HEADER = struct.Struct("<2sBBQ")


@dataclass(frozen=True)
class Header:
    version: int
    flags: int
    letter_bits: int
    original_bit_length: int

    @property
    def alphabet_packed(self) -> bool:
        return bool(self.flags & FLAG_PACKED_ALPHABET)


def serialize_header(header: Header) -> bytes:
    if not 0 <= header.version <= 15 or not 0 <= header.flags <= 15:
        raise ValueError("version and flags must fit a nibble each")
    return _HEADER.pack(MAGIC, (header.flags << 4) | header.version,
                        header.letter_bits, header.original_bit_length)


def parse_header(blob: bytes) -> Header:
    if len(blob) < HEADER_SIZE:
        raise FormatError("container shorter than the 12-byte header", offset=0)
    magic, vf, letter_bits, bit_length = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic.hex()}", offset=0)
    version = vf & 0x0F
    flags = vf >> 4
    if version != VERSION:
        raise FormatError(f"unsupported version {version}", offset=2)
    if flags & ~FLAG_PACKED_ALPHABET:
        raise FormatError(f"unknown flag bits {flags:#x}", offset=2)
    if not 1 <= letter_bits <= 32:
        raise FormatError(f"letter width {letter_bits} out of range 1..32", offset=3)
    return Header(version=version, flags=flags, letter_bits=letter_bits,
                  original_bit_length=bit_length)


def split_letters(data: bytes, letter_bits: int) -> tuple[np.ndarray, int]:
    """Slice a byte string into L-bit letters, MSB-first.

    The final partial letter, if any, is zero-padded on the right. Returns
    the letters and the original length in bits.
    """
    if not 1 <= letter_bits <= 32:
        raise ValueError(f"letter width {letter_bits} out of range 1..32")
    nbits = len(data) * 8
    if nbits == 0:
        return np.empty(0, dtype=np.int64), 0
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    pad = -nbits % letter_bits
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    bits = bits.reshape(-1, letter_bits)
    letters = np.zeros(len(bits), dtype=np.int64)
    for j in range(letter_bits):
        letters = (letters << 1) | bits[:, j]
    return letters, nbits


def join_letters(letters, letter_bits: int, original_bit_length: int) -> bytes:
    """Reassemble bytes from L-bit letters, dropping the final padding."""
    arr = np.asarray(letters, dtype=np.int64)
    if original_bit_length == 0 and arr.size == 0:
        return b""
    low = letter_bits * (arr.size - 1)
    if not low < original_bit_length <= letter_bits * arr.size:
        raise ValueError(
            f"{arr.size} letters of {letter_bits} bits cannot carry "
            f"{original_bit_length} bits"
        )
    if original_bit_length % 8:
        raise ValueError("original bit length must be a whole number of bytes")
    bits = np.zeros((arr.size, letter_bits), dtype=np.uint8)
    for j in range(letter_bits):
        bits[:, j] = (arr >> (letter_bits - 1 - j)) & 1
    flat = bits.reshape(-1)[:original_bit_length]
    return np.packbits(flat).tobytes()


def _letter_width_bytes(letter_bits: int) -> int:
    return (letter_bits + 7) // 8

def _pack_alphabet(letters, letter_bits: int) -> bytes:
    width = _letter_width_bytes(letter_bits)
    arr = np.asarray(letters, dtype="<u4")
    return arr.view(np.uint8).reshape(-1, 4)[:, :width].tobytes()


def _unpack_alphabet(blob: bytes, m: int, letter_bits: int) -> np.ndarray:
    width = _letter_width_bytes(letter_bits)
    raw = np.frombuffer(blob, dtype=np.uint8).reshape(m, width)
    padded = np.zeros((m, 4), dtype=np.uint8)
    padded[:, :width] = raw
    return padded.view("<u4").reshape(m).astype(np.int64)


def compress(data: bytes, letter_bits: int = 8, *,
             compress_alphabet: bool = False) -> bytes:
    """Compress ``data`` into a self-contained container."""
    letters, nbits = split_letters(data, letter_bits)
    if letters.size == 0:
        header = Header(VERSION, 0, letter_bits, 0)
        return serialize_header(header) + struct.pack("<I", 0)
    model = codec.build_model(letters)
    payload, _ = codec.encode_packed(letters, model)
    alphabet_area = _pack_alphabet(model.letters, letter_bits)
    flags = 0
    if compress_alphabet:
        nested = compress(alphabet_area, 8)
        candidate = struct.pack("<I", len(nested)) + nested
        if len(candidate) < len(alphabet_area):
            alphabet_area = candidate
            flags |= FLAG_PACKED_ALPHABET
    header = Header(VERSION, flags, letter_bits, nbits)
    return b"".join([serialize_header(header), struct.pack("<I", model.m),
                     alphabet_area, payload])


def _read_alphabet(blob: bytes, offset: int, m: int,
                   header: Header) -> tuple[np.ndarray, int]:
    width = _letter_width_bytes(header.letter_bits)
    if header.alphabet_packed:
        if len(blob) < offset + 4:
            raise FormatError("truncated alphabet length", offset=offset)
        (nested_len,) = struct.unpack_from("<I", blob, offset)
        offset += 4
        if len(blob) < offset + nested_len:
            raise FormatError("truncated packed alphabet", offset=offset)
        area = decompress(blob[offset:offset + nested_len])
        offset += nested_len
        if len(area) != m * width:
            raise FormatError("packed alphabet has the wrong size", offset=offset)
    else:
        size = m * width
        if len(blob) < offset + size:
            raise FormatError("truncated alphabet", offset=offset)
        area = blob[offset:offset + size]
        offset += size
    letters = _unpack_alphabet(area, m, header.letter_bits)
    if header.letter_bits < 32 and letters.size and int(letters.max()) >> header.letter_bits:
        raise FormatError(f"alphabet letter wider than {header.letter_bits} bits",
                          offset=offset)
    if len(np.unique(letters)) != m:
        raise FormatError("alphabet contains duplicate letters", offset=offset)
    return letters, offset


def _parse_structure(blob: bytes) -> tuple[Header, int, np.ndarray | None, int]:
    """Validate everything up to the payload; returns (header, m, letters,
    payload offset). ``letters`` is None for the empty-input container."""
    header = parse_header(blob)
    if len(blob) < HEADER_SIZE + 4:
        raise FormatError("container too short for the alphabet power",
                          offset=HEADER_SIZE)
    (m,) = struct.unpack_from("<I", blob, HEADER_SIZE)
    offset = HEADER_SIZE + 4
    L = header.letter_bits
    nbits = header.original_bit_length
    if m == 0:
        if nbits:
            raise FormatError("empty alphabet with a nonzero bit length",
                              offset=HEADER_SIZE)
        return header, 0, None, offset
    if nbits == 0:
        raise FormatError("nonempty alphabet with a zero bit length",
                          offset=HEADER_SIZE)
    if L < 32 and m > 1 << L:
        raise FormatError(f"alphabet power {m} exceeds 2^{L}", offset=HEADER_SIZE)
    letters, offset = _read_alphabet(blob, offset, m, header)
    return header, m, letters, offset


def decompress(blob: bytes) -> bytes:
    """Restore the exact original bytes from a container."""
    header, m, letters, offset = _parse_structure(blob)
    if m == 0:
        return b""
    L = header.letter_bits
    nbits = header.original_bit_length
    letter_count = -(-nbits // L)
    decoded = codec.decode_packed(blob[offset:], letters, letter_count)
    try:
        return join_letters(decoded, L, nbits)
    except ValueError as exc:
        raise CorruptedDataError(str(exc)) from exc


@dataclass(frozen=True)
class ContainerInfo:
    """Structural summary of a container, for inspection and reports."""

    header: Header
    m: int
    n: int
    letters: tuple[int, ...]
    letter_count: int
    alphabet_block_bytes: int
    payload_bytes: int
    payload_bits: int | None
    padding_bits: int | None


def describe(blob: bytes, *, decode_payload: bool = True) -> ContainerInfo:
    """Parse a container's structure; optionally decode to verify the payload.

    With ``decode_payload`` the exact payload bit count (and hence padding)
    is measured by decoding; without it those fields are None and only the
    structure is validated.
    """
    header, m, letters, offset = _parse_structure(blob)
    L = header.letter_bits
    letter_count = -(-header.original_bit_length // L)
    payload_bytes = len(blob) - offset
    cs = codec.code_set_for_alphabet(m) if m else codec.Degenerate(0)
    n = 0 if isinstance(cs, codec.Degenerate) else cs.n
    payload_bits = padding = None
    if decode_payload and m:
        reader = BitReader(blob[offset:])
        codec.decode_stream(reader, letters, letter_count)
        payload_bits = reader.position
        padding = payload_bytes * 8 - payload_bits
        codec.check_padding(reader)
    elif decode_payload:
        payload_bits = 0
        padding = payload_bytes * 8
    return ContainerInfo(
        header=header,
        m=m,
        n=n,
        letters=tuple(int(v) for v in letters) if letters is not None else (),
        letter_count=letter_count if m else 0,
        alphabet_block_bytes=offset - HEADER_SIZE,
        payload_bytes=payload_bytes,
        payload_bits=payload_bits,
        padding_bits=padding,
    )


def recompress(blob: bytes, letter_bits: int, *,
               compress_alphabet: bool = False) -> bytes:
    """Compress an existing container (or any bytes) again at a new width."""
    return compress(blob, letter_bits, compress_alphabet=compress_alphabet)
