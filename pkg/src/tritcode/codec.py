"""Static two-pass letter codec.

Letters are plain unsigned ints (an L-bit slice of the input; the container
layer enforces the width). Pass one counts letter occurrences and ranks the
alphabet by descending count; pass two swaps each letter for the codeword
whose list index equals the letter's rank. Decoding walks the bit stream
reading one codeword at a time and maps its computed list index back to a
letter, so no code tree or codeword table search is involved.

One- and two-letter alphabets bypass the ternary scheme: with two letters
each letter is its rank bit, with one letter every occurrence is a '0' bit
(costing a bit per letter, but keeping the stream self-delimiting).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitio import BitReader, pack01, unpack01
from .codebook import (
    CodeSet,
    Degenerate,
    code_set_for_alphabet,
    generate_codes,
    group_params,
    rank,
    read_trits,
)
from .errors import CorruptedDataError


@dataclass(frozen=True)
class Model:
    """Frequency-ranked alphabet with its assigned code set."""

    letters: tuple[int, ...]
    counts: tuple[int, ...]
    code_set: CodeSet | Degenerate

    @property
    def m(self) -> int:
        return len(self.letters)


def build_model(letters) -> Model:
    """Rank the distinct letters of ``letters`` by descending count.

    Ties are broken by earliest first occurrence in the input, which makes
    the model deterministic. The decoder does not depend on the tie rule:
    the ranked alphabet travels with the compressed stream.
    """
    arr = np.asarray(letters, dtype=np.int64)
    if arr.size == 0:
        raise ValueError("cannot build a model from empty input")
    if arr.min() < 0:
        raise ValueError("letters must be unsigned integers")
    values, first_pos, counts = np.unique(arr, return_index=True, return_counts=True)
    order = np.lexsort((first_pos, -counts))
    return Model(
        letters=tuple(int(v) for v in values[order]),
        counts=tuple(int(c) for c in counts[order]),
        code_set=code_set_for_alphabet(len(values)),
    )


def _rank0_of(model: Model, arr: np.ndarray) -> np.ndarray:
    """0-based rank of every letter in ``arr``; rejects unknown letters."""
    values = np.asarray(model.letters, dtype=np.int64)
    order = np.argsort(values, kind="stable")
    sorted_values = values[order]
    pos = np.searchsorted(sorted_values, arr)
    pos_clipped = np.minimum(pos, len(values) - 1)
    if not np.array_equal(sorted_values[pos_clipped], arr):
        bad = arr[sorted_values[pos_clipped] != arr][0]
        raise ValueError(f"letter {int(bad)} absent from model")
    return order[pos_clipped]


def _signature_arrays(code_set: CodeSet, m: int) -> tuple[np.ndarray, np.ndarray]:
    codes = generate_codes(code_set.n, m)
    values = np.array([int(cw.bits, 2) for cw in codes], dtype=np.uint64)
    lengths = np.array([len(cw.bits) for cw in codes], dtype=np.int64)
    return values, lengths


def encode_packed(letters, model: Model) -> tuple[bytes, int]:
    """Encode to packed bytes; returns (payload, exact bit count).

    The payload is the concatenated bit signatures in input order, MSB-first
    within bytes, zero-padded on the right to a byte boundary.
    """
    arr = np.asarray(letters, dtype=np.int64)
    if arr.size == 0:
        return b"", 0
    n_letters = arr.size
    cs = model.code_set
    if isinstance(cs, Degenerate):
        if cs.m == 1:
            if int(arr.min()) != model.letters[0] or int(arr.max()) != model.letters[0]:
                raise ValueError("letter absent from model")
            return bytes((n_letters + 7) // 8), n_letters
        bits = _rank0_of(model, arr).astype(np.uint8)
        return np.packbits(bits).tobytes(), n_letters
    if cs.n > 31:
        # signatures no longer fit the vectorized 64-bit path
        return _encode_packed_bigint(arr, model, cs)
    r0 = _rank0_of(model, arr)
    code_values, code_lengths = _signature_arrays(cs, model.m)
    lengths = code_lengths[r0]
    offsets = np.cumsum(lengths) - lengths
    total = int(lengths.sum())
    values = code_values[r0]
    out = np.zeros(total, dtype=np.uint8)
    for j in range(int(lengths.max())):
        live = lengths > j
        shift = (lengths[live] - 1 - j).astype(np.uint64)
        out[offsets[live] + j] = ((values[live] >> shift) & 1).astype(np.uint8)
    return np.packbits(out).tobytes(), total


def _encode_packed_bigint(arr: np.ndarray, model: Model, cs: CodeSet) -> tuple[bytes, int]:
    signatures = [cw.bits for cw in generate_codes(cs.n, model.m)]
    r0 = _rank0_of(model, arr)
    bits = "".join(signatures[r] for r in r0)
    return pack01(bits), len(bits)


def encode(letters, model: Model) -> str:
    """Encode to a textual bit string (convenience form of encode_packed)."""
    payload, nbits = encode_packed(letters, model)
    return unpack01(payload, nbits)


def payload_size(model: Model) -> int:
    """Exact encoded bit count implied by the model, before encoding.

    Group arithmetic gives each rank's signature length without generating
    any codeword, so the compressed size can be quoted up front.
    """
    counts = np.asarray(model.counts, dtype=np.int64)
    cs = model.code_set
    if isinstance(cs, Degenerate):
        return int(counts.sum())
    n = cs.n
    sizes = [group_params(n, z).size for z in range(n, -1, -1)]
    boundaries = np.cumsum(sizes)
    ranks = np.arange(1, model.m + 1, dtype=np.int64)
    lengths = n + np.searchsorted(boundaries, ranks, side="left")
    return int(np.dot(counts, lengths))


def decode_packed(payload: bytes, alphabet, letter_count: int,
                  bit_length: int | None = None) -> np.ndarray:
    """Decode ``letter_count`` letters from a packed payload.

    ``alphabet`` is the ranked letter list the encoder was built with. Any
    bits left after the last codeword are treated as byte padding: there may
    be at most seven and they must all be zero.
    """
    reader = BitReader(payload, bit_length)
    letters = decode_stream(reader, alphabet, letter_count)
    check_padding(reader)
    return letters


def decode_stream(reader: BitReader, alphabet, letter_count: int) -> np.ndarray:
    """Decode from an open reader, leaving it just past the last codeword."""
    m = len(alphabet)
    if m == 0:
        raise ValueError("alphabet must not be empty")
    cs = code_set_for_alphabet(m)
    if isinstance(cs, Degenerate):
        ranks0 = _decode_degenerate(reader, m, letter_count)
    else:
        ranks0 = _decode_ranks(reader, cs.n, m, letter_count) - 1
    alphabet_arr = np.asarray(alphabet, dtype=np.int64)
    return alphabet_arr[ranks0]


def _decode_degenerate(reader: BitReader, m: int, count: int) -> np.ndarray:
    bits = np.empty(count, dtype=np.int64)
    for i in range(count):
        bits[i] = reader.read_bit()
    if m == 1 and count and bits.max() != 0:
        raise CorruptedDataError("single-letter stream contains a 1 bit")
    return bits


def _decode_ranks(reader: BitReader, n: int, m: int, count: int) -> np.ndarray:
    read = read_trits
    to_index = rank
    indices = np.empty(count, dtype=np.int64)
    for i in range(count):
        idx = to_index(n, read(reader, n))
        if idx > m:
            raise CorruptedDataError(
                f"codeword index {idx} exceeds alphabet power {m} "
                f"(letter {i + 1} of {count})"
            )
        indices[i] = idx
    return indices


def check_padding(reader: BitReader) -> None:
    if reader.remaining >= 8:
        raise CorruptedDataError(
            f"{reader.remaining} bits of trailing data after the last codeword"
        )
    while reader.remaining:
        if reader.read_bit():
            raise CorruptedDataError("nonzero padding bit after the last codeword")


def decode(bits: str, alphabet, letter_count: int) -> list[int]:
    """Decode a textual bit string (convenience form of decode_packed)."""
    return decode_packed(pack01(bits), alphabet, letter_count,
                         bit_length=len(bits)).tolist()
