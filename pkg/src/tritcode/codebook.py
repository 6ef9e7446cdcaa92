"""Deterministic binary-ternary prefix code sets.

A code set number ``n`` covers alphabets of m letters with
3^(n-1) < m <= 3^n. The canonical codeword list for set ``n`` is every
length-n trit string, ordered by descending count of 0-trits and then by
ascending lexicographic order (0 < 1 < 2). A codeword's bit signature is the
trit string under the substitution 0 -> '0', 1 -> '10', 2 -> '11', so a
codeword containing z zeros occupies 2n - z bits.

The list never has to be materialized: the position of a codeword in it
(its 1-based index) is computable from the trits alone, and the inverse
mapping recovers the trits from an index. Both directions run in O(n^2)
integer operations. Alphabets of one or two letters fall outside the scheme
and are marked :class:`Degenerate`.

Everything here is exact integer arithmetic, no floats. All returned values
are immutable; the module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bitio import BitReader

# 3^n grows past 2^63 around n = 40; the cap also bounds signatures to
# 2n = 80 bits, which keeps every consumer comfortable with plain ints.
MAX_SET_NUMBER = 40

_TRIT_BITS = {"0": "0", "1": "10", "2": "11"}


@dataclass(frozen=True)
class CodeSet:
    """Identity of one prefix code family."""

    n: int
    m_min: int
    m_max: int


@dataclass(frozen=True)
class Degenerate:
    """Marker for one- and two-letter alphabets coded with plain bits."""

    m: int


@dataclass(frozen=True)
class Codeword:
    trits: str
    bits: str
    index: int
    zeros: int

    @property
    def length(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class GroupParams:
    """All codewords with z zeros share one bit length; this is their group."""

    z: int
    length: int
    size: int


def _check_set_number(n: int) -> None:
    if not 1 <= n <= MAX_SET_NUMBER:
        raise ValueError(f"code set number must be in 1..{MAX_SET_NUMBER}, got {n}")


def code_set_for_alphabet(m: int) -> CodeSet | Degenerate:
    """Identify the code set covering an alphabet of ``m`` letters.

    Alphabets of one or two letters are degenerate: their letters are coded
    with the single-bit codes 0 and 1 instead of a ternary-derived set.
    """
    if m < 1:
        raise ValueError("alphabet must contain at least one letter")
    if m <= 2:
        return Degenerate(m)
    n = 1
    cap = 3
    while cap < m:
        n += 1
        cap *= 3
        if n > MAX_SET_NUMBER:
            raise ValueError(f"alphabet of {m} letters exceeds code set {MAX_SET_NUMBER}")
    m_min = 3 if n == 1 else cap // 3 + 1
    return CodeSet(n=n, m_min=m_min, m_max=cap)


# Per-n combinatorial tables, built once and reused. Index [k][j] counts the
# length-k trit strings containing exactly j zeros: C(k,j) * 2^(k-j).
_tables: dict[int, tuple[tuple[tuple[int, ...], ...], tuple[int, ...], tuple[int, ...]]] = {}


def _ntables(n: int):
    cached = _tables.get(n)
    if cached is not None:
        return cached
    counts = []
    row = [1]  # Pascal row for k = 0
    for k in range(n + 1):
        counts.append(tuple(c << (k - j) for j, c in enumerate(row)))
        row = [1] + [row[j] + row[j + 1] for j in range(k)] + [1]
    sizes = counts[n]  # sizes[z] = codewords of set n with z zeros
    # before[z] = codewords in groups with more zeros than z
    before = [0] * (n + 1)
    acc = 0
    for z in range(n, -1, -1):
        before[z] = acc
        acc += sizes[z]
    result = (tuple(counts), sizes, tuple(before))
    _tables[n] = result
    return result


def group_params(n: int, z: int) -> GroupParams:
    _check_set_number(n)
    if not 0 <= z <= n:
        raise ValueError(f"zero count must be in 0..{n}, got {z}")
    _, sizes, _ = _ntables(n)
    return GroupParams(z=z, length=2 * n - z, size=sizes[z])


def trits_to_bits(trits: str) -> str:
    """Bit signature of a trit string: 0 -> '0', 1 -> '10', 2 -> '11'."""
    try:
        return "".join(_TRIT_BITS[t] for t in trits)
    except KeyError as exc:
        raise ValueError(f"invalid trit {exc.args[0]!r}") from None


def read_trits(reader: BitReader, n: int) -> str:
    """Consume one codeword of set ``n`` from the reader, returning its trits.

    Each trit costs one bit when it is a 0 and two bits otherwise; the reader
    is left positioned on the next codeword boundary. An exhausted stream
    raises :class:`TruncatedDataError`.
    """
    if not 1 <= n <= MAX_SET_NUMBER:
        _check_set_number(n)
    read_bit = reader.read_bit
    out = []
    push = out.append
    for _ in range(n):
        if read_bit() == 0:
            push("0")
        elif read_bit() == 0:
            push("1")
        else:
            push("2")
    return "".join(out)


def _iter_trit_strings(n: int) -> Iterator[str]:
    # Canonical order: z = n down to 0, lexicographic inside each group.
    # Plain backtracking; emits only as far as the consumer pulls.
    buf = ["0"] * n

    def fill(pos: int, zeros_left: int) -> Iterator[str]:
        if pos == n:
            yield "".join(buf)
            return
        room = n - pos - 1
        if zeros_left > 0:
            buf[pos] = "0"
            yield from fill(pos + 1, zeros_left - 1)
        if room >= zeros_left:
            buf[pos] = "1"
            yield from fill(pos + 1, zeros_left)
            buf[pos] = "2"
            yield from fill(pos + 1, zeros_left)

    for z in range(n, -1, -1):
        yield from fill(0, z)


def iter_codes(n: int, m: int) -> Iterator[Codeword]:
    """Lazily yield the first ``m`` codewords of set ``n`` in canonical order.

    Generation is incremental: only the requested prefix of the list is
    produced, so small alphabets never pay for the full 3^n enumeration.
    """
    _check_set_number(n)
    if not 1 <= m <= 3**n:
        raise ValueError(f"code count must be in 1..3^{n}, got {m}")
    for idx, trits in enumerate(_iter_trit_strings(n), start=1):
        yield Codeword(trits=trits, bits=trits_to_bits(trits), index=idx,
                       zeros=trits.count("0"))
        if idx == m:
            return


def generate_codes(n: int, m: int) -> list[Codeword]:
    """First ``m`` codewords of set ``n`` in canonical order, as a list."""
    return list(iter_codes(n, m))


def rank(n: int, trits: str) -> int:
    """1-based position of ``trits`` in the canonical list of set ``n``.

    Computed combinatorially: the sizes of all groups with more zeros, plus
    the count of same-group strings that sort lexicographically earlier.
    """
    tables = _tables.get(n)
    if tables is None:
        _check_set_number(n)
        tables = _ntables(n)
    counts, _, before = tables
    if len(trits) != n:
        raise ValueError(f"expected {n} trits, got {len(trits)}")
    zeros_left = trits.count("0")
    idx = before[zeros_left]
    k = n
    for t in trits:
        k -= 1
        if t == "0":
            zeros_left -= 1
        else:
            rest = counts[k]
            if zeros_left:
                idx += rest[zeros_left - 1]  # strings placing '0' here
            if t == "2":
                idx += rest[zeros_left]      # strings placing '1' here
            elif t != "1":
                raise ValueError(f"invalid trit {t!r}")
    return idx + 1


def unrank(n: int, index: int) -> str:
    """Trit string at 1-based ``index`` of the canonical list of set ``n``."""
    _check_set_number(n)
    if not 1 <= index <= 3**n:
        raise ValueError(f"index must be in 1..3^{n}, got {index}")
    counts, sizes, _ = _ntables(n)
    i = index
    for z in range(n, -1, -1):
        if i <= sizes[z]:
            break
        i -= sizes[z]
    out = []
    zeros_left = z
    for pos in range(n):
        rest = counts[n - pos - 1]
        if zeros_left:
            c0 = rest[zeros_left - 1]
            if i <= c0:
                out.append("0")
                zeros_left -= 1
                continue
            i -= c0
        c = rest[zeros_left]
        if i <= c:
            out.append("1")
        else:
            i -= c
            out.append("2")
    return "".join(out)


def code_length(n: int, index: int) -> int:
    """Bit length of the codeword at ``index`` without materializing it."""
    _check_set_number(n)
    if not 1 <= index <= 3**n:
        raise ValueError(f"index must be in 1..3^{n}, got {index}")
    _, sizes, _ = _ntables(n)
    acc = 0
    for z in range(n, -1, -1):
        acc += sizes[z]
        if index <= acc:
            return 2 * n - z
    raise AssertionError("unreachable")


def signature_total(n: int, m: int) -> int:
    """Total bit length of the first ``m`` codewords, by group arithmetic."""
    _check_set_number(n)
    if not 1 <= m <= 3**n:
        raise ValueError(f"code count must be in 1..3^{n}, got {m}")
    _, sizes, _ = _ntables(n)
    total = 0
    taken = 0
    for z in range(n, -1, -1):
        take = min(sizes[z], m - taken)
        total += take * (2 * n - z)
        taken += take
        if taken == m:
            break
    return total
