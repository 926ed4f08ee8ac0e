"""Chaotic-iterations hash: message normalisation, strategy derivation, digest.

Pipeline for a 7-bit ASCII message:

1. 7-bit codes of every character, then a single 1 bit.
2. The bit length of that string in minimal binary, then another 1 bit.
3. Mirror: the string followed by its reverse minus the final bit.
4. Cyclic repetition truncated to the next multiple of 512 bits (``D``).
5. XOR of the 256-bit blocks of ``D`` gives the initial state ``E``.
6. Eight passes over ``D``, each rotated one more bit to the left, cut into
   bytes, give the sequence ``u``; ``S[n] = (u[n] + 2 S[n-1] + n) mod 256``.
7. Chaotic iterations of the iteration function over (S, E); the final
   state rendered as 64 uppercase hex digits is the digest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from cihash.core import (
    NEGATION,
    BitState,
    IterationFunction,
    Strategy,
    SystemPoint,
    run_to_end,
)

STATE_BITS = 256
BLOCK_BITS = 512
ROTATION_PASSES = 8

Message = Union[bytes, bytearray, str]


class NonAsciiError(ValueError):
    """Raised when a message contains a byte outside 7-bit ASCII."""

    def __init__(self, position: int, value: int):
        self.position = position
        self.value = value
        super().__init__(f"non-ASCII character 0x{value:02X} at position {position}")


@dataclass(frozen=True)
class BitString:
    """An arbitrary-length run of bits, held as a '0'/'1' string."""

    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError("BitString accepts only '0' and '1'")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __add__(self, other: "BitString") -> "BitString":
        return BitString(self.bits + other.bits)

    def groups(self, size: int = 8) -> list[str]:
        return [self.bits[i:i + size] for i in range(0, len(self.bits), size)]

    def display(self, per_line: int = 6) -> str:
        """8-bit groups, ``per_line`` groups to a line."""
        g = self.groups(8)
        return "\n".join(" ".join(g[i:i + per_line]) for i in range(0, len(g), per_line))


@dataclass(frozen=True)
class PreprocessResult:
    normalized: BitString
    initial_state: BitState
    trace: list[tuple[str, BitString]] = field(default_factory=list)


@dataclass(frozen=True)
class Digest:
    state: BitState
    hex: str

    def __str__(self) -> str:
        return self.hex


def as_bytes(text: Message) -> bytes:
    if isinstance(text, str):
        for i, ch in enumerate(text):
            if ord(ch) > 127:
                raise NonAsciiError(i, ord(ch))
        return text.encode("ascii")
    data = bytes(text)
    for i, b in enumerate(data):
        if b > 127:
            raise NonAsciiError(i, b)
    return data


def ascii_bits(text: Message) -> BitString:
    """7-bit codes of every character, MSB first, followed by one 1 bit."""
    data = as_bytes(text)
    return BitString("".join(format(b, "07b") for b in data) + "1")


def append_length(s: BitString) -> BitString:
    """Append the bit length of ``s`` in minimal binary, then a 1 bit."""
    return BitString(s.bits + format(len(s), "b") + "1")


def encode_message(text: Message) -> BitString:
    return append_length(ascii_bits(text))


def mirror_extend(s: BitString) -> BitString:
    if not len(s):
        raise ValueError("cannot mirror an empty bit string")
    return BitString(s.bits + s.bits[-2::-1])


def pad_to_512(s: BitString) -> BitString:
    n = len(s)
    if n < 1:
        raise ValueError("cannot pad an empty bit string")
    target = -(-n // BLOCK_BITS) * BLOCK_BITS
    reps = -(-target // n)
    return BitString((s.bits * reps)[:target])


def fold_xor_256(d: BitString) -> BitState:
    if not len(d) or len(d) % STATE_BITS:
        raise ValueError(f"length {len(d)} is not a positive multiple of {STATE_BITS}")
    acc = 0
    for i in range(0, len(d), STATE_BITS):
        acc ^= int(d.bits[i:i + STATE_BITS], 2)
    return BitState.from_bits(format(acc, f"0{STATE_BITS}b"))


def derive_u_sequence(d: BitString) -> list[int]:
    """Byte values of ``d`` and of its left rotations by 1..7 bits, pass by pass."""
    n = len(d)
    if not n or n % 8:
        raise ValueError(f"length {n} is not a positive multiple of 8")
    bits = d.bits
    u: list[int] = []
    for r in range(ROTATION_PASSES):
        rotated = bits[r % n:] + bits[:r % n]
        u.extend(int(rotated[i:i + 8], 2) for i in range(0, n, 8))
    return u


def derive_strategy(u: Sequence[int]) -> Strategy:
    """Run the doubling recurrence mod 256; raw value v addresses cell v + 1."""
    if not u:
        raise ValueError("u sequence is empty")
    raw = []
    prev = 0
    for n, v in enumerate(u):
        if not 0 <= v <= 255:
            raise ValueError(f"u[{n}] = {v} outside [0, 255]")
        prev = v if n == 0 else (v + 2 * prev + n) % 256
        raw.append(prev)
    return Strategy(tuple(v + 1 for v in raw), STATE_BITS)


def to_hex(state: BitState) -> str:
    if state.width % 4:
        raise ValueError(f"width {state.width} is not divisible by 4")
    return format(int(str(state), 2), f"0{state.width // 4}X")


def preprocess(text: Message) -> PreprocessResult:
    encoded = ascii_bits(text)
    with_length = append_length(encoded)
    mirrored = mirror_extend(with_length)
    padded = pad_to_512(mirrored)
    trace = [
        ("encoded", encoded),
        ("length-appended", with_length),
        ("mirrored", mirrored),
        ("padded", padded),
    ]
    return PreprocessResult(padded, fold_xor_256(padded), trace)


def initial_point(text: Message) -> SystemPoint:
    pre = preprocess(text)
    return SystemPoint(derive_strategy(derive_u_sequence(pre.normalized)), pre.initial_state)


def digest(text: Message, f: IterationFunction = NEGATION) -> Digest:
    final = run_to_end(f, initial_point(text))
    return Digest(final, to_hex(final))


def hexdigest(text: Message, f: IterationFunction = NEGATION) -> str:
    return digest(text, f).hex


def trace_document(text: Message) -> str:
    """Every named intermediate string in 8-bit groups, plus E and the digest."""
    pre = preprocess(text)
    sections = [(name, bs) for name, bs in pre.trace]
    sections.append(("E", BitString(str(pre.initial_state))))
    out = []
    for name, bs in sections:
        out.append(f"[{name}] bits={len(bs)}")
        out.append(bs.display())
        out.append("")
    out.append(f"[digest] {hexdigest(text)}")
    return "\n".join(out) + "\n"
