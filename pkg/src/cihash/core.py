"""Chaotic-iterations engine.

States are fixed-width boolean vectors, strategies are finite sequences of
cell indices, and one step of the system updates only the cell named by the
head of the strategy. Cells are 1-indexed at every public entry point.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Optional


class ChaoticIterationError(ValueError):
    """Raised on malformed states, strategies or out-of-range steps."""


@dataclass(frozen=True)
class BitState:
    """An immutable vector of N boolean cells, stored as bytes of 0/1."""

    cells: bytes

    def __post_init__(self):
        if not isinstance(self.cells, bytes):
            object.__setattr__(self, "cells", bytes(self.cells))
        if len(self.cells) < 1:
            raise ChaoticIterationError("a state needs at least one cell")
        if any(c > 1 for c in self.cells):
            raise ChaoticIterationError("cells must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: str | Iterable[int | bool]) -> "BitState":
        if isinstance(bits, str):
            bits = bits.replace(" ", "")
            if set(bits) - {"0", "1"}:
                raise ChaoticIterationError(f"not a bit string: {bits!r}")
            return cls(bytes(int(b) for b in bits))
        return cls(bytes(int(bool(b)) for b in bits))

    @classmethod
    def zeros(cls, width: int) -> "BitState":
        return cls(bytes(width))

    @property
    def width(self) -> int:
        return len(self.cells)

    def cell(self, k: int) -> int:
        """Value of cell ``k`` (1-based)."""
        if not 1 <= k <= self.width:
            raise ChaoticIterationError(f"cell {k} outside [1, {self.width}]")
        return self.cells[k - 1]

    def hamming(self, other: "BitState") -> int:
        _check_widths(self.width, other.width)
        return sum(a != b for a, b in zip(self.cells, other.cells))

    def differing_cells(self, other: "BitState") -> list[int]:
        """Sorted 1-based indices where the two states disagree."""
        _check_widths(self.width, other.width)
        return [i + 1 for i, (a, b) in enumerate(zip(self.cells, other.cells)) if a != b]

    def __str__(self) -> str:
        return "".join("1" if c else "0" for c in self.cells)


def _check_widths(a: int, b: int) -> None:
    if a != b:
        raise ChaoticIterationError(f"width mismatch: {a} != {b}")


@dataclass(frozen=True)
class Strategy:
    """A finite run of cell indices, each in [1, width]."""

    terms: tuple[int, ...]
    width: int

    def __post_init__(self):
        if not isinstance(self.terms, tuple):
            object.__setattr__(self, "terms", tuple(self.terms))
        if self.width < 1:
            raise ChaoticIterationError("strategy width must be positive")
        n = self.width
        for t in self.terms:
            if not 1 <= t <= n:
                raise ChaoticIterationError(f"strategy term {t} outside [1, {n}]")

    @classmethod
    def _trusted(cls, terms: tuple[int, ...], width: int) -> "Strategy":
        # terms already known to be in range (e.g. a suffix of a valid strategy)
        s = cls.__new__(cls)
        object.__setattr__(s, "terms", terms)
        object.__setattr__(s, "width", width)
        return s

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, item):
        return self.terms[item]


@dataclass(frozen=True)
class SystemPoint:
    """A point of the phase space: a strategy paired with a state."""

    strategy: Strategy
    state: BitState

    def __post_init__(self):
        if self.strategy.width != self.state.width:
            raise ChaoticIterationError(
                f"strategy width {self.strategy.width} != state width {self.state.width}"
            )

    @classmethod
    def make(cls, terms: Sequence[int], bits: str | Iterable[int]) -> "SystemPoint":
        state = BitState.from_bits(bits)
        return cls(Strategy(tuple(terms), state.width), state)

    @property
    def width(self) -> int:
        return self.state.width


@dataclass(frozen=True)
class IterationFunction:
    """A named total map B^N -> B^N.

    ``component`` is an optional fast path computing ``f(E)_k`` straight from
    the raw cell buffer and a 1-based ``k``; when absent the full map is
    evaluated.
    """

    name: str
    map: Callable[[BitState], BitState]
    component: Optional[Callable[[Sequence[int], int], int]] = field(default=None, compare=False)

    def __call__(self, e: BitState) -> BitState:
        out = self.map(e)
        if out.width != e.width:
            raise ChaoticIterationError(
                f"iteration function {self.name!r} changed width {e.width} -> {out.width}"
            )
        return out

    def cell_update(self, cells: Sequence[int], k: int) -> int:
        if self.component is not None:
            return self.component(cells, k)
        return self(BitState(bytes(cells))).cells[k - 1]


NEGATION = IterationFunction(
    "negation",
    lambda e: BitState(bytes(c ^ 1 for c in e.cells)),
    lambda cells, k: cells[k - 1] ^ 1,
)
IDENTITY = IterationFunction("identity", lambda e: e, lambda cells, k: cells[k - 1])

BUILTIN_FUNCTIONS = {f.name: f for f in (NEGATION, IDENTITY)}


def shift(s: Strategy) -> Strategy:
    if not s.terms:
        raise ChaoticIterationError("cannot shift empty strategy")
    return Strategy(s.terms[1:], s.width)


def initial(s: Strategy) -> int:
    if not s.terms:
        raise ChaoticIterationError("empty strategy has no initial term")
    return s.terms[0]


def apply_ff(f: IterationFunction, k: int, e: BitState) -> BitState:
    """Replace cell ``k`` of ``e`` with ``f(e)_k``; every other cell is kept."""
    if not 1 <= k <= e.width:
        raise ChaoticIterationError(f"cell {k} outside [1, {e.width}]")
    buf = bytearray(e.cells)
    buf[k - 1] = f.cell_update(e.cells, k)
    return BitState(bytes(buf))


def step_gf(f: IterationFunction, x: SystemPoint) -> SystemPoint:
    if not x.strategy.terms:
        raise ChaoticIterationError("strategy exhausted")
    k = initial(x.strategy)
    return SystemPoint(shift(x.strategy), apply_ff(f, k, x.state))


def _run(f: IterationFunction, terms: Sequence[int], cells: bytes) -> bytearray:
    buf = bytearray(cells)
    if f.component is not None:
        comp = f.component
        for k in terms:
            buf[k - 1] = comp(buf, k)
    else:
        for k in terms:
            buf[k - 1] = f.cell_update(buf, k)
    return buf


def iterate(f: IterationFunction, x: SystemPoint, n: int) -> SystemPoint:
    """Apply ``step_gf`` ``n`` times (0 <= n <= strategy length)."""
    terms = x.strategy.terms
    if n < 0:
        raise ChaoticIterationError("iteration count must be non-negative")
    if n > len(terms):
        raise ChaoticIterationError(
            f"strategy exhausted: {n} steps requested, {len(terms)} available"
        )
    if n == 0:
        return x
    buf = _run(f, terms[:n], x.state.cells)
    rest = Strategy._trusted(terms[n:], x.strategy.width)
    return SystemPoint(rest, BitState(bytes(buf)))


def run_to_end(f: IterationFunction, x: SystemPoint) -> BitState:
    """Final state after consuming the whole strategy."""
    return iterate(f, x, len(x.strategy)).state


def orbit(f: IterationFunction, x: SystemPoint, n: Optional[int] = None) -> list[BitState]:
    """States visited by the first ``n`` steps, starting state included."""
    if n is None:
        n = len(x.strategy)
    if not 0 <= n <= len(x.strategy):
        raise ChaoticIterationError(f"cannot take {n} steps from a strategy of length {len(x.strategy)}")
    buf = bytearray(x.state.cells)
    states = [x.state]
    for k in x.strategy.terms[:n]:
        buf[k - 1] = f.cell_update(buf, k)
        states.append(BitState(bytes(buf)))
    return states


def negation_parity_oracle(x: SystemPoint) -> BitState:
    """Closed form of a full run under negation: each cell flips once per occurrence."""
    counts = [0] * x.width
    for t in x.strategy.terms:
        counts[t - 1] += 1
    return BitState(bytes(c ^ (n & 1) for c, n in zip(x.state.cells, counts)))
