"""Avalanche and truncated-collision campaigns over the hash.

All randomness flows from one ``numpy.random.Generator`` built with
``numpy.random.default_rng(seed)`` (PCG64), so a report is fully determined by
its corpus, trial count, mutation mode and seed.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from cihash.core import NEGATION, IterationFunction
from cihash.hashing import STATE_BITS, Message, as_bytes, digest

PRINTABLE = np.arange(32, 127, dtype=np.uint8)
MUTATION_MODES = ("char", "bit", "mixed")

Corpus = Callable[[np.random.Generator], bytes]


def random_ascii_corpus(min_len: int = 10, max_len: int = 500) -> Corpus:
    """Messages of uniformly random length drawn from printable ASCII."""
    def draw(rng: np.random.Generator) -> bytes:
        n = int(rng.integers(min_len, max_len + 1))
        return rng.choice(PRINTABLE, size=n).tobytes()
    draw.description = f"printable-ascii[{min_len},{max_len}]"
    return draw


def mutate(text: bytes, rng: np.random.Generator, mode: str = "mixed") -> bytes:
    """Apply one single-position edit.

    ``char`` flips the case of a letter or substitutes another printable
    character; ``bit`` flips one of the seven bits of a character; ``mixed``
    picks one of the two per call.
    """
    if not text:
        raise ValueError("cannot mutate an empty message")
    if mode not in MUTATION_MODES:
        raise ValueError(f"unknown mutation mode {mode!r}")
    if mode == "mixed":
        mode = "char" if rng.integers(2) == 0 else "bit"
    buf = bytearray(text)
    pos = int(rng.integers(len(buf)))
    c = buf[pos]
    if mode == "bit":
        buf[pos] = c ^ (1 << int(rng.integers(7)))
    elif chr(c).isalpha():
        buf[pos] = ord(chr(c).swapcase())
    else:
        choices = PRINTABLE[PRINTABLE != c]
        buf[pos] = int(rng.choice(choices))
    return bytes(buf)


def _digest_bits(text: Message, f: IterationFunction) -> np.ndarray:
    return np.frombuffer(digest(text, f).state.cells, dtype=np.uint8)


def avalanche_trial(text: Message, mutated: Message, f: IterationFunction = NEGATION) -> int:
    """Hamming distance between the digests of two different messages."""
    if as_bytes(text) == as_bytes(mutated):
        raise ValueError("avalanche trial needs two different messages")
    return int(np.count_nonzero(_digest_bits(text, f) != _digest_bits(mutated, f)))


def hex_distance(a: str, b: str) -> int:
    """Bit-level Hamming distance between two equal-length hex digests."""
    if len(a) != len(b):
        raise ValueError("digests differ in length")
    return (int(a, 16) ^ int(b, 16)).bit_count()


@dataclass(frozen=True)
class AvalancheReport:
    trials: int
    seed: int
    mean_distance: float
    std_distance: float
    per_bit_flip_rate: tuple[float, ...]
    histogram: tuple[int, ...]
    distances: tuple[int, ...] = field(repr=False)
    mode: str = "mixed"
    corpus: str = ""

    def to_text(self) -> str:
        """Key-value rendering; list fields are comma separated."""
        lines = [
            f"trials = {self.trials}",
            f"seed = {self.seed}",
            "rng = numpy.default_rng/PCG64",
            f"mode = {self.mode}",
            f"corpus = {self.corpus}",
            f"mean_distance = {self.mean_distance!r}",
            f"std_distance = {self.std_distance!r}",
            f"min_flip_rate = {min(self.per_bit_flip_rate)!r}",
            f"max_flip_rate = {max(self.per_bit_flip_rate)!r}",
            "per_bit_flip_rate = " + ",".join(repr(r) for r in self.per_bit_flip_rate),
            "histogram = " + ",".join(str(h) for h in self.histogram),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, distances: tuple[int, ...] = ()) -> "AvalancheReport":
        kv = {}
        for line in text.splitlines():
            if " = " in line:
                k, v = line.split(" = ", 1)
                kv[k.strip()] = v.strip()
        return cls(
            trials=int(kv["trials"]),
            seed=int(kv["seed"]),
            mean_distance=float(kv["mean_distance"]),
            std_distance=float(kv["std_distance"]),
            per_bit_flip_rate=tuple(float(x) for x in kv["per_bit_flip_rate"].split(",")),
            histogram=tuple(int(x) for x in kv["histogram"].split(",")),
            distances=distances,
            mode=kv.get("mode", "mixed"),
            corpus=kv.get("corpus", ""),
        )

    def table(self) -> str:
        """One CSV row per trial: seed offset and distance."""
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["seed_offset", "distance"])
        w.writerows(enumerate(self.distances))
        return out.getvalue()


def aggregate(diffs: list[np.ndarray], seed: int, mode: str = "mixed", corpus: str = "") -> AvalancheReport:
    """Build a report from per-trial XOR vectors of the digest pairs."""
    if not diffs:
        raise ValueError("no trials to aggregate")
    stack = np.vstack(diffs).astype(np.int64)
    distances = stack.sum(axis=1)
    trials = len(distances)
    hist = np.bincount(distances, minlength=STATE_BITS + 1)
    values = np.arange(STATE_BITS + 1)
    mean = float((hist * values).sum() / trials)
    var = float((hist * (values - mean) ** 2).sum() / trials)
    rates = stack.sum(axis=0) / trials
    return AvalancheReport(
        trials=trials,
        seed=seed,
        mean_distance=mean,
        std_distance=var ** 0.5,
        per_bit_flip_rate=tuple(float(r) for r in rates),
        histogram=tuple(int(h) for h in hist),
        distances=tuple(int(d) for d in distances),
        mode=mode,
        corpus=corpus,
    )


def avalanche_report(
    corpus: Corpus | None = None,
    trials: int = 1000,
    seed: int = 0,
    mode: str = "mixed",
    f: IterationFunction = NEGATION,
) -> AvalancheReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    corpus = corpus or random_ascii_corpus()
    rng = np.random.default_rng(seed)
    diffs = []
    for _ in range(trials):
        text = corpus(rng)
        mutated = mutate(text, rng, mode)
        diffs.append(_digest_bits(text, f) ^ _digest_bits(mutated, f))
    return aggregate(diffs, seed, mode, getattr(corpus, "description", ""))


@dataclass(frozen=True)
class CollisionResult:
    width: int
    samples: int
    seed: int
    collisions: int
    expected: float

    def to_text(self) -> str:
        return (
            f"width = {self.width}\n"
            f"samples = {self.samples}\n"
            f"seed = {self.seed}\n"
            f"collisions = {self.collisions}\n"
            f"expected = {self.expected!r}\n"
        )


def expected_collisions(width: int, samples: int) -> float:
    """Birthday approximation for colliding pairs among ``samples`` draws."""
    return samples * (samples - 1) / 2 ** (width + 1)


def collision_scan(
    width: int,
    samples: int,
    seed: int = 0,
    corpus: Corpus | None = None,
    f: IterationFunction = NEGATION,
) -> CollisionResult:
    """Count colliding pairs among digests truncated to their first ``width`` bits."""
    if not 8 <= width <= 32:
        raise ValueError("width must be in [8, 32]")
    if samples < 2:
        raise ValueError("samples must be at least 2")
    corpus = corpus or random_ascii_corpus(10, 64)
    rng = np.random.default_rng(seed)
    seen: set[bytes] = set()
    prefixes: Counter[int] = Counter()
    while len(seen) < samples:
        text = corpus(rng)
        if text in seen:
            continue
        seen.add(text)
        h = digest(text, f).hex
        prefixes[int(h, 16) >> (STATE_BITS - width)] += 1
    pairs = sum(c * (c - 1) // 2 for c in prefixes.values())
    return CollisionResult(width, samples, seed, pairs, expected_collisions(width, samples))
