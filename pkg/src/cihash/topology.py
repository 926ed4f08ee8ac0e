"""Metric on the phase space and constructive chaos witnesses.

Distances are computed exactly with ``fractions.Fraction`` on the represented
prefix of each strategy, so metric axioms hold without floating-point slack.
A term missing from a finite strategy counts as the value 0, which keeps the
strategy part a pseudometric in [0, 1).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from cihash.core import (
    NEGATION,
    BitState,
    ChaoticIterationError,
    IterationFunction,
    Strategy,
    SystemPoint,
    iterate,
    orbit,
)

DEFAULT_DEPTH = 16


@dataclass(frozen=True)
class DistanceValue:
    state_part: int
    strategy_part: Fraction
    depth: int

    @property
    def truncation_bound(self) -> Fraction:
        """Upper bound on the strategy terms dropped beyond ``depth``."""
        return Fraction(1, 10**self.depth)

    @property
    def total(self) -> Fraction:
        return self.state_part + self.strategy_part

    def certainly_below(self, radius: float) -> bool:
        """True when the untruncated distance is provably < ``radius``."""
        return self.total + self.truncation_bound <= Fraction(radius)

    def __float__(self) -> float:
        return float(self.total)


def _term(terms: Sequence[int], k: int) -> int:
    return terms[k] if k < len(terms) else 0


def distance(x: SystemPoint, y: SystemPoint, depth: int = DEFAULT_DEPTH) -> DistanceValue:
    """Hamming distance on states plus the decimal-weighted strategy series.

    The series is summed over the first ``depth`` terms.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if x.width != y.width:
        raise ChaoticIterationError(f"width mismatch: {x.width} != {y.width}")
    n = x.width
    a, b = x.strategy.terms, y.strategy.terms
    scaled = 0
    for k in range(depth):
        scaled = scaled * 10 + abs(_term(a, k) - _term(b, k))
    return DistanceValue(
        state_part=x.state.hamming(y.state),
        strategy_part=Fraction(9 * scaled, n * 10**depth),
        depth=depth,
    )


def prefix_length(epsilon: float) -> int:
    """Smallest k >= 1 with 10**-k <= epsilon.

    Agreement on this many leading strategy terms (with equal states) puts a
    point strictly within ``epsilon``.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    eps = Fraction(epsilon)
    k = 1
    while Fraction(1, 10**k) > eps:
        k += 1
    return k


def periodic_extension(terms: Sequence[int], length: int) -> tuple[int, ...]:
    if not terms:
        return ()
    reps = -(-length // len(terms))
    return tuple(terms) * reps if reps > 1 else tuple(terms)


@dataclass(frozen=True)
class PeriodicWitness:
    """A point whose strategy repeats with one full period stored."""

    point: SystemPoint
    period: int
    epsilon: float
    prefix: int
    appended: tuple[int, ...]

    def unrolled(self, length: int) -> SystemPoint:
        """The point with its strategy repeated to at least ``length`` terms."""
        terms = periodic_extension(self.point.strategy.terms, length)
        return SystemPoint(Strategy(terms, self.point.width), self.point.state)

    def returns_after_period(self, f: IterationFunction = NEGATION) -> bool:
        end = iterate(f, self.point, self.period)
        return end.state == self.point.state

    def verify(self, target: SystemPoint, depth: int = DEFAULT_DEPTH, f: IterationFunction = NEGATION) -> bool:
        if self.period != len(self.point.strategy):
            return False
        probe = self.unrolled(max(depth, len(target.strategy)))
        close = distance(probe, target, depth).certainly_below(self.epsilon)
        return close and self.returns_after_period(f)


def construct_periodic_point(target: SystemPoint, epsilon: float) -> PeriodicWitness:
    """Build a periodic point of the negation system within ``epsilon`` of ``target``.

    Copies the leading strategy terms that fix the distance, runs them, then
    appends each cell that ended up different from the target state, in
    increasing order, so one period brings the state back.
    """
    k0 = prefix_length(epsilon)
    if len(target.strategy) < k0:
        raise ChaoticIterationError(
            f"target strategy has {len(target.strategy)} terms, {k0} needed for epsilon={epsilon}"
        )
    reached = iterate(NEGATION, target, k0).state
    fixups = tuple(reached.differing_cells(target.state))
    terms = target.strategy.terms[:k0] + fixups
    point = SystemPoint(Strategy(terms, target.width), target.state)
    return PeriodicWitness(point, len(terms), epsilon, k0, fixups)


class Ball(NamedTuple):
    center: SystemPoint
    radius: float


@dataclass(frozen=True)
class TransitiveWitness:
    point: SystemPoint
    steps: int
    ball_a: Ball
    ball_b: Ball

    def verify(self, depth: int = DEFAULT_DEPTH, f: IterationFunction = NEGATION) -> bool:
        """Check both ball memberships by simulation, conservatively."""
        if not distance(self.point, self.ball_a.center, depth).certainly_below(self.ball_a.radius):
            return False
        image = iterate(f, self.point, self.steps)
        return distance(image, self.ball_b.center, depth).certainly_below(self.ball_b.radius)


def construct_transitive_point(ball_a: Ball | tuple, ball_b: Ball | tuple) -> TransitiveWitness:
    """A point of ``ball_a`` whose orbit lands on the center of ``ball_b``.

    Strategy: the leading terms of A's strategy, then the cells where the
    state reached by those terms differs from B's state, then all of B's
    strategy. After ``k0 + k1`` steps the point coincides with B's center.
    """
    ball_a, ball_b = Ball(*ball_a), Ball(*ball_b)
    xa, xb = ball_a.center, ball_b.center
    if xa.width != xb.width:
        raise ChaoticIterationError(f"width mismatch: {xa.width} != {xb.width}")
    n = xa.width
    for r in (ball_a.radius, ball_b.radius):
        if not 0 < r < n + 1:
            raise ValueError(f"radius {r} outside (0, {n + 1})")
    if xa == xb:
        return TransitiveWitness(xa, 0, ball_a, ball_b)
    k0 = prefix_length(ball_a.radius)
    if len(xa.strategy) < k0:
        raise ChaoticIterationError(
            f"ball A strategy has {len(xa.strategy)} terms, {k0} needed for radius {ball_a.radius}"
        )
    reached = iterate(NEGATION, xa, k0).state
    fixups = tuple(reached.differing_cells(xb.state))
    terms = xa.strategy.terms[:k0] + fixups + xb.strategy.terms
    point = SystemPoint(Strategy(terms, n), xa.state)
    return TransitiveWitness(point, k0 + len(fixups), ball_a, ball_b)


def is_periodic_but_finite(s: Strategy | Sequence[int]) -> bool:
    """True when the finite sequence repeats with a proper divisor period."""
    terms = tuple(s.terms if isinstance(s, Strategy) else s)
    n = len(terms)
    for p in range(1, n):
        if n % p == 0 and all(terms[i] == terms[i + p] for i in range(n - p)):
            return True
    return False


class Separation(NamedTuple):
    point: SystemPoint
    steps: int


def sensitivity_probe(
    x: SystemPoint,
    epsilon: float,
    horizon: int,
    f: IterationFunction = NEGATION,
) -> Optional[Separation]:
    """Find a neighbour of ``x`` whose orbit separates by at least one cell.

    Single-term alterations after the protected prefix are tried in order of
    position, then of replacement value. Returns ``None`` when nothing within
    ``horizon`` steps separates.
    """
    if len(x.strategy) < horizon:
        raise ChaoticIterationError(
            f"horizon {horizon} exceeds strategy length {len(x.strategy)}"
        )
    keep = prefix_length(epsilon)
    base = orbit(f, x, horizon)
    terms = x.strategy.terms
    for pos in range(keep, horizon):
        for v in range(1, x.width + 1):
            if v == terms[pos]:
                continue
            altered = terms[:pos] + (v,) + terms[pos + 1:]
            y = SystemPoint(Strategy(altered, x.width), x.state)
            for n, state in enumerate(orbit(f, y, horizon)):
                if state.hamming(base[n]) >= 1:
                    return Separation(y, n)
    return None


def random_point(rng: random.Random, width: int, length: int) -> SystemPoint:
    terms = tuple(rng.randint(1, width) for _ in range(length))
    state = BitState(bytes(rng.getrandbits(1) for _ in range(width)))
    return SystemPoint(Strategy(terms, width), state)


class SuiteResult(NamedTuple):
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        return f"{self.name}: {self.passed}/{self.total} {'PASS' if self.ok else 'FAIL'}"


def periodic_suite(width: int, epsilon: float, trials: int, seed: int = 0,
                   depth: int = DEFAULT_DEPTH, length: int = 24) -> SuiteResult:
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        target = random_point(rng, width, length)
        w = construct_periodic_point(target, epsilon)
        passed += w.verify(target, depth)
    return SuiteResult(f"periodic N={width} eps={epsilon:g}", passed, trials)


def transitive_suite(width: int, trials: int, seed: int = 0,
                     depth: int = DEFAULT_DEPTH, length: int = 24) -> SuiteResult:
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        a = random_point(rng, width, length)
        b = random_point(rng, width, length)
        ra = 10 ** rng.uniform(-5, math.log10(width + 1) - 1e-9)
        rb = 10 ** rng.uniform(-5, math.log10(width + 1) - 1e-9)
        w = construct_transitive_point((a, ra), (b, rb))
        passed += w.verify(depth)
    return SuiteResult(f"transitive N={width}", passed, trials)


def metric_suite(width: int, trials: int, seed: int = 0,
                 depth: int = DEFAULT_DEPTH, length: int = 24) -> SuiteResult:
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        x, y, z = (random_point(rng, width, rng.randint(0, length)) for _ in range(3))
        dxy, dyx = distance(x, y, depth), distance(y, x, depth)
        dxz, dyz = distance(x, z, depth), distance(y, z, depth)
        ok = (
            dxy == dyx
            and distance(x, x, depth).total == 0
            and 0 <= dxy.strategy_part < 1
            and math.floor(dxy.total) == x.state.hamming(y.state)
            and dxz.total <= dxy.total + dyz.total + 2 * dxy.truncation_bound
        )
        passed += ok
    return SuiteResult(f"metric N={width}", passed, trials)


def sensitivity_suite(width: int, epsilon: float, trials: int, seed: int = 0,
                      horizon: int = 24) -> SuiteResult:
    rng = random.Random(seed)
    passed = 0
    for _ in range(trials):
        x = random_point(rng, width, horizon)
        found = sensitivity_probe(x, epsilon, horizon)
        if found is None:
            continue
        y, n = found
        passed += (
            distance(x, y).certainly_below(epsilon)
            and iterate(NEGATION, x, n).state.hamming(iterate(NEGATION, y, n).state) >= 1
        )
    return SuiteResult(f"sensitivity N={width} eps={epsilon:g}", passed, trials)
