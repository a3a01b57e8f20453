"""Rational Dyck paths: validation, enumeration, encodings, lasers, promotion.

A path for the coprime pair (a, b) is a word of ``a`` north and ``b`` east
steps from (0, 0) to (b, a) whose interior lattice points (x, y) satisfy
b*y > a*x.  Points are (x, y) tuples; all geometry is integer arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from . import kernels
from .errors import InternalError, PreconditionError
from .numbers import CoprimePair

__all__ = [
    "DyckPath",
    "Laser",
    "RunWord",
    "PathStatistics",
    "PathError",
    "WrongStepCounts",
    "BelowDiagonal",
    "NotALaserSource",
    "InternalGeometryError",
    "validate",
    "enumerate_paths",
    "to_partition",
    "from_partition",
    "partition_bounds",
    "run_word",
    "from_run_word",
    "cycle_rectify",
    "statistics",
    "fire_laser",
    "fire_lasers",
    "promote",
]

Point = tuple[int, int]


class PathError(PreconditionError):
    pass


class WrongStepCounts(PathError):
    pass


class BelowDiagonal(PathError):
    def __init__(self, point: Point, points: Sequence[Point] = ()):
        self.point = point
        self.points = tuple(points) or (point,)
        super().__init__(f"lattice point {point} is not strictly above the diagonal")


class NotALaserSource(PathError):
    pass


class InternalGeometryError(InternalError):
    pass


@dataclass(frozen=True)
class DyckPath:
    """An (a,b)-Dyck path; build with :func:`validate` or the enumerators."""

    pair: CoprimePair
    steps: str

    @property
    def a(self) -> int:
        return self.pair.a

    @property
    def b(self) -> int:
        return self.pair.b

    @cached_property
    def points(self) -> tuple[Point, ...]:
        """All lattice points from (0, 0) to (b, a) in path order."""
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def north_xs(self) -> tuple[int, ...]:
        """x-coordinate of the north step leaving each height 0..a-1."""
        return tuple(self.points[t][0] for t, s in enumerate(self.steps) if s == "N")

    @property
    def internal_points(self) -> tuple[Point, ...]:
        return self.points[1:-1]

    def __str__(self):
        return self.steps


def _from_nx(pair: CoprimePair, nx: Sequence[int]) -> DyckPath:
    parts = []
    x = 0
    for v in nx:
        parts.append("E" * (v - x))
        parts.append("N")
        x = v
    parts.append("E" * (pair.b - x))
    return DyckPath(pair, "".join(parts))


def validate(pair, word: "str | Sequence[str]") -> DyckPath:
    """Return the path spelled by ``word`` or raise if it is not an (a,b)-Dyck path."""
    p = CoprimePair.of(pair)
    steps = "".join(word).upper()
    if set(steps) - {"N", "E"}:
        raise PathError(f"steps must be over {{N, E}}, got {steps!r}")
    if steps.count("N") != p.a or steps.count("E") != p.b:
        raise WrongStepCounts(
            f"need {p.a} N and {p.b} E steps, got {steps.count('N')} and {steps.count('E')}"
        )
    t = kernels.first_violation(steps, p.a, p.b)
    if t >= 0:
        path = DyckPath(p, steps)
        bad = [q for q in path.internal_points if p.b * q[1] <= p.a * q[0]]
        raise BelowDiagonal(path.points[t], bad)
    return DyckPath(p, steps)


def enumerate_paths(pair) -> Iterator[DyckPath]:
    """Yield every (a,b)-Dyck path once, in lexicographic order of its partition."""
    p = CoprimePair.of(pair)
    for nx in kernels.enumerate_nx(p.a, p.b):
        yield _from_nx(p, nx)


def partition_bounds(pair) -> tuple[int, ...]:
    """Largest allowed part lambda_i for i = 1..a-1."""
    p = CoprimePair.of(pair)
    return tuple(max(((p.a - i) * p.b) // p.a, 0) for i in range(1, p.a))


def to_partition(path: DyckPath) -> tuple[int, ...]:
    """Row lengths of the Ferrers diagram northwest of the path (a-1 parts)."""
    nx = path.north_xs
    return tuple(nx[path.a - i] for i in range(1, path.a))


def from_partition(pair, lam: Sequence[int]) -> DyckPath:
    p = CoprimePair.of(pair)
    lam = tuple(lam) + (0,) * (p.a - 1 - len(lam))
    if len(lam) != p.a - 1:
        raise PathError(f"partition needs at most {p.a - 1} parts, got {len(lam)}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise PathError(f"{lam} is not a partition")
    bounds = partition_bounds(p)
    for i, (x, cap) in enumerate(zip(lam, bounds), start=1):
        if x > cap:
            raise PathError(f"lambda_{i} = {x} exceeds the bound {cap}")
    nx = (0,) + tuple(reversed(lam))
    return _from_nx(p, nx)


@dataclass(frozen=True)
class RunWord:
    """Run-length word of a path.

    Vertical kind ('x'): per east step, southwest to northeast, the length of
    the north run just before it.  Horizontal kind ('y'): per north step,
    northeast to southwest, the length of the east run just after it.
    """

    kind: str
    letters: tuple[int, ...]


def run_word(path: DyckPath, kind: str = "x") -> RunWord:
    if kind == "x":
        out, run = [], 0
        for s in path.steps:
            if s == "N":
                run += 1
            else:
                out.append(run)
                run = 0
        return RunWord("x", tuple(out))
    if kind == "y":
        out, run = [], 0
        for s in reversed(path.steps):
            if s == "E":
                run += 1
            else:
                out.append(run)
                run = 0
        return RunWord("y", tuple(out))
    raise PreconditionError(f"run word kind must be 'x' or 'y', got {kind!r}")


def from_run_word(pair, word: "RunWord | Sequence[int]", kind: str | None = None) -> DyckPath:
    p = CoprimePair.of(pair)
    if isinstance(word, RunWord):
        kind, letters = word.kind, word.letters
    else:
        kind, letters = kind or "x", tuple(word)
    if any(v < 0 for v in letters):
        raise PreconditionError("run word letters must be nonnegative")
    if kind == "x":
        if len(letters) != p.b or sum(letters) != p.a:
            raise PreconditionError(f"vertical word needs length {p.b} and sum {p.a}")
        steps = "".join("N" * v + "E" for v in letters)
    elif kind == "y":
        if len(letters) != p.a or sum(letters) != p.b:
            raise PreconditionError(f"horizontal word needs length {p.a} and sum {p.b}")
        steps = "".join("N" + "E" * v for v in reversed(letters))
    else:
        raise PreconditionError(f"run word kind must be 'x' or 'y', got {kind!r}")
    return validate(p, steps)


def cycle_rectify(pair, word: "RunWord | Sequence[int]") -> tuple[DyckPath, int]:
    """The unique cyclic conjugate of a vertical run word that is a Dyck path.

    Returns the path and the rotation offset k with word[k:] + word[:k].
    """
    p = CoprimePair.of(pair)
    letters = tuple(word.letters if isinstance(word, RunWord) else word)
    if len(letters) != p.b or sum(letters) != p.a or any(v < 0 for v in letters):
        raise PreconditionError(f"vertical word needs {p.b} nonnegative letters summing to {p.a}")
    k = kernels.rectify_offset(letters, p.a, p.b)
    if k < 0:
        raise InternalError(f"no cyclic conjugate of {letters} is a Dyck path")
    return from_run_word(p, letters[k:] + letters[:k], "x"), k


@dataclass(frozen=True)
class PathStatistics:
    valleys: tuple[Point, ...]
    north_bottoms: tuple[Point, ...]
    run_type: tuple[int, ...]
    nontrivial_runs: int


def statistics(path: DyckPath) -> PathStatistics:
    pts, steps = path.points, path.steps
    valleys = tuple(
        pts[t] for t in range(1, len(steps)) if steps[t - 1] == "E" and steps[t] == "N"
    )
    bottoms = tuple(pts[t] for t, s in enumerate(steps) if s == "N" and t > 0)
    counts = Counter(run_word(path, "x").letters)
    run_type = tuple(counts.get(j, 0) for j in range(path.a + 1))
    return PathStatistics(valleys, bottoms, run_type, len(valleys) + 1)


@dataclass(frozen=True)
class Laser:
    """Segment of slope a/b from ``source`` to (end_x, end_height) on an east step.

    ``hit`` is the right end of that east step.
    """

    source: Point
    end_x: Fraction
    end_height: int
    hit: Point


def _laser(path: DyckPath, i: int, j: int, h: int, num: int) -> Laser:
    if h < 0:
        raise InternalGeometryError(f"laser from {(i, j)} does not end inside an east step")
    return Laser((i, j), Fraction(num, path.a), h, (num // path.a + 1, h))


def fire_laser(path: DyckPath, source: Point) -> Laser:
    """Fire the slope-a/b laser northeast from a non-origin north-step bottom."""
    i, j = source
    nx = path.north_xs
    if not (1 <= j < path.a and nx[j] == i):
        raise NotALaserSource(f"{source} is not the bottom of a non-initial north step")
    h, num = kernels.laser_end(nx, path.a, path.b, i, j)
    return _laser(path, i, j, h, num)


def fire_lasers(path: DyckPath, sources: Sequence[Point] | None = None) -> list[Laser]:
    """Lasers from ``sources`` (default: every non-origin north-step bottom)."""
    if sources is None:
        nx = path.north_xs
        ends = kernels.laser_ends(nx, path.a, path.b)
        return [_laser(path, nx[k], k, h, num) for k, (h, num) in enumerate(ends, start=1)]
    return [fire_laser(path, s) for s in sources]


def promote(path: DyckPath) -> DyckPath:
    return DyckPath(path.pair, kernels.promote(path.steps, path.a, path.b))
