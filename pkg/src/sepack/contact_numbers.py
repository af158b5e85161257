"""Contact numbers of totally separable packings: formulas, constructions,
and the exhaustive polyomino oracle.

The planar maximum is floor(2(n - sqrt(n))), attained by quasi-square
polyominoes of n cells with unit circles inscribed in the 2x2 cells; in
higher dimensions floor(d(n - n^((d-1)/d))) is an upper bound with
equality at perfect d-th powers, realized by near-cubical boxes.  Both
formulas are evaluated in exact integer arithmetic so perfect powers
never lose a unit to floating-point rounding.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import Packing, Window
from .errors import EnumerationLimitError

# exhaustive enumeration limits: fixed polyominoes up to n=10 (36,446 of
# them) and fixed polycubes up to n=8 (162,913) stay comfortably fast
ORACLE_LIMITS = {2: 10, 3: 8}


def c2_formula(n: int) -> int:
    """Maximum contact number of a totally separable packing of n unit
    circles: floor(2(n - sqrt(n))), exact at perfect squares."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = math.isqrt(n)
    if k * k == n:
        return 2 * (n - k)
    # 2*sqrt(n) is irrational here, so ceil(2 sqrt n) = isqrt(4n) + 1
    return 2 * n - (math.isqrt(4 * n) + 1)


def _floor_root(n: int, d: int) -> int:
    """floor(n^(1/d)) in exact integer arithmetic."""
    k = int(round(n ** (1.0 / d)))
    while k > 0 and k**d > n:
        k -= 1
    while (k + 1) ** d <= n:
        k += 1
    return k


def cd_upper_bound(n: int, d: int) -> int:
    """Upper bound floor(d(n - n^((d-1)/d))) on the contact number of a
    totally separable packing of n unit spheres in R^d; an equality when
    n is a perfect d-th power."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    k = _floor_root(n, d)
    if k**d == n:
        return d * (n - k ** (d - 1))
    # largest integer m with m <= d*n - d*n^((d-1)/d), i.e. with
    # d^d * n^(d-1) <= (d*n - m)^d; start from the float estimate and
    # correct with integer comparisons only
    m = int(math.floor(d * (n - n ** ((d - 1) / d))))
    lhs = d**d * n ** (d - 1)
    while d * n - m <= 0 or lhs > (d * n - m) ** d:
        m -= 1
    while lhs <= (d * n - (m + 1)) ** d:
        m += 1
    return m


_UNIT_STEPS = {}


def _unit_steps(d: int):
    if d not in _UNIT_STEPS:
        steps = []
        for axis in range(d):
            for sign in (1, -1):
                e = [0] * d
                e[axis] = sign
                steps.append(tuple(e))
        _UNIT_STEPS[d] = tuple(steps)
    return _UNIT_STEPS[d]


def _add(cell, step):
    return tuple(a + b for a, b in zip(cell, step))


@dataclass(frozen=True)
class Polyomino:
    """Finite set of unit cells over Z^d.

    Shared faces and perimeter are counted independently; the facet
    identity 2d*n = perimeter + 2*shared_faces ties them together.
    """

    dimension: int
    cells: frozenset

    def __post_init__(self):
        for c in self.cells:
            if len(c) != self.dimension:
                raise ValueError("cell arity does not match dimension")

    @property
    def area(self) -> int:
        return len(self.cells)

    @cached_property
    def shared_faces(self) -> int:
        count = 0
        for cell in self.cells:
            for axis in range(self.dimension):
                up = list(cell)
                up[axis] += 1
                if tuple(up) in self.cells:
                    count += 1
        return count

    @cached_property
    def perimeter(self) -> int:
        """Number of free facets (facets not shared with another cell)."""
        count = 0
        for cell in self.cells:
            for step in _unit_steps(self.dimension):
                if _add(cell, step) not in self.cells:
                    count += 1
        return count

    def lift(self, label: str = "") -> Packing:
        """Inscribe a unit sphere in every 2x...x2 cell.

        Cell (c_1, ..., c_d) maps to center (2c_1+1, ..., 2c_d+1), so two
        spheres touch exactly when their cells share a face, and every
        tangent hyperplane is a grid hyperplane.
        """
        cells = np.array(sorted(self.cells), dtype=float).reshape(-1, self.dimension)
        centers = 2.0 * cells + 1.0
        lo = 2.0 * cells.min(axis=0)
        hi = 2.0 * (cells.max(axis=0) + 1.0)
        return Packing(centers, Window(lo - 1e-9, hi + 1e-9, 0.0), 1.0, label)


@dataclass(frozen=True)
class BoxSpec:
    """Near-cubical box (k+delta_1) x ... x (k+delta_d) holding n cells."""

    dimension: int
    sides: tuple
    cells_used: int

    def __post_init__(self):
        if any(s < 1 for s in self.sides):
            raise ValueError("box sides must be >= 1")
        if math.prod(self.sides) < self.cells_used:
            raise ValueError("box must hold at least n cells")

    @property
    def remainder(self) -> int:
        return math.prod(self.sides) - self.cells_used


def choose_box(n: int, d: int) -> BoxSpec:
    """Smallest box of the form (k+delta_i), delta_i in {0,1}, holding n
    cells; ties broken toward the lexicographically smallest delta."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    k = _floor_root(n, d)
    best = None
    for deltas in itertools.product((0, 1), repeat=d):
        sides = tuple(k + dd for dd in deltas)
        vol = math.prod(sides)
        if vol >= n and (best is None or vol < math.prod(best)):
            best = sides
    return BoxSpec(d, best, n)


def quasi_square_packing(n: int) -> tuple[Polyomino, Packing]:
    """Quasi-square polyomino of n cells and its inscribed circle packing.

    For a in {floor(sqrt n), ceil(sqrt n)} build a columns of full rows
    plus one contiguous remainder row, and keep the variant with more
    shared faces; its contact count is exactly c2_formula(n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = math.isqrt(n)
    widths = [k] if k * k == n else [k, k + 1]
    best = None
    for a in widths:
        rows, rem = divmod(n, a)
        cells = {(x, y) for x in range(a) for y in range(rows)}
        cells.update((x, rows) for x in range(rem))
        omino = Polyomino(2, frozenset(cells))
        if best is None or omino.shared_faces > best.shared_faces:
            best = omino
    return best, best.lift(f"quasi-square n={n}")


def box_packing(n: int, d: int) -> tuple[Polyomino, Packing]:
    """Near-cubical box polyomino of n cells in Z^d and its lifted packing.

    Cells fill the chosen box in lexicographic order, so the remainder
    sits as a contiguous run against a filled face.  The shared-face
    count never exceeds cd_upper_bound(n, d) and attains it when n is a
    perfect d-th power.
    """
    spec = choose_box(n, d)
    cells = itertools.islice(
        itertools.product(*(range(s) for s in spec.sides)), n
    )
    omino = Polyomino(d, frozenset(cells))
    return omino, omino.lift(f"box {'x'.join(map(str, spec.sides))} n={n}")


def enumerate_fixed_polyforms(n: int, d: int = 2) -> dict:
    """All fixed (translation-distinct) polyominoes/polycubes of n cells.

    Returns {canonical cell tuple: shared-face count}.  Canonical form is
    the translate whose cellwise minimum is the origin, as a sorted
    tuple.  Plain growth-and-dedup: simple enough to trust as an oracle.
    """
    seed = (tuple([0] * d),)
    shapes = {seed: 0}
    for _ in range(n - 1):
        grown = {}
        for shape, shared in shapes.items():
            cellset = set(shape)
            for cell in shape:
                for step in _unit_steps(d):
                    new = _add(cell, step)
                    if new in cellset:
                        continue
                    gained = sum(
                        1 for s in _unit_steps(d) if _add(new, s) in cellset
                    )
                    cells = list(shape) + [new]
                    mins = [min(c[i] for c in cells) for i in range(d)]
                    canon = tuple(
                        sorted(tuple(a - m for a, m in zip(c, mins)) for c in cells)
                    )
                    if canon not in grown:
                        grown[canon] = shared + gained
        shapes = grown
    return shapes


def polyomino_oracle(n: int, d: int = 2) -> int:
    """Exhaustive maximum shared-face count over all n-cell polyforms.

    Independent of the closed-form formulas and of the quasi-square/box
    constructions; limited to small n where full enumeration is feasible.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = ORACLE_LIMITS.get(d)
    if limit is None:
        raise EnumerationLimitError(
            f"oracle enumeration supports d in {sorted(ORACLE_LIMITS)}, not d={d}"
        )
    if n > limit:
        raise EnumerationLimitError(
            f"oracle enumeration limit for d={d} is n <= {limit}, got n={n}"
        )
    return max(enumerate_fixed_polyforms(n, d).values())
