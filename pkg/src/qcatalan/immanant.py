"""Character-weighted permutation sums, exact determinants, and positivity sweeps.

``immanant(m, lam)`` computes sum over permutations of
chi^lam(cycle type) times the diagonal product.  The permutation products
are accumulated into one sum per cycle type, so every shape lam of the same
size is then a cheap integer combination; ``positivity_sweep`` exploits
this to report all shapes of every selected submatrix.

``determinant`` is implemented independently by fraction-free (Bareiss)
elimination with exact polynomial division, so the two routes to the
alternating sum can be checked against each other.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations
from math import comb

from .csmatrix import CSMatrix
from .errors import ShapeError, SizeCapExceeded
from .qpoly import ONE, QPoly, ZERO
from .symchar import Partition, character_table, degree, is_partition, partitions_of

SIZE_CAP_ENV = "QCATALAN_SIZE_CAP"
DEFAULT_SIZE_CAP = 9

Grid = tuple[tuple[QPoly, ...], ...]


def _size_cap(override: int | None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SIZE_CAP_ENV}={raw!r} is not an int") from None


def _as_entries(m: CSMatrix | list | tuple) -> Grid:
    rows = m.entries if isinstance(m, CSMatrix) else m
    grid = tuple(tuple(row) for row in rows)
    widths = {len(row) for row in grid}
    if len(widths) > 1:
        raise ShapeError("rows have unequal lengths")
    for row in grid:
        for cell in row:
            if not isinstance(cell, QPoly):
                raise TypeError(f"matrix entry {cell!r} is not a QPoly")
    return grid


def _require_square(grid: Grid) -> int:
    n = len(grid)
    if n and len(grid[0]) != n:
        raise ShapeError(f"matrix is {n}x{len(grid[0])}, not square")
    return n


def _cycle_type0(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation of 0..n-1 given as an image tuple."""
    n = len(perm)
    seen = [False] * n
    lengths: list[int] = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@cache
def _perms_with_types(n: int) -> tuple[tuple[tuple[int, ...], Partition], ...]:
    return tuple((perm, _cycle_type0(perm)) for perm in permutations(range(n)))


def _type_sums(grid: Grid) -> dict[Partition, QPoly]:
    """Per-cycle-type sums of permutation diagonal products."""
    n = len(grid)
    sums = {mu: ZERO for mu in partitions_of(n)}
    if n <= 7:
        pairs = _perms_with_types(n)
    else:
        pairs = ((perm, _cycle_type0(perm)) for perm in permutations(range(n)))
    for perm, mu in pairs:
        prod = ONE
        for i, j in enumerate(perm):
            cell = grid[i][j]
            if not cell:
                break
            prod = prod * cell
        else:
            sums[mu] = sums[mu] + prod
    return sums


def _combine(sums: dict[Partition, QPoly], lam: Partition, n: int) -> QPoly:
    table = character_table(n)
    total = ZERO
    for mu in partitions_of(n):
        value = sums[mu]
        if value:
            total = total + table.value(lam, mu) * value
    return total


def immanant(m: CSMatrix | list | tuple, lam: Partition, *, size_cap: int | None = None) -> QPoly:
    """The lam-immanant: sum over permutations of chi^lam times the product."""
    grid = _as_entries(m)
    n = _require_square(grid)
    if not is_partition(lam):
        raise ValueError(f"{lam!r} is not a partition")
    if sum(lam) != n:
        raise ShapeError(f"shape {lam} does not partition the matrix size {n}")
    cap = _size_cap(size_cap)
    if n > cap:
        raise SizeCapExceeded(f"matrix size {n} exceeds the size cap {cap}")
    if n == 0:
        return ONE
    return _combine(_type_sums(grid), lam, n)


def determinant(m: CSMatrix | list | tuple) -> QPoly:
    """Exact determinant by fraction-free elimination (no permutation sums)."""
    grid = _as_entries(m)
    n = _require_square(grid)
    if n == 0:
        return ONE
    work = [list(row) for row in grid]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if work[k][k].is_zero():
            for swap in range(k + 1, n):
                if not work[swap][k].is_zero():
                    work[k], work[swap] = work[swap], work[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                work[i][j] = value.exact_div(prev)
            work[i][k] = ZERO
        prev = work[k][k]
    return work[n - 1][n - 1] if sign == 1 else -work[n - 1][n - 1]


# -- positivity sweeps ------------------------------------------------


@dataclass(frozen=True)
class MatrixProvenance:
    """Where a swept submatrix came from."""

    family: str
    kind: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "kind": self.kind,
            "rows": list(self.rows),
            "cols": list(self.cols),
        }


@dataclass(frozen=True)
class ImmanantReport:
    """One immanant of one submatrix, with its dominance gap.

    ``dominance_gap`` is the immanant minus degree(lam) times the
    determinant of the same submatrix.
    """

    lam: Partition
    value: QPoly
    q_nonnegative: bool
    dominance_gap: QPoly
    gap_nonnegative: bool
    provenance: MatrixProvenance

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "value": self.value.to_json(),
            "q_nonnegative": self.q_nonnegative,
            "dominance_gap": self.dominance_gap.to_json(),
            "gap_nonnegative": self.gap_nonnegative,
            "provenance": self.provenance.to_json_dict(),
        }


@dataclass(frozen=True)
class SweepResult:
    """All reports of a sweep plus how the submatrices were selected."""

    reports: tuple[ImmanantReport, ...]
    exhaustive: bool
    seed: int
    total_candidates: int

    def __iter__(self):
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)

    @property
    def ok(self) -> bool:
        return all(r.q_nonnegative and r.gap_nonnegative for r in self.reports)

    def violations(self) -> tuple[ImmanantReport, ...]:
        return tuple(
            r for r in self.reports if not (r.q_nonnegative and r.gap_nonnegative)
        )


def positivity_sweep(
    m: CSMatrix,
    max_size: int,
    *,
    seed: int = 0,
    exhaustive_limit: int = 20000,
    size_cap: int | None = None,
) -> SweepResult:
    """Report every immanant of square submatrices up to ``max_size``.

    All (rows, cols) selections of each size 1..max_size are swept when
    their total count is at most ``exhaustive_limit``; otherwise that many
    selections are sampled deterministically from ``seed``.
    """
    grid = _as_entries(m)
    n = _require_square(grid)
    cap = _size_cap(size_cap)
    if max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size!r}")
    if max_size > cap:
        raise SizeCapExceeded(f"max_size {max_size} exceeds the size cap {cap}")
    top = min(max_size, n)
    sizes = range(1, top + 1)
    per_size = {s: comb(n, s) ** 2 for s in sizes}
    total = sum(per_size.values())
    exhaustive = total <= exhaustive_limit

    if exhaustive:
        selections = [
            (rows, cols)
            for s in sizes
            for rows in combinations(range(n), s)
            for cols in combinations(range(n), s)
        ]
    else:
        rng = random.Random(seed)
        weights = [per_size[s] for s in sizes]
        selections = []
        for _ in range(exhaustive_limit):
            s = rng.choices(list(sizes), weights=weights)[0]
            rows = tuple(sorted(rng.sample(range(n), s)))
            cols = tuple(sorted(rng.sample(range(n), s)))
            selections.append((rows, cols))

    reports: list[ImmanantReport] = []
    for rows, cols in selections:
        s = len(rows)
        sub = tuple(tuple(grid[i][j] for j in cols) for i in rows)
        sums = _type_sums(sub)
        det = _combine(sums, (1,) * s, s)
        provenance = MatrixProvenance(
            m.family.name,
            m.kind,
            tuple(m.row_indices[i] for i in rows),
            tuple(m.col_indices[j] for j in cols),
        )
        for lam in partitions_of(s):
            value = _combine(sums, lam, s)
            gap = value - degree(lam) * det
            reports.append(
                ImmanantReport(
                    lam=lam,
                    value=value,
                    q_nonnegative=value.is_q_nonnegative(),
                    dominance_gap=gap,
                    gap_nonnegative=gap.is_q_nonnegative(),
                    provenance=provenance,
                )
            )
    return SweepResult(tuple(reports), exhaustive, seed, total)


# -- cubic Hankel inequalities ---------------------------------------


def _check_triple(label: str, triple: tuple[int, int, int], bound: int) -> None:
    a, b, c = triple
    if not (0 <= a < b < c):
        raise IndexError(f"{label} indices must satisfy 0 <= i < j < k, got {triple}")
    if c >= bound:
        raise IndexError(f"{label} index {c} needs a_0..a_{bound - 1} terms")


def inequality_331(
    a: list[QPoly], i: tuple[int, int, int], j: tuple[int, int, int]
) -> QPoly:
    """Cubic form in the sequence terms indexed by two increasing triples.

    Equals the (2,1)-immanant minus twice the determinant of the 3x3
    submatrix of the Hankel matrix (a_{u+v}) with rows i and columns j.
    """
    i1, i2, i3 = i
    j1, j2, j3 = j
    _check_triple("row", (i1, i2, i3), len(a))
    _check_triple("col", (j1, j2, j3), len(a))
    if i3 + j3 >= len(a):
        raise IndexError(
            f"need terms up to a_{i3 + j3} but only {len(a)} terms were given"
        )
    pos = (
        a[i1 + j2] * a[i2 + j1] * a[i3 + j3]
        + a[i1 + j3] * a[i2 + j2] * a[i3 + j1]
        + a[i1 + j1] * a[i2 + j3] * a[i3 + j2]
    )
    neg = a[i1 + j2] * a[i2 + j3] * a[i3 + j1] + a[i1 + j3] * a[i2 + j1] * a[i3 + j2]
    return 2 * pos - 3 * neg


def inequality_332(a: list[QPoly], i: int, j: int, k: int) -> QPoly:
    """Symmetric cubic form a_{2i} a_{j+k}^2 + ... - 3 a_{i+j} a_{j+k} a_{k+i}."""
    _check_triple("index", (i, j, k), len(a))
    if 2 * k >= len(a):
        raise IndexError(f"need terms up to a_{2 * k} but only {len(a)} terms were given")
    return (
        a[2 * i] * a[j + k] ** 2
        + a[2 * j] * a[i + k] ** 2
        + a[2 * k] * a[i + j] ** 2
        - 3 * (a[i + j] * a[j + k] * a[k + i])
    )
