"""Equitable partitions, quotient matrices, and closed-form radii.

For a partitioned symmetric matrix, the quotient entry b[i][j] is the
average row sum of block (i,j); the partition is equitable when every
block has constant row sums, and then the quotient shares the dominant
eigenvalue with the full matrix.

The extremal graphs handled here are all "clique joins": an apex clique
K_s joined to a disjoint union of cliques and isolated vertices.  Their
natural partition (one cell per core clique, one for the apex, one for
the isolated vertices) is equitable for the distance matrix, and the
quotient entries follow directly from the distances (1 inside and toward
the apex, 2 between parts), so ``family_quotient`` is built symbolically
from the part sizes and never via BFS.  Named constructors cover:

* split star: K_k joined to n-k independent vertices;
* pendant clique: K_{n-1} with one pendant vertex at an apex,
  i.e. K_1 v (K_{n-2} u K_1);
* double pendant clique: K_{n-2} with two pendants at one apex,
  i.e. K_1 v (K_{n-3} u 2K_1);
* balanced split: K_s v (K_{n-2s} u sK_1);
* surplus split: K_s v (K_{n-2s-1} u (s+1)K_1).

Closed forms: the split stars on half the vertices have surd formulas,
the pendant clique's radius is the largest root of a monic cubic whose
coefficients are linear in n, and every other family reduces to the
characteristic polynomial of its (at most 3x3) integer quotient, computed
exactly and root-solved by bracketed bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import InvalidPartitionError, InvalidSpecError
from .graphs import (
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    join,
)

Cells = Sequence[Sequence[int]]


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: np.ndarray
    equitable: bool


def _check_partition(order: int, cells: Cells) -> list[list[int]]:
    norm = [sorted(int(v) for v in cell) for cell in cells]
    seen: set[int] = set()
    for cell in norm:
        if not cell:
            raise InvalidPartitionError("empty cell")
        for v in cell:
            if not 0 <= v < order:
                raise InvalidPartitionError(f"index {v} outside 0..{order - 1}")
            if v in seen:
                raise InvalidPartitionError(f"index {v} appears twice")
            seen.add(v)
    if len(seen) != order:
        raise InvalidPartitionError("cells do not cover every index")
    return norm


def quotient_matrix(m: np.ndarray, cells: Cells) -> QuotientMatrix:
    """Average block row sums of m under the given partition."""
    m = np.asarray(m)
    norm = _check_partition(m.shape[0], cells)
    k = len(norm)
    b = np.zeros((k, k), dtype=np.float64)
    for i, ci in enumerate(norm):
        for j, cj in enumerate(norm):
            block = m[np.ix_(ci, cj)]
            b[i, j] = block.sum(axis=1).mean()
    return QuotientMatrix(b, is_equitable(m, norm))


def is_equitable(m: np.ndarray, cells: Cells) -> bool:
    """True iff every block of m has constant row sums.

    Exact comparison for integer matrices; floats get a 1e-12 tolerance.
    """
    m = np.asarray(m)
    norm = _check_partition(m.shape[0], cells)
    exact = np.issubdtype(m.dtype, np.integer)
    for ci in norm:
        for cj in norm:
            sums = m[np.ix_(ci, cj)].sum(axis=1)
            if exact:
                if not (sums == sums[0]).all():
                    return False
            else:
                if not np.allclose(sums, sums[0], rtol=0.0, atol=1e-12):
                    return False
    return True


# ---------------------------------------------------------------------------
# Clique-join families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueJoinFamily:
    """K_apex joined to (disjoint core cliques + isolated vertices).

    In the built graph the apex occupies vertices 0..apex-1, the cores
    follow in listed order, and the isolated vertices come last.
    """

    apex: int
    cores: tuple[int, ...]
    isolated: int

    def __post_init__(self):
        if self.apex < 1:
            raise InvalidSpecError("apex clique must have >= 1 vertex")
        if any(c < 1 for c in self.cores):
            raise InvalidSpecError("core clique sizes must be >= 1")
        if self.isolated < 0:
            raise InvalidSpecError("isolated count must be >= 0")

    @property
    def n(self) -> int:
        return self.apex + sum(self.cores) + self.isolated


def clique_join_family(apex: int, cores: Sequence[int], isolated: int) -> CliqueJoinFamily:
    return CliqueJoinFamily(apex, tuple(int(c) for c in cores), isolated)


def split_star_family(n: int, k: int) -> CliqueJoinFamily:
    if not 1 <= k <= n:
        raise InvalidSpecError(f"split star needs 1 <= k <= n, got k={k}, n={n}")
    return CliqueJoinFamily(k, (), n - k)


def pendant_clique_family(n: int) -> CliqueJoinFamily:
    """K_1 v (K_{n-2} u K_1): a complete graph with one pendant vertex."""
    if n < 2:
        raise InvalidSpecError("pendant clique needs n >= 2")
    return CliqueJoinFamily(1, (n - 2,) if n > 2 else (), 1)


def double_pendant_clique_family(n: int) -> CliqueJoinFamily:
    """K_1 v (K_{n-3} u 2K_1): a complete graph with two pendants at one vertex."""
    if n < 3:
        raise InvalidSpecError("double pendant clique needs n >= 3")
    return CliqueJoinFamily(1, (n - 3,) if n > 3 else (), 2)


def balanced_split_family(n: int, s: int) -> CliqueJoinFamily:
    """K_s v (K_{n-2s} u sK_1): as many isolated vertices as apexes."""
    if s < 1 or n < 2 * s:
        raise InvalidSpecError(f"balanced split needs 1 <= s <= n/2, got s={s}, n={n}")
    return CliqueJoinFamily(s, (n - 2 * s,) if n > 2 * s else (), s)


def surplus_split_family(n: int, s: int) -> CliqueJoinFamily:
    """K_s v (K_{n-2s-1} u (s+1)K_1): one more isolated vertex than apexes."""
    if s < 1 or n < 2 * s + 1:
        raise InvalidSpecError(
            f"surplus split needs 1 <= s <= (n-1)/2, got s={s}, n={n}"
        )
    return CliqueJoinFamily(s, (n - 2 * s - 1,) if n > 2 * s + 1 else (), s + 1)


def build_family(fam: CliqueJoinFamily) -> Graph:
    """Construct the family graph with the documented vertex layout."""
    parts = [complete_graph(c) for c in fam.cores]
    if fam.isolated:
        parts.append(empty_graph(fam.isolated))
    if not parts:
        return complete_graph(fam.apex)
    rest = reduce(disjoint_union, parts)
    return join(complete_graph(fam.apex), rest)


def family_cells(fam: CliqueJoinFamily) -> tuple[tuple[int, ...], ...]:
    """Natural partition cells, ordered cores, apex, isolated."""
    cells: list[tuple[int, ...]] = []
    pos = fam.apex
    for c in fam.cores:
        cells.append(tuple(range(pos, pos + c)))
        pos += c
    cells.append(tuple(range(fam.apex)))
    if fam.isolated:
        cells.append(tuple(range(pos, pos + fam.isolated)))
    return tuple(cells)


def _family_quotient_int(fam: CliqueJoinFamily) -> np.ndarray:
    """Exact integer quotient of the distance matrix under family_cells.

    Distances: 1 inside cliques and to/from the apex, 2 between distinct
    non-apex parts and between isolated vertices.
    """
    s = fam.apex
    cores = fam.cores
    i = fam.isolated
    p = len(cores)
    k = p + 1 + (1 if i else 0)
    b = np.zeros((k, k), dtype=np.int64)
    apex_row = p
    for jj, nj in enumerate(cores):
        for ll, nl in enumerate(cores):
            b[jj, ll] = nj - 1 if jj == ll else 2 * nl
        b[jj, apex_row] = s
        if i:
            b[jj, k - 1] = 2 * i
        b[apex_row, jj] = nj
    b[apex_row, apex_row] = s - 1
    if i:
        b[apex_row, k - 1] = i
        for jj, nj in enumerate(cores):
            b[k - 1, jj] = 2 * nj
        b[k - 1, apex_row] = s
        b[k - 1, k - 1] = 2 * (i - 1)
    return b


def family_quotient(fam: CliqueJoinFamily) -> QuotientMatrix:
    """Symbolic equitable quotient of the family's distance matrix."""
    return QuotientMatrix(_family_quotient_int(fam).astype(np.float64), True)


# ---------------------------------------------------------------------------
# Root solving and closed forms
# ---------------------------------------------------------------------------


def pendant_clique_cubic(n: int) -> tuple[int, int, int, int]:
    """Monic cubic whose largest root is the pendant clique's distance
    spectral radius: x^3 + (3-n) x^2 + (9-5n) x - 3n + 5."""
    if n < 2:
        raise InvalidSpecError("pendant clique cubic needs n >= 2")
    return (1, 3 - n, 9 - 5 * n, -3 * n + 5)


def _poly_eval(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def largest_real_root(coeffs: Sequence[float]) -> float:
    """Largest real root of a monic quadratic or cubic, to ~1e-12.

    The cubic case brackets the root on a monotone piece: with critical
    points c1 <= c2 of the derivative, the largest root lies in [c2, oo)
    when p(c2) <= 0 and in (-oo, c1] otherwise; bisection on that piece
    cannot land on a smaller root.  A few Newton steps polish the result.
    """
    coeffs = [float(c) for c in coeffs]
    if not coeffs or abs(coeffs[0] - 1.0) > 1e-12:
        raise ValueError("expected a monic polynomial")
    if len(coeffs) == 3:
        _, a1, a0 = coeffs
        disc = a1 * a1 - 4.0 * a0
        if disc < 0.0:
            raise ValueError("quadratic has no real root")
        return (-a1 + math.sqrt(disc)) / 2.0
    if len(coeffs) != 4:
        raise ValueError("expected a monic quadratic or cubic")
    _, a2, a1, a0 = coeffs
    bound = 1.0 + max(abs(a2), abs(a1), abs(a0))
    crit_disc = a2 * a2 - 3.0 * a1
    if crit_disc <= 0.0:
        lo, hi = -bound, bound
    else:
        c1 = (-a2 - math.sqrt(crit_disc)) / 3.0
        c2 = (-a2 + math.sqrt(crit_disc)) / 3.0
        if _poly_eval(coeffs, c2) <= 0.0:
            lo, hi = c2, bound
        else:
            lo, hi = -bound, c1
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if _poly_eval(coeffs, mid) <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-13:
            break
    root = 0.5 * (lo + hi)
    deriv = [3.0, 2.0 * a2, a1]
    for _ in range(3):
        dp = _poly_eval(deriv, root)
        if dp == 0.0:
            break
        root -= _poly_eval(coeffs, root) / dp
    return root


def _charpoly_coeffs(b: np.ndarray) -> tuple[int, ...]:
    """Exact monic characteristic polynomial of a 2x2 or 3x3 int matrix."""
    m = [[int(x) for x in row] for row in np.asarray(b)]
    k = len(m)
    if k == 2:
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return (1, -tr, det)
    if k == 3:
        tr = m[0][0] + m[1][1] + m[2][2]
        minors = sum(
            m[i][i] * m[j][j] - m[i][j] * m[j][i]
            for i in range(3)
            for j in range(i + 1, 3)
        )
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        return (1, -tr, minors, -det)
    raise ValueError("characteristic polynomial helper handles 2x2 and 3x3 only")


def closed_form_lambda1(fam: CliqueJoinFamily) -> float:
    """Distance spectral radius of a family graph, without touching the graph.

    Published surd forms cover the split stars on (n-1)/2 and n/2
    vertices; the pendant clique uses its cubic; every other family goes
    through the exact integer quotient.  Quotients larger than 3x3 (more
    than two distinct cores plus isolated vertices) fall back to numpy's
    eigenvalue solver on the quotient.
    """
    n = fam.n
    if not fam.cores:
        k = fam.apex
        if n % 2 == 1 and k == (n - 1) // 2 and n >= 3:
            return (math.sqrt(5 * n * n + 2 * n - 3) + 3 * n - 5) / 4.0
        if n % 2 == 0 and k == n // 2:
            return (math.sqrt(5 * n * n - 4 * n + 4) + 3 * n - 6) / 4.0
    if fam.apex == 1 and fam.isolated == 1 and (
        fam.cores == (n - 2,) or (n == 2 and not fam.cores)
    ):
        return largest_real_root(pendant_clique_cubic(n))
    b = _family_quotient_int(fam)
    k = b.shape[0]
    if k == 1:
        return float(b[0, 0])
    if k <= 3:
        return largest_real_root(_charpoly_coeffs(b))
    eigs = np.linalg.eigvals(b.astype(np.float64))
    return float(max(e.real for e in eigs))
