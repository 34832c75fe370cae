"""Generalized Möbius ladder M(m, n) and the block form of its n = 3 distance matrix.

M(m, n) is the grid P_m x P_n with its first column glued to the last one
after a half twist: (u_1, v_j) is identified with (u_m, v_{n+1-j}). After
the gluing there are m - 1 distinct columns of n vertices each. Vertex
(column i, row j) is stored at index ``i * n + j`` (0-based; the 1-based
label (u_{i+1}, v_{j+1}) is only used in prose).

For n = 3 the distance matrix splits into 3x3 blocks, and block (r, r + q)
depends only on the column offset q. ``block_matrix`` gives those blocks
in closed form; ``assemble_block_distance_matrix`` rebuilds the full matrix
from them so it can be checked against BFS.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph_core import DistanceMatrix, Graph

Block = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


class ParameterRangeError(ValueError):
    pass


@dataclass(frozen=True)
class LadderSpec:
    m: int
    n: int = 3

    def __post_init__(self) -> None:
        if self.m < 4 or self.n < 2:
            raise ParameterRangeError(
                f"parameters outside supported range: need m >= 4 and n >= 2, got m={self.m}, n={self.n}"
            )

    @property
    def columns(self) -> int:
        return self.m - 1

    @property
    def vertex_count(self) -> int:
        return self.n * (self.m - 1)

    def index(self, column: int, row: int) -> int:
        return column * self.n + row

    def label(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)


def build_ladder(spec: LadderSpec | tuple[int, int]) -> Graph:
    if not isinstance(spec, LadderSpec):
        spec = LadderSpec(*spec)
    m, n = spec.m, spec.n
    at = spec.index
    edges = []
    for i in range(m - 1):
        edges.extend((at(i, j), at(i, j + 1)) for j in range(n - 1))
    for i in range(m - 2):
        edges.extend((at(i, j), at(i + 1, j)) for j in range(n))
    # the twist: last column meets the first one upside down
    edges.extend((at(m - 2, j), at(0, n - 1 - j)) for j in range(n))
    return Graph.from_edges(spec.vertex_count, edges)


def column_shift(spec: LadderSpec) -> list[int]:
    """Vertex permutation moving every column one step along the ladder.

    Crossing the twist flips the rows, which makes this an automorphism.
    """
    m, n = spec.m, spec.n
    perm = []
    for v in range(spec.vertex_count):
        i, j = spec.label(v)
        perm.append(spec.index(i + 1, j) if i < m - 2 else spec.index(0, n - 1 - j))
    return perm


def _check_block_args(q: int, m: int) -> None:
    if m < 6:
        raise ParameterRangeError(f"block form needs m >= 6 (even) or m >= 7 (odd), got m={m}")
    if not 0 <= q <= m - 2:
        raise ParameterRangeError(f"block index q={q} outside 0..{m - 2}")


def _symmetric(a: int, b: int, c: int, d: int, e: int, f: int) -> Block:
    # upper triangle (a b c / . d e / . . f)
    return ((a, b, c), (b, d, e), (c, e, f))


def _rising(lo: int) -> Block:
    return ((lo, lo + 1, lo + 2), (lo + 1, lo, lo + 1), (lo + 2, lo + 1, lo))


def _falling(hi: int) -> Block:
    return ((hi, hi - 1, hi - 2), (hi - 1, hi - 2, hi - 1), (hi - 2, hi - 1, hi))


def block_matrix(q: int, m: int) -> Block:
    """Distances between column r and column r + q of M(m, 3), for any r.

    These are the blocks printed for M(10, 3), generalised to every m; they
    agree entrywise with BFS.
    """
    _check_block_args(q, m)
    if q == 0:
        return _symmetric(0, 1, 2, 0, 1, 0)
    if m % 2 == 0:
        h = m // 2
        if q <= h - 2:
            return _rising(q)
        if q == h - 1:
            return _symmetric(h - 1, h, h, h - 1, h, h - 1)
        if q == h:
            return ((h, h, h - 1), (h, h - 1, h), (h - 1, h, h))
        return _falling(m - q + 1)
    h = (m - 1) // 2
    if q <= h - 1:
        return _rising(q)
    if q == h:
        return ((h, h + 1, h), (h + 1, h, h + 1), (h, h + 1, h))
    return _falling(m - q + 1)


def printed_block_matrix(q: int, m: int) -> Block:
    """The general B_q formulas exactly as published.

    Every family except B_0 is off by one against BFS (and against the
    worked M(10, 3) blocks). Kept verbatim so the discrepancy can be
    reported. The odd-m tail family nominally runs to q = m - 1; it is
    capped at m - 2 because there are only m - 1 columns.
    """
    _check_block_args(q, m)
    if q == 0:
        return _symmetric(0, 1, 2, 0, 1, 0)
    if m % 2 == 0:
        if q <= (m - 4) // 2:
            return _rising(q - 1)
        if q == (m - 2) // 2:
            a, b = (m - 4) // 2, (m - 2) // 2
            return _symmetric(a, b, b, a, b, a)
        if q == m // 2:
            a, b = (m + 2) // 2, m // 2
            return ((a, a, b), (a, b, a), (b, a, a))
        return _falling(m - q + 2)
    if q <= (m - 3) // 2:
        return _rising(q - 1)
    if q == (m - 1) // 2:
        a, b = (m - 3) // 2, (m - 1) // 2
        return ((a, b, a), (b, a, b), (a, b, a))
    return _falling(m - q + 2)


def assemble_block_distance_matrix(
    m: int, block: Callable[[int, int], Block] = block_matrix
) -> DistanceMatrix:
    """3(m-1) x 3(m-1) matrix whose (r, c) block is B_{c-r} for r <= c."""
    _check_block_args(0, m)
    cols = m - 1
    size = 3 * cols
    blocks = [block(q, m) for q in range(cols)]
    rows = [[0] * size for _ in range(size)]
    for r in range(cols):
        for c in range(r, cols):
            b = blocks[c - r]
            for a in range(3):
                for e in range(3):
                    rows[3 * r + a][3 * c + e] = b[a][e]
                    rows[3 * c + e][3 * r + a] = b[a][e]
    return DistanceMatrix(tuple(tuple(row) for row in rows))
