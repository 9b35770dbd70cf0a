"""Bit-packed linear algebra over the two-element field.

A length-n vector is a Python int whose bit i is the coordinate of vertex i.
The same packing serves game configurations (which vertices are on) and
state vectors; the pairing of a dual vector f with a vector a is the parity
of the AND of their bit patterns.

Text form: a bitstring of length n whose character i is the state of
vertex i, '1' meaning on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateGraphError
from .graphs import Graph


def parse_bits(text: str, n: int) -> int:
    """Bitstring of length n -> packed int (character i becomes bit i)."""
    if len(text) != n:
        raise ValueError(f"expected bitstring of length {n}, got {len(text)}")
    value = 0
    for i, ch in enumerate(text):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid character {ch!r} in bitstring")
    return value


def format_bits(value: int, n: int) -> str:
    """Packed int -> bitstring of length n."""
    return "".join("1" if (value >> i) & 1 else "0" for i in range(n))


def pairing(f: int, a: int) -> int:
    """Evaluation of a dual vector on a vector: parity of the common support."""
    return (f & a).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """Square matrix over F2; row s is an int whose bit t is entry (s, t)."""

    n: int
    rows: tuple[int, ...]

    def entry(self, s: int, t: int) -> int:
        return (self.rows[s] >> t) & 1

    def apply(self, v: int) -> int:
        """Matrix-vector product (bit s of the result is <row s, v>)."""
        out = 0
        for s, row in enumerate(self.rows):
            out |= ((row & v).bit_count() & 1) << s
        return out


def adjacency_matrix(g: Graph) -> BitMatrix:
    """Adjacency matrix over F2: symmetric, zero diagonal, 1 exactly on edges."""
    return BitMatrix(g.n, g.neighbor_masks)


def _eliminate(rows: list[int], n: int) -> tuple[list[int], list[int]]:
    """In-place Gauss-Jordan over F2.  Returns (reduced rows, pivot columns).

    Pivots are chosen column by column in ascending order (the first set bit
    of each surviving row), which makes the reduced form deterministic.
    """
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        bit = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivot_cols


def rank_and_kernel(m: BitMatrix) -> tuple[int, list[int]]:
    """Rank and a deterministic reduced-echelon kernel basis.

    For the adjacency matrix the kernel is the radical of the edge form:
    the vectors pairing to zero with everything.
    """
    rows, pivot_cols = _eliminate(list(m.rows), m.n)
    rank = len(pivot_cols)
    pivot_set = set(pivot_cols)
    basis: list[int] = []
    for free in range(m.n):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, col in enumerate(pivot_cols):
            if (rows[r] >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return rank, basis


def solve(m: BitMatrix, b: int) -> int | None:
    """One solution x of m x = b, free coordinates set to zero; None if inconsistent."""
    # Augment with b in an extra column n.
    aug = [row | (((b >> s) & 1) << m.n) for s, row in enumerate(m.rows)]
    rows, pivot_cols = _eliminate(aug, m.n)
    top = 1 << m.n
    for i in range(len(pivot_cols), len(rows)):
        if rows[i] & top:
            return None
    x = 0
    for r, col in enumerate(pivot_cols):
        if rows[r] & top:
            x |= 1 << col
    return x


def is_nondegenerate(g: Graph) -> bool:
    """Whether the adjacency matrix is invertible over F2."""
    rank, _ = rank_and_kernel(adjacency_matrix(g))
    return rank == g.n


def neighbor_parity(g: Graph, a: int) -> int:
    """The linear map V -> V* sending a basis vector to the sum of its neighbors' duals.

    Coordinate t of the result is the parity of on-neighbors of t; as a
    matrix this is the adjacency matrix, so the map is invertible exactly
    when the graph is nondegenerate.
    """
    out = 0
    masks = g.neighbor_masks
    v = a
    while v:
        s = (v & -v).bit_length() - 1
        out ^= masks[s]
        v &= v - 1
    return out


def neighbor_parity_preimage(g: Graph, f: int, strict: bool = True) -> int | None:
    """The unique a with neighbor_parity(g, a) == f on a nondegenerate graph.

    With strict=False a degenerate graph is allowed: returns one preimage,
    or None when f is outside the image.
    """
    m = adjacency_matrix(g)
    if strict:
        rank, _ = rank_and_kernel(m)
        if rank != g.n:
            raise DegenerateGraphError("neighbor-parity map is not invertible (degenerate graph)")
    return solve(m, f)
