"""The edge-pairing form, its quadratic refinement, and the closed-form orbit labels.

The bilinear form B pairs two vectors to the parity of the edges between
their supports; its Gram matrix is the adjacency matrix, so B is symplectic
(zero diagonal).  The quadratic refinement Q assigns 1 to every basis
vector and obeys Q(a + b) = Q(a) + Q(b) + B(a, b); expanding that
recurrence over a support set T gives the closed form

    Q(a) = |T| + #{edges inside T}   (mod 2),

which is what we evaluate.
"""

from __future__ import annotations

from enum import Enum

from .errors import CapacityError
from .f2 import (
    adjacency_matrix,
    is_nondegenerate,
    neighbor_parity,
    neighbor_parity_preimage,
    rank_and_kernel,
)
from .graphs import Graph, Matching, alternating_set

RADICAL_ENUM_LIMIT = 20


def symplectic_form(g: Graph, a: int, b: int) -> int:
    """B(a, b): parity of the number of graph edges joining the two supports."""
    return (neighbor_parity(g, a) & b).bit_count() & 1


def quadratic_form(g: Graph, a: int) -> int:
    """Q(a) by the closed form: support size plus internal edge count, mod 2."""
    doubled = 0
    masks = g.neighbor_masks
    v = a
    while v:
        s = (v & -v).bit_length() - 1
        doubled += (masks[s] & a).bit_count()
        v &= v - 1
    return (a.bit_count() + (doubled >> 1)) & 1


def radical_basis(g: Graph) -> list[int]:
    """Basis of the radical: vectors pairing to zero with everything under B."""
    _, kernel = rank_and_kernel(adjacency_matrix(g))
    return kernel


def quadratic_form_kernel(g: Graph) -> list[int]:
    """Echelon basis of the radical vectors with Q = 0.

    Enumerates the radical and keeps the Q = 0 part, which is closed under
    addition (B vanishes on the radical, so Q is additive there).  That
    closure also bounds the answer: once the collected span has radical
    dimension, or one less while a Q = 1 radical vector exists, it is all
    of the kernel and enumeration stops early.
    """
    basis = radical_basis(g)
    dim = len(basis)
    if dim > RADICAL_ENUM_LIMIT:
        raise CapacityError(f"radical dimension {dim} exceeds enumeration limit {RADICAL_ENUM_LIMIT}")
    found: list[int] = []  # echelon rows, decreasing leading bit
    seen_nonzero_q = False

    def insert(v: int) -> None:
        for row in found:
            v = min(v, v ^ row)
        if v:
            found.append(v)
            found.sort(reverse=True)

    for mask in range(1 << dim):
        member = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            member ^= basis[i]
            m &= m - 1
        if quadratic_form(g, member) == 0:
            insert(member)
        else:
            seen_nonzero_q = True
        if len(found) == dim or (seen_nonzero_q and len(found) == dim - 1):
            break
    return sorted(found)


def alternating_indicator(g: Graph, m: Matching, s: int) -> int:
    """Indicator vector of the alternating-path endpoint set of s.

    Its neighbor-parity image is the dual basis vector of s, and its Q value
    matches the parity of the endpoint count.
    """
    out = 0
    for t in alternating_set(g, m, s):
        out |= 1 << t
    return out


class OrbitClass(Enum):
    ZERO = "zero"
    Q_ZERO = "q0"
    Q_ONE = "q1"


def classify_configuration(g: Graph, f: int) -> OrbitClass:
    """Move-invariant label of a configuration on a nondegenerate graph.

    The zero configuration is its own class; otherwise the label is the Q
    value of the neighbor-parity preimage.  The label never changes under
    lit moves.  On trees that are not paths it identifies the orbit
    exactly; on other graphs it is only a necessary invariant.
    """
    if f == 0:
        return OrbitClass.ZERO
    a = neighbor_parity_preimage(g, f)
    assert a is not None
    return OrbitClass.Q_ONE if quadratic_form(g, a) else OrbitClass.Q_ZERO


__all__ = [
    "OrbitClass",
    "RADICAL_ENUM_LIMIT",
    "alternating_indicator",
    "classify_configuration",
    "is_nondegenerate",
    "quadratic_form",
    "quadratic_form_kernel",
    "radical_basis",
    "symplectic_form",
]
