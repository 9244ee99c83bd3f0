"""GF(2) linear algebra on Python-int bitmasks.

Vectors are ints; bit i is coordinate i and XOR is addition.  All routines
are deterministic for a fixed input order, which the rest of the package
relies on for reproducible output.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def solve_masks(columns: Sequence[int], target: int) -> int | None:
    """Find a subset of columns XOR-ing to target.

    Returns the subset as a bitmask over column indices, or None when the
    target lies outside the span.
    """
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (vector, combination)

    def reduce(v: int, combo: int) -> tuple[int, int]:
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                break
            pv, pc = pivots[h]
            v ^= pv
            combo ^= pc
        return v, combo

    for j, col in enumerate(columns):
        v, combo = reduce(col, 1 << j)
        if v:
            pivots[v.bit_length() - 1] = (v, combo)
    residue, combo = reduce(target, 0)
    return combo if residue == 0 else None


def rank_masks(vectors: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                pivots[h] = v
                break
            v ^= pivots[h]
    return len(pivots)


def kernel_masks(columns: Sequence[int]) -> list[int]:
    """Basis of {x : sum of selected columns = 0}, as masks over column indices."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for j, col in enumerate(columns):
        v, combo = col, 1 << j
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                break
            pv, pc = pivots[h]
            v ^= pv
            combo ^= pc
        if v:
            pivots[v.bit_length() - 1] = (v, combo)
        else:
            kernel.append(combo)
    return kernel


def echelon_masks(vectors: Iterable[int]) -> list[int]:
    """Fully reduced echelon basis: pivot bits are unique to their vector."""
    basis: dict[int, int] = {}  # pivot bit -> vector
    for v in vectors:
        for h in sorted(basis, reverse=True):
            if (v >> h) & 1:
                v ^= basis[h]
        if v:
            h = v.bit_length() - 1
            for hb in list(basis):
                if (basis[hb] >> h) & 1:
                    basis[hb] ^= v
            basis[h] = v
    return [basis[h] for h in sorted(basis, reverse=True)]


def coset_minimum(vector: int, reduced_basis: Iterable[int]) -> int:
    """Smallest element of vector + span(reduced_basis).

    Requires a fully reduced basis (echelon_masks output): clearing every
    pivot bit then yields the unique, minimal coset representative.
    """
    for b in reduced_basis:
        h = b.bit_length() - 1
        if (vector >> h) & 1:
            vector ^= b
    return vector


def in_span(vector: int, reduced_basis: Iterable[int]) -> bool:
    return coset_minimum(vector, reduced_basis) == 0
