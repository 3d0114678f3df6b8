"""Linear algebra over GF(2) with int bitmasks as vectors.

A vector is a Python int; bit b is coordinate b. Addition is XOR, so a
subspace is closed under ^ and every basis computation reduces to integer
bit fiddling. Canonical form used throughout: reduced row echelon, where
the pivot of a row is its highest set bit, pivots are pairwise distinct,
no row contains another row's pivot, and rows are sorted by pivot
ascending. Every subspace has exactly one such basis, which is what makes
deterministic witnesses and exhaustive subspace enumeration possible.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def pivot(v: int) -> int:
    """Index of the highest set bit. Undefined (raises) for 0."""
    if v <= 0:
        raise ValueError("pivot of a nonpositive vector is undefined")
    return v.bit_length() - 1


def rref(vectors: Iterable[int]) -> list[int]:
    """Canonical RREF basis of the span of ``vectors``.

    Returns rows sorted by pivot ascending; the zero vector contributes
    nothing. Independent of input order and multiplicity.
    """
    basis: list[int] = []  # kept fully reduced, sorted by pivot ascending
    for v in vectors:
        for b in basis:
            if (v >> pivot(b)) & 1:
                v ^= b
        if v == 0:
            continue
        p = pivot(v)
        basis = [b ^ v if (b >> p) & 1 else b for b in basis]
        basis.append(v)
        basis.sort(key=pivot)
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(rref(vectors))


def in_span(v: int, basis: Iterable[int]) -> bool:
    """Whether v lies in the span of the given vectors (any basis, any order)."""
    for b in rref(basis):
        if v and (v >> pivot(b)) & 1:
            v ^= b
    return v == 0


def span(basis: Iterable[int]) -> list[int]:
    """All 2^rank elements of the span, as a list starting with 0.

    Iterative doubling: element order is deterministic given basis order.
    """
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def subspace_bases(dim: int) -> Iterator[list[int]]:
    """Every subspace of GF(2)^dim exactly once, as its canonical RREF basis.

    Enumerates by pivot set: a row with pivot p carries ``1 << p`` plus an
    arbitrary subset of the non-pivot positions below p. Intended for
    exhaustive small-dimension checks (the count is the Galois number,
    2825 already at dim 6), not for production searches.
    """
    from itertools import combinations, product

    for r in range(dim + 1):
        for pivots in combinations(range(dim), r):
            pivot_set = set(pivots)
            free_choices = []
            for p in pivots:
                free_bits = [b for b in range(p) if b not in pivot_set]
                choices = []
                for k in range(1 << len(free_bits)):
                    mask = 1 << p
                    for j, b in enumerate(free_bits):
                        if (k >> j) & 1:
                            mask |= 1 << b
                    choices.append(mask)
                free_choices.append(choices)
            for rows in product(*free_choices):
                yield list(rows)
