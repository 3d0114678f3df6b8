"""The coordinate sign-flip action on a cubical surface.

(Z/2)^m acts on [-1,1]^m by flipping signs of coordinates; the element
supported on S sends x_i to -x_i for i in S. The action restricts to the
complex over any K and permutes its cells: a cell keeps its free set and
has its sign bits toggled on support \\ free. Composition of elements is
XOR of supports, so the whole group lives inside int bitmasks.

Fixed points are governed by a single membership test: an element has a
fixed point on the complex iff its support is a face of K (the fixed set
needs all supported coordinates at 0 simultaneously, which a block over
the face I permits exactly when support is contained in I, and downward
closure turns that into membership). A subgroup therefore acts freely
iff no nonzero element of its span has a face as support. The tests keep
an independent brute-force route, scanning built cells for a fixed one,
so the criterion never has to be taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import gf2
from .errors import CapError, NotASurfaceError, ValidationError
from .rzk import Cell, CubicalSurface, orientability
from .scomplex import SimplicialComplex, mask_of, vertices_of

MAX_SEARCH_M = 24  # max_free_rank explores subspaces of GF(2)^m; refuse bigger m


@dataclass(frozen=True)
class SignElement:
    """Group element, identified by its support bitmask (bit i-1 = vertex i)."""

    support: int

    def compose(self, other: "SignElement") -> "SignElement":
        return SignElement(self.support ^ other.support)

    def __mul__(self, other: "SignElement") -> "SignElement":
        return self.compose(other)

    @property
    def is_identity(self) -> bool:
        return self.support == 0

    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.support)

    @staticmethod
    def from_vertices(vertices: Iterable[int], m: int) -> "SignElement":
        return SignElement(mask_of(vertices, m))

    @staticmethod
    def flip(i: int, m: int) -> "SignElement":
        """The generator flipping the single coordinate i."""
        return SignElement(mask_of([i], m))


IDENTITY = SignElement(0)


def apply(g: SignElement, cell: Cell) -> Cell:
    """Image of a cell: same free set, sign bits toggled on support minus free."""
    return Cell(cell.free, cell.signs ^ (g.support & ~cell.free))


def has_fixed_point(K: SimplicialComplex, g: SignElement) -> bool:
    """Whether g fixes any point of the complex over K.

    Support membership in K decides it; the identity comes out True since
    the empty face is always present.
    """
    return K.contains_mask(g.support)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of (Z/2)^m given by independent generators.

    ``generators`` is whatever the caller supplied (order preserved);
    ``basis`` is the canonical reduced echelon basis of the same span,
    pivots (highest set bits) strictly increasing. rank == len(basis).
    """

    generators: tuple[SignElement, ...]
    basis: tuple[SignElement, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def elements(self) -> list[SignElement]:
        """All 2^rank elements, identity first."""
        return [SignElement(v) for v in gf2.span([b.support for b in self.basis])]

    def basis_vertex_lists(self) -> list[list[int]]:
        return [list(b.vertices()) for b in self.basis]

    @staticmethod
    def from_generators(generators: Iterable[SignElement]) -> "Subgroup":
        gens = tuple(generators)
        basis = tuple(SignElement(v) for v in gf2.rref(g.support for g in gens))
        return Subgroup(gens, basis)


TRIVIAL_SUBGROUP = Subgroup((), ())


def is_free_subgroup(K: SimplicialComplex, H: Subgroup) -> bool:
    """True iff every nonidentity element of H moves every point.

    Checks all 2^rank - 1 nonzero spans against the face set.
    """
    for v in gf2.span([b.support for b in H.basis]):
        if v and K.contains_mask(v):
            return False
    return True


def lemma_generators(m: int) -> Subgroup:
    """The standard free subgroup of rank m-2 over the m-gon.

    Even m = 2k: supports {1,3}, {3,5}, ..., {2k-3, 2k-1} on the odd
    vertices and {2, 4}, {4, 6}, ..., {2k-2, 2k} on the even ones.
    Odd m = 2k+1: the same two families plus the triple {1, 2k, 2k+1}.
    Every nonzero combination has support off the polygon's face set,
    so the subgroup acts freely; is_free_subgroup re-checks regardless.
    """
    if m < 3:
        raise ValidationError(f"lemma generators need m >= 3, got {m}")
    k = m // 2
    supports: list[list[int]] = []
    supports += [[2 * i - 1, 2 * i + 1] for i in range(1, k)]
    supports += [[2 * i, 2 * i + 2] for i in range(1, k)]
    if m % 2:
        supports.append([1, 2 * k, 2 * k + 1])
    return Subgroup.from_generators(
        SignElement.from_vertices(s, m) for s in supports
    )


def orientation_sign(
    C: CubicalSurface,
    g: SignElement,
    orientation: dict[Cell, int] | None = None,
) -> int:
    """+1 if g preserves the global orientation of C, -1 if it reverses it.

    The element acts on a square with free pair {i, j} as a reflection in
    each supported free coordinate, so it multiplies the reference frame
    by (-1)^|support & free|; comparing the transported orientation of
    one square with the assignment at its image decides the global sign.
    A precomputed orientation assignment may be passed to skip the BFS.
    """
    if orientation is None:
        orientable, orientation = orientability(C)
        if not orientable:
            raise NotASurfaceError("orientation_sign needs an orientable surface")
    assert orientation is not None
    sq = C.cells(2)[0]
    image = apply(g, sq)
    local_det = -1 if (g.support & sq.free).bit_count() % 2 else 1
    return orientation[sq] * orientation[image] * local_det


def max_free_rank(
    K: SimplicialComplex, cap: int = MAX_SEARCH_M
) -> tuple[int, Subgroup]:
    """Largest rank of a freely acting subgroup, with a deterministic witness.

    Branch and bound over canonical echelon bases: basis vectors are
    chosen with strictly increasing pivots and zero bits on earlier
    pivots, so each subspace is met exactly once; candidates at every
    node are tried in increasing mask order, making the returned witness
    the first maximal one in that order. A partial basis is abandoned as
    soon as its span hits a face of K or too few pivot positions remain
    to beat the best rank found.
    """
    if K.m > cap:
        raise CapError(f"m={K.m} exceeds the free-rank search cap {cap}")
    faces = K.faces
    m = K.m

    best_rank = 0
    best_basis: list[int] = []
    chosen: list[int] = []
    span_list = [0]  # span of `chosen`, grown and truncated in place

    def extend(last_pivot: int) -> None:
        nonlocal best_rank, best_basis
        rank = len(chosen)
        pivot_mask = 0
        for v in chosen:
            pivot_mask |= 1 << gf2.pivot(v)
        for p in range(last_pivot + 1, m):
            if rank + 1 + (m - 1 - p) <= best_rank:
                break  # even taking every later pivot cannot beat the best
            free_bits = [b for b in range(p) if not (pivot_mask >> b) & 1]
            for sub in range(1 << len(free_bits)):
                w = 1 << p
                for j, b in enumerate(free_bits):
                    if (sub >> j) & 1:
                        w |= 1 << b
                if any((w ^ s) in faces for s in span_list):
                    continue
                chosen.append(w)
                size = len(span_list)
                span_list.extend(w ^ s for s in span_list[:size])
                if len(chosen) > best_rank:
                    best_rank = len(chosen)
                    best_basis = list(chosen)
                extend(p)
                chosen.pop()
                del span_list[size:]

    extend(-1)
    witness = Subgroup.from_generators(SignElement(v) for v in best_basis)
    return best_rank, witness
