"""Real moment-angle complexes as cubical subcomplexes of the m-cube.

For a simplicial complex K on {1..m}, the space is the union, over faces
I of K, of the blocks [-1,1]^I x {-1,1}^(complement). Its natural cubical
cell structure is encoded without geometry: a cell is a pair of bitmasks

    Cell(free, signs)

where ``free`` is the face I (coordinates ranging over [-1,1]) and
``signs`` fixes the remaining coordinates, bit b set meaning coordinate
b+1 equals -1. Sign bits on free coordinates are zero by convention, so
cells compare and hash as plain tuples. The dimension of a cell is the
popcount of ``free``.

When K is the boundary of an m-gon the result is a closed orientable
surface; the checks here do not assume that and verify everything from
the built complex.

Orientation convention used by the BFS: a 2-cell with free coordinates
i < j is oriented by the ordered frame (x_i, x_j). Only the consistency
of induced boundary directions is ever asserted, so the convention
itself is not load-bearing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import CapError, CrossCheckError, NotASurfaceError, ValidationError
from .scomplex import SimplicialComplex

DEFAULT_BUILD_CAP = 20  # build() refuses m above this; memory is Theta(sum 2^(m-|I|))


class Cell(NamedTuple):
    free: int
    signs: int

    @property
    def dim(self) -> int:
        return self.free.bit_count()


def _subsets_ascending(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` in increasing numeric order."""
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


class CubicalSurface:
    """The built cell complex. Immutable after construction; queries are read-only.

    ``cells(d)`` lists cells of dimension d in increasing (free, signs)
    order, which fixes every traversal order in the package.
    """

    def __init__(self, m: int, cells_by_dim: dict[int, list[Cell]]):
        self.m = m
        self._cells = {d: tuple(cs) for d, cs in sorted(cells_by_dim.items())}
        self._edge_squares: dict[Cell, list[Cell]] | None = None

    @property
    def dim(self) -> int:
        return max(self._cells) if self._cells else -1

    def cells(self, d: int) -> tuple[Cell, ...]:
        return self._cells.get(d, ())

    @property
    def vertex_count(self) -> int:
        return len(self.cells(0))

    @property
    def edge_count(self) -> int:
        return len(self.cells(1))

    @property
    def square_count(self) -> int:
        return len(self.cells(2))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(cs) for d, cs in self._cells.items())

    def boundary(self, cell: Cell) -> tuple[Cell, ...]:
        """Codimension-1 faces: per free coordinate, the +1 then the -1 side."""
        out = []
        free, signs = cell
        rest = free
        while rest:
            b = rest & -rest
            rest ^= b
            out.append(Cell(free ^ b, signs))
            out.append(Cell(free ^ b, signs | b))
        return tuple(out)

    def edge_to_squares(self) -> dict[Cell, list[Cell]]:
        """Edge -> incident 2-cells, computed once and cached."""
        if self._edge_squares is None:
            table: dict[Cell, list[Cell]] = {e: [] for e in self.cells(1)}
            for sq in self.cells(2):
                for e in self.boundary(sq):
                    table[e].append(sq)
            self._edge_squares = table
        return self._edge_squares


def build(K: SimplicialComplex, cap: int = DEFAULT_BUILD_CAP) -> CubicalSurface:
    """Materialize every cell of the complex over K.

    Refuses m > cap: the cell count is sum over faces I of 2^(m - |I|),
    which is 2^m for the vertices alone.
    """
    if K.m > cap:
        raise CapError(
            f"m={K.m} exceeds the build cap {cap}; "
            f"raise the cap explicitly if you really want 2^{K.m} vertices"
        )
    full = (1 << K.m) - 1
    cells_by_dim: dict[int, list[Cell]] = {}
    for face in K.faces_sorted():
        d = face.bit_count()
        bucket = cells_by_dim.setdefault(d, [])
        for signs in _subsets_ascending(full & ~face):
            bucket.append(Cell(face, signs))
    for bucket in cells_by_dim.values():
        bucket.sort()
    return CubicalSurface(K.m, cells_by_dim)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Closed form sum over faces of (-1)^|I| 2^(m-|I|); no build, no cap."""
    m = K.m
    return sum((-1) ** f.bit_count() * (1 << (m - f.bit_count())) for f in K.faces)


def polygon_genus(m: int) -> int:
    """Genus of the surface over the m-gon boundary: 1 + 2^(m-3) (m-4).

    Integer for every m >= 3 (the m=3 case is 1 + (3-4) = 0, the sphere),
    and equal to (2 - chi)/2 with chi = 2^(m-2) (4-m).
    """
    if m < 3:
        raise ValidationError(f"polygon genus needs m >= 3, got {m}")
    if m == 3:
        return 0
    return 1 + (1 << (m - 3)) * (m - 4)


@dataclass(frozen=True)
class SurfaceReport:
    """Outcome of the closed-surface checks, one flag per condition."""

    edges_in_two_squares: bool
    vertex_links_single_cycle: bool
    connected: bool

    @property
    def closed_surface(self) -> bool:
        return (
            self.edges_in_two_squares
            and self.vertex_links_single_cycle
            and self.connected
        )


def _vertex_components(C: CubicalSurface) -> int:
    """Number of connected components of the 1-skeleton (= of the complex)."""
    verts = C.cells(0)
    adj: dict[Cell, list[Cell]] = {v: [] for v in verts}
    for e in C.cells(1):
        a = Cell(0, e.signs)
        b = Cell(0, e.signs | e.free)
        adj[a].append(b)
        adj[b].append(a)
    seen: set[Cell] = set()
    components = 0
    for v in verts:
        if v in seen:
            continue
        components += 1
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            for wv in adj[u]:
                if wv not in seen:
                    seen.add(wv)
                    queue.append(wv)
    return components


def verify_closed_surface(C: CubicalSurface) -> SurfaceReport:
    """Check the three closed-surface conditions on the built complex.

    Every edge must bound exactly two squares, the link of every vertex
    must be one cycle, and the complex must be connected; all three hold
    iff the complex is a closed surface. Complexes with cells above
    dimension 2 are rejected.
    """
    if C.dim > 2:
        raise ValidationError(
            f"closed-surface checks support dimension <= 2, got {C.dim}"
        )
    e2s = C.edge_to_squares()
    edges_ok = all(len(sqs) == 2 for sqs in e2s.values())

    # Link of a vertex: nodes are its incident edges, one arc per incident
    # square joining the two boundary edges of that square through the vertex.
    vertex_edges: dict[Cell, list[Cell]] = {v: [] for v in C.cells(0)}
    for e in C.cells(1):
        vertex_edges[Cell(0, e.signs)].append(e)
        vertex_edges[Cell(0, e.signs | e.free)].append(e)
    vertex_squares: dict[Cell, list[Cell]] = {v: [] for v in C.cells(0)}
    for sq in C.cells(2):
        f, s = sq.free, sq.signs
        for corner_bits in _subsets_ascending(f):
            vertex_squares[Cell(0, s | corner_bits)].append(sq)

    def link_is_single_cycle(v: Cell) -> bool:
        nodes = vertex_edges[v]
        if not nodes:
            return False
        index = {e: k for k, e in enumerate(nodes)}
        arcs: list[tuple[int, int]] = []
        for sq in vertex_squares[v]:
            through = [e for e in C.boundary(sq) if e in index]
            if len(through) != 2:
                return False
            arcs.append((index[through[0]], index[through[1]]))
        if len(arcs) != len(nodes):
            return False
        degree = [0] * len(nodes)
        adj: list[list[int]] = [[] for _ in nodes]
        for a, b in arcs:
            degree[a] += 1
            degree[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        if any(d != 2 for d in degree):
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for wv in adj[u]:
                if wv not in seen:
                    seen.add(wv)
                    queue.append(wv)
        return len(seen) == len(nodes)

    links_ok = all(link_is_single_cycle(v) for v in C.cells(0))
    connected = _vertex_components(C) == 1
    return SurfaceReport(edges_ok, links_ok, connected)


def _edge_direction(square: Cell, edge: Cell) -> int:
    """Direction (+1 along the free axis) induced on a boundary edge by the
    counterclockwise traversal of the square in its (x_i, x_j) frame, i < j."""
    i_bit = square.free & -square.free
    j_bit = square.free ^ i_bit
    if edge.free == i_bit:  # bottom or top: sign of x_j decides
        return 1 if (edge.signs & j_bit) else -1
    return -1 if (edge.signs & i_bit) else 1  # left or right: sign of x_i


def orientability(C: CubicalSurface) -> tuple[bool, dict[Cell, int] | None]:
    """Propagate square orientations across shared edges.

    Returns (True, assignment) with assignment[square] in {+1, -1} making
    every shared edge receive opposite induced directions, or (False,
    None) if a propagation cycle forces a sign reversal. Requires a
    closed surface.
    """
    report = verify_closed_surface(C)
    if not report.closed_surface:
        raise NotASurfaceError(f"orientability needs a closed surface, got {report}")
    e2s = C.edge_to_squares()
    orient: dict[Cell, int] = {}
    for start in C.cells(2):
        if start in orient:
            continue
        orient[start] = 1
        queue = deque([start])
        while queue:
            sq = queue.popleft()
            for e in C.boundary(sq):
                a, b = e2s[e]
                other = b if a == sq else a
                # opposite induced directions: o1*d1 = -o2*d2
                needed = -orient[sq] * _edge_direction(sq, e) * _edge_direction(other, e)
                if other not in orient:
                    orient[other] = needed
                    queue.append(other)
                elif orient[other] != needed:
                    return False, None
    return True, orient


def genus(C: CubicalSurface) -> tuple[bool, int]:
    """(orientable, genus) of a verified closed surface.

    chi = V - E + F from the actual cell counts; genus is (2 - chi)/2 in
    the orientable case and 2 - chi otherwise.
    """
    orientable, _ = orientability(C)  # raises NotASurfaceError if not closed
    chi = C.euler_characteristic
    if orientable:
        if chi % 2:
            raise CrossCheckError(f"orientable surface with odd chi={chi}")
        return True, (2 - chi) // 2
    return False, 2 - chi


def surface_report(C: CubicalSurface) -> dict:
    """Report dictionary with the fixed key set used by the command line."""
    chi = C.euler_characteristic
    base = {
        "m": C.m,
        "V": C.vertex_count,
        "E": C.edge_count,
        "F": C.square_count,
        "chi": chi,
    }
    if C.dim > 2:
        return {**base, "closed_surface": False, "orientable": None, "genus": None}
    report = verify_closed_surface(C)
    if not report.closed_surface:
        return {**base, "closed_surface": False, "orientable": None, "genus": None}
    orientable, g = genus(C)
    return {**base, "closed_surface": True, "orientable": orientable, "genus": g}
