"""Abstract simplicial complexes on the vertex set {1, ..., m}.

Faces are stored as int bitmasks: vertex i is bit i-1, the empty face is
mask 0 and is always present. A complex is immutable once constructed and
downward closed by construction; ``from_facets`` closes its input, and
``polygon_boundary`` emits the boundary cycle of an m-gon directly.

Vertices may be "ghosts": m counts ambient coordinates, and a vertex that
appears in no face (not even as a singleton) is legal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ValidationError


def mask_of(vertices: Iterable[int], m: int) -> int:
    """Bitmask of a set of 1-based vertices, validated against [1, m]."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= m:
            raise ValidationError(f"vertex {v} out of range 1..{m}")
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a face mask."""
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def _downward_closure(facets: Iterable[int]) -> frozenset[int]:
    faces = {0}
    for f in facets:
        sub = f
        while sub:
            faces.add(sub)
            sub = (sub - 1) & f
    return frozenset(faces)


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed face set over m ambient vertices.

    ``faces`` always contains 0 (the empty face). Equality and hashing are
    structural. Use the module constructors rather than building by hand;
    they guarantee the closure invariant.
    """

    m: int
    faces: frozenset[int] = field(default_factory=lambda: frozenset({0}))

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValidationError("m must be nonnegative")
        full = (1 << self.m) - 1
        for f in self.faces:
            if f & ~full:
                raise ValidationError("face mask exceeds ambient vertex set")
        if 0 not in self.faces:
            raise ValidationError("the empty face must be present")

    @property
    def dim(self) -> int:
        """Dimension: largest face cardinality minus one; -1 for {0} alone."""
        return max(f.bit_count() for f in self.faces) - 1

    def contains_mask(self, mask: int) -> bool:
        return mask in self.faces

    def is_face(self, vertices: Iterable[int]) -> bool:
        return mask_of(vertices, self.m) in self.faces

    def faces_sorted(self) -> list[int]:
        """Face masks in increasing numeric order; deterministic iteration order."""
        return sorted(self.faces)

    def facets(self) -> list[int]:
        """Maximal faces, in increasing mask order."""
        out = []
        for f in self.faces_sorted():
            if f and not any(g != f and f & g == f for g in self.faces):
                out.append(f)
        return out


def from_facets(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by the given facets (downward closure is taken)."""
    masks = [mask_of(f, m) for f in facets]
    return SimplicialComplex(m, _downward_closure(masks))


def polygon_boundary(m: int) -> SimplicialComplex:
    """Boundary of the m-gon: vertices 1..m, edges {i, i+1} cyclically.

    Needs m >= 3. Face count is 2m + 1 (empty face, m vertices, m edges).
    For m = 3 this is the full triangle boundary, every pair is an edge.
    """
    if m < 3:
        raise ValidationError(f"a polygon needs at least 3 vertices, got m={m}")
    edges = [(i, i % m + 1) for i in range(1, m + 1)]
    return from_facets(m, edges)


def parse_complex(text: str) -> SimplicialComplex:
    """Read the plain-text complex format.

    First data line is m; each further non-empty line is one facet as
    space-separated 1-based vertex indices. ``#`` starts a comment, blank
    lines are skipped, surrounding whitespace is ignored.
    """
    data: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            data.append((lineno, line.split()))
    if not data:
        raise ValidationError("empty complex description")
    lineno, head = data[0]
    if len(head) != 1:
        raise ValidationError(f"line {lineno}: expected a single integer m")
    try:
        m = int(head[0])
    except ValueError:
        raise ValidationError(f"line {lineno}: m is not an integer") from None
    facets = []
    for lineno, tokens in data[1:]:
        try:
            verts = [int(t) for t in tokens]
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer vertex") from None
        try:
            facets.append(mask_of(verts, m))
        except ValidationError as exc:
            raise ValidationError(f"line {lineno}: {exc}") from None
    return SimplicialComplex(m, _downward_closure(facets))


def read_complex(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())
