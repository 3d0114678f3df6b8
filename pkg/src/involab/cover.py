"""Surfaces as one-vertex polygon gluings and their regular (Z/2)^n covers.

A closed surface of genus g is presented by a single 2g- or g-handled
polygon word on generators a_1, a_2, ...: the orientable word is the
product of commutators [a_1, a_2][a_3, a_4]..., the nonorientable word is
a_1 a_1 a_2 a_2 ... . One vertex, d edges, one face, chi = 2 - d.

A homomorphism from the free group on the generators to (Z/2)^n that
kills the relator factors through mod-2 homology, so it is just a GF(2)
matrix phi with n rows and d columns. The associated cover has one sheet
per group element: vertices are the 2^n sheets, edge (i, q) is the lift
of a_i starting on sheet q, and every sheet carries one polygon whose
boundary is read off the base word while accumulating phi-images. The
cover's Euler characteristic is 2^n times the base's by counting, it is
connected iff phi is onto, and it is orientable iff the orientation
character (the mod-2 word map recording which generators reverse
orientation) vanishes on the kernel of phi, equivalently lies in phi's
row space.

Orientability is computed both ways on every build, by the algebraic
row-space test and by sign propagation over the glued polygons, and a
disagreement raises instead of returning anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf2
from .errors import CapError, CrossCheckError, ValidationError

MAX_COVER_RANK = 20  # 2^n sheets are materialized; refuse larger n


@dataclass(frozen=True)
class SurfacePresentation:
    """One-vertex polygon presentation of a closed surface of genus >= 1."""

    orientable: bool
    genus: int
    word: tuple[tuple[int, int], ...]  # (generator index, +1 or -1)

    @property
    def generator_count(self) -> int:
        return 2 * self.genus if self.orientable else self.genus

    @property
    def euler_characteristic(self) -> int:
        return 2 - self.generator_count

    @property
    def orientation_character(self) -> int:
        """GF(2) vector marking orientation-reversing generators.

        Zero for orientable words; all ones for the standard crosscap
        word, where every generator reverses.
        """
        if self.orientable:
            return 0
        return (1 << self.generator_count) - 1


def presentation(orientable: bool, genus: int) -> SurfacePresentation:
    """Standard presentation; genus 0 has no one-polygon word here."""
    if genus < 1:
        raise ValidationError(f"presentation needs genus >= 1, got {genus}")
    word: list[tuple[int, int]] = []
    if orientable:
        for i in range(genus):
            a, b = 2 * i, 2 * i + 1
            word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    else:
        for i in range(genus):
            word += [(i, 1), (i, 1)]
    return SurfacePresentation(orientable, genus, tuple(word))


def rank_bound(B: SurfacePresentation) -> int:
    """Upper bound for the rank of a free (Z/2)^n action on the cover side:
    2g for orientable genus g, g for nonorientable genus g."""
    return 2 * B.genus if B.orientable else B.genus


def _validate_phi(B: SurfacePresentation, phi: Sequence[int]) -> tuple[int, ...]:
    d = B.generator_count
    rows = tuple(phi)
    for r in rows:
        if r < 0 or r >> d:
            raise ValidationError(
                f"phi row {r:#b} does not fit {d} generator columns"
            )
    return rows


@dataclass(frozen=True)
class CoverComplex:
    """A built regular cover: 2^n sheets over a one-polygon base.

    Cells are indexed, not stored as objects: vertex q and face q run
    over range(2^n), edge (i, q) has id i * 2^n + q and is the lift of
    generator i starting at sheet q. ``face_boundaries[q]`` lists the
    (edge id, direction) traversals of the polygon on sheet q, in word
    order. The deck group acts on all three kinds of index by XOR on q.
    """

    base: SurfacePresentation
    phi: tuple[int, ...]
    n: int
    sheets: int
    vertex_count: int
    edge_count: int
    face_count: int
    chi: int
    components: int
    orientable: bool
    genus: int | None
    face_boundaries: tuple[tuple[tuple[int, int], ...], ...]

    def to_report(self) -> dict:
        return {
            "n": self.n,
            "base": {"orientable": self.base.orientable, "genus": self.base.genus},
            "chi": self.chi,
            "components": self.components,
            "orientable": self.orientable,
            "genus": self.genus,
        }


def orientable_by_character(B: SurfacePresentation, phi: Sequence[int]) -> bool:
    """Row-space test: the cover is orientable iff the orientation
    character is a GF(2) combination of phi's rows."""
    rows = _validate_phi(B, phi)
    return gf2.in_span(B.orientation_character, rows)


def build_cover(
    B: SurfacePresentation, phi: Sequence[int], cap: int = MAX_COVER_RANK
) -> CoverComplex:
    """Glue the 2^n-sheeted cover determined by the GF(2) matrix phi.

    Checks, rather than assumes, that the relator lifts to closed paths,
    that every edge is traversed exactly twice over all polygons, and
    that the sign-propagation orientability verdict matches the
    algebraic one (CrossCheckError otherwise).
    """
    rows = _validate_phi(B, phi)
    n = len(rows)
    if n > cap:
        raise CapError(f"cover rank n={n} exceeds the sheet cap {cap} (2^n sheets)")
    d = B.generator_count
    sheets = 1 << n
    # column i of phi, as an n-bit deck element: the phi-image of a_i
    cols = [0] * d
    for r, row in enumerate(rows):
        for i in range(d):
            if (row >> i) & 1:
                cols[i] |= 1 << r

    word = B.word
    edge_count = d * sheets
    uses: list[list[tuple[int, int]]] = [[] for _ in range(edge_count)]
    boundaries: list[tuple[tuple[int, int], ...]] = []
    for q in range(sheets):
        v = q
        path: list[tuple[int, int]] = []
        for i, s in word:
            shift = cols[i]
            start = v if s > 0 else v ^ shift
            eid = i * sheets + start
            path.append((eid, s))
            uses[eid].append((q, s))
            v ^= shift
        if v != q:
            raise CrossCheckError("relator did not close up in the cover")
        boundaries.append(tuple(path))

    for eid, u in enumerate(uses):
        if len(u) != 2:
            raise CrossCheckError(
                f"edge {eid} traversed {len(u)} times; expected exactly 2"
            )

    # components of the vertex graph: sheets joined by the phi-images
    seen = bytearray(sheets)
    components = 0
    nonzero_cols = [c for c in cols if c]
    for q0 in range(sheets):
        if seen[q0]:
            continue
        components += 1
        stack = [q0]
        seen[q0] = 1
        while stack:
            q = stack.pop()
            for c in nonzero_cols:
                t = q ^ c
                if not seen[t]:
                    seen[t] = 1
                    stack.append(t)

    # orientation propagation over polygons; shared edge must be traversed
    # in opposite directions once both polygon orientations are applied
    orient = [0] * sheets
    orientable = True
    for q0 in range(sheets):
        if orient[q0] or not orientable:
            continue
        orient[q0] = 1
        stack = [q0]
        while stack and orientable:
            q = stack.pop()
            oq = orient[q]
            for eid, s in boundaries[q]:
                (c1, s1), (c2, s2) = uses[eid]
                # constraint o(c1)*s1 = -o(c2)*s2 is symmetric in the two uses
                other = c2 if (c1 == q and s1 == s) else c1
                required = -oq * s1 * s2
                if orient[other] == 0:
                    orient[other] = required
                    stack.append(other)
                elif orient[other] != required:
                    orientable = False
                    break

    algebraic = gf2.in_span(B.orientation_character, rows)
    if algebraic != orientable:
        raise CrossCheckError(
            f"orientability mismatch: character test says {algebraic}, "
            f"sign propagation says {orientable}"
        )

    chi = sheets - edge_count + sheets
    genus: int | None = None
    if components == 1:
        if orientable:
            if chi % 2:
                raise CrossCheckError(f"orientable cover with odd chi={chi}")
            genus = (2 - chi) // 2
        else:
            genus = 2 - chi
    return CoverComplex(
        base=B,
        phi=rows,
        n=n,
        sheets=sheets,
        vertex_count=sheets,
        edge_count=edge_count,
        face_count=sheets,
        chi=chi,
        components=components,
        orientable=orientable,
        genus=genus,
        face_boundaries=tuple(boundaries),
    )


def cover_orientable(B: SurfacePresentation, phi: Sequence[int]) -> bool:
    """Orientability of the cover; always cross-validated inside the build."""
    return build_cover(B, phi).orientable


def prop2_tower(B: SurfacePresentation) -> list[tuple[int, tuple[int, ...]]]:
    """Quotient tower: epimorphisms onto (Z/2)^n for n = rank_bound(B) down to 1.

    Generators are killed one at a time in order a_1, b_1, a_2, ...; the
    rank-n member projects mod-2 homology onto the last n generator
    coordinates, so its matrix rows are the standard basis vectors
    e_(d-n+1), ..., e_d.
    """
    d = B.generator_count
    tower = []
    for n in range(rank_bound(B), 0, -1):
        rows = tuple(1 << (d - n + r) for r in range(n))
        tower.append((n, rows))
    return tower


def parse_phi(text: str, d: int) -> tuple[int, ...]:
    """Read a GF(2) matrix: one row per line, d space-separated bits.

    Blank lines and ``#`` comments are skipped; an empty matrix (n = 0)
    is allowed and denotes the trivial cover.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != d:
            raise ValidationError(
                f"line {lineno}: expected {d} bits, got {len(tokens)}"
            )
        row = 0
        for i, t in enumerate(tokens):
            if t == "1":
                row |= 1 << i
            elif t != "0":
                raise ValidationError(f"line {lineno}: bit must be 0 or 1, got {t!r}")
        rows.append(row)
    return tuple(rows)
