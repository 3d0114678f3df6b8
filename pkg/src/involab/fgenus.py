"""Arithmetic of the maximal free 2-torus rank on orientable surfaces.

Write chi(M_g) = 2 - 2g = a * 2^n with n as large as possible subject to
a <= 1 and n <= 2 - a (the genus-1 surface, chi = 0, takes a = 0 and
n = 2; the sphere takes a = 1, n = 1). The largest n with a free
(Z/2)^n action on M_g, called f(g) here, satisfies

    f(g) = n              when a is even,
    n - 1 <= f(g) <= n    when a is odd,

and the odd case is settled constructively: f(g) = n iff some GF(2)
epimorphism from the mod-2 homology of the nonorientable surface of
genus 2 - a onto (Z/2)^n yields an orientable connected cover, which is
then built and shipped as a certificate (see the cover module).

The smallest genus carrying a free rank-n action is 1 + 2^(n-1)(n-2);
inverting that over the reals gives the envelope

    H(g) = W((g-1) ln2 / 2) / ln2 + 2

with W the principal Lambert branch, so f(g) <= H(g) with equality
exactly at the genera 0, 1, 5, 17, 49, ... . Equality detection is done
in exact integers, never through floats; W itself is computed by Halley
iteration in arbitrary-precision arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor

import mpmath

from . import gf2
from .cover import build_cover, presentation
from .errors import CrossCheckError, ValidationError

DEFAULT_MAX_QUOTIENT_RANK = 16  # resolver cap on 2 - a
DEFAULT_MAX_SHEETS = 1 << 16  # resolver cap on deck-group size


@dataclass(frozen=True)
class GenusDecomposition:
    """chi = a * 2^n with n maximal under a <= 1 and n <= 2 - a."""

    g: int
    chi: int
    a: int
    n: int

    @property
    def a_even(self) -> bool:
        return self.a % 2 == 0


def decompose(g: int) -> GenusDecomposition:
    """The canonical decomposition of chi(M_g); g = 1 is the a = 0 case."""
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    chi = 2 - 2 * g
    if g == 1:
        return GenusDecomposition(1, 0, 0, 2)
    n = (chi & -chi).bit_length() - 1  # 2-adic valuation of chi
    while n >= 0:
        a = chi >> n
        if a <= 1 and n <= 2 - a:
            return GenusDecomposition(g, chi, a, n)
        n -= 1
    raise CrossCheckError(f"no valid decomposition for chi={chi}")  # unreachable


@dataclass(frozen=True)
class FValue:
    """Bounds (and possibly the exact value) of f at one genus.

    ``method`` records how an exact value was, or would be, obtained:
    "formula" for the even-a case, "cover-resolver" for the odd one.
    ``resolved`` is False when the resolver was needed but its budget was
    exceeded; ``certificate`` carries the witness matrix and the built
    cover's report for resolver successes.
    """

    g: int
    lower: int
    upper: int
    exact: int | None
    method: str
    resolved: bool
    certificate: dict | None = None


def f_bounds(g: int) -> FValue:
    """The decomposition bounds alone: [n, n] for even a, [n-1, n] for odd."""
    dec = decompose(g)
    if dec.a_even:
        return FValue(g, dec.n, dec.n, None, "formula", False)
    return FValue(g, dec.n - 1, dec.n, None, "cover-resolver", False)


def f_exact(
    g: int,
    max_quotient_rank: int = DEFAULT_MAX_QUOTIENT_RANK,
    max_sheets: int = DEFAULT_MAX_SHEETS,
) -> FValue:
    """Exact f(g) where affordable.

    Even a: f = n outright. Odd a: search for an n-dimensional row space
    over the 2-a homology generators that contains the orientation
    character; a greedy completion of {w} by standard basis vectors
    decides existence, and a found matrix is certified by building the
    cover and checking it is connected, orientable, and of genus g. If
    no such epimorphism exists the answer is n - 1. Quotient genus above
    ``max_quotient_rank`` or deck group above ``max_sheets`` returns the
    bounds unresolved.
    """
    dec = decompose(g)
    if dec.a_even:
        return FValue(g, dec.n, dec.n, dec.n, "formula", True)
    n = dec.n
    h = 2 - dec.a
    if h > max_quotient_rank or (1 << n) > max_sheets:
        return FValue(g, n - 1, n, None, "cover-resolver", False)
    base = presentation(False, h)
    w = base.orientation_character
    rows: list[int] = [w]
    for i in range(h):
        if len(rows) == n:
            break
        e = 1 << i
        if not gf2.in_span(e, rows):
            rows.append(e)
    if len(rows) < n:
        # rank n is not reachable even from the full spanning family
        return FValue(g, n - 1, n, n - 1, "cover-resolver", True)
    cc = build_cover(base, rows)
    if not (cc.components == 1 and cc.orientable and cc.genus == g):
        raise CrossCheckError(
            f"resolver certificate failed for g={g}: {cc.to_report()}"
        )
    certificate = {
        "phi": [[(r >> i) & 1 for i in range(h)] for r in rows],
        "cover": cc.to_report(),
    }
    return FValue(g, n - 1, n, n, "cover-resolver", True, certificate)


def min_genus(n: int) -> int:
    """Smallest orientable genus carrying a free rank-n action: 1 + 2^(n-1)(n-2)."""
    if n < 1:
        raise ValidationError(f"rank must be >= 1, got {n}")
    return 1 + (1 << (n - 1)) * (n - 2)


def equality_genera(
    gmax: int, include_sphere: bool = True
) -> list[tuple[int, int]]:
    """All (n, min_genus(n)) with min_genus(n) <= gmax.

    The n = 1 entry is (1, 0), the sphere with the antipodal involution;
    pass include_sphere=False to start the list at n = 2.
    """
    if gmax < 0:
        raise ValidationError(f"gmax must be nonnegative, got {gmax}")
    out = []
    n = 1 if include_sphere else 2
    while min_genus(n) <= gmax:
        out.append((n, min_genus(n)))
        n += 1
    return out


_BRANCH_SERIES_CUT = -0.27  # use the branch-point series guess below this


def lambert_w(x, tol: float = 1e-13, max_steps: int = 100) -> mpmath.mpf:
    """Principal-branch Lambert W by Halley iteration.

    Works in 40-digit arithmetic and returns an mpf, so the defining
    residual w*e^w - x is driven far below float precision even for
    large x (a float64 result could not hold |residual| <= 1e-12 once
    x is big, its own ulp gets in the way). Initial guess is ln(1+x)
    for x >= -0.27 and the series -1 + p - p^2/3 + 11 p^3/72 with
    p = sqrt(2(e x + 1)) near the branch point. Raises below -1/e.
    """
    with mpmath.workdps(40):
        xm = mpmath.mpf(x)
        branch = -mpmath.exp(-1)
        if xm < branch:
            if branch - xm < mpmath.mpf("1e-15"):
                xm = branch  # rounding slack for callers handing us float(-1/e)
            else:
                raise ValidationError(
                    f"lambert_w needs x >= -1/e = {float(branch)!r}, got {x!r}"
                )
        if xm == branch:
            return mpmath.mpf(-1)
        if xm == 0:
            return mpmath.mpf(0)
        if xm < _BRANCH_SERIES_CUT:
            p = mpmath.sqrt(2 * (mpmath.e * xm + 1))
            w = -1 + p - p**2 / 3 + 11 * p**3 / 72
        else:
            w = mpmath.log(1 + xm)
        tol_m = mpmath.mpf(tol)
        for _ in range(max_steps):
            ew = mpmath.exp(w)
            f = w * ew - xm
            if abs(f) <= tol_m:
                break
            wp1 = w + 1
            w = w - f / (ew * wp1 - (w + 2) * f / (2 * wp1))
        else:
            raise CrossCheckError(f"lambert_w failed to converge for x={x!r}")
        return +w  # rounds to the working precision before leaving the context


def H(g, exact_detect: bool = True) -> float:
    """The envelope W((g-1) ln2 / 2)/ln2 + 2, as a float.

    For integer g of the form 1 + 2^(n-1)(n-2) the value is the integer n
    and is returned exactly (big-integer detection, no floats involved);
    set exact_detect=False to force the Lambert route, e.g. to measure
    the float path against the fast one.
    """
    if g < 0:
        raise ValidationError(f"H needs g >= 0, got {g!r}")
    if exact_detect:
        g_int = None
        if isinstance(g, int):
            g_int = g
        elif isinstance(g, float) and g.is_integer():
            g_int = int(g)
        if g_int is not None:
            n = 1
            while min_genus(n) <= g_int:
                if min_genus(n) == g_int:
                    return float(n)
                n += 1
    with mpmath.workdps(40):
        ln2 = mpmath.log(2)
        x = (mpmath.mpf(g) - 1) * ln2 / 2
        return float(lambert_w(x) / ln2 + 2)


@dataclass(frozen=True)
class FigureRow:
    g: int
    f_lower: int
    f_upper: int
    f_exact: int | None
    H: float
    equality: bool


def _figure_row(
    g: int, max_quotient_rank: int, max_sheets: int
) -> FigureRow:
    dec = decompose(g)
    fv = f_exact(g, max_quotient_rank, max_sheets)
    return FigureRow(
        g=g,
        f_lower=fv.lower,
        f_upper=fv.upper,
        f_exact=fv.exact if fv.resolved else None,
        H=H(g),
        equality=min_genus(dec.n) == g,
    )


def figure1_data(
    gmax: int,
    max_quotient_rank: int = DEFAULT_MAX_QUOTIENT_RANK,
    max_sheets: int = DEFAULT_MAX_SHEETS,
    threads: int = 1,
) -> list[FigureRow]:
    """Rows g = 0..gmax of the bounds/exact/envelope table.

    Thread count never changes the result; rows are computed
    independently and returned in order.
    """
    if gmax < 0:
        raise ValidationError(f"gmax must be nonnegative, got {gmax}")
    gs = range(gmax + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(
                pool.map(lambda g: _figure_row(g, max_quotient_rank, max_sheets), gs)
            )
    return [_figure_row(g, max_quotient_rank, max_sheets) for g in gs]


def figure_csv(rows: list[FigureRow]) -> str:
    """Render rows as the fixed CSV: floats at 9 decimals, empty cell for
    an unresolved exact value, lowercase true/false flags."""
    lines = ["g,f_lower,f_upper,f_exact,H,equality"]
    for r in rows:
        exact = "" if r.f_exact is None else str(r.f_exact)
        flag = "true" if r.equality else "false"
        lines.append(f"{r.g},{r.f_lower},{r.f_upper},{exact},{r.H:.9f},{flag}")
    return "\n".join(lines) + "\n"
