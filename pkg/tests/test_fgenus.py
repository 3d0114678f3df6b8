"""Largest free 2-torus rank as a function of genus, and its envelope.

decompose is checked against a brute scan over all factorizations,
lambert_w against mpmath's own implementation at 40 digits, and the
resolver's certificates against the covers they are built from. The
equality genera are tied back to the cubical surfaces themselves at
the end: the polygon surface over m = n + 2 vertices realizes rank n
at exactly the predicted genus.
"""

import mpmath
import pytest

from involab.action import max_free_rank
from involab.errors import ValidationError
from involab.fgenus import (
    H,
    decompose,
    equality_genera,
    f_bounds,
    f_exact,
    figure1_data,
    figure_csv,
    lambert_w,
    min_genus,
)
from involab.rzk import build, genus
from involab.scomplex import polygon_boundary

OMEGA = 0.5671432904097838  # W(1)


@pytest.mark.parametrize(
    "g,a,n",
    [
        (0, 1, 1),
        (1, 0, 2),
        (2, -1, 1),
        (3, -1, 2),
        (4, -3, 1),
        (5, -1, 3),
        (9, -2, 3),
        (17, -2, 4),
        (49, -3, 5),
    ],
)
def test_decompose_examples(g, a, n):
    dec = decompose(g)
    assert (dec.a, dec.n) == (a, n)
    assert dec.chi == 2 - 2 * g == a * 2**n
    assert dec.a_even == (a % 2 == 0)


def test_decompose_matches_brute_scan():
    for g in range(300):
        chi = 2 - 2 * g
        best = None
        for n in range(60):
            if chi % (1 << n) == 0:
                a = chi >> n
                if a <= 1 and n <= 2 - a:
                    best = (a, n)
        dec = decompose(g)
        assert (dec.a, dec.n) == best


def test_decompose_rejects_negative_genus():
    with pytest.raises(ValidationError):
        decompose(-1)


def test_f_bounds_shape():
    for g in range(200):
        fv = f_bounds(g)
        dec = decompose(g)
        assert fv.upper == dec.n
        assert fv.upper - fv.lower == (0 if dec.a_even else 1)
        assert fv.exact is None and not fv.resolved


def test_f_exact_by_formula():
    for g, n in [(1, 2), (9, 3), (17, 4), (129, 6)]:
        fv = f_exact(g)
        assert (fv.exact, fv.method, fv.resolved) == (n, "formula", True)
        assert fv.certificate is None


@pytest.mark.parametrize(
    "g,value",
    [(0, 1), (2, 1), (3, 2), (4, 1), (5, 3), (6, 1), (7, 2), (49, 5)],
)
def test_f_exact_by_resolver(g, value):
    fv = f_exact(g)
    assert fv.method == "cover-resolver"
    assert fv.resolved and fv.exact == value
    assert (fv.lower, fv.upper) == (value - 1, value)


def test_resolver_certificate_for_genus_two():
    fv = f_exact(2)
    assert fv.certificate == {
        "phi": [[1, 1, 1]],
        "cover": {
            "n": 1,
            "base": {"orientable": False, "genus": 3},
            "chi": -2,
            "components": 1,
            "orientable": True,
            "genus": 2,
        },
    }


def test_resolver_certificates_name_the_right_cover():
    for g in (0, 3, 5, 7, 49):
        cert = f_exact(g).certificate
        assert cert is not None
        report = cert["cover"]
        assert report["orientable"] and report["components"] == 1
        assert report["genus"] == g
        assert len(cert["phi"]) == report["n"]


def test_resolver_budgets():
    # genus 18 needs a nonorientable base of genus 19
    assert f_exact(18).resolved is False
    assert (f_exact(18).lower, f_exact(18).upper) == (0, 1)
    fv = f_exact(18, max_quotient_rank=19)
    assert fv.resolved and fv.exact == 1
    assert fv.certificate["cover"]["genus"] == 18

    squeezed = f_exact(5, max_sheets=4)  # needs 8 sheets
    assert not squeezed.resolved
    assert (squeezed.lower, squeezed.upper) == (2, 3)


def test_min_genus_values():
    assert [min_genus(n) for n in range(1, 8)] == [0, 1, 5, 17, 49, 129, 321]
    with pytest.raises(ValidationError):
        min_genus(0)


def test_equality_genera():
    assert equality_genera(10_000) == [
        (1, 0), (2, 1), (3, 5), (4, 17), (5, 49), (6, 129),
        (7, 321), (8, 769), (9, 1793), (10, 4097), (11, 9217),
    ]
    assert equality_genera(0) == [(1, 0)]
    assert equality_genera(10_000, include_sphere=False)[0] == (2, 1)
    with pytest.raises(ValidationError):
        equality_genera(-1)


def test_lambert_w_known_points():
    assert lambert_w(0) == 0
    assert isinstance(lambert_w(2), mpmath.mpf)
    assert float(lambert_w(1)) == pytest.approx(OMEGA, abs=1e-15)
    assert float(lambert_w(mpmath.e)) == pytest.approx(1.0, abs=1e-15)
    assert float(lambert_w(1e6)) == pytest.approx(11.383358086140053, abs=1e-12)
    # exact branch point maps to -1
    with mpmath.workdps(40):
        assert lambert_w(-mpmath.exp(-1)) == -1


def test_lambert_w_rejects_below_branch():
    with pytest.raises(ValidationError):
        lambert_w(-0.5)


def test_lambert_w_against_mpmath_grid():
    xs = [-0.367, -0.36, -0.3, -0.25, -0.1, -0.01, 0.01, 0.5, 1.0,
          2.0, 10.0, 100.0, 1e3, 1e6, 1e9]
    with mpmath.workdps(40):
        for x in xs:
            w = lambert_w(x)
            assert abs(w - mpmath.lambertw(x)) < 5e-13
            assert abs(w * mpmath.exp(w) - mpmath.mpf(x)) <= 1e-13


def test_lambert_w_residual_where_floats_cannot_reach():
    # at x = 1e6 the ulp of a float64 result already exceeds 1e-12
    with mpmath.workdps(40):
        w = lambert_w(1e6)
        assert abs(w * mpmath.exp(w) - mpmath.mpf(1e6)) <= 1e-12


def test_H_exact_integer_fast_path():
    for n, g in equality_genera(10_000):
        assert H(g) == float(n)
    assert H(float(17)) == 4.0
    assert H(17, exact_detect=False) == pytest.approx(4.0, abs=1e-12)


def test_H_float_values():
    assert H(9) == pytest.approx(3.4569995591345917, abs=1e-12)
    assert H(6) == pytest.approx(3.136865946258992, abs=1e-12)
    assert H(100) == pytest.approx(5.730130511173242, abs=1e-12)


def test_H_is_monotone_and_dominates_f():
    values = [H(g) for g in range(120)]
    assert all(b > a for a, b in zip(values, values[1:]))
    for g in range(120):
        assert f_bounds(g).upper <= H(g) + 1e-9


def test_H_rejects_negative():
    with pytest.raises(ValidationError):
        H(-2)


def test_figure_rows():
    rows = figure1_data(9)
    assert [r.g for r in rows] == list(range(10))
    r9 = rows[9]
    assert (r9.f_lower, r9.f_upper, r9.f_exact, r9.equality) == (3, 3, 3, False)
    assert rows[5].equality and rows[5].f_exact == 3
    assert rows[0].equality and rows[0].f_exact == 1


def test_figure_csv_frozen():
    assert figure_csv(figure1_data(9)) == (
        "g,f_lower,f_upper,f_exact,H,equality\n"
        "0,0,1,1,1.000000000,true\n"
        "1,2,2,2,2.000000000,true\n"
        "2,0,1,1,2.383332348,false\n"
        "3,1,2,2,2.641185745,false\n"
        "4,0,1,1,2.838713139,false\n"
        "5,2,3,3,3.000000000,true\n"
        "6,0,1,1,3.136865946,false\n"
        "7,1,2,2,3.256058659,false\n"
        "8,0,1,1,3.361819464,false\n"
        "9,3,3,3,3.456999559,false\n"
    )


def test_figure_csv_leaves_unresolved_cell_empty():
    line18 = figure_csv(figure1_data(18)).splitlines()[19]
    assert line18.startswith("18,0,1,,")
    assert line18.endswith(",false")


def test_figure_threads_do_not_change_output():
    serial = figure1_data(40)
    threaded = figure1_data(40, threads=4)
    assert serial == threaded
    assert figure_csv(serial) == figure_csv(threaded)


def test_equality_genera_are_realized_by_polygon_surfaces():
    """Tie the table back to the complexes: over an (n+2)-gon boundary the
    surface has the predicted minimal genus and free rank exactly n."""
    for n, g in equality_genera(10_000):
        if n > 8:
            break
        K = polygon_boundary(n + 2)
        orientable, built_genus = genus(build(K))
        assert orientable and built_genus == g
        assert max_free_rank(K)[0] == n
