from fractions import Fraction

import pytest

from braidkl.identities import (
    CATALOG,
    abel,
    check_identity,
    run_catalog,
)


def lhs_of(name, *params):
    case = check_identity(name, params)
    assert not case.skipped, (name, params, case.skip_reason)
    return case.lhs


def rhs_of(name, *params):
    case = check_identity(name, params)
    assert not case.skipped
    return case.rhs


def test_abel_values():
    assert abel(0, 7, 2) == 1
    assert abel(1, 5, 3) == 5
    assert abel(1, -4, 2) == -4
    assert abel(3, 2, 1) == 2  # 2 * (2-3)^2
    with pytest.raises(ValueError):
        abel(-1, 1, 1)


def test_check_identity_examples():
    c = check_identity("abel-binomial", (1, 3, 4, 2))
    assert c.passed and c.lhs == 7

    c = check_identity("q-target", (4,))
    assert c.passed and c.lhs == -8 and c.rhs == -8

    c = check_identity("comb-A", (2,))
    assert c.passed and c.lhs == 8

    with pytest.raises(ValueError):
        check_identity("no-such-identity", (3,))


def test_skip_below_lower_bound():
    c = check_identity("dxy", (1, 2, 3, 1))
    assert c.skipped and "lower bound" in c.skip_reason


def test_skip_on_removable_singularity():
    # x = a makes the j = 1 summand of abel-dx a 0/0 in the displayed form
    c = check_identity("abel-dx", (3, 2, 5, 2))
    assert c.skipped and "negative exponent" in c.skip_reason
    # y = 0 likewise hits the j = m summand
    c = check_identity("abel-dx", (3, 5, 0, 2))
    assert c.skipped


def test_small_grid_zero_failures():
    cases = run_catalog(max_mn=10, free_bound=3)
    bad = [c for c in cases if not (c.passed or c.skipped)]
    assert bad == []
    skipped = [c for c in cases if c.skipped]
    assert all(c.skip_reason for c in skipped)


def test_single_parameter_identities_never_skip():
    # odd bases: the a=-2, x=-1, y=1 specializations are always in guard
    for name, spec in CATALOG.items():
        if spec.kind == "mxya":
            continue
        for v in range(spec.lower, 25):
            case = check_identity(name, (v,))
            assert case.passed and not case.skipped, (name, v)


# -- derivative cross-checks via exact interpolation -----------------------


def interp_coeffs(xs, ys):
    """Monomial coefficients of the interpolating polynomial (Newton form,
    exact Fractions)."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / Fraction(xs[i] - xs[i - j])
    poly = [dd[-1]]
    for k in range(n - 2, -1, -1):
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= c * xs[k]
        new[0] += dd[k]
        poly = new
    return poly


def poly_deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def poly_eval(coeffs, x):
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def sample_points(a, count):
    # integer points clear of every removable singularity: above 0, a, 2a
    start = max(a, 2 * a, 0) + 1
    return [start + i for i in range(count)]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_abel_dx_is_x_derivative(m):
    y, a = 3, -2
    xs = sample_points(a, m + 2)
    parent_vals = [lhs_of("abel-binomial", m, x, y, a) for x in xs]
    deriv = poly_deriv(interp_coeffs(xs, parent_vals))
    for x in xs:
        expected = poly_eval(deriv, x)
        assert lhs_of("abel-dx", m, x, y, a) == expected
        assert rhs_of("abel-dx", m, x, y, a) == expected


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_abel_dy_is_y_derivative(m):
    x, a = 3, -2
    ys = sample_points(a, m + 2)
    parent_vals = [lhs_of("abel-binomial", m, x, y, a) for y in ys]
    deriv = poly_deriv(interp_coeffs(ys, parent_vals))
    for y in ys:
        expected = poly_eval(deriv, y)
        assert lhs_of("abel-dy", m, x, y, a) == expected
        assert rhs_of("abel-dy", m, x, y, a) == expected


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dxy_is_x_derivative_of_dy(m):
    y, a = 3, -2
    xs = sample_points(a, m + 2)
    parent_vals = [lhs_of("abel-dy", m, x, y, a) for x in xs]
    deriv = poly_deriv(interp_coeffs(xs, parent_vals))
    for x in xs:
        expected = poly_eval(deriv, x)
        assert lhs_of("dxy", m, x, y, a) == expected
        assert rhs_of("dxy", m, x, y, a) == expected


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_dxxy_is_x_derivative_of_dxy(m):
    y, a = 3, -2
    xs = sample_points(a, m + 2)
    parent_vals = [lhs_of("dxy", m, x, y, a) for x in xs]
    deriv = poly_deriv(interp_coeffs(xs, parent_vals))
    for x in xs:
        expected = poly_eval(deriv, x)
        assert lhs_of("dxxy", m, x, y, a) == expected
        assert rhs_of("dxxy", m, x, y, a) == expected


# -- proof-chain consistency ------------------------------------------------


@pytest.mark.parametrize("m", range(1, 13))
def test_lin_combination_gives_comb_a(m):
    # 3*lin-1 + lin-2 telescopes to 2m * comb-A, on both sides
    assert 3 * lhs_of("lin-1", m) + lhs_of("lin-2", m) == \
        2 * m * lhs_of("comb-A", m)
    assert 3 * rhs_of("lin-1", m) + rhs_of("lin-2", m) == \
        2 * m * rhs_of("comb-A", m)


@pytest.mark.parametrize("m", range(1, 13))
def test_spec_derivatives_give_comb_c(m):
    # dxy-spec - 2*dxxy-spec collapses to comb-C
    assert lhs_of("dxy-spec", m) - 2 * lhs_of("dxxy-spec", m) == \
        lhs_of("comb-C", m)
    assert rhs_of("dxy-spec", m) - 2 * rhs_of("dxxy-spec", m) == \
        rhs_of("comb-C", m)


@pytest.mark.parametrize("m", range(1, 13))
def test_comb_ab_give_q_target(m):
    # (comb-B - (2m-2)*comb-A) / (2m-1) is the q-target sum at n = m+1
    n = m + 1
    assert lhs_of("comb-B", m) - (2 * m - 2) * lhs_of("comb-A", m) == \
        (2 * m - 1) * lhs_of("q-target", n)
    assert rhs_of("comb-B", m) - (2 * m - 2) * rhs_of("comb-A", m) == \
        (2 * m - 1) * rhs_of("q-target", n)
