from fractions import Fraction

import pytest

from superpoly import (CPoly, FamilyParams, TruncationError, build_operator,
                       certify_exponent_mapping, family, first_order_residual,
                       generate, pde_reduced, pde_residual)
from superpoly.families import Family
from superpoly.series import ZSeries


def zero_through(resid, bound):
    return all(resid[k].is_zero() for k in range(bound + 1))


def test_first_order_residual_type1():
    fam = family(2, 2, -4, 20)
    resid = first_order_residual(fam, 20)
    assert zero_through(resid, 20)


def test_first_order_residual_type2():
    fam = family(2, 3, -2, 20)
    resid = first_order_residual(fam, 20)
    assert zero_through(resid, 16)


def test_first_order_residual_all_seed_positions():
    # the cleared numerator includes the c z^{r+j0} coupling exactly when
    # j0 < -r; a wrong numerator shows up immediately as a nonzero residual
    for j0 in range(-6, 0):
        fam = family(3, 4, j0, 24)
        assert zero_through(first_order_residual(fam, 24), 24)


def test_first_order_residual_zero_family():
    fam = Family(FamilyParams(2, 2, -4))
    fam.polys[-4] = CPoly.zero()
    fam.extend(12)
    assert zero_through(first_order_residual(fam, 12), 12)


def test_first_order_residual_linear_in_initial_data():
    # residual(alpha f + beta g) = alpha residual(f) + beta residual(g):
    # with both residuals zero, any superposed initial data must also give zero
    fam = Family(FamilyParams(2, 5, -4))
    fam.polys[-4] = CPoly((3,))
    fam.polys[-1] = CPoly((Fraction(-2, 7),))
    fam.extend(16)
    assert zero_through(first_order_residual(fam, 16), 16)


def test_truncation_error():
    # constructed directly so the memoized cache cannot hold a longer prefix
    fam = Family(FamilyParams(2, 7, -4)).extend(4)
    with pytest.raises(TruncationError):
        ZSeries.from_family(fam, 40)


def test_zseries_convention():
    fam = family(2, 2, -4, 8)
    series = ZSeries.from_family(fam, 8)
    assert series[0] == fam[-4] == CPoly.one()
    assert series[8] == fam[4]


# ---------------------------------------------------------------------------
# fourth-order PDE reductions
# ---------------------------------------------------------------------------

def test_type2_pde_reduction_equals_operator():
    # the per-exponent reduction of the type-2 PDE is exactly L2 at n = exponent
    for (r, m) in [(2, 4), (3, 2), (4, 3)]:
        for n in (2 * r, 3 * r, 5 * r):
            p = family(r, m, -r, 8 * r)[n - 2 * r]
            lhs = pde_reduced(2, r, m, n, p)
            rhs = build_operator(2, r, m, n).apply(p)
            assert lhs == rhs


def test_type2_pde_mapping_is_exponent():
    fam = generate(FamilyParams(2, 4, -2), 24)
    assert certify_exponent_mapping(2, fam, 16) == 0


def test_type2_pde_residual_report():
    report = pde_residual(2, 2, 4, 16)
    assert report["pass"] and report["offset"] == 0
    report = pde_residual(2, 3, 2, 18)
    assert report["pass"]


def test_type1_pde_printed_fails_and_is_reported():
    report = pde_residual(1, 2, 2, 16)
    assert not report["pass"]
    assert report["findings"]


def test_type1_pde_corrected_is_exact():
    # subtracting 4 r^4 (m+1) d^2 + 24 r^2 (m^2-2m^2 r+2mr-2mr^2+r^2) c d makes
    # the printed type-1 reduction equal L1 at n = exponent
    for (r, m) in [(2, 2), (3, 3), (2, 4)]:
        report = pde_residual(1, r, m, 8 * r, corrected=True)
        assert report["pass"] and report["offset"] == 0


def test_corrected_type1_reduction_equals_operator():
    for (r, m) in [(2, 2), (4, 2)]:
        for n in (3 * r, 4 * r):
            p = family(r, m, -2 * r, 8 * r)[n - 2 * r]
            assert pde_reduced(1, r, m, n, p, corrected=True) \
                == build_operator(1, r, m, n).apply(p)


def test_pde_off_lattice_zero_coefficient():
    assert pde_reduced(2, 2, 4, 7, CPoly.zero()).is_zero()
