"""Fourth-order operators in c for the two canonical families.

Both operators share the leading structure

    (c^2-1)^2 m^2 r^4 d^4  +  10 c (c^2-1) m^2 r^4 d^3
        + (X c^2 + Y) d^2  +  Z c d  +  W,

with (W, X, Y, Z) scalar in (r, m, n) per family type; the type-2 scalars
carry the correction Delta = r^2 (r-2) m (2mn - 7mr + 2m + 4r), which
vanishes for r = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Literal, Sequence, Tuple

from .errors import AlignmentError, ParameterError
from .families import Family
from .linalg import nullspace
from .poly import CPoly

FamilyType = Literal[1, 2]


def _check_rm(r: int, m: int):
    if r < 2 or m < 2:
        raise ParameterError(f"need r >= 2 and m >= 2, got r={r}, m={m}")


def delta_correction(r: int, m: int, n: int) -> int:
    return r * r * (r - 2) * m * (2 * m * n - 7 * m * r + 2 * m + 4 * r)


def scalar_coefficients(family_type: FamilyType, r: int, m: int, n: int) -> Tuple[int, int, int, int]:
    """(W, X, Y, Z) for the requested family type."""
    _check_rm(r, m)
    if family_type == 1:
        W = n * (n - 2 * r) * (m * (n - 2 * r + 2) + 2 * r) * (m * (n - 4 * r + 2) + 2 * r)
        X = r * r * (-2 * m * m * ((n + 2) * n + 2)
                     + 4 * m * r * (m * (2 * n + 3) - n - 2)
                     + r * r * (3 * m * (5 * m + 4) - 4))
        Y = r * r * (2 * m * m * ((n + 2) * n + 2)
                     - 4 * m * r * (m * (2 * n + 3) - n - 2)
                     - 16 * m * r * r)
        Z = -3 * r * r * (m * m * (-8 * n * r + 2 * (n + 2) * n + 5 * r * r - 12 * r + 4)
                          + 4 * m * r * (n - 3 * r + 2) + 4 * r * r)
    elif family_type == 2:
        D = delta_correction(r, m, n)
        W = (n * n - r * r) * (m * (n - 5 * r + 2) + 2 * r) * (m * (n - 3 * r + 2) + 2 * r)
        X = -2 * r * r * (m * m * ((n - r) * (n - 2 * r) - 10 * r * r)
                          + 2 * m * r * (n - 3 * r) + 2 * r * r) + D
        Y = (2 * r * r * (m * m * ((n - r) * (n - 2 * r) - (2 * r * r + r))
                          + 2 * m * r * (n - 4 * r))
             - r * r * (r - 2) * m * (2 * m * n - 6 * m * r + 2 * m + 4 * r))
        Z = -3 * r * r * (2 * m * m * (n - r) * (n - 2 * r)
                          + 4 * m * r * (n - 3 * r) + 4 * r * r) + 3 * D
    else:
        raise ParameterError(f"family_type must be 1 or 2, got {family_type}")
    return W, X, Y, Z


@dataclass(frozen=True)
class OdeOperator:
    family_type: FamilyType
    r: int
    m: int
    n: int
    coeff4: CPoly
    coeff3: CPoly
    coeff2: CPoly
    coeff1: CPoly
    coeff0: CPoly

    @property
    def scalars(self) -> Tuple[int, int, int, int]:
        """(W, X, Y, Z)."""
        return (int(self.coeff0[0]), int(self.coeff2[2]),
                int(self.coeff2[0]), int(self.coeff1[1]))

    def apply(self, p: CPoly) -> CPoly:
        """Exact residual coeff4*p'''' + coeff3*p''' + coeff2*p'' + coeff1*p' + coeff0*p."""
        return (self.coeff4 * p.derive(4)
                + self.coeff3 * p.derive(3)
                + self.coeff2 * p.derive(2)
                + self.coeff1 * p.derive(1)
                + self.coeff0 * p)


def build_operator(family_type: FamilyType, r: int, m: int, n: int) -> OdeOperator:
    W, X, Y, Z = scalar_coefficients(family_type, r, m, n)
    mr4 = m * m * r ** 4
    c2m1 = CPoly((-1, 0, 1))  # c^2 - 1
    return OdeOperator(
        family_type=family_type, r=r, m=m, n=n,
        coeff4=(c2m1 * c2m1).scale(mr4),
        coeff3=(CPoly((0, 1)) * c2m1).scale(10 * mr4),
        coeff2=CPoly((Y, 0, X)),
        coeff1=CPoly((0, Z)),
        coeff0=CPoly((W,)),
    )


def apply_operator(op: OdeOperator, p: CPoly) -> CPoly:
    return op.apply(p)


def align_index(fam: Family, family_type: FamilyType) -> int:
    """The shift delta with n = k + delta, searched over {0, r, 2r}.

    Certified by exact annihilation of the first three nonzero members;
    deterministic: the smallest admissible delta.  Empirically delta = 2r for
    both canonical families (n is the generating-function z-exponent k + 2r).
    """
    r, m = fam.params.r, fam.params.m
    members = fam.nonzero_members()[:3]
    if len(members) < 3:
        raise AlignmentError(f"family {fam.params} has fewer than 3 nonzero members")
    for delta in (0, r, 2 * r):
        if all(build_operator(family_type, r, m, k + delta).apply(p).is_zero()
               for k, p in members):
            return delta
    raise AlignmentError(
        f"no shift in {{0, {r}, {2 * r}}} aligns family {fam.params} with type {family_type}")


# ---------------------------------------------------------------------------
# indicial data
# ---------------------------------------------------------------------------

def indicial_factors(family_type: FamilyType, r: int, m: int, n: int) -> List[Tuple[int, int]]:
    """The four linear factors (slope, intercept) of I(s), slope*s + intercept.

    Type 1 is the printed factorization; for type 2 the printed one holds only
    for r = 2, so the factors certified against the operator are used:

        type 1: (sr+n)(sr-n+2r)(smr-mn+4mr-2m-2r)(smr+mn-2mr+2m+2r)
        type 2: (sr-n+r)(sr+n+r)(smr-mn+5mr-2m-2r)(smr+mn-3mr+2m+2r)

    (the type-2 printed middle factors smr-mn+4mr-2r and smr+mn-2mr+2r agree
    with these exactly when r = 2).
    """
    _check_rm(r, m)
    if family_type == 1:
        return [(r, n), (r, -n + 2 * r),
                (m * r, -m * n + 4 * m * r - 2 * m - 2 * r),
                (m * r, m * n - 2 * m * r + 2 * m + 2 * r)]
    return [(r, -n + r), (r, n + r),
            (m * r, -m * n + 5 * m * r - 2 * m - 2 * r),
            (m * r, m * n - 3 * m * r + 2 * m + 2 * r)]


def printed_indicial_factors(family_type: FamilyType, r: int, m: int, n: int) -> List[Tuple[int, int]]:
    """The published factorizations (which for type 2 hold only at r = 2)."""
    if family_type == 1:
        return indicial_factors(1, r, m, n)
    return [(r, -n + r), (r, n + r),
            (m * r, -m * n + 4 * m * r - 2 * r),
            (m * r, m * n - 2 * m * r + 2 * r)]


def indicial_value(family_type: FamilyType, r: int, m: int, n: int, s: int) -> int:
    v = 1
    for slope, intercept in indicial_factors(family_type, r, m, n):
        v *= slope * s + intercept
    return v


def leading_symbol(op: OdeOperator, s: int) -> Fraction:
    """Coefficient of c^s in op(c^s)."""
    if s < 0:
        raise ParameterError("s must be >= 0")
    res = op.apply(CPoly.monomial(s))
    return res[s]


def is_resonant(r: int, m: int) -> bool:
    """Extra nonnegative integer indicial root appears iff 1/r + 1/m = 1/2."""
    return Fraction(1, r) + Fraction(1, m) == Fraction(1, 2)


def resonant_pairs(r_range: Sequence[int], m_range: Sequence[int]) -> List[Tuple[int, int]]:
    return [(r, m) for r in r_range for m in m_range if is_resonant(r, m)]


@dataclass(frozen=True)
class IndicialData:
    family_type: FamilyType
    r: int
    m: int
    n: int
    roots: Tuple[Tuple[Fraction, int], ...]  # (root, multiplicity), sorted
    admissible_degrees: Tuple[int, ...]
    resonant: bool
    matches_printed: bool  # published factorization == operator's leading symbol

    def to_json(self) -> dict:
        return {
            "family_type": self.family_type, "r": self.r, "m": self.m, "n": self.n,
            "roots": [{"root": str(root), "multiplicity": mult} for root, mult in self.roots],
            "admissible_degrees": list(self.admissible_degrees),
            "resonant": self.resonant,
            "matches_printed_factorization": self.matches_printed,
        }


def indicial(family_type: FamilyType, r: int, m: int, n: int) -> IndicialData:
    """Roots of I(s) with multiplicity, admissible polynomial degrees, resonance."""
    roots: dict = {}
    for slope, intercept in indicial_factors(family_type, r, m, n):
        root = Fraction(-intercept, slope)
        roots[root] = roots.get(root, 0) + 1
    admissible = sorted(int(root) for root in roots
                        if root.denominator == 1 and root >= 0)
    return IndicialData(
        family_type=family_type, r=r, m=m, n=n,
        roots=tuple(sorted(roots.items())),
        admissible_degrees=tuple(admissible),
        resonant=is_resonant(r, m),
        matches_printed=(family_type == 1 or r == 2),
    )


# ---------------------------------------------------------------------------
# polynomial kernel
# ---------------------------------------------------------------------------

def polynomial_kernel(op: OdeOperator, degree_bound: int,
                      parity: Literal["even", "odd", "both"] = "both") -> List[CPoly]:
    """Exact basis of {p : deg p <= bound, requested parity, op(p) = 0}.

    The operator maps the degree-bounded space to itself, so the kernel is the
    nullspace of its matrix on the monomial basis.
    """
    if degree_bound < 0:
        raise ParameterError("degree_bound must be >= 0")
    if parity == "even":
        powers = list(range(0, degree_bound + 1, 2))
    elif parity == "odd":
        powers = list(range(1, degree_bound + 1, 2))
    else:
        powers = list(range(0, degree_bound + 1))
    if not powers:
        return []
    images = [op.apply(CPoly.monomial(j)) for j in powers]
    rows = [[img[i] for img in images] for i in range(degree_bound + 1)]
    out = []
    for vec in nullspace(rows, len(powers)):
        coeffs = [Fraction(0)] * (degree_bound + 1)
        for pw, v in zip(powers, vec):
            coeffs[pw] = v
        out.append(CPoly(coeffs))
    return out


# ---------------------------------------------------------------------------
# residual scan
# ---------------------------------------------------------------------------

def _parse_range(spec) -> List[int]:
    if isinstance(spec, str):
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return list(spec)


def residual_scan(family_type: FamilyType, r_range, m_range,
                  n_points: str = "paper") -> dict:
    """Verify apply(L_n, P_{n-2r}) = 0 on a grid of (r, m) cells.

    n_points: "paper" checks the five points n = 5r..9r (enough to certify the
    degree-<=4 rational identity in n); "all" additionally checks every
    aligned generated n.
    """
    from .families import FamilyParams, generate

    cells = []
    all_pass = True
    for r in _parse_range(r_range):
        for m in _parse_range(m_range):
            j0 = -2 * r if family_type == 1 else -r
            fam = generate(FamilyParams(r, m, j0), 12 * r)
            delta = align_index(fam, family_type)
            if n_points == "paper":
                ns = [t * r for t in range(5, 10)]
            elif n_points == "all":
                ns = sorted(k + delta for k, _ in fam.nonzero_members())
            else:
                ns = _parse_range(n_points)
            failures = []
            for n in ns:
                k = n - delta
                if k < -2 * r:
                    continue  # before the initial block: nothing to check
                p = fam.polys.get(k)
                if p is None:
                    fam.extend(k)
                    p = fam[k]
                res = build_operator(family_type, r, m, n).apply(p)
                if not res.is_zero():
                    failures.append({"r": r, "m": m, "n": n,
                                     "residual": res.to_strings()})
            ok = not failures
            all_pass = all_pass and ok
            cells.append({"r": r, "m": m, "delta": delta, "checked_n": ns,
                          "pass": ok, "failures": failures})
    return {
        "family_type": family_type,
        "cells": cells,
        "summary": {"cells": len(cells), "pass": all_pass},
    }
