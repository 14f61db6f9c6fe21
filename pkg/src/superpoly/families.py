"""Polynomial families generated by the superelliptic three-term recursion.

For k >= 0,

    (2r + m + k m) P_k = 2c (r + (1 + k - r) m) P_{k-r} - (k - (2r - 1)) m P_{k-2r},

seeded by a unit initial condition P_{j0} = 1, P_j = 0 for the other
j in [-2r, -1].  The divisor 2r + m + k m >= m + 2r >= 6 for k >= 0, so
generation is total.  Nonzero members live on the lattice k == j0 (mod r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import ParameterError, SupportError
from .poly import C, CPoly


@dataclass(frozen=True)
class FamilyParams:
    r: int
    m: int
    j0: int

    def __post_init__(self):
        if self.r < 2 or self.m < 2:
            raise ParameterError(f"need r >= 2 and m >= 2, got r={self.r}, m={self.m}")
        if not (-2 * self.r <= self.j0 <= -1):
            raise ParameterError(f"j0 must lie in [-{2 * self.r}, -1], got {self.j0}")


@dataclass
class Family:
    """A generated family; polys maps every k >= -2r up to kmax to its CPoly.

    Zero polynomials are stored explicitly (off-lattice indices and zero
    initial entries) so series code can index densely.
    """

    params: FamilyParams
    polys: Dict[int, CPoly] = field(default_factory=dict)
    kmax: int = -1

    def __post_init__(self):
        if not self.polys:
            for j in range(-2 * self.params.r, 0):
                self.polys[j] = CPoly.one() if j == self.params.j0 else CPoly.zero()

    def extend(self, kmax: int) -> "Family":
        r, m = self.params.r, self.params.m
        for k in range(self.kmax + 1, kmax + 1):
            den = 2 * r + m + k * m
            p = (C * self.polys[k - r]).scale(2 * (r + (1 + k - r) * m)) \
                - self.polys[k - 2 * r].scale((k - (2 * r - 1)) * m)
            self.polys[k] = p.scale(Fraction(1, den))
        self.kmax = max(self.kmax, kmax)
        return self

    def __getitem__(self, k: int) -> CPoly:
        return self.polys[k]

    def nonzero_members(self) -> List[Tuple[int, CPoly]]:
        """(k, P_k) for k >= 0 with P_k != 0, in increasing k."""
        return [(k, self.polys[k]) for k in range(0, self.kmax + 1) if self.polys[k]]

    def recursion_residual(self, k: int) -> CPoly:
        """(2r+m+km) P_k - 2c(r+(1+k-r)m) P_{k-r} + (k-(2r-1)) m P_{k-2r}; zero iff exact."""
        r, m = self.params.r, self.params.m
        return (self.polys[k].scale(2 * r + m + k * m)
                - (C * self.polys[k - r]).scale(2 * (r + (1 + k - r) * m))
                + self.polys[k - 2 * r].scale((k - (2 * r - 1)) * m))

    def to_json(self) -> dict:
        return {
            "r": self.params.r,
            "m": self.params.m,
            "j0": self.params.j0,
            "polys": [{"k": k, "coeffs": self.polys[k].to_strings()}
                      for k in sorted(self.polys)],
        }


_CACHE: Dict[FamilyParams, Family] = {}


def generate(params: FamilyParams, kmax: int | None = None) -> Family:
    """Generate (or extend the memoized) family up to kmax; default kmax = 12r."""
    if kmax is None:
        kmax = 12 * params.r
    if kmax < 0:
        raise ParameterError("kmax must be >= 0")
    fam = _CACHE.get(params)
    if fam is None:
        fam = Family(params)
        _CACHE[params] = fam
    return fam.extend(kmax)


def family(r: int, m: int, j0: int, kmax: int | None = None) -> Family:
    return generate(FamilyParams(r, m, j0), kmax)


def clear_cache():
    _CACHE.clear()


@dataclass(frozen=True)
class SupportProfile:
    stride: int
    offset: int
    degree_map: Tuple[Tuple[int, int], ...]  # (k, degree) for nonzero members


def support_profile(fam: Family) -> SupportProfile:
    """Detect the arithmetic progression carrying the nonzero members (k >= 0).

    The recursion couples indices in steps of r, so the stride divides r;
    what is detected is whatever the generated data shows.
    """
    members = fam.nonzero_members()
    if not members:
        raise SupportError(f"family {fam.params} has no nonzero members up to kmax={fam.kmax}")
    ks = [k for k, _ in members]
    if len(ks) == 1:
        stride = fam.params.r
    else:
        gaps = {b - a for a, b in zip(ks, ks[1:])}
        if len(gaps) != 1:
            raise SupportError(f"support of {fam.params} is not an arithmetic progression: {ks}")
        stride = gaps.pop()
    return SupportProfile(
        stride=stride,
        offset=ks[0] % stride,
        degree_map=tuple((k, int(p.degree)) for k, p in members),
    )
