"""Exact linear algebra over the rationals.

Forward elimination is fraction-free (Bareiss): rows are cleared to integers
and the two-step determinant identity keeps every intermediate entry an exact
integer, which controls the coefficient blow-up coming from the large integer
factors in the operator coefficient formulas.  Back-substitution runs over
Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            x = Fraction(x)
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss_echelon(M: List[List[int]], ncols: int):
    """In-place fraction-free echelon form; returns the pivot column list."""
    nrows = len(M)
    piv_cols: List[int] = []
    piv_row = 0
    prev = 1
    for col in range(ncols):
        pr = None
        for i in range(piv_row, nrows):
            if M[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        M[piv_row], M[pr] = M[pr], M[piv_row]
        p = M[piv_row][col]
        for i in range(piv_row + 1, nrows):
            mi = M[i][col]
            if mi == 0 and all(M[i][j] == 0 for j in range(col, ncols)):
                continue
            for j in range(col, ncols):
                num = p * M[i][j] - mi * M[piv_row][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination invariant violated")
                M[i][j] = q
        prev = p
        piv_cols.append(col)
        piv_row += 1
        if piv_row == nrows:
            break
    return piv_cols


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None):
    """Exact basis of the right kernel of the matrix.

    Deterministic: reduced-echelon pivots, one basis vector per free column,
    each normalized so its first nonzero entry is 1.  Empty list iff the
    kernel is trivial.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        rows = [[Fraction(0)] * ncols]
    M = _integer_rows(rows)
    piv_cols = _bareiss_echelon(M, ncols)
    rank = len(piv_cols)
    free_cols = [j for j in range(ncols) if j not in piv_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = piv_cols[i]
            s = Fraction(0)
            for j in range(pc + 1, ncols):
                if vec[j]:
                    s += M[i][j] * vec[j]
            vec[pc] = -s / M[i][pc]
        first = next(x for x in vec if x != 0)
        basis.append([x / first for x in vec])
    return basis


def rank(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> int:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return 0
    M = _integer_rows(rows)
    return len(_bareiss_echelon(M, ncols))


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Unique exact solution of an (over)determined consistent system.

    Returns the solution vector, or None if the system is inconsistent or
    underdetermined (callers treat both as fit degeneracy).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [r + [Fraction(b)] for r, b in zip(rows, rhs)]
    M = _integer_rows(aug)
    piv_cols = _bareiss_echelon(M, ncols + 1)
    if (ncols + 1 - len(piv_cols)) != 1 or ncols in piv_cols:
        # last column pivotal -> inconsistent; >1 free -> underdetermined
        return None
    sol = [Fraction(0)] * ncols
    for i in range(len(piv_cols) - 1, -1, -1):
        pc = piv_cols[i]
        s = Fraction(M[i][ncols])
        for j in range(pc + 1, ncols):
            s -= M[i][j] * sol[j]
        sol[pc] = s / M[i][pc]
    return sol


def matvec(rows: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]):
    return [sum((Fraction(a) * v for a, v in zip(row, vec)), Fraction(0)) for row in rows]
