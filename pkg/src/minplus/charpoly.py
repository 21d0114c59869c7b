"""Characteristic polynomials of min-plus matrices.

Two distinct constructions are provided:

* ``charpoly_tropdet`` expands tropdet(A ⊕ x⊗I): the coefficient of
  x^{n-j} is the minimum tropical determinant over all j-by-j principal
  submatrices (choosing x at the other n-j diagonal positions forces a
  permutation on the complementary index set).
* ``charpoly_flv`` runs the trace recursion
  c_k = Tr(A^k ⊕ c_1⊗A^{k-1} ⊕ ... ⊕ c_{k-1}⊗A),
  the min-plus counterpart of the classical trace-based coefficient
  recursion for characteristic polynomials.

The tropical determinant itself comes in two independent implementations,
a permutation brute force and a minimum-cost assignment solver, so each
can serve as the other's oracle.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .errors import CapExceeded
from .matrix import MinPlusMatrix, mat_oplus, mat_otimes, scalar_otimes, trace
from .polynomial import MinPlusPolynomial
from .semiring import EPSILON, E, MinPlusValue

__all__ = [
    "BRUTE_FORCE_CAP",
    "SUBSET_CAP",
    "tropdet_bruteforce",
    "tropdet_assignment",
    "charpoly_tropdet",
    "charpoly_flv",
    "eigenvalue_from_charpoly",
]

BRUTE_FORCE_CAP = 9
SUBSET_CAP = 16


def _raw_rows(a: MinPlusMatrix) -> list[list[Fraction | None]]:
    """Entries as Fractions with None for ε, for the inner loops."""
    return [[None if x.is_epsilon else x.rational for x in row] for row in a.rows]


def tropdet_bruteforce(a: MinPlusMatrix, cap: int = BRUTE_FORCE_CAP) -> MinPlusValue:
    """Minimum over all n! permutations of the selected entry sum."""
    n = a.n
    if n > cap:
        raise CapExceeded(
            f"brute-force tropical determinant is capped at order {cap} "
            f"(got {n}); use tropdet_assignment instead"
        )
    rows = _raw_rows(a)
    best: Fraction | None = None
    for sigma in permutations(range(n)):
        total = Fraction(0)
        feasible = True
        for i, j in enumerate(sigma):
            cell = rows[i][j]
            if cell is None:
                feasible = False
                break
            total += cell
        if feasible and (best is None or total < best):
            best = total
    return EPSILON if best is None else MinPlusValue(best)


def _assignment_cost(rows: list[list[Fraction | None]]) -> Fraction | None:
    """Minimum-cost perfect assignment with None as a forbidden cell.

    Shortest-augmenting-path method with dual potentials, run in exact
    rational arithmetic. Returns None when the finite cells admit no
    perfect matching (the tropical determinant is then ε).
    """
    n = len(rows)
    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j, 1-based, 0 = free
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv: list[Fraction | None] = [None] * (n + 1)
        way = [0] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta: Fraction | None = None
            j1 = 0
            base = u[i0]
            row = rows[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cell = row[j - 1]
                if cell is not None:
                    cur = cell - base - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                return None  # Hall violation: no perfect matching on finite cells
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    total = Fraction(0)
    for j in range(1, n + 1):
        total += rows[match[j] - 1][j - 1]
    return total


def tropdet_assignment(a: MinPlusMatrix) -> MinPlusValue:
    """Tropical determinant via minimum-cost assignment; no size cap."""
    cost = _assignment_cost(_raw_rows(a))
    return EPSILON if cost is None else MinPlusValue(cost)


def charpoly_tropdet(a: MinPlusMatrix, cap: int = SUBSET_CAP) -> MinPlusPolynomial:
    """The characteristic polynomial tropdet(A ⊕ x⊗I), as coefficients.

    c_0 = 0 and c_j = min over size-j index subsets S of the tropical
    determinant of A restricted to S, computed with the assignment solver.
    """
    n = a.n
    if n > cap:
        raise CapExceeded(
            f"principal-minor enumeration is capped at order {cap} (got {n})"
        )
    rows = _raw_rows(a)
    coeffs: list[MinPlusValue] = [E]
    for j in range(1, n + 1):
        best: Fraction | None = None
        for subset in combinations(range(n), j):
            minor = [[rows[r][c] for c in subset] for r in subset]
            cost = _assignment_cost(minor)
            if cost is not None and (best is None or cost < best):
                best = cost
        coeffs.append(EPSILON if best is None else MinPlusValue(best))
    return MinPlusPolynomial(tuple(coeffs))


def charpoly_flv(a: MinPlusMatrix) -> MinPlusPolynomial:
    """The trace-recursion characteristic polynomial.

    c_1 = Tr(A) and c_k = Tr(A^k ⊕ c_1⊗A^{k-1} ⊕ ... ⊕ c_{k-1}⊗A), with
    the matrix powers computed once and reused.
    """
    n = a.n
    powers: list[MinPlusMatrix | None] = [None] * (n + 1)
    powers[1] = a
    for k in range(2, n + 1):
        powers[k] = mat_otimes(powers[k - 1], a)
    coeffs: list[MinPlusValue] = [E]
    for k in range(1, n + 1):
        acc = powers[k]
        for i in range(1, k):
            acc = mat_oplus(acc, scalar_otimes(coeffs[i], powers[k - i]))
        coeffs.append(trace(acc))
    return MinPlusPolynomial(tuple(coeffs))


def eigenvalue_from_charpoly(p: MinPlusPolynomial) -> MinPlusValue:
    """Minimum root of a monic polynomial: min over finite c_j of c_j / j.

    The leading line n*x is the strict minimum for very negative x, so the
    first breakpoint sits where some line c_j + (n-j)*x first catches it,
    at x = c_j / j. Returns ε when c_1..c_n are all ε (no breakpoints).
    """
    if not p.is_monic:
        raise ValueError("polynomial must be monic (leading coefficient 0)")
    best: Fraction | None = None
    for j, c in enumerate(p.coeffs):
        if j == 0 or c.is_epsilon:
            continue
        candidate = c.rational / j
        if best is None or candidate < best:
            best = candidate
    return EPSILON if best is None else MinPlusValue(best)
