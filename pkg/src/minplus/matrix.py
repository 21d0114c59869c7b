"""Square matrices over the min-plus semiring.

Matrices are immutable: every operation returns a new matrix. A matrix
doubles as the weighted adjacency matrix of a directed weighted graph,
with ε entries standing for absent edges.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .semiring import EPSILON, E, MinPlusValue, as_value, oplus, otimes, parse_value

__all__ = [
    "MinPlusMatrix",
    "identity",
    "epsilon_matrix",
    "mat_oplus",
    "mat_otimes",
    "scalar_otimes",
    "mat_power",
    "trace",
    "parse_matrix",
    "load_matrix",
]


class MinPlusMatrix:
    """An n-by-n matrix of min-plus values."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        converted = tuple(tuple(as_value(x) for x in row) for row in rows)
        n = len(converted)
        if n == 0:
            raise ValueError("matrix order must be at least 1")
        for row in converted:
            if len(row) != n:
                raise ValueError(f"matrix must be square, got a row of length {len(row)} in an order-{n} matrix")
        self._rows = converted

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[MinPlusValue, ...], ...]:
        return self._rows

    def __getitem__(self, index) -> MinPlusValue:
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, MinPlusMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"MinPlusMatrix({self.n}x{self.n}: {body})"

    def principal_submatrix(self, indices) -> "MinPlusMatrix":
        """Restriction to the given (0-based) rows and columns."""
        idx = tuple(indices)
        return MinPlusMatrix(tuple(tuple(self._rows[i][j] for j in idx) for i in idx))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[x.to_json() for x in row] for row in self._rows]}


def identity(n: int) -> MinPlusMatrix:
    """The ⊗-identity: 0 on the diagonal, ε elsewhere."""
    if n < 1:
        raise ValueError("matrix order must be at least 1")
    return MinPlusMatrix(
        tuple(tuple(E if i == j else EPSILON for j in range(n)) for i in range(n))
    )


def epsilon_matrix(n: int) -> MinPlusMatrix:
    """The ⊕-identity: every entry ε."""
    if n < 1:
        raise ValueError("matrix order must be at least 1")
    return MinPlusMatrix(tuple(tuple(EPSILON for _ in range(n)) for _ in range(n)))


def _check_same_order(a: MinPlusMatrix, b: MinPlusMatrix):
    if a.n != b.n:
        raise ValueError(f"matrix order mismatch: {a.n} vs {b.n}")


def mat_oplus(a: MinPlusMatrix, b: MinPlusMatrix) -> MinPlusMatrix:
    """Entrywise minimum."""
    _check_same_order(a, b)
    return MinPlusMatrix(
        tuple(
            tuple(oplus(x, y) for x, y in zip(ra, rb))
            for ra, rb in zip(a.rows, b.rows)
        )
    )


def mat_otimes(a: MinPlusMatrix, b: MinPlusMatrix) -> MinPlusMatrix:
    """Min-plus matrix product: [ab]_ij = min_l (a_il + b_lj)."""
    _check_same_order(a, b)
    n = a.n
    bcols = tuple(tuple(b.rows[l][j] for l in range(n)) for j in range(n))
    out = []
    for i in range(n):
        arow = a.rows[i]
        out_row = []
        for j in range(n):
            bcol = bcols[j]
            best = EPSILON
            for l in range(n):
                term = otimes(arow[l], bcol[l])
                if term < best:
                    best = term
            out_row.append(best)
        out.append(tuple(out_row))
    return MinPlusMatrix(tuple(out))


def scalar_otimes(alpha, a: MinPlusMatrix) -> MinPlusMatrix:
    """Add a scalar to every entry (ε entries stay ε)."""
    alpha = as_value(alpha)
    return MinPlusMatrix(
        tuple(tuple(otimes(alpha, x) for x in row) for row in a.rows)
    )


def mat_power(a: MinPlusMatrix, k: int) -> MinPlusMatrix:
    """k-fold ⊗-product; k = 0 yields the identity."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"matrix exponent must be a nonnegative integer, got {k!r}")
    if k == 0:
        return identity(a.n)
    result = a
    for _ in range(k - 1):
        result = mat_otimes(result, a)
    return result


def trace(a: MinPlusMatrix) -> MinPlusValue:
    """⊕-sum of the diagonal, i.e. the minimum diagonal entry."""
    best = EPSILON
    for i in range(a.n):
        d = a.rows[i][i]
        if d < best:
            best = d
    return best


def parse_matrix(text: str) -> MinPlusMatrix:
    """Parse a matrix from JSON ({"n": ..., "rows": [[...], ...]}) or plain text.

    The plain-text form is n lines of n whitespace-separated tokens; each
    token is an integer, exact decimal, "p/q", or an ε token ("inf", "eps").
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_matrix_json(text)
    return _parse_matrix_text(text)


def _parse_matrix_json(text: str) -> MinPlusMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError('matrix JSON must be an object with a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError('"rows" must be a non-empty list of lists')
    n = obj.get("n", len(rows))
    if n != len(rows):
        raise ParseError(f'"n" is {n} but {len(rows)} rows were given')
    parsed = []
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", line=i)
        out_row = []
        for j, cell in enumerate(row, start=1):
            try:
                if isinstance(cell, str):
                    out_row.append(parse_value(cell))
                else:
                    out_row.append(as_value(cell))
            except (ParseError, TypeError) as exc:
                raise ParseError(f"bad matrix entry {cell!r}: {exc}", line=i, column=j) from exc
        parsed.append(tuple(out_row))
    return MinPlusMatrix(tuple(parsed))


def _parse_matrix_text(text: str) -> MinPlusMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty matrix input")
    n = len(lines[0].split())
    parsed = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", line=lineno)
        row = []
        for col, token in enumerate(tokens, start=1):
            try:
                row.append(parse_value(token))
            except ParseError as exc:
                raise ParseError(f"bad matrix entry {token!r}", line=lineno, column=col) from exc
        parsed.append(tuple(row))
    if len(parsed) != n:
        raise ParseError(f"{len(parsed)} rows of {n} entries each do not form a square matrix")
    return MinPlusMatrix(tuple(parsed))


def load_matrix(path) -> MinPlusMatrix:
    """Read a matrix file in either supported format."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix(handle.read())
