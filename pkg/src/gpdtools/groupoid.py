"""Finite groupoids as explicit multiplication tables.

A groupoid of order ``n`` is stored as an ``n x n`` table of rows; the entry
``rows[x][y]`` is the product ``x * y``.  Elements are the integers
``0 .. n-1``.  Everything here is exact and exhaustive: predicates quantify
over all element tuples of the relevant arity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import MalformedInput, NotClosed

#: Tags for the twelve product identities handled by :func:`satisfies_variety`,
#: in their fixed canonical order.
VARIETIES = (
    "B",
    "L0",
    "R0",
    "RB",
    "IB",
    "IL0",
    "IR0",
    "IRB",
    "GB",
    "GL0",
    "GR0",
    "GRB",
)


@dataclass(frozen=True)
class Groupoid:
    """An immutable finite magma given by its full multiplication table."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if not isinstance(self.rows, tuple):
            raise TypeError("rows must be a tuple of tuples")
        if n == 0:
            raise ValueError("a table needs at least one element")
        for row in self.rows:
            if not isinstance(row, tuple) or len(row) != n:
                raise ValueError(f"expected {n} rows of length {n}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValueError(f"table entry {v!r} outside 0..{n - 1}")

    @staticmethod
    def from_rows(rows) -> "Groupoid":
        """Build a groupoid from any iterable of iterables of ints."""
        return Groupoid(tuple(tuple(row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def product(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def is_associative(self) -> bool:
        """Exhaustively test ``(x*y)*z == x*(y*z)``."""
        rows = self.rows
        for rx in rows:
            # Row of x*(y*_) for fixed x,y is rx composed with row of y;
            # row of (x*y)*_ is the row indexed by x*y.
            for y, ry in enumerate(rows):
                if rows[rx[y]] != tuple(map(rx.__getitem__, ry)):
                    return False
        return True

    def idempotents(self) -> frozenset[int]:
        """All x with ``x*x == x``."""
        return frozenset(x for x in range(self.order) if self.rows[x][x] == x)

    def products(self) -> tuple[int, ...]:
        """The sorted set of all products ``{x*y}``."""
        return tuple(sorted({v for row in self.rows for v in row}))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))


def square_subgroupoid(g: Groupoid) -> tuple[Groupoid, tuple[int, ...]]:
    """Restrict ``g`` to the set of all products ``{x*y : x, y}``.

    Returns the restricted table (re-numbered 0..k-1 in ascending order of
    the original labels) together with the original labels of its elements.
    Raises :class:`NotClosed` if the product set is not closed; a product
    of products is itself a product, so this cannot actually happen — the
    check is purely defensive.
    """
    members = g.products()
    index = {v: i for i, v in enumerate(members)}
    rows = []
    for x in members:
        row = []
        for y in members:
            p = g.rows[x][y]
            if p not in index:
                raise NotClosed(
                    f"product {x}*{y}={p} escapes the product set"
                )
            row.append(index[p])
        rows.append(tuple(row))
    return Groupoid(tuple(rows)), members


def _sat_B(g: Groupoid) -> bool:
    # x == x*x for all x
    return all(g.rows[x][x] == x for x in range(g.order))


def _sat_L0(g: Groupoid) -> bool:
    # (x*y)*z == x
    rows = g.rows
    n = g.order
    for x in range(n):
        for y in range(n):
            p = rows[x][y]
            if any(rows[p][z] != x for z in range(n)):
                return False
    return True


def _sat_R0(g: Groupoid) -> bool:
    # (x*y)*z == z
    rows = g.rows
    n = g.order
    for x in range(n):
        for y in range(n):
            p = rows[x][y]
            if any(rows[p][z] != z for z in range(n)):
                return False
    return True


def _sat_RB(g: Groupoid) -> bool:
    # (x*y)*x == x
    rows = g.rows
    n = g.order
    return all(rows[rows[x][y]][x] == x for x in range(n) for y in range(n))


def _sat_IB(g: Groupoid) -> bool:
    # x*y == (x*x)*(y*y)
    rows = g.rows
    n = g.order
    sq = [rows[x][x] for x in range(n)]
    return all(rows[x][y] == rows[sq[x]][sq[y]] for x in range(n) for y in range(n))


def _sat_IL0(g: Groupoid) -> bool:
    # (x*y)*z == x*w : every value (x*y)*z depends only on x, and equals
    # every product x*w.  Equivalent to: all rows are constant and
    # row-of-anything-in-row-x is the constant of row x... checked directly.
    rows = g.rows
    n = g.order
    for x in range(n):
        vals = {rows[x][w] for w in range(n)}
        if len(vals) != 1:
            return False
        target = vals.pop()
        for y in range(n):
            p = rows[x][y]
            if any(rows[p][z] != target for z in range(n)):
                return False
    return True


def _sat_IR0(g: Groupoid) -> bool:
    # (x*y)*z == w*z
    rows = g.rows
    n = g.order
    for z in range(n):
        col = {rows[w][z] for w in range(n)}
        if len(col) != 1:
            return False
        target = col.pop()
        for x in range(n):
            for y in range(n):
                if rows[rows[x][y]][z] != target:
                    return False
    return True


def _sat_IRB(g: Groupoid) -> bool:
    # (x*y)*z == x*z
    rows = g.rows
    n = g.order
    return all(
        rows[rows[x][y]][z] == rows[x][z]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


def _sat_GB(g: Groupoid) -> bool:
    # x*y == ((x*y)*x)*y
    rows = g.rows
    n = g.order
    return all(
        rows[x][y] == rows[rows[rows[x][y]][x]][y] for x in range(n) for y in range(n)
    )


def _sat_GL0(g: Groupoid) -> bool:
    # (x*y)*z == x*y
    rows = g.rows
    n = g.order
    for x in range(n):
        for y in range(n):
            p = rows[x][y]
            if any(rows[p][z] != p for z in range(n)):
                return False
    return True


def _sat_GR0(g: Groupoid) -> bool:
    # (x*y)*z == y*z
    rows = g.rows
    n = g.order
    return all(
        rows[rows[x][y]][z] == rows[y][z]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


def _sat_GRB(g: Groupoid) -> bool:
    # x*y == (((x*y)*z)*x)*y for all x, y, z
    rows = g.rows
    n = g.order
    for x in range(n):
        for y in range(n):
            p = rows[x][y]
            if any(rows[rows[rows[p][z]][x]][y] != p for z in range(n)):
                return False
    return True


_CHECKERS = {
    "B": _sat_B,
    "L0": _sat_L0,
    "R0": _sat_R0,
    "RB": _sat_RB,
    "IB": _sat_IB,
    "IL0": _sat_IL0,
    "IR0": _sat_IR0,
    "IRB": _sat_IRB,
    "GB": _sat_GB,
    "GL0": _sat_GL0,
    "GR0": _sat_GR0,
    "GRB": _sat_GRB,
}


def satisfies_variety(g: Groupoid, variety: str) -> bool:
    """Exhaustively test one of the twelve product identities.

    This is a pure identity check: it does not require associativity.
    Use :func:`in_semigroup_class` for membership in the corresponding
    semigroup class.
    """
    try:
        checker = _CHECKERS[variety]
    except KeyError:
        raise ValueError(f"unknown variety tag {variety!r}") from None
    return checker(g)


def in_semigroup_class(g: Groupoid, variety: str) -> bool:
    """Membership in one of the twelve semigroup classes.

    A table belongs to the class when it is associative *and* satisfies the
    class identity.
    """
    return g.is_associative() and satisfies_variety(g, variety)


def parse_groupoid(text: str) -> Groupoid:
    """Parse the ``.gpd`` format: order on the first line, then the rows.

    Each row is one line of ``n`` whitespace-separated integers in
    ``0..n-1``.  Blank lines and lines starting with ``#`` are ignored.
    """
    lines = _numbered_content_lines(text)
    if not lines:
        raise MalformedInput("empty input, expected an order line")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise MalformedInput(f"expected integer order, got {head!r}", lineno) from None
    if n <= 0:
        raise MalformedInput(f"order must be positive, got {n}", lineno)
    if len(lines) - 1 > n:
        extra_lineno = lines[1 + n][0]
        raise MalformedInput("unexpected trailing content", extra_lineno)
    if len(lines) - 1 < n:
        raise MalformedInput(
            f"expected {n} rows after the order line, got {len(lines) - 1}",
            lines[-1][0] + 1,
        )
    rows = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise MalformedInput(f"expected {n} entries, got {len(parts)}", lineno)
        row = []
        for part in parts:
            try:
                v = int(part)
            except ValueError:
                raise MalformedInput(f"bad entry {part!r}", lineno) from None
            if not 0 <= v < n:
                raise MalformedInput(f"entry {v} outside 0..{n - 1}", lineno)
            row.append(v)
        rows.append(tuple(row))
    return Groupoid(tuple(rows))


def serialize_groupoid(g: Groupoid) -> str:
    """Render a table in the ``.gpd`` format (newline-terminated)."""
    out = [str(g.order)]
    out.extend(" ".join(map(str, row)) for row in g.rows)
    return "\n".join(out) + "\n"


def _numbered_content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    result = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            result.append((i, line))
    return result
