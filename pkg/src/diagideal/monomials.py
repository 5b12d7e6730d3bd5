"""Monomials over a fixed m-by-n grid of variables x[i,j].

Variables are ranked row-major: x[1,1] first, then left to right along row 1,
then row 2, and so on.  Monomials compare lexicographically on their exponent
vectors read in that rank order, so x[1,1] beats any monomial avoiding it, and
within one row an earlier column wins.  Every canonical listing in the package
(ideal generators, Groebner bases, reports) is descending in this order.

Exponent vectors are stored densely as tuples, which makes the comparison a
plain tuple comparison.  Divisibility additionally uses a packed-integer form
(8 bits per variable with a guard bit) so that the hot loops in minimalization
and membership run on a couple of big-int operations.  Degrees stay below 64
by construction, so 8-bit fields never overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, FormatError, ShapeMismatchError


@dataclass(frozen=True)
class GridShape:
    """Grid dimensions, constrained to 1 <= rows <= cols."""

    rows: int
    cols: int

    def __post_init__(self):
        if not (isinstance(self.rows, int) and isinstance(self.cols, int)):
            raise DomainError("grid dimensions must be integers")
        if not 1 <= self.rows <= self.cols:
            raise DomainError(
                f"grid shape needs 1 <= rows <= cols, got {self.rows}x{self.cols}"
            )

    @property
    def variable_count(self) -> int:
        return self.rows * self.cols

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.rows and 1 <= j <= self.cols

    def variables(self):
        """All (row, col) pairs, 1-based, in rank order."""
        for i in range(1, self.rows + 1):
            for j in range(1, self.cols + 1):
                yield (i, j)


@lru_cache(maxsize=None)
def _guard_mask(var_count: int) -> int:
    mask = 0
    for idx in range(var_count):
        mask |= 0x80 << (8 * idx)
    return mask


_FACTOR_RE = re.compile(r"^x\[(\d+),(\d+)\](?:\^(\d+))?$")


class GridMonomial:
    """An immutable monomial; ``exps`` is the dense row-major exponent tuple."""

    __slots__ = ("shape", "exps", "_packed", "_hash")

    def __init__(self, shape: GridShape, exps: tuple):
        if len(exps) != shape.variable_count:
            raise DomainError("exponent tuple has wrong length for shape")
        self.shape = shape
        self.exps = exps
        self._packed = None
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def unit(cls, shape: GridShape) -> "GridMonomial":
        return cls(shape, (0,) * shape.variable_count)

    @classmethod
    def variable(cls, shape: GridShape, i: int, j: int) -> "GridMonomial":
        return cls.from_exponents(shape, {(i, j): 1})

    @classmethod
    def from_exponents(cls, shape: GridShape, mapping) -> "GridMonomial":
        """Build from a sparse {(row, col): exponent} mapping, 1-based."""
        exps = [0] * shape.variable_count
        for (i, j), e in mapping.items():
            if not shape.contains(i, j):
                raise DomainError(f"variable x[{i},{j}] outside {shape.rows}x{shape.cols} grid")
            if not isinstance(e, int) or e <= 0:
                raise DomainError(f"exponent of x[{i},{j}] must be a positive integer")
            exps[(i - 1) * shape.cols + (j - 1)] += e
        return cls(shape, tuple(exps))

    # -- inspection ---------------------------------------------------

    @property
    def exponents(self) -> dict:
        """Sparse {(row, col): exponent} view, 1-based keys."""
        n = self.shape.cols
        return {
            (idx // n + 1, idx % n + 1): e
            for idx, e in enumerate(self.exps)
            if e
        }

    def exponent(self, i: int, j: int) -> int:
        if not self.shape.contains(i, j):
            raise DomainError(f"variable x[{i},{j}] outside grid")
        return self.exps[(i - 1) * self.shape.cols + (j - 1)]

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_unit(self) -> bool:
        return not any(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def support(self) -> tuple:
        """Variables with positive exponent, in rank order."""
        n = self.shape.cols
        return tuple(
            (idx // n + 1, idx % n + 1) for idx, e in enumerate(self.exps) if e
        )

    def to_triples(self) -> list:
        """JSON form: [[row, col, exponent], ...] in rank order."""
        n = self.shape.cols
        return [[idx // n + 1, idx % n + 1, e] for idx, e in enumerate(self.exps) if e]

    # -- packed divisibility ------------------------------------------

    def _pack(self) -> int:
        packed = self._packed
        if packed is None:
            packed = 0
            for idx, e in enumerate(self.exps):
                if e:
                    packed |= e << (8 * idx)
            self._packed = packed
        return packed

    def divides(self, other: "GridMonomial") -> bool:
        self._check_shape(other)
        guard = _guard_mask(self.shape.variable_count)
        return ((other._pack() | guard) - self._pack()) & guard == guard

    # -- arithmetic ----------------------------------------------------

    def _check_shape(self, other: "GridMonomial"):
        if self.shape != other.shape:
            raise ShapeMismatchError(
                f"monomials on different grids: {self.shape} vs {other.shape}"
            )

    def __mul__(self, other: "GridMonomial") -> "GridMonomial":
        self._check_shape(other)
        return GridMonomial(self.shape, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "GridMonomial") -> "GridMonomial":
        """Exact division; raises DomainError when not divisible."""
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return GridMonomial(self.shape, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "GridMonomial") -> "GridMonomial":
        self._check_shape(other)
        return GridMonomial(self.shape, tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "GridMonomial") -> "GridMonomial":
        self._check_shape(other)
        return GridMonomial(self.shape, tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def colon(self, other: "GridMonomial") -> "GridMonomial":
        """self / gcd(self, other): the generator of (<self> : other)."""
        self._check_shape(other)
        return GridMonomial(self.shape, tuple(a - b if a > b else 0 for a, b in zip(self.exps, other.exps)))

    # -- ordering ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GridMonomial):
            return NotImplemented
        return self.exps == other.exps and self.shape == other.shape

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.shape.rows, self.shape.cols, self.exps))
            self._hash = h
        return h

    def __lt__(self, other):
        self._check_shape(other)
        return self.exps < other.exps

    def __le__(self, other):
        self._check_shape(other)
        return self.exps <= other.exps

    def __gt__(self, other):
        self._check_shape(other)
        return self.exps > other.exps

    def __ge__(self, other):
        self._check_shape(other)
        return self.exps >= other.exps

    # -- text ------------------------------------------------------------

    def __str__(self):
        if self.is_unit:
            return "1"
        n = self.shape.cols
        parts = []
        for idx, e in enumerate(self.exps):
            if e:
                i, j = idx // n + 1, idx % n + 1
                parts.append(f"x[{i},{j}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __repr__(self):
        return f"GridMonomial({self.shape.rows}x{self.shape.cols}, {self})"


def compare(a: GridMonomial, b: GridMonomial) -> int:
    """-1, 0, or 1 for a < b, a == b, a > b in the grid order."""
    a._check_shape(b)
    if a.exps == b.exps:
        return 0
    return 1 if a.exps > b.exps else -1


def parse_monomial(shape: GridShape, text: str) -> GridMonomial:
    """Parse the ``x[i,j]^e * ...`` text form (``1`` for the unit)."""
    text = text.strip()
    if not text:
        raise FormatError("empty monomial text")
    if text == "1":
        return GridMonomial.unit(shape)
    exps = [0] * shape.variable_count
    for token in text.split("*"):
        token = token.strip()
        match = _FACTOR_RE.match(token)
        if not match:
            raise FormatError(f"bad monomial factor {token!r}")
        i, j = int(match.group(1)), int(match.group(2))
        e = int(match.group(3)) if match.group(3) else 1
        if e < 1:
            raise FormatError(f"bad exponent in {token!r}")
        if not shape.contains(i, j):
            raise FormatError(f"variable x[{i},{j}] outside {shape.rows}x{shape.cols} grid")
        exps[(i - 1) * shape.cols + (j - 1)] += e
    return GridMonomial(shape, tuple(exps))


def monomial_from_triples(shape: GridShape, triples) -> GridMonomial:
    """Inverse of ``GridMonomial.to_triples``."""
    mapping = {}
    for item in triples:
        if len(item) != 3:
            raise FormatError(f"bad exponent triple {item!r}")
        i, j, e = item
        mapping[(i, j)] = mapping.get((i, j), 0) + e
    try:
        return GridMonomial.from_exponents(shape, mapping)
    except DomainError as exc:
        raise FormatError(str(exc)) from None
