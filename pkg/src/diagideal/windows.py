"""Column windows of the variable grid, their diagonal monomials, and minors.

A window is a block of consecutive columns wide enough to hold one variable
per row.  Its diagonal monomials pick one variable per row with strictly
increasing columns inside the window; they generate the window's diagonal
ideal, and they are exactly the lead terms of the window's maximal minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .caps import DEFAULT_CAPS, Caps
from .errors import ChainOrderError, DomainError, ResourceLimitError, SelectionError, WindowError
from .ideals import MonomialIdeal
from .monomials import GridMonomial, GridShape


@dataclass(frozen=True)
class Window:
    """Inclusive column bounds; needs first < last."""

    first: int
    last: int

    def __post_init__(self):
        if not (isinstance(self.first, int) and isinstance(self.last, int)):
            raise WindowError("window bounds must be integers")
        if not 1 <= self.first < self.last:
            raise WindowError(f"window needs 1 <= first < last, got ({self.first},{self.last})")

    @property
    def width(self) -> int:
        return self.last - self.first + 1

    def check_against(self, shape: GridShape):
        if self.last > shape.cols:
            raise WindowError(
                f"window ({self.first},{self.last}) exceeds {shape.cols} columns"
            )
        if self.width < shape.rows:
            raise WindowError(
                f"window ({self.first},{self.last}) too narrow for {shape.rows} rows"
            )

    def __str__(self):
        return f"({self.first},{self.last})"


@dataclass(frozen=True)
class WindowChain:
    """Windows sorted componentwise: both bound sequences nondecreasing."""

    windows: tuple

    def __post_init__(self):
        if not self.windows:
            raise ChainOrderError("empty window chain")
        for w in self.windows:
            if not isinstance(w, Window):
                raise ChainOrderError(f"not a window: {w!r}")
        firsts = [w.first for w in self.windows]
        lasts = [w.last for w in self.windows]
        if firsts != sorted(firsts) or lasts != sorted(lasts):
            raise ChainOrderError(
                "windows must be sorted in both coordinates, got "
                + ", ".join(str(w) for w in self.windows)
            )

    @classmethod
    def of(cls, *bounds) -> "WindowChain":
        return cls(tuple(Window(k, l) for k, l in bounds))

    def check_against(self, shape: GridShape):
        for w in self.windows:
            w.check_against(shape)

    def __len__(self):
        return len(self.windows)

    def __iter__(self):
        return iter(self.windows)

    def __str__(self):
        return ":".join(f"{w.first},{w.last}" for w in self.windows)


@dataclass(frozen=True)
class ColumnSelection:
    """Strictly increasing 1-based column positions, one per row."""

    cols: tuple

    def __post_init__(self):
        if not self.cols:
            raise SelectionError("empty column selection")
        for a, b in zip(self.cols, self.cols[1:]):
            if a >= b:
                raise SelectionError(f"columns must strictly increase, got {self.cols}")
        if self.cols[0] < 1:
            raise SelectionError(f"columns must be >= 1, got {self.cols}")

    def check_against(self, shape: GridShape, window: Window | None = None):
        if len(self.cols) != shape.rows:
            raise SelectionError(
                f"selection {self.cols} needs exactly {shape.rows} columns"
            )
        if self.cols[-1] > shape.cols:
            raise SelectionError(f"selection {self.cols} exceeds {shape.cols} columns")
        if window is not None and not (window.first <= self.cols[0] and self.cols[-1] <= window.last):
            raise SelectionError(f"selection {self.cols} outside window {window}")

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.cols) + ")"


def diagonal_monomial(shape: GridShape, cols) -> GridMonomial:
    """The monomial taking column cols[i-1] in row i."""
    selection = cols if isinstance(cols, ColumnSelection) else ColumnSelection(tuple(cols))
    selection.check_against(shape)
    return GridMonomial.from_exponents(
        shape, {(i, c): 1 for i, c in enumerate(selection.cols, start=1)}
    )


def selection_of(monomial: GridMonomial) -> ColumnSelection | None:
    """Recover the column selection of a diagonal monomial, else None."""
    if not monomial.is_squarefree:
        return None
    support = monomial.support()
    if len(support) != monomial.shape.rows:
        return None
    cols = []
    for row, (i, j) in enumerate(support, start=1):
        if i != row:
            return None
        cols.append(j)
    for a, b in zip(cols, cols[1:]):
        if a >= b:
            return None
    return ColumnSelection(tuple(cols))


@lru_cache(maxsize=None)
def enumerate_diagonals(shape: GridShape, window: Window) -> tuple:
    """All diagonal monomials of the window, descending in the grid order.

    Ascending lexicographic column tuples give exactly the descending
    monomial order, so plain combinations come out already sorted.
    """
    window.check_against(shape)
    diags = tuple(
        diagonal_monomial(shape, cols)
        for cols in combinations(range(window.first, window.last + 1), shape.rows)
    )
    assert list(diags) == sorted(diags, reverse=True)
    return diags


@lru_cache(maxsize=None)
def diagonal_ideal(shape: GridShape, window: Window) -> MonomialIdeal:
    """The ideal generated by the window's diagonal monomials."""
    diags = enumerate_diagonals(shape, window)
    ideal = MonomialIdeal.from_generators(shape, diags)
    # Diagonal monomials are pairwise non-dividing, so nothing may collapse.
    assert len(ideal.gens) == comb(window.width, shape.rows)
    return ideal


def window_product_ideal(shape: GridShape, windows) -> MonomialIdeal:
    """Product of the diagonal ideals of the given windows (unit if empty)."""
    result = MonomialIdeal.unit(shape)
    for w in windows:
        result = result * diagonal_ideal(shape, w)
    return result


@dataclass(frozen=True)
class MinorPolynomial:
    """Signed expansion of the maximal minor on the selected columns."""

    shape: GridShape
    selection: ColumnSelection
    terms: tuple  # ((sign, GridMonomial), ...) descending by monomial

    @property
    def leading_monomial(self) -> GridMonomial:
        return self.terms[0][1]


def minor(shape: GridShape, cols, caps: Caps = DEFAULT_CAPS) -> MinorPolynomial:
    """Permutation expansion of the m-by-m minor on the given columns.

    The expansion has m! signed terms; the cap keeps m small enough for that
    to stay reasonable.  Under the grid order the diagonal term leads.
    """
    selection = cols if isinstance(cols, ColumnSelection) else ColumnSelection(tuple(cols))
    selection.check_against(shape)
    m = shape.rows
    if m > caps.max_minor_rows:
        raise ResourceLimitError(
            f"minor expansion capped at {caps.max_minor_rows} rows, got {m}",
            snapshot={"rows": m},
        )
    terms = []
    for perm in permutations(range(m)):
        inversions = sum(
            1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b]
        )
        sign = -1 if inversions % 2 else 1
        mono = GridMonomial.from_exponents(
            shape, {(i + 1, selection.cols[perm[i]]): 1 for i in range(m)}
        )
        terms.append((sign, mono))
    terms.sort(key=lambda t: t[1], reverse=True)
    result = MinorPolynomial(shape, selection, tuple(terms))
    assert result.leading_monomial == diagonal_monomial(shape, selection)
    return result


def iter_windows(shape: GridShape):
    """All valid windows of the shape, ordered by (first, last)."""
    for first in range(1, shape.cols + 1):
        for last in range(first + 1, shape.cols + 1):
            if last - first + 1 >= shape.rows:
                yield Window(first, last)


def iter_sorted_chains(shape: GridShape, length: int):
    """All sorted chains of the given length over the shape's windows.

    A multiset of windows admits a componentwise-sorted ordering exactly when
    its members are pairwise comparable; listing windows by (first, last) makes
    the first coordinates nondecreasing, so only the last coordinates need a
    check.
    """
    if length < 1:
        raise DomainError("chain length must be >= 1")
    windows = list(iter_windows(shape))
    from itertools import combinations_with_replacement

    for combo in combinations_with_replacement(windows, length):
        lasts = [w.last for w in combo]
        if lasts == sorted(lasts):
            yield WindowChain(tuple(combo))
