"""Colon structure of diagonal ideals: quotient chains, closed forms, circles.

The exact brute-force colon of a monomial prefix is compared against two
closed forms: for a single window the colon of the earlier diagonals is
generated by the variables sitting in the column gaps of the divisor, with the
column before the window acting as the sentinel gap floor; for a sorted chain
of windows the same variables appear next to the product of the remaining
windows' diagonal ideals.  The circle redistribution rebalances a factor per
window by sorting column positions row by row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .errors import DomainError, ResourceLimitError
from .ideals import MonomialIdeal
from .monomials import GridMonomial, GridShape
from .windows import (
    ColumnSelection,
    Window,
    WindowChain,
    diagonal_monomial,
    enumerate_diagonals,
    selection_of,
    window_product_ideal,
)


@dataclass(frozen=True)
class QuotientChain:
    """Successive colon ideals (<f_1..f_u> : f_{u+1}) for a generator list."""

    ideal: MonomialIdeal
    steps: tuple  # steps[u-1] = (<f_1..f_u> : f_{u+1}), u = 1..r-1

    @property
    def certifies_linear_quotients(self) -> bool:
        return all(step.is_generated_by_variables for step in self.steps)

    @property
    def variable_counts(self) -> tuple:
        """Number of colon generators per generator (0 for the first)."""
        return (0,) + tuple(len(step.gens) for step in self.steps)


def quotient_chain(ideal: MonomialIdeal) -> QuotientChain:
    """Brute-force colon chain along the ideal's canonical generator order."""
    if ideal.is_zero:
        raise DomainError("quotient chain of the zero ideal is undefined")
    gens = ideal.gens
    steps = []
    for u in range(1, len(gens)):
        f = gens[u]
        steps.append(
            MonomialIdeal.from_generators(ideal.shape, [g.colon(f) for g in gens[:u]])
        )
    return QuotientChain(ideal, tuple(steps))


def _gap_variables(shape: GridShape, window: Window, selection: ColumnSelection):
    """Variables x[i,b] with b strictly between consecutive selected columns.

    The floor for row 1 is the column just before the window.
    """
    variables = []
    prev = window.first - 1
    for i, c in enumerate(selection.cols, start=1):
        for b in range(prev + 1, c):
            variables.append(GridMonomial.variable(shape, i, b))
        prev = c
    return variables


def closed_form_colon(shape: GridShape, window: Window, f: GridMonomial) -> MonomialIdeal:
    """Closed form of (<earlier diagonals> : f) inside one window.

    Generated by the gap variables of f; the zero ideal when f is the
    window's top diagonal monomial.
    """
    window.check_against(shape)
    selection = selection_of(f)
    if selection is None:
        raise DomainError(f"{f} is not a diagonal monomial")
    selection.check_against(shape, window)
    return MonomialIdeal.from_generators(shape, _gap_variables(shape, window, selection))


def closed_form_product_colon(
    shape: GridShape, chain: WindowChain, f: GridMonomial, prefix_index: int
) -> MonomialIdeal:
    """Closed form of (<product of all windows, f_1..f_u> : f_{u+1}).

    The remaining windows' product joins the gap variables of f, whose gap
    floor is taken from the first window.  Requires at least two windows and
    f equal to the first window's diagonal at position prefix_index.
    """
    if len(chain) < 2:
        raise DomainError("product colon closed form needs at least two windows")
    chain.check_against(shape)
    first = chain.windows[0]
    diagonals = enumerate_diagonals(shape, first)
    if not 0 <= prefix_index < len(diagonals):
        raise DomainError(
            f"prefix index {prefix_index} out of range for window {first}"
        )
    if diagonals[prefix_index] != f:
        raise DomainError(
            f"{f} is not diagonal #{prefix_index} of window {first}"
        )
    rest = window_product_ideal(shape, chain.windows[1:])
    return rest + closed_form_colon(shape, first, f)


@dataclass(frozen=True)
class DiagonalFactorization:
    """One diagonal monomial per window of a chain."""

    selections: tuple  # of ColumnSelection

    @classmethod
    def for_chain(cls, shape: GridShape, chain: WindowChain, factors) -> "DiagonalFactorization":
        """Validate factors (selections or monomials) against the chain."""
        chain.check_against(shape)
        items = list(factors)
        if len(items) != len(chain):
            raise DomainError(
                f"{len(items)} factors for {len(chain)} windows"
            )
        selections = []
        for window, item in zip(chain.windows, items):
            if isinstance(item, GridMonomial):
                selection = selection_of(item)
                if selection is None:
                    raise DomainError(f"{item} is not a diagonal monomial")
            elif isinstance(item, ColumnSelection):
                selection = item
            else:
                selection = ColumnSelection(tuple(item))
            selection.check_against(shape, window)
            selections.append(selection)
        return cls(tuple(selections))

    def monomials(self, shape: GridShape) -> tuple:
        return tuple(diagonal_monomial(shape, sel) for sel in self.selections)


@dataclass(frozen=True)
class CircleTable:
    """Row-by-row sorted column positions of a factor list."""

    rows: tuple  # rows[i-1] = sorted columns used in row i, one per factor


def circle_table(shape: GridShape, factorization: DiagonalFactorization) -> CircleTable:
    rows = []
    for i in range(shape.rows):
        rows.append(tuple(sorted(sel.cols[i] for sel in factorization.selections)))
    return CircleTable(tuple(rows))


def redistribute(shape: GridShape, chain: WindowChain, factors) -> list:
    """Rebalance factors so the j-th output takes the j-th smallest column
    in every row.

    The output monomials multiply to the same product, are again diagonal
    monomials, and the j-th lands in the j-th window of the sorted chain.
    """
    factorization = (
        factors
        if isinstance(factors, DiagonalFactorization)
        else DiagonalFactorization.for_chain(shape, chain, factors)
    )
    if len(factorization.selections) != len(chain):
        raise DomainError("factor count does not match chain length")
    table = circle_table(shape, factorization)
    outputs = []
    for j in range(len(chain)):
        cols = tuple(table.rows[i][j] for i in range(shape.rows))
        outputs.append(diagonal_monomial(shape, cols))

    # Unconditional guarantees of the construction.
    product = GridMonomial.unit(shape)
    for g in factorization.monomials(shape):
        product = product * g
    check = GridMonomial.unit(shape)
    for h in outputs:
        check = check * h
    assert check == product
    for window, h in zip(chain.windows, outputs):
        sel = selection_of(h)
        assert sel is not None
        sel.check_against(shape, window)
    return outputs


def factor_into_windows(shape: GridShape, windows, monomial: GridMonomial):
    """Find diagonal monomials, one per window, whose product divides the
    monomial.  Returns their selections, or None."""
    window_list = list(windows)
    memo = {}

    def search(idx: int, remaining: GridMonomial):
        if idx == len(window_list):
            return ()
        key = (idx, remaining.exps)
        if key in memo:
            return memo[key]
        found = None
        for g in enumerate_diagonals(shape, window_list[idx]):
            if g.divides(remaining):
                tail = search(idx + 1, remaining / g)
                if tail is not None:
                    found = (selection_of(g),) + tail
                    break
        memo[key] = found
        return found

    return search(0, monomial)


def verify_product_colons(
    shape: GridShape,
    chain: WindowChain,
    caps: Caps = DEFAULT_CAPS,
    exhaustive: bool = False,
) -> list:
    """Compare brute-force and closed-form colons for every prefix length.

    For u = 0..r-1 the brute colon of (product of all windows, first u
    diagonals of the first window) by diagonal u is computed from generators
    and compared with the closed form.  Returns one entry per u with both
    ideals and the equality verdict.  ``exhaustive`` lifts the generator-count
    cap on the window product.
    """
    if len(chain) < 2:
        raise DomainError("product colon verification needs at least two windows")
    chain.check_against(shape)
    full = window_product_ideal(shape, chain.windows)
    if not exhaustive and len(full.gens) > caps.max_product_gens:
        raise ResourceLimitError(
            f"window product has {len(full.gens)} generators, cap is {caps.max_product_gens}",
            snapshot={"chain": str(chain), "gens": len(full.gens)},
        )
    rest = window_product_ideal(shape, chain.windows[1:])
    diagonals = enumerate_diagonals(shape, chain.windows[0])
    entries = []
    prefix = []
    for u, f in enumerate(diagonals):
        candidates = [g.colon(f) for g in full.gens]
        candidates.extend(p.colon(f) for p in prefix)
        brute = MonomialIdeal.from_generators(shape, candidates)
        closed = rest + closed_form_colon(shape, chain.windows[0], f)
        entries.append({"u": u, "brute": brute, "closed": closed, "equal": brute == closed})
        prefix.append(f)
    return entries
