"""Verification drivers shared by the command-line front end and the tests.

Each driver recomputes one of the claimed identities two ways (closed
form vs. brute force, or cone count vs. homology oracle) and returns a
plain-dict report that serializes to JSON lines.  Nothing here mutates
its inputs; sweeps yield reports in a fixed enumeration order.
"""

from __future__ import annotations

import random
from math import comb
from typing import Iterator

from .caps import Caps, DEFAULT_CAPS
from .errors import ResourceLimitError
from .groebner import conjecture_check
from .ideals import MonomialIdeal
from .monomials import GridShape
from .quotients import closed_form_colon, quotient_chain, verify_product_colons
from .resolution import betti_table, mapping_cone_betti
from .windows import (
    Window,
    WindowChain,
    diagonal_ideal,
    enumerate_diagonals,
    iter_sorted_chains,
    iter_windows,
    window_product_ideal,
)

# Desk-scale sweep bounds: every window on grids this size gets checked.
SWEEP_MAX_ROWS = 3
SWEEP_MAX_COLS = 8
# Bound on the product of per-window generator counts for sampled chains;
# keeps each brute-force colon run comfortably under the global gen cap.
SAMPLE_GEN_BOUND = 1200


def iter_shapes(max_rows: int, max_cols: int) -> Iterator[GridShape]:
    for rows in range(1, max_rows + 1):
        for cols in range(rows, max_cols + 1):
            yield GridShape(rows, cols)


def single_window_report(shape: GridShape, window: Window) -> dict:
    """Diff the brute-force colon chain of one window ideal against the
    gap-variable closed form, step by step."""
    diagonals = enumerate_diagonals(shape, window)
    chain = quotient_chain(diagonal_ideal(shape, window))
    entries = []
    all_equal = True
    for u, brute in enumerate(chain.steps, start=1):
        closed = closed_form_colon(shape, window, diagonals[u])
        equal = brute == closed
        all_equal = all_equal and equal
        entries.append(
            {"u": u, "brute": str(brute), "closed": str(closed), "equal": equal}
        )
    certificate = chain.certifies_linear_quotients
    return {
        "check": "window-colon",
        "shape": [shape.rows, shape.cols],
        "window": [window.first, window.last],
        "steps": entries,
        "linear_quotients": certificate,
        "ok": all_equal and certificate,
    }


def sweep_single_windows(
    max_rows: int = SWEEP_MAX_ROWS, max_cols: int = SWEEP_MAX_COLS
) -> Iterator[dict]:
    for shape in iter_shapes(max_rows, max_cols):
        for window in iter_windows(shape):
            yield single_window_report(shape, window)


def product_chain_report(
    shape: GridShape,
    chain: WindowChain,
    caps: Caps = DEFAULT_CAPS,
    exhaustive: bool = False,
) -> dict:
    entries = verify_product_colons(shape, chain, caps=caps, exhaustive=exhaustive)
    rendered = [
        {
            "u": entry["u"],
            "brute": str(entry["brute"]),
            "closed": str(entry["closed"]),
            "equal": entry["equal"],
        }
        for entry in entries
    ]
    return {
        "check": "product-colon",
        "shape": [shape.rows, shape.cols],
        "chain": [[w.first, w.last] for w in chain.windows],
        "steps": rendered,
        "ok": all(entry["equal"] for entry in entries),
    }


def _chain_gen_bound(shape: GridShape, chain: WindowChain) -> int:
    bound = 1
    for window in chain.windows:
        bound *= comb(window.width, shape.rows)
    return bound


def sweep_product_chains(
    length: int,
    max_rows: int = SWEEP_MAX_ROWS,
    max_cols: int = SWEEP_MAX_COLS,
    caps: Caps = DEFAULT_CAPS,
) -> Iterator[dict]:
    for shape in iter_shapes(max_rows, max_cols):
        for chain in iter_sorted_chains(shape, length):
            yield product_chain_report(shape, chain, caps=caps)


def sample_product_chains(
    length: int,
    count: int,
    seed: int,
    max_rows: int = SWEEP_MAX_ROWS,
    max_cols: int = SWEEP_MAX_COLS,
    gen_bound: int = SAMPLE_GEN_BOUND,
) -> list[tuple[GridShape, WindowChain]]:
    """Seeded sample of sorted chains whose product stays desk-sized."""
    pool = [
        (shape, chain)
        for shape in iter_shapes(max_rows, max_cols)
        for chain in iter_sorted_chains(shape, length)
        if _chain_gen_bound(shape, chain) <= gen_bound
    ]
    if len(pool) <= count:
        return pool
    picks = sorted(random.Random(seed).sample(range(len(pool)), count))
    return [pool[i] for i in picks]


def theorem_report(
    shape: GridShape,
    chain: WindowChain,
    caps: Caps = DEFAULT_CAPS,
    characteristic: int = 0,
) -> dict:
    """Check the product ideal resolves linearly: regularity from the
    homology oracle must equal (number of windows) * rows, and the cone
    count must agree whenever the colon chain certifies."""
    product = window_product_ideal(shape, chain.windows)
    expected = len(chain.windows) * shape.rows
    report = {
        "check": "linear-resolution",
        "shape": [shape.rows, shape.cols],
        "chain": [[w.first, w.last] for w in chain.windows],
        "generators": len(product.gens),
        "expected_reg": expected,
    }
    table = betti_table(product, characteristic=characteristic, caps=caps)
    report["reg"] = table.regularity
    report["degree"] = product.single_generation_degree()
    report["linear"] = table.regularity == report["degree"] == expected
    colon_chain = quotient_chain(product)
    report["linear_quotients"] = colon_chain.certifies_linear_quotients
    if colon_chain.certifies_linear_quotients:
        cone = mapping_cone_betti(product)
        report["cone_agrees"] = cone.same_entries(table)
    else:
        report["cone_agrees"] = None
    report["ok"] = bool(report["linear"]) and report["cone_agrees"] is not False
    return report


def remarks_report() -> list[dict]:
    """Reproduce the two negative controls: out-of-order window products
    whose colons must differ from the naive closed form."""
    from .replay import replay_colon_mismatch

    records = []
    for name in ("colon_mismatch_3x9.txt", "colon_mismatch_3x8.txt"):
        for record in replay_colon_mismatch(name):
            records.append(
                {
                    "check": "negative-control",
                    "name": record["name"],
                    "ok": record["ok"],
                    "expected": record["expected"],
                    "got": record["got"],
                }
            )
    return records


def conjecture_scan(
    max_rows: int,
    max_cols: int,
    max_factors: int,
    characteristic: int = 32003,
    caps: Caps = DEFAULT_CAPS,
) -> Iterator[dict]:
    """Run the initial-ideal comparison over every sorted chain within
    bounds, in enumeration order.  Resource blowups are recorded per
    instance and the scan moves on."""
    for shape in iter_shapes(max_rows, max_cols):
        for length in range(1, max_factors + 1):
            for chain in iter_sorted_chains(shape, length):
                base = {
                    "shape": [shape.rows, shape.cols],
                    "chain": [[w.first, w.last] for w in chain.windows],
                    "char": characteristic,
                }
                try:
                    yield conjecture_check(
                        shape, chain, characteristic=characteristic, caps=caps
                    )
                except ResourceLimitError as err:
                    base["skipped"] = True
                    base["error"] = str(err)
                    yield base


def lemma2_default_cases() -> list[tuple[GridShape, WindowChain]]:
    """Small fixed instances exercised by `verify --target lemma2` when no
    explicit chain is given."""
    cases = []
    for rows, cols, bounds in (
        (1, 3, ((1, 2), (2, 3))),
        (2, 4, ((1, 3), (2, 4))),
        (2, 5, ((1, 4), (2, 5))),
        (3, 8, ((2, 6), (2, 6))),
        (3, 9, ((1, 5), (3, 7))),
    ):
        shape = GridShape(rows, cols)
        cases.append((shape, WindowChain.of(*bounds)))
    return cases


def theorem_default_cases() -> list[tuple[GridShape, WindowChain]]:
    cases = []
    for rows, cols, bounds in (
        (1, 3, ((1, 2), (2, 3))),
        (2, 4, ((1, 3), (2, 4))),
        (2, 4, ((1, 4),)),
        (3, 6, ((2, 5),)),
        (2, 5, ((1, 3), (3, 5))),
    ):
        shape = GridShape(rows, cols)
        cases.append((shape, WindowChain.of(*bounds)))
    return cases


def verify_reports(
    target: str,
    shape: GridShape | None = None,
    window: Window | None = None,
    chain: WindowChain | None = None,
    caps: Caps = DEFAULT_CAPS,
    characteristic: int = 0,
) -> Iterator[dict]:
    """Reports for one `verify` target.  With an explicit instance the
    target runs on it alone; otherwise a default desk-scale set runs."""
    if target in ("lemma1", "all"):
        if shape is not None and window is not None:
            yield single_window_report(shape, window)
        else:
            yield from sweep_single_windows()
    if target in ("lemma2", "all"):
        if shape is not None and chain is not None:
            yield product_chain_report(shape, chain, caps=caps)
        else:
            for case_shape, case_chain in lemma2_default_cases():
                yield product_chain_report(case_shape, case_chain, caps=caps)
    if target in ("theorem", "all"):
        if shape is not None and chain is not None:
            yield theorem_report(shape, chain, caps=caps, characteristic=characteristic)
        else:
            for case_shape, case_chain in theorem_default_cases():
                yield theorem_report(
                    case_shape, case_chain, caps=caps, characteristic=characteristic
                )
    if target in ("remarks", "all"):
        yield from remarks_report()
