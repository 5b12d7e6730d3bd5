"""Graded Betti numbers, via simplicial homology or the mapping cone.

The homology oracle reads Betti numbers off reduced homology of the monomial
ideal's squarefree divisor complexes: for each candidate multidegree b (an lcm
of a generator subset) the complex holds the squarefree monomials s with b/s
in the ideal, and beta_{i,b} is the rank of reduced homology in dimension i-1
over the chosen field.  Ranks come from exact Gaussian elimination on sparse
boundary matrices; no floating point, no probabilistic shortcuts.

When a generator order has linear quotients, the mapping cone gives the same
table combinatorially: the generator whose colon has d variables contributes
binomial(d, i) to the i-th Betti number, one degree step up per i.
"""

from __future__ import annotations

import json
from math import comb

from .caps import DEFAULT_CAPS, Caps
from .errors import DomainError, ResourceLimitError
from .fields import make_field
from .ideals import MonomialIdeal
from .monomials import GridMonomial
from .quotients import quotient_chain


class BettiTable:
    """Betti numbers keyed by (homological index i, internal degree j)."""

    __slots__ = ("characteristic", "cells")

    def __init__(self, characteristic: int, entries):
        self.characteristic = characteristic
        cleaned = {key: int(v) for key, v in dict(entries).items() if v}
        self.cells = tuple(sorted((i, j, beta) for (i, j), beta in cleaned.items()))

    def beta(self, i: int, j: int) -> int:
        for ci, cj, beta in self.cells:
            if (ci, cj) == (i, j):
                return beta
        return 0

    def totals(self) -> dict:
        """Total Betti number per homological index."""
        out = {}
        for i, _, beta in self.cells:
            out[i] = out.get(i, 0) + beta
        return out

    @property
    def regularity(self) -> int:
        if not self.cells:
            raise DomainError("empty Betti table has no regularity")
        return max(j - i for i, j, _ in self.cells)

    @property
    def projective_dimension(self) -> int:
        if not self.cells:
            raise DomainError("empty Betti table has no projective dimension")
        return max(i for i, _, _ in self.cells)

    def same_entries(self, other: "BettiTable") -> bool:
        return self.cells == other.cells

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.characteristic == other.characteristic and self.cells == other.cells

    def __hash__(self):
        return hash((self.characteristic, self.cells))

    def to_json_obj(self) -> dict:
        return {
            "char": self.characteristic,
            "rows": [{"i": i, "j": j, "beta": beta} for i, j, beta in self.cells],
            "reg": self.regularity,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __repr__(self):
        body = ", ".join(f"b[{i},{j}]={beta}" for i, j, beta in self.cells)
        return f"BettiTable(char {self.characteristic}: {body})"


class KoszulComplex:
    """Squarefree divisor complex of an ideal at one multidegree.

    Faces are the variable subsets s of the multidegree's support with
    multidegree/s still inside the ideal; they form the union of the full
    simplices on supp(b/g) over generators g dividing b.
    """

    __slots__ = ("multidegree", "vertices", "facets", "_faces")

    def __init__(self, multidegree: GridMonomial, vertices: tuple, facets: tuple):
        self.multidegree = multidegree
        self.vertices = vertices  # (row, col) labels, rank order
        self.facets = facets  # bitmasks over vertices, dominated ones removed
        self._faces = None

    def face_masks(self) -> set:
        if self._faces is None:
            faces = set()
            for facet in self.facets:
                sub = facet
                while True:
                    faces.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & facet
            self._faces = faces
        return self._faces

    def faces(self) -> set:
        """Faces as frozensets of (row, col) labels (includes the empty face)."""
        labeled = set()
        for mask in self.face_masks():
            labeled.add(
                frozenset(
                    self.vertices[idx] for idx in range(len(self.vertices)) if mask >> idx & 1
                )
            )
        return labeled

    def face_counts(self) -> dict:
        """Number of faces per dimension (the empty face has dimension -1)."""
        counts = {}
        for mask in self.face_masks():
            d = bin(mask).count("1") - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def homology_dimensions(self, characteristic: int = 0) -> dict:
        """Reduced homology ranks per dimension over the given field."""
        by_dim = {}
        for mask in self.face_masks():
            by_dim.setdefault(bin(mask).count("1") - 1, []).append(mask)
        for masks in by_dim.values():
            masks.sort()
        return _homology_from_faces(by_dim, characteristic)


def koszul_complex(ideal: MonomialIdeal, multidegree: GridMonomial) -> KoszulComplex:
    if multidegree.shape != ideal.shape:
        raise DomainError("multidegree on wrong grid")
    vertices = multidegree.support()
    index = {v: k for k, v in enumerate(vertices)}
    facets = []
    b = multidegree.exps
    for g in ideal.gens:
        if g.divides(multidegree):
            mask = 0
            for v, k in index.items():
                i, j = v
                if b[(i - 1) * ideal.shape.cols + (j - 1)] > g.exps[(i - 1) * ideal.shape.cols + (j - 1)]:
                    mask |= 1 << k
            facets.append(mask)
    facets = _drop_dominated(facets)
    return KoszulComplex(multidegree, vertices, tuple(facets))


def _drop_dominated(facets) -> list:
    kept = []
    for f in sorted(set(facets), key=lambda m: bin(m).count("1"), reverse=True):
        if not any(f & k == f for k in kept):
            kept.append(f)
    return kept


def _rank_of_columns(columns, field) -> int:
    """Exact rank of a sparse integer matrix given as row->coeff columns."""
    pivots = {}
    rank = 0
    for col in columns:
        work = {row: field.normalize(v) for row, v in col.items()}
        while work:
            row = min(work)
            pivot = pivots.get(row)
            if pivot is None:
                inv = field.invert(work[row])
                pivots[row] = {r: field.mul(inv, v) for r, v in work.items()}
                rank += 1
                break
            c = work.pop(row)
            for r, v in pivot.items():
                if r == row:
                    continue
                nv = field.sub(work.get(r, field.zero), field.mul(c, v))
                if field.is_zero(nv):
                    work.pop(r, None)
                else:
                    work[r] = nv
    return rank


def _boundary_columns(lower_masks, upper_masks):
    """Boundary matrix columns from dimension d faces to dimension d-1."""
    index = {mask: k for k, mask in enumerate(lower_masks)}
    columns = []
    for mask in upper_masks:
        col = {}
        sign = 1
        sub = mask
        while sub:
            low = sub & -sub
            col[index[mask ^ low]] = sign
            sign = -sign
            sub ^= low
        if not col:  # a vertex maps to the empty face (augmentation)
            col[index[0]] = 1
        columns.append(col)
    return columns


def _homology_from_faces(by_dim: dict, characteristic: int) -> dict:
    field = make_field(characteristic)
    if not by_dim:
        return {}
    dims = sorted(by_dim)
    ranks = {}
    for d in dims:
        if d - 1 in by_dim:
            ranks[d] = _rank_of_columns(
                _boundary_columns(by_dim[d - 1], by_dim[d]), field
            )
        else:
            ranks[d] = 0
    homology = {}
    for d in dims:
        h = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            homology[d] = h
    return homology


def _candidate_multidegrees(ideal: MonomialIdeal, caps: Caps) -> list:
    gens = ideal.gens
    r = len(gens)
    lcms = [None] * (1 << r)
    lcms[0] = GridMonomial.unit(ideal.shape)
    seen = {}
    for mask in range(1, 1 << r):
        low = mask & -mask
        base = lcms[mask ^ low]
        g = gens[low.bit_length() - 1]
        value = base.lcm(g) if mask ^ low else g
        lcms[mask] = value
        seen[value.exps] = value
        if len(seen) > caps.max_lcm_candidates:
            raise ResourceLimitError(
                f"more than {caps.max_lcm_candidates} candidate multidegrees",
                snapshot={"generators": r},
            )
    return sorted(seen.values(), key=lambda m: (m.degree, m.exps))


def betti_table(
    ideal: MonomialIdeal, characteristic: int = 0, caps: Caps = DEFAULT_CAPS
) -> BettiTable:
    """Full graded Betti table of a monomial ideal by the homology oracle.

    Candidate multidegrees are the lcms of generator subsets; each contributes
    the reduced homology ranks of its squarefree divisor complex.  A complex
    that is a single full simplex is contractible and skipped (unless it is a
    bare point-free complex, which marks a minimal generator).
    """
    if ideal.is_zero:
        raise DomainError("Betti table of the zero ideal is undefined")
    if len(ideal.gens) > caps.max_oracle_gens:
        raise ResourceLimitError(
            f"homology oracle capped at {caps.max_oracle_gens} generators, "
            f"got {len(ideal.gens)}",
            snapshot={"generators": len(ideal.gens)},
        )
    make_field(characteristic)  # validate up front
    entries = {}
    for b in _candidate_multidegrees(ideal, caps):
        for d, h in _multidegree_homology(ideal, b, characteristic, caps).items():
            key = (d + 1, b.degree)
            entries[key] = entries.get(key, 0) + h
    return BettiTable(characteristic, entries)


def _multidegree_homology(
    ideal: MonomialIdeal, b: GridMonomial, characteristic: int, caps: Caps
) -> dict:
    shape = ideal.shape
    cols = shape.cols
    b_exps = b.exps
    support = [idx for idx, e in enumerate(b_exps) if e]
    facets = []
    for g in ideal.gens:
        if g.divides(b):
            mask = 0
            g_exps = g.exps
            for k, idx in enumerate(support):
                if b_exps[idx] > g_exps[idx]:
                    mask |= 1 << k
            facets.append(mask)
    facets = _drop_dominated(facets)
    if not facets:
        return {}
    if len(facets) == 1:
        # A full simplex: contractible unless it is just the empty face,
        # which happens exactly when b is a minimal generator.
        return {-1: 1} if facets[0] == 0 else {}
    by_dim = {}
    total = 0
    for facet in facets:
        sub = facet
        while True:
            d = bin(sub).count("1") - 1
            bucket = by_dim.setdefault(d, set())
            if sub not in bucket:
                bucket.add(sub)
                total += 1
                if total > caps.max_koszul_faces:
                    raise ResourceLimitError(
                        f"divisor complex at {b} exceeds {caps.max_koszul_faces} faces",
                        snapshot={"multidegree": str(b)},
                    )
            if sub == 0:
                break
            sub = (sub - 1) & facet
    listed = {d: sorted(masks) for d, masks in by_dim.items()}
    return _homology_from_faces(listed, characteristic)


def mapping_cone_betti(ideal: MonomialIdeal) -> BettiTable:
    """Betti table from the linear-quotients mapping cone.

    Requires the canonical generator order to certify linear quotients; the
    u-th generator contributes binomial(d_u, i) in degree deg(f_u) + i, where
    d_u counts the variables generating its colon step.
    """
    chain = quotient_chain(ideal)
    if not chain.certifies_linear_quotients:
        raise DomainError("generator order does not have linear quotients")
    entries = {}
    for f, d in zip(ideal.gens, chain.variable_counts):
        for i in range(d + 1):
            key = (i, f.degree + i)
            entries[key] = entries.get(key, 0) + comb(d, i)
    return BettiTable(0, entries)


def regularity(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> int:
    """Castelnuovo-Mumford regularity of the ideal (not the quotient ring).

    Uses the mapping cone when linear quotients certify, otherwise the
    homology oracle.
    """
    if ideal.is_zero:
        raise DomainError("regularity of the zero ideal is undefined")
    chain = quotient_chain(ideal)
    if chain.certifies_linear_quotients:
        return mapping_cone_betti(ideal).regularity
    return betti_table(ideal, 0, caps).regularity


def has_linear_resolution(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> bool:
    """True when the regularity equals the common generator degree.

    Only defined for ideals generated in a single degree.
    """
    if ideal.is_zero:
        raise DomainError("linear resolution is undefined for the zero ideal")
    degree = ideal.single_generation_degree()
    if degree is None:
        raise DomainError(
            f"ideal generated in mixed degrees {ideal.generator_degrees()}"
        )
    return regularity(ideal, caps) == degree
