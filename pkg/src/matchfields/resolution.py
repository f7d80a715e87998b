"""Minimal free resolution invariants of monomial ideals.

Two independent routes to Betti numbers live here and deliberately share no
code.  The certificate route checks the linear-quotient property along a
given generator ordering and reads the Betti numbers off the colon-set sizes
with a binomial-coefficient formula.  The oracle route computes multigraded
Betti numbers directly as ranks of reduced simplicial homology over exact
rationals, one lcm-lattice element at a time, and knows nothing about
quotient orderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .algebra import Monomial, VariableId, xvar, yvar, zvar
from .errors import NotLinearQuotientsError, TooLargeError
from .linalg import rational_rank
from .matching import GeneratorTriple, MonomialIdeal


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers (beta_0, beta_1, ...) of a monomial ideal.

    Convention: these are Betti numbers of the ideal as a module, so beta_0
    is the number of minimal generators.  Trailing zero entries are trimmed.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("Betti numbers are nonnegative")
        if vals and vals[-1] == 0:
            raise ValueError("Betti table must be trimmed of trailing zeros")
        object.__setattr__(self, "values", vals)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i] if i < len(self.values) else 0

    def __repr__(self) -> str:
        return f"BettiTable{self.values}"


def colon_by_monomial(prefix: Iterable[Monomial], m: Monomial) -> MonomialIdeal:
    """The colon ideal <prefix> : m, minimally generated.

    Generated by p / gcd(p, m) over the prefix members; minimalization drops
    redundant quotients.
    """
    quotients = [p.exact_div(p.gcd(m)) for p in prefix]
    return MonomialIdeal.from_monomials(quotients)


@dataclass(frozen=True)
class QuotientCertificate:
    """Linear-quotient certificate for an ordered generating sequence.

    sets[j] collects the variables generating <m_1..m_j> : m_{j+1}; when some
    colon needs a generator of degree >= 2 the certificate is not linear and
    first_failure records the position and the offending colon generator.
    """

    ordered: tuple[Monomial, ...]
    sets: tuple[frozenset[VariableId], ...]
    is_linear: bool
    first_failure: Optional[tuple[int, Monomial]]


def linear_quotients_certificate(ordered: Sequence[Monomial]) -> QuotientCertificate:
    """Check the linear-quotient property along the given ordering."""
    gens = tuple(ordered)
    for g in gens:
        for h in gens:
            if g is not h and g.divides(h):
                raise ValueError(f"{g} divides {h}: not a minimal generating set")
    sets: list[frozenset[VariableId]] = []
    for j, m in enumerate(gens):
        colon = colon_by_monomial(gens[:j], m)
        vs: list[VariableId] = []
        for q in colon.sorted_generators():
            if q.degree != 1:
                return QuotientCertificate(
                    ordered=gens,
                    sets=tuple(sets),
                    is_linear=False,
                    first_failure=(j, q),
                )
            vs.append(q.variables()[0])
        sets.append(frozenset(vs))
    return QuotientCertificate(
        ordered=gens, sets=tuple(sets), is_linear=True, first_failure=None
    )


def betti_from_variable_sets(sets: Sequence[frozenset[VariableId]]) -> BettiTable:
    """Betti numbers from colon variable sets: beta_l = sum_j C(|sets[j]|, l)."""
    if not sets:
        return BettiTable(())
    top = max(len(s) for s in sets)
    values = tuple(sum(comb(len(s), l) for s in sets) for l in range(top + 1))
    return BettiTable(values)


def betti_from_certificate(cert: QuotientCertificate) -> BettiTable:
    """Betti numbers of an ideal with linear quotients."""
    if not cert.is_linear:
        raise NotLinearQuotientsError(
            f"certificate fails at position {cert.first_failure[0]}: "
            f"colon generator {cert.first_failure[1]!r}"
        )
    return betti_from_variable_sets(cert.sets)


def betti_diagonal_closed_form(n: int, ell: int) -> int:
    """Closed form for the one-block (diagonal) ideal on n columns."""
    if n < 3:
        raise ValueError("need n >= 3")
    return sum(comb(k - 1, 2) * comb(k - 3, ell) for k in range(3, n + 1))


def betti_diagonal_table(n: int) -> BettiTable:
    return BettiTable(
        tuple(betti_diagonal_closed_form(n, l) for l in range(n - 2))
    )


def diagonal_lex_sets(n: int) -> list[tuple[GeneratorTriple, frozenset[VariableId]]]:
    """Colon variable sets of the diagonal ideal under the lex generator order.

    For the generator x_i y_j z_k the set is {x_1..x_{i-1}} u {y_{i+1}..y_{j-1}}
    u {z_{j+1}..z_{k-1}}, of size k - 3.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    out = []
    for i, j, k in combinations(range(1, n + 1), 3):
        vs = (
            [xvar(t) for t in range(1, i)]
            + [yvar(t) for t in range(i + 1, j)]
            + [zvar(t) for t in range(j + 1, k)]
        )
        out.append((GeneratorTriple(i, j, k), frozenset(vs)))
    return out


# ---------------------------------------------------------------------------
# Independent oracle: multigraded Betti numbers via simplicial homology.
# ---------------------------------------------------------------------------


def betti_oracle(ideal: MonomialIdeal, max_generators: int = 25) -> BettiTable:
    """Betti numbers by reduced homology over the lcm lattice.

    For each lattice element b, the generators dividing b span a simplex;
    the subcomplex of faces whose lcm divides b strictly is homotopy
    equivalent to the upper Koszul complex at b, and its reduced homology
    ranks (computed over exact rationals) are the multigraded Betti numbers.
    Strong collapses (deleting a vertex whose maximal simplices all contain
    some other vertex) shrink each complex before any matrix work; they are
    homotopy equivalences, so the ranks are unchanged.
    """
    gens = ideal.sorted_generators()
    k = len(gens)
    if k == 0:
        return BettiTable(())
    if k > max_generators:
        raise TooLargeError(f"{k} generators exceeds the oracle limit {max_generators}")

    variables = sorted({v for g in gens for v in g.variables()})
    vpos = {v: i for i, v in enumerate(variables)}
    dim = len(variables)
    vecs = []
    for g in gens:
        row = [0] * dim
        for v, e in g.items():
            row[vpos[v]] = e
        vecs.append(tuple(row))

    betti: dict[int, int] = {}
    for b in _lcm_lattice(vecs):
        dividing = [
            j for j in range(k) if all(vecs[j][t] <= b[t] for t in range(dim))
        ]
        masks = []
        for t in range(dim):
            if not b[t]:
                continue
            mask = 0
            for pos, j in enumerate(dividing):
                if vecs[j][t] < b[t]:
                    mask |= 1 << pos
            masks.append(mask)
        for d, h in _union_homology(masks).items():
            betti[d + 1] = betti.get(d + 1, 0) + h

    top = max(betti)
    return BettiTable(tuple(betti.get(i, 0) for i in range(top + 1)))


def _lcm_lattice(vecs: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All componentwise maxima of nonempty subsets of the given vectors."""
    gens = list(vecs)
    seen = set(gens)
    frontier = gens
    while frontier:
        new = []
        for b in frontier:
            for g in gens:
                l = tuple(map(max, b, g))
                if l not in seen:
                    seen.add(l)
                    new.append(l)
        frontier = new
    return seen


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~big == 0 for big in kept):
            kept.append(m)
    return kept


def _union_homology(masks: list[int]) -> dict[int, int]:
    """Reduced rational homology ranks of a union of full simplices.

    Input: one vertex bitmask per simplex (the empty face is always present).
    Output: {dimension: rank} with zero ranks omitted; dimension -1 appears
    exactly when the complex is the empty face alone.
    """
    masks = _maximal_masks(masks)
    while True:
        if not masks:
            # No variables at all: only the degree-zero generator 1 does this.
            return {-1: 1}
        if len(masks) == 1:
            return {} if masks[0] else {-1: 1}
        common = masks[0]
        for m in masks[1:]:
            common &= m
        if common:
            return {}
        membership: dict[int, int] = {}
        for idx, m in enumerate(masks):
            mm = m
            while mm:
                bit = mm & -mm
                membership[bit] = membership.get(bit, 0) | (1 << idx)
                mm ^= bit
        doomed = 0
        items = list(membership.items())
        for v, sv in items:
            for u, su in items:
                if u != v and sv & ~su == 0:
                    doomed = v
                    break
            if doomed:
                break
        if not doomed:
            break
        masks = _maximal_masks(m & ~doomed for m in masks)

    faces: set[int] = set()
    for m in masks:
        s = m
        while True:
            faces.add(s)
            if not s:
                break
            s = (s - 1) & m
    if len(faces) > 200_000:
        raise TooLargeError("collapsed complex still too large for exact homology")

    by_count: dict[int, list[int]] = {}
    for f in faces:
        by_count.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_count)
    index = {
        c: {f: i for i, f in enumerate(sorted(fs))} for c, fs in by_count.items()
    }
    ranks: dict[int, int] = {}
    for c in range(1, top + 1):
        lower = index[c - 1]
        rows = []
        for f in by_count[c]:
            row: dict[int, Fraction] = {}
            mm = f
            i = 0
            while mm:
                bit = mm & -mm
                row[lower[f ^ bit]] = Fraction(1) if i % 2 == 0 else Fraction(-1)
                mm ^= bit
                i += 1
            rows.append(row)
        ranks[c] = rational_rank(rows)

    out: dict[int, int] = {}
    for c in range(top + 1):
        h = len(by_count.get(c, ())) - ranks.get(c, 0) - ranks.get(c + 1, 0)
        if h:
            out[c - 1] = h
    return out
