"""Division, Buchberger checking, and the degeneration theorem verifier.

The main entry point is verify_theorem_main: for a block structure it checks,
by exact computation, that (1) every 3x3 minor has a unique maximum-weight
term and that term is the matching-field generator, (2) every S-pair of the
minors reduces to zero, and (3) the set of leading monomials equals the
matching ideal's generating set.  The three checks are reported separately.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from threading import Lock
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .algebra import (
    Monomial,
    Polynomial,
    VariableId,
    WeightOrder,
    leading_monomial,
    leading_term,
    minor_expand,
)
from .errors import BudgetExceededError, TooLargeError, ZeroPolynomialError
from .linalg import homogeneous_feasible
from .matching import BlockStructure, generator, matching_ideal, weight_matrix


class _StepBudget:
    __slots__ = ("remaining", "_lock")

    def __init__(self, limit: Optional[int]):
        self.remaining = limit
        self._lock = Lock()

    def spend(self) -> None:
        if self.remaining is None:
            return
        with self._lock:
            self.remaining -= 1
            if self.remaining < 0:
                raise BudgetExceededError("division step budget exhausted")


def s_polynomial(f: Polynomial, g: Polynomial, order: WeightOrder) -> Polynomial:
    """S-polynomial (lcm/lt(f)) * f - (lcm/lt(g)) * g with exact coefficients."""
    cf, mf = leading_term(order, f)
    cg, mg = leading_term(order, g)
    l = mf.lcm(mg)
    return f.term_mul(1 / cf, l.exact_div(mf)) - g.term_mul(1 / cg, l.exact_div(mg))


def reduce(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: WeightOrder,
    budget: Optional[int] = None,
) -> Polynomial:
    """Full normal form of f modulo the basis.

    Repeatedly cancels the greatest reducible term; terms reducible by no
    basis leading monomial move to the remainder.  Terminates because the
    order is a well-order; budget (number of cancellation steps) guards
    pathological custom inputs.
    """
    return _reduce(f, _prepare_basis(basis, order), order, _StepBudget(budget))


def _prepare_basis(
    basis: Sequence[Polynomial], order: WeightOrder
) -> list[tuple[Fraction, Monomial, Polynomial]]:
    prepared = []
    for g in basis:
        if g.is_zero:
            raise ZeroPolynomialError("basis contains the zero polynomial")
        c, m = leading_term(order, g)
        prepared.append((c, m, g))
    return prepared


def _reduce(
    f: Polynomial,
    prepared: list[tuple[Fraction, Monomial, Polynomial]],
    order: WeightOrder,
    budget: _StepBudget,
) -> Polynomial:
    key = order.key
    work = {m: c for c, m in f.terms()}
    remainder: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for cg, mg, g in prepared:
            if mg.divides(m):
                budget.spend()
                factor = c / cg
                cof = m.exact_div(mg)
                for cgt, mgt in g.terms():
                    if mgt is mg or mgt == mg:
                        continue
                    mm = mgt * cof
                    nv = work.get(mm, Fraction(0)) - factor * cgt
                    if nv:
                        work[mm] = nv
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return Polynomial(f.n, remainder)


class GroebnerCheck(NamedTuple):
    """Outcome of a Buchberger pass over one basis."""

    ok: bool
    s_pairs_total: int
    s_pairs_reduced_to_zero: int
    witness: Optional[tuple[int, int, Polynomial]]


def is_groebner(
    basis: Sequence[Polynomial],
    order: WeightOrder,
    use_coprime_criterion: bool = True,
    budget: Optional[int] = None,
    threads: int = 1,
) -> GroebnerCheck:
    """Buchberger's criterion: do all S-pairs reduce to zero?

    Pairs are processed in the normal strategy (by lcm degree, then by the
    order on lcms).  With use_coprime_criterion, pairs with coprime leading
    monomials are counted as reduced without running the division (the
    product criterion); disable it to force every reduction.  A blown budget
    raises BudgetExceededError rather than returning False.
    """
    prepared = _prepare_basis(basis, order)
    shared = _StepBudget(budget)
    pairs = []
    for i, j in combinations(range(len(basis)), 2):
        l = prepared[i][1].lcm(prepared[j][1])
        pairs.append((l.degree, order.key(l), i, j))
    pairs.sort()

    todo = []
    reduced = 0
    for _, _, i, j in pairs:
        if use_coprime_criterion and prepared[i][1].coprime(prepared[j][1]):
            reduced += 1
        else:
            todo.append((i, j))

    def run(pair: tuple[int, int]) -> tuple[int, int, Polynomial]:
        i, j = pair
        s = s_polynomial(basis[i], basis[j], order)
        return i, j, _reduce(s, prepared, order, shared)

    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, todo))
    else:
        results = [run(p) for p in todo]

    witness = None
    for i, j, residual in results:
        if residual.is_zero:
            reduced += 1
        elif witness is None:
            witness = (i, j, residual)
    return GroebnerCheck(witness is None, len(pairs), reduced, witness)


@dataclass(frozen=True)
class GroebnerReport:
    """Verdict of the degeneration check for one (block structure, w0)."""

    per_minor_initial_ok: bool
    s_pairs_total: int
    s_pairs_reduced_to_zero: int
    initial_ideal_equals_matching_ideal: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.per_minor_initial_ok
            and self.s_pairs_total == self.s_pairs_reduced_to_zero
            and self.initial_ideal_equals_matching_ideal
        )


def verify_theorem_main(
    a: BlockStructure,
    w0: int = 1,
    threads: int = 1,
    use_coprime_criterion: bool = True,
    budget: Optional[int] = None,
) -> GroebnerReport:
    """Machine-check the degeneration of the maximal-minor ideal.

    The per-minor check uses weights alone (no tie-break may be consulted):
    the maximum-weight term of each minor must be unique and equal to the
    matching-field generator.  The Buchberger pass then runs under the full
    order, and finally the leading monomials are compared with the matching
    ideal as sets.
    """
    n = a.n
    ideal = matching_ideal(a)  # raises TooSmallError when n < 3
    order = weight_matrix(a, w0)

    failures: list[str] = []
    per_minor = True
    minors: list[Polynomial] = []
    for subset in combinations(range(1, n + 1), 3):
        f = minor_expand(n, subset)
        minors.append(f)
        expected = generator(a, subset).monomial(n)
        weighted = [(order.weight(m), m) for _, m in f.terms()]
        top = max(w for w, _ in weighted)
        argmax = [m for w, m in weighted if w == top]
        if len(argmax) != 1:
            per_minor = False
            failures.append(
                f"minor {subset}: maximum weight {top} attained by "
                f"{len(argmax)} terms: {sorted(map(repr, argmax))}"
            )
        elif argmax[0] != expected:
            per_minor = False
            failures.append(
                f"minor {subset}: maximum-weight term {argmax[0]!r} "
                f"is not the matching-field generator {expected!r}"
            )

    check = is_groebner(
        minors,
        order,
        use_coprime_criterion=use_coprime_criterion,
        budget=budget,
        threads=threads,
    )
    if check.witness is not None:
        i, j, residual = check.witness
        failures.append(
            f"S-pair of minors #{i} and #{j} leaves the nonzero residual {residual!r}"
        )

    leads = {leading_monomial(order, f) for f in minors}
    leads_match = leads == set(ideal.generators)
    if not leads_match:
        failures.append("leading monomials of the minors differ from the ideal")
    equals = per_minor and check.ok and leads_match

    return GroebnerReport(
        per_minor_initial_ok=per_minor,
        s_pairs_total=check.s_pairs_total,
        s_pairs_reduced_to_zero=check.s_pairs_reduced_to_zero,
        initial_ideal_equals_matching_ideal=equals,
        failures=tuple(failures),
    )


def weight_initial_form(w: Mapping[VariableId, int], f: Polynomial) -> Polynomial:
    """Subpolynomial of the terms whose w-weight is maximal.

    Variables missing from w count as weight 0, so the zero weight vector
    returns f itself.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no initial form")
    weighted = [
        (sum(w.get(v, 0) * e for v, e in m.items()), c, m) for c, m in f.terms()
    ]
    top = max(wt for wt, _, _ in weighted)
    return Polynomial(f.n, {m: c for wt, c, m in weighted if wt == top})


def attainable_initial_supports(
    f: Polynomial, max_terms: int = 12
) -> set[frozenset[Monomial]]:
    """All term subsets of f realizable as a maximum-weight set.

    A subset S is attainable when some rational weight vector makes the
    terms of S tie strictly above every other term.  Feasibility of each
    candidate is decided exactly (Fourier-Motzkin).
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no initial supports")
    monos = [m for _, m in f.terms()]
    m_count = len(monos)
    if m_count > max_terms:
        raise TooLargeError(f"{m_count} terms exceeds the limit of {max_terms}")
    variables = sorted({v for m in monos for v in m.variables()})
    vpos = {v: i for i, v in enumerate(variables)}
    dim = len(variables)
    vecs = []
    for m in monos:
        row = [0] * dim
        for v, e in m.items():
            row[vpos[v]] = e
        vecs.append(tuple(row))

    out: set[frozenset[Monomial]] = set()
    for mask in range(1, 1 << m_count):
        members = [i for i in range(m_count) if mask >> i & 1]
        i0 = members[0]
        eqs = [
            tuple(a - b for a, b in zip(vecs[i], vecs[i0])) for i in members[1:]
        ]
        strict = [
            tuple(a - b for a, b in zip(vecs[j], vecs[i0]))
            for j in range(m_count)
            if not mask >> j & 1
        ]
        if homogeneous_feasible(eqs, strict):
            out.add(frozenset(monos[i] for i in members))
    return out
