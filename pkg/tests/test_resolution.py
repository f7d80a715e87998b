"""Linear quotients, Betti numbers, and the independent homology oracle."""

import pytest

from matchfields import (
    BettiTable,
    BlockStructure,
    Monomial,
    MonomialIdeal,
    NotLinearQuotientsError,
    betti_diagonal_closed_form,
    betti_diagonal_table,
    betti_from_certificate,
    betti_from_variable_sets,
    betti_oracle,
    colon_by_monomial,
    diagonal_lex_sets,
    linear_quotients_certificate,
    matching_ideal,
    relabeled_ideal,
    s_set_variables,
    sort_generators,
    xvar,
    yvar,
    zvar,
)
from matchfields.errors import TooLargeError


def all_compositions(n):
    for bits in range(1 << (n - 1)):
        parts, last = [], 1
        for i in range(n - 1):
            if bits >> i & 1:
                parts.append(last)
                last = 1
            else:
                last += 1
        parts.append(last)
        yield tuple(parts)


def test_betti_table_container():
    t = BettiTable((4, 3))
    assert list(t) == [4, 3]
    assert len(t) == 2
    assert t[0] == 4 and t[1] == 3 and t[5] == 0
    with pytest.raises(ValueError):
        BettiTable((1, 0))
    with pytest.raises(ValueError):
        BettiTable((-1,))


def test_colon_by_monomial():
    n = 2
    xy = Monomial.of(n, xvar(1), yvar(1))
    xz = Monomial.of(n, xvar(1), zvar(1))
    colon = colon_by_monomial([xy], xz)
    assert set(colon.generators) == {Monomial.of(n, yvar(1))}
    # A generator dividing the divisor colons to the whole ring.
    colon = colon_by_monomial([Monomial.of(n, xvar(1))], xz)
    assert set(colon.generators) == {Monomial.one(n)}


def test_linear_quotients_frozen_example():
    a = BlockStructure((3, 2))
    ordered = [t.monomial(5) for t in sort_generators(a)]
    cert = linear_quotients_certificate(ordered)
    assert cert.is_linear
    assert cert.first_failure is None
    assert [len(s) for s in cert.sets] == [0, 1, 2, 1, 2, 2, 1, 2, 2, 2]
    assert list(betti_from_certificate(cert)) == [10, 15, 6]


def test_certificate_sets_equal_adjacency_variable_sets():
    # The colon variables along the block ordering are exactly the
    # one-coordinate-difference variables of earlier generators.
    for parts in [(3, 2), (2, 2), (4,), (2, 2, 2), (1, 2, 3)]:
        a = BlockStructure(parts)
        n = a.n
        ts = sort_generators(a)
        cert = linear_quotients_certificate([t.monomial(n) for t in ts])
        assert cert.is_linear, parts
        for t, got in zip(ts, cert.sets):
            assert got == s_set_variables(a, t), (parts, t)


def test_linear_quotients_rejects_nonminimal_input():
    n = 1
    x = Monomial.of(n, xvar(1))
    with pytest.raises(ValueError):
        linear_quotients_certificate([x, x * x])


def test_non_linear_ordering_is_reported():
    # x*y, z*w in disjoint variables: the colon is generated in degree 2.
    n = 2
    xy = Monomial.of(n, xvar(1), yvar(1))
    zw = Monomial.of(n, zvar(1), zvar(2))
    cert = linear_quotients_certificate([xy, zw])
    assert not cert.is_linear
    assert cert.first_failure[0] == 1
    assert cert.first_failure[1] == xy
    with pytest.raises(NotLinearQuotientsError):
        betti_from_certificate(cert)


def test_betti_from_variable_sets():
    sets = [frozenset(), frozenset({xvar(1)}), frozenset({xvar(1), yvar(1)})]
    assert list(betti_from_variable_sets(sets)) == [3, 3, 1]
    assert list(betti_from_variable_sets([])) == []


def test_diagonal_closed_form_frozen_tables():
    assert list(betti_diagonal_table(3)) == [1]
    assert list(betti_diagonal_table(4)) == [4, 3]
    assert list(betti_diagonal_table(5)) == [10, 15, 6]
    assert list(betti_diagonal_table(6)) == [20, 45, 36, 10]
    assert list(betti_diagonal_table(7)) == [35, 105, 126, 70, 15]
    assert betti_diagonal_closed_form(6, 0) == 20
    assert betti_diagonal_closed_form(6, 9) == 0


def test_diagonal_closed_form_equals_certificate():
    for n in range(3, 8):
        a = BlockStructure((n,))
        cert = linear_quotients_certificate(
            [t.monomial(n) for t in sort_generators(a)]
        )
        assert list(betti_from_certificate(cert)) == list(betti_diagonal_table(n))


def test_diagonal_lex_sets_match_certificate():
    for n in range(3, 7):
        a = BlockStructure((n,))
        pairs = diagonal_lex_sets(n)
        cert = linear_quotients_certificate(
            [t.monomial(n) for t, _ in pairs]
        )
        assert cert.is_linear
        assert tuple(s for _, s in pairs) == cert.sets


def test_oracle_on_tiny_ideals():
    n = 1
    x = Monomial.of(n, xvar(1))
    y = Monomial.of(n, yvar(1))
    z = Monomial.of(n, zvar(1))
    # two variables: Koszul complex, betti (2, 1)
    ideal = MonomialIdeal(frozenset({x, y}))
    assert list(betti_oracle(ideal)) == [2, 1]
    # triangle x*y, y*z, z*x: betti (3, 2)
    ideal = MonomialIdeal(frozenset({x * y, y * z, z * x}))
    assert list(betti_oracle(ideal)) == [3, 2]
    # x^2, x*y, y^2: betti (3, 2)
    ideal = MonomialIdeal(frozenset({x * x, x * y, y * y}))
    assert list(betti_oracle(ideal)) == [3, 2]
    # complete intersection x^2, y^3
    ideal = MonomialIdeal(frozenset({x.pow(2), y.pow(3)}))
    assert list(betti_oracle(ideal)) == [2, 1]
    # whole ring
    assert list(betti_oracle(MonomialIdeal(frozenset({Monomial.one(n)})))) == [1]


def test_oracle_matches_certificate_all_structures_through_n5():
    for n in range(3, 6):
        for parts in all_compositions(n):
            a = BlockStructure(parts)
            ideal = matching_ideal(a)
            cert = linear_quotients_certificate(
                [t.monomial(n) for t in sort_generators(a)]
            )
            assert list(betti_oracle(ideal)) == list(betti_from_certificate(cert)), parts


def test_oracle_all_structures_at_n6_give_one_betti_table():
    for parts in all_compositions(6):
        got = list(betti_oracle(matching_ideal(BlockStructure(parts))))
        assert got == [20, 45, 36, 10], (parts, got)


def test_oracle_on_relabeled_ideal_matches():
    for parts in [(3, 2), (5,), (2, 2), (1, 1, 2)]:
        a = BlockStructure(parts)
        got = betti_oracle(relabeled_ideal(a))
        want = betti_oracle(matching_ideal(a))
        assert list(got) == list(want), parts


def test_oracle_generator_cap():
    a = BlockStructure((7,))
    with pytest.raises(TooLargeError):
        betti_oracle(matching_ideal(a))


def test_oracle_order_independence():
    # The oracle consumes an unordered ideal; shuffling generators of the
    # input cannot matter because MonomialIdeal stores a frozenset.
    a = BlockStructure((2, 2))
    gens = list(matching_ideal(a).generators)
    i1 = MonomialIdeal(frozenset(gens))
    i2 = MonomialIdeal(frozenset(reversed(gens)))
    assert list(betti_oracle(i1)) == list(betti_oracle(i2))
