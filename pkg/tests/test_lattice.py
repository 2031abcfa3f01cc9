import pytest
from hypothesis import given, settings, strategies as st

from matchlat.caps import SizeCaps
from matchlat.errors import (
    ChainNotSaturated,
    NotALattice,
    NotComplementary,
    SizeCapExceeded,
)
from matchlat.lattice import (
    FinitePoset,
    central_elements,
    chain_poset,
    complements,
    direct_product,
    disjoint_union,
    grid_poset,
    grid_sublattice,
    irreducible_decomposition,
    is_distributive,
    join_irreducibles,
    lattice_from_poset,
    lattice_isomorphic,
    order_ideal_lattice,
    poset_from_relation,
    poset_isomorphic,
    rank_check,
)
from matchlat.oracles import distributive_by_birkhoff, ideals_bruteforce


def chain(k):
    return lattice_from_poset(chain_poset(k))


def l_2x3():
    return direct_product(chain(2), chain(3))


class TestLatticeFromPoset:
    def test_two_chain_is_boolean(self):
        L = chain(2)
        assert L.meet[0, 1] == L.bottom
        assert L.join[0, 1] == L.top

    def test_2x3_has_six_elements(self):
        L = l_2x3()
        assert L.n == 6
        assert rank_check(L)[L.top] == 3

    def test_two_incomparable_tops_not_a_lattice(self):
        P = FinitePoset(("a", "b", "c"), ((0, 1), (0, 2)))
        with pytest.raises(NotALattice):
            lattice_from_poset(P)


class TestDistributivity:
    def test_m3_diamond_fails_with_witness(self):
        # bottom, three incomparable middles, top
        P = FinitePoset(
            tuple("0abc1"),
            ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)),
        )
        L = lattice_from_poset(P)
        ok, witness = is_distributive(L)
        assert not ok
        assert witness is not None

    def test_ideal_lattices_distributive(self):
        for P in (grid_poset(2, 2), grid_poset(2, 3), chain_poset(5)):
            J, _ = order_ideal_lattice(P)
            ok, _ = is_distributive(J)
            assert ok
            assert distributive_by_birkhoff(J)


class TestRankAndComplements:
    def test_chain_ranks(self):
        L = chain(4)
        assert list(rank_check(L)) == [0, 1, 2, 3]

    def test_2x3_complement_pair(self):
        L = l_2x3()
        comp = complements(L)
        pairs = {
            (L.labels[x], L.labels[y])
            for x, y in comp.items()
            if y is not None and x not in (L.bottom, L.top)
        }
        # the two central elements are complementary
        assert len(pairs) == 2
        rank = rank_check(L)
        for x, y in comp.items():
            if y is not None:
                assert rank[x] + rank[y] == rank[L.top]

    def test_chain_interior_has_no_complement(self):
        L = chain(4)
        comp = complements(L)
        assert comp[L.bottom] == L.top
        for x, y in comp.items():
            if x not in (L.bottom, L.top):
                assert y is None


class TestGridSublattice:
    def test_recovers_2x3(self):
        L = l_2x3()
        comp = complements(L)
        x = next(
            x for x, y in comp.items()
            if y is not None and x not in (L.bottom, L.top)
        )
        y = comp[x]
        cx = _a_chain(L, x)
        cy = _a_chain(L, y)
        grid = grid_sublattice(L, x, y, cx, cy)
        flat = {z for row in grid.elements for z in row}
        assert flat == set(range(L.n))

    def test_rejects_bottom(self):
        L = l_2x3()
        with pytest.raises((NotComplementary, ChainNotSaturated)):
            grid_sublattice(L, L.bottom, L.top, [L.bottom], _a_chain(L, L.top))

    def test_2x2_central_pair(self):
        L = direct_product(chain(2), chain(2))
        comp = complements(L)
        x = next(
            x for x, y in comp.items()
            if y is not None and x not in (L.bottom, L.top)
        )
        grid = grid_sublattice(L, x, comp[x], _a_chain(L, x), _a_chain(L, comp[x]))
        assert len(grid.elements) == 2 and len(grid.elements[0]) == 2


def _a_chain(L, x):
    chain = [x]
    while chain[-1] != L.bottom:
        chain.append(L.poset.down_covers[chain[-1]][0])
    return list(reversed(chain))


class TestJoinIrreducibles:
    def test_chain(self):
        P, _ = join_irreducibles(chain(4))
        assert P.n == 3
        assert len(P.covers) == 2

    def test_j_2x2(self):
        J, _ = order_ideal_lattice(grid_poset(2, 2))
        P, _ = join_irreducibles(J)
        assert poset_isomorphic(P, grid_poset(2, 2)) is not None


class TestOrderIdealLattice:
    def test_empty_poset(self):
        P = FinitePoset((), ())
        J, masks = order_ideal_lattice(P)
        assert J.n == 1 and masks == (0,)

    def test_2x2_grid_six_ideals(self):
        J, _ = order_ideal_lattice(grid_poset(2, 2))
        assert J.n == 6

    def test_r2_five_ideals(self):
        # one bottom below two incomparable tops
        P = FinitePoset(((1, 1), (1, 2), (2, 1)), ((0, 1), (0, 2)))
        J, _ = order_ideal_lattice(P)
        assert J.n == 5

    def test_counts_against_binomials(self):
        from math import comb

        for m in range(1, 5):
            for n in range(1, 5):
                J, _ = order_ideal_lattice(grid_poset(m, n))
                assert J.n == comb(m + n, m)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            order_ideal_lattice(grid_poset(3, 3), caps=SizeCaps(max_matchings=5))

    def test_subset_oracle(self):
        for P in (grid_poset(2, 3), chain_poset(6), grid_poset(3, 3)):
            _, masks = order_ideal_lattice(P)
            assert set(masks) == ideals_bruteforce(P)


class TestDecomposition:
    def test_2x3_factors(self):
        dec = irreducible_decomposition(l_2x3())
        assert sorted(F.n for F in dec.factors) == [2, 3]

    def test_trivial_lattice(self):
        dec = irreducible_decomposition(chain(1))
        assert dec.factors == ()

    def test_j_2x2_irreducible(self):
        J, _ = order_ideal_lattice(grid_poset(2, 2))
        dec = irreducible_decomposition(J)
        assert len(dec.factors) == 1
        assert central_elements(J) == ()

    def test_central_elements_of_2x3(self):
        L = l_2x3()
        cents = central_elements(L)
        assert len(cents) == 2
        comp = complements(L)
        assert comp[cents[0]] == cents[1]

    def test_chain_has_no_central_elements(self):
        assert central_elements(chain(5)) == ()

    def test_2x3_factors_are_chains(self):
        dec = irreducible_decomposition(l_2x3())
        for F in dec.factors:
            assert len(F.poset.covers) == F.n - 1

    def test_irreducibility_cross_checks(self):
        # irreducible iff connected irreducibles iff no centrals iff only
        # extremes complemented; check on one product and one irreducible
        for L, expect_irreducible in ((l_2x3(), False),
                                      (order_ideal_lattice(grid_poset(2, 2))[0], True)):
            P, _ = join_irreducibles(L)
            connected = len(P.components) == 1
            no_centrals = central_elements(L) == ()
            comp = complements(L)
            only_extremes = all(
                y is None
                for x, y in comp.items()
                if x not in (L.bottom, L.top)
            )
            assert connected == expect_irreducible
            assert no_centrals == expect_irreducible
            assert only_extremes == expect_irreducible

    def test_complemented_count_is_power_of_factors(self):
        # complemented elements form a Boolean algebra over the factors
        for L in (
            l_2x3(),
            direct_product(l_2x3(), chain(2)),
            order_ideal_lattice(grid_poset(2, 2))[0],
        ):
            dec = irreducible_decomposition(L)
            n_complemented = sum(
                1 for y in complements(L).values() if y is not None
            )
            assert n_complemented == 2 ** len(dec.factors)


class TestIsomorphism:
    def test_2x3_vs_3x2(self):
        assert lattice_isomorphic(
            l_2x3(), direct_product(chain(3), chain(2))
        ).isomorphic

    def test_4chain_vs_2x2(self):
        res = lattice_isomorphic(chain(4), direct_product(chain(2), chain(2)))
        assert not res.isomorphic
        assert res.refusal

    def test_birkhoff_round_trip(self):
        for L in (l_2x3(), chain(5), order_ideal_lattice(grid_poset(2, 2))[0]):
            P, _ = join_irreducibles(L)
            J, _ = order_ideal_lattice(P)
            res = lattice_isomorphic(L, J)
            assert res.isomorphic
            # the mapping preserves meet and join as well
            m = res.mapping
            for x in range(L.n):
                for y in range(L.n):
                    assert m[L.meet[x, y]] == J.meet[m[x], m[y]]
                    assert m[L.join[x, y]] == J.join[m[x], m[y]]


class TestDirectProduct:
    def test_identity(self):
        L = l_2x3()
        P = direct_product(L, chain(1))
        assert lattice_isomorphic(L, P).isomorphic

    def test_ideals_of_disjoint_union(self):
        P1, P2 = grid_poset(2, 2), chain_poset(3)
        J1, _ = order_ideal_lattice(P1)
        J2, _ = order_ideal_lattice(P2)
        J12, _ = order_ideal_lattice(disjoint_union(P1, P2))
        assert lattice_isomorphic(direct_product(J1, J2), J12).isomorphic


@st.composite
def small_posets(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                pairs.append((i, j))
    return poset_from_relation(tuple(range(n)), pairs)


class TestPosetProperties:
    @given(small_posets())
    @settings(max_examples=40, deadline=None)
    def test_ideal_lattice_is_distributive(self, P):
        J, masks = order_ideal_lattice(P)
        assert is_distributive(J)[0]
        assert set(masks) == ideals_bruteforce(P)

    @given(small_posets())
    @settings(max_examples=40, deadline=None)
    def test_birkhoff_round_trip_random(self, P):
        J, _ = order_ideal_lattice(P)
        Irr, _ = join_irreducibles(J)
        # the join-irreducible ideals are the principal ones, so Irr = P
        assert poset_isomorphic(Irr, P) is not None
