import pytest

from kms.enumeration import connected_graphs
from kms.errors import BudgetExceededError, InvalidQueryError, ParityError
from kms.graphs import (
    complete_bipartite,
    complete_graph,
    component_stats,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    join,
    path_graph,
    split_star,
)
from kms.matching import (
    Property,
    PropertyQuery,
    decide_property,
    deficiency,
    direct_property_oracle,
    direct_search,
    k_barriers,
)

from conftest import random_connected_graph


def pendant_clique(n):
    return join(complete_graph(1), disjoint_union(complete_graph(n - 2), empty_graph(1)))


def test_deficiency_examples():
    rep = deficiency(complete_graph(4), 3)
    assert rep.value == 0
    assert frozenset() in rep.barriers

    rep = deficiency(complete_bipartite(1, 3), 3)
    assert rep.value == 6
    assert rep.barriers == (frozenset({0}),)
    assert rep.barrier_stats == ((3, 0, 1),)


def test_multiple_barriers_sorted():
    rep = deficiency(path_graph(3), 1)
    assert rep.value == 1
    assert rep.barriers == (frozenset(), frozenset({1}))
    assert rep.barrier_stats[0] == (0, 1, 0)
    assert rep.barrier_stats[1] == (2, 0, 1)


@pytest.mark.parametrize("n,k", [(6, 3), (8, 3), (8, 5)])
def test_below_half_star_is_deficient(n, k):
    g = split_star(n, n // 2 - 1)
    clique = set(range(n // 2 - 1))
    stats = component_stats(delete_vertices(g, clique))
    value_at_clique = stats.odd_nontrivial + k * stats.isolated - k * len(clique)
    assert stats.odd_nontrivial + k * stats.isolated == k * (n // 2 + 1)
    assert value_at_clique >= 2
    assert deficiency(g, k).value >= 2


@pytest.mark.parametrize("n", [5, 7])
def test_pendant_clique_apex_barrier(n):
    rep = deficiency(pendant_clique(n), 3)
    assert rep.value == 1
    assert frozenset({0}) in rep.barriers  # the apex: 1 + 3*1 - 3*1 = 1


def test_deficiency_order_cap():
    from kms.errors import OrderCapError

    with pytest.raises(OrderCapError):
        deficiency(empty_graph(21), 1)


def test_deficiency_parity_invariants(rng):
    for _ in range(60):
        g = random_connected_graph(rng, int(rng.integers(1, 8)), 0.4)
        for k in range(1, 6):
            val = deficiency(g, k).value
            assert val >= 0
            if k % 2 == 1:
                assert val % 2 == g.n % 2
            else:
                assert val % 2 == 0


def test_barriers_attain_value(rng):
    for _ in range(40):
        g = random_connected_graph(rng, int(rng.integers(2, 8)), 0.4)
        for k in (1, 2, 3):
            rep = deficiency(g, k)
            odd_weight = k % 2
            for iso, oddnt, size in rep.barrier_stats:
                assert odd_weight * oddnt + k * iso - k * size == rep.value


def test_unique_empty_barrier_means_critical():
    # K_4 is bicritical for k=3: the empty set is its unique 3-barrier
    assert k_barriers(complete_graph(4), 3) == (frozenset(),)
    assert decide_property(
        complete_graph(4), PropertyQuery(Property.BICRITICAL, 3)
    ).holds


def test_decide_perfect_matching():
    for n in (4, 6, 8):
        for k in (1, 3, 5):
            assert decide_property(
                cycle_graph(n), PropertyQuery(Property.PERFECT_K_MATCHING, k)
            ).holds
    for n, k in [(6, 3), (8, 3)]:
        verdict = decide_property(
            split_star(n, n // 2 - 1), PropertyQuery(Property.PERFECT_K_MATCHING, k)
        )
        assert not verdict.holds
        assert verdict.witness is not None


def test_decide_d_critical():
    assert decide_property(
        complete_graph(5), PropertyQuery(Property.D_CRITICAL, 3, 1)
    ).holds
    with pytest.raises(InvalidQueryError):
        decide_property(complete_graph(5), PropertyQuery(Property.D_CRITICAL, 3, 3))
    with pytest.raises(ParityError):
        decide_property(complete_graph(4), PropertyQuery(Property.D_CRITICAL, 3, 1))


def test_parity_hard_errors():
    with pytest.raises(ParityError):
        decide_property(
            complete_graph(3), PropertyQuery(Property.PERFECT_K_MATCHING, 3)
        )
    with pytest.raises(ParityError):
        decide_property(complete_graph(4), PropertyQuery(Property.FACTOR_CRITICAL, 2))
    with pytest.raises(ParityError):
        decide_property(complete_graph(5), PropertyQuery(Property.BICRITICAL, 2))
    with pytest.raises(InvalidQueryError):
        decide_property(complete_graph(5), PropertyQuery(Property.FACTOR_CRITICAL, 1))
    # even k has no parity requirement: K3 carries weight 1 on every edge
    assert decide_property(
        complete_graph(3), PropertyQuery(Property.PERFECT_K_MATCHING, 2)
    ).holds


def test_witness_violates_inequality(rng):
    for _ in range(40):
        g = random_connected_graph(rng, int(rng.integers(4, 9)), 0.35)
        k = int(rng.choice([1, 2, 3, 4, 5]))
        if k % 2 == 1 and g.n % 2 == 1:
            continue
        verdict = decide_property(g, PropertyQuery(Property.PERFECT_K_MATCHING, k))
        if verdict.holds:
            continue
        stats = component_stats(delete_vertices(g, verdict.witness))
        if k % 2 == 1:
            lhs = stats.odd_nontrivial + k * stats.isolated
        else:
            lhs = k * stats.isolated
        assert lhs > k * len(verdict.witness)


def test_empty_set_in_perfect_matching_range():
    # the perfect-matching scan includes S = empty set: an isolated vertex
    # can never carry weighted degree k, witnessed by the empty set itself
    verdict = decide_property(
        complete_graph(1), PropertyQuery(Property.PERFECT_K_MATCHING, 2)
    )
    assert not verdict.holds
    assert verdict.witness == frozenset()


def brute_force_weighting_exists(g, targets, cap) -> bool:
    from itertools import product

    edges = g.edges()
    for combo in product(range(cap + 1), repeat=len(edges)):
        sums = [0] * g.n
        for (u, v), w in zip(edges, combo):
            sums[u] += w
            sums[v] += w
        if sums == list(targets):
            return True
    return False


def test_direct_search_vs_full_enumeration(rng):
    # third route: literally enumerate all (cap+1)^m weightings
    for _ in range(60):
        n = int(rng.integers(2, 6))
        g = random_connected_graph(rng, n, 0.6)
        if g.num_edges > 7:
            continue
        cap = int(rng.integers(1, 3))
        targets = [int(t) for t in rng.integers(0, cap + 1, size=n)]
        found = direct_search(g, targets, cap) is not None
        assert found == brute_force_weighting_exists(g, targets, cap)


def test_direct_search_examples():
    witness = direct_search(cycle_graph(4), [3, 3, 3, 3], 3)
    assert witness is not None
    sums = [0, 0, 0, 0]
    for (u, v), w in witness.items():
        sums[u] += w
        sums[v] += w
    assert sums == [3, 3, 3, 3]
    assert direct_search(cycle_graph(5), [3] * 5, 3) is None
    assert direct_search(complete_bipartite(1, 3), [1] * 4, 1) is None


def test_direct_search_monotone_under_edge_addition(rng):
    for _ in range(40):
        g = random_connected_graph(rng, 6, 0.5)
        k = int(rng.choice([1, 2, 3]))
        targets = [k] * 6
        if direct_search(g, targets, k) is None:
            continue
        missing = [
            (u, v) for v in range(6) for u in range(v) if not g.has_edge(u, v)
        ]
        for u, v in missing:
            bigger = graph_from_edges(6, g.edges() + [(u, v)])
            assert direct_search(bigger, targets, k) is not None


def test_direct_search_budget_errors():
    big = complete_graph(9)  # 36 edges > the structural search limit
    with pytest.raises(BudgetExceededError):
        direct_search(big, [1] * 9, 1)
    with pytest.raises(BudgetExceededError):
        direct_search(cycle_graph(4), [8] * 4, 8)
    with pytest.raises(BudgetExceededError):
        direct_search(cycle_graph(4), [2] * 4, 2, max_nodes=1)


def test_oracle_examples():
    q3 = PropertyQuery(Property.FACTOR_CRITICAL, 3)
    assert direct_property_oracle(complete_graph(5), q3)
    assert decide_property(complete_graph(5), q3).holds
    for n in (5, 7):
        g = pendant_clique(n)
        assert not direct_property_oracle(g, q3)
        assert not decide_property(g, q3).holds


def test_oracle_matches_decider_exhaustively():
    for n in range(3, 6):
        for g in connected_graphs(n):
            queries = [PropertyQuery(Property.PERFECT_K_MATCHING, k) for k in (2, 4)]
            if n % 2 == 0:
                queries += [
                    PropertyQuery(Property.PERFECT_K_MATCHING, k) for k in (1, 3)
                ]
                queries += [PropertyQuery(Property.BICRITICAL, k) for k in (2, 3)]
            else:
                queries += [PropertyQuery(Property.FACTOR_CRITICAL, k) for k in (2, 3)]
                queries += [PropertyQuery(Property.D_CRITICAL, 3, 1)]
            for q in queries:
                assert direct_property_oracle(g, q) == decide_property(g, q).holds


def test_criticality_chain():
    # d-critical implies factor-critical for odd d, bicritical for even d
    for n in range(3, 8):
        for g in connected_graphs(n):
            for k in (3, 5):
                for d in range(1, k):
                    if d % 2 != n % 2:
                        continue
                    if not decide_property(g, PropertyQuery(Property.D_CRITICAL, k, d)).holds:
                        continue
                    follow = (
                        Property.FACTOR_CRITICAL if d % 2 == 1 else Property.BICRITICAL
                    )
                    assert decide_property(g, PropertyQuery(follow, k)).holds


def test_barrier_and_inequality_routes_agree():
    # "no nonempty barrier" and the slack inequalities pick the same graphs
    for n in range(3, 8):
        for g in connected_graphs(n):
            for k in (2, 3, 4):
                prop = (
                    Property.FACTOR_CRITICAL if n % 2 == 1 else Property.BICRITICAL
                )
                via_scan = decide_property(g, PropertyQuery(prop, k)).holds
                via_barriers = k_barriers(g, k) == (frozenset(),)
                assert via_scan == via_barriers, (n, k)


def test_empty_barrier_readings_coincide():
    # "the empty set is the unique maximizer" and "no nonempty subset is a
    # maximizer" are the same condition: the maximum is always attained
    for n in range(2, 7):
        for g in connected_graphs(n):
            for k in (2, 3):
                barriers = k_barriers(g, k)
                unique_empty = barriers == (frozenset(),)
                no_nonempty = not any(b for b in barriers)
                assert unique_empty == no_nonempty
