"""Permutation group machinery and the graph group computations."""

import pytest

from equilines import (DegreeCapError, PermGroup, SeidelGraph,
                       automorphism_group, conjugate, find_isomorphism,
                       group_order, is_doubly_transitive,
                       is_switching_equivalent, is_transitive, localize,
                       orbits, paley_graph, pentagon, t1_graph, triangle,
                       two_graph_group)
from equilines.groups import identity_perm, perm_inv, perm_mul, perm_order

from conftest import random_graph


def brute_elements(n, gens):
    seen = {identity_perm(n)}
    frontier = list(seen)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = perm_mul(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def test_perm_primitives():
    p = (1, 2, 0, 4, 3)
    assert perm_mul(p, perm_inv(p)) == identity_perm(5)
    assert perm_order(p) == 6
    assert perm_order(identity_perm(4)) == 1


def test_trivial_and_cyclic_orders():
    assert PermGroup(3).order == 1
    assert group_order(PermGroup(6, [(1, 2, 3, 4, 5, 0)])) == 6


def test_schreier_sims_against_enumeration(rng):
    for _ in range(40):
        n = rng.randint(2, 7)
        gens = [tuple(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        elements = brute_elements(n, gens)
        group = PermGroup(n, gens)
        assert group.order == len(elements)
        for _ in range(5):
            p = tuple(rng.sample(range(n), n))
            assert group.contains(p) == (p in elements)


def test_orbits_and_transitivity():
    ident = PermGroup(3)
    assert orbits(ident) == [[0], [1], [2]]
    assert not is_transitive(ident)
    rot = PermGroup(5, [(1, 2, 3, 4, 0)])
    assert is_transitive(rot)
    assert not is_doubly_transitive(rot)   # pair orbits split by distance
    s4 = PermGroup(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    assert is_doubly_transitive(s4)
    assert orbits(rot, [0, 2]) == [[0, 1, 2, 3, 4]]


def test_automorphism_groups_of_small_graphs():
    assert automorphism_group(pentagon()).order == 10
    k4 = SeidelGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert automorphism_group(k4).order == 24
    assert automorphism_group(t1_graph(2)).order == 72
    assert automorphism_group(SeidelGraph(1)).order == 1


def test_automorphism_generators_are_automorphisms():
    g = t1_graph(2)
    grp = automorphism_group(g)
    for sigma in grp.generators:
        assert conjugate(g, sigma) == g
        assert grp.order % perm_order(sigma) == 0


def test_two_graph_group_contains_automorphisms(rng):
    for _ in range(10):
        g = random_graph(rng, rng.randint(3, 7))
        aut = automorphism_group(g)
        two = two_graph_group(g)
        assert two.order % aut.order == 0
        for sigma in aut.generators:
            assert two.contains(sigma)


def test_two_graph_group_membership_criterion(rng):
    # every generator sigma satisfies the localized identity at every index
    for _ in range(6):
        g = random_graph(rng, rng.randint(3, 6))
        two = two_graph_group(g)
        for sigma in two.generators:
            for j in range(g.n):
                assert conjugate(localize(g, j), sigma) == localize(g, sigma[j])


def test_two_graph_group_of_empty_graph_is_symmetric():
    assert two_graph_group(SeidelGraph(3)).order == 6


def test_two_graph_group_is_switching_invariant(rng):
    for _ in range(6):
        n = rng.randint(3, 8)
        g = random_graph(rng, n)
        nu = tuple(rng.choice((-1, 1)) for _ in range(n))
        from equilines import apply_switching
        h = apply_switching(g, nu)
        G, H = two_graph_group(g), two_graph_group(h)
        assert G.order == H.order
        assert all(H.contains(s) for s in G.generators)
        assert all(G.contains(s) for s in H.generators)


def test_small_extension_groups(two_graph_groups):
    assert two_graph_groups[4].order == 24
    assert two_graph_groups[6].order == 60
    assert two_graph_groups[10].order == 720


def test_extension_group_order_formula(two_graph_groups, extensions):
    # |G(extension)| = n * |Aut(base graph)| in every constructed case
    bases = {4: triangle(), 6: pentagon(), 10: t1_graph(2), 16: t1_graph(3),
             28: t1_graph(5)}
    for n, grp in two_graph_groups.items():
        assert grp.order == n * automorphism_group(bases[n]).order


def test_degree_cap(monkeypatch):
    big = SeidelGraph(70, [(0, 1)])
    with pytest.raises(DegreeCapError):
        automorphism_group(big)
    monkeypatch.setenv("EQUILINES_SEARCH_CAP", "16")
    with pytest.raises(DegreeCapError):
        automorphism_group(SeidelGraph(20))
    monkeypatch.setenv("EQUILINES_SEARCH_CAP", "80")
    assert automorphism_group(SeidelGraph(70)).order > 0


def test_find_isomorphism(rng):
    g = t1_graph(2)
    assert find_isomorphism(g, paley_graph(9)) is not None
    assert find_isomorphism(pentagon(), SeidelGraph(5, [(0, 1)])) is None
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 7))
        sigma = tuple(rng.sample(range(g.n), g.n))
        h = conjugate(g, sigma)
        tau = find_isomorphism(g, h)
        assert tau is not None and conjugate(g, tau) == h


def test_group_json():
    d = automorphism_group(pentagon()).to_json_dict()
    assert d["order"] == "10"
    assert d["transitivity"] == 1
    assert all(sorted(gen) == list(range(5)) for gen in d["generators"])


def test_localized_graphs_of_extension_are_isomorphic(extensions):
    g = extensions[6]
    locs = [localize(g, j) for j in range(g.n)]
    for h in locs[1:]:
        assert find_isomorphism(locs[0], h) is not None
        assert is_switching_equivalent(locs[0], h) is not None
