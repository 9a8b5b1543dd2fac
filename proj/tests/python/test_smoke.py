"""Smoke tests for the Python module: one happy path per major operation."""

from fractions import Fraction

import pytest

import symrep


def test_graph_construction_and_queries():
    g = symrep.complete(4)
    assert g.n == 4
    assert g.edge_count() == 6
    assert g.has_edge(2, 3)
    assert symrep.components(symrep.disjoint_copies(g, 2)) == [[0, 1, 2, 3], [4, 5, 6, 7]]


def test_graph_errors_surface_as_exceptions():
    kind = symrep.GraphKind(directed=False, loops_allowed=False)
    with pytest.raises(symrep.SymrepError):
        symrep.make_graph(kind, 2, [(0, 0)])


def test_representativeness_of_triangles_in_k4():
    rep = symrep.representativeness(symrep.complete(4), [symrep.cycle(3)], symrep.Mode.VERTEX)
    assert rep.value == 2
    assert rep.symmetric_value == 4
    assert rep.bound_factor == 3


def test_symmetrize_worked_example():
    rot = symrep.Perm([1, 2, 3, 4, 5, 0])
    action = symrep.PermAction(6, [rot])
    family = symrep.SetFamily([[i, (i + 1) % 6, (i + 2) % 6] for i in range(6)])
    result = symrep.symmetrize(action, family, [0, 3])
    assert result.invariant_transversal == [0, 1, 2, 3, 4, 5]
    assert result.bound == 6
    assert all(q == Fraction(1) for q in result.neumann_sums)


def test_automorphisms_of_petersen():
    aut = symrep.automorphisms(symrep.petersen())
    assert aut.order == 120
    assert aut.order_exact
    assert len(aut.vertex_orbits.classes) == 1


def test_hitting_set_solver():
    fam = symrep.SetFamily([[1, 2], [2, 3], [1, 3]])
    result = symrep.min_hitting_set(fam)
    assert result.size == 2
    assert symrep.verify_transversal(fam, result.witness)


def test_theorem_checks_pass():
    assert symrep.check_theorem1(symrep.complete(3), 2, False).passed
    assert symrep.check_2k2_example(3).passed
    assert symrep.check_theorem2(symrep.petersen()).passed


def test_graph_file_round_trip():
    g = symrep.petersen()
    assert symrep.parse_graph(symrep.serialize_graph(g)).edges == g.edges


def test_mars_demo_bound():
    report = symrep.mars_demo(symrep.make_graph(symrep.GraphKind(directed=True), 6, []))
    assert report.passed
    assert report.quantities["invariant_size"] <= 5 * report.quantities["transversal_size"] + 0
    assert report.quantities["invariant_size"] == 6
