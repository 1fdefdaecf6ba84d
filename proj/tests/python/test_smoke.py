import math

import pytest

import critdg


def test_transitive_tournament_profile():
    g = critdg.gamma_k(3)
    assert g.n == 3 and g.arc_count == 3
    assert g.arcs() == [(1, 2), (1, 3), (2, 3)]
    inv = critdg.metric_invariants(g)
    assert inv["d"] == math.inf
    assert (inv["d_m"], inv["r"], inv["r_m"]) == (1, 1, 1)
    assert critdg.is_critical(g, "d")
    assert critdg.recognize_hertz_family(g) == "TransitiveTournament(3)"


def test_condensation_and_centers():
    g = critdg.Digraph(3, [(1, 2), (2, 1), (1, 3), (2, 3)])
    components, hertz = critdg.condensation(g)
    assert components == [[1, 2], [3]]
    assert hertz == critdg.gamma_k(2)
    assert critdg.centers(critdg.gamma_ki(3, 1)) == ([], [3])


def test_families_and_maximality():
    g = critdg.max_radius(5, 3, 2, 2, 1)
    assert g.arc_count == 12
    assert critdg.metric_invariants(g)["r"] == 3
    assert critdg.is_maximal(g, "r")
    assert critdg.qd3([1, 1, 1, 1]).arc_count == 20
    assert critdg.partition([2, 2]) == critdg.d4()
    assert critdg.blow_up(critdg.gamma_k(2), [1, 3]).arc_count == 9


def test_formulas_return_exact_integers():
    assert critdg.count_formula("beta", 4, 2) == 3
    assert critdg.count_formula("chi", 3, 2) == 8
    assert critdg.count_formula("g", 5, 3) == 12
    assert critdg.count_formula("labeled_d_critical", 30, 10) > 2**63


def test_oracle():
    assert critdg.count_labeled(3) == 64
    assert critdg.count_labeled(3, "diameter=INF,critical(d),bicomponents=2") == 6
    arcs, witness = critdg.max_arcs_where(4, "radius=3")
    assert arcs == 6 and critdg.metric_invariants(witness)["r"] == 3
    assert critdg.iso_class_count(4) == 218
    a = critdg.Digraph(3, [(1, 2)])
    b = critdg.Digraph(3, [(3, 1)])
    assert critdg.are_isomorphic(a, b)
    assert critdg.canonical_form(a) == critdg.canonical_form(b)


def test_round_trips():
    g = critdg.gamma_ki(5, 2)
    assert critdg.Digraph.parse(g.to_json()) == g
    assert critdg.Digraph.parse(g.to_dot()) == g
    assert critdg.Digraph.from_arc_mask(5, g.arc_mask()) == g


def test_scenario_report():
    report = critdg.run_scenario("thm5", 4, workers=1)
    assert report["scenario"] == "thm5"
    assert report["counts"]["mismatch"] == 0
    assert len(report["cells"]) == 6
    assert "cor51" in critdg.scenario_names()


def test_errors_carry_codes():
    with pytest.raises(critdg.CritdgError, match="LoopArc"):
        critdg.Digraph(2, [(1, 1)])
    with pytest.raises(critdg.CritdgError, match="TooLarge"):
        critdg.count_labeled(6)
    with pytest.raises(critdg.CritdgError, match="UnknownScenario"):
        critdg.run_scenario("nosuch", 3)
    with pytest.raises(ValueError):
        critdg.count_formula("lemma11", 3, 2)
