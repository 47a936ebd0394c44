import json
from fractions import Fraction

import pytest

import critbound as cb


def test_table_row():
    row = cb.table1_row(7)
    assert row["here"] == "6.1192"
    assert row["kr"] == "6.1149"
    assert cb.table1_row(4)["gallai"] == "3.0769"


def test_main_bound():
    assert cb.main_bound_fraction(7) == 6 + Fraction(18, 151)
    assert cb.parameter_conditions(7) == []


def test_structure():
    t = cb.extremal_chain(5, 2)
    assert t.order() == 20
    assert t.edge_count() == 29
    assert cb.in_T_k(t, 5)
    assert cb.q_value(t, 5) == 2
    assert cb.is_gallai_tree(cb.cycle_graph(5))


def test_coloring():
    w = cb.wheel_graph(5)
    assert cb.chromatic_number(w) == 4
    assert cb.is_critical(w, 4)
    k23 = cb.Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert cb.is_f_choosable(k23, [2] * 5)
    assert cb.is_f_paintable(k23, [2] * 5)
    assert cb.is_f_AT(k23, [2] * 5) is None
    assert cb.is_f_AT(cb.cycle_graph(4), [2] * 4) == [1, 1, 1, 1]
    assert cb.at_number(cb.complete_graph(4)) == 4


def test_discharge_and_reports():
    rep = cb.gallai_discharge(cb.wheel_graph(5), 4)
    assert rep["target"] == "40/13"
    assert rep["all_meet_target"]
    doc = json.loads(cb.command("critical", cb.wheel_graph(5), 4))
    assert doc["verdicts"]["critical"] is True
    assert doc["anchor"]


def test_errors():
    with pytest.raises(ValueError):
        cb.Graph.from_graph6("x")
    g = cb.complete_graph(5)
    g.remove_edge(0, 1)
    assert cb.single_high_check(g, 0, 5)["status"] == "verified"
