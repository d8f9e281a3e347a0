import os
import pathlib

import pytest

import hacs

DATA = pathlib.Path(os.environ.get("HACS_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))
SAMPLE = DATA / "instances" / "12rnd60.gtsp"


def square():
    # Corners of a 10 x 10 square, one node per cluster; diagonals round to 14.
    matrix = [0, 10, 14, 10, 10, 0, 10, 14, 14, 10, 0, 10, 10, 14, 10, 0]
    return hacs.GtspInstance("sq", [[0], [1], [2], [3]], matrix)


def test_load_sample():
    inst = hacs.load_gtsp(SAMPLE)
    assert inst.name == "12rnd60"
    assert inst.node_count == 60
    assert inst.cluster_count == 12
    assert sum(len(inst.cluster(c)) for c in range(12)) == 60


def test_three_opt_uncrosses():
    inst = square()
    crossed = hacs.make_tour(inst, [0, 2, 1, 3])
    assert crossed.weight == 48
    assert hacs.three_opt(inst, crossed).weight == 40


def test_solve_matches_the_optimum_on_a_tiny_instance():
    inst = square()
    result = hacs.solve(inst)
    assert result.best.weight == hacs.brute_force_optimum(inst).weight == 40
    assert result.iterations == hacs.AcsParams().delta


def test_solve_is_deterministic_and_consistent():
    inst = hacs.load_gtsp(SAMPLE)
    params = hacs.AcsParams()
    params.seed = 5
    params.delta = 30
    a = hacs.solve(inst, params)
    b = hacs.solve(inst, params)
    assert a.best == b.best
    assert a.iterations == b.iterations
    assert hacs.tour_weight(inst, a.best.nodes) == a.best.weight
    assert a.best.weight <= a.nn_weight


def test_errors_are_typed():
    inst = square()
    with pytest.raises(hacs.FeasibilityError):
        hacs.make_tour(inst, [0, 1, 2])
    with pytest.raises(hacs.ParseError):
        hacs.parse_gtsp("NAME: x\nDIMENSION: two\n")
    params = hacs.AcsParams()
    params.rho = 2.0
    with pytest.raises(hacs.DomainError):
        hacs.solve(inst, params)
    with pytest.raises(hacs.HacsError):
        hacs.load_gtsp(DATA / "missing.gtsp")
    with pytest.raises(ValueError):
        inst.dist(0, 0)


def test_cluster_tsplib_round_trips():
    text = (DATA / "instances" / "rnd60.tsp").read_text()
    assert hacs.cluster_tsplib(text) == SAMPLE.read_text()
