import json
import math
import random

import pytest

import udgpath


def chain(n, spacing=1.9):
    return [(i * spacing, 0.0) for i in range(n)]


def test_chain_has_path_but_no_cycle():
    pts = chain(6)
    rep = udgpath.solve(pts, 6, witness=True)
    assert rep.answer == "yes"
    assert bool(rep)
    assert sorted(rep.witness) == list(range(6))
    assert udgpath.solve(pts, 7).answer == "no"
    assert udgpath.solve(pts, 3, variant="cycle").answer == "no"


def test_edges_follow_distance_two():
    pts = [(0.0, 0.0), (2.0, 0.0), (4.1, 0.0)]
    assert udgpath.unit_disk_edges(pts) == [(0, 1)]


def test_matches_exhaustive_oracle():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 9)
        pts = [(rng.uniform(0, 4), rng.uniform(0, 4)) for _ in range(n)]
        best_path, _ = udgpath.longest_path(pts)
        best_cycle, _ = udgpath.longest_cycle(pts)
        for k in range(1, n + 1):
            assert (udgpath.solve(pts, k).answer == "yes") == (best_path is not None and best_path >= k)
            got = udgpath.solve(pts, k, variant="cycle", engine="rankbased").answer == "yes"
            want = best_cycle is not None and best_cycle >= max(k, 3)
            assert got == want


def test_witness_is_a_path_in_the_graph():
    pts = udgpath.generate("uniform", n=60, box=8.0, seed=4)
    edges = set(udgpath.unit_disk_edges(pts))
    rep = udgpath.solve(pts, 8, witness=True)
    assert rep.answer == "yes"
    w = rep.witness
    assert len(w) >= 8 and len(set(w)) == len(w)
    for a, b in zip(w, w[1:]):
        assert (min(a, b), max(a, b)) in edges


def test_json_is_deterministic_without_timings():
    pts = udgpath.generate("clusters", n=80, seed=9)
    a = json.loads(udgpath.solve(pts, 10, witness=True).to_json(with_timings=False))
    b = json.loads(udgpath.solve(pts, 10, witness=True).to_json(with_timings=False))
    assert a == b
    assert "timings" not in a
    assert a["k"] == 10


def test_generate_is_seeded():
    assert udgpath.generate(n=30, seed=1) == udgpath.generate(n=30, seed=1)
    assert udgpath.generate(n=30, seed=1) != udgpath.generate(n=30, seed=2)


def test_instance_round_trip(tmp_path):
    pts = udgpath.generate(n=20, box=5.0, seed=6)
    path = str(tmp_path / "inst.txt")
    udgpath.write_instance(path, pts)
    assert udgpath.read_instance(path) == pts


def test_summary_and_render():
    pts = udgpath.generate(n=40, box=5.0, seed=2)
    s = udgpath.summary(pts, q1=2, q2=1)
    assert s["n"] == 40
    assert s["marked_vertices"] <= s["occupied_cells"] * s["mark_bound"]
    svg = udgpath.render_svg(pts, udgpath.solve(pts, 5, witness=True).witness)
    assert svg.startswith("<?xml") and 'id="witness"' in svg


def test_errors_map_to_python_exceptions(tmp_path):
    with pytest.raises(udgpath.InputError):
        udgpath.solve([(0.0, 0.0)], 0)
    with pytest.raises(udgpath.InputError):
        udgpath.solve([(0.0, 0.0)], 1, q1=0)
    with pytest.raises(udgpath.InputError):
        udgpath.solve([(math.nan, 0.0)], 1)
    with pytest.raises(udgpath.InputError):
        udgpath.read_instance(str(tmp_path / "missing.txt"))
    lattice = udgpath.generate("lattice", n=36, pitch=1.2)
    with pytest.raises(udgpath.RefusalError):
        udgpath.solve(lattice, 36, max_states=100)
    with pytest.raises(udgpath.RefusalError):
        udgpath.longest_path(udgpath.generate(n=20))
