# Copyright 2026 The clusterdist Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the clusterdist Python module."""

import math
import pathlib

import pytest

import clusterdist as cd

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def two_triangles():
    edges = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    return cd.Graph.from_edges(6, edges)


def test_graph_basics():
    g = two_triangles()
    assert g.vertex_count == 6
    assert g.edge_count == 7
    assert g.neighbors(2) == [0, 1, 3]
    assert g.has_edge(3, 2)
    assert not g.has_edge(0, 5)
    with pytest.raises(IndexError):
        g.degree(6)


def test_worked_example_distances():
    g = two_triangles()
    assert cd.jaccard(g, 2, 0) == 0.75
    assert cd.jaccard(g, 2, 3) == 1.0
    assert cd.otsuka_ochiai(g, 2, 0) == pytest.approx(1 - 1 / math.sqrt(6))
    assert cd.burt(g, 0, 2) == 1.0
    assert cd.burt(g, 2, 3) == 2.0
    assert cd.distance(g, "otoc", 2, 3) == 1.0
    assert cd.pairwise(g, "burt", [(0, 2), (2, 3)]) == [1.0, 2.0]


def test_bundled_files_round_trip(tmp_path):
    g = cd.load_edge_list(DATA / "two_triangles.edges")
    assert g == two_triangles()
    clusters = cd.load_cluster_assignment(DATA / "two_triangles.clusters")
    summaries = cd.cluster_summaries(g, clusters)
    assert [s.density for s in summaries] == [1.0, 1.0]
    cd.save_edge_list(g, tmp_path / "g.edges")
    assert cd.load_edge_list(tmp_path / "g.edges") == g


def test_clique_cluster_values():
    name, params = cd.benchmark_graphs()[0]
    assert name == "G1"
    g, clusters = cd.generate_ppm(params)
    assert g.edge_count == 49_500
    assert cd.count_edges_by_type(g, clusters) == (49_500, 0)
    s = cd.cluster_summaries(g, clusters)[0]
    assert s.mean_jaccard == 2 / 45
    assert s.mean_otoc == 1 / 44
    assert s.mean_burt == 0.0


def test_generator_is_deterministic():
    params = cd.PpmParams(4, 10, 0.7, 0.1, seed=9)
    a, _ = cd.generate_ppm(params)
    b, _ = cd.generate_ppm(params)
    assert a == b
    assert cd.expected_edge_counts(cd.PpmParams(50, 37, 0.9, 0.1)) == (29_970.0, 167_702.5)
    with pytest.raises(ValueError):
        cd.generate_ppm(cd.PpmParams(2, 2, 1.5, 0.0))


def test_global_means_exact_and_sampled():
    g, _ = cd.generate_ppm(cd.PpmParams(6, 15, 0.8, 0.1, seed=1))
    exact = cd.global_mean_distances(g)
    sampled = cd.global_mean_distances(g, pair_budget=2000, seed=3)
    assert set(exact) == {"jaccard", "otoc", "burt"}
    assert abs(exact["jaccard"] - sampled["jaccard"]) < 0.02


def test_pearson_and_pooling():
    assert cd.pearson([1, 2, 3], [6, 4, 2]) == pytest.approx(-1.0)
    assert cd.pearson([5, 5, 5], [1, 2, 3]) is None
    sets = [([0, 1], [1, 0]), ([10, 11], [11, 10])]
    assert cd.pooled(sets) > 0.9
    assert cd.pooled(sets, mode="mean") == pytest.approx(-1.0)


def test_small_experiment(tmp_path):
    graphs = [("a", cd.PpmParams(5, 10, 0.9, 0.1, 1)), ("b", cd.PpmParams(5, 10, 0.8, 0.2, 2))]
    result = cd.run_experiment(graphs, seeds_per_graph=2, output_dir=tmp_path)
    assert not result["errors"]
    assert len(result["per_graph"]) == 4
    assert [g["p_inter"] for g in result["grouped"]] == [0.1, 0.2]
    assert result["pooled"][-1]["scope"] == "all"
    assert (tmp_path / "per_cluster.csv").exists()
