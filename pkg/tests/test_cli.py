import json
import subprocess
import sys

import numpy as np
import pytest

import homsample as hs
from homsample.cli import main


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.edges"
    path.write_text("3 3\n0 1\n0 2\n1 2\n")
    return path


class TestDensityCommand:
    def test_json_output_near_exact(self, k3_file, capsys):
        code = main(["density", "--graph", str(k3_file), "--pattern", "K2",
                     "--epsilon", "0.01", "--delta", "0.05", "--seed", "7",
                     "--filter", "exact"])
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert set(out) == {"t", "N", "epsilon", "delta", "n_nodes",
                            "pattern", "elapsed_ms"}
        assert abs(out["t"] - 2 / 3) <= 0.01
        assert out["N"] == 18445
        assert out["n_nodes"] == 3
        assert out["pattern"] == "K2"

    def test_confidence_is_one_minus_delta(self, k3_file, capsys):
        code = main(["density", "--graph", str(k3_file), "--pattern", "K2",
                     "--confidence", "0.95", "--epsilon", "0.1", "--seed", "1"])
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["delta"] == pytest.approx(0.05)
        assert out["N"] == 185

    def test_delta_and_confidence_conflict(self, k3_file):
        code = main(["density", "--graph", str(k3_file), "--pattern", "K2",
                     "--delta", "0.05", "--confidence", "0.95"])
        assert code == 1

    def test_pattern_from_file(self, k3_file, tmp_path, capsys):
        pattern_file = tmp_path / "edge.edges"
        pattern_file.write_text("2 1\n0 1\n")
        code = main(["density", "--graph", str(k3_file), "--pattern",
                     str(pattern_file), "--epsilon", "0.1", "--seed", "3"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["pattern"] == "edge"

    def test_atlas_pattern_spec(self, k3_file, capsys):
        code = main(["density", "--graph", str(k3_file), "--pattern",
                     "atlas:3", "--epsilon", "0.1", "--seed", "3"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["pattern"] == "atlas:3"

    def test_deterministic_across_invocations(self, k3_file, capsys):
        args = ["density", "--graph", str(k3_file), "--pattern", "K3",
                "--epsilon", "0.02", "--seed", "9"]
        assert main(args) == 0
        first = json.loads(capsys.readouterr().out)["t"]
        assert main(args) == 0
        second = json.loads(capsys.readouterr().out)["t"]
        assert first == second

    def test_missing_graph_file_is_data_error(self, capsys):
        code = main(["density", "--graph", "/nonexistent.edges",
                     "--pattern", "K2"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_unknown_flag_is_usage_error(self, k3_file, capsys):
        code = main(["density", "--graph", str(k3_file), "--pattern", "K2",
                     "--frobnicate", "1"])
        assert code == 1

    def test_bad_atlas_index_is_usage_error(self, k3_file):
        code = main(["density", "--graph", str(k3_file), "--pattern",
                     "atlas:99"])
        assert code == 1

    def test_weighted_density_needs_attrs(self, k3_file, capsys):
        code = main(["density", "--graph", str(k3_file), "--pattern", "K2",
                     "--weights", "attrs", "--epsilon", "0.1"])
        assert code == 2
        assert "attributes" in capsys.readouterr().err


class TestGenErCommand:
    def test_empty_graph_file_content(self, tmp_path):
        out = tmp_path / "g.edges"
        code = main(["gen-er", "--n", "100", "--p", "0", "--seed", "1",
                     "--out", str(out)])
        assert code == 0
        assert out.read_text() == "100 0\n"

    def test_output_parses_back(self, tmp_path):
        out = tmp_path / "g.edges"
        assert main(["gen-er", "--n", "50", "--p", "0.2", "--seed", "3",
                     "--out", str(out)]) == 0
        g = hs.parse_edge_list(out.read_text())
        assert g.n == 50
        assert np.array_equal(g.edges, hs.generate_er(50, 0.2, 3).edges)

    def test_bad_probability_is_data_error(self, tmp_path):
        code = main(["gen-er", "--n", "10", "--p", "2.0", "--seed", "1",
                     "--out", str(tmp_path / "x")])
        assert code == 2


class TestAtlasCommand:
    def test_ten_records_match_family(self, tmp_path):
        out = tmp_path / "atlas.jsonl"
        assert main(["atlas", "--count", "10", "--out", str(out)]) == 0
        records = hs.parse_dataset(out.read_text())
        assert len(records) == 10
        fam = hs.atlas_connected(10)
        for (rid, g, label), pattern in zip(records, fam):
            assert rid == pattern.name
            assert g.n == pattern.k
            assert hs.are_isomorphic(g, hs.pattern_to_graph(pattern))

    def test_count_out_of_range_is_data_error(self, tmp_path):
        assert main(["atlas", "--count", "40",
                     "--out", str(tmp_path / "x")]) == 2


class TestEmbedCommand:
    def test_writes_feature_csv(self, tmp_path):
        dataset = tmp_path / "data.jsonl"
        lines = []
        for i in range(4):
            g = hs.generate_er(12, 0.3, 60 + i)
            lines.append(hs.dataset_record(f"g{i}", g, i % 2))
        dataset.write_text("\n".join(lines) + "\n")
        out = tmp_path / "emb.csv"
        code = main(["embed", "--dataset", str(dataset), "--patterns",
                     "atlas:5", "--sample-index", "0", "--epsilon", "0.1",
                     "--seed", "4", "--out", str(out)])
        assert code == 0
        text = out.read_text()
        lines = text.splitlines()
        assert lines[0] == "id,label,n,t_0,t_1,t_2,t_3,t_4"
        assert len(lines) == 5

    def test_replicates_differ(self, tmp_path):
        dataset = tmp_path / "data.jsonl"
        g = hs.generate_er(12, 0.3, 1)
        dataset.write_text(hs.dataset_record("g0", g, 0) + "\n")
        outs = []
        for rep in (0, 1):
            out = tmp_path / f"emb{rep}.csv"
            assert main(["embed", "--dataset", str(dataset), "--patterns",
                         "atlas:4", "--sample-index", str(rep),
                         "--epsilon", "0.1", "--seed", "4",
                         "--out", str(out)]) == 0
            outs.append(out.read_text())
        assert outs[0] != outs[1]


class TestBenchCommand:
    def test_writes_csv(self, tmp_path):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--ns", "40,80", "--pattern", "K3",
                     "--variants", "exact:0.1,bloom:0.1", "--seed", "2",
                     "--repeats", "1", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,pattern,oracle,epsilon,N,build_ms,sample_ms,t_bar"
        assert len(lines) == 5

    def test_bad_variant_is_usage_error(self, tmp_path):
        code = main(["bench", "--ns", "40", "--variants", "magic:0.1",
                     "--out", str(tmp_path / "x")])
        assert code == 1


class TestEntryPoint:
    def test_installed_script_runs(self, tmp_path):
        out = tmp_path / "g.edges"
        proc = subprocess.run(
            [sys.executable, "-m", "homsample.cli", "gen-er", "--n", "20",
             "--p", "0.5", "--seed", "2", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert out.read_text().startswith("20 ")

    def test_help_exits_zero(self):
        assert main(["--help"]) == 0
