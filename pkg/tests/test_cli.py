import json
import os

import pytest

from factorcrit import Graph, to_edge_list
from factorcrit.cli import main


def write_graph(tmp_path, name, G):
    path = tmp_path / name
    path.write_text(to_edge_list(G), encoding="utf-8")
    return str(path)


@pytest.fixture
def p3(tmp_path):
    return write_graph(tmp_path, "p3.el", Graph(3, [(0, 1), (1, 2)]))


@pytest.fixture
def gstar(tmp_path):
    from factorcrit import extremal_graph
    return write_graph(tmp_path, "gstar.el", extremal_graph(1, 1, 15))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_extremal_roundtrip(self, tmp_path, capsys):
        out = str(tmp_path / "g.el")
        code, _, err = run(capsys, "construct", "--family", "extremal",
                           "--b", "1", "--k", "1", "--n", "15", "--out", out)
        assert code == 0
        assert "n=15 m=82" in err
        code, stdout, _ = run(capsys, "spectrum", out)
        assert code == 0
        assert "wiener: 128" in stdout

    def test_split_join_to_stdout(self, capsys):
        code, stdout, _ = run(capsys, "construct", "--family", "split-join",
                              "--s", "2", "--parts", "11,1,1")
        assert code == 0
        assert stdout.startswith("15 82\n")

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run(capsys, "construct", "--family", "extremal",
                           "--b", "1", "--k", "1", "--n", "4")
        assert code == 2
        assert "error" in err


class TestVerdictCommands:
    def test_factor_on_odd_order_graph(self, p3, capsys):
        code, stdout, _ = run(capsys, "factor", p3, "--b", "1")
        assert code == 1
        assert "verdict: False" in stdout
        assert "witness: []" in stdout  # S = empty set: odd order

    def test_factor_true_verdict(self, tmp_path, capsys):
        k2 = write_graph(tmp_path, "k2.el", Graph(2, [(0, 1)]))
        code, stdout, _ = run(capsys, "factor", k2, "--b", "1")
        assert code == 0
        assert "verdict: True" in stdout

    def test_critical_on_extremal(self, gstar, capsys):
        code, stdout, _ = run(capsys, "critical", gstar, "--b", "1", "--k", "1")
        assert code == 1
        assert "witness: [0, 1]" in stdout

    def test_connectivity(self, gstar, capsys):
        code, stdout, _ = run(capsys, "connectivity", gstar)
        assert code == 0
        assert "kappa: 2" in stdout


class TestSpectrumAndQuotient:
    def test_spectrum_values(self, p3, capsys):
        code, stdout, _ = run(capsys, "--format", "json", "spectrum", p3)
        assert code == 0
        payload = json.loads(stdout)
        assert payload["wiener"] == 4
        assert payload["wiener_floor"] == pytest.approx(8 / 3)
        assert payload["mu"] == pytest.approx(2.7320508, abs=1e-6)

    def test_quotient_blocks(self, gstar, capsys):
        code, stdout, _ = run(capsys, "--format", "json", "quotient", gstar,
                              "--blocks", "2:11:2")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["equitable"] is True
        assert payload["matrix"] == [[1, 11, 2], [2, 10, 4], [2, 22, 2]]
        assert payload["largest_eigenvalue"] == pytest.approx(17.7074, abs=1e-4)

    def test_quotient_partition_file(self, p3, tmp_path, capsys):
        part = tmp_path / "blocks.txt"
        part.write_text("0 2\n1\n", encoding="utf-8")
        code, stdout, _ = run(capsys, "--format", "json", "quotient", p3,
                              "--partition-file", str(part))
        assert code == 0
        assert json.loads(stdout)["equitable"] is True

    def test_quotient_bad_blocks_exit_2(self, p3, capsys):
        code, _, err = run(capsys, "quotient", p3, "--blocks", "1:1")
        assert code == 2


class TestHarnessCommands:
    def test_proof_chain(self, capsys):
        code, stdout, _ = run(capsys, "--format", "json", "proof-chain",
                              "--b", "1", "--k", "1", "--n", "15", "--s", "3")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["chain_verdict"] is True
        assert payload["g_at_bound"] < 0

    def test_verify_theorem_outputs(self, tmp_path, capsys):
        out = str(tmp_path / "report.json")
        csv = str(tmp_path / "report.csv")
        figs = str(tmp_path / "figs")
        code, stdout, _ = run(capsys, "--format", "json", "verify-theorem",
                              "--b", "1", "--k", "1", "--n", "15",
                              "--samples", "10", "--seed", "3",
                              "--out", out, "--csv", csv, "--figures", figs)
        assert code == 0
        report = json.loads(open(out).read())
        assert report["counterexamples"] == []
        assert report["extremal_critical"] is False
        lines = open(csv).read().splitlines()
        assert lines[0] == "id,seed,kappa,mu,verdict"
        assert len(lines) == report["sample_count"] + 1
        assert os.path.exists(os.path.join(figs, "mu_histogram.png"))
        assert os.path.exists(os.path.join(figs, "kappa_vs_mu.png"))

    def test_verify_theorem_byte_identical(self, tmp_path, capsys):
        paths = []
        for i in range(2):
            out = str(tmp_path / f"r{i}.json")
            code, _, _ = run(capsys, "verify-theorem", "--b", "1", "--k", "1",
                             "--n", "15", "--samples", "8", "--seed", "9",
                             "--out", out)
            assert code == 0
            paths.append(out)
        assert open(paths[0], "rb").read() == open(paths[1], "rb").read()

    def test_proof_chain_figure(self, tmp_path, capsys):
        figs = str(tmp_path / "figs")
        code, _, _ = run(capsys, "proof-chain", "--b", "1", "--k", "1",
                         "--n", "15", "--s", "3", "--figures", figs)
        assert code == 0
        assert os.path.exists(os.path.join(figs, "proof_chain.png"))


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        assert run(capsys, "spectrum", "--bogus")[0] == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "spectrum", "/nonexistent/file.el")
        assert code == 2
        assert "error" in err

    def test_config_echoed_in_header(self, p3, capsys):
        _, stdout, _ = run(capsys, "spectrum", p3)
        assert stdout.startswith("# config:")
