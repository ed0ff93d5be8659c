import json

import pytest

from graphburn import graph as gr
from graphburn.cli import main, parse_generator


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    gr.write_edge_list(gr.path(4), path)
    return str(path)


class TestExact:
    @pytest.mark.parametrize("spec,b", [("path:9", 3), ("wheel:5", 2), ("spider:4x3", 4), ("complete:6", 2)])
    def test_generators(self, capsys, spec, b):
        code, out, _ = run(capsys, "exact", "--gen", spec)
        assert code == 0 and f"b(G) = {b}" in out

    def test_json_report(self, capsys):
        code, rep = run_json(capsys, "exact", "--gen", "cycle:7")
        assert code == 0
        assert set(rep) == {"command", "input", "result", "elapsed", "seed"}
        assert rep["command"] == "exact" and rep["input"] == "gen:cycle:7"
        assert rep["result"]["burning_number"] == 3 and len(rep["result"]["witness"]) == 3

    def test_deterministic(self, capsys):
        _, a = run_json(capsys, "exact", "--gen", "gnp:12:0.3:5")
        _, b = run_json(capsys, "exact", "--gen", "gnp:12:0.3:5")
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b

    def test_file(self, capsys, p4_file):
        code, out, _ = run(capsys, "exact", p4_file)
        assert code == 0 and "b(G) = 2" in out


class TestVerify:
    def test_valid(self, capsys, p4_file):
        code, rep = run_json(capsys, "verify", p4_file, "--sequence", "1,3")
        assert code == 0 and rep["result"]["valid"] and rep["result"]["agree"]
        assert rep["result"]["simulation"]["burn_round"] == [2, 1, 2, 2]

    def test_uncovered(self, capsys, p4_file):
        code, rep = run_json(capsys, "verify", p4_file, "--sequence", "0")
        assert code == 0 and not rep["result"]["valid"]
        assert rep["result"]["characterization"]["uncovered"] == 1

    def test_duplicate_source(self, capsys, p4_file):
        code, _, err = run(capsys, "verify", p4_file, "--sequence", "1,1")
        assert code == 2 and "duplicate" in err

    def test_unknown_node(self, capsys, p4_file):
        assert run(capsys, "verify", p4_file, "--sequence", "1,9")[0] == 2


class TestBounds:
    def test_p9(self, capsys):
        code, rep = run_json(capsys, "bounds", "--gen", "path:9", "--exact")
        res = rep["result"]
        assert code == 0 and res["exact"] == 3
        assert res["lower"]["diameter"] == 3 and res["upper"]["radius"] == 5

    def test_hamiltonian(self, capsys):
        code, rep = run_json(capsys, "bounds", "--gen", "cycle:9", "--hamiltonian", "0,1,2,3,4,5,6,7,8")
        assert code == 0 and rep["result"]["upper"]["hamiltonian"] == 3
        assert run(capsys, "bounds", "--gen", "star:3", "--hamiltonian", "1,0,2,3")[0] == 2

    def test_gamma(self, capsys):
        code, out, _ = run(capsys, "gamma", "--gen", "path:9", "--k", "1")
        assert code == 0 and "gamma_1(G) = 3" in out
        assert run(capsys, "gamma", "--gen", "path:9", "--k", "0")[0] == 2


class TestNordhausGaddum:
    def test_complete(self, capsys):
        code, rep = run_json(capsys, "ng", "--gen", "complete:5")
        assert code == 0 and rep["result"]["sum"] == 7 and rep["result"]["product"] == 10

    def test_sampling(self, capsys):
        code, rep = run_json(capsys, "ng", "--n", "7", "--samples", "4", "--seed", "3")
        assert code == 0 and rep["seed"] == 3 and rep["result"]["samples"] == 4
        _, again = run_json(capsys, "ng", "--n", "7", "--samples", "4", "--seed", "3")
        rep.pop("elapsed"), again.pop("elapsed")
        assert rep == again

    @pytest.mark.parametrize("argv", [["ng"], ["ng", "--n", "1"], ["ng", "--n", "5", "--samples", "0"]])
    def test_bad_args(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestIlt:
    def test_p4(self, capsys):
        code, rep = run_json(capsys, "ilt", "--g0", "path:4", "--t", "2")
        res = rep["result"]
        assert code == 0 and res["predicted"] == 3
        assert [r["exact"] for r in res["table"]] == [2, 3, 3]

    def test_negative_t(self, capsys):
        assert run(capsys, "ilt", "--g0", "path:4", "--t", "-1")[0] == 2


class TestErrors:
    @pytest.mark.parametrize("spec", ["path", "path:x", "blob:3", "spider:3", "gnp:5:q:1", "cycle:2"])
    def test_bad_generator(self, capsys, spec):
        code, _, err = run(capsys, "exact", "--gen", spec)
        assert code == 2 and err.startswith("burn:")

    def test_missing_input(self, capsys):
        assert run(capsys, "exact")[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "exact", str(tmp_path / "nope.txt"))[0] == 2

    def test_bad_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3 1\n0 7\n")
        assert run(capsys, "exact", str(path))[0] == 2

    def test_node_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("BURN_MAX_NODES", "10")
        assert run(capsys, "exact", "--gen", "path:11")[0] == 3
        assert run(capsys, "ilt", "--g0", "path:3", "--t", "2")[0] == 3
        monkeypatch.setenv("BURN_MAX_NODES", "lots")
        assert run(capsys, "exact", "--gen", "path:3")[0] == 2

    def test_argparse_errors(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2

    def test_parse_generator(self):
        assert parse_generator("spider:3x2") == gr.spider(3, 2)
        assert parse_generator("empty:3").m == 0


class TestSuite:
    def test_subset(self, capsys):
        code, out, _ = run(capsys, "suite", "--only", "3,5")
        assert code == 0 and "[PASS]  3. cliques" in out and "2/2 criteria passed" in out
