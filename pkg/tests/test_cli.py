import json

from graphcodes.cli import main
from graphcodes.family import load_family, save_family
from graphcodes import complete_bipartite_graph, empty_graph, complete_graph


def run(*argv):
    return main(list(argv))


def test_build_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "sc6.json"
    assert run("build", "--family", "split-clique", "--n", "6",
               "--out", str(out)) == 0
    text = capsys.readouterr().out
    assert "size 32" in text
    assert run("verify", "--pred", "connected", str(out)) == 0
    assert "PASS" in capsys.readouterr().out
    # byte-exact re-serialization
    loaded = load_family(out)
    from graphcodes.family import family_to_json

    assert family_to_json(loaded.n, loaded.graphs, role=loaded.role,
                          provenance=loaded.provenance) == out.read_text()


def test_build_linear_and_linear_verify(tmp_path, capsys):
    out = tmp_path / "hc8.json"
    assert run("build", "--family", "hamcycle", "--n", "8",
               "--out", str(out), "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 64
    assert load_family(out).role == "basis"
    assert run("verify", "--pred", "hamcycle", str(out)) == 0
    assert "[linear]" in capsys.readouterr().out


def test_verify_failure_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    save_family(bad, 4, [empty_graph(4), complete_bipartite_graph(4, {1})])
    assert run("verify", "--pred", "k3", str(bad)) == 1
    assert "witness" in capsys.readouterr().out


def test_verify_dual_and_sampled(tmp_path, capsys):
    out = tmp_path / "ds4.json"
    assert run("build", "--family", "dual-star", "--n", "4",
               "--out", str(out)) == 0
    assert run("verify", "--pred", "star", "--dual", str(out)) == 0
    assert run("verify", "--pred", "star", "--dual", "--sample", "50",
               "--seed", "4", str(out)) == 0
    capsys.readouterr()


def test_unsupported_parameter_exit_code(tmp_path, capsys):
    assert run("build", "--family", "hampath", "--p", "9",
               "--out", str(tmp_path / "x.json")) == 2
    assert "not an odd prime" in capsys.readouterr().err


def test_bound_star(capsys):
    assert run("bound", "--pred", "star", "--n", "11") == 0
    text = capsys.readouterr().out
    assert "M <= 12" in text
    assert "tight: yes" in text


def test_bound_json(capsys):
    assert run("bound", "--pred", "k3", "--n", "5", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lower"] == 16 and payload["upper"] == 16 and payload["tight"]


def test_search_cli(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert run("search", "--pred", "k3", "--n", "4", "--mode", "good",
               "--out", str(cert), "--expect", "4") == 0
    assert "optimum 4" in capsys.readouterr().out
    assert len(load_family(cert).graphs) == 4
    assert run("verify", "--pred", "k3", str(cert)) == 0
    capsys.readouterr()


def test_search_expect_failure(capsys):
    assert run("search", "--pred", "k3", "--n", "4", "--mode", "good",
               "--expect", "5") == 1
    capsys.readouterr()


def test_table(capsys):
    assert run("table", "--range", "5..7") == 0
    text = capsys.readouterr().out
    lines = [ln for ln in text.splitlines() if ln.strip()]
    k3_row = next(ln for ln in lines if "k3" in ln and ln.strip().startswith("5"))
    assert "16" in k3_row and "tight" in k3_row
    row_3conn = next(ln for ln in lines if "3conn-linear" in ln)
    assert row_3conn.strip().startswith("7") and "tight" in row_3conn
    odd9 = [ln for ln in lines if ln.strip().startswith("9")]
    assert not odd9  # outside requested range


def test_table_odd_2conn_row(capsys):
    assert run("table", "--range", "9..9") == 0
    text = capsys.readouterr().out
    row = next(ln for ln in text.splitlines()
               if "2conn" in ln and "3conn" not in ln)
    assert "93" in row and "128" in row and "tight" not in row


def test_table_range_validation(capsys):
    assert run("table", "--range", "2..5") == 2
    assert run("table", "--range", "nonsense") == 2
    capsys.readouterr()


def test_factorize(tmp_path, capsys):
    out = tmp_path / "f8.json"
    assert run("factorize", "--m", "8", "--out", str(out)) == 0
    assert "perfect" in capsys.readouterr().out
    loaded = load_family(out)
    assert loaded.role == "factorization"
    assert len(loaded.graphs) == 7
    assert run("factorize", "--m", "16", "--json") == 0
    assert json.loads(capsys.readouterr().out)["perfect"] is False
    assert run("factorize", "--m", "7") == 2
    capsys.readouterr()


def test_build_dual_subgraph_with_host_file(tmp_path, capsys):
    host = tmp_path / "host.json"
    save_family(host, 5, [complete_bipartite_graph(5, {1, 2})])
    out = tmp_path / "subs.json"
    assert run("build", "--family", "dual-subgraph", "--n", "5",
               "--host", str(host), "--out", str(out)) == 0
    assert run("verify", "--pred", "k3", "--dual", str(out)) == 0
    capsys.readouterr()


def test_unknown_family(capsys):
    assert run("build", "--family", "nope", "--n", "4") == 2
    capsys.readouterr()


def test_build_missing_parameter(capsys):
    assert run("build", "--family", "split-clique") == 2
    assert "needs --n" in capsys.readouterr().err


def test_sample_requires_dual(tmp_path, capsys):
    out = tmp_path / "f.json"
    save_family(out, 4, [empty_graph(4), complete_graph(4)])
    assert run("verify", "--pred", "star", "--sample", "10", str(out)) == 2
    capsys.readouterr()


def test_sub_pattern_predicate(tmp_path, capsys):
    pat = tmp_path / "k3.json"
    save_family(pat, 3, [complete_graph(3)])
    fam = tmp_path / "fam.json"
    assert run("build", "--family", "k3-4", "--out", str(fam)) == 0
    assert run("verify", "--pred", f"sub:{pat}", str(fam)) == 0
    capsys.readouterr()
