"""End-to-end CLI flows, driven in-process through main(argv)."""

import json

import pytest

from bookembed import (
    BookEmbedding,
    Graph,
    TreeDecomposition,
    complete_bipartite,
    complete_graph,
    validate_decomposition,
    validate_embedding,
)
from bookembed.cli import main
from util import cycle


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---- gen ----


def test_gen_json_is_byte_stable(capsys):
    code1, out1, err1 = _run(capsys, "gen", "--family", "split", "--k", "3", "--m", "4")
    code2, out2, _ = _run(capsys, "gen", "--family", "split", "--k", "3", "--m", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    g = Graph.from_json_dict(json.loads(out1))
    assert g.n == 7 and g.m == 15
    assert "generated split: 7 vertices, 15 edges" in err1


def test_gen_text_format_round_trips(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "path-power", "--n", "6", "--k", "2",
                        "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "6 9"
    assert Graph.from_text(out).m == 9


def test_gen_with_treedec(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "random-ktree", "--n", "12", "--k", "2",
                        "--seed", "5", "--with-treedec")
    assert code == 0
    payload = json.loads(out)
    g = Graph.from_json_dict(payload["graph"])
    td = TreeDecomposition.from_json_dict(payload["decomposition"])
    rep = validate_decomposition(g, td)
    assert rep.valid and rep.smooth and rep.width == 2


def test_gen_usage_errors(capsys):
    code, _, err = _run(capsys, "gen", "--family", "q")  # missing --k
    assert code == 2 and "requires --k" in err
    code, _, err = _run(capsys, "gen", "--family", "q", "--k", "3")  # domain error
    assert code == 2 and "error:" in err
    code, _, err = _run(capsys, "gen", "--family", "complete", "--n", "4",
                        "--with-treedec", "--format", "text")
    assert code == 2


def test_unknown_family_and_command_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--family", "nope"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


# ---- bt / check ----


def test_bt_writes_report_and_witness(capsys, tmp_path):
    gpath = tmp_path / "k23.json"
    gpath.write_text(complete_bipartite(2, 3).to_json())
    wpath = tmp_path / "witness.json"
    code, out, err = _run(capsys, "bt", "--graph", str(gpath), "--witness", str(wpath))
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "exact"
    assert report["book_thickness"] == 2
    assert report["lower_bound"] == 2
    assert "book thickness 2" in err

    emb = BookEmbedding.from_json(wpath.read_text())
    assert validate_embedding(complete_bipartite(2, 3), emb).ok

    code, out, _ = _run(capsys, "check", "--graph", str(gpath), "--embedding", str(wpath))
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_bt_respects_budgets(capsys, tmp_path):
    gpath = tmp_path / "k7.json"
    gpath.write_text(complete_graph(7).to_json())
    code, out, _ = _run(capsys, "bt", "--graph", str(gpath), "--max-pages", "2")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "lower-bound-only"
    assert report["lower_bound"] == 3


def test_check_flags_bad_embedding(capsys, tmp_path):
    g = complete_graph(4)
    gpath = tmp_path / "k4.json"
    gpath.write_text(g.to_json())
    bad = BookEmbedding(tuple(range(4)), {e: 1 for e in g.edges}, 1)
    epath = tmp_path / "bad.json"
    epath.write_text(bad.to_json())
    code, out, err = _run(capsys, "check", "--graph", str(gpath), "--embedding", str(epath))
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["first_conflict"] == [[0, 2], [1, 3]]
    assert "INVALID" in err


def test_bt_missing_file_is_a_usage_error(capsys, tmp_path):
    code, _, err = _run(capsys, "bt", "--graph", str(tmp_path / "missing.json"))
    assert code == 2 and "error:" in err


# ---- embed ----


def test_embed_ktree_via_cli(capsys, tmp_path):
    code, out, _ = _run(capsys, "gen", "--family", "path-power", "--n", "9", "--k", "3")
    gpath = tmp_path / "p9.json"
    gpath.write_text(out)
    code, out, err = _run(capsys, "embed", "--graph", str(gpath), "--method", "ktree",
                          "--k", "3")
    assert code == 0
    emb = BookEmbedding.from_json_dict(json.loads(out))
    assert validate_embedding(Graph.from_json(gpath.read_text()), emb).ok
    assert "pages" in err


def test_embed_infers_k_when_omitted(capsys, tmp_path):
    code, out, _ = _run(capsys, "gen", "--family", "random-ktree", "--n", "10", "--k", "2")
    gpath = tmp_path / "t2.json"
    gpath.write_text(out)
    code, out, _ = _run(capsys, "embed", "--graph", str(gpath), "--method", "ktree")
    assert code == 0
    emb = BookEmbedding.from_json_dict(json.loads(out))
    assert validate_embedding(Graph.from_json(gpath.read_text()), emb).ok


def test_embed_rejects_non_ktrees(capsys, tmp_path):
    gpath = tmp_path / "c5.json"
    gpath.write_text(cycle(5).to_json())
    code, _, err = _run(capsys, "embed", "--graph", str(gpath), "--method", "ktree")
    assert code == 1
    assert "not a k-tree" in err


def test_embed_first_fit_with_explicit_order(capsys, tmp_path):
    g = complete_graph(5)
    gpath = tmp_path / "k5.json"
    gpath.write_text(g.to_json())
    opath = tmp_path / "order.json"
    opath.write_text(json.dumps([4, 2, 0, 1, 3]))
    code, out, _ = _run(capsys, "embed", "--graph", str(gpath), "--method", "first-fit",
                        "--order", str(opath))
    assert code == 0
    emb = BookEmbedding.from_json_dict(json.loads(out))
    assert emb.order == (4, 2, 0, 1, 3)
    assert validate_embedding(g, emb).ok


# ---- treedec validate ----


def test_treedec_validate_via_cli(capsys, tmp_path):
    code, out, _ = _run(capsys, "gen", "--family", "random-ktree", "--n", "9", "--k", "3",
                        "--with-treedec")
    payload = json.loads(out)
    gpath = tmp_path / "g.json"
    tpath = tmp_path / "td.json"
    gpath.write_text(json.dumps(payload["graph"]))
    tpath.write_text(json.dumps(payload["decomposition"]))
    code, out, err = _run(capsys, "treedec", "validate", "--graph", str(gpath),
                          "--treedec", str(tpath))
    assert code == 0
    assert json.loads(out)["valid"] is True
    assert "width 3" in err

    # drop a vertex from every bag that holds it: edge coverage breaks
    broken = payload["decomposition"]
    victim = broken["bags"][0][0]
    broken["bags"] = [[v for v in bag if v != victim] for bag in broken["bags"]]
    tpath.write_text(json.dumps(broken))
    code, out, _ = _run(capsys, "treedec", "validate", "--graph", str(gpath),
                        "--treedec", str(tpath))
    assert code == 1
    assert json.loads(out)["valid"] is False


# ---- oracle ----


def test_oracle_subcommand(capsys):
    code, out, err = _run(capsys, "oracle", "--max-n", "4", "--samples", "3")
    assert code == 0
    summary = json.loads(out)
    assert summary["ok"] is True
    assert summary["bt_checked"] > 0
    assert "all agree" in err
