"""End-to-end runs of the command-line interface."""
import json
import shutil
import subprocess

import pytest

from windex import (
    TransferSystem, WeakIndexingSystem, chain_group, dump, f_complete,
    f_trivial, f_zero, family_to_obj, fold_left, system_from_obj,
    system_to_obj, transfer_to_obj,
)
from windex.cli import main


C2 = chain_group(2, 1)
C4 = chain_group(2, 2)


def _write(tmp_path, name, obj):
    path = tmp_path / name
    dump(obj, path)
    return str(path)


# -- enumerate -------------------------------------------------------------------


def test_enumerate_height_one(capsys):
    assert main(["enumerate", "--p", "2", "--n", "1"]) == 0
    out = capsys.readouterr().out
    assert "13 aE_unital systems" in out
    assert "16 cover relations" in out


def test_enumerate_unital_dot_output(tmp_path, capsys):
    dot = tmp_path / "hasse.dot"
    assert main(["enumerate", "--backend", "cpn", "--p", "2", "--n", "2",
                 "--class", "unital", "--out", str(dot)]) == 0
    out = capsys.readouterr().out
    assert "21 unital systems" in out and "32 cover relations" in out
    text = dot.read_text()
    assert text.startswith("digraph unital_chain_p_2_n_2")
    assert text.count("->") == 32


def test_enumerate_fiberwise_agrees(capsys):
    assert main(["enumerate", "--p", "2", "--n", "2", "--class", "unital",
                 "--fiberwise"]) == 0
    assert "21 unital systems" in capsys.readouterr().out


def test_enumerate_json_poset(tmp_path, capsys):
    out = tmp_path / "poset.json"
    assert main(["enumerate", "--p", "3", "--n", "1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["nodes"]) == 13
    assert len(doc["covers"]) == 16


def test_enumerate_point_and_bg(capsys):
    assert main(["enumerate", "--backend", "point"]) == 0
    assert "4 aE_unital systems" in capsys.readouterr().out
    assert main(["enumerate", "--backend", "bg", "--p", "6"]) == 0
    assert "4 aE_unital systems" in capsys.readouterr().out


def test_enumerate_unknown_class_is_bad_input(capsys):
    assert main(["enumerate", "--class", "complete"]) == 2


# -- validate --------------------------------------------------------------------


def test_validate_good_system(tmp_path, capsys):
    path = _write(tmp_path, "w.json", system_to_obj(f_zero(C2)))
    assert main(["validate", path]) == 0
    out = capsys.readouterr().out
    assert "restriction-stable" in out and "ok" in out
    assert "class:" in out and "unital" in out


def test_validate_unclosed_sparse_data(tmp_path, capsys):
    obj = system_to_obj(f_trivial(C2))
    obj["levels"]["C_2"].append(
        {"over": "C_2", "orbits": [["e", 1]]})  # free orbit, no fold below
    path = _write(tmp_path, "broken.json", obj)
    assert main(["validate", path]) == 1
    assert "not closed" in capsys.readouterr().out


def test_validate_bad_inputs(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["validate", str(bad)]) == 2
    wrong = _write(tmp_path, "wrong.json", transfer_to_obj(TransferSystem(C2, [])))
    assert main(["validate", wrong]) == 2


# -- join ------------------------------------------------------------------------


def test_join_systems(tmp_path, capsys):
    a = _write(tmp_path, "a.json", system_to_obj(f_trivial(C2)))
    b = _write(tmp_path, "b.json", system_to_obj(f_zero(C2)))
    out = tmp_path / "j.json"
    assert main(["join", a, b, "--out", str(out)]) == 0
    assert system_from_obj(json.loads(out.read_text())) == f_zero(C2)


def test_join_without_out_prints_document(tmp_path, capsys):
    a = _write(tmp_path, "a.json", system_to_obj(f_zero(C2)))
    assert main(["join", a, a]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert system_from_obj(doc) == f_zero(C2)


# -- fiber -----------------------------------------------------------------------


def test_fiber_lists_systems(tmp_path, capsys):
    r = _write(tmp_path, "r.json", transfer_to_obj(
        TransferSystem(C4, [("e", "C_2"), ("e", "C_4")])))
    fam = _write(tmp_path, "fam.json", family_to_obj(C4, ["e"]))
    out = tmp_path / "fiber.json"
    assert main(["fiber", "--R", r, "--family", fam, "--out", str(out)]) == 0
    assert "3 systems" in capsys.readouterr().out
    docs = json.loads(out.read_text())
    assert len(docs) == 3
    assert len({str(sorted(d["levels"].items())) for d in docs}) == 3


def test_fiber_empty_when_domain_does_not_fold(tmp_path, capsys):
    r = _write(tmp_path, "r.json", transfer_to_obj(
        TransferSystem(C4, [("C_2", "C_4")])))
    fam = _write(tmp_path, "fam.json", family_to_obj(C4, ["e"]))
    assert main(["fiber", "--R", r, "--family", fam]) == 0
    assert "0 systems" in capsys.readouterr().out


def test_fiber_mismatched_presentations(tmp_path, capsys):
    r = _write(tmp_path, "r.json", transfer_to_obj(TransferSystem(C2, [])))
    fam = _write(tmp_path, "fam.json", family_to_obj(C4, ["e"]))
    assert main(["fiber", "--R", r, "--family", fam]) == 2


# -- transport -------------------------------------------------------------------


def test_transport_fold(tmp_path, capsys):
    w = _write(tmp_path, "w.json", system_to_obj(f_zero(C4)))
    fam = _write(tmp_path, "fam.json", family_to_obj(C4, ["e", "C_2"]))
    out = tmp_path / "t.json"
    assert main(["transport", "--map", "fold", "--to", fam, w,
                 "--out", str(out)]) == 0
    got = system_from_obj(json.loads(out.read_text()))
    assert got == fold_left(C4, ["e", "C_2"])


def test_transport_transfer_fold(tmp_path, capsys):
    w = _write(tmp_path, "w.json", system_to_obj(f_zero(C4)))
    to = _write(tmp_path, "to.json", {
        "presentation": C4.spec,
        "transfer": [["e", "C_2"]],
        "family": ["e"],
    })
    assert main(["transport", "--map", "transfer-fold", "--to", to, w]) == 0
    doc = json.loads(capsys.readouterr().out)
    W = system_from_obj(doc)
    expected = WeakIndexingSystem.from_sparse(C4, {
        "e": [C4.empty_vset("e"), C4.star_vset("e"),
              C4.vset("e", [("e", 2)])],
        "C_2": [C4.empty_vset("C_2"), C4.star_vset("C_2"),
                C4.orbit_vset("C_2", "e")],
        "C_4": [C4.empty_vset("C_4"), C4.star_vset("C_4")],
    }, validate=False)
    assert W == expected


def test_transport_unreachable_target(tmp_path, capsys):
    w = _write(tmp_path, "w.json", system_to_obj(f_complete(C4)))
    fam = _write(tmp_path, "fam.json", family_to_obj(C4, ["e"]))
    assert main(["transport", "--map", "fold", "--to", fam, w]) == 1
    assert "target not above" in capsys.readouterr().out


def test_transport_rejects_unknown_map(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["transport", "--map", "nope", "--to", "x.json", "y.json"])
    assert err.value.code == 2


# -- rep -------------------------------------------------------------------------


def test_rep_sigma(tmp_path, capsys):
    out = tmp_path / "sigma.json"
    assert main(["rep", "--name", "sigma", "--group", "c2",
                 "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "sigma over" in text and "unital" in text
    doc = json.loads(out.read_text())
    assert doc["label"] == "F^sigma"


def test_rep_bad_requests(capsys):
    assert main(["rep", "--name", "sigma", "--group", "c9"]) == 2
    assert main(["rep", "--name", "tau", "--group", "c2"]) == 2
    assert main(["rep", "--name", "sigma", "--group", "c6"]) == 2
    assert main(["rep", "--name", "sigma", "--group", "bg4"]) == 2


# -- hull ------------------------------------------------------------------------


def test_hull_of_units_is_complete(tmp_path, capsys):
    w = _write(tmp_path, "w.json", system_to_obj(f_zero(C2)))
    out = tmp_path / "hull.json"
    assert main(["hull", w, "--out", str(out)]) == 0
    assert "indexing" in capsys.readouterr().out
    assert system_from_obj(json.loads(out.read_text())) == f_complete(C2)


# -- environment and entry point ---------------------------------------------------


def test_windex_bound_env_failure(tmp_path, monkeypatch, capsys):
    obj = system_to_obj(
        WeakIndexingSystem.from_generators(C2, [C2.star_vset("e").scale(4)]))
    del obj["bound"]  # force the bound to come from the environment
    path = _write(tmp_path, "gen.json", obj)
    assert main(["validate", path]) == 0
    capsys.readouterr()
    monkeypatch.setenv("WINDEX_BOUND", "1")
    assert main(["validate", path]) == 2


def test_installed_script_entry_point():
    exe = shutil.which("windex")
    assert exe, "windex script should be on PATH after an editable install"
    proc = subprocess.run([exe, "enumerate", "--backend", "point"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "4 aE_unital systems" in proc.stdout
