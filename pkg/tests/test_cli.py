import json
import subprocess
import sys

import pytest

from latspec.cli import main
from latspec.order import Poset, downset_lattice

V_POSET = """poset
elements: t u v
covers: t<u t<v
"""

EPS_HOM = """hom
dom.elements: 0 u 1
dom.leq: 0<u u<1
cod.elements: 0 1
cod.leq: 0<1
map: 0->0 u->1 1->1
"""


@pytest.fixture
def vfile(tmp_path):
    p = tmp_path / "v.lat"
    p.write_text(V_POSET)
    return str(p)


@pytest.fixture
def epsfile(tmp_path):
    p = tmp_path / "eps.hom"
    p.write_text(EPS_HOM)
    return str(p)


def test_lattice_check_finding_exits_zero(vfile, capsys):
    # a negative mathematical answer is a finding, not a failure
    assert main(["lattice", "check", vfile]) == 0
    out = capsys.readouterr().out
    assert "completely_normal: False" in out
    assert "({t,u}, {t,v})" in out


def test_lattice_check_json_roundtrip(vfile, capsys):
    assert main(["lattice", "check", vfile, "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["size"] == 5 and d["completely_normal"] is False
    # re-parse the serialized base: identical canonical element encoding
    labels = d["base"]["elements"]
    pairs = [(labels.index(a), labels.index(b)) for a, b in d["base"]["covers"]]
    rebuilt = downset_lattice(Poset.from_pairs(len(labels), pairs, labels))
    orig = downset_lattice(Poset.from_pairs(3, [(0, 1), (0, 2)], labels=["t", "u", "v"]))
    assert rebuilt.elements == orig.elements
    assert rebuilt.base.labels == orig.base.labels


def test_hom_check_exit_zero_with_negative_finding(epsfile, capsys):
    assert main(["hom", "check", epsfile]) == 0
    out = capsys.readouterr().out
    assert "closed: False" in out
    assert "convex: True" in out


def test_input_error_exits_two(tmp_path, capsys):
    assert main(["lattice", "check", str(tmp_path / "missing.lat")]) == 2
    bad = tmp_path / "bad.lat"
    bad.write_text("poset\nelements: a b\ncovers: a<z\n")
    assert main(["lattice", "check", str(bad)]) == 2
    assert main(["pl", "eval", "(frob a)", "--at", "1,1"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_v0_expand_non_normal_exits_two(vfile, capsys):
    assert main(["v0", "expand", vfile]) == 2
    assert "not completely normal" in capsys.readouterr().err


def test_v0_expand_chain(tmp_path, capsys):
    p = tmp_path / "c3.lat"
    p.write_text("poset\nelements: x y\ncovers: x<y\n")
    assert main(["v0", "expand", str(p)]) == 0
    out = capsys.readouterr().out
    assert "{x} \\ {x,y} = {}" in out
    assert "identities: pass" in out


def test_refine_witness_cli(vfile, capsys):
    assert main(["refine", "witness", vfile, "{t,u}", "{t,v}"]) == 0
    assert "no refinement witness" in capsys.readouterr().out


def test_cond_stage_cli(epsfile, capsys):
    assert main(["cond", "stage", epsfile, "--indices", "i,j", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["ok"] and d["stage_size"] == 12


def test_pl_commands(capsys):
    assert main(["pl", "eval", "(add a b)", "--at", "1,1"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["pl", "eval", "(meet a b)", "--at", "1/2,2"]) == 0
    assert capsys.readouterr().out.strip() == "1/2"
    assert main(["pl", "op", "(join a b)", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["rays"] == [[1, 0], [1, 1], [0, 1]]
    assert main(["pl", "ideal-leq", "a", "(add a b)", "--samples", "20"]) == 0
    out = capsys.readouterr().out
    assert "holds: True" in out and "seed 0" in out
    assert main(["pl", "connected", "(sub a b)"]) == 0
    assert "False" in capsys.readouterr().out


def test_glambda_commands(capsys):
    assert main(["glambda", "waybelow", "c0", "c1", "--chain", "2"]) == 0
    assert "True" in capsys.readouterr().out
    assert main(["glambda", "op", "compare", "c0", "c1", "--chain", "2"]) == 0
    assert capsys.readouterr().out.strip() == "lt"
    assert main(["glambda", "ortho", "(pl (diff a b))", "(pl (diff b a))",
                 "--chain", "2", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["ok"] and d["pairwise_orthogonal"] and d["lex_parts_zero"]


def test_replicate_exit_codes(capsys):
    for kernel in ("cube", "rho", "closed-kernel", "convex-kernel", "v0", "all"):
        assert main(["replicate", kernel]) == 0, kernel
        out = capsys.readouterr().out
        assert "overall: pass" in out


def test_replicate_mismatch_exits_one(monkeypatch, capsys):
    # a mismatch against the recorded values is the one exit-1 path
    import latspec.cli as climod

    class Failing:
        ok = False
        embeddings_ok = bounds_ok = faces_ok = amalgams_ok = False
        n_maps = n_faces = n_amalgams = 0

        def to_dict(self):
            return {"ok": False}

    monkeypatch.setattr(climod, "verify_cube", lambda cube: Failing())
    assert main(["replicate", "cube"]) == 1
    assert "overall: FAIL" in capsys.readouterr().out


def test_replicate_rho_reports_values(capsys):
    assert main(["replicate", "rho", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["ok"]
    assert d["pushed"]["(1, 2)"] == [2, 2, 0, 0]
    assert d["pushed"]["(1, 3)"] == [2, 2, 0, 1]
    assert d["pushed"]["(2, 3)"] == [2, 0, 0, 0]


def test_dot_output_chain_spectrum_is_path(tmp_path, capsys):
    # the spectrum of the n-chain is a path with n-1 nodes
    for n in (2, 3, 5):
        p = tmp_path / f"c{n}.lat"
        labels = " ".join(f"x{i}" for i in range(n - 1))
        covers = " ".join(f"x{i}<x{i+1}" for i in range(n - 2))
        p.write_text(f"poset\nelements: {labels}\n" +
                     (f"covers: {covers}\n" if n > 2 else ""))
        assert main(["lattice", "check", str(p), "--dot"]) == 0
        out = capsys.readouterr().out
        spec_part = out.split("digraph spectrum")[1]
        nodes = [l for l in spec_part.splitlines() if "label=" in l]
        edges = [l for l in spec_part.splitlines() if "->" in l]
        assert len(nodes) == n - 1
        assert len(edges) == n - 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "latspec.cli", "replicate", "rho"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "overall: pass" in out.stdout
