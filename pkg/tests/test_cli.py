import io
import json
import subprocess
import sys

import pytest

from irrtopo.cli import run
from irrtopo.irr import PropertyReport


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_way_below_poset_t():
    code, out, _ = call("way-below", "poset-t", "1", "a")
    assert code == 0 and out.strip() == "false"
    code, out, _ = call("way-below", "poset-t", "bot", "a", "--format", "json")
    assert json.loads(out)["way_below"] is True


def test_space_info_cofinite_json():
    code, out, _ = call("space", "info", "cofinite-nat", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["oplus"] is False
    rep = PropertyReport.from_json(data)
    assert rep.irr_continuous and not rep.c_space


def test_space_info_text_and_json_agree():
    for name in ("poset-t", "rational-scott", "v-poset"):
        _, text, _ = call("space-info", name)
        _, js, _ = call("space", "info", name, "--format", "json")
        data = json.loads(js)
        for line in text.splitlines()[1:]:
            flag, verdict = line.split(":", 1)
            assert data[flag] == verdict.split()[0].startswith("true")


def test_suite_json():
    code, out, _ = call("suite", "--max-points", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["spaces_checked"] == 242 and data["violations"] == []


def test_suite_catalog():
    code, out, _ = call("suite", "--catalog")
    assert code == 0 and "0 violations" in out


def test_enumerate():
    code, out, _ = call("enumerate", "--max-points", "4", "--up-to-iso")
    assert code == 0 and out.split() == ["n=1:", "1", "n=2:", "2", "n=3:", "5", "n=4:", "16"]
    code, out, _ = call("enumerate", "--max-points", "2", "--list", "--format", "json")
    assert len(json.loads(out)["posets"]) == 4


def test_derive_si():
    code, out, _ = call("derive-si", "omega-plus-one", "--fuel", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["gamma"] == 1 and data["fixpoint_reached"]
    code, out, err = call("derive-si", "omega-plus-one", "--fuel", "1")
    assert code == 1 and "no fixpoint" in err
    code, out, _ = call("derive-si", "chain3")
    assert out.startswith("gamma: 0")


def test_converge(tmp_path):
    net = tmp_path / "net.json"
    net.write_text(json.dumps({"index": "nat", "prefix": ["c", "c"],
                               "tail": {"kind": "constant", "value": "a"}}))
    code, out, _ = call("converge", "chain3", "--net", str(net), "--to", "a", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["topological"] and data["irr"] and data["tail_class"] == ["a"]
    code, out, _ = call("converge", "chain3", "--net", str(net), "--to", "b")
    assert out.split() == ["topological:", "false", "irr:", "false"]

    mono = tmp_path / "mono.json"
    mono.write_text(json.dumps({"index": "nat", "tail": {
        "kind": "monotone", "values": "one-minus-one-over-n", "limit": "1"}}))
    code, out, _ = call("converge", "rational-scott", "--net", str(mono), "--to", "1")
    assert out.split() == ["topological:", "true", "irr:", "true"]


def test_counterexample():
    code, out, _ = call("counterexample", "--query", "sup_sober & !c_space", "--max-points", "4")
    assert code == 0 and out.strip() == "none"
    code, out, _ = call("counterexample", "--query", "irr_continuous", "--max-points", "2",
                        "--forbid", "--format", "json")
    assert code == 1 and json.loads(out)["found"]


def test_check():
    code, out, _ = call("check", "poset-t")
    assert code == 0 and "pass at fuel 8" in out
    code, out, _ = call("check", "chain3")
    assert code == 0 and out.strip() == "pass"


def test_dot():
    code, out, _ = call("way-below", "chain3", "a", "c", "--format", "dot")
    assert code == 0 and out.startswith('digraph "space"')
    assert '"a" -> "b" [style=solid' in out
    assert '"a" -> "c" [style=solid' not in out
    assert '"a" -> "c" [style=dashed' in out
    code, out, _ = call("space", "info", "poset-t", "--format", "dot")
    assert '"bot" -> "a" [style=dashed' in out
    code, _, err = call("enumerate", "--max-points", "2", "--format", "dot")
    assert code == 2 and "graph" in err


@pytest.mark.parametrize("argv", [
    ["way-below", "nowhere", "1", "2"],
    ["way-below", "poset-t", "q", "a"],
    ["counterexample", "--query", "t0"],
    ["derive-si", "chain3", "--fuel", "0"],
    ["suite", "--max-points", "0"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_json_space_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"points": ["x", "y"], "opens": [[], ["y"], ["x", "y"]]}))
    code, out, _ = call("way-below", str(f), "x", "y")
    assert code == 0 and out.strip() == "true"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"points": ["x", "y"], "opens": [[], ["x", "y"]]}))
    assert call("space", "info", str(bad))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "irrtopo", "way-below", "poset-t", "1", "a"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "false"
