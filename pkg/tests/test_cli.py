import io
import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from flexrig.cli import load_graph, run
from flexrig.graph import catalog

C4_LIST = """[NAC-coloring with red edges [[0, 1], [0, 3]] and blue edges [[1, 2], [2, 3]],
 NAC-coloring with red edges [[0, 1], [1, 2]] and blue edges [[0, 3], [2, 3]],
 NAC-coloring with red edges [[0, 1], [2, 3]] and blue edges [[0, 3], [1, 2]]]
"""

C4_CLASSES = """[[alpha1: NAC-coloring with red edges [[0, 1], [0, 3]] and blue edges [[1, 2], [2, 3]],
  alpha2: NAC-coloring with red edges [[0, 1], [1, 2]] and blue edges [[0, 3], [2, 3]]],
 [beta: NAC-coloring with red edges [[0, 1], [2, 3]] and blue edges [[0, 3], [1, 2]]]]
"""


def flexrig(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_nac_list_c4():
    assert flexrig("nac", "list", "catalog:C4") == (0, C4_LIST, "")


def test_nac_list_from_stdin():
    code, out, _ = flexrig("nac", "list", "-", stdin='{"edges": [[0,1],[1,2],[2,3],[0,3]]}')
    assert code == 0 and out == C4_LIST


def test_nac_classes_c4():
    assert flexrig("nac", "classes", "catalog:C4")[1] == C4_CLASSES
    names = flexrig("nac", "list", "catalog:C4", "--names")[1]
    assert names.startswith("[alpha1: NAC-coloring") and "\n beta: " in names


def test_nac_list_json():
    code, out, _ = flexrig("nac", "list", "catalog:ThreePrism", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1
    assert len(data[0]["red"]) == 6 and len(data[0]["blue"]) == 3


def test_nac_check():
    assert flexrig("nac", "check", "catalog:Diamond")[:2] == (0, "False\n")
    assert flexrig("nac", "check", "catalog:C4", "--red", "[[0,1],[0,3]]")[1] == "True\n"
    assert flexrig("nac", "check", "catalog:C4", "--red", "[[0,1]]")[1] == "False\n"
    assert flexrig("nac", "check", "catalog:C4", "--red", "[[0,2]]")[0] == 2
    assert flexrig("nac", "check", "catalog:C4", "--red", "[[0,")[0] == 1


def test_motion_grid_prism():
    code, out, _ = flexrig("motion", "grid", "catalog:ThreePrism", "--nac", "0", "--display", "trig")
    assert code == 0
    assert out.splitlines()[1] == " 1: (sin(alpha) + 1, cos(alpha)),"


def test_motion_grid_svg(tmp_path):
    path = tmp_path / "3-prism_grid.svg"
    code, _, _ = flexrig("motion", "grid", "catalog:ThreePrism", "--svg", str(path), "--frames", "12")
    assert code == 0
    root = ET.parse(path).getroot()
    lines = root.findall(".//{http://www.w3.org/2000/svg}line")
    assert len(lines) == 9 and all(len(l) == 4 for l in lines)


def test_motion_grid_zigzag(tmp_path):
    code, out, err = flexrig("motion", "grid", "catalog:ThreePrism", "--check", "--zigzag",
                             "[[[0,0], [3/4,1/2], [2,0]], [[0,0], [1,0]]]", "--svg", str(tmp_path / "z.svg"))
    assert code == 0, err
    assert out.endswith("flex: True, nontrivial: True, proper: True\n")
    code, _, err = flexrig("motion", "grid", "catalog:ThreePrism", "--zigzag", "[[[0,0],[1,0]], [[0,0]]]")
    assert code == 3 and "infeasible" in err


def test_motion_spatial_q1():
    code, out, _ = flexrig("motion", "spatial", "catalog:Q1", "--fix-edge", "5,6")
    assert code == 0
    assert out.splitlines()[-3:] == [" 5: (0, 0),", " 6: (2, 0),", " 7: (1, 0)}"]
    code, out, _ = flexrig("motion", "spatial", "catalog:Q1", "--pair", "3,7", "--fix-edge", "5,6")
    assert out.startswith("{1: ((3*t^2 - 3)/(t^2 + 1), -6*t/(t^2 + 1)),")


def test_motion_spatial_json_is_exact():
    code, out, _ = flexrig("motion", "spatial", "catalog:C4", "--json", "--coupling", "1/2")
    data = json.loads(out)
    assert code == 0 and data["parameter"] == "t"
    assert all(isinstance(c, list) and len(c) == 2 for p in data["vertices"].values()
               for c in p["x"]["num"])


@pytest.mark.parametrize("argv", [
    ("motion", "grid", "catalog:K4"),
    ("motion", "grid", "catalog:C4", "--nac", "7"),
    ("motion", "spatial", "catalog:ThreePrism"),
    ("motion", "spatial", "catalog:C4", "--pair", "0,0"),
    ("motion", "spatial", "catalog:C4", "--coupling", "1"),
    ("motion", "grid", "catalog:C4", "--fix-edge", "0,2"),
])
def test_infeasible_requests_exit_3(argv):
    code, out, err = flexrig(*argv)
    assert code == 3 and out == "" and err.startswith("flexrig: infeasible")


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("nac",),
    ("motion", "grid", "catalog:C4", "--frames", "1"),
    ("motion", "grid", "catalog:C4", "--display", "polar"),
    ("motion", "spatial", "catalog:Q1", "--pair", "1"),
    ("motion", "grid", "catalog:C4", "--zigzag", "[[0,0]]"),
])
def test_usage_errors_exit_1(argv, capsys):
    assert flexrig(*argv)[0] == 1


@pytest.mark.parametrize("source", ["catalog:Petersen", "int:x:3", "int:64:4", "no-such-file.json"])
def test_bad_graphs_exit_2(source):
    code, _, err = flexrig("graph", "info", source)
    assert code == 2 and "invalid input" in err


def test_bad_json_graph(tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"edges": [[0, 0]]}')
    assert flexrig("nac", "list", str(path))[0] == 2


def test_unwritable_output(tmp_path):
    code, _, err = flexrig("motion", "grid", "catalog:ThreePrism", "--svg", str(tmp_path / "nope" / "p.svg"))
    assert code == 2 and "cannot write" in err


def test_movable_and_cdc():
    assert flexrig("movable", "catalog:Diamond") == (0, "NotMovable: no NAC-coloring\n", "")
    assert flexrig("movable", "catalog:ThreePrism")[1].startswith("Movable: injective grid\n")
    out = flexrig("movable", "catalog:Q1")[1]
    assert out.startswith("Movable: spatial embedding\n") and out.count("NAC-coloring with") == 2
    out = flexrig("cdc", "catalog:Diamond")[1]
    assert out.splitlines()[0] == "stage 0: U = [[0, 1]]" and out.endswith("complete: True\n")
    data = json.loads(flexrig("cdc", "catalog:C4", "--json")[1])
    assert data == {"stages": [{"added": []}], "complete": False}


def test_movable_disconnected():
    code, _, err = flexrig("movable", "-", stdin='{"edges": [[0, 1], [2, 3]]}')
    assert code == 3


def test_graph_info_and_int_source():
    code, out, _ = flexrig("graph", "info", "int:7:3")
    assert code == 0
    assert out.splitlines()[0] == "FlexGraph with the vertices [0, 1, 2] and edges [(0, 1), (0, 2), (1, 2)]"
    assert "automorphisms: 6" in out
    assert "integer encoding: 7" in out


@pytest.mark.parametrize("name", ["C4", "Q1", "ThreePrism", "CompleteBipartite(2,3)", "Diamond"])
def test_graph_json_roundtrip(tmp_path, name):
    code, out, _ = flexrig("catalog", name, "--json")
    path = tmp_path / "g.json"
    path.write_text(out)
    assert load_graph(str(path)) == catalog(name)
    assert json.loads(flexrig("graph", "info", str(path), "--json")[1]) == json.loads(out)


def test_catalog_listing():
    out = flexrig("catalog")[1].split()
    assert "Q1" in out and "ThreePrism" in out


@pytest.mark.parametrize("argv", [("nac", "classes", "catalog:Q1"), ("motion", "spatial", "catalog:Q1"),
                                  ("movable", "catalog:Q1"), ("cdc", "catalog:Q1", "--json")])
def test_output_is_deterministic(argv):
    assert flexrig(*argv) == flexrig(*argv)


def test_console_entry_point(tmp_path):
    env = dict(os.environ, PYTHONHASHSEED="random")
    runs = [subprocess.run([sys.executable, "-m", "flexrig", "nac", "list", "catalog:C4"],
                           capture_output=True, text=True, env=env) for _ in range(2)]
    assert runs[0].returncode == 0 and runs[0].stdout == C4_LIST
    assert runs[0].stdout == runs[1].stdout
    bad = subprocess.run([sys.executable, "-m", "flexrig", "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 1 and bad.stderr
