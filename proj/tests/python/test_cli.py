# Copyright 2026 The mdmin Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

import pytest

CLI = os.environ.get("MDMIN_CLI", "mdmin")


def run(*args, cwd):
    return subprocess.run([CLI, *map(str, args)], cwd=cwd, capture_output=True, text=True)


def write(path, obj):
    path.write_text(json.dumps(obj))
    return path


@pytest.fixture
def tmp(tmp_path):
    return tmp_path


def test_solve_dual_circle(tmp):
    prob = write(tmp / "p.json", {"m": {"type": "circle", "center": [0, 0], "radius": 1},
                                  "mode": "dual", "r": 0.2,
                                  "solver": {"schedule": [0.02, 0.004]},
                                  "output": {"report": "rep.json", "svg": "sol.svg"}})
    res = run("solve", prob, cwd=tmp)
    assert res.returncode == 0, res.stderr
    rep = json.loads((tmp / "rep.json").read_text())
    assert abs(rep["length"] - 4.79694713776993) < 1e-2
    svg = (tmp / "sol.svg").read_text()
    assert svg.count("<path") >= len(rep["network"]["edges"])


def test_solve_primal_two_points(tmp):
    prob = write(tmp / "p.json", {"m": {"type": "points", "points": [[0, 0], [4, 0]]},
                                  "mode": "primal", "l": 2})
    res = run("solve", prob, "--report", "rep.json", cwd=tmp)
    assert res.returncode == 0, res.stderr
    rep = json.loads((tmp / "rep.json").read_text())
    assert abs(rep["r"] - 1.0) <= 4e-6


def test_solve_non_converged_exit_code(tmp):
    prob = write(tmp / "p.json", {"m": {"type": "circle", "center": [0, 0], "radius": 1},
                                  "mode": "dual", "r": 0.2,
                                  "solver": {"schedule": [0.02], "max_rounds": 1,
                                             "max_polish_passes": 1, "refine_factor": 1}})
    res = run("solve", prob, "--report", "rep.json", cwd=tmp)
    assert res.returncode == 2
    assert json.loads((tmp / "rep.json").read_text())["converged"] is False


def test_malformed_inputs_exit_one(tmp):
    (tmp / "bad.json").write_text("{bad")
    assert run("solve", "bad.json", cwd=tmp).returncode == 1
    write(tmp / "nomode.json", {"m": {"type": "circle", "center": [0, 0], "radius": 1}})
    assert run("solve", "nomode.json", cwd=tmp).returncode == 1
    assert run("solve", "missing.json", cwd=tmp).returncode == 1
    assert run("construct", "bogus", cwd=tmp).returncode == 1
    assert run("construct", "rectangle", "--r", "0.5", cwd=tmp).returncode == 1
    assert run("frobnicate", cwd=tmp).returncode == 1


def test_construct_rectangle(tmp):
    res = run("construct", "rectangle", "--a", 2, "--b", 1, "--r", 0.01, "--out", "rect.json", cwd=tmp)
    assert res.returncode == 0, res.stderr
    rect = json.loads((tmp / "rect.json").read_text())
    assert len(rect["network"]["edges"]) == 21


def test_construct_corner_example_files(tmp):
    res = run("construct", "corner-example", "--R", 1, "--r", 0.01, "--N", 100, "--k", 12,
              "--out", "ce.json", "--m-out", "ce_m.json", cwd=tmp)
    assert res.returncode == 0, res.stderr
    ce = json.loads((tmp / "ce.json").read_text())
    m = json.loads((tmp / "ce_m.json").read_text())
    assert len(ce["network"]["vertices"]) == 12
    assert m["type"] == "points" and len(m["points"]) == 13


def test_construct_horseshoe_svg(tmp):
    res = run("construct", "horseshoe", "--R", 1, "--r", 0.2, "--out", "h.json", "--svg", "h.svg", cwd=tmp)
    assert res.returncode == 0, res.stderr
    h = json.loads((tmp / "h.json").read_text())
    svg = (tmp / "h.svg").read_text()
    net_group = svg.split('<g id="network"')[1].split("</g>")[0]
    assert net_group.count("<path") == len(h["network"]["edges"])
    for layer in ("balls", "model", "network"):
        assert f'<g id="{layer}"' in svg


def test_check_rectangle_passes(tmp):
    run("construct", "rectangle", "--a", 2, "--b", 1, "--r", 0.01, "--out", "rect.json",
        "--m-out", "m.json", cwd=tmp)
    rect = json.loads((tmp / "rect.json").read_text())
    write(tmp / "n.json", rect["network"])
    res = run("check", "n.json", "m.json", "--r", 0.01, "--out", "chk.json", cwd=tmp)
    assert res.returncode == 0, (tmp / "chk.json").read_text()
    assert json.loads((tmp / "chk.json").read_text())["passed"] is True


def test_check_triangle_cycle_fails(tmp):
    write(tmp / "n.json", {"vertices": [[0, 0], [1, 0], [0.5, 0.8]], "edges": [[0, 1], [1, 2], [2, 0]]})
    write(tmp / "m.json", {"type": "points", "points": [[0, 0], [1, 0], [0.5, 0.8]]})
    res = run("check", "n.json", "m.json", "--r", 0.1, "--out", "chk.json", cwd=tmp)
    assert res.returncode == 2
    chk = json.loads((tmp / "chk.json").read_text())
    assert any(i["name"] == "tree" and not i["passed"] for i in chk["items"])


def test_check_right_angle_fails(tmp):
    write(tmp / "n.json", {"vertices": [[1, 0], [0, 0], [0, 1]], "edges": [[0, 1], [1, 2]]})
    write(tmp / "m.json", {"type": "points", "points": [[-0.1, -0.1], [1.1, 0], [0, 1.1]]})
    res = run("check", "n.json", "m.json", "--r", 0.1414213562373095, "--out", "chk.json", cwd=tmp)
    assert res.returncode == 2
    chk = json.loads((tmp / "chk.json").read_text())
    failed = {i["name"] for i in chk["items"] if not i["passed"]}
    assert "min_angle" in failed


def test_bounds_subcommand(tmp):
    write(tmp / "m.json", {"type": "circle", "center": [0, 0], "radius": 1})
    res = run("bounds", "m.json", "--r", 0.2, cwd=tmp)
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert abs(out["lower_bound_perimeter"]["value"] - 0.8 * 3.141592653589793) < 1e-12


def test_render_byte_stable(tmp):
    run("construct", "tripod", "--r", 0.05, "--out", "t.json", "--m-out", "m.json", cwd=tmp)
    write(tmp / "n.json", json.loads((tmp / "t.json").read_text())["network"])
    a = run("render", "n.json", "--model", "m.json", "--r", 0.05, "--energetic", cwd=tmp)
    b = run("render", "n.json", "--model", "m.json", "--r", 0.05, "--energetic", cwd=tmp)
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    assert '<g id="energetic"' in a.stdout


def test_check_accepts_construction_document(tmp):
    res = run("construct", "horseshoe", "--R", 1, "--r", 0.2, "--out", "h.json", "--m-out", "m.json", cwd=tmp)
    assert res.returncode == 0, res.stderr
    res = run("check", "h.json", "m.json", "--r", 0.2, cwd=tmp)
    assert res.returncode == 0, res.stdout
    assert json.loads(res.stdout)["passed"]
