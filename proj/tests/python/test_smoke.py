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
import math

import pytest

import mdmin


def test_point_conversions():
    p = mdmin.Point(1.5, -2.0)
    assert tuple(p) == (1.5, -2.0)
    n = mdmin.Network.polyline([(0, 0), (3, 4)])
    assert n.length() == pytest.approx(5.0)


def test_network_json_round_trip():
    n = mdmin.Network.polyline([(0.1, 1 / 3), (2 / 7, 5.0), (math.pi, math.e)])
    back = mdmin.Network.from_json(n.to_json())
    assert back == n


def test_model_json_round_trip():
    for m in [mdmin.CompactSetModel.circle((0.1, 0.2), 1 / 3),
              mdmin.CompactSetModel.rectangle((0, 0), 2, 1),
              mdmin.CompactSetModel.stadium((0, 0), 1, 3),
              mdmin.CompactSetModel.polyline([(0, 0), (1, 0), (1, 1)], False),
              mdmin.CompactSetModel.finite([(0, 0), (4, 0)])]:
        assert mdmin.CompactSetModel.from_json(m.to_json()) == m


def test_bad_json_raises_input_error():
    with pytest.raises(mdmin.InputError):
        mdmin.Network.from_json("{\"vertices\": [[0, 0]], \"edges\": [[0, 3]]}")
    with pytest.raises(ValueError):
        mdmin.CompactSetModel.from_json("{\"type\": \"blob\"}")


def test_energy_and_coverage():
    s = mdmin.sample(mdmin.CompactSetModel.circle((0, 0), 1.0), 0.01)
    rep = mdmin.energy(s, mdmin.Network.single((0, 0)))
    assert rep.value == pytest.approx(1.0)
    assert mdmin.covered(s, mdmin.Network.single((0, 0)), 1.0)


def test_bounds():
    assert mdmin.minkowski_volume_upper(0, 1, 2).value == pytest.approx(math.pi)
    assert mdmin.lower_bound_perimeter(2 * math.pi, 0.2).value == pytest.approx(0.8 * math.pi)
    assert mdmin.lower_bound_volume(4, 0.1, 2).value == pytest.approx((4 - 0.01 * math.pi) / 0.2)


def test_constructions_and_checks():
    h = mdmin.horseshoe(mdmin.CompactSetModel.circle((0, 0), 1.0), 0.2)
    assert h.name == "horseshoe"
    assert mdmin.full_check_suite(h.network, h.m, 0.2).passed()
    rect = mdmin.rectangle_candidate(2, 1, 0.01)
    assert len(rect.network.edges) == 21
    payload = json.loads(rect.to_json())
    assert payload["name"] == "rectangle"


def test_solvers():
    rep = mdmin.solve_finite([(0, 0), (4, 0)], 1.0)
    assert rep.length == pytest.approx(2.0, abs=1e-6)
    sq = mdmin.solve_finite([(0, 0), (1, 0), (1, 1), (0, 1)], 0.02)
    assert len(sq.co_optimal) == 2
    opt = mdmin.SolverOptions()
    opt.schedule = [0.02, 0.004]
    dual = mdmin.solve_dual(mdmin.CompactSetModel.circle((0, 0), 1.0), 0.2, opt)
    assert dual.converged
    assert abs(dual.length - 4.79694713776993) < 1e-2
    assert json.loads(dual.to_json())["mode"] == "dual"


def test_render_svg():
    h = mdmin.horseshoe(mdmin.CompactSetModel.circle((0, 0), 1.0), 0.2)
    svg = mdmin.render_svg(h.network, h.m, 0.2)
    assert svg.count('<g id="network"') == 1
    assert svg == mdmin.render_svg(h.network, h.m, 0.2)
