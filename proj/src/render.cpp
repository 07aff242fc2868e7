// Copyright 2026 The mdmin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdmin/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace mdmin {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Frame {
  double scale = 1.0;
  Point lo;
  double height = 0.0;
  double margin = 0.0;

  Point map(Point p) const {
    return {margin + scale * (p.x - lo.x), height - margin - scale * (p.y - lo.y)};
  }
};

void extend(Point p, Point& lo, Point& hi) {
  lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
  hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
}

std::string xy(const Frame& f, Point p) {
  const Point q = f.map(p);
  return fmt(q.x) + " " + fmt(q.y);
}

}  // namespace

void RenderSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0) || !(margin >= 0.0) || 2.0 * margin >= std::min(width, height)) {
    throw std::invalid_argument("RenderSpec: dimensions must be positive and exceed twice the margin");
  }
  if (!(network_stroke > 0.0) || !(model_stroke > 0.0)) {
    throw std::invalid_argument("RenderSpec: stroke widths must be positive");
  }
}

std::string render_svg(const RenderInput& in, const RenderSpec& spec) {
  spec.validate();
  const double r = in.r.value_or(0.0);
  const double inf = std::numeric_limits<double>::infinity();
  Point lo{inf, inf}, hi{-inf, -inf};
  Network model_net;
  if (in.m) {
    if (in.m->kind == ModelKind::kPoints) {
      for (Point p : in.m->points) {
        extend(p - Point{r, r}, lo, hi);
        extend(p + Point{r, r}, lo, hi);
      }
    } else {
      model_net = model_network(*in.m, 1e-4 * std::max(diameter_scale(*in.m), 1e-12));
      for (Point p : model_net.vertices()) extend(p, lo, hi);
    }
  }
  if (in.network) {
    for (Point p : in.network->vertices()) extend(p, lo, hi);
  }
  if (in.energetic) {
    for (const auto& e : in.energetic->points) {
      for (Point y : e.witnesses) {
        extend(y - Point{r, r}, lo, hi);
        extend(y + Point{r, r}, lo, hi);
      }
    }
  }
  if (lo.x > hi.x) lo = hi = {0, 0};
  const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  Frame f;
  f.scale = std::min(spec.width, spec.height) - 2.0 * spec.margin;
  f.scale /= span;
  f.lo = lo;
  f.height = spec.height;
  f.margin = spec.margin;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(spec.width) +
       "\" height=\"" + fmt(spec.height) + "\" viewBox=\"0 0 " + fmt(spec.width) + " " + fmt(spec.height) + "\">\n";

  if (spec.show_balls && in.r && r > 0.0) {
    s += "<g id=\"balls\" fill=\"#4a90d9\" fill-opacity=\"0.12\" stroke=\"#4a90d9\" stroke-width=\"0.5\">\n";
    std::vector<Point> centers;
    if (in.m && in.m->kind == ModelKind::kPoints) {
      centers = in.m->points;
    } else if (in.energetic) {
      for (const auto& e : in.energetic->points) centers.insert(centers.end(), e.witnesses.begin(), e.witnesses.end());
    }
    for (Point c : centers) {
      const Point q = f.map(c);
      s += "<circle cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) + "\" r=\"" + fmt(f.scale * r) + "\"/>\n";
    }
    s += "</g>\n";
  }
  if (spec.show_model && in.m) {
    s += "<g id=\"model\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + fmt(spec.model_stroke) + "\">\n";
    if (in.m->kind == ModelKind::kPoints) {
      for (Point p : in.m->points) {
        const Point q = f.map(p);
        s += "<circle cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) + "\" r=\"" + fmt(2.0 * spec.model_stroke) +
             "\" fill=\"#333333\"/>\n";
      }
    } else {
      for (const Edge& e : model_net.edges()) {
        s += "<path d=\"M " + xy(f, model_net.vertex(e.first)) + " L " + xy(f, model_net.vertex(e.second)) + "\"/>\n";
      }
    }
    s += "</g>\n";
  }
  if (spec.show_network && in.network) {
    s += "<g id=\"network\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" + fmt(spec.network_stroke) +
         "\" stroke-linecap=\"round\">\n";
    for (const Edge& e : in.network->edges()) {
      s += "<path d=\"M " + xy(f, in.network->vertex(e.first)) + " L " + xy(f, in.network->vertex(e.second)) +
           "\"/>\n";
    }
    if (in.network->num_edges() == 0 && !in.network->empty()) {
      const Point q = f.map(in.network->vertex(0));
      s += "<circle cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) + "\" r=\"" + fmt(spec.network_stroke) +
           "\" fill=\"#c0392b\"/>\n";
    }
    s += "</g>\n";
  }
  if (spec.show_correspondences && in.energetic) {
    s += "<g id=\"correspondences\" stroke=\"#27ae60\" stroke-width=\"0.5\" stroke-dasharray=\"2 2\">\n";
    for (const auto& e : in.energetic->points) {
      for (Point y : e.witnesses) s += "<path d=\"M " + xy(f, e.x) + " L " + xy(f, y) + "\"/>\n";
    }
    s += "</g>\n";
  }
  if (spec.show_energetic && in.energetic) {
    s += "<g id=\"energetic\">\n";
    for (const auto& e : in.energetic->points) {
      const Point q = f.map(e.x);
      s += "<circle cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) + "\" r=\"3.000000\" fill=\"" +
           (e.isolated ? "#8e44ad" : "#f39c12") + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace mdmin
