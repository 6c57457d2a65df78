// Copyright 2026 The zxft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <queue>

#include "zxft/builders.hpp"

namespace zxft {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::CBQC:
      return "cbqc";
    case Flavor::MBQC:
      return "mbqc";
    case Flavor::FBQC:
      return "fbqc";
    case Flavor::FloBQC:
      return "flobqc";
  }
  return "?";
}

Flavor flavor_from_string(const std::string& s) {
  for (Flavor f : {Flavor::CBQC, Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC})
    if (to_string(f) == s) return f;
  throw ParseError("flavor", "unknown flavor '" + s + "'");
}

void check_spec(const PatchSpec& spec) {
  if (spec.d < 2) throw ContractViolation("patch distance must be at least 2");
  if (spec.rounds < 1) throw ContractViolation("patch needs at least one round");
}

namespace {
int mod2(int v) { return ((v % 2) + 2) % 2; }
}  // namespace

int PatchGeometry::odd_count(const Point& p) { return mod2(p[0]) + mod2(p[1]) + mod2(p[2]); }

std::array<int, 2> PatchGeometry::axes(const Point& p) {
  const int k = odd_count(p);
  std::array<int, 2> out{};
  int n = 0;
  for (int a = 0; a < 3 && n < 2; ++a) {
    const bool odd = mod2(p[a]) == 1;
    if ((k == 1 && !odd) || (k == 2 && odd)) out[n++] = a;
  }
  return out;
}

PatchGeometry::PatchGeometry(const PatchSpec& spec) : spec_(spec) {
  check_spec(spec);
  const int d = spec.d;
  z0_ = spec.z_first ? 0 : 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) data_xy_.insert(data_xy(i, j));
  for (int i = -1; i <= d - 1; ++i) {
    for (int j = -1; j <= d - 1; ++j) {
      const char type = ((i + j) & 1) == 0 ? 'Z' : 'X';
      const bool row_in = i >= 0 && i <= d - 2;
      const bool col_in = j >= 0 && j <= d - 2;
      bool exists;
      if (row_in && col_in) {
        exists = true;
      } else if (col_in) {
        exists = type == 'X';  // top or bottom row
      } else if (row_in) {
        exists = type == 'Z';  // left or right column
      } else {
        exists = false;
      }
      if (!exists) continue;
      Plaquette p;
      p.i = i;
      p.j = j;
      p.type = type;
      p.x = i + j + 1;
      p.y = i - j + 2 * d - 1;
      for (auto [di, dj] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
        const int a = i + di, b = j + dj;
        if (a >= 0 && a < d && b >= 0 && b < d) p.data.emplace_back(a, b);
      }
      plaquettes_.push_back(p);
    }
  }
  for (int z = first_z(); z <= last_z(); ++z) {
    for (const auto& [x, y] : data_xy_) points_.push_back({x, y, z});
    for (const auto& p : plaquettes_) {
      if ((p.type == 'Z') == (mod2(z) == 0)) points_.push_back({p.x, p.y, z});
    }
  }
  std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) {
    return std::tie(a[2], a[0], a[1]) < std::tie(b[2], b[0], b[1]);
  });
  point_set_.insert(points_.begin(), points_.end());
}

bool PatchGeometry::is_data(const Point& p) const { return data_xy_.count({p[0], p[1]}) != 0; }

std::vector<Point> Cell::points() const {
  std::vector<Point> out;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dz = -1; dz <= 1; ++dz) {
        const int nz = (dx != 0) + (dy != 0) + (dz != 0);
        if (nz == 1 || nz == 2) out.push_back({center[0] + dx, center[1] + dy, center[2] + dz});
      }
  return out;
}

std::vector<Cell> cells(const PatchGeometry& g) {
  std::vector<Cell> out;
  for (const auto& p : g.plaquettes()) {
    for (int z = g.first_z(); z + 2 <= g.last_z(); ++z) {
      const bool z_layer = mod2(z) == 0;
      if ((p.type == 'Z') != z_layer) continue;
      out.push_back({p.type, {p.x, p.y, z + 1}});
    }
  }
  return out;
}

bool complete(const PatchGeometry& g, const Cell& c) {
  for (const auto& p : c.points())
    if (!g.has(p)) return false;
  return true;
}

std::map<SpiderId, int> components_without_gadgets(const Diagram& d, const LatticeMeta& meta) {
  std::map<SpiderId, int> comp;
  int next = 0;
  for (const auto& [id, s] : d.spiders()) {
    if (meta.gadget_spiders.count(id) || comp.count(id)) continue;
    std::queue<SpiderId> q;
    q.push(id);
    comp[id] = next;
    while (!q.empty()) {
      const SpiderId u = q.front();
      q.pop();
      for (auto e : d.spider(u).edges) {
        const Endpoint o = d.edge(e).other(Endpoint::spider(u));
        if (!o.is_spider() || meta.gadget_spiders.count(o.id) || comp.count(o.id)) continue;
        comp[o.id] = next;
        q.push(o.id);
      }
    }
    ++next;
  }
  return comp;
}

std::set<EdgeId> bulk_edges(const Diagram& d, const LatticeMeta& meta) {
  const PatchGeometry g(meta.spec);
  auto inner = [&](const Endpoint& e) {
    if (!e.is_spider() || d.touches_port(e.id)) return false;
    const Point p = meta.point.at(e.id);
    if (p[2] == g.first_z() || p[2] == g.last_z()) return false;
    for (int axis : PatchGeometry::axes(p))
      for (int step : {-1, 1}) {
        Point q = p;
        q[axis] += step;
        if (!g.has(q)) return false;
      }
    return true;
  };
  std::set<EdgeId> out;
  for (const auto& [id, e] : d.edges())
    if (inner(e.a) && inner(e.b)) out.insert(id);
  return out;
}

}  // namespace zxft
