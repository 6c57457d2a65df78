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

#include <map>
#include <sstream>

#include "zxft/diagram.hpp"

namespace zxft {

std::string to_dot(const Diagram& d) {
  std::ostringstream out;
  out << "graph zx {\n  node [style=filled];\n";
  for (const auto& [id, s] : d.spiders()) {
    out << "  s" << id << " [shape=circle, fillcolor=" << (s.kind == SpiderKind::Z ? "green" : "red") << ", label=\"";
    if (s.phase.quarter) out << s.phase.quarter << "/2";
    if (s.instrument) out << (s.phase.quarter ? " " : "") << "b:" << s.instrument->to_string();
    out << "\"];\n";
  }
  for (const auto& [id, p] : d.ports()) {
    out << "  p" << id << " [shape=plaintext, style=\"\", label=\"" << (p.label.empty() ? to_string(p.dir) : p.label)
        << "\"];\n";
  }
  for (const auto& [id, e] : d.edges()) {
    out << "  " << e.a.to_string() << " -- " << e.b.to_string();
    if (e.kind == EdgeKind::Hadamard) out << " [color=blue, style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_obj(const Diagram& d) {
  // Vertices for every endpoint with a coordinate; one line element per edge
  // whose endpoints both have coordinates.
  std::ostringstream out;
  out << "# zxft lattice export\n";
  std::map<Endpoint, int> vertex;
  int next = 1;
  auto emit = [&](Endpoint ep, const std::optional<Coord>& c, const std::string& tag) {
    if (!c) return;
    out << "v " << (*c)[0] << ' ' << (*c)[1] << ' ' << (*c)[2] << "  # " << tag << '\n';
    vertex[ep] = next++;
  };
  for (const auto& [id, s] : d.spiders()) emit(Endpoint::spider(id), s.coord, to_string(s.kind));
  for (const auto& [id, p] : d.ports()) emit(Endpoint::port(id), p.coord, "port " + p.label);
  for (int pass = 0; pass < 2; ++pass) {
    out << "g " << (pass ? "hadamard" : "plain") << '\n';
    for (const auto& [id, e] : d.edges()) {
      if ((e.kind == EdgeKind::Hadamard) != (pass == 1)) continue;
      auto a = vertex.find(e.a);
      auto b = vertex.find(e.b);
      if (a == vertex.end() || b == vertex.end() || e.is_loop()) continue;
      out << "l " << a->second << ' ' << b->second << '\n';
    }
  }
  return out.str();
}

}  // namespace zxft
