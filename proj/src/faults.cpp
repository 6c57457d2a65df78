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


#include "zxft/faults.hpp"

#include <map>

#include "json.hpp"
#include "zxft/error.hpp"
#include "zxft/oracle.hpp"

namespace zxft {

namespace {

void append_spiders(Diagram& d, Pauli p, std::vector<SpiderId>& chain) {
  if (p == Pauli::X || p == Pauli::Y) chain.push_back(d.add_spider(SpiderKind::X, Phase::pi()));
  if (p == Pauli::Z || p == Pauli::Y) chain.push_back(d.add_spider(SpiderKind::Z, Phase::pi()));
}

}  // namespace

Diagram inject(const Diagram& d, const std::vector<PauliFault>& faults) {
  std::map<EdgeId, std::pair<std::vector<Pauli>, std::vector<Pauli>>> by_edge;
  for (const auto& f : faults) {
    if (!d.has_edge(f.edge)) throw IntegrityError("fault on unknown edge " + std::to_string(f.edge));
    if (f.pauli == Pauli::I) continue;
    auto& sides = by_edge[f.edge];
    (f.side_a ? sides.first : sides.second).push_back(f.pauli);
  }
  Diagram out = d;
  for (const auto& [e, sides] : by_edge) {
    const Edge edge = out.edge(e);
    out.remove_edge(e);
    std::vector<SpiderId> near_a, near_b;
    for (Pauli p : sides.first) append_spiders(out, p, near_a);
    for (Pauli p : sides.second) append_spiders(out, p, near_b);
    // A - near_a - (original kind) - near_b (listed from B) - B
    std::vector<Endpoint> path{edge.a};
    for (SpiderId s : near_a) path.push_back(Endpoint::spider(s));
    const std::size_t kind_at = path.size() - 1;
    for (auto it = near_b.rbegin(); it != near_b.rend(); ++it) path.push_back(Endpoint::spider(*it));
    path.push_back(edge.b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      out.add_edge(path[i], path[i + 1], i == kind_at ? edge.kind : EdgeKind::Plain);
  }
  return out;
}

bool flips(const Diagram& d, const PauliFault& f, const PauliWeb& w) {
  const Edge& e = d.edge(f.edge);
  const Highlight h = w.at(d, f.edge, f.side_a ? e.a : e.b);
  switch (f.pauli) {
    case Pauli::X:
      return h.r;
    case Pauli::Z:
      return h.g;
    case Pauli::Y:
      return h.r != h.g;
    case Pauli::I:
      break;
  }
  return false;
}

Syndrome syndrome(const Diagram& d, const std::vector<PauliFault>& faults, const WebBasis& basis) {
  Syndrome s(basis.checks.size(), false);
  for (std::size_t k = 0; k < basis.checks.size(); ++k)
    for (const auto& f : faults)
      if (flips(d, f, basis.checks[k])) s[k] = !s[k];
  return s;
}

Syndrome observed_syndrome(const Diagram& faulted, const WebBasis& basis, std::size_t runs, std::uint64_t seed) {
  const TableauSampler sampler(faulted);
  if (!sampler.feasible()) throw ContractViolation("faulted network has no consistent outcome record");
  const auto records = sampler.run(runs, seed);
  Syndrome s(basis.checks.size(), false);
  for (std::size_t k = 0; k < basis.checks.size(); ++k) {
    const OutcomeExpr& sign = basis.checks[k].sign;
    s[k] = sign.evaluate(records.front());
    for (const auto& r : records)
      if (sign.evaluate(r) != s[k]) throw ContractViolation("check " + std::to_string(k) + " parity is not deterministic");
  }
  return s;
}

std::vector<EdgeCoverage> detectability_map(const Diagram& d, const WebBasis& basis) {
  std::vector<EdgeCoverage> out;
  for (const auto& [id, e] : d.edges()) {
    EdgeCoverage c;
    c.edge = id;
    c.touches_port = e.a.is_port() || e.b.is_port();
    for (const auto& w : basis.checks) {
      const Highlight h = w.get(id);
      c.red_checks += h.r;
      c.green_checks += h.g;
    }
    out.push_back(c);
  }
  return out;
}

CorrelatorFlip correlator_flip(const Diagram& d, const std::vector<PauliFault>& faults, const PauliWeb& web) {
  CorrelatorFlip out;
  for (const auto& f : faults) out.flipped ^= flips(d, f, web);
  out.frame = web.sign;
  return out;
}

std::vector<PauliFault> faults_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", e.what());
  }
  if (!j.is_array()) throw ParseError("", "fault list must be an array");
  std::vector<PauliFault> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& f = j[i];
    const std::string at = "[" + std::to_string(i) + "]";
    if (!f.is_object() || !f.contains("edge") || !f["edge"].is_number_integer())
      throw ParseError(at + ".edge", "missing or non-integer edge");
    PauliFault pf;
    pf.edge = f["edge"].get<int>();
    const std::string side = f.value("side", "a");
    if (side != "a" && side != "b") throw ParseError(at + ".side", "side must be \"a\" or \"b\"");
    pf.side_a = side == "a";
    const std::string p = f.value("pauli", "");
    if (p.size() != 1 || std::string("XYZ").find(p[0]) == std::string::npos)
      throw ParseError(at + ".pauli", "pauli must be X, Y or Z");
    pf.pauli = pauli_from_char(p[0]);
    out.push_back(pf);
  }
  return out;
}

std::string faults_to_json(const std::vector<PauliFault>& faults) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : faults)
    j.push_back({{"edge", f.edge}, {"side", f.side_a ? "a" : "b"}, {"pauli", std::string(1, to_char(f.pauli))}});
  return j.dump();
}

}  // namespace zxft
