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
#include <cmath>
#include <numeric>
#include <set>

#include "zxft/oracle.hpp"

namespace zxft {

namespace {

struct Factor {
  std::vector<int> vars;  // sorted; bit i of a table index is vars[i]
  std::vector<cplx> table;
};

constexpr std::size_t kMaxFactorVars = 24;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::size_t var_pos(const std::vector<int>& vars, int v) {
  return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
}

// Product of `fs` over the sorted variable set `all`, then summed over `drop`
// if drop >= 0.
Factor multiply(const std::vector<const Factor*>& fs, const std::vector<int>& all, int drop) {
  if (all.size() > kMaxFactorVars) throw SizeError("dense contraction: intermediate factor too large");
  std::vector<int> keep;
  for (int v : all)
    if (v != drop) keep.push_back(v);
  Factor out{keep, std::vector<cplx>(std::size_t{1} << keep.size(), cplx{0, 0})};
  // Bit masks mapping `all` positions into each factor's index.
  std::vector<std::vector<std::size_t>> pos(fs.size());
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int v : fs[f]->vars) pos[f].push_back(var_pos(all, v));
  std::vector<std::size_t> keep_pos;
  for (int v : keep) keep_pos.push_back(var_pos(all, v));
  const std::size_t n = std::size_t{1} << all.size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    cplx p{1, 0};
    for (std::size_t f = 0; f < fs.size() && p != cplx{0, 0}; ++f) {
      std::size_t sub = 0;
      for (std::size_t i = 0; i < pos[f].size(); ++i) sub |= ((idx >> pos[f][i]) & 1u) << i;
      p *= fs[f]->table[sub];
    }
    std::size_t o = 0;
    for (std::size_t i = 0; i < keep_pos.size(); ++i) o |= ((idx >> keep_pos[i]) & 1u) << i;
    out.table[o] += p;
  }
  return out;
}

}  // namespace

cplx DenseTensor::at(const std::vector<int>& bits) const {
  std::size_t idx = 0;
  for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b & 1);
  return amp.at(idx);
}

bool DenseTensor::is_zero(double tol) const {
  return std::all_of(amp.begin(), amp.end(), [&](cplx c) { return std::abs(c) <= tol; });
}

DenseTensor dense_contract(const Diagram& d, const Assignment& a, const DenseOptions& opt) {
  if (d.port_count() > opt.max_ports)
    throw SizeError("dense contraction limited to " + std::to_string(opt.max_ports) + " ports, diagram has " +
                    std::to_string(d.port_count()));
  std::map<Endpoint, int> index;
  for (const auto& [id, s] : d.spiders()) index.emplace(Endpoint::spider(id), static_cast<int>(index.size()));
  for (const auto& [id, p] : d.ports()) index.emplace(Endpoint::port(id), static_cast<int>(index.size()));
  const int n = static_cast<int>(index.size());

  auto h_count = [&](const Edge& e) {
    int h = e.kind == EdgeKind::Hadamard ? 1 : 0;
    for (Endpoint ep : {e.a, e.b})
      if (ep.is_spider() && d.spider(ep.id).kind == SpiderKind::X) ++h;
    return h;
  };

  UnionFind uf(n);
  for (const auto& [id, e] : d.edges())
    if (h_count(e) % 2 == 0) uf.unite(index.at(e.a), index.at(e.b));

  std::map<int, Factor> unary;
  auto unary_of = [&](int root) -> Factor& {
    auto it = unary.find(root);
    if (it == unary.end()) it = unary.emplace(root, Factor{{root}, {cplx{1, 0}, cplx{1, 0}}}).first;
    return it->second;
  };
  for (const auto& [id, s] : d.spiders()) {
    int k = s.phase.quarter;
    if (s.instrument && s.instrument->evaluate(a)) k += 2;
    if (k % 4 == 0) continue;
    unary_of(uf.find(index.at(Endpoint::spider(id)))).table[1] *= ipow(k);
  }
  std::vector<Factor> factors;
  for (const auto& [id, e] : d.edges()) {
    if (h_count(e) % 2 == 0) continue;
    const int u = uf.find(index.at(e.a));
    const int v = uf.find(index.at(e.b));
    if (u == v) {
      unary_of(u).table[1] *= -1.0;
    } else {
      factors.push_back({{std::min(u, v), std::max(u, v)}, {1, 1, 1, -1}});
    }
  }
  for (auto& [r, f] : unary) factors.push_back(std::move(f));

  std::vector<PortId> ports;
  std::set<int> open;
  for (const auto& [id, p] : d.ports()) {
    ports.push_back(id);
    open.insert(uf.find(index.at(Endpoint::port(id))));
  }
  std::set<int> live;
  for (int v = 0; v < n; ++v) live.insert(uf.find(v));

  // Eliminate every non-open variable; a variable in no factor contributes a
  // factor of 2, which is dropped with the scalar.
  for (;;) {
    std::map<int, std::set<int>> neighbourhood;
    for (const auto& f : factors)
      for (int v : f.vars)
        if (!open.count(v)) neighbourhood[v].insert(f.vars.begin(), f.vars.end());
    if (neighbourhood.empty()) break;
    int pick = -1;
    std::size_t best = SIZE_MAX;
    for (const auto& [v, nb] : neighbourhood) {
      const std::size_t cost = opt.order == ContractionOrder::Greedy ? nb.size() : 0;
      if (cost < best) {
        best = cost;
        pick = v;
      }
      if (opt.order == ContractionOrder::Sequential) break;
    }
    std::vector<const Factor*> with;
    std::vector<Factor> without;
    for (auto& f : factors) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), pick)) {
        with.push_back(&f);
      }
    }
    const auto& nb = neighbourhood[pick];
    Factor merged = multiply(with, std::vector<int>(nb.begin(), nb.end()), pick);
    for (auto& f : factors)
      if (!std::binary_search(f.vars.begin(), f.vars.end(), pick)) without.push_back(std::move(f));
    without.push_back(std::move(merged));
    factors = std::move(without);
  }

  std::vector<int> open_vars(open.begin(), open.end());
  std::vector<const Factor*> all;
  for (const auto& f : factors) all.push_back(&f);
  const Factor final_factor = multiply(all, open_vars, -1);

  DenseTensor t;
  t.ports = ports;
  const std::size_t np = ports.size();
  t.amp.assign(std::size_t{1} << np, cplx{0, 0});
  std::vector<std::size_t> root_pos(np);
  for (std::size_t j = 0; j < np; ++j) root_pos[j] = var_pos(open_vars, uf.find(index.at(Endpoint::port(ports[j]))));
  for (std::size_t idx = 0; idx < t.amp.size(); ++idx) {
    std::size_t sub = 0;
    bool consistent = true;
    std::vector<int> seen(open_vars.size(), -1);
    for (std::size_t j = 0; j < np; ++j) {
      const int bit = static_cast<int>((idx >> (np - 1 - j)) & 1u);
      const std::size_t p = root_pos[j];
      if (seen[p] >= 0 && seen[p] != bit) {
        consistent = false;
        break;
      }
      seen[p] = bit;
      sub |= static_cast<std::size_t>(bit) << p;
    }
    if (consistent) t.amp[idx] = final_factor.table[sub];
  }
  return t;
}

bool proportional(const DenseTensor& a, const DenseTensor& b, double tol) {
  if (a.amp.size() != b.amp.size()) return false;
  std::size_t m = 0;
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    if (std::abs(a.amp[i]) > ma) {
      ma = std::abs(a.amp[i]);
      m = i;
    }
    mb = std::max(mb, std::abs(b.amp[i]));
  }
  if (ma == 0 || mb == 0) return ma == 0 && mb == 0;
  const cplx c = b.amp[m] / a.amp[m];
  if (std::abs(c) * ma < tol * mb) return false;
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    if (std::abs(b.amp[i] - c * a.amp[i]) > tol * mb) return false;
  }
  return true;
}

std::vector<Assignment> assignments_to_test(const Diagram& d, std::uint64_t seed, std::size_t samples) {
  std::vector<VarId> vars;
  for (const auto& [id, v] : d.outcome_vars()) vars.push_back(id);
  std::vector<Assignment> out;
  if (vars.size() <= 10) {
    for (std::size_t m = 0; m < (std::size_t{1} << vars.size()); ++m) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (m >> i) & 1u;
      out.push_back(a);
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Assignment a;
    for (auto v : vars) a[v] = rng() & 1u;
    out.push_back(a);
  }
  return out;
}

namespace {

// Reorders b's amplitudes so its ports line up with a's by label.
std::optional<std::vector<std::size_t>> port_permutation(const Diagram& a, const Diagram& b) {
  if (a.port_count() != b.port_count()) return std::nullopt;
  std::map<std::string, std::size_t> pos_b;
  std::size_t j = 0;
  for (const auto& [id, p] : b.ports()) pos_b[p.label] = j++;
  if (pos_b.size() != b.port_count()) return std::nullopt;
  std::vector<std::size_t> perm;
  for (const auto& [id, p] : a.ports()) {
    auto it = pos_b.find(p.label);
    if (it == pos_b.end()) return std::nullopt;
    perm.push_back(it->second);
  }
  return perm;
}

DenseTensor permute(const DenseTensor& t, const std::vector<std::size_t>& perm) {
  // Result port j is input port perm[j].
  const std::size_t n = perm.size();
  DenseTensor out;
  out.amp.assign(t.amp.size(), cplx{0, 0});
  for (std::size_t j = 0; j < n; ++j) out.ports.push_back(t.ports[perm[j]]);
  for (std::size_t idx = 0; idx < t.amp.size(); ++idx) {
    std::size_t src = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t bit = (idx >> (n - 1 - j)) & 1u;
      src |= bit << (n - 1 - perm[j]);
    }
    out.amp[idx] = t.amp[src];
  }
  return out;
}

}  // namespace

bool equivalent(const Diagram& a, const Diagram& b, std::uint64_t seed, double tol) {
  const auto perm = port_permutation(a, b);
  if (!perm) return false;
  Diagram both_vars = a;
  for (const auto& [id, v] : b.outcome_vars())
    if (!both_vars.outcome_vars().count(id)) both_vars.insert_outcome_var(v);
  for (const auto& asg : assignments_to_test(both_vars, seed)) {
    const DenseTensor ta = dense_contract(a, asg);
    const DenseTensor tb = permute(dense_contract(b, asg), *perm);
    if (!proportional(ta, tb, tol)) return false;
  }
  return true;
}

bool verify_clifford(const PauliWeb& w, const Diagram& d, double tol) {
  if (!verify(w, d).empty()) return false;
  std::vector<Highlight> ops;
  for (const auto& [id, p] : d.ports()) ops.push_back(w.at(d, p.edges.front(), Endpoint::port(id)));
  const std::size_t n = ops.size();
  for (const auto& asg : assignments_to_test(d)) {
    const DenseTensor t = dense_contract(d, asg);
    double scale = 0;
    for (auto c : t.amp) scale = std::max(scale, std::abs(c));
    if (scale == 0) continue;
    const double s = w.sign.evaluate(asg) ? -1.0 : 1.0;
    for (std::size_t idx = 0; idx < t.amp.size(); ++idx) {
      // (S T)[b] = (-1)^{sum_j r_j (b_j ^ g_j)} T[b ^ g]
      std::size_t src = idx;
      int parity = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << (n - 1 - j);
        if (ops[j].g) src ^= bit;
        if (ops[j].r && (src & bit)) parity ^= 1;
      }
      const cplx st = (parity ? -1.0 : 1.0) * t.amp[src];
      if (std::abs(st - s * t.amp[idx]) > tol * scale) return false;
    }
  }
  return true;
}

}  // namespace zxft
