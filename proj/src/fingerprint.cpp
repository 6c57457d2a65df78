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
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>

#include "zxft/diagram.hpp"

namespace zxft {

namespace {

// Colored multigraph over spiders and ports. Canonical labeling is computed by
// color refinement plus individualization, keeping the smallest certificate
// over all leaves of the search tree. Worst case is exponential; the leaf
// budget turns that into a SizeError.
struct Graph {
  std::vector<std::string> label;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge kind)
  std::vector<std::tuple<int, int, int>> edges;
};

constexpr std::size_t kLeafBudget = 20000;

Graph build_graph(const Diagram& d) {
  Graph g;
  std::map<Endpoint, int> index;
  for (const auto& [id, s] : d.spiders()) {
    index[Endpoint::spider(id)] = static_cast<int>(g.label.size());
    int loops[2] = {0, 0};
    for (auto e : s.edges) {
      const Edge& ed = d.edge(e);
      if (ed.is_loop()) ++loops[ed.kind == EdgeKind::Hadamard];
    }
    g.label.push_back("S" + to_string(s.kind) + std::to_string(s.phase.quarter) + "/" +
                      std::to_string(loops[0] / 2) + "/" + std::to_string(loops[1] / 2));
  }
  for (const auto& [id, p] : d.ports()) {
    index[Endpoint::port(id)] = static_cast<int>(g.label.size());
    g.label.push_back("P" + to_string(p.dir) + ":" + p.label);
  }
  g.adj.resize(g.label.size());
  for (const auto& [id, e] : d.edges()) {
    if (e.is_loop()) continue;
    const int a = index.at(e.a);
    const int b = index.at(e.b);
    const int k = e.kind == EdgeKind::Hadamard ? 1 : 0;
    g.adj[a].emplace_back(b, k);
    g.adj[b].emplace_back(a, k);
    g.edges.emplace_back(a, b, k);
  }
  return g;
}

// Replaces colors by dense ranks of (old color, sorted neighbour colors) until stable.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const std::size_t n = color.size();
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(g.adj[v].size());
      for (auto [u, k] : g.adj[v]) nb.push_back(2 * color[u] + k);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), color[v]);
      sig[v] = {std::move(nb), static_cast<int>(v)};
    }
    std::vector<int> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next(n);
    int rank = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]].first != sig[order[i - 1]].first) ++rank;
      next[order[i]] = rank;
    }
    const std::size_t now = static_cast<std::size_t>(rank + 1);
    color = std::move(next);
    if (now == classes) return color;
    classes = now;
  }
}

std::string certificate(const Graph& g, const std::vector<int>& color) {
  std::string out;
  std::vector<int> by_pos(color.size());
  for (std::size_t v = 0; v < color.size(); ++v) by_pos[color[v]] = static_cast<int>(v);
  for (int v : by_pos) {
    out += g.label[v];
    out += ';';
  }
  std::vector<std::tuple<int, int, int>> es;
  es.reserve(g.edges.size());
  for (auto [a, b, k] : g.edges) {
    int x = color[a], y = color[b];
    if (x > y) std::swap(x, y);
    es.emplace_back(x, y, k);
  }
  std::sort(es.begin(), es.end());
  for (auto [a, b, k] : es) {
    out += std::to_string(a) + (k ? "~" : "-") + std::to_string(b) + ",";
  }
  return out;
}

void search(const Graph& g, const std::vector<int>& color, std::optional<std::string>& best, std::size_t& leaves) {
  const std::size_t n = color.size();
  std::vector<int> count(n, 0);
  for (int c : color) ++count[c];
  int target = -1;
  for (std::size_t c = 0; c < n; ++c) {
    if (count[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  }
  if (target < 0) {
    if (++leaves > kLeafBudget) throw SizeError("fingerprint search budget exceeded");
    std::string cert = certificate(g, color);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> c2(n);
    for (std::size_t u = 0; u < n; ++u) c2[u] = 2 * color[u] + 1;
    c2[v] = 2 * color[v];
    search(g, refine(g, std::move(c2)), best, leaves);
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string fingerprint(const Diagram& d) {
  const Graph g = build_graph(d);
  std::vector<std::string> labels = g.label;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> color(g.label.size());
  for (std::size_t v = 0; v < color.size(); ++v)
    color[v] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), g.label[v]) - labels.begin());
  std::optional<std::string> best;
  std::size_t leaves = 0;
  search(g, refine(g, std::move(color)), best, leaves);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(best.value_or(""))));
  return "zx1-s" + std::to_string(d.spiders().size()) + "-e" + std::to_string(d.edges().size()) + "-p" +
         std::to_string(d.port_count()) + "-" + buf;
}

}  // namespace zxft
