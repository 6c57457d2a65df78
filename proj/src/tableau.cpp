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
#include <bit>
#include <deque>
#include <optional>
#include <set>

#include "zxft/error.hpp"
#include "zxft/oracle.hpp"

namespace zxft {

namespace {

// Allocates qubits from a free list, lowest index first.
class QubitPool {
 public:
  int take() {
    if (free_.empty()) return used_++;
    const int q = *free_.begin();
    free_.erase(free_.begin());
    return q;
  }
  void give(int q) { free_.insert(q); }
  int used() const { return used_; }

 private:
  std::set<int> free_;
  int used_ = 0;
};

std::vector<SpiderId> spider_order(const Diagram& d) {
  std::vector<SpiderId> order;
  std::set<SpiderId> seen;
  std::deque<SpiderId> queue;
  auto push = [&](SpiderId s) {
    if (seen.insert(s).second) queue.push_back(s);
  };
  auto drain = [&] {
    while (!queue.empty()) {
      const SpiderId s = queue.front();
      queue.pop_front();
      order.push_back(s);
      for (EdgeId e : d.spider(s).edges) {
        const Endpoint o = d.edge(e).other(Endpoint::spider(s));
        if (o.is_spider()) push(o.id);
      }
    }
  };
  for (PortId p : d.ports_of(PortDir::In))
    for (EdgeId e : d.port(p).edges) {
      const Endpoint o = d.edge(e).other(Endpoint::port(p));
      if (o.is_spider()) push(o.id);
    }
  drain();
  for (const auto& [s, _] : d.spiders()) {
    push(s);
    drain();
  }
  return order;
}

}  // namespace

CircuitReading circuit_reading(const Diagram& d) {
  for (const auto& [id, s] : d.spiders())
    if (!s.phase.is_pauli())
      throw UnsupportedPhase(id, "spider " + std::to_string(id) + " has a non-Pauli phase");

  CircuitReading out;
  QubitPool pool;
  // Qubit held by each (edge, side) half; side 0 is end A.
  std::map<std::pair<EdgeId, int>, int> half;

  auto bell = [&](EdgeId e) {
    const int a = pool.take();
    const int b = pool.take();
    half[{e, 0}] = a;
    half[{e, 1}] = b;
    ReadingStep st;
    st.type = ReadingStep::Type::BellPair;
    st.qubits = {a, b};
    st.hadamard = d.edge(e).kind == EdgeKind::Hadamard;
    out.steps.push_back(st);
  };

  for (const auto& [e, edge] : d.edges())
    if (edge.a.is_port() && edge.b.is_port()) bell(e);

  for (SpiderId s : spider_order(d)) {
    const Spider& sp = d.spider(s);
    const Endpoint me = Endpoint::spider(s);
    std::vector<int> qs;
    std::set<EdgeId> loop_seen;
    for (EdgeId e : sp.edges) {
      if (!half.count({e, 0})) bell(e);
      const Edge& edge = d.edge(e);
      int side = edge.a == me ? 0 : 1;
      if (edge.is_loop()) side = loop_seen.insert(e).second ? 0 : 1;
      qs.push_back(half.at({e, side}));
    }
    const char pair_basis = sp.kind == SpiderKind::Z ? 'Z' : 'X';
    const char all_basis = sp.kind == SpiderKind::Z ? 'X' : 'Z';
    for (std::size_t i = 1; i < qs.size(); ++i) {
      ReadingStep st;
      st.type = ReadingStep::Type::Measure;
      st.qubits = {qs[0], qs[i]};
      st.basis = pair_basis;
      st.spider = s;
      out.steps.push_back(st);
    }
    ReadingStep st;
    st.type = ReadingStep::Type::Measure;
    st.qubits = qs;
    st.basis = all_basis;
    st.spider = s;
    const bool pi = sp.phase == Phase::pi();
    if (sp.instrument) {
      st.forced = -1;
      st.offset = pi;
    } else {
      st.forced = pi ? 1 : 0;
    }
    out.steps.push_back(st);
    if (!qs.empty()) {
      ReadingStep r;
      r.type = ReadingStep::Type::Reset;
      r.qubits = qs;
      r.spider = s;
      out.steps.push_back(r);
      for (int q : qs) pool.give(q);
    }
  }
  out.qubits = pool.used();
  return out;
}

namespace {

using gf2::BitVec;

// A Pauli row with an affine sign: bit 0 of `s` is the constant, bit 1 + k
// the k-th random outcome.
struct Row {
  BitVec x, z, s;
};

// Constant part of the i-power picked up by multiplying a into h, mod 4.
int product_phase(const Row& h, const Row& a) {
  int c = 0;
  const auto& x1 = a.x.words();
  const auto& z1 = a.z.words();
  const auto& x2 = h.x.words();
  const auto& z2 = h.z.words();
  for (std::size_t w = 0; w < x1.size(); ++w) {
    const auto y1 = x1[w] & z1[w], xo = x1[w] & ~z1[w], zo = ~x1[w] & z1[w];
    const auto plus = (y1 & z2[w] & ~x2[w]) | (xo & z2[w] & x2[w]) | (zo & x2[w] & ~z2[w]);
    const auto minus = (y1 & x2[w] & ~z2[w]) | (xo & z2[w] & ~x2[w]) | (zo & x2[w] & z2[w]);
    c += std::popcount(plus) - std::popcount(minus);
  }
  return ((c % 4) + 4) % 4;
}

bool anticommutes(const Row& r, const BitVec& px, const BitVec& pz) { return r.x.dot(pz) ^ r.z.dot(px); }

class SymbolicTableau {
 public:
  SymbolicTableau(int n, std::size_t width) : n_(n), width_(width) {
    rows_.resize(2 * n);
    for (int i = 0; i < 2 * n; ++i) rows_[i] = {BitVec(n), BitVec(n), BitVec(width)};
    for (int i = 0; i < n; ++i) {
      rows_[i].x.set(i);
      rows_[n + i].z.set(i);
    }
  }

  std::size_t random_bits() const { return next_; }

  void h(int q) {
    for (auto& r : rows_) {
      const bool x = r.x.get(q), z = r.z.get(q);
      if (x && z) r.s.flip(0);
      r.x.set(q, z);
      r.z.set(q, x);
    }
  }

  void cnot(int a, int b) {
    for (auto& r : rows_) {
      const bool xa = r.x.get(a), za = r.z.get(a), xb = r.x.get(b), zb = r.z.get(b);
      if (xa && zb && (xb == za)) r.s.flip(0);
      r.x.set(b, xb ^ xa);
      r.z.set(a, za ^ zb);
    }
  }

  // Applies X on q when the affine form f is 1.
  void conditional_x(int q, const BitVec& f) {
    for (auto& r : rows_)
      if (r.z.get(q)) r.s ^= f;
  }

  // Measures the product of `basis` on `qs`; returns the outcome form.
  BitVec measure(const std::vector<int>& qs, char basis) {
    BitVec px(n_), pz(n_);
    for (int q : qs) (basis == 'X' ? px : pz).flip(q);
    int p = -1;
    for (int i = n_; i < 2 * n_; ++i)
      if (anticommutes(rows_[i], px, pz)) {
        p = i;
        break;
      }
    if (p >= 0) {
      for (int i = 0; i < 2 * n_; ++i)
        if (i != p && anticommutes(rows_[i], px, pz)) mul(rows_[i], rows_[p]);
      rows_[p - n_] = rows_[p];
      BitVec s(width_);
      s.set(1 + next_++);
      rows_[p] = {px, pz, s};
      return s;
    }
    Row acc{BitVec(n_), BitVec(n_), BitVec(width_)};
    for (int i = 0; i < n_; ++i)
      if (anticommutes(rows_[i], px, pz)) mul(acc, rows_[n_ + i]);
    return acc.s;
  }

 private:
  static void mul(Row& h, const Row& a) {
    if (product_phase(h, a) == 2) h.s.flip(0);
    h.s ^= a.s;
    h.x ^= a.x;
    h.z ^= a.z;
  }

  int n_;
  std::size_t width_;
  std::size_t next_ = 0;
  std::vector<Row> rows_;
};

}  // namespace

TableauSampler::TableauSampler(const Diagram& d) { build(d, circuit_reading(d)); }

TableauSampler::TableauSampler(const Diagram& d, const CircuitReading& reading) { build(d, reading); }

void TableauSampler::build(const Diagram& d, const CircuitReading& reading) {
  std::size_t width = 1;
  for (const auto& st : reading.steps) {
    if (st.type == ReadingStep::Type::Measure) width += 1;
    if (st.type == ReadingStep::Type::Reset) width += st.qubits.size();
  }
  SymbolicTableau t(reading.qubits, width);

  // Constraint rows over [random bits | outcome vars | rhs] once the random
  // count is known; collected here as (form, instrument expr or none, rhs).
  struct Constraint {
    BitVec form;
    std::optional<OutcomeExpr> expr;
    bool rhs;
  };
  std::vector<Constraint> cons;
  for (const auto& st : reading.steps) {
    switch (st.type) {
      case ReadingStep::Type::BellPair:
        t.h(st.qubits[0]);
        t.cnot(st.qubits[0], st.qubits[1]);
        if (st.hadamard) t.h(st.qubits[1]);
        break;
      case ReadingStep::Type::Measure: {
        BitVec f = t.measure(st.qubits, st.basis);
        if (st.forced >= 0) {
          cons.push_back({f, std::nullopt, st.forced == 1});
        } else {
          cons.push_back({f, d.spider(st.spider).instrument, st.offset});
        }
        break;
      }
      case ReadingStep::Type::Reset:
        for (int q : st.qubits) t.conditional_x(q, t.measure({q}, 'Z'));
        break;
    }
  }

  const std::size_t nr = t.random_bits();
  std::map<VarId, std::size_t> col;
  for (const auto& [v, _] : d.outcome_vars()) {
    col[v] = nr + var_ids_.size();
    var_ids_.push_back(v);
  }
  const std::size_t ncols = nr + var_ids_.size();
  gf2::BitMatrix a(ncols);
  BitVec b(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    auto& row = a.new_row();
    bool rhs = cons[i].rhs ^ cons[i].form.get(0);
    for (std::size_t k = 0; k < nr; ++k)
      if (cons[i].form.get(1 + k)) row.set(k);
    if (cons[i].expr) {
      rhs ^= cons[i].expr->konst();
      for (VarId v : cons[i].expr->vars()) row.flip(col.at(v));
    }
    b.set(i, rhs);
  }
  const auto x0 = gf2::solve(a, b);
  if (!x0) {
    feasible_ = false;
    return;
  }
  // Project the solution space onto the outcome variables.
  gf2::EchelonBasis basis(var_ids_.size());
  std::vector<BitVec> dirs;
  for (const auto& n : gf2::nullspace(a)) {
    BitVec p(var_ids_.size());
    for (std::size_t j = 0; j < var_ids_.size(); ++j) p.set(j, n.get(nr + j));
    if (basis.insert(p)) dirs.push_back(p);
  }
  n_free_ = dirs.size();
  for (std::size_t j = 0; j < var_ids_.size(); ++j) {
    BitVec c(n_free_);
    for (std::size_t k = 0; k < n_free_; ++k) c.set(k, dirs[k].get(j));
    var_coeff_.push_back(c);
    var_const_.push_back(x0->get(nr + j));
  }
}

Assignment TableauSampler::sample(std::mt19937_64& rng) const {
  Assignment out;
  if (!feasible_) return out;
  BitVec r(n_free_);
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t k = 0; k < n_free_; ++k) r.set(k, bit(rng));
  for (std::size_t j = 0; j < var_ids_.size(); ++j) out[var_ids_[j]] = var_const_[j] ^ var_coeff_[j].dot(r);
  return out;
}

std::vector<Assignment> TableauSampler::run(std::size_t runs, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Assignment> out;
  out.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) out.push_back(sample(rng));
  return out;
}

}  // namespace zxft
