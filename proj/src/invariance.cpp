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

#include "zxft/builders.hpp"
#include "zxft/oracle.hpp"

namespace zxft {

namespace {

// Small dense tensor; leg 0 is the most significant index bit.
struct Tensor {
  int n = 0;
  std::vector<cplx> a;

  int bit(std::size_t idx, int leg) const { return (idx >> (n - 1 - leg)) & 1; }
};

Tensor contract(const Tensor& x, int i, const Tensor& y, int j) {
  Tensor out{x.n + y.n - 2, {}};
  out.a.assign(std::size_t{1} << out.n, 0.0);
  for (std::size_t p = 0; p < x.a.size(); ++p)
    for (std::size_t q = 0; q < y.a.size(); ++q) {
      if (x.bit(p, i) != y.bit(q, j)) continue;
      std::size_t idx = 0;
      for (int l = 0; l < x.n; ++l)
        if (l != i) idx = (idx << 1) | x.bit(p, l);
      for (int l = 0; l < y.n; ++l)
        if (l != j) idx = (idx << 1) | y.bit(q, l);
      out.a[idx] += x.a[p] * y.a[q];
    }
  return out;
}

// out leg k is input leg perm[k].
Tensor permute(const Tensor& x, const std::vector<int>& perm) {
  Tensor out{x.n, std::vector<cplx>(x.a.size())};
  for (std::size_t p = 0; p < x.a.size(); ++p) {
    std::size_t idx = 0;
    for (int k = 0; k < x.n; ++k) idx = (idx << 1) | x.bit(p, perm[k]);
    out.a[idx] = x.a[p];
  }
  return out;
}

double distance(const Tensor& x, const Tensor& y) {
  double m = 0;
  for (std::size_t p = 0; p < x.a.size(); ++p) m = std::max(m, std::abs(x.a[p] - y.a[p]));
  return m;
}

const Tensor kOmega{2, {1, 0, 0, 1}};
const Tensor kHadamard{2, {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2}};

Tensor z_spider(int n, int quarter) {
  Tensor t{n, std::vector<cplx>(std::size_t{1} << n, 0.0)};
  t.a.front() += 1.0;
  t.a.back() += std::polar(1.0, quarter * M_PI / 2);
  return t;
}

// X spider: Hadamard on every leg of the Z spider.
Tensor x_spider(int n, int quarter) {
  Tensor t = z_spider(n, quarter);
  for (int l = 0; l < n; ++l) {
    // contract moves the new leg to the end; rotate it back.
    Tensor u = contract(t, l, kHadamard, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    perm.erase(perm.end() - 1);
    perm.insert(perm.begin() + l, n - 1);
    t = permute(u, perm);
  }
  return t;
}

// Reorients leg l through |Omega> and restores the leg order.
Tensor reorient(const Tensor& t, int l) {
  Tensor u = contract(t, l, kOmega, 0);
  std::vector<int> perm(t.n);
  std::iota(perm.begin(), perm.end(), 0);
  perm.erase(perm.end() - 1);
  perm.insert(perm.begin() + l, t.n - 1);
  return permute(u, perm);
}

// Transpose of a two-leg operator (leg 0 out, leg 1 in) via two |Omega>
// contractions.
Tensor transpose(const Tensor& op) {
  Tensor u = contract(op, 1, kOmega, 0);  // (out, new_out)
  return contract(u, 0, kOmega, 0);       // (new_out, new_in)
}

// Operator transpose on a two-qubit gate with legs (out0, out1, in0, in1).
Tensor transpose4(const Tensor& g) { return permute(g, {2, 3, 0, 1}); }

Tensor swap_conj(const Tensor& g) { return permute(g, {1, 0, 3, 2}); }

}  // namespace

InvarianceReport invariance_suite(double tol) {
  InvarianceReport rep;
  auto fail = [&](const std::string& m) { rep.failures.push_back(m); };

  std::vector<std::pair<std::string, Tensor>> cases;
  for (int n = 1; n <= 5; ++n)
    for (int q = 0; q < 4; ++q) {
      cases.push_back({"Z(" + std::to_string(n) + "," + std::to_string(q) + ")", z_spider(n, q)});
      cases.push_back({"X(" + std::to_string(n) + "," + std::to_string(q) + ")", x_spider(n, q)});
    }
  cases.push_back({"H", kHadamard});

  for (const auto& [name, t] : cases) {
    ++rep.tensors_checked;
    std::vector<int> perm(t.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++rep.permutations_checked;
      if (distance(permute(t, perm), t) > tol) fail(name + " is not permutation invariant");
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int l = 0; l < t.n; ++l) {
      ++rep.transpositions_checked;
      if (distance(reorient(t, l), t) > tol) fail(name + " changes under reorientation of leg " + std::to_string(l));
    }
    if (t.n == 2 && distance(transpose(t), t) > tol) fail(name + " is not transpose symmetric");
  }

  // Cross-check the direct tensors against the contraction engine.
  for (int n = 1; n <= 4; ++n)
    for (SpiderKind k : {SpiderKind::Z, SpiderKind::X})
      for (int q = 0; q < 4; ++q) {
        Diagram d;
        const SpiderId s = d.add_spider(k, Phase(q));
        for (int l = 0; l < n; ++l) d.add_edge(Endpoint::spider(s), Endpoint::port(d.add_port(PortDir::Out)));
        const Tensor ref = k == SpiderKind::Z ? z_spider(n, q) : x_spider(n, q);
        if (!proportional(DenseTensor{{}, ref.a}, dense_contract(d), 1e-9))
          fail("dense contraction disagrees on " + to_string(k) + " spider of degree " + std::to_string(n));
      }

  const Tensor y{2, {0, cplx(0, -1), cplx(0, 1), 0}};
  Tensor neg_y = y;
  for (auto& v : neg_y.a) v = -v;
  rep.y_transpose_negative = distance(transpose(y), neg_y) <= tol && distance(transpose(y), y) > tol;
  if (!rep.y_transpose_negative) fail("Y transpose is not -Y");

  // CZ from the gadget network, normalised so the |00> entry is 1, with legs
  // reordered to (out0, out1, in0, in1).
  const Diagram cz_net = gadget("cz");
  const DenseTensor cz_dense = dense_contract(cz_net);
  Tensor cz{4, cz_dense.amp};
  const cplx c0 = cz.a[0];
  for (auto& v : cz.a) v /= c0;
  std::vector<int> order;
  for (const char* label : {"out0", "out1", "in0", "in1"})
    for (std::size_t k = 0; k < cz_dense.ports.size(); ++k)
      if (cz_net.port(cz_dense.ports[k]).label == label) order.push_back(static_cast<int>(k));
  cz = permute(cz, order);
  Tensor expect{4, std::vector<cplx>(16, 0.0)};
  for (int b = 0; b < 4; ++b) expect.a[b * 4 + b] = b == 3 ? -1.0 : 1.0;
  if (distance(cz, expect) > 1e-9) fail("cz gadget is not diag(1,1,1,-1)");
  rep.cz_swap_symmetric = distance(swap_conj(cz), cz) <= 1e-9;
  rep.cz_transpose_symmetric = distance(transpose4(cz), cz) <= 1e-9;
  if (!rep.cz_swap_symmetric) fail("cz does not commute with swap");
  if (!rep.cz_transpose_symmetric) fail("cz is not transpose symmetric");
  return rep;
}

}  // namespace zxft
