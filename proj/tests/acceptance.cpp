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


// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "zxft/builders.hpp"
#include "zxft/faults.hpp"
#include "zxft/oracle.hpp"
#include "zxft/pauli_web.hpp"
#include "zxft/rewrite.hpp"
#include "zxft/translate.hpp"

namespace zxft {
namespace {

constexpr double kDenseTol = 1e-9;
constexpr double kInvarianceTol = 1e-12;
constexpr std::size_t kTableauRuns = 1000;
constexpr int kShuffles = 20;

using testing::logical_signature;
using testing::operator_tensor;
using testing::projector;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const Flavor kFlavors[] = {Flavor::CBQC, Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC};

void gadget_semantics(Outcome& o) {
  std::size_t n = 0;
  const auto check_op = [&](const std::string& name, const std::function<cplx(unsigned, unsigned)>& op) {
    const Diagram d = gadget(name);
    const DenseTensor t = dense_contract(d);
    o.require(proportional(t, operator_tensor(d, t, 2, op), kDenseTol), name);
    ++n;
  };
  check_op("cnot", [](unsigned out, unsigned in) { return out == (in & 2 ? in ^ 1u : in) ? 1.0 : 0.0; });
  check_op("cz", [](unsigned out, unsigned in) { return out == in ? (in == 3 ? -1.0 : 1.0) : 0.0; });
  for (const std::string name : {"zz_meas_circuit", "zz_meas"}) {
    const Diagram d = gadget(name);
    const VarId b = d.outcome_vars().begin()->first;
    for (const Assignment& a : assignments_to_test(d)) {
      const DenseTensor t = dense_contract(d, a);
      o.require(proportional(t, operator_tensor(d, t, 2, projector("ZZ", a.at(b) ? -1 : 1)), kDenseTol), name);
      ++n;
    }
  }
  o.require(equivalent(gadget("zz_meas_circuit"), gadget("zz_meas"), 0, kDenseTol), "circuit vs reduction");
  const Diagram bell = gadget("bell_meas");
  std::map<std::string, VarId> var;
  for (const auto& [v, info] : bell.outcome_vars()) var[info.label] = v;
  for (const Assignment& a : assignments_to_test(bell)) {
    const DenseTensor t = dense_contract(bell, a);
    // <beta| with XX eigenvalue (-1)^bXX and ZZ eigenvalue (-1)^bZZ.
    DenseTensor ref{t.ports, std::vector<cplx>(4, 0.0)};
    const bool x = a.at(var.at("bXX")), z = a.at(var.at("bZZ"));
    const int first = bell.port(t.ports[0]).label == "in0" ? 0 : 1;
    for (unsigned q0 = 0; q0 < 2; ++q0) {
      const unsigned q1 = q0 ^ z;
      const unsigned bits[2] = {q0, q1};
      ref.amp[bits[first] * 2 + bits[1 - first]] = (q0 && x) ? -1.0 : 1.0;
    }
    o.require(proportional(t, ref, kDenseTol), "bell_meas");
    ++n;
  }
  o.detail << n << " operator comparisons at rel tol " << kDenseTol;
}

void pauli_webs(Outcome& o) {
  std::size_t n = 0;
  const auto expect = [&](const std::string& name, const Diagram& d, const std::vector<std::string>& sigs) {
    const WebCoder coder(d);
    const WebBasis b = web_basis(d);
    std::vector<PauliWeb> found;
    for (const auto& s : sigs) {
      const auto w = find_web(d, parse_signature(d, s));
      o.require(w && verify_clifford(*w, d, kDenseTol), name + " " + s);
      if (w) found.push_back(*w);
      ++n;
    }
    std::vector<PauliWeb> all = found;
    all.insert(all.end(), b.outer.begin(), b.outer.end());
    o.require(b.outer.size() == sigs.size() && span_rank(coder, found) == sigs.size() &&
                  span_rank(coder, all) == sigs.size(),
              name + " span");
  };
  expect("ghz", to_canonical(gadget("ghz_circuit")).first, {"in:|out:ZZI", "in:|out:IZZ", "in:|out:XXX"});
  std::vector<std::string> ring;
  for (int j = 0; j < 6; ++j) {
    std::string s(6, 'I');
    s[(j + 5) % 6] = 'Z';
    s[j] = 'X';
    s[(j + 1) % 6] = 'Z';
    ring.push_back("in:|out:" + s);
  }
  expect("ring6", to_canonical(gadget("ring6_circuit")).first, ring);
  expect("cnot", gadget("cnot"), {"in:IZ|out:ZZ", "in:ZI|out:ZI", "in:XI|out:XX", "in:IX|out:IX"});
  expect("zz", gadget("zz_meas"), {"in:II|out:ZZ", "in:ZZ|out:II", "in:ZI|out:ZI", "in:XX|out:XX"});
  expect("xx", gadget("xx_meas"), {"in:II|out:XX", "in:XX|out:II", "in:XI|out:XI", "in:ZZ|out:ZZ"});
  expect("yy", gadget("yy_meas"), {"in:II|out:YY", "in:YY|out:II", "in:YI|out:YI", "in:XX|out:XX"});
  expect("w4z", gadget("w4_z_meas"),
         {"in:IIII|out:ZZZZ", "in:ZZZZ|out:IIII", "in:ZIII|out:ZIII", "in:IZII|out:IZII", "in:IIZI|out:IIZI",
          "in:XXII|out:XXII", "in:IXXI|out:IXXI", "in:IIXX|out:IIXX"});
  expect("w4x", gadget("w4_x_meas"),
         {"in:IIII|out:XXXX", "in:XXXX|out:IIII", "in:XIII|out:XIII", "in:IXII|out:IXII", "in:IIXI|out:IIXI",
          "in:ZZII|out:ZZII", "in:IZZI|out:IZZI", "in:IIZZ|out:IIZZ"});
  o.detail << n << " webs found and sign-checked on the dense tensor";
}

void repetition_code(Outcome& o) {
  const Diagram d = rep_code(2);
  const WebBasis b = web_basis(d);
  o.require(b.checks.size() == 1, "one check");
  if (b.checks.size() != 1) return;
  std::set<std::string> labels;
  for (VarId v : b.checks[0].sign.vars()) labels.insert(d.outcome_vars().at(v).label);
  o.require(labels == std::set<std::string>{"b1", "b2"} && !b.checks[0].sign.konst(), "check is b1+b2");
  std::size_t red = 0, z_locations = 0;
  for (const auto& [id, e] : d.edges()) {
    for (bool side : {true, false}) {
      const Highlight h = b.checks[0].at(d, id, side ? e.a : e.b);
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const std::vector<PauliFault> f = {{id, side, p}};
        const bool predicted = syndrome(d, f, b)[0];
        const bool observed = observed_syndrome(inject(d, f), b, kTableauRuns, id)[0];
        o.require(predicted == observed, "tableau agreement");
        if (p == Pauli::Z) {
          o.require(!predicted, "Z never flips");
          ++z_locations;
        } else if (h.r) {
          o.require(predicted, "X/Y flip at red locations");
        }
      }
      red += h.r;
    }
  }
  o.detail << "check b1+b2; " << red << " red locations flipped by X and Y; Z silent at " << z_locations
           << " locations; " << kTableauRuns << " tableau runs each";
}

std::vector<std::pair<std::string, Diagram>> pauli_builder_outputs() {
  std::vector<std::pair<std::string, Diagram>> out;
  for (const auto& name : gadget_names()) {
    Diagram d = gadget(name);
    bool pauli = true;
    for (const auto& [id, s] : d.spiders()) pauli &= s.phase.is_pauli();
    if (pauli) out.emplace_back(name, std::move(d));
  }
  for (int r = 1; r <= 3; ++r) out.emplace_back("rep_code(" + std::to_string(r) + ")", rep_code(r));
  out.emplace_back("graph_state(path3)", graph_state(3, {{0, 1}, {1, 2}}));
  for (Flavor f : kFlavors)
    for (int dd : {2, 3})
      for (int r : {1, 2, 3})
        for (bool zf : {true, false})
          out.emplace_back(to_string(f) + " d" + std::to_string(dd) + " r" + std::to_string(r),
                           build(f, {dd, r, zf}).first);
  return out;
}

void outer_count(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, d] : pauli_builder_outputs()) {
    o.require(web_basis(d).outer.size() == d.port_count(), name);
    ++n;
  }
  o.detail << n << " networks with |outer basis| = port count";
}

void check_structure(Outcome& o) {
  const std::map<Flavor, std::vector<std::map<std::string, int>>> expected = {
      {Flavor::CBQC, {{{"Z", 2}}, {{"X", 2}}}},
      {Flavor::MBQC, {{{"M", 6}}}},
      {Flavor::FBQC, {{{"XX", 6}, {"ZZ", 6}}}},
      {Flavor::FloBQC, {{{"XX", 6}}, {{"ZZ", 6}}}}};
  for (Flavor f : kFlavors) {
    const Diagram small = build(f, {3, 3, true}).first;
    const auto checks = web_basis(small).checks;
    std::size_t violated = 0, interior3 = 0;
    for (const auto& a : TableauSampler(small).run(kTableauRuns, 1))
      for (const auto& c : checks) violated += c.sign.evaluate(a);
    o.require(!checks.empty() && violated == 0, to_string(f) + " d3 parities");
    const auto [d3, m3] = build(f, {3, 3, true});
    for (const auto& cc : cell_checks(d3, m3)) interior3 += cc.interior;

    const auto [d, m] = build(f, {5, 3, true});
    std::map<std::string, int> table;
    std::size_t interior = 0;
    for (const auto& cc : cell_checks(d, m)) {
      if (!cc.interior) continue;
      ++interior;
      std::string key;
      for (const auto& [k, c] : cc.kinds) key += (key.empty() ? "" : "+") + k + ":" + std::to_string(c);
      ++table[key];
      const auto& ok = expected.at(f);
      o.require(cc.web && std::find(ok.begin(), ok.end(), cc.kinds) != ok.end(), to_string(f) + " cell " + key);
    }
    o.require(interior > 0, to_string(f) + " has interior cells");
    o.detail << to_string(f) << " {";
    for (const auto& [k, c] : table) o.detail << k << " x" << c << " ";
    o.detail << "} d3 interior=" << interior3 << " d3 violations=" << violated << "/" << kTableauRuns << "; ";
  }
  o.detail << "cell table at d=5 r=3 (d=3 patches have no interior cells)";
}

void translation(Outcome& o) {
  std::size_t n = 0;
  for (int dd : {2, 3}) {
    const auto [c, cm] = cbqc({dd, 2, true});
    for (Flavor f : {Flavor::MBQC, Flavor::FBQC, Flavor::FloBQC}) {
      const Translation t = translate(f, c, cm);
      const std::string what = to_string(f) + " d" + std::to_string(dd);
      o.require(fingerprint(t.diagram) == fingerprint(build(f, {dd, 2, true}).first), what + " fingerprint");
      const CorrespondenceReport r = check_correspondence(t);
      o.require(r.ok() && r.source_rank == r.target_rank, what + " correspondence");
      ++n;
    }
  }
  o.detail << n << " translations fingerprint-identical with bijective web transport";
}

void detectability(Outcome& o) {
  const auto [d, m] = cbqc({5, 2, true});
  const WebBasis b = web_basis(d);
  const auto bulk = bulk_edges(d, m);
  std::size_t covered = 0;
  for (const auto& c : detectability_map(d, b))
    if (bulk.count(c.edge)) covered += c.covered();
  o.require(!bulk.empty() && covered == bulk.size(), "bulk coverage");
  std::vector<EdgeId> edges;
  for (const auto& [id, e] : d.edges()) edges.push_back(id);
  std::mt19937_64 rng(2026);
  std::size_t agree = 0;
  for (int k = 0; k < 200; ++k) {
    const PauliFault f{edges[rng() % edges.size()], static_cast<bool>(rng() & 1),
                       std::array{Pauli::X, Pauli::Y, Pauli::Z}[rng() % 3]};
    agree += syndrome(d, {f}, b) == observed_syndrome(inject(d, {f}), b, 4, k);
  }
  o.require(agree == 200, "syndrome agreement");
  o.detail << covered << "/" << bulk.size() << " bulk edges covered red+green; " << agree
           << "/200 single faults agree with tableau";
}

void correlators(Outcome& o) {
  const Diagram c = cbqc({5, 2, true}).first;
  const auto z = find_web(c, logical_signature(c, 'Z'), true);
  o.require(z && z->sign.is_constant(), "cbqc Z correlator outcome-free");
  const auto [f, fm] = fbqc({5, 2, true});
  const auto x = find_web(f, logical_signature(f, 'X'));
  std::size_t fusion = 0;
  if (x)
    for (VarId v : x->sign.vars()) fusion += fm.slots.at(v).kind.size() == 2;
  o.require(x && fusion > 0 && fusion == x->sign.vars().size(), "fbqc X correlator has fusion outcomes");
  o.detail << "cbqc Z^5->Z^5 sign " << (z ? z->sign.to_string() : "-") << "; fbqc X correlator sign has "
           << fusion << " fusion outcomes";
}

void invariance(Outcome& o) {
  const InvarianceReport r = invariance_suite(kInvarianceTol);
  for (const auto& f : r.failures) o.require(false, f);
  o.require(r.y_transpose_negative, "Y^T = -Y");
  o.require(r.ok(), "suite");
  o.detail << r.tensors_checked << " tensors, " << r.permutations_checked << " permutations, "
           << r.transpositions_checked << " transpositions at tol " << kInvarianceTol;
}

void canonical(Outcome& o) {
  std::vector<std::pair<std::string, Diagram>> inputs;
  for (const auto& name : gadget_names()) inputs.emplace_back(name, gadget(name));
  for (int r = 1; r <= 3; ++r) inputs.emplace_back("rep_code", rep_code(r));
  for (Flavor f : kFlavors)
    for (int dd : {2, 3})
      for (int r : {1, 2, 3}) inputs.emplace_back(to_string(f), build(f, {dd, r, true}).first);
  std::size_t runs = 0;
  for (const auto& [name, d] : inputs) {
    const Diagram c = to_canonical(d).first;
    const std::string fp = fingerprint(c);
    const auto again = to_canonical(c);
    o.require(fingerprint(again.first) == fp && again.second.steps.empty() && is_canonical(c), name + " idempotent");
    for (int s = 0; s < kShuffles; ++s, ++runs)
      o.require(fingerprint(to_canonical(d, {static_cast<std::uint64_t>(s)}).first) == fp, name + " shuffle");
  }
  o.detail << inputs.size() << " networks x " << kShuffles << " shuffled rule orders (" << runs << " runs)";
}

}  // namespace
}  // namespace zxft

int main() {
  using namespace zxft;
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"gadget semantics", gadget_semantics}, {"pauli webs", pauli_webs},
      {"repetition code", repetition_code},   {"outer web count", outer_count},
      {"check structure", check_structure},   {"translation", translation},
      {"detectability", detectability},       {"logical correlators", correlators},
      {"tensor invariance", invariance},      {"canonical form", canonical}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.str().c_str(), secs);
  }
  return failed == 0 ? 0 : 1;
}
