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


#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxft/builders.hpp"
#include "zxft/error.hpp"
#include "zxft/faults.hpp"
#include "zxft/oracle.hpp"
#include "zxft/pauli_web.hpp"
#include "zxft/rewrite.hpp"
#include "zxft/translate.hpp"

using json = nlohmann::json;
using namespace zxft;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsageError = 2;
constexpr int kInputError = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Diagram load(const std::string& path) { return deserialize(read_file(path)); }

std::string highlight_code(Highlight h) { return std::string(h.r ? "r" : "") + (h.g ? "g" : ""); }

json web_json(const Diagram& d, const PauliWeb& w, const std::string& cls) {
  json edges = json::object();
  for (const auto& [e, h] : w.edges) edges[std::to_string(e)] = highlight_code(h);
  return {{"class", cls},
          {"signature", signature_string(d, outer_signature(d, w))},
          {"sign", w.sign.to_string()},
          {"edges", edges},
          {"included", std::vector<int>(w.included.begin(), w.included.end())}};
}

std::string web_line(const Diagram& d, const PauliWeb& w, const std::string& cls) {
  std::size_t red = 0, green = 0;
  for (const auto& [e, h] : w.edges) {
    red += h.r;
    green += h.g;
  }
  std::ostringstream os;
  os << cls << ' ' << signature_string(d, outer_signature(d, w)) << " sign=" << w.sign.to_string() << " red=" << red
     << " green=" << green;
  return os.str();
}

Diagram build_named(const std::string& what, const PatchSpec& spec, const std::string& gadget_name) {
  if (what == "rep") return rep_code(spec.rounds);
  if (what == "gadget") return gadget(gadget_name);
  try {
    return build(flavor_from_string(what), spec).first;
  } catch (const Error&) {
    throw InputError("unknown network kind: " + what);
  }
}

void strip_coords(Diagram& d) {
  const Diagram copy = d;
  for (const auto& [id, s] : copy.spiders()) d.set_spider_coord(id, std::nullopt);
  for (const auto& [id, p] : copy.ports()) d.set_port_coord(id, std::nullopt);
}

int cmd_build(const std::string& what, const PatchSpec& spec, const std::string& gadget_name, const std::string& out,
              bool coords, bool as_json) {
  Diagram d = build_named(what, spec, gadget_name);
  if (!coords) strip_coords(d);
  const std::string text = serialize(d);
  if (!out.empty()) write_output(out, text);
  if (as_json) {
    json j = {{"spiders", d.spiders().size()}, {"edges", d.edges().size()},      {"ports", d.port_count()},
              {"instruments", d.instrument_count()}, {"fingerprint", fingerprint(d)}};
    if (!out.empty()) j["out"] = out;
    std::cout << j.dump(1) << '\n';
  } else if (out.empty()) {
    write_output("", text);
  } else {
    std::cout << "wrote " << out << ": " << d.spiders().size() << " spiders, " << d.edges().size() << " edges, "
              << d.port_count() << " ports\n";
  }
  return kOk;
}

int cmd_webs(const std::string& file, bool checks_only, bool as_json) {
  const Diagram d = load(file);
  const WebBasis b = web_basis(d);
  std::vector<std::pair<std::string, const PauliWeb*>> rows;
  if (!checks_only)
    for (const auto& w : b.outer) rows.push_back({"outer", &w});
  for (const auto& w : b.checks) rows.push_back({"check", &w});
  if (!checks_only)
    for (const auto& w : b.null) rows.push_back({"null", &w});
  if (as_json) {
    json arr = json::array();
    for (const auto& [cls, w] : rows) arr.push_back(web_json(d, *w, cls));
    json j = {{"outer", b.outer.size()}, {"checks", b.checks.size()}, {"null", b.null.size()}, {"webs", arr}};
    std::cout << j.dump(1) << '\n';
  } else {
    for (const auto& [cls, w] : rows) std::cout << web_line(d, *w, cls) << '\n';
    std::cout << b.outer.size() << " outer, " << b.checks.size() << " checks, " << b.null.size() << " null\n";
  }
  return kOk;
}

std::vector<int> flipped_indices(const Syndrome& s) {
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k]) out.push_back(static_cast<int>(k));
  return out;
}

int cmd_inject(const std::string& file, const std::string& faults_file, bool with_syndrome, bool with_tableau,
               std::uint64_t seed, const std::string& out, bool as_json) {
  const Diagram d = load(file);
  const auto faults = faults_from_json(read_file(faults_file));
  const Diagram faulted = inject(d, faults);
  if (!out.empty()) write_output(out, serialize(faulted));
  json j = {{"faults", faults.size()}, {"spiders", faulted.spiders().size()}};
  int code = kOk;
  if (with_syndrome || with_tableau) {
    const WebBasis b = web_basis(d);
    const Syndrome s = syndrome(d, faults, b);
    j["checks"] = b.checks.size();
    j["syndrome"] = flipped_indices(s);
    if (with_tableau) {
      const Syndrome o = observed_syndrome(faulted, b, 16, seed);
      j["observed"] = flipped_indices(o);
      j["agree"] = s == o;
      if (s != o) code = kFailed;
    }
  }
  if (as_json) {
    std::cout << j.dump(1) << '\n';
  } else {
    if (out.empty() && !with_syndrome && !with_tableau) write_output("", serialize(faulted));
    if (j.contains("syndrome")) {
      std::cout << "syndrome:";
      for (int k : j["syndrome"]) std::cout << ' ' << k;
      std::cout << " (" << j["checks"].get<std::size_t>() << " checks)\n";
    }
    if (j.contains("observed")) std::cout << "tableau " << (j["agree"].get<bool>() ? "agrees" : "DISAGREES") << '\n';
  }
  return code;
}

int cmd_verify(const std::string& file, const std::string& against, bool webs, bool dense, std::size_t runs,
               std::uint64_t seed, bool as_json) {
  const Diagram d = load(file);
  std::vector<std::string> failures;
  json j;
  for (const auto& v : d.validate()) failures.push_back(v.what);
  if (!against.empty()) {
    const bool eq = equivalent(d, load(against), seed);
    j["equivalent"] = eq;
    if (!eq) failures.push_back("not equivalent to " + against);
  }
  std::optional<WebBasis> basis;
  if (webs || runs > 0) basis = web_basis(d);
  if (webs) {
    std::size_t n = 0;
    for (const auto* set : {&basis->outer, &basis->checks, &basis->null})
      for (const auto& w : *set) {
        ++n;
        for (const auto& m : verify(w, d)) failures.push_back(m);
        if (dense && !verify_clifford(w, d)) failures.push_back("dense check failed for " + web_line(d, w, "web"));
      }
    j["webs_checked"] = n;
  }
  if (runs > 0) {
    const TableauSampler sampler(d);
    if (!sampler.feasible()) failures.push_back("no consistent outcome record");
    std::size_t violations = 0;
    for (const auto& a : sampler.run(runs, seed))
      for (const auto& w : basis->checks) violations += w.sign.evaluate(a);
    j["tableau_runs"] = runs;
    j["check_violations"] = violations;
    if (violations) failures.push_back(std::to_string(violations) + " check parity violations in tableau runs");
  }
  j["ok"] = failures.empty();
  j["failures"] = failures;
  if (as_json) {
    std::cout << j.dump(1) << '\n';
  } else {
    for (const auto& f : failures) std::cout << "FAIL " << f << '\n';
    if (failures.empty()) std::cout << "ok\n";
  }
  return failures.empty() ? kOk : kFailed;
}

int cmd_translate(const std::string& from, const std::string& to, const PatchSpec& spec, const std::string& trace_out,
                  bool report, const std::string& out, bool as_json) {
  if (from != "cbqc") throw InputError("translations start from cbqc");
  Flavor target;
  try {
    target = flavor_from_string(to);
  } catch (const Error&) {
    throw InputError("unknown target flavor: " + to);
  }
  const auto [src, meta] = cbqc(spec);
  const Translation t = translate(target, src, meta);
  if (!out.empty()) write_output(out, serialize(t.diagram));
  if (!trace_out.empty()) write_output(trace_out, trace_to_json(t.trace));
  json j = {{"to", to}, {"steps", t.trace.steps.size()}, {"fingerprint", fingerprint(t.diagram)}};
  int code = kOk;
  if (report) {
    const bool same = fingerprint(build(target, spec).first) == j["fingerprint"].get<std::string>();
    const CorrespondenceReport r = check_correspondence(t);
    j["matches_builder"] = same;
    j["webs_checked"] = r.webs_checked;
    j["source_rank"] = r.source_rank;
    j["target_rank"] = r.target_rank;
    j["interior_cells"] = r.interior_cells;
    j["cell_table"] = r.table;
    j["failures"] = r.failures;
    if (!same || !r.ok()) code = kFailed;
  }
  if (as_json) {
    std::cout << j.dump(1) << '\n';
  } else {
    std::cout << "cbqc -> " << to << ": " << t.trace.steps.size() << " rewrite steps\n";
    if (report) {
      std::cout << "matches builder: " << (j["matches_builder"].get<bool>() ? "yes" : "no") << '\n';
      std::cout << "web ranks: " << j["source_rank"] << " -> " << j["target_rank"] << '\n';
      for (const auto& [k, v] : j["cell_table"].items()) std::cout << "interior cells " << k << ": " << v << '\n';
      for (const auto& f : j["failures"]) std::cout << "FAIL " << f.get<std::string>() << '\n';
    }
  }
  return code;
}

int cmd_export(const std::string& file, const std::string& format, const std::string& out, bool as_json) {
  const Diagram d = load(file);
  std::string text;
  if (format == "dot") {
    text = to_dot(d);
  } else if (format == "obj") {
    text = to_obj(d);
  } else {
    text = serialize(d);
  }
  if (as_json && !out.empty()) {
    write_output(out, text);
    std::cout << json{{"format", format}, {"out", out}, {"bytes", text.size()}}.dump(1) << '\n';
  } else {
    write_output(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxft: ZX instrument networks for fault-tolerance protocols"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 0;

  std::string what, gadget_name, out, file, faults_file, against, from = "cbqc", to, trace_out, format = "json";
  PatchSpec spec{2, 1, true};
  bool coords = false, x_first = false, with_syndrome = false, with_tableau = false, webs = false, dense = false,
       report = false;
  std::size_t runs = 0;

  auto add_patch = [&](CLI::App* c) {
    c->add_option("--d", spec.d, "Code distance")->check(CLI::Range(2, 64));
    c->add_option("--rounds", spec.rounds, "Measurement rounds")->check(CLI::Range(1, 256));
    c->add_flag("--x-first", x_first, "Measure X stabilizers first");
  };

  auto* b = app.add_subcommand("build", "Build a network");
  b->add_option("kind", what, "cbqc, mbqc, fbqc, flobqc, rep or gadget")->required();
  b->add_option("--name", gadget_name, "Gadget name");
  add_patch(b);
  b->add_option("--out", out, "Output file");
  b->add_flag("--coords", coords, "Keep lattice coordinates");
  b->add_flag("--json", as_json, "Print results as JSON");

  auto* w = app.add_subcommand("webs", "List the Pauli-web basis");
  w->add_option("file", file, "Network file (zxft/1 JSON)")->required();
  w->add_flag("--json", as_json, "Print results as JSON");

  auto* c = app.add_subcommand("checks", "List the check webs");
  c->add_option("file", file, "Network file (zxft/1 JSON)")->required();
  c->add_flag("--json", as_json, "Print results as JSON");

  auto* i = app.add_subcommand("inject", "Insert Pauli faults");
  i->add_option("file", file, "Network file (zxft/1 JSON)")->required();
  i->add_option("--faults", faults_file, "JSON fault list")->required();
  i->add_flag("--syndrome", with_syndrome, "Report flipped checks");
  i->add_flag("--tableau", with_tableau, "Cross-check the syndrome by tableau simulation");
  i->add_option("--seed", seed, "Sampler seed");
  i->add_option("--out", out, "Write the faulted network");
  i->add_flag("--json", as_json, "Print results as JSON");

  auto* v = app.add_subcommand("verify", "Validate and check a network against the oracles");
  v->add_option("file", file, "Network file (zxft/1 JSON)")->required();
  v->add_option("--against", against, "Compare tensors with another network");
  v->add_flag("--webs", webs, "Check every basis web against the web rules");
  v->add_flag("--dense", dense, "Also check every web on the dense tensor");
  v->add_option("--tableau-runs", runs, "Fault-free tableau runs to check parities on");
  v->add_option("--seed", seed, "Sampler seed");
  v->add_flag("--json", as_json, "Print results as JSON");

  auto* t = app.add_subcommand("translate", "Translate a CBQC patch into another flavor");
  t->add_option("--from", from);
  t->add_option("--to", to)->required();
  add_patch(t);
  t->add_option("--emit-trace", trace_out, "Write the rewrite trace");
  t->add_flag("--report", report, "Check web correspondence and builder equality");
  t->add_option("--out", out, "Write the translated network");
  t->add_flag("--json", as_json, "Print results as JSON");

  auto* e = app.add_subcommand("export", "Export a network");
  e->add_option("file", file, "Network file (zxft/1 JSON)")->required();
  e->add_option("--format", format)->check(CLI::IsMember({"dot", "obj", "json"}));
  e->add_option("--out", out);
  e->add_flag("--json", as_json, "Print results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return ex.get_exit_code() == 0 ? kOk : kUsageError;
  }
  spec.z_first = !x_first;

  try {
    if (*b) return cmd_build(what, spec, gadget_name, out, coords, as_json);
    if (*w) return cmd_webs(file, false, as_json);
    if (*c) return cmd_webs(file, true, as_json);
    if (*i) return cmd_inject(file, faults_file, with_syndrome, with_tableau, seed, out, as_json);
    if (*v) return cmd_verify(file, against, webs, dense, runs, seed, as_json);
    if (*t) return cmd_translate(from, to, spec, trace_out, report, out, as_json);
    if (*e) return cmd_export(file, format, out, as_json);
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& ex) {
    std::cerr << "verification error: " << ex.what() << '\n';
    return kFailed;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return kOk;
}
