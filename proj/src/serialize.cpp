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

#include <set>

#include "json.hpp"
#include "zxft/diagram.hpp"

namespace zxft {

using nlohmann::json;

namespace {

json coord_json(const std::optional<Coord>& c) {
  if (!c) return nullptr;
  return json::array({(*c)[0], (*c)[1], (*c)[2]});
}

std::optional<Coord> parse_coord(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 3) throw ParseError(where, "coord must be null or a 3-element array");
  Coord c{};
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) throw ParseError(where, "coord entries must be numbers");
    c[i] = j[i].get<double>();
  }
  return c;
}

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing field: ") + key);
  return *it;
}

int need_int(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Endpoint parse_endpoint(const json& j, const std::string& where) {
  // Endpoints are written as {"spider": id} or {"port": id}; a bare integer
  // refers to a spider.
  if (j.is_number_integer()) return Endpoint::spider(j.get<int>());
  if (j.is_object()) {
    if (j.contains("spider")) return Endpoint::spider(j["spider"].get<int>());
    if (j.contains("port")) return Endpoint::port(j["port"].get<int>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.size() > 1 && (s[0] == 's' || s[0] == 'p')) {
      try {
        const int id = std::stoi(s.substr(1));
        return s[0] == 's' ? Endpoint::spider(id) : Endpoint::port(id);
      } catch (const std::exception&) {
      }
    }
  }
  throw ParseError(where, "malformed endpoint");
}

}  // namespace

std::string serialize(const Diagram& d, int indent) {
  json j;
  j["format"] = "zxft/1";
  json spiders = json::array();
  for (const auto& [id, s] : d.spiders()) {
    json o;
    o["id"] = id;
    o["kind"] = to_string(s.kind);
    o["phase_quarter_turns"] = s.phase.quarter;
    if (s.instrument) {
      o["outcome"] = {{"vars", s.instrument->vars()}, {"const", s.instrument->konst() ? 1 : 0}};
    } else {
      o["outcome"] = nullptr;
    }
    if (s.coord) o["coord"] = coord_json(s.coord);
    spiders.push_back(o);
  }
  json edges = json::array();
  for (const auto& [id, e] : d.edges()) {
    edges.push_back({{"id", id}, {"a", e.a.to_string()}, {"b", e.b.to_string()}, {"kind", to_string(e.kind)}});
  }
  json ports = json::array();
  for (const auto& [id, p] : d.ports()) {
    ports.push_back({{"id", id}, {"dir", to_string(p.dir)}, {"label", p.label}, {"coord", coord_json(p.coord)}});
  }
  json vars = json::array();
  for (const auto& [id, v] : d.outcome_vars()) vars.push_back({{"id", id}, {"label", v.label}});
  j["spiders"] = spiders;
  j["edges"] = edges;
  j["ports"] = ports;
  j["outcome_vars"] = vars;
  j["next_ids"] = {d.next_spider_id(), d.next_edge_id(), d.next_port_id(), d.next_var_id()};
  return j.dump(indent < 0 ? -1 : indent);
}

Diagram deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("", "top level must be an object");
  if (j.contains("format") && j["format"] != "zxft/1")
    throw ParseError("format", "unsupported format " + j["format"].dump());
  const json& spiders = need(j, "spiders", "");
  const json& edges = need(j, "edges", "");
  const json ports = j.value("ports", json::array());
  const json vars = j.value("outcome_vars", json::array());
  if (!spiders.is_array()) throw ParseError("spiders", "expected an array");
  if (!edges.is_array()) throw ParseError("edges", "expected an array");

  Diagram d;
  try {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string where = "outcome_vars[" + std::to_string(i) + "]";
      d.insert_outcome_var({need_int(vars[i], "id", where), vars[i].value("label", std::string())});
    }
    std::set<int> hnodes;
    for (std::size_t i = 0; i < spiders.size(); ++i) {
      const std::string where = "spiders[" + std::to_string(i) + "]";
      const json& o = spiders[i];
      Spider s;
      s.id = need_int(o, "id", where);
      const std::string kind = need_string(o, "kind", where);
      if (kind == "Z") {
        s.kind = SpiderKind::Z;
      } else if (kind == "X") {
        s.kind = SpiderKind::X;
      } else if (kind == "H") {
        hnodes.insert(s.id);
      } else {
        throw ParseError(where + ".kind", "unknown spider kind '" + kind + "'");
      }
      if (o.contains("phase_quarter_turns")) {
        if (!o["phase_quarter_turns"].is_number_integer())
          throw ParseError(where + ".phase_quarter_turns", "expected an integer");
        s.phase = Phase(o["phase_quarter_turns"].get<int>());
      }
      if (o.contains("outcome") && !o["outcome"].is_null()) {
        const json& oc = o["outcome"];
        const json& vs = need(oc, "vars", where + ".outcome");
        if (!vs.is_array()) throw ParseError(where + ".outcome.vars", "expected an array");
        std::vector<VarId> ids;
        for (const auto& v : vs) {
          if (!v.is_number_integer()) throw ParseError(where + ".outcome.vars", "expected integers");
          const VarId id = v.get<int>();
          if (!d.outcome_vars().count(id))
            throw ParseError(where + ".outcome.vars", "unknown outcome var " + std::to_string(id));
          ids.push_back(id);
        }
        const int c = oc.value("const", 0);
        s.instrument = OutcomeExpr(ids, (c & 1) != 0);
      }
      if (o.contains("coord")) s.coord = parse_coord(o["coord"], where + ".coord");
      d.insert_spider(std::move(s));
    }
    for (std::size_t i = 0; i < ports.size(); ++i) {
      const std::string where = "ports[" + std::to_string(i) + "]";
      Port p;
      p.id = need_int(ports[i], "id", where);
      const std::string dir = need_string(ports[i], "dir", where);
      if (dir == "in") {
        p.dir = PortDir::In;
      } else if (dir == "out") {
        p.dir = PortDir::Out;
      } else {
        throw ParseError(where + ".dir", "direction must be 'in' or 'out'");
      }
      if (ports[i].contains("label") && ports[i]["label"].is_string()) p.label = ports[i]["label"].get<std::string>();
      if (ports[i].contains("coord")) p.coord = parse_coord(ports[i]["coord"], where + ".coord");
      d.insert_port(std::move(p));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      Edge e;
      e.id = need_int(edges[i], "id", where);
      e.a = parse_endpoint(need(edges[i], "a", where), where + ".a");
      e.b = parse_endpoint(need(edges[i], "b", where), where + ".b");
      const std::string kind = edges[i].value("kind", std::string("plain"));
      if (kind == "plain") {
        e.kind = EdgeKind::Plain;
      } else if (kind == "h") {
        e.kind = EdgeKind::Hadamard;
      } else {
        throw ParseError(where + ".kind", "edge kind must be 'plain' or 'h'");
      }
      try {
        d.insert_edge(e);
      } catch (const IntegrityError& err) {
        throw ParseError(where, err.what());
      }
    }
    if (j.contains("next_ids") && j["next_ids"].is_array() && j["next_ids"].size() == 4) {
      const auto& n = j["next_ids"];
      d.reserve_ids(n[0].get<int>(), n[1].get<int>(), n[2].get<int>(), n[3].get<int>());
    }
    // Absorb explicit two-leg Hadamard nodes into edge kinds.
    for (int h : hnodes) {
      std::vector<EdgeId> inc = d.spider(h).edges;
      if (inc.size() != 2 || inc[0] == inc[1])
        throw ParseError("spiders", "H node " + std::to_string(h) + " must have exactly two legs");
      const Edge e1 = d.edge(inc[0]);
      const Edge e2 = d.edge(inc[1]);
      const Endpoint self = Endpoint::spider(h);
      const Endpoint x = e1.other(self);
      const Endpoint y = e2.other(self);
      const EdgeKind k = e1.kind ^ e2.kind ^ EdgeKind::Hadamard;
      d.remove_spider(h);
      d.add_edge(x, y, k);
    }
  } catch (const IntegrityError& e) {
    throw ParseError("", e.what());
  }
  for (const auto& v : d.validate()) throw ParseError("", v.what);
  return d;
}

}  // namespace zxft
