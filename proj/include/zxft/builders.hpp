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

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zxft/diagram.hpp"

namespace zxft {

enum class Flavor { CBQC, MBQC, FBQC, FloBQC };
std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

struct PatchSpec {
  int d = 2;
  int rounds = 1;
  /// Each round measures the Z-type stabilizers first, then the X-type ones.
  bool z_first = true;
};

using Point = std::array<int, 3>;

/// Rotated surface-code patch laid out on the cubic lattice. Data qubit (i, j)
/// sits at (i + j, i - j + 2d - 1) in the plane; the plaquette whose top-left
/// corner is (i, j) sits one step further in x. Z-type plaquettes have i + j
/// even. Each round is two layers; points with one odd coordinate carry Z
/// spiders in the circuit reading, points with two odd coordinates X spiders.
class PatchGeometry {
 public:
  explicit PatchGeometry(const PatchSpec& spec);

  struct Plaquette {
    int i = 0, j = 0;
    char type = 'Z';
    int x = 0, y = 0;
    std::vector<std::pair<int, int>> data;
  };

  const PatchSpec& spec() const { return spec_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  std::pair<int, int> data_xy(int i, int j) const { return {i + j, i - j + 2 * spec_.d - 1}; }
  /// Every lattice point, sorted by (z, x, y).
  const std::vector<Point>& points() const { return points_; }
  bool has(const Point& p) const { return point_set_.count(p) != 0; }
  bool is_data(const Point& p) const;
  int first_z() const { return z0_; }
  int last_z() const { return z0_ + 2 * spec_.rounds - 1; }
  int round_of(int z) const { return (z - z0_) / 2; }
  /// The two axes along which a lattice point has neighbours in the infinite
  /// lattice (ascending).
  static std::array<int, 2> axes(const Point& p);
  static int odd_count(const Point& p);

 private:
  PatchSpec spec_;
  int z0_ = 0;
  std::vector<Plaquette> plaquettes_;
  std::vector<Point> points_;
  std::set<Point> point_set_;
  std::set<std::pair<int, int>> data_xy_;
};

/// Which stabilizer measurement (or which fusion / two-body measurement) an
/// outcome variable records. Kinds: "Z" and "X" for CBQC stabilizer
/// measurements, "M" for single-qubit measurements, "XX" and "ZZ" for fusion
/// or two-body measurement outcomes.
struct Slot {
  std::string kind;
  Point point{};
  int round = 0;
};

struct LatticeMeta {
  Flavor flavor = Flavor::CBQC;
  PatchSpec spec;
  /// Lattice point of every spider; split halves and gadget spiders inherit
  /// the point of the spider they came from.
  std::map<SpiderId, Point> point;
  std::map<VarId, Slot> slots;
  /// Data-qubit label -> spiders along its worldline, in z order.
  std::map<std::string, std::vector<SpiderId>> worldlines;
  /// Spiders of the fusion / two-body measurement gadgets.
  std::set<SpiderId> gadget_spiders;
};

// Small networks. Ports are labelled "in<k>" / "out<k>" for qubit k.
/// Names: prep_z0 prep_z1 prep_x0 prep_x1 prep_y0 prep_y1, proj_* likewise,
/// meas_z meas_x cnot cz z_rot1 z_rot2 z_rot3 zz_meas xx_meas yy_meas
/// bell_meas w4_z_meas w4_x_meas zz_meas_circuit ghz_circuit ring6_circuit.
Diagram gadget(const std::string& name);
std::vector<std::string> gadget_names();

/// One Z spider and one port "q<v>" per vertex; a Hadamard edge per graph edge.
Diagram graph_state(int n, const std::vector<std::pair<int, int>>& edges);
/// Two wires with `rounds` ZZ measurements in series; outcome i is "b<i+1>".
Diagram rep_code(int rounds);

std::pair<Diagram, LatticeMeta> cbqc(const PatchSpec& spec);
std::pair<Diagram, LatticeMeta> mbqc(const PatchSpec& spec);
std::pair<Diagram, LatticeMeta> fbqc(const PatchSpec& spec);
std::pair<Diagram, LatticeMeta> flobqc(const PatchSpec& spec);
std::pair<Diagram, LatticeMeta> build(Flavor f, const PatchSpec& spec);

void check_spec(const PatchSpec& spec);

/// Spider-spider edges whose ends are away from every boundary: not next to a
/// port, not on the first or last layer, and at points with all four lattice
/// neighbours present.
std::set<EdgeId> bulk_edges(const Diagram& d, const LatticeMeta& meta);

/// FloBQC chain pairing at point p: true if the neighbour direction
/// (axis, sign) belongs to the half {-u, +next(u)}, where next cycles
/// x -> z -> y -> x and u is the axis of p whose successor is its other axis.
bool chain_first_half(const Point& p, int axis, int sign);

/// Connected components after deleting the gadget spiders (resource states in
/// FBQC, qubit chains in FloBQC). Maps each remaining spider to a component id.
std::map<SpiderId, int> components_without_gadgets(const Diagram& d, const LatticeMeta& meta);

/// Centre of a check cell: Z cells sit between two Z layers above a Z
/// plaquette, X cells likewise for X plaquettes.
struct Cell {
  char type = 'Z';
  Point center{};
  /// The 18 surrounding points: 6 face centres and 12 edge midpoints.
  std::vector<Point> points() const;
};

std::vector<Cell> cells(const PatchGeometry& g);
/// All 18 cell points exist in the patch.
bool complete(const PatchGeometry& g, const Cell& c);

}  // namespace zxft
