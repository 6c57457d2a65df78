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

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zxft/diagram.hpp"
#include "zxft/gf2.hpp"
#include "zxft/pauli_web.hpp"

namespace zxft {

using Assignment = std::map<VarId, bool>;
using cplx = std::complex<double>;

/// Amplitudes over boundary-port bitstrings. Every port is treated as a ket;
/// the first port in `ports` is the most significant bit of the index.
struct DenseTensor {
  std::vector<PortId> ports;
  std::vector<cplx> amp;

  cplx at(const std::vector<int>& bits) const;
  bool is_zero(double tol = 1e-12) const;
};

enum class ContractionOrder { Greedy, Sequential };

struct DenseOptions {
  std::size_t max_ports = 14;
  ContractionOrder order = ContractionOrder::Greedy;
};

/// Exact contraction up to a global scalar. Unassigned outcome variables
/// read as 0. Throws SizeError above `max_ports` or when an intermediate
/// factor grows past 2^24 entries.
DenseTensor dense_contract(const Diagram& d, const Assignment& a = {}, const DenseOptions& opt = {});

/// True if b = c * a for some nonzero c, or both vanish. The comparison is
/// relative to the largest-magnitude entry.
bool proportional(const DenseTensor& a, const DenseTensor& b, double tol = 1e-9);

/// Same tensor up to a scalar for every outcome assignment (all of them up to
/// 2^10, otherwise 256 random ones). Ports are matched by label.
bool equivalent(const Diagram& a, const Diagram& b, std::uint64_t seed = 0, double tol = 1e-9);

/// Every outcome assignment to test: exhaustive up to 2^10, else `samples`
/// random ones.
std::vector<Assignment> assignments_to_test(const Diagram& d, std::uint64_t seed = 0, std::size_t samples = 256);

/// Checks S T = (-1)^sign T on the dense tensor T, where S applies X^g Z^r at
/// each port, for every tested outcome assignment.
bool verify_clifford(const PauliWeb& w, const Diagram& d, double tol = 1e-9);

/// Generic circuit reading of a network: every edge is a Bell pair (with a
/// Hadamard on one half for Hadamard edges) and every spider projects the
/// qubits at its edge ends. Z spiders measure Z1 Zi (forced +1) and X on all
/// legs; X spiders the color-swapped pair. The all-leg outcome is forced by
/// the phase unless the spider is an instrument, in which case it defines the
/// instrument value. Port halves stay open.
struct ReadingStep {
  enum class Type { BellPair, Measure, Reset };
  Type type = Type::BellPair;
  std::vector<int> qubits;
  /// Measure: 'X' or 'Z' on every listed qubit.
  char basis = 'Z';
  bool hadamard = false;
  /// Measure: forced outcome, or -1 when the outcome feeds an instrument.
  int forced = 0;
  SpiderId spider = -1;
  /// Instrument value = outcome XOR offset.
  bool offset = false;
};

struct CircuitReading {
  int qubits = 0;
  std::vector<ReadingStep> steps;
};

CircuitReading circuit_reading(const Diagram& d);

/// Symbolic stabilizer simulation of a reading. Outcomes are affine forms in
/// the random bits of the run; sampling draws uniformly from all records
/// consistent with the forced outcomes.
class TableauSampler {
 public:
  explicit TableauSampler(const Diagram& d);
  TableauSampler(const Diagram& d, const CircuitReading& reading);

  /// False if the forced outcomes are contradictory (the network is zero).
  bool feasible() const { return feasible_; }
  Assignment sample(std::mt19937_64& rng) const;
  std::vector<Assignment> run(std::size_t runs, std::uint64_t seed) const;

 private:
  void build(const Diagram& d, const CircuitReading& reading);

  bool feasible_ = true;
  // Each outcome variable as an affine function of free bits:
  // value = const ^ <coeff, free>.
  std::vector<VarId> var_ids_;
  std::vector<gf2::BitVec> var_coeff_;
  std::vector<bool> var_const_;
  std::size_t n_free_ = 0;
};

struct InvarianceReport {
  std::vector<std::string> failures;
  std::size_t tensors_checked = 0;
  std::size_t permutations_checked = 0;
  std::size_t transpositions_checked = 0;
  bool y_transpose_negative = false;
  bool cz_swap_symmetric = false;
  bool cz_transpose_symmetric = false;
  bool ok() const { return failures.empty() && y_transpose_negative && cz_swap_symmetric && cz_transpose_symmetric; }
};

/// Permutation and partial-transposition invariance of Z and X spiders with
/// degree 1..5 and phases 0..3 quarter turns, and of the Hadamard; the
/// transpose of Y as a negative control; the CZ symmetry checks.
InvarianceReport invariance_suite(double tol = 1e-12);

}  // namespace zxft
