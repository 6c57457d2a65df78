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
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "zxft/builders.hpp"
#include "zxft/oracle.hpp"
#include "zxft/pauli_web.hpp"

namespace zxft {
inline void PrintTo(Flavor f, std::ostream* os) { *os << to_string(f); }
}  // namespace zxft

namespace zxft::testing {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

Mat2 pauli_matrix(char p);

/// Reference tensor of an n-qubit operator laid out like `t`: ports
/// "in<k>" / "out<k>" are matched by label, op(out_bits, in_bits) gives the
/// entry with qubit 0 as the most significant bit.
DenseTensor operator_tensor(const Diagram& d, const DenseTensor& t, int qubits,
                            const std::function<cplx(unsigned, unsigned)>& op);

/// Tensor product of single-qubit Paulis, e.g. "XZ".
cplx pauli_string_entry(const std::string& p, unsigned out, unsigned in);

/// (1 + s P) / 2 for the Pauli string P.
std::function<cplx(unsigned, unsigned)> projector(const std::string& p, int s);

/// Single-port state vector with port label "out0".
DenseTensor state_tensor(const Diagram& d, const DenseTensor& t, std::array<cplx, 2> v);

/// Logical operator on the patch ports "in/q(i,j)" and "out/q(i,j)": Z on the
/// data qubits with i == line, X on those with j == line.
OuterSignature logical_signature(const Diagram& d, char pauli, int line = 0);

}  // namespace zxft::testing
