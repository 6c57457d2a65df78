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


#include "helpers.hpp"

#include <string>

namespace zxft::testing {

Mat2 pauli_matrix(char p) {
  const cplx i(0, 1);
  switch (p) {
    case 'X':
      return {{{0, 1}, {1, 0}}};
    case 'Y':
      return {{{0, -i}, {i, 0}}};
    case 'Z':
      return {{{1, 0}, {0, -1}}};
    default:
      return {{{1, 0}, {0, 1}}};
  }
}

DenseTensor operator_tensor(const Diagram& d, const DenseTensor& t, int qubits,
                            const std::function<cplx(unsigned, unsigned)>& op) {
  DenseTensor ref{t.ports, std::vector<cplx>(t.amp.size())};
  const std::size_t n = t.ports.size();
  for (std::size_t idx = 0; idx < t.amp.size(); ++idx) {
    unsigned in = 0, out = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned bit = (idx >> (n - 1 - k)) & 1u;
      const std::string& label = d.port(t.ports[k]).label;
      const bool is_in = label.rfind("in", 0) == 0;
      const int q = std::stoi(label.substr(is_in ? 2 : 3));
      unsigned& word = is_in ? in : out;
      word |= bit << (qubits - 1 - q);
    }
    ref.amp[idx] = op(out, in);
  }
  return ref;
}

cplx pauli_string_entry(const std::string& p, unsigned out, unsigned in) {
  cplx v = 1;
  const int n = static_cast<int>(p.size());
  for (int q = 0; q < n; ++q) {
    const unsigned o = (out >> (n - 1 - q)) & 1u, i = (in >> (n - 1 - q)) & 1u;
    v *= pauli_matrix(p[q])[o][i];
  }
  return v;
}

std::function<cplx(unsigned, unsigned)> projector(const std::string& p, int s) {
  return [p, s](unsigned out, unsigned in) {
    return 0.5 * ((out == in ? 1.0 : 0.0) + static_cast<double>(s) * pauli_string_entry(p, out, in));
  };
}

DenseTensor state_tensor(const Diagram&, const DenseTensor& t, std::array<cplx, 2> v) {
  return DenseTensor{t.ports, {v[0], v[1]}};
}

OuterSignature logical_signature(const Diagram& d, char pauli, int line) {
  OuterSignature s;
  for (const auto& [id, port] : d.ports()) {
    const auto open = port.label.find('(');
    const auto comma = port.label.find(',');
    if (open == std::string::npos || comma == std::string::npos) continue;
    const int i = std::stoi(port.label.substr(open + 1));
    const int j = std::stoi(port.label.substr(comma + 1));
    if ((pauli == 'Z' ? i : j) == line) s[id] = pauli_from_char(pauli);
  }
  return s;
}

}  // namespace zxft::testing
