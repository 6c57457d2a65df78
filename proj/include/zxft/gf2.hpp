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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zxft::gf2 {

/// Dense bit vector over GF(2), packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void resize(std::size_t n);

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& o) const = default;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t popcount() const;
  /// Parity of the bitwise AND with `o`.
  bool dot(const BitVec& o) const;
  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  std::vector<std::size_t> ones() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major GF(2) matrix with a fixed column count.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVec& operator[](std::size_t r) { return rows_[r]; }
  const BitVec& operator[](std::size_t r) const { return rows_[r]; }
  void add_row(BitVec row);
  BitVec& new_row() {
    rows_.emplace_back(cols_);
    return rows_.back();
  }

  /// Reduced row echelon form in place, lowest-index pivots first. Zero rows
  /// are dropped. Returns the pivot column of each remaining row.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Basis of { x : A x = 0 }, one vector per free column in increasing order.
std::vector<BitVec> nullspace(BitMatrix a);

/// Some x with A x = b (free variables set to zero), or nullopt.
std::optional<BitVec> solve(BitMatrix a, const BitVec& b);

/// Rank of a set of vectors of equal length.
std::size_t rank(const std::vector<BitVec>& vs);

/// Incremental echelon basis: supports membership queries and reduction.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}
  /// Reduces v against the basis; returns true if v was independent (and
  /// was added).
  bool insert(BitVec v);
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace zxft::gf2
