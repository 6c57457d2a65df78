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

#include "zxft/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace zxft::gf2 {

void BitVec::resize(std::size_t n) {
  size_ = n;
  words_.resize((n + 63) / 64, 0);
  if (n & 63) words_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.size_ != size_) throw std::invalid_argument("gf2: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::dot(const BitVec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitMatrix::add_row(BitVec row) {
  if (row.size() != cols_) throw std::invalid_argument("gf2: row width mismatch");
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> BitMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t nwords = (cols_ + 63) / 64;
  for (std::size_t w = 0; w < nwords && r < rows_.size(); ++w) {
    for (std::size_t b = 0; b < 64 && r < rows_.size(); ++b) {
      const std::size_t c = (w << 6) + b;
      if (c >= cols_) break;
      const std::uint64_t m = std::uint64_t{1} << b;
      std::size_t p = r;
      while (p < rows_.size() && !(rows_[p].words()[w] & m)) ++p;
      if (p == rows_.size()) continue;
      std::swap(rows_[r], rows_[p]);
      const auto& pr = rows_[r].words();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == r || !(rows_[i].words()[w] & m)) continue;
        auto& ri = rows_[i].words();
        for (std::size_t k = w; k < nwords; ++k) ri[k] ^= pr[k];
      }
      pivots.push_back(c);
      ++r;
    }
  }
  rows_.resize(r);
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rref().size();
}

std::vector<BitVec> nullspace(BitMatrix a) {
  const auto pivots = a.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(a.cols());
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (a[r].get(f)) v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVec> solve(BitMatrix a, const BitVec& b) {
  const std::size_t n = a.cols();
  BitMatrix aug(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec row = a[r];
    row.resize(n + 1);
    row.set(n, b.get(r));
    aug.add_row(std::move(row));
  }
  const auto pivots = aug.rref();
  BitVec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    if (aug[r].get(n)) x.set(pivots[r]);
  }
  return x;
}

std::size_t rank(const std::vector<BitVec>& vs) {
  if (vs.empty()) return 0;
  BitMatrix m(vs.front().size());
  for (const auto& v : vs) m.add_row(v);
  return m.rref().size();
}

BitVec EchelonBasis::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

bool EchelonBasis::insert(BitVec v) {
  if (v.size() != n_) throw std::invalid_argument("gf2: basis width mismatch");
  v = reduce(std::move(v));
  const std::size_t p = v.first();
  if (p == v.size()) return false;
  // Keep rows reduced with respect to the new pivot so reduce() stays single-pass.
  for (auto& row : rows_)
    if (row.get(p)) row ^= v;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace zxft::gf2
