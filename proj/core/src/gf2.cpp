#include "boolring/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace boolring::gf2 {

BitVec::BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVec::set(std::size_t i, bool value) noexcept {
  const Word mask = Word{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

bool BitVec::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVec::dot(const BitVec& other) const noexcept {
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec BitVec::operator~() const {
  BitVec out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, !test(i));
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::size_t h = v.size();
  for (BitVec::Word w : v.words()) {
    h ^= std::hash<BitVec::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitVec Matrix::multiply(const BitVec& v) const {
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
  return out;
}

namespace {

// Reduces `m` in place to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                           [c](const BitVec& r) { return r.test(c); });
    if (it == rows.end()) continue;
    std::swap(*it, rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<BitVec> rows_of(const Matrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(Matrix m) {
  auto rows = rows_of(m);
  return rref(rows, m.cols()).size();
}

std::vector<BitVec> nullspace(Matrix m) {
  auto rows = rows_of(m);
  const auto pivots = rref(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free);
    // Row i of the RREF reads x_{pivot_i} + sum_{free f} a_{i,f} x_f = 0.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].test(free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void SpanBasis::reduce(BitVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= rows_[i];
  }
}

bool SpanBasis::insert(BitVec v) {
  reduce(v);
  if (v.none()) return false;
  std::size_t pivot = 0;
  while (!v.test(pivot)) ++pivot;
  // Keep existing rows free of the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (row.test(pivot)) row ^= v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool SpanBasis::contains(BitVec v) const {
  reduce(v);
  return v.none();
}

}  // namespace boolring::gf2
