#pragma once

// Dense linear algebra over the two-element field. Used on the digit slices
// of ring matrices: fixing one statement digit turns a matrix over P(T) into
// a 0/1 matrix, and the ring problem splits into one GF(2) problem per digit.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace boolring::gf2 {

class BitVec {
 public:
  using Word = std::uint64_t;

  BitVec() = default;
  explicit BitVec(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept {
    return (words_[i / 64] >> (i % 64)) & Word{1};
  }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i / 64] ^= Word{1} << (i % 64); }

  bool none() const noexcept;
  std::size_t count() const noexcept;
  /// Parity of the bitwise AND with `other`.
  bool dot(const BitVec& other) const noexcept;

  BitVec& operator^=(const BitVec& other) noexcept;
  BitVec operator~() const;

  std::string to_string() const;
  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

/// Row-major 0/1 matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }

  BitVec multiply(const BitVec& v) const;

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
};

std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}, one vector per free column of the reduced
/// row-echelon form, in increasing free-column order.
std::vector<BitVec> nullspace(Matrix m);

/// Incremental echelon basis answering span-membership queries.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t size) : size_(size) {}

  /// Inserts `v`; returns false when it was already in the span.
  bool insert(BitVec v);
  bool contains(BitVec v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }

 private:
  void reduce(BitVec& v) const;

  std::size_t size_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace boolring::gf2
