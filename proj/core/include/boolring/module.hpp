#pragma once

// The module (P(T))^k: modi, matrices over the ring, and their kernels.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boolring/gf2.hpp"
#include "boolring/pext.hpp"

namespace boolring {

/// A length-k vector of ring elements of one common width.
class Modus {
 public:
  explicit Modus(std::vector<Pext> entries);
  static Modus zero(std::size_t length, std::size_t width);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t width() const noexcept { return width_; }
  const Pext& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Pext>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  /// The 0/1 vector of digit `statement` across all entries.
  gf2::BitVec slice(std::size_t statement) const;

  friend bool operator==(const Modus&, const Modus&) = default;

  Modus& operator+=(const Modus& other);

 private:
  std::size_t width_;
  std::vector<Pext> entries_;
};

Modus operator+(Modus a, const Modus& b);
/// Ring-modus product λ ⊙ v.
Modus operator*(const Pext& lambda, const Modus& v);

/// Rectangular matrix with entries in the ring.
class BrMatrix {
 public:
  BrMatrix(std::size_t rows, std::size_t cols, std::vector<Pext> cells);
  static BrMatrix zero(std::size_t rows, std::size_t cols, std::size_t width);
  /// Diagonal matrix with `diag` on the diagonal.
  static BrMatrix diagonal(std::size_t size, const Pext& diag);
  static BrMatrix from_rows(const std::vector<std::vector<Pext>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t width() const noexcept { return width_; }

  const Pext& operator()(std::size_t r, std::size_t c) const;
  Pext& operator()(std::size_t r, std::size_t c);

  /// The 0/1 matrix of digit `statement`.
  gf2::Matrix slice(std::size_t statement) const;

  friend bool operator==(const BrMatrix&, const BrMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<Pext> cells_;
};

/// Cell-wise ⊕.
BrMatrix operator+(const BrMatrix& a, const BrMatrix& b);

/// v_i = (M_i1 ⊙ w_1) ⊕ ... ⊕ (M_im ⊙ w_m).
Modus matvec(const BrMatrix& m, const Modus& w);

enum class SimilarityKind { Product, Difference };

/// M_ij = X_i ⊙ X_j (Product) or X_i ⊕ X_j (Difference).
BrMatrix similarity_matrix(std::span<const Pext> texts, SimilarityKind kind);

/// Ordered index pairs (0-based) into a list of texts.
class PairList {
 public:
  PairList(std::size_t text_count, std::vector<std::pair<std::size_t, std::size_t>> pairs);
  /// (0,1), (0,2), ..., (k-2,k-1).
  static PairList all_pairs(std::size_t text_count);

  std::size_t text_count() const noexcept { return text_count_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::pair<std::size_t, std::size_t>& operator[](std::size_t i) const {
    return pairs_.at(i);
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept {
    return pairs_;
  }

  /// True when the undirected graph of the pairs spans every text.
  bool connects_all() const;

 private:
  std::size_t text_count_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// (X_a, X_b) · (X_c, X_d) = (X_a ⊙ X_c) ⊕ (X_b ⊙ X_d).
Pext pair_dot(const std::pair<Pext, Pext>& p, const std::pair<Pext, Pext>& q);

/// G_st = (s-th pair) · (t-th pair).
BrMatrix gramian(std::span<const Pext> texts, const PairList& pairs);

struct KernelBasis {
  /// Each generator has exactly one nonzero digit.
  std::vector<Modus> generators;
  /// Digit carried by each generator.
  std::vector<std::size_t> generator_digit;
  /// Nullspace dimension of each digit slice.
  std::vector<std::size_t> per_bit_nullity;
  /// GF(2) nullspace basis of each digit slice.
  std::vector<std::vector<gf2::BitVec>> per_bit_basis;
};

/// Exact kernel of M: GF(2) nullspace of every digit slice, each basis vector
/// lifted back to a modus carrying that single digit. Every kernel element is
/// a ⊕-sum of ring multiples of the generators.
KernelBasis kernel_basis(const BrMatrix& m);

bool in_kernel(const BrMatrix& m, const Modus& v);

/// Uniformly random modus; every digit of every entry is an independent
/// fair bit drawn from a generator seeded with `seed`.
Modus random_modus(std::size_t length, std::size_t width, std::uint64_t seed);

/// Draws random v, forms w = Mv and λ = (1⊕w_1)⊙...⊙(1⊕w_n), and returns
/// λ ⊙ v. The result may be zero.
Modus random_kernel_element(const BrMatrix& m, std::uint64_t seed);

/// Same construction for a split M = M1 ⊕ M2: u = M1 v, w = M2 v and
/// λ = ⊙_i (1 ⊕ u_i ⊕ w_i). The result lies in ker(M1 ⊕ M2).
Modus split_kernel_element(const BrMatrix& m1, const BrMatrix& m2, std::uint64_t seed);

/// Retries random_kernel_element with seed, seed+1, ... until a nonzero
/// element appears; NotFound after `budget` attempts.
Modus nonzero_kernel_element(const BrMatrix& m, std::uint64_t seed, std::size_t budget);

/// True iff M g lies in the ring span of `gens` for every generator g.
bool is_invariant_submodule(const BrMatrix& m, std::span<const Modus> gens);

}  // namespace boolring
