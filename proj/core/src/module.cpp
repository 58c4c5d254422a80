#include "boolring/module.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::size_t common_width(std::span<const Pext> elems) {
  if (elems.empty()) throw Error(ErrorCode::EmptyInput, "empty list of ring elements");
  const std::size_t width = elems.front().width();
  for (const Pext& e : elems) require_width(width, e.width());
  return width;
}

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

Pext random_pext(std::size_t width, std::mt19937_64& rng) {
  std::vector<Pext::Word> words((width + Pext::kWordBits - 1) / Pext::kWordBits);
  for (auto& w : words) w = rng();
  return Pext::from_words(width, words);
}

// λ = ⊙_i (1 ⊕ w_i): the digits on which every component of w vanishes.
Pext annihilator(const Modus& w) {
  Pext lambda = Pext::one(w.width());
  for (const Pext& e : w.entries()) lambda *= complement(e);
  return lambda;
}

}  // namespace

// ---------------------------------------------------------------- Modus

Modus::Modus(std::vector<Pext> entries) : width_(0), entries_(std::move(entries)) {
  width_ = common_width(entries_);
}

Modus Modus::zero(std::size_t length, std::size_t width) {
  if (length == 0) throw Error(ErrorCode::EmptyInput, "modus of length zero");
  return Modus(std::vector<Pext>(length, Pext::zero(width)));
}

bool Modus::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Pext& p) { return p.is_zero(); });
}

gf2::BitVec Modus::slice(std::size_t statement) const {
  gf2::BitVec v(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) v.set(i, entries_[i].test(statement));
  return v;
}

Modus& Modus::operator+=(const Modus& other) {
  require_shape(size() == other.size(), "modus lengths differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Modus operator+(Modus a, const Modus& b) {
  a += b;
  return a;
}

Modus operator*(const Pext& lambda, const Modus& v) {
  std::vector<Pext> out;
  out.reserve(v.size());
  for (const Pext& e : v.entries()) out.push_back(lambda * e);
  return Modus(std::move(out));
}

// ---------------------------------------------------------------- BrMatrix

BrMatrix::BrMatrix(std::size_t rows, std::size_t cols, std::vector<Pext> cells)
    : rows_(rows), cols_(cols), width_(0), cells_(std::move(cells)) {
  require_shape(rows > 0 && cols > 0, "matrix must have at least one row and column");
  require_shape(cells_.size() == rows * cols, "cell count does not match rows x cols");
  width_ = common_width(cells_);
}

BrMatrix BrMatrix::zero(std::size_t rows, std::size_t cols, std::size_t width) {
  return BrMatrix(rows, cols, std::vector<Pext>(rows * cols, Pext::zero(width)));
}

BrMatrix BrMatrix::diagonal(std::size_t size, const Pext& diag) {
  BrMatrix m = zero(size, size, diag.width());
  for (std::size_t i = 0; i < size; ++i) m(i, i) = diag;
  return m;
}

BrMatrix BrMatrix::from_rows(const std::vector<std::vector<Pext>>& rows) {
  require_shape(!rows.empty() && !rows.front().empty(), "empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Pext> cells;
  cells.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    require_shape(row.size() == cols, "ragged matrix rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return BrMatrix(rows.size(), cols, std::move(cells));
}

const Pext& BrMatrix::operator()(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index");
  return cells_[r * cols_ + c];
}

Pext& BrMatrix::operator()(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index");
  return cells_[r * cols_ + c];
}

gf2::Matrix BrMatrix::slice(std::size_t statement) const {
  gf2::Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.set(r, c, cells_[r * cols_ + c].test(statement));
    }
  }
  return out;
}

BrMatrix operator+(const BrMatrix& a, const BrMatrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shapes differ");
  std::vector<Pext> cells;
  cells.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) cells.push_back(a(r, c) + b(r, c));
  }
  return BrMatrix(a.rows(), a.cols(), std::move(cells));
}

Modus matvec(const BrMatrix& m, const Modus& w) {
  require_shape(m.cols() == w.size(), "matrix has " + std::to_string(m.cols()) +
                                          " columns but modus has length " +
                                          std::to_string(w.size()));
  require_width(m.width(), w.width());
  std::vector<Pext> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Pext acc = Pext::zero(m.width());
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * w[j];
    out.push_back(std::move(acc));
  }
  return Modus(std::move(out));
}

BrMatrix similarity_matrix(std::span<const Pext> texts, SimilarityKind kind) {
  common_width(texts);
  const std::size_t k = texts.size();
  std::vector<Pext> cells;
  cells.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      cells.push_back(kind == SimilarityKind::Product ? texts[i] * texts[j]
                                                      : texts[i] + texts[j]);
    }
  }
  return BrMatrix(k, k, std::move(cells));
}

// ---------------------------------------------------------------- PairList

PairList::PairList(std::size_t text_count,
                   std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : text_count_(text_count), pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw Error(ErrorCode::EmptyInput, "empty pair list");
  for (const auto& [a, b] : pairs_) {
    if (a >= text_count_ || b >= text_count_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                      ") outside 1.." + std::to_string(text_count_));
    }
  }
}

PairList PairList::all_pairs(std::size_t text_count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < text_count; ++i) {
    for (std::size_t j = i + 1; j < text_count; ++j) pairs.emplace_back(i, j);
  }
  return PairList(text_count, std::move(pairs));
}

bool PairList::connects_all() const {
  std::vector<std::size_t> parent(text_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = text_count_;
  for (const auto& [a, b] : pairs_) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

Pext pair_dot(const std::pair<Pext, Pext>& p, const std::pair<Pext, Pext>& q) {
  return p.first * q.first + p.second * q.second;
}

BrMatrix gramian(std::span<const Pext> texts, const PairList& pairs) {
  common_width(texts);
  if (pairs.text_count() != texts.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "pair list was built for " +
                                                std::to_string(pairs.text_count()) +
                                                " texts, got " +
                                                std::to_string(texts.size()));
  }
  const std::size_t n = pairs.size();
  std::vector<Pext> cells;
  cells.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::pair<Pext, Pext> ps{texts[pairs[s].first], texts[pairs[s].second]};
    for (std::size_t t = 0; t < n; ++t) {
      cells.push_back(pair_dot(ps, {texts[pairs[t].first], texts[pairs[t].second]}));
    }
  }
  return BrMatrix(n, n, std::move(cells));
}

// ---------------------------------------------------------------- kernels

KernelBasis kernel_basis(const BrMatrix& m) {
  KernelBasis out;
  out.per_bit_nullity.reserve(m.width());
  out.per_bit_basis.reserve(m.width());
  for (std::size_t digit = 0; digit < m.width(); ++digit) {
    auto basis = gf2::nullspace(m.slice(digit));
    out.per_bit_nullity.push_back(basis.size());
    const Pext atom = Pext::atom(m.width(), digit);
    const Pext none = Pext::zero(m.width());
    for (const auto& u : basis) {
      std::vector<Pext> entries;
      entries.reserve(m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(u.test(j) ? atom : none);
      out.generators.emplace_back(std::move(entries));
      out.generator_digit.push_back(digit);
    }
    out.per_bit_basis.push_back(std::move(basis));
  }
  return out;
}

bool in_kernel(const BrMatrix& m, const Modus& v) { return matvec(m, v).is_zero(); }

Modus random_modus(std::size_t length, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Pext> entries;
  entries.reserve(length);
  for (std::size_t i = 0; i < length; ++i) entries.push_back(random_pext(width, rng));
  return Modus(std::move(entries));
}

Modus random_kernel_element(const BrMatrix& m, std::uint64_t seed) {
  const Modus v = random_modus(m.cols(), m.width(), seed);
  return annihilator(matvec(m, v)) * v;
}

Modus split_kernel_element(const BrMatrix& m1, const BrMatrix& m2, std::uint64_t seed) {
  require_shape(m1.rows() == m2.rows() && m1.cols() == m2.cols(), "split matrices differ in shape");
  require_width(m1.width(), m2.width());
  const Modus v = random_modus(m1.cols(), m1.width(), seed);
  const Modus u = matvec(m1, v);
  const Modus w = matvec(m2, v);
  Pext lambda = Pext::one(m1.width());
  for (std::size_t i = 0; i < u.size(); ++i) lambda *= Pext::one(m1.width()) + u[i] + w[i];
  return lambda * v;
}

Modus nonzero_kernel_element(const BrMatrix& m, std::uint64_t seed, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Modus x = random_kernel_element(m, seed + attempt);
    if (!x.is_zero()) return x;
  }
  throw Error(ErrorCode::NotFound, "no nonzero kernel element within " +
                                       std::to_string(budget) + " attempts");
}

bool is_invariant_submodule(const BrMatrix& m, std::span<const Modus> gens) {
  require_shape(m.rows() == m.cols(), "invariance needs a square matrix");
  for (const Modus& g : gens) {
    require_shape(g.size() == m.cols(), "generator length does not match matrix");
    require_width(m.width(), g.width());
  }
  std::vector<Modus> images;
  images.reserve(gens.size());
  for (const Modus& g : gens) images.push_back(matvec(m, g));

  // Ring coefficients act digit by digit, so membership in the ring span is
  // GF(2) span membership in every digit slice.
  for (std::size_t digit = 0; digit < m.width(); ++digit) {
    gf2::SpanBasis span(m.rows());
    for (const Modus& g : gens) span.insert(g.slice(digit));
    for (const Modus& image : images) {
      if (!span.contains(image.slice(digit))) return false;
    }
  }
  return true;
}

}  // namespace boolring
