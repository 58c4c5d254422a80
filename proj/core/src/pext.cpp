#include "boolring/pext.hpp"

#include <algorithm>
#include <bit>

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::size_t word_count(std::size_t width) {
  return (width + Pext::kWordBits - 1) / Pext::kWordBits;
}

}  // namespace

Pext::Pext(std::size_t width) : width_(width), words_(word_count(width), 0) {
  if (width == 0) {
    throw Error(ErrorCode::WidthMismatch, "pext width must be at least 1");
  }
}

Pext Pext::zero(std::size_t width) { return Pext(width); }

Pext Pext::one(std::size_t width) {
  Pext p(width);
  std::fill(p.words_.begin(), p.words_.end(), ~Word{0});
  p.clear_tail();
  return p;
}

Pext Pext::atom(std::size_t width, std::size_t statement) {
  Pext p(width);
  p.set(statement);
  return p;
}

Pext Pext::parse(std::string_view bits) {
  if (bits.empty()) {
    throw Error(ErrorCode::ParseError, "empty bitstring");
  }
  Pext p(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    switch (bits[i]) {
      case '0': break;
      case '1': p.set(i); break;
      default:
        throw Error(ErrorCode::ParseError,
                    "invalid character in bitstring '" + std::string(bits) + "'");
    }
  }
  return p;
}

Pext Pext::from_words(std::size_t width, std::span<const Word> words) {
  Pext p(width);
  std::copy_n(words.begin(), std::min(words.size(), p.words_.size()), p.words_.begin());
  p.clear_tail();
  return p;
}

bool Pext::test(std::size_t statement) const {
  if (statement >= width_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "statement " + std::to_string(statement + 1) + " beyond width " +
                    std::to_string(width_));
  }
  return (words_[statement / kWordBits] >> (statement % kWordBits)) & Word{1};
}

Pext& Pext::set(std::size_t statement, bool value) {
  if (statement >= width_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "statement " + std::to_string(statement + 1) + " beyond width " +
                    std::to_string(width_));
  }
  const Word mask = Word{1} << (statement % kWordBits);
  if (value) {
    words_[statement / kWordBits] |= mask;
  } else {
    words_[statement / kWordBits] &= ~mask;
  }
  return *this;
}

bool Pext::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Pext::is_one() const noexcept { return *this == one(width_); }

std::size_t Pext::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> Pext::lowest() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::string Pext::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

Pext& Pext::operator+=(const Pext& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Pext& Pext::operator*=(const Pext& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

void Pext::require_same_width(const Pext& other) const {
  require_width(width_, other.width_);
}

void Pext::clear_tail() noexcept {
  const std::size_t used = width_ % kWordBits;
  if (used != 0) words_.back() &= (Word{1} << used) - 1;
}

Pext operator+(Pext a, const Pext& b) {
  a += b;
  return a;
}

Pext operator*(Pext a, const Pext& b) {
  a *= b;
  return a;
}

Pext complement(const Pext& a) { return Pext::one(a.width()) + a; }

Pext unite(const Pext& a, const Pext& b) { return a + b + a * b; }

Pext union_fold(std::span<const Pext> elems) {
  if (elems.empty()) throw Error(ErrorCode::EmptyInput, "union of an empty list");
  Pext acc = elems.front();
  for (const Pext& e : elems.subspan(1)) acc = unite(acc, e);
  return acc;
}

Pext product_fold(std::span<const Pext> elems) {
  if (elems.empty()) throw Error(ErrorCode::EmptyInput, "product of an empty list");
  Pext acc = elems.front();
  for (const Pext& e : elems.subspan(1)) acc *= e;
  return acc;
}

Pext restrict_to(const Pext& catalog, const Pext& a) { return catalog * a; }

std::string_view to_string(Order order) noexcept {
  switch (order) {
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    case Order::Less: return "Less";
    case Order::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

bool dominates(const Pext& a, const Pext& b) { return (b * (a + b)).is_zero(); }

Order compare(const Pext& a, const Pext& b) {
  require_width(a.width(), b.width());
  if (a == b) return Order::Equal;
  if (dominates(a, b)) return Order::Greater;
  if (dominates(b, a)) return Order::Less;
  return Order::Incomparable;
}

bool is_zero_divisor_pair(const Pext& l, const Pext& r) {
  require_width(l.width(), r.width());
  return !l.is_zero() && !r.is_zero() && (l * r).is_zero();
}

void require_width(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(ErrorCode::WidthMismatch, "width " + std::to_string(actual) +
                                              " does not match " +
                                              std::to_string(expected));
  }
}

std::size_t PextHash::operator()(const Pext& p) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(p.width());
  for (Pext::Word w : p.words()) {
    h ^= std::hash<Pext::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool PextTextLess::operator()(const Pext& a, const Pext& b) const {
  if (a.width() != b.width()) return a.width() < b.width();
  return a.to_string() < b.to_string();
}

}  // namespace boolring
