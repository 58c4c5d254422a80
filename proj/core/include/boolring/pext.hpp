#pragma once

// Finite Boolean ring P(T) over a statement catalog T of size n.
//
// A Pext is a subset of the catalog stored as an n-bit vector. Statement
// indices are 0-based in code; the external text form writes statement 1
// as the leftmost character ("0110" holds statements 2 and 3).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolring {

class Pext {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  static Pext zero(std::size_t width);
  static Pext one(std::size_t width);
  /// Singleton {statement}; `statement` is 0-based.
  static Pext atom(std::size_t width, std::size_t statement);
  /// Parses /[01]+/ with the leftmost character as statement 1.
  static Pext parse(std::string_view bits);
  /// Builds from raw storage words (bit i of word w is statement 64w+i);
  /// bits past `width` are dropped.
  static Pext from_words(std::size_t width, std::span<const Word> words);

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t statement) const;
  Pext& set(std::size_t statement, bool value = true);

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  std::size_t count() const noexcept;
  std::optional<std::size_t> lowest() const noexcept;

  std::string to_string() const;
  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const Pext&, const Pext&) = default;

  // In-place ring operations; operands must share a width.
  Pext& operator+=(const Pext& other);  // symmetric difference
  Pext& operator*=(const Pext& other);  // intersection

 private:
  explicit Pext(std::size_t width);
  void require_same_width(const Pext& other) const;
  void clear_tail() noexcept;

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

/// A ⊕ B.
Pext operator+(Pext a, const Pext& b);
/// A ⊙ B.
Pext operator*(Pext a, const Pext& b);

Pext complement(const Pext& a);
/// A ⊕ B ⊕ (A ⊙ B).
Pext unite(const Pext& a, const Pext& b);
/// Left fold of `unite`; throws EmptyInput on an empty list.
Pext union_fold(std::span<const Pext> elems);
/// Product of all elements; throws EmptyInput on an empty list.
Pext product_fold(std::span<const Pext> elems);

/// The restriction homomorphism X ↦ T ⊙ X.
Pext restrict_to(const Pext& catalog, const Pext& a);

enum class Order { Equal, Greater, Less, Incomparable };

std::string_view to_string(Order order) noexcept;

/// a ≥ b in the ring order, i.e. b ⊙ (a ⊕ b) = 0.
bool dominates(const Pext& a, const Pext& b);
Order compare(const Pext& a, const Pext& b);

/// l ≠ 0, r ≠ 0 and l ⊙ r = 0.
bool is_zero_divisor_pair(const Pext& l, const Pext& r);

/// Throws WidthMismatch when the two widths differ.
void require_width(std::size_t expected, std::size_t actual);

struct PextHash {
  std::size_t operator()(const Pext& p) const noexcept;
};

/// Total order used for deterministic output (by text form); unrelated to
/// the ring order.
struct PextTextLess {
  bool operator()(const Pext& a, const Pext& b) const;
};

}  // namespace boolring
