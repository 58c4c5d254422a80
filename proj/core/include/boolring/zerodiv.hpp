#pragma once

// Zero-divisor stack assignment: split texts into two nonempty stacks so that
// L ⊙ R = 0, where L = ⊙ LEFT and R = ⊙ (1 ⊕ X) over RIGHT. Every binary ⊕
// or ⊙ on ring elements counts as one operation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boolring/pext.hpp"

namespace boolring {

struct Assignment {
  /// Sorted 0-based indices; disjoint, nonempty, together covering all texts.
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Assignment whose LEFT is the set bits of `mask` over `n` texts.
Assignment assignment_from_mask(std::uint64_t mask, std::size_t n);

struct CheckResult {
  Pext product;
  std::uint64_t ring_ops = 0;
};

/// L ⊙ R and the number of ring operations spent (at most 2n - 1).
/// Throws InvalidAssignment unless `a` partitions 0..n-1 into two
/// nonempty stacks.
CheckResult check_assignment(std::span<const Pext> texts, const Assignment& a);

struct SearchStats {
  std::uint64_t guesses = 0;
  std::uint64_t ring_ops = 0;
  std::optional<Assignment> found;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

inline constexpr std::size_t kDefaultBruteForceLimit = 20;

/// Walks LEFT masks 1 .. 2^n - 2 in counter order (bit i = text i) and
/// stops at the first assignment with L ⊙ R = 0. Throws TooManyTexts when
/// n exceeds `limit` and InvalidAssignment when n < 2.
SearchStats solve_bruteforce(std::span<const Pext> texts,
                             std::size_t limit = kDefaultBruteForceLimit);

/// Up to `budget` uniformly random two-sided assignments drawn from a
/// generator seeded with `seed`; stops at the first success.
SearchStats solve_random(std::span<const Pext> texts, std::uint64_t budget, std::uint64_t seed);

}  // namespace boolring
