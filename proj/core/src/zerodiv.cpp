#include "boolring/zerodiv.hpp"

#include <random>
#include <string>

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::size_t uniform_width(std::span<const Pext> texts) {
  if (texts.empty()) throw Error(ErrorCode::EmptyInput, "no texts");
  const std::size_t width = texts.front().width();
  for (const Pext& x : texts) require_width(width, x.width());
  return width;
}

void require_two_texts(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidAssignment, "need at least two texts, got " + std::to_string(n));
  }
}

// L ⊙ R for the LEFT set given by `mask`, counting operations.
CheckResult evaluate_mask(std::span<const Pext> texts, std::uint64_t mask) {
  const std::size_t width = texts.front().width();
  std::optional<Pext> left;
  std::optional<Pext> right;
  std::uint64_t ops = 0;
  const Pext one = Pext::one(width);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if ((mask >> i) & 1U) {
      if (left) {
        *left *= texts[i];
        ++ops;
      } else {
        left = texts[i];
      }
    } else {
      Pext missing = one + texts[i];
      ++ops;
      if (right) {
        *right *= missing;
        ++ops;
      } else {
        right = std::move(missing);
      }
    }
  }
  ++ops;
  return {*left * *right, ops};
}

std::uint64_t mask_of(const Assignment& a, std::size_t n) {
  std::uint64_t mask = 0;
  std::vector<int> seen(n, 0);
  auto mark = [&](std::size_t i) {
    if (i >= n) throw Error(ErrorCode::InvalidAssignment, "text index " + std::to_string(i + 1) + " out of range");
    if (seen[i]++) throw Error(ErrorCode::InvalidAssignment, "text " + std::to_string(i + 1) + " assigned twice");
  };
  for (std::size_t i : a.left) {
    mark(i);
    mask |= std::uint64_t{1} << i;
  }
  for (std::size_t i : a.right) mark(i);
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw Error(ErrorCode::InvalidAssignment, "text " + std::to_string(i + 1) + " unassigned");
  }
  if (a.left.empty() || a.right.empty()) {
    throw Error(ErrorCode::InvalidAssignment, "both stacks must be nonempty");
  }
  return mask;
}

}  // namespace

Assignment assignment_from_mask(std::uint64_t mask, std::size_t n) {
  Assignment a;
  for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? a.left : a.right).push_back(i);
  return a;
}

CheckResult check_assignment(std::span<const Pext> texts, const Assignment& a) {
  uniform_width(texts);
  if (texts.size() > 64) {
    throw Error(ErrorCode::TooManyTexts, "at most 64 texts per assignment");
  }
  return evaluate_mask(texts, mask_of(a, texts.size()));
}

SearchStats solve_bruteforce(std::span<const Pext> texts, std::size_t limit) {
  uniform_width(texts);
  const std::size_t n = texts.size();
  require_two_texts(n);
  if (n > limit || n > 63) {
    throw Error(ErrorCode::TooManyTexts,
                std::to_string(n) + " texts exceed the limit of " + std::to_string(limit));
  }
  SearchStats stats;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const auto check = evaluate_mask(texts, mask);
    ++stats.guesses;
    stats.ring_ops += check.ring_ops;
    if (check.product.is_zero()) {
      stats.found = assignment_from_mask(mask, n);
      break;
    }
  }
  return stats;
}

SearchStats solve_random(std::span<const Pext> texts, std::uint64_t budget, std::uint64_t seed) {
  uniform_width(texts);
  const std::size_t n = texts.size();
  require_two_texts(n);
  if (n > 64) throw Error(ErrorCode::TooManyTexts, "at most 64 texts");

  std::mt19937_64 rng(seed);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  SearchStats stats;
  for (std::uint64_t g = 0; g < budget; ++g) {
    std::uint64_t mask = 0;
    do {
      mask = rng() & full;
    } while (mask == 0 || mask == full);
    const auto check = evaluate_mask(texts, mask);
    ++stats.guesses;
    stats.ring_ops += check.ring_ops;
    if (check.product.is_zero()) {
      stats.found = assignment_from_mask(mask, n);
      break;
    }
  }
  return stats;
}

}  // namespace boolring
