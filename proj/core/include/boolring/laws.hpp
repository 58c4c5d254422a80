#pragma once

// Executable algebraic laws, checked on seeded random data.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "boolring/pext.hpp"

namespace boolring::laws {

/// The two ring operations under test. Swapping one for a faulty version is
/// how the checker's negative path is exercised.
struct RingOps {
  std::function<Pext(const Pext&, const Pext&)> add;
  std::function<Pext(const Pext&, const Pext&)> mul;

  static RingOps standard();
};

struct LawConfig {
  std::size_t trials = 1000;
  std::size_t width = 16;
  std::uint64_t seed = 0;
};

struct Counterexample {
  std::string law;
  /// Operands after greedy shrinking (bits cleared while the law still fails).
  std::vector<Pext> operands;
};

struct LawResult {
  std::string law;
  std::size_t trials = 0;
  std::optional<Counterexample> failure;
};

/// Ring, homomorphism, order, stack-rewrite and De Morgan laws over `ops`.
std::vector<LawResult> check_ring_laws(const LawConfig& config, const RingOps& ops);

/// Matrix-modus laws for matvec plus kernel membership of both random
/// kernel-element constructions.
std::vector<LawResult> check_module_laws(const LawConfig& config);

}  // namespace boolring::laws
