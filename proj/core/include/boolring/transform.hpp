#pragma once

// Digit-mask transformations of pexts and their Galerkin analysis.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "boolring/module.hpp"
#include "boolring/pext.hpp"

namespace boolring {

/// A ↦ ((A ⊙ ¬clear) ∪ set) ⊕ flip.
struct TransformSpec {
  std::string name;
  Pext set_mask;
  Pext clear_mask;
  Pext flip_mask;

  /// All-zero masks.
  static TransformSpec identity(std::size_t width);
};

/// Throws WidthMismatch or ContradictoryMasks (set ⊙ clear ≠ 0).
void validate(const TransformSpec& spec);

Pext apply_transform(const TransformSpec& spec, const Pext& a);

/// T_ij = X_i ⊙ Θ(X_j).
BrMatrix galerkin(std::span<const Pext> texts, const TransformSpec& spec);

struct ComplexityReport {
  BrMatrix t_matrix;
  BrMatrix i_matrix;
  BrMatrix sum_matrix;
  KernelBasis kernel;
  std::vector<std::size_t> per_bit_rank;
  /// Sum of the per-digit GF(2) ranks of T ⊕ I; 0 iff T = I.
  std::size_t complexity_score = 0;
};

ComplexityReport complexity_report(std::span<const Pext> texts, const TransformSpec& spec);

/// For an eigenpair M v = λ ⊙ v returns ξ = λ ⊙ v, which satisfies M ξ = ξ.
/// Throws NotAnEigenpair otherwise.
Modus eigen_restrict(const BrMatrix& m, const Modus& v, const Pext& lambda);

}  // namespace boolring
