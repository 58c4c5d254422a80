#pragma once

// Reasonable 2-clusterings of coded texts.
//
// A clustering LEFT | RIGHT is reasonable when nonzero l, r with l ⊙ r = 0
// exist such that X ⊙ l = l, X ⊙ r = 0 on LEFT and X ⊙ r = r, X ⊙ l = 0 on
// RIGHT. Three searches are offered: an exact per-digit oracle, and two
// kernel-based searches (the similarity matrix and the pair Gramian).

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "boolring/module.hpp"
#include "boolring/pext.hpp"

namespace boolring {

struct ClusterWitness {
  Pext l;
  Pext r;
  /// Sorted 0-based text indices.
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  /// Kernel modus the witness was read from (kernel-based searches only).
  std::optional<Modus> kernel_modus;

  friend bool operator==(const ClusterWitness&, const ClusterWitness&) = default;
};

/// L ⊙ R with L = ⊙ left and R = ⊙ (1 ⊕ X) over right; an empty right gives
/// R = 1. Throws EmptyLeft when `left` is empty.
Pext stack_characteristics(std::span<const Pext> left, std::span<const Pext> right);

/// Assigns every text to LEFT (X ⊙ l = l, X ⊙ r = 0) or RIGHT (X ⊙ r = r,
/// X ⊙ l = 0). Throws NotAZeroDivisorPair, InfeasibleText or EmptySide.
ClusterWitness witness_partition(std::span<const Pext> texts, const Pext& l, const Pext& r);

/// Re-checks every witness invariant against `texts`.
bool is_valid_witness(std::span<const Pext> texts, const ClusterWitness& w);

/// Exact enumeration of all reasonable 2-clusterings via digit signatures,
/// each with its maximal (l, r). LEFT always holds text 0; results are
/// ordered lexicographically by LEFT.
std::vector<ClusterWitness> cluster_atoms(std::span<const Pext> texts);

struct KernelSearchOptions {
  /// Digit slices whose nullspace dimension is at most this are enumerated
  /// completely.
  std::size_t exhaustive_nullity = 12;
  /// Otherwise ⊕-combinations of up to this many basis vectors are tried.
  std::size_t combination_depth = 2;
};

/// Kernel of M_ij = X_i ⊙ X_j. A kernel modus whose digits split into a
/// pattern u and its complement ¬u proposes LEFT = u; each proposal is
/// validated with witness_partition.
std::vector<ClusterWitness> cluster_via_m(std::span<const Pext> texts,
                                          const KernelSearchOptions& options = {});

/// Kernel of the pair Gramian. Combines single-digit kernel modi into
/// two-valued modi and keeps those passing pattern_feasible. Throws
/// DisconnectedPairGraph when the pairs do not span all texts.
std::vector<ClusterWitness> cluster_via_gram(std::span<const Pext> texts,
                                             const PairList& pairs,
                                             const KernelSearchOptions& options = {});

/// Partition read off a feasible pair-space modus.
struct PairPattern {
  Pext l;
  Pext r;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

/// Decodes a modus over the pairs: nonzero components mean "same cluster",
/// zero components mean "different clusters". Returns the partition when
/// exactly two nonzero values occur, they are zero divisors, the relation
/// is consistent and spans every text, and each value sits on the internal
/// pairs of exactly one cluster (r on LEFT pairs, l on RIGHT pairs). LEFT
/// is the side holding text 0.
std::optional<PairPattern> decode_pair_pattern(const PairList& pairs, const Modus& v);

bool pattern_feasible(const PairList& pairs, const Modus& v);

/// Canonical (maximal) witness for a given LEFT set, if that partition is
/// reasonable.
std::optional<ClusterWitness> maximal_witness(std::span<const Pext> texts,
                                              std::span<const std::size_t> left);

}  // namespace boolring
