#include "boolring/cluster.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::size_t uniform_width(std::span<const Pext> texts) {
  if (texts.empty()) throw Error(ErrorCode::EmptyInput, "no texts");
  const std::size_t width = texts.front().width();
  for (const Pext& x : texts) require_width(width, x.width());
  return width;
}

std::vector<std::size_t> members(const gf2::BitVec& set) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.test(i)) out.push_back(i);
  }
  return out;
}

std::vector<Pext> pick(std::span<const Pext> texts, std::span<const std::size_t> idx) {
  std::vector<Pext> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(texts[i]);
  return out;
}

void sort_by_left(std::vector<ClusterWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const ClusterWitness& a, const ClusterWitness& b) {
    return a.left < b.left;
  });
}

// Nonzero elements of span(basis): all of them when the dimension is small,
// otherwise sums of up to `depth` basis vectors.
std::vector<gf2::BitVec> span_elements(const std::vector<gf2::BitVec>& basis,
                                       const KernelSearchOptions& options) {
  std::vector<gf2::BitVec> out;
  if (basis.empty()) return out;
  const std::size_t d = basis.size();
  if (d <= options.exhaustive_nullity) {
    // Gray-code walk: each step flips one basis vector in or out.
    gf2::BitVec acc(basis.front().size());
    const std::size_t total = std::size_t{1} << d;
    out.reserve(total - 1);
    for (std::size_t step = 1; step < total; ++step) {
      acc ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
      out.push_back(acc);
    }
    return out;
  }
  std::vector<std::size_t> choice;
  auto extend = [&](auto&& self, std::size_t start, gf2::BitVec acc) -> void {
    for (std::size_t i = start; i < d; ++i) {
      gf2::BitVec next = acc;
      next ^= basis[i];
      out.push_back(next);
      if (choice.size() + 1 < options.combination_depth) {
        choice.push_back(i);
        self(self, i + 1, next);
        choice.pop_back();
      }
    }
  };
  extend(extend, 0, gf2::BitVec(basis.front().size()));
  return out;
}

// Pattern → union of the digits whose kernel slice contains it. Insertion
// order is kept so iteration is deterministic.
struct PatternIndex {
  std::vector<gf2::BitVec> order;
  std::unordered_map<gf2::BitVec, Pext, gf2::BitVecHash> digits;

  void add(const gf2::BitVec& u, std::size_t digit, std::size_t width) {
    auto it = digits.find(u);
    if (it == digits.end()) {
      order.push_back(u);
      it = digits.emplace(u, Pext::zero(width)).first;
    }
    it->second.set(digit);
  }
};

PatternIndex index_kernel(const KernelBasis& kernel, std::size_t width,
                          const KernelSearchOptions& options) {
  PatternIndex index;
  for (std::size_t digit = 0; digit < kernel.per_bit_basis.size(); ++digit) {
    for (const auto& u : span_elements(kernel.per_bit_basis[digit], options)) {
      index.add(u, digit, width);
    }
  }
  return index;
}

Modus lift(const gf2::BitVec& pattern, const Pext& value) {
  const Pext none = Pext::zero(value.width());
  std::vector<Pext> entries;
  entries.reserve(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    entries.push_back(pattern.test(i) ? value : none);
  }
  return Modus(std::move(entries));
}

// Parity union-find: parity(x) is the side of x relative to its root.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  /// Records parity(a) ^ parity(b) == differ; false on contradiction.
  bool unite(std::size_t a, std::size_t b, int differ) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == differ;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ differ;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

// The set of texts touched by `u` if u is exactly the internal-pair pattern
// of one connected cluster; otherwise empty.
std::optional<gf2::BitVec> cluster_of_pattern(const PairList& pairs, const gf2::BitVec& u) {
  const std::size_t k = pairs.text_count();
  gf2::BitVec touched(k);
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    if (!u.test(s)) continue;
    const auto [a, b] = pairs[s];
    touched.set(a);
    touched.set(b);
    parent[find(a)] = find(b);
  }
  if (touched.none()) return std::nullopt;
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < k; ++i) {
    if (!touched.test(i)) continue;
    if (!root) root = find(i);
    if (find(i) != *root) return std::nullopt;
  }
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto [a, b] = pairs[s];
    if (touched.test(a) && touched.test(b) && !u.test(s)) return std::nullopt;
  }
  return touched;
}

// Canonical pair-space modus of a witness: l on RIGHT-internal pairs, r on
// LEFT-internal pairs, zero elsewhere.
Modus pair_modus(const PairList& pairs, const ClusterWitness& w) {
  std::vector<bool> on_left(pairs.text_count(), false);
  for (std::size_t i : w.left) on_left[i] = true;
  const Pext none = Pext::zero(w.l.width());
  std::vector<Pext> entries;
  entries.reserve(pairs.size());
  for (const auto& [a, b] : pairs.pairs()) {
    if (on_left[a] != on_left[b]) {
      entries.push_back(none);
    } else {
      entries.push_back(on_left[a] ? w.r : w.l);
    }
  }
  return Modus(std::move(entries));
}

// Canonical text-space modus: r on LEFT texts, l on RIGHT texts.
Modus text_modus(std::size_t k, const ClusterWitness& w) {
  std::vector<Pext> entries(k, w.l);
  for (std::size_t i : w.left) entries[i] = w.r;
  return Modus(std::move(entries));
}

}  // namespace

Pext stack_characteristics(std::span<const Pext> left, std::span<const Pext> right) {
  if (left.empty()) throw Error(ErrorCode::EmptyLeft, "left stack is empty");
  const std::size_t width = left.front().width();
  Pext common = left.front();
  for (const Pext& x : left.subspan(1)) common *= x;
  Pext missing = Pext::one(width);
  for (const Pext& x : right) missing *= complement(x);
  return common * missing;
}

ClusterWitness witness_partition(std::span<const Pext> texts, const Pext& l, const Pext& r) {
  if (!is_zero_divisor_pair(l, r)) {
    throw Error(ErrorCode::NotAZeroDivisorPair,
                "l=" + l.to_string() + " and r=" + r.to_string() + " are not zero divisors");
  }
  uniform_width(texts);
  ClusterWitness w{l, r, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const Pext with_l = texts[i] * l;
    const Pext with_r = texts[i] * r;
    if (with_l == l && with_r.is_zero()) {
      w.left.push_back(i);
    } else if (with_r == r && with_l.is_zero()) {
      w.right.push_back(i);
    } else {
      throw Error(ErrorCode::InfeasibleText,
                  "text " + std::to_string(i + 1) + " fits neither side");
    }
  }
  if (w.left.empty() || w.right.empty()) {
    throw Error(ErrorCode::EmptySide, "one side of the partition is empty");
  }
  return w;
}

bool is_valid_witness(std::span<const Pext> texts, const ClusterWitness& w) {
  if (!is_zero_divisor_pair(w.l, w.r)) return false;
  if (w.left.empty() || w.right.empty()) return false;
  std::vector<int> seen(texts.size(), 0);
  for (std::size_t i : w.left) {
    if (i >= texts.size() || seen[i]++) return false;
    if (texts[i] * w.l != w.l || !(texts[i] * w.r).is_zero()) return false;
  }
  for (std::size_t i : w.right) {
    if (i >= texts.size() || seen[i]++) return false;
    if (texts[i] * w.r != w.r || !(texts[i] * w.l).is_zero()) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::optional<ClusterWitness> maximal_witness(std::span<const Pext> texts,
                                              std::span<const std::size_t> left) {
  uniform_width(texts);
  std::vector<bool> on_left(texts.size(), false);
  for (std::size_t i : left) {
    if (i >= texts.size()) throw Error(ErrorCode::IndexOutOfRange, "text index");
    on_left[i] = true;
  }
  std::vector<std::size_t> lhs, rhs;
  for (std::size_t i = 0; i < texts.size(); ++i) (on_left[i] ? lhs : rhs).push_back(i);
  if (lhs.empty() || rhs.empty()) return std::nullopt;
  if (!on_left[0]) std::swap(lhs, rhs);

  const auto left_texts = pick(texts, lhs);
  const auto right_texts = pick(texts, rhs);
  Pext l = stack_characteristics(left_texts, right_texts);
  Pext r = stack_characteristics(right_texts, left_texts);
  if (l.is_zero() || r.is_zero()) return std::nullopt;
  return ClusterWitness{std::move(l), std::move(r), std::move(lhs), std::move(rhs), std::nullopt};
}

std::vector<ClusterWitness> cluster_atoms(std::span<const Pext> texts) {
  const std::size_t width = uniform_width(texts);
  const std::size_t k = texts.size();

  PatternIndex signatures;
  for (std::size_t digit = 0; digit < width; ++digit) {
    gf2::BitVec sig(k);
    for (std::size_t i = 0; i < k; ++i) sig.set(i, texts[i].test(digit));
    signatures.add(sig, digit, width);
  }

  std::vector<ClusterWitness> out;
  for (const auto& sig : signatures.order) {
    if (!sig.test(0) || sig.count() == k) continue;
    auto other = signatures.digits.find(~sig);
    if (other == signatures.digits.end()) continue;
    out.push_back(ClusterWitness{signatures.digits.at(sig), other->second, members(sig),
                                 members(~sig), std::nullopt});
  }
  sort_by_left(out);
  return out;
}

std::vector<ClusterWitness> cluster_via_m(std::span<const Pext> texts,
                                          const KernelSearchOptions& options) {
  const std::size_t width = uniform_width(texts);
  const std::size_t k = texts.size();
  if (k < 2) return {};

  const BrMatrix m = similarity_matrix(texts, SimilarityKind::Product);
  const PatternIndex index = index_kernel(kernel_basis(m), width, options);

  std::vector<ClusterWitness> out;
  for (const auto& u : index.order) {
    if (!u.test(0) || u.count() == k) continue;
    if (!index.digits.contains(~u)) continue;
    // lift(u, .) ⊕ lift(¬u, .) is a kernel modus with two values; u is the
    // LEFT proposal read from it.
    auto w = maximal_witness(texts, members(u));
    if (!w) continue;
    Modus x = text_modus(k, *w);
    if (!in_kernel(m, x)) continue;
    w->kernel_modus = std::move(x);
    out.push_back(std::move(*w));
  }
  sort_by_left(out);
  return out;
}

std::vector<ClusterWitness> cluster_via_gram(std::span<const Pext> texts,
                                             const PairList& pairs,
                                             const KernelSearchOptions& options) {
  const std::size_t width = uniform_width(texts);
  const std::size_t k = texts.size();
  if (pairs.text_count() != k) {
    throw Error(ErrorCode::IndexOutOfRange, "pair list does not match the text count");
  }
  if (!pairs.connects_all()) {
    throw Error(ErrorCode::DisconnectedPairGraph, "pairs do not connect all texts");
  }

  const BrMatrix g = gramian(texts, pairs);
  const PatternIndex index = index_kernel(kernel_basis(g), width, options);

  // Kernel patterns that are exactly the internal pairs of one cluster.
  std::map<std::string, std::pair<gf2::BitVec, Pext>> clusters;  // cluster → (pattern, digits)
  std::vector<std::string> cluster_order;
  for (const auto& u : index.order) {
    auto c = cluster_of_pattern(pairs, u);
    if (!c) continue;
    const std::string key = c->to_string();
    auto [it, fresh] = clusters.try_emplace(key, u, index.digits.at(u));
    if (fresh) cluster_order.push_back(key);
  }

  std::vector<ClusterWitness> out;
  for (const auto& key : cluster_order) {
    if (key[0] != '1') continue;
    std::string other_key = key;
    for (char& ch : other_key) ch = ch == '1' ? '0' : '1';
    auto other = clusters.find(other_key);
    if (other == clusters.end()) continue;

    const auto& [u_left, digits_left] = clusters.at(key);
    const auto& [u_right, digits_right] = other->second;
    // One digit per side, distinct, gives a two-valued kernel modus.
    std::optional<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t a = 0; a < width && !chosen; ++a) {
      if (!digits_left.test(a)) continue;
      for (std::size_t b = 0; b < width; ++b) {
        if (b != a && digits_right.test(b)) {
          chosen.emplace(a, b);
          break;
        }
      }
    }
    if (!chosen) continue;
    const Modus candidate = lift(u_left, Pext::atom(width, chosen->first)) +
                            lift(u_right, Pext::atom(width, chosen->second));
    const auto decoded = decode_pair_pattern(pairs, candidate);
    if (!decoded) continue;

    auto w = maximal_witness(texts, decoded->left);
    if (!w) continue;
    Modus x = pair_modus(pairs, *w);
    if (!in_kernel(g, x)) continue;
    w->kernel_modus = std::move(x);
    out.push_back(std::move(*w));
  }
  sort_by_left(out);
  return out;
}

std::optional<PairPattern> decode_pair_pattern(const PairList& pairs, const Modus& v) {
  if (v.size() != pairs.size()) {
    throw Error(ErrorCode::ShapeMismatch, "modus length " + std::to_string(v.size()) +
                                              " does not match " +
                                              std::to_string(pairs.size()) + " pairs");
  }
  std::vector<Pext> values;
  for (const Pext& e : v.entries()) {
    if (!e.is_zero() && std::find(values.begin(), values.end(), e) == values.end()) {
      values.push_back(e);
    }
  }
  if (values.size() != 2 || !is_zero_divisor_pair(values[0], values[1])) return std::nullopt;

  const std::size_t k = pairs.text_count();
  ParityForest forest(k);
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto [a, b] = pairs[s];
    if (!forest.unite(a, b, v[s].is_zero() ? 1 : 0)) return std::nullopt;
  }

  const auto root = forest.find(0).first;
  PairPattern out{values[0], values[1], {}, {}};
  std::vector<bool> on_left(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    auto [ri, pi] = forest.find(i);
    if (ri != root) return std::nullopt;
    const bool left = pi == forest.find(0).second;
    on_left[i] = left;
    (left ? out.left : out.right).push_back(i);
  }
  if (out.left.empty() || out.right.empty()) return std::nullopt;

  std::optional<Pext> left_value, right_value;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    if (v[s].is_zero()) continue;
    auto& slot = on_left[pairs[s].first] ? left_value : right_value;
    if (slot && *slot != v[s]) return std::nullopt;
    slot = v[s];
  }
  if (!left_value || !right_value || *left_value == *right_value) return std::nullopt;
  out.r = *left_value;
  out.l = *right_value;
  return out;
}

bool pattern_feasible(const PairList& pairs, const Modus& v) {
  return decode_pair_pattern(pairs, v).has_value();
}

}  // namespace boolring
