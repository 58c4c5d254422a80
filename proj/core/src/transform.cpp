#include "boolring/transform.hpp"

#include "boolring/error.hpp"

namespace boolring {

TransformSpec TransformSpec::identity(std::size_t width) {
  return {"identity", Pext::zero(width), Pext::zero(width), Pext::zero(width)};
}

void validate(const TransformSpec& spec) {
  require_width(spec.set_mask.width(), spec.clear_mask.width());
  require_width(spec.set_mask.width(), spec.flip_mask.width());
  if (!(spec.set_mask * spec.clear_mask).is_zero()) {
    throw Error(ErrorCode::ContradictoryMasks,
                "transform '" + spec.name + "' both sets and clears " +
                    (spec.set_mask * spec.clear_mask).to_string());
  }
}

Pext apply_transform(const TransformSpec& spec, const Pext& a) {
  validate(spec);
  require_width(spec.set_mask.width(), a.width());
  return unite(a * complement(spec.clear_mask), spec.set_mask) + spec.flip_mask;
}

BrMatrix galerkin(std::span<const Pext> texts, const TransformSpec& spec) {
  if (texts.empty()) throw Error(ErrorCode::EmptyInput, "no texts");
  std::vector<Pext> images;
  images.reserve(texts.size());
  for (const Pext& x : texts) images.push_back(apply_transform(spec, x));

  const std::size_t k = texts.size();
  std::vector<Pext> cells;
  cells.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) cells.push_back(texts[i] * images[j]);
  }
  return BrMatrix(k, k, std::move(cells));
}

ComplexityReport complexity_report(std::span<const Pext> texts, const TransformSpec& spec) {
  BrMatrix t = galerkin(texts, spec);
  BrMatrix i = similarity_matrix(texts, SimilarityKind::Product);
  BrMatrix sum = t + i;
  KernelBasis kernel = kernel_basis(sum);

  std::vector<std::size_t> ranks;
  ranks.reserve(kernel.per_bit_nullity.size());
  std::size_t score = 0;
  for (std::size_t nullity : kernel.per_bit_nullity) {
    ranks.push_back(sum.cols() - nullity);
    score += ranks.back();
  }
  return {std::move(t), std::move(i), std::move(sum), std::move(kernel), std::move(ranks), score};
}

Modus eigen_restrict(const BrMatrix& m, const Modus& v, const Pext& lambda) {
  if (matvec(m, v) != lambda * v) {
    throw Error(ErrorCode::NotAnEigenpair, "M v differs from lambda v for lambda=" +
                                               lambda.to_string());
  }
  return lambda * v;
}

}  // namespace boolring
