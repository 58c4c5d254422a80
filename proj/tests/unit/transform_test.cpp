#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "boolring/error.hpp"
#include "boolring/gf2.hpp"
#include "boolring/transform.hpp"
#include "oracle.hpp"

using boolring::BrMatrix;
using boolring::Modus;
using boolring::Pext;
using boolring::TransformSpec;

namespace {

Pext P(const char* bits) { return Pext::parse(bits); }

Modus V(std::initializer_list<const char*> entries) {
  std::vector<Pext> out;
  for (const char* e : entries) out.push_back(P(e));
  return Modus(std::move(out));
}

std::vector<Pext> fixture_texts() { return {P("1100"), P("0111"), P("1001"), P("0011")}; }

TransformSpec set_first_digit() {
  return {"set-first-digit", P("1000"), P("0000"), P("0000")};
}

using Table = const char* const[4][4];

Table kPrintedI = {{"1100", "0100", "1000", "0000"},
                   {"0100", "0111", "0001", "0011"},
                   {"1000", "0001", "1001", "0001"},
                   {"0000", "0011", "0001", "0011"}};
Table kPrintedT = {{"1100", "1100", "1000", "1000"},
                   {"0100", "0111", "0001", "0011"},
                   {"1000", "1001", "1001", "1001"},
                   {"0000", "0011", "0001", "0011"}};
Table kPrintedSum = {{"0000", "1000", "0000", "1000"},
                     {"0000", "0000", "0000", "0000"},
                     {"0000", "1000", "0000", "1000"},
                     {"0000", "0000", "0000", "0000"}};

void expect_table(const BrMatrix& m, Table table) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m(i, j).to_string(), table[i][j]) << i << "," << j;
  }
}

}  // namespace

TEST(Transform, ApplyMasks) {
  EXPECT_EQ(boolring::apply_transform(set_first_digit(), P("0111")).to_string(), "1111");
  EXPECT_EQ(boolring::apply_transform(TransformSpec::identity(4), P("0110")), P("0110"));
  const TransformSpec clear_all{"clear", P("0000"), P("1111"), P("0000")};
  EXPECT_TRUE(boolring::apply_transform(clear_all, P("0110")).is_zero());
  const TransformSpec flip{"flip", P("0000"), P("0000"), P("0101")};
  EXPECT_EQ(boolring::apply_transform(flip, P("0110")).to_string(), "0011");
}

TEST(Transform, MaskErrors) {
  const TransformSpec bad{"bad", P("1100"), P("0100"), P("0000")};
  try {
    boolring::validate(bad);
    FAIL();
  } catch (const boolring::Error& e) {
    EXPECT_EQ(e.code(), boolring::ErrorCode::ContradictoryMasks);
  }
  try {
    (void)boolring::apply_transform(set_first_digit(), P("011"));
    FAIL();
  } catch (const boolring::Error& e) {
    EXPECT_EQ(e.code(), boolring::ErrorCode::WidthMismatch);
  }
}

TEST(Transform, PrintedMatrices) {
  const auto x = fixture_texts();
  const auto report = boolring::complexity_report(x, set_first_digit());
  expect_table(report.i_matrix, kPrintedI);
  expect_table(report.t_matrix, kPrintedT);
  expect_table(report.sum_matrix, kPrintedSum);
  EXPECT_EQ(report.per_bit_rank, (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_EQ(report.complexity_score, 1U);
}

// Rank of each digit slice computed by hand-rolled elimination on ints.
TEST(Transform, ScoreMatchesIndependentRank) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 5, n = 1 + rng() % 8;
    std::vector<Pext> x;
    for (std::size_t i = 0; i < k; ++i) x.push_back(oracle::random_pext(n, rng));
    Pext set = oracle::random_pext(n, rng), clear = oracle::random_pext(n, rng);
    clear = clear * boolring::complement(set);
    const TransformSpec spec{"random", set, clear, oracle::random_pext(n, rng)};
    const auto report = boolring::complexity_report(x, spec);
    std::size_t score = 0;
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<std::vector<int>> rows(k, std::vector<int>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          rows[i][j] = (x[i].test(p) && boolring::apply_transform(spec, x[j]).test(p)) ^
                       (x[i].test(p) && x[j].test(p));
        }
      }
      std::size_t rank = 0;
      for (std::size_t c = 0; c < k && rank < k; ++c) {
        std::size_t piv = rank;
        while (piv < k && !rows[piv][c]) ++piv;
        if (piv == k) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < k; ++r) {
          if (r != rank && rows[r][c]) {
            for (std::size_t cc = 0; cc < k; ++cc) rows[r][cc] ^= rows[rank][cc];
          }
        }
        ++rank;
      }
      EXPECT_EQ(report.per_bit_rank[p], rank);
      EXPECT_EQ(report.per_bit_rank[p] + report.kernel.per_bit_nullity[p], k);
      score += rank;
    }
    EXPECT_EQ(report.complexity_score, score);
  }
}

TEST(Transform, IdentityAndClearAll) {
  const auto x = fixture_texts();
  const auto id = boolring::complexity_report(x, TransformSpec::identity(4));
  EXPECT_EQ(id.t_matrix, id.i_matrix);
  EXPECT_EQ(id.complexity_score, 0U);
  EXPECT_EQ(id.kernel.generators.size(), 16U);

  const TransformSpec clear_all{"clear", P("0000"), P("1111"), P("0000")};
  const auto cleared = boolring::complexity_report(x, clear_all);
  EXPECT_EQ(cleared.t_matrix, BrMatrix::zero(4, 4, 4));
  EXPECT_EQ(cleared.sum_matrix, cleared.i_matrix);
}

TEST(Transform, PrintedInvariantSubmoduleIsNilpotent) {
  const auto x = fixture_texts();
  const BrMatrix sum = boolring::complexity_report(x, set_first_digit()).sum_matrix;
  const std::vector<Modus> gens{V({"0000", "1111", "0000", "0000"}),
                                V({"0000", "0000", "0000", "1111"}),
                                V({"1111", "0000", "1111", "0000"})};
  EXPECT_TRUE(boolring::is_invariant_submodule(sum, gens));
  for (const Modus& g : gens) {
    EXPECT_TRUE(boolring::matvec(sum, boolring::matvec(sum, g)).is_zero());
  }
  EXPECT_FALSE(boolring::matvec(sum, gens[0]).is_zero());
}

TEST(Transform, EigenRestrict) {
  const auto x = fixture_texts();
  const BrMatrix m = boolring::similarity_matrix(x, boolring::SimilarityKind::Product);
  const Modus kernel_vec = V({"0010", "1000", "0010", "1000"});
  EXPECT_TRUE(boolring::eigen_restrict(m, kernel_vec, Pext::zero(4)).is_zero());

  const BrMatrix id = BrMatrix::diagonal(4, Pext::one(4));
  const Modus v = V({"0110", "1000", "0001", "1111"});
  EXPECT_EQ(boolring::eigen_restrict(id, v, Pext::one(4)), v);

  try {
    (void)boolring::eigen_restrict(m, v, Pext::one(4));
    FAIL();
  } catch (const boolring::Error& e) {
    EXPECT_EQ(e.code(), boolring::ErrorCode::NotAnEigenpair);
  }
}

// Eigenpairs built from ker(M ⊕ diag(λ)) restrict to fixed points of M.
TEST(Transform, ConstructedEigenpairsRestrictToFixedPoints) {
  std::mt19937_64 rng(59);
  std::size_t checked = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + rng() % 3, n = 1 + rng() % 6;
    std::vector<Pext> cells;
    for (std::size_t i = 0; i < k * k; ++i) cells.push_back(oracle::random_pext(n, rng));
    const BrMatrix m(k, k, cells);
    const Pext lambda = oracle::random_pext(n, rng);
    const auto kb = boolring::kernel_basis(m + BrMatrix::diagonal(k, lambda));
    Modus v = Modus::zero(k, n);
    for (const Modus& g : kb.generators) {
      if (rng() & 1U) v += g;
    }
    const Modus xi = boolring::eigen_restrict(m, v, lambda);
    EXPECT_EQ(boolring::matvec(m, xi), xi);
    checked += !xi.is_zero();
  }
  EXPECT_GT(checked, 10U);
}
