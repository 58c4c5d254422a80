// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria, so ctest reports any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolring/boolring.hpp"
#include "oracle.hpp"

using namespace boolring;
using Clock = std::chrono::steady_clock;

namespace {

// Every runtime limit the suite enforces, in seconds.
constexpr double kFixtureLimit = 1.0;
constexpr double kPropertyLimit = 30.0;
constexpr double kOracleLimit = 60.0;
constexpr double kBruteForceLimit = 10.0;

constexpr std::size_t kPropertyTrials = 1000;
constexpr std::size_t kPropertyWidth = 64;
constexpr std::size_t kOpcountInstances = 1000;
constexpr std::size_t kSampledLargestShape = 1000000;
constexpr std::size_t kClusterInstances = 500;

const std::filesystem::path kData = BOOLRING_DATA_DIR;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    - " + f;
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

Pext P(const char* bits) { return Pext::parse(bits); }

Modus V(std::initializer_list<const char*> entries) {
  std::vector<Pext> out;
  for (const char* e : entries) out.push_back(P(e));
  return Modus(std::move(out));
}

std::vector<Pext> four_texts() { return {P("1100"), P("0111"), P("1001"), P("0011")}; }
PairList six_pairs() { return PairList(4, {{0, 1}, {1, 2}, {0, 3}, {0, 2}, {1, 3}, {2, 3}}); }

using Table = const char* const[4][4];

bool matches(const BrMatrix& m, Table t) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (m(i, j).to_string() != t[i][j]) return false;
    }
  }
  return true;
}

Table kPrintedM = {{"1100", "0100", "1000", "0000"},
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

void expect_seconds(Check& c, Clock::time_point start, double limit) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream msg;
  msg << "runtime " << s << " s exceeds " << limit << " s";
  c.expect(s < limit, msg.str());
}

void criterion_1(Check& c) {
  const Pext a = P("0110"), b = P("1100");
  c.expect((a + b).to_string() == "1010", "A+B != 1010");
  c.expect((a * b).to_string() == "0100", "A*B != 0100");
}

void criterion_2(Check& c) {
  const auto start = Clock::now();
  const auto x = four_texts();
  const BrMatrix m = similarity_matrix(x, SimilarityKind::Product);
  c.expect(matches(m, kPrintedM), "M differs from the printed matrix");
  const Modus printed = V({"0111", "1100", "0111", "1101"});
  c.expect(in_kernel(m, printed), "printed kernel modus not in ker(M)");
  const Modus scaled = P("1010") * printed;
  c.expect(scaled == V({"0010", "1000", "0010", "1000"}), "a*m != (0010,1000,0010,1000)");
  c.expect(in_kernel(m, scaled), "a*m not in ker(M)");
  const auto w = witness_partition(x, P("1000"), P("0010"));
  c.expect(P("1010") * x[0] == w.l && P("1010") * x[1] == w.r, "a does not reveal l=1000, r=0010");
  expect_seconds(c, start, kFixtureLimit);
}

void criterion_3(Check& c) {
  const auto x = four_texts();
  const std::vector<std::size_t> left{0, 2}, right{1, 3};
  auto unique_witness = [&](const std::vector<ClusterWitness>& ws, const char* method) {
    const bool ok = ws.size() == 1 && ws[0].left == left && ws[0].right == right &&
                    ws[0].l.to_string() == "1000" && ws[0].r.to_string() == "0010";
    c.expect(ok, std::string(method) + " does not return the unique witness");
  };
  unique_witness(cluster_atoms(x), "atoms");
  unique_witness(cluster_via_m(x), "m");
  unique_witness(cluster_via_gram(x, six_pairs()), "gram");

  const PairList pairs = six_pairs();
  c.expect(!pattern_feasible(pairs, V({"0000", "0000", "0000", "0100", "1100", "0100"})),
           "infeasible pattern accepted");
  c.expect(pattern_feasible(pairs, V({"0000", "0000", "0000", "0010", "1000", "0000"})),
           "feasible pattern rejected");

  const BrMatrix g = gramian(x, pairs);
  for (std::size_t s = 0; s < 6; ++s) {
    for (std::size_t t = 0; t < 6; ++t) {
      const auto [a, b] = pairs.pairs()[s];
      const auto [cc, d] = pairs.pairs()[t];
      const auto expected = oracle::op(oracle::op(oracle::digits(x[a]), oracle::digits(x[cc]), '&'),
                                       oracle::op(oracle::digits(x[b]), oracle::digits(x[d]), '&'), '^');
      c.expect(oracle::digits(g(s, t)) == expected, "Gramian cell breaks the dot-product definition");
    }
  }
  c.expect(g(0, 0).to_string() == "1011" && g(1, 1).to_string() == "1110" &&
               g(3, 3).to_string() == "0101" && g(4, 4).to_string() == "0100",
           "printed Gramian diagonal not reproduced");
  c.expect(g(5, 5).to_string() == "1010", "G_66 != 1010");
}

void criterion_4(Check& c) {
  const auto start = Clock::now();
  const auto x = four_texts();
  const TransformSpec spec{"set-first-digit", P("1000"), P("0000"), P("0000")};
  const auto report = complexity_report(x, spec);
  c.expect(matches(report.t_matrix, kPrintedT), "T differs from print");
  c.expect(matches(report.i_matrix, kPrintedM), "I differs from print");
  c.expect(matches(report.sum_matrix, kPrintedSum), "T+I differs from print");
  const std::vector<Modus> gens{V({"0000", "1111", "0000", "0000"}), V({"0000", "0000", "0000", "1111"}),
                                V({"1111", "0000", "1111", "0000"})};
  c.expect(is_invariant_submodule(report.sum_matrix, gens), "printed generators not invariant");
  for (const Modus& v : gens) {
    c.expect(matvec(report.sum_matrix, matvec(report.sum_matrix, v)).is_zero(), "generator not nilpotent");
  }
  c.expect(report.per_bit_rank == std::vector<std::size_t>{1, 0, 0, 0}, "per_bit_rank != (1,0,0,0)");
  c.expect(report.complexity_score == 1, "complexity_score != 1");
  expect_seconds(c, start, kFixtureLimit);
}

void criterion_5(Check& c) {
  const auto catalog = load_catalog_file(kData / "fairy_tales" / "catalog.json");
  const auto docs = load_corpus(kData / "fairy_tales" / "corpus.jsonl");
  const auto notes = load_annotations(kData / "fairy_tales" / "annotations.jsonl");
  std::vector<Pext> m;
  for (const auto& d : docs) {
    auto coded = code_text(catalog, d.id, d.text);
    if (auto it = notes.find(d.id); it != notes.end()) annotate(coded, it->second);
    m.push_back(coded.pext);
  }
  const std::vector<std::string> canonical{"01011", "11111", "11110", "00010", "10000"};
  c.expect(m.size() == 5, "expected five coded tales");
  if (m.size() != 5) return;
  for (std::size_t i = 0; i < 5; ++i) c.expect(m[i].to_string() == canonical[i], "fixture m" + std::to_string(i + 1));

  const Pext one = union_fold(m);
  c.expect(one.to_string() == "11111", "one != 11111");
  c.expect((m[0] + m[0]).to_string() == "00000", "zero != 00000");
  c.expect(rho(catalog, m[0] * m[1]) == "The fairy tale ends with a wedding.", "wedding transcript");
  c.expect(rho(catalog, m[0] * (m[2] + m[0])) == "The main character is noble by birth.", "noble transcript");
  const std::vector<Pext> l1{m[0], m[1], m[2], m[3]}, r1{m[4]};
  c.expect(rho(catalog, stack_characteristics(l1, r1)) == "The main character is a human.", "human transcript");
  const std::vector<Pext> l2{m[1], m[2]}, r2{m[3], m[4], m[0]};
  c.expect(rho(catalog, stack_characteristics(l2, r2)) == "A \"wicked stepmother\".", "stepmother transcript");
  c.expect(!rho(catalog, m[0] * (one + m[1])).has_value(), "NULL transcript");
}

void criterion_6(Check& c) {
  const auto start = Clock::now();
  const laws::LawConfig config{kPropertyTrials, kPropertyWidth, 0};
  auto results = laws::check_ring_laws(config, laws::RingOps::standard());
  for (auto& r : laws::check_module_laws(config)) results.push_back(std::move(r));
  for (const auto& r : results) {
    c.expect(!r.failure && r.trials >= kPropertyTrials, "law " + r.law);
  }
  expect_seconds(c, start, kPropertyLimit);
}

// Packs a modus of `len` entries with n digits into the bits of an integer.
std::uint64_t pack(const Modus& v) {
  std::uint64_t code = 0;
  const std::size_t n = v.width();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t p = 0; p < n; ++p) code |= std::uint64_t{v[i].test(p)} << (i * n + p);
  }
  return code;
}

// ker(M) by trying all 2^(n k) modi, on packed integers.
std::vector<std::uint64_t> kernel_by_enumeration(const std::vector<std::uint64_t>& cells,
                                                 std::size_t k, std::size_t n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t digit_mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (k * n)); ++code) {
    bool zero = true;
    for (std::size_t i = 0; i < k && zero; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc ^= cells[i * k + j] & ((code >> (j * n)) & digit_mask);
      zero = acc == 0;
    }
    if (zero) out.push_back(code);
  }
  return out;
}

bool kernel_matches(const std::vector<std::uint64_t>& cells, std::size_t k, std::size_t n) {
  std::vector<Pext> pexts;
  for (std::uint64_t cell : cells) {
    Pext p = Pext::zero(n);
    for (std::size_t d = 0; d < n; ++d) p.set(d, (cell >> d) & 1U);
    pexts.push_back(p);
  }
  const auto kb = kernel_basis(BrMatrix(k, k, std::move(pexts)));
  std::vector<std::uint64_t> gens;
  for (const Modus& g : kb.generators) gens.push_back(pack(g));
  std::vector<std::uint64_t> generated;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((mask >> i) & 1U) v ^= gens[i];
    }
    generated.push_back(v);
  }
  std::sort(generated.begin(), generated.end());
  // Duplicates would mean the generators are dependent.
  if (std::adjacent_find(generated.begin(), generated.end()) != generated.end()) return false;
  return generated == kernel_by_enumeration(cells, k, n);
}

void criterion_7(Check& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t bits = n * k * k;
      const bool exhaustive = bits <= 18;
      const std::uint64_t count = exhaustive ? std::uint64_t{1} << bits : kSampledLargestShape;
      for (std::uint64_t t = 0; t < count; ++t) {
        const std::uint64_t code = exhaustive ? t : rng() & ((std::uint64_t{1} << bits) - 1);
        std::vector<std::uint64_t> cells(k * k);
        for (std::size_t i = 0; i < k * k; ++i) cells[i] = (code >> (i * n)) & ((1U << n) - 1);
        if (!kernel_matches(cells, k, n)) {
          c.expect(false, "kernel mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              " code=" + std::to_string(code));
          return;
        }
      }
    }
  }

  for (std::size_t t = 0; t < kClusterInstances; ++t) {
    const std::size_t n = 1 + rng() % 6, k = 2 + rng() % 4;
    std::vector<Pext> texts;
    for (std::size_t i = 0; i < k; ++i) texts.push_back(oracle::random_pext(n, rng));
    std::set<std::vector<std::size_t>> atoms;
    for (const auto& w : cluster_atoms(texts)) atoms.insert(w.left);
    for (const auto& w : cluster_via_m(texts)) c.expect(atoms.contains(w.left), "m partition not among atoms");
    for (const auto& w : cluster_via_gram(texts, PairList::all_pairs(k))) {
      c.expect(atoms.contains(w.left), "gram partition not among atoms");
    }
  }
  expect_seconds(c, start, kOracleLimit);
}

void criterion_8(Check& c) {
  std::mt19937_64 rng(8);
  for (std::size_t t = 0; t < kOpcountInstances; ++t) {
    const std::size_t n = 2 + rng() % 40, width = 1 + rng() % 64;
    std::vector<Pext> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(oracle::random_pext(width, rng));
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::uint64_t mask = 0;
    while (mask == 0 || mask == full) mask = rng() & full;
    const auto r = check_assignment(x, assignment_from_mask(mask, n));
    c.expect(r.ring_ops <= 2 * n - 1, "opcount above 2n-1");
  }

  for (int t = 0; t < 3; ++t) {
    std::vector<Pext> x;
    for (std::size_t i = 0; i < 16; ++i) x.push_back(oracle::random_pext(64, rng, 0.95));
    x[15] = Pext::one(64);
    const auto start = Clock::now();
    const auto stats = solve_bruteforce(x);
    expect_seconds(c, start, kBruteForceLimit);
    c.expect(stats.found.has_value() && check_assignment(x, *stats.found).product.is_zero(),
             "planted n=16 instance not solved");
  }

  // Worst case: digit d is shared by exactly the texts of mask d+1, so every
  // assignment leaves a common digit and the search visits all masks.
  {
    constexpr std::size_t n = 16;
    constexpr std::size_t width = (std::size_t{1} << n) - 2;
    std::vector<Pext> x(n, Pext::zero(width));
    for (std::size_t d = 0; d < width; ++d) {
      for (std::size_t i = 0; i < n; ++i) {
        if (((d + 1) >> i) & 1U) x[i].set(d);
      }
    }
    const auto start = Clock::now();
    const auto stats = solve_bruteforce(x);
    expect_seconds(c, start, kBruteForceLimit);
    c.expect(!stats.found.has_value() && stats.guesses == width, "exhaustive n=16 instance");
  }

  const std::vector<Pext> two{P("10"), P("01")};
  c.expect(!solve_bruteforce(two).found.has_value(), "(10,01) reported solvable");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"ring operations on the 0110/1100 fixture", criterion_1},
      {"similarity matrix and its printed kernel modi", criterion_2},
      {"three clustering methods, pattern feasibility, Gramian cells", criterion_3},
      {"Galerkin transform matrices and complexity score", criterion_4},
      {"fairy-tale rendering transcripts", criterion_5},
      {"randomized law suites", criterion_6},
      {"kernel and clustering oracle equivalence", criterion_7},
      {"zero-divisor cost accounting and search", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << s << " s)" << check.detail() << '\n';
    failed += !check.ok();
  }
  return failed;
}
