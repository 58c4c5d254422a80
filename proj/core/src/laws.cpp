#include "boolring/laws.hpp"

#include <random>

#include "boolring/module.hpp"

namespace boolring::laws {

namespace {

Pext random_pext(std::size_t width, std::mt19937_64& rng) {
  std::vector<Pext::Word> words((width + Pext::kWordBits - 1) / Pext::kWordBits);
  for (auto& w : words) w = rng();
  return Pext::from_words(width, words);
}

// Law helpers expressed only through the operations under test.
struct Alg {
  const RingOps& ops;
  std::size_t width;

  Pext add(const Pext& a, const Pext& b) const { return ops.add(a, b); }
  Pext mul(const Pext& a, const Pext& b) const { return ops.mul(a, b); }
  Pext zero() const { return Pext::zero(width); }
  Pext one() const { return Pext::one(width); }
  Pext neg(const Pext& a) const { return add(one(), a); }
  Pext join(const Pext& a, const Pext& b) const { return add(add(a, b), mul(a, b)); }
  bool geq(const Pext& a, const Pext& b) const { return mul(b, add(a, b)).is_zero(); }
};

using Args = std::vector<Pext>;

struct RingLaw {
  const char* name;
  std::size_t arity;
  std::function<bool(const Alg&, const Args&)> holds;
};

std::vector<RingLaw> ring_laws() {
  return {
      {"add_associative", 3,
       [](const Alg& g, const Args& x) {
         return g.add(g.add(x[0], x[1]), x[2]) == g.add(x[0], g.add(x[1], x[2]));
       }},
      {"add_commutative", 2,
       [](const Alg& g, const Args& x) { return g.add(x[0], x[1]) == g.add(x[1], x[0]); }},
      {"add_identity", 1, [](const Alg& g, const Args& x) { return g.add(g.zero(), x[0]) == x[0]; }},
      {"add_self_inverse", 1, [](const Alg& g, const Args& x) { return g.add(x[0], x[0]).is_zero(); }},
      {"mul_associative", 3,
       [](const Alg& g, const Args& x) {
         return g.mul(g.mul(x[0], x[1]), x[2]) == g.mul(x[0], g.mul(x[1], x[2]));
       }},
      {"mul_commutative", 2,
       [](const Alg& g, const Args& x) { return g.mul(x[0], x[1]) == g.mul(x[1], x[0]); }},
      {"mul_idempotent", 1, [](const Alg& g, const Args& x) { return g.mul(x[0], x[0]) == x[0]; }},
      {"mul_identity", 1, [](const Alg& g, const Args& x) { return g.mul(x[0], g.one()) == x[0]; }},
      {"distributive_left", 3,
       [](const Alg& g, const Args& x) {
         return g.mul(x[0], g.add(x[1], x[2])) == g.add(g.mul(x[0], x[1]), g.mul(x[0], x[2]));
       }},
      {"distributive_right", 3,
       [](const Alg& g, const Args& x) {
         return g.mul(g.add(x[0], x[1]), x[2]) == g.add(g.mul(x[0], x[2]), g.mul(x[1], x[2]));
       }},
      {"complement_involution", 1,
       [](const Alg& g, const Args& x) { return g.neg(g.neg(x[0])) == x[0]; }},
      {"union_is_digitwise_or", 2,
       [](const Alg& g, const Args& x) {
         const Pext u = g.join(x[0], x[1]);
         for (std::size_t i = 0; i < g.width; ++i) {
           if (u.test(i) != (x[0].test(i) || x[1].test(i))) return false;
         }
         return true;
       }},
      {"restrict_additive", 3,
       [](const Alg& g, const Args& x) {
         return g.mul(x[0], g.add(x[1], x[2])) == g.add(g.mul(x[0], x[1]), g.mul(x[0], x[2]));
       }},
      {"restrict_multiplicative", 3,
       [](const Alg& g, const Args& x) {
         return g.mul(x[0], g.mul(x[1], x[2])) == g.mul(g.mul(x[0], x[1]), g.mul(x[0], x[2]));
       }},
      {"restrict_unity", 1, [](const Alg& g, const Args& x) { return g.mul(x[0], g.one()) == x[0]; }},
      {"restrict_kernel_is_principal_ideal", 3,
       [](const Alg& g, const Args& x) {
         // Bias A toward the ideal generated by ¬T so both sides get exercised.
         const Pext a = g.mul(x[1], g.add(g.neg(x[0]), g.mul(x[0], x[2])));
         return g.mul(x[0], a).is_zero() == g.geq(g.neg(x[0]), a);
       }},
      {"order_reflexive", 1, [](const Alg& g, const Args& x) { return g.geq(x[0], x[0]); }},
      {"order_antisymmetric", 2,
       [](const Alg& g, const Args& x) {
         const Pext b = g.join(x[0], g.mul(x[1], x[0]));  // often equal to A
         return (g.geq(x[0], b) && g.geq(b, x[0])) == (x[0] == b) &&
                (g.geq(x[0], x[1]) && g.geq(x[1], x[0])) == (x[0] == x[1]);
       }},
      {"order_transitive", 3,
       [](const Alg& g, const Args& x) {
         const Pext b = g.mul(x[0], x[1]);
         const Pext c = g.mul(b, x[2]);
         return g.geq(x[0], b) && g.geq(b, c) && g.geq(x[0], c);
       }},
      {"order_bounds", 1,
       [](const Alg& g, const Args& x) { return g.geq(x[0], g.zero()) && g.geq(g.one(), x[0]); }},
      {"order_meet", 2, [](const Alg& g, const Args& x) { return g.geq(x[0], g.mul(x[0], x[1])); }},
      {"order_monotone", 3,
       [](const Alg& g, const Args& x) {
         const Pext b = g.mul(x[0], x[1]);  // A ≥ B by construction
         return !g.geq(x[0], b) || g.geq(g.mul(x[2], x[0]), g.mul(x[2], b));
       }},
      {"stack_rewrite", 4,
       [](const Alg& g, const Args& x) {
         const Pext l = g.mul(x[0], x[1]);
         const Pext lr = g.mul(l, g.mul(g.neg(x[2]), g.neg(x[3])));
         const Pext expanded =
             g.add(g.add(g.add(l, g.mul(l, x[2])), g.mul(l, x[3])), g.mul(g.mul(l, x[2]), x[3]));
         const Pext factored =
             g.mul(l, g.add(g.add(g.add(g.one(), x[2]), x[3]), g.mul(x[2], x[3])));
         return lr == expanded && lr == factored;
       }},
      {"de_morgan_cover", 5,
       [](const Alg& g, const Args& x) {
         const Pext left = g.mul(g.mul(x[0], x[4]), x[1]);
         const Pext lr = g.mul(left, g.mul(g.neg(x[2]), g.neg(x[3])));
         return lr.is_zero() == g.geq(g.join(x[2], x[3]), left);
       }},
  };
}

Counterexample shrink(const RingLaw& law, const Alg& alg, Args args) {
  for (auto& operand : args) {
    for (std::size_t bit = 0; bit < operand.width(); ++bit) {
      if (!operand.test(bit)) continue;
      operand.set(bit, false);
      if (law.holds(alg, args)) operand.set(bit, true);
    }
  }
  return {law.name, std::move(args)};
}

BrMatrix random_matrix(std::size_t rows, std::size_t cols, std::size_t width,
                       std::mt19937_64& rng) {
  std::vector<Pext> cells;
  cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) cells.push_back(random_pext(width, rng));
  return BrMatrix(rows, cols, std::move(cells));
}

Modus random_vector(std::size_t n, std::size_t width, std::mt19937_64& rng) {
  std::vector<Pext> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(random_pext(width, rng));
  return Modus(std::move(entries));
}

}  // namespace

RingOps RingOps::standard() {
  return {[](const Pext& a, const Pext& b) { return a + b; },
          [](const Pext& a, const Pext& b) { return a * b; }};
}

std::vector<LawResult> check_ring_laws(const LawConfig& config, const RingOps& ops) {
  const Alg alg{ops, config.width};
  std::vector<LawResult> results;
  std::uint64_t law_index = 0;
  for (const RingLaw& law : ring_laws()) {
    std::mt19937_64 rng(config.seed * 1000003ULL + law_index++);
    LawResult result{law.name, 0, std::nullopt};
    for (std::size_t t = 0; t < config.trials; ++t) {
      Args args;
      for (std::size_t a = 0; a < law.arity; ++a) args.push_back(random_pext(config.width, rng));
      ++result.trials;
      if (!law.holds(alg, args)) {
        result.failure = shrink(law, alg, std::move(args));
        break;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<LawResult> check_module_laws(const LawConfig& config) {
  std::vector<LawResult> results;
  std::mt19937_64 rng(config.seed ^ 0x6d6f64756c65ULL);
  auto dim = [&] { return 1 + static_cast<std::size_t>(rng() % 5); };
  const std::size_t w = config.width;

  auto run = [&](const char* name, auto&& trial) {
    LawResult result{name, 0, std::nullopt};
    for (std::size_t t = 0; t < config.trials; ++t) {
      ++result.trials;
      if (!trial()) {
        result.failure = Counterexample{std::string(name) + " (trial " + std::to_string(t) + ")", {}};
        break;
      }
    }
    results.push_back(std::move(result));
  };

  run("matvec_linear", [&] {
    const std::size_t rows = dim(), cols = dim();
    const BrMatrix m = random_matrix(rows, cols, w, rng);
    const Modus v = random_vector(cols, w, rng);
    const Pext lambda = random_pext(w, rng);
    return matvec(m, lambda * v) == lambda * matvec(m, v);
  });
  run("matvec_digit_slices", [&] {
    const std::size_t rows = dim(), cols = dim();
    const BrMatrix m = random_matrix(rows, cols, w, rng);
    const Modus v = random_vector(cols, w, rng);
    const Modus out = matvec(m, v);
    for (std::size_t p = 0; p < w; ++p) {
      if (out.slice(p) != m.slice(p).multiply(v.slice(p))) return false;
    }
    return true;
  });
  run("random_kernel_element_in_kernel", [&] {
    const std::size_t n = dim();
    const BrMatrix m = random_matrix(n, n, w, rng);
    return in_kernel(m, random_kernel_element(m, rng()));
  });
  run("split_kernel_element_in_kernel", [&] {
    const std::size_t n = dim();
    const BrMatrix m1 = random_matrix(n, n, w, rng);
    const BrMatrix m2 = random_matrix(n, n, w, rng);
    return in_kernel(m1 + m2, split_kernel_element(m1, m2, rng()));
  });
  return results;
}

}  // namespace boolring::laws
