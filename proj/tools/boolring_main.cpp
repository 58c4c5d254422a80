// boolring: command-line front end for coding, comparing and clustering
// texts as elements of a finite Boolean ring.
//
// Exit status: 0 success (including empty results), 1 law violation,
// 2 input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boolring/boolring.hpp"

namespace {

using nlohmann::json;
using namespace boolring;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::uint64_t seed = 0;
  std::string format;
  std::string output;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::ParseError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const RunConfig& cfg, const json& value) {
  Output out(cfg.output);
  out.stream() << value.dump(2) << '\n';
}

std::vector<Pext> select(const CodedTable& table, const std::vector<std::string>& ids) {
  std::vector<Pext> out;
  for (const auto& id : ids) out.push_back(table.pexts[table.index_of(id)]);
  return out;
}

int cmd_code(const RunConfig& cfg, const std::string& catalog_path, const std::string& corpus_path,
             const std::string& annotations_path) {
  const StatementCatalog catalog = load_catalog_file(catalog_path);
  const auto docs = load_corpus(corpus_path);
  std::map<std::string, Pext> annotations;
  if (!annotations_path.empty()) annotations = load_annotations(annotations_path);

  std::vector<CodedText> coded;
  for (const auto& doc : docs) {
    coded.push_back(code_text(catalog, doc.id, doc.text));
    if (auto it = annotations.find(doc.id); it != annotations.end()) {
      annotate(coded.back(), it->second);
    }
  }

  Output out(cfg.output);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& c : coded) {
      rows.push_back({{"doc_id", c.doc_id}, {"bits", c.pext.to_string()}, {"evidence", c.evidence}});
    }
    out.stream() << rows.dump(2) << '\n';
  } else {
    CodedTable table;
    for (const auto& c : coded) {
      table.ids.push_back(c.doc_id);
      table.pexts.push_back(c.pext);
    }
    write_coded_table(out.stream(), table);
  }
  return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& table_path,
                const std::vector<std::string>& left, const std::vector<std::string>& right,
                const std::string& catalog_path) {
  const CodedTable table = read_coded_table_file(table_path);
  const Pext product = stack_characteristics(select(table, left), select(table, right));

  std::string rendered;
  if (!catalog_path.empty()) {
    const StatementCatalog catalog = load_catalog_file(catalog_path);
    rendered = rho(catalog, product).value_or("NULL");
  } else if (auto lowest = product.lowest()) {
    rendered = "statement " + std::to_string(*lowest + 1);
  } else {
    rendered = "NULL";
  }

  if (cfg.format == "json") {
    emit_json(cfg, {{"product", product.to_string()}, {"statement", rendered}});
  } else {
    Output out(cfg.output);
    out.stream() << product.to_string() << '\n' << rendered << '\n';
  }
  return 0;
}

int cmd_cluster(const RunConfig& cfg, const std::string& table_path, const std::string& method,
                const std::string& pairs_path) {
  const CodedTable table = read_coded_table_file(table_path);
  if (table.pexts.size() < 2) throw Error(ErrorCode::EmptyInput, "clustering needs at least two texts");

  std::vector<ClusterWitness> found;
  if (method == "atoms") {
    found = cluster_atoms(table.pexts);
  } else if (method == "m") {
    found = cluster_via_m(table.pexts);
  } else {
    const PairList pairs = pairs_path.empty()
                               ? PairList::all_pairs(table.pexts.size())
                               : io::pairs_from_json(read_json(pairs_path), table.pexts.size());
    found = cluster_via_gram(table.pexts, pairs);
  }

  json out = json::array();
  for (const auto& w : found) out.push_back(io::to_json(w, method, table.ids));
  emit_json(cfg, out);
  return 0;
}

int cmd_zerodiv(const RunConfig& cfg, const std::string& table_path, const std::string& mode,
                std::uint64_t budget, std::size_t limit, bool timing) {
  const CodedTable table = read_coded_table_file(table_path);
  const auto start = std::chrono::steady_clock::now();
  const SearchStats stats = mode == "brute" ? solve_bruteforce(table.pexts, limit)
                                            : solve_random(table.pexts, budget, cfg.seed);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  json report = io::search_report(stats, timing ? static_cast<std::uint64_t>(elapsed.count()) : 0,
                                  table.ids);
  if (stats.found) {
    std::vector<Pext> left;
    for (std::size_t i : stats.found->left) left.push_back(table.pexts[i]);
    report["left_product"] = product_fold(left).to_string();
  }
  emit_json(cfg, report);
  return 0;
}

int cmd_transform(const RunConfig& cfg, const std::string& table_path, const std::string& spec_path) {
  const CodedTable table = read_coded_table_file(table_path);
  const TransformSpec spec = io::transform_from_json(read_json(spec_path));
  if (table.pexts.empty()) throw Error(ErrorCode::EmptyInput, "no texts in " + table_path);
  json report = io::to_json(complexity_report(table.pexts, spec));
  report["transform"] = io::to_json(spec);
  emit_json(cfg, report);
  return 0;
}

int cmd_kernel(const RunConfig& cfg, const std::string& matrix_path) {
  const BrMatrix m = io::matrix_from_json(read_json(matrix_path));
  emit_json(cfg, io::to_json(kernel_basis(m)));
  return 0;
}

int cmd_axioms(const RunConfig& cfg, std::size_t trials, std::size_t width,
               const std::string& fault) {
  if (trials == 0) throw Error(ErrorCode::EmptyInput, "--trials must be at least 1");
  laws::RingOps ops = laws::RingOps::standard();
  if (fault == "add") {
    ops.add = [](const Pext& a, const Pext& b) { return unite(a, b); };
  } else if (fault == "mul") {
    ops.mul = [](const Pext& a, const Pext& b) { return unite(a, b); };
  }

  const laws::LawConfig config{trials, width, cfg.seed};
  auto results = laws::check_ring_laws(config, ops);
  for (auto& r : laws::check_module_laws(config)) results.push_back(std::move(r));

  bool ok = true;
  json report = json::array();
  Output out(cfg.output);
  for (const auto& r : results) {
    ok = ok && !r.failure;
    if (cfg.format == "json") {
      json entry = {{"law", r.law}, {"trials", r.trials}, {"pass", !r.failure}};
      if (r.failure) {
        json operands = json::array();
        for (const auto& p : r.failure->operands) operands.push_back(p.to_string());
        entry["counterexample"] = operands;
      }
      report.push_back(entry);
      continue;
    }
    out.stream() << (r.failure ? "FAIL " : "pass ") << r.law << " (" << r.trials << " trials)";
    if (r.failure) {
      out.stream() << " counterexample:";
      for (const auto& p : r.failure->operands) out.stream() << ' ' << p.to_string();
    }
    out.stream() << '\n';
  }
  if (cfg.format == "json") out.stream() << report.dump(2) << '\n';
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-ring comparative text analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized procedures")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

  std::string catalog, corpus, annotations, table, pairs, spec, matrix;
  std::vector<std::string> left, right;
  std::string method = "atoms";
  std::string mode = "brute";
  std::uint64_t budget = 1000;
  std::size_t limit = kDefaultBruteForceLimit;
  bool no_timing = false;
  std::size_t trials = 1000;
  std::size_t width = 16;
  std::string fault = "none";

  auto* code = app.add_subcommand("code", "Code a corpus against a statement catalog (TSV out)");
  code->add_option("--catalog", catalog, "Catalog JSON")->required()->check(CLI::ExistingFile);
  code->add_option("--corpus", corpus, "Directory of .txt files or JSON-lines file")
      ->required()
      ->check(CLI::ExistingPath);
  code->add_option("--annotations", annotations, "JSON-lines manual codings")->check(CLI::ExistingFile);

  auto* compare = app.add_subcommand("compare", "Print L*R for two stacks and render it");
  compare->add_option("--table", table, "Coded TSV table")->required()->check(CLI::ExistingFile);
  compare->add_option("--left", left, "Document ids on the left stack")->required();
  compare->add_option("--right", right, "Document ids on the right stack");
  compare->add_option("--catalog", catalog, "Catalog used to render the result")->check(CLI::ExistingFile);

  auto* cluster = app.add_subcommand("cluster", "Find reasonable 2-clusterings");
  cluster->add_option("--table", table, "Coded TSV table")->required()->check(CLI::ExistingFile);
  cluster->add_option("--method", method, "atoms | m | gram")
      ->check(CLI::IsMember({"atoms", "m", "gram"}))
      ->capture_default_str();
  cluster->add_option("--pairs", pairs, "JSON array of 1-based [i, j] pairs (gram; default all pairs)")
      ->check(CLI::ExistingFile);

  auto* zerodiv = app.add_subcommand("zerodiv", "Search a two-stack assignment with L*R = 0");
  zerodiv->add_option("--table", table, "Coded TSV table")->required()->check(CLI::ExistingFile);
  zerodiv->add_option("--mode", mode, "brute | random")
      ->check(CLI::IsMember({"brute", "random"}))
      ->capture_default_str();
  zerodiv->add_option("--budget", budget, "Guesses for random mode")->capture_default_str();
  zerodiv->add_option("--limit", limit, "Largest text count for brute mode")->capture_default_str();
  zerodiv->add_flag("--no-timing", no_timing, "Report wall_ms as 0");

  auto* transform = app.add_subcommand("transform", "Galerkin complexity report of a mask transform");
  transform->add_option("--table", table, "Coded TSV table")->required()->check(CLI::ExistingFile);
  transform->add_option("--spec", spec, "Transform spec JSON")->required()->check(CLI::ExistingFile);

  auto* kernel = app.add_subcommand("kernel", "Dump a kernel basis of a matrix file");
  kernel->add_option("--matrix", matrix, "Matrix JSON")->required()->check(CLI::ExistingFile);

  auto* axioms = app.add_subcommand("axioms", "Check ring and module laws on random data");
  axioms->add_option("--trials", trials, "Trials per law")->capture_default_str();
  axioms->add_option("--width", width, "Bit width of random elements")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}))
      ->capture_default_str();
  axioms->add_option("--inject-fault", fault, "Replace an operation with a faulty one (testing)")
      ->check(CLI::IsMember({"none", "add", "mul"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*code) return cmd_code(cfg, catalog, corpus, annotations);
    if (*compare) return cmd_compare(cfg, table, left, right, catalog);
    if (*cluster) return cmd_cluster(cfg, table, method, pairs);
    if (*zerodiv) return cmd_zerodiv(cfg, table, mode, budget, limit, !no_timing);
    if (*transform) return cmd_transform(cfg, table, spec);
    if (*kernel) return cmd_kernel(cfg, matrix);
    if (*axioms) return cmd_axioms(cfg, trials, width, fault);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
