#include "boolring/io.hpp"

#include "boolring/error.hpp"

namespace boolring::io {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Pext pext_from(const json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a bitstring");
  return Pext::parse(j.get<std::string>());
}

json ids(std::span<const std::size_t> idx, std::span<const std::string> names) {
  json out = json::array();
  for (std::size_t i : idx) {
    if (names.empty()) {
      out.push_back(i + 1);
    } else {
      out.push_back(names[i]);
    }
  }
  return out;
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    malformed(std::string("matrix needs an unsigned \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

json to_json(const Modus& v) {
  json out = json::array();
  for (const Pext& e : v.entries()) out.push_back(e.to_string());
  return out;
}

Modus modus_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("modus must be a nonempty array of bitstrings");
  std::vector<Pext> entries;
  for (const auto& e : j) entries.push_back(pext_from(e, "modus entry"));
  return Modus(std::move(entries));
}

json to_json(const BrMatrix& m) {
  json cells = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    cells.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"width", m.width()}, {"cells", cells}};
}

BrMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) malformed("matrix must be an object");
  const std::size_t rows = get_size(j, "rows");
  const std::size_t cols = get_size(j, "cols");
  const std::size_t width = get_size(j, "width");
  if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].size() != rows) {
    malformed("matrix \"cells\" must hold " + std::to_string(rows) + " rows");
  }
  std::vector<Pext> cells;
  for (const auto& row : j["cells"]) {
    if (!row.is_array() || row.size() != cols) {
      malformed("every matrix row must hold " + std::to_string(cols) + " cells");
    }
    for (const auto& cell : row) {
      Pext p = pext_from(cell, "matrix cell");
      require_width(width, p.width());
      cells.push_back(std::move(p));
    }
  }
  return BrMatrix(rows, cols, std::move(cells));
}

json to_json(const PairList& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs.pairs()) out.push_back({a + 1, b + 1});
  return out;
}

PairList pairs_from_json(const json& j, std::size_t text_count) {
  if (!j.is_array()) malformed("pair list must be an array of [i, j]");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned() || p[0].get<std::size_t>() == 0 ||
        p[1].get<std::size_t>() == 0) {
      malformed("each pair must be [i, j] with 1-based indices");
    }
    pairs.emplace_back(p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1);
  }
  return PairList(text_count, std::move(pairs));
}

json to_json(const ClusterWitness& w, std::string_view method, std::span<const std::string> names) {
  json out = {{"l", w.l.to_string()},
              {"r", w.r.to_string()},
              {"left", ids(w.left, names)},
              {"right", ids(w.right, names)},
              {"method", method}};
  if (w.kernel_modus) out["kernel_modus"] = to_json(*w.kernel_modus);
  return out;
}

json to_json(const TransformSpec& spec) {
  return {{"name", spec.name},
          {"set", spec.set_mask.to_string()},
          {"clear", spec.clear_mask.to_string()},
          {"flip", spec.flip_mask.to_string()}};
}

TransformSpec transform_from_json(const json& j) {
  if (!j.is_object()) malformed("transform spec must be an object");
  for (const char* key : {"set", "clear", "flip"}) {
    if (!j.contains(key)) malformed(std::string("transform spec needs \"") + key + "\"");
  }
  TransformSpec spec{j.value("name", std::string("unnamed")), pext_from(j["set"], "set"),
                     pext_from(j["clear"], "clear"), pext_from(j["flip"], "flip")};
  validate(spec);
  return spec;
}

json to_json(const KernelBasis& kernel) {
  json gens = json::array();
  for (const Modus& g : kernel.generators) gens.push_back(to_json(g));
  return {{"generators", gens},
          {"generator_digit", kernel.generator_digit},
          {"per_bit_nullity", kernel.per_bit_nullity}};
}

json to_json(const ComplexityReport& report) {
  return {{"t_matrix", to_json(report.t_matrix)},
          {"i_matrix", to_json(report.i_matrix)},
          {"sum_matrix", to_json(report.sum_matrix)},
          {"kernel", to_json(report.kernel)},
          {"per_bit_rank", report.per_bit_rank},
          {"complexity_score", report.complexity_score},
          {"complexity_score_definition", "sum of per-digit GF(2) ranks of T+I"}};
}

json search_report(const SearchStats& stats, std::uint64_t wall_ms,
                   std::span<const std::string> names) {
  json assignment = nullptr;
  if (stats.found) {
    assignment = {{"left", ids(stats.found->left, names)},
                  {"right", ids(stats.found->right, names)}};
  }
  return {{"found", stats.found.has_value()},
          {"assignment", assignment},
          {"guesses", stats.guesses},
          {"ring_ops", stats.ring_ops},
          {"wall_ms", wall_ms}};
}

}  // namespace boolring::io
