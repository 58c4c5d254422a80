#include "boolring/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::string_view kRegexPrefix = "re:";

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Calls fn(line_number, object) for every nonblank line.
template <typename Fn>
void for_each_json_line(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
    fn(number, obj);
  }
}

}  // namespace

struct StatementCatalog::Matchers {
  // Lowercased substring or compiled regex, per statement.
  using Matcher = std::variant<std::string, std::regex>;
  std::vector<std::vector<Matcher>> per_statement;
};

StatementCatalog::StatementCatalog(std::vector<Statement> statements)
    : statements_(std::move(statements)), matchers_(std::make_unique<Matchers>()) {
  if (statements_.empty()) throw Error(ErrorCode::EmptyCatalog, "catalog has no statements");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < statements_.size(); ++i) {
    const Statement& s = statements_[i];
    if (s.id != i + 1) {
      throw Error(ErrorCode::MalformedCatalog, "statement ids must be 1.." +
                                                   std::to_string(statements_.size()) +
                                                   " in order; found id " +
                                                   std::to_string(s.id) + " at position " +
                                                   std::to_string(i + 1));
    }
    if (s.text.empty()) {
      throw Error(ErrorCode::MalformedCatalog, "statement " + std::to_string(s.id) + " has no text");
    }
    if (!seen.insert(s.text).second) {
      throw Error(ErrorCode::DuplicateStatement,
                  "statement " + std::to_string(s.id) + " repeats \"" + s.text + "\"");
    }
    auto& compiled = matchers_->per_statement.emplace_back();
    for (const std::string& pattern : s.patterns) {
      if (pattern.starts_with(kRegexPrefix)) {
        try {
          compiled.emplace_back(std::regex(pattern.substr(kRegexPrefix.size()),
                                           std::regex::ECMAScript | std::regex::icase));
        } catch (const std::regex_error& e) {
          throw Error(ErrorCode::PatternError, "statement " + std::to_string(s.id) +
                                                   ": invalid pattern '" + pattern +
                                                   "': " + e.what());
        }
      } else if (pattern.empty()) {
        throw Error(ErrorCode::PatternError,
                    "statement " + std::to_string(s.id) + ": empty pattern");
      } else {
        compiled.emplace_back(lowercase(pattern));
      }
    }
  }
}

StatementCatalog::~StatementCatalog() = default;
StatementCatalog::StatementCatalog(StatementCatalog&&) noexcept = default;
StatementCatalog& StatementCatalog::operator=(StatementCatalog&&) noexcept = default;

std::optional<std::string> StatementCatalog::match(std::size_t index, std::string_view doc) const {
  const auto& matchers = matchers_->per_statement.at(index);
  if (matchers.empty()) return std::nullopt;
  const std::string lowered = lowercase(doc);
  for (std::size_t p = 0; p < matchers.size(); ++p) {
    const bool hit = std::visit(
        [&](const auto& m) {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, std::string>) {
            return lowered.find(m) != std::string::npos;
          } else {
            return std::regex_search(doc.begin(), doc.end(), m);
          }
        },
        matchers[p]);
    if (hit) return statements_[index].patterns[p];
  }
  return std::nullopt;
}

StatementCatalog load_catalog(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("statements") || !doc["statements"].is_array()) {
    throw Error(ErrorCode::MalformedCatalog, "expected an object with a \"statements\" array");
  }
  std::vector<Statement> statements;
  for (const auto& entry : doc["statements"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_number_unsigned() ||
        !entry.contains("text") || !entry["text"].is_string()) {
      throw Error(ErrorCode::MalformedCatalog,
                  "statement entries need an unsigned \"id\" and a string \"text\"");
    }
    Statement s{entry["id"].get<std::size_t>(), entry["text"].get<std::string>(), {}};
    if (entry.contains("patterns")) {
      if (!entry["patterns"].is_array()) {
        throw Error(ErrorCode::MalformedCatalog,
                    "statement " + std::to_string(s.id) + ": \"patterns\" must be an array");
      }
      for (const auto& p : entry["patterns"]) {
        if (!p.is_string()) {
          throw Error(ErrorCode::MalformedCatalog,
                      "statement " + std::to_string(s.id) + ": patterns must be strings");
        }
        s.patterns.push_back(p.get<std::string>());
      }
    }
    statements.push_back(std::move(s));
  }
  return StatementCatalog(std::move(statements));
}

StatementCatalog load_catalog_file(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedCatalog, path.string() + ": " + e.what());
  }
  return load_catalog(doc);
}

CodedText code_text(const StatementCatalog& catalog, std::string doc_id, std::string_view doc) {
  CodedText out{std::move(doc_id), Pext::zero(catalog.size()),
                std::vector<std::string>(catalog.size())};
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (auto hit = catalog.match(i, doc)) {
      out.pext.set(i);
      out.evidence[i] = std::move(*hit);
    }
  }
  return out;
}

void annotate(CodedText& coded, const Pext& bits) {
  require_width(coded.pext.width(), bits.width());
  coded.pext = bits;
  for (std::size_t i = 0; i < bits.width(); ++i) {
    coded.evidence[i] = bits.test(i) ? "manual" : "";
  }
}

std::optional<std::string> rho(const StatementCatalog& catalog, const Pext& a) {
  require_width(catalog.size(), a.width());
  if (auto lowest = a.lowest()) return catalog[*lowest].text;
  return std::nullopt;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
  std::vector<Document> docs;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) docs.push_back({f.stem().string(), read_file(f)});
    return docs;
  }
  for_each_json_line(path, [&](std::size_t line, const nlohmann::json& obj) {
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
        !obj.contains("text") || !obj["text"].is_string()) {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line) +
                                             ": expected {\"id\": string, \"text\": string}");
    }
    docs.push_back({obj["id"].get<std::string>(), obj["text"].get<std::string>()});
  });
  return docs;
}

std::map<std::string, Pext> load_annotations(const std::filesystem::path& path) {
  std::map<std::string, Pext> out;
  for_each_json_line(path, [&](std::size_t line, const nlohmann::json& obj) {
    if (!obj.is_object() || !obj.contains("doc_id") || !obj["doc_id"].is_string() ||
        !obj.contains("bits") || !obj["bits"].is_string()) {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line) +
                                             ": expected {\"doc_id\": string, \"bits\": string}");
    }
    out.insert_or_assign(obj["doc_id"].get<std::string>(),
                         Pext::parse(obj["bits"].get<std::string>()));
  });
  return out;
}

std::size_t CodedTable::index_of(std::string_view id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw Error(ErrorCode::UnknownId, "no document '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

CodedTable read_coded_table(std::istream& in) {
  CodedTable table;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": missing TAB");
    }
    Pext p = Pext::parse(std::string_view(line).substr(tab + 1));
    if (!table.pexts.empty()) require_width(table.pexts.front().width(), p.width());
    table.ids.push_back(line.substr(0, tab));
    table.pexts.push_back(std::move(p));
  }
  return table;
}

CodedTable read_coded_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_coded_table(in);
}

void write_coded_table(std::ostream& out, const CodedTable& table) {
  for (std::size_t i = 0; i < table.ids.size(); ++i) {
    out << table.ids[i] << '\t' << table.pexts[i].to_string() << '\n';
  }
}

}  // namespace boolring
