#pragma once

// Statement catalogs, pattern-based text coding and statement rendering.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "boolring/pext.hpp"

namespace boolring {

struct Statement {
  std::size_t id;  // 1-based
  std::string text;
  /// Case-insensitive substrings; a "re:" prefix marks an ECMAScript regex.
  std::vector<std::string> patterns;
};

class StatementCatalog {
 public:
  /// Validates ids (1..n, contiguous), texts (nonempty, unique) and compiles
  /// patterns. Throws EmptyCatalog, DuplicateStatement, MalformedCatalog or
  /// PatternError.
  explicit StatementCatalog(std::vector<Statement> statements);
  ~StatementCatalog();
  StatementCatalog(StatementCatalog&&) noexcept;
  StatementCatalog& operator=(StatementCatalog&&) noexcept;

  std::size_t size() const noexcept { return statements_.size(); }
  const Statement& operator[](std::size_t index) const { return statements_.at(index); }
  const std::vector<Statement>& statements() const noexcept { return statements_; }

  /// First pattern of statement `index` (0-based) matching `doc`.
  std::optional<std::string> match(std::size_t index, std::string_view doc) const;

 private:
  struct Matchers;
  std::vector<Statement> statements_;
  std::unique_ptr<Matchers> matchers_;
};

/// Parses {"statements": [{"id", "text", "patterns"}]}.
StatementCatalog load_catalog(const nlohmann::json& doc);
StatementCatalog load_catalog_file(const std::filesystem::path& path);

struct CodedText {
  std::string doc_id;
  Pext pext;
  /// Per statement: the pattern that fired, "manual", or empty.
  std::vector<std::string> evidence;
};

CodedText code_text(const StatementCatalog& catalog, std::string doc_id, std::string_view doc);

/// Replaces the coding with a manual annotation.
void annotate(CodedText& coded, const Pext& bits);

/// Statement text at the lowest set digit; nullopt for the zero element.
std::optional<std::string> rho(const StatementCatalog& catalog, const Pext& a);

struct Document {
  std::string id;
  std::string text;
};

/// A directory of UTF-8 .txt files (id = file stem, sorted by name) or a
/// JSON-lines file of {"id", "text"} objects.
std::vector<Document> load_corpus(const std::filesystem::path& path);

/// JSON-lines of {"doc_id", "bits"}.
std::map<std::string, Pext> load_annotations(const std::filesystem::path& path);

struct CodedTable {
  std::vector<std::string> ids;
  std::vector<Pext> pexts;

  /// 0-based row of `id`; throws UnknownId.
  std::size_t index_of(std::string_view id) const;
};

/// Lines "doc_id<TAB>bits"; blank lines and lines starting with '#' skipped.
CodedTable read_coded_table(std::istream& in);
CodedTable read_coded_table_file(const std::filesystem::path& path);
void write_coded_table(std::ostream& out, const CodedTable& table);

}  // namespace boolring
