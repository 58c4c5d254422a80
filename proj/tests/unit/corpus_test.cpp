#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boolring/cluster.hpp"
#include "boolring/corpus.hpp"
#include "boolring/error.hpp"

using boolring::Pext;
using nlohmann::json;

namespace {

const std::filesystem::path kData = BOOLRING_DATA_DIR;

Pext P(const char* bits) { return Pext::parse(bits); }

boolring::StatementCatalog tales_catalog() {
  return boolring::load_catalog_file(kData / "fairy_tales" / "catalog.json");
}

boolring::CodedTable tales_table() {
  return boolring::read_coded_table_file(kData / "fairy_tales" / "coded.tsv");
}

boolring::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const boolring::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no boolring::Error thrown";
  return boolring::ErrorCode::NotFound;
}

}  // namespace

TEST(Corpus, FairyTaleCatalog) {
  const auto catalog = tales_catalog();
  ASSERT_EQ(catalog.size(), 5U);
  EXPECT_EQ(catalog[0].text, "In the end the \"evil\" is punished.");
  EXPECT_EQ(catalog[4].text, "The main character is noble by birth.");
}

TEST(Corpus, CatalogErrors) {
  EXPECT_EQ(code_of([] { (void)boolring::load_catalog(json{{"statements", json::array()}}); }),
            boolring::ErrorCode::EmptyCatalog);
  EXPECT_EQ(code_of([] {
              (void)boolring::load_catalog(
                  json::parse(R"({"statements":[{"id":1,"text":"a"},{"id":2,"text":"a"}]})"));
            }),
            boolring::ErrorCode::DuplicateStatement);
  EXPECT_EQ(code_of([] {
              (void)boolring::load_catalog(json::parse(R"({"statements":[{"id":2,"text":"a"}]})"));
            }),
            boolring::ErrorCode::MalformedCatalog);
  EXPECT_EQ(code_of([] { (void)boolring::load_catalog(json::array()); }),
            boolring::ErrorCode::MalformedCatalog);
}

TEST(Corpus, BadPatternNamesStatement) {
  try {
    (void)boolring::load_catalog(json::parse(
        R"({"statements":[{"id":1,"text":"a"},{"id":2,"text":"b","patterns":["re:(unclosed"]}]})"));
    FAIL();
  } catch (const boolring::Error& e) {
    EXPECT_EQ(e.code(), boolring::ErrorCode::PatternError);
    EXPECT_NE(std::string(e.what()).find("statement 2"), std::string::npos);
  }
}

TEST(Corpus, SubstringAndRegexMatching) {
  const auto catalog = boolring::load_catalog(json::parse(R"({"statements":[
    {"id":1,"text":"ends with a wedding","patterns":["wedding"]},
    {"id":2,"text":"a dragon","patterns":["re:\\bdragons?\\b"]},
    {"id":3,"text":"no patterns"}]})"));
  const auto coded = boolring::code_text(catalog, "d1", "And so the tale ENDS with a Wedding.");
  EXPECT_EQ(coded.pext.to_string(), "100");
  EXPECT_EQ(coded.evidence[0], "wedding");
  EXPECT_EQ(boolring::code_text(catalog, "d2", "Two dragons fly").pext.to_string(), "010");
  EXPECT_EQ(boolring::code_text(catalog, "d3", "dragonfly").pext.to_string(), "000");
}

TEST(Corpus, AnnotationOverridesPatterns) {
  const auto catalog = tales_catalog();
  const auto docs = boolring::load_corpus(kData / "fairy_tales" / "corpus.jsonl");
  const auto notes = boolring::load_annotations(kData / "fairy_tales" / "annotations.jsonl");
  ASSERT_EQ(docs.size(), 5U);
  const auto table = tales_table();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto coded = boolring::code_text(catalog, docs[i].id, docs[i].text);
    boolring::annotate(coded, notes.at(docs[i].id));
    EXPECT_EQ(coded.pext, table.pexts[table.index_of(docs[i].id)]);
    for (std::size_t p = 0; p < 5; ++p) {
      EXPECT_EQ(coded.evidence[p], coded.pext.test(p) ? "manual" : "");
    }
  }
  EXPECT_EQ(table.pexts[table.index_of("m1")].to_string(), "01011");
}

TEST(Corpus, RhoTranscripts) {
  const auto catalog = tales_catalog();
  const auto t = tales_table();
  const Pext m1 = t.pexts[0], m2 = t.pexts[1], m3 = t.pexts[2], m4 = t.pexts[3], m5 = t.pexts[4];
  const std::vector<Pext> all{m1, m2, m3, m4, m5};
  const Pext one = boolring::union_fold(all);
  EXPECT_EQ(one.to_string(), "11111");
  EXPECT_EQ((m1 + m1).to_string(), "00000");

  EXPECT_EQ(boolring::rho(catalog, m1 * m2), "The fairy tale ends with a wedding.");
  EXPECT_EQ(boolring::rho(catalog, m1 * (m3 + m1)), "The main character is noble by birth.");
  const std::vector<Pext> l1{m1, m2, m3, m4}, r1{m5};
  EXPECT_EQ(boolring::rho(catalog, boolring::stack_characteristics(l1, r1)),
            "The main character is a human.");
  const std::vector<Pext> l2{m2, m3}, r2{m4, m5, m1};
  EXPECT_EQ(boolring::rho(catalog, boolring::stack_characteristics(l2, r2)),
            "A \"wicked stepmother\".");
  EXPECT_FALSE(boolring::rho(catalog, m1 * (one + m2)).has_value());
  EXPECT_FALSE(boolring::rho(catalog, Pext::zero(5)).has_value());
  EXPECT_EQ(code_of([&] { (void)boolring::rho(catalog, P("0110")); }),
            boolring::ErrorCode::WidthMismatch);
}

TEST(Corpus, CodedTableRoundTrip) {
  const auto t = tales_table();
  std::ostringstream out;
  boolring::write_coded_table(out, t);
  std::istringstream in(out.str());
  const auto back = boolring::read_coded_table(in);
  EXPECT_EQ(back.ids, t.ids);
  EXPECT_EQ(back.pexts, t.pexts);
  EXPECT_EQ(code_of([&] { (void)t.index_of("m9"); }), boolring::ErrorCode::UnknownId);

  std::istringstream bad("a\t0101\nb\t011\n");
  EXPECT_EQ(code_of([&] { (void)boolring::read_coded_table(bad); }), boolring::ErrorCode::WidthMismatch);
  std::istringstream notab("a 0101\n");
  EXPECT_EQ(code_of([&] { (void)boolring::read_coded_table(notab); }), boolring::ErrorCode::ParseError);
}

TEST(Corpus, DirectoryCorpusIsSortedByName) {
  const auto dir = std::filesystem::temp_directory_path() / "boolring_corpus_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.txt") << "second";
  std::ofstream(dir / "a.txt") << "first";
  std::ofstream(dir / "skip.md") << "ignored";
  const auto docs = boolring::load_corpus(dir);
  ASSERT_EQ(docs.size(), 2U);
  EXPECT_EQ(docs[0].id, "a");
  EXPECT_EQ(docs[1].text, "second");
  std::filesystem::remove_all(dir);
}
