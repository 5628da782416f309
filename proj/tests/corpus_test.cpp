#include <random>
#include <sstream>

#include "doctest.h"
#include "fieldevo/corpus.hpp"
#include "fieldevo/errors.hpp"

using namespace fieldevo;

namespace {

ParseResult parse_tsv(const std::string& text, bool strict = false) {
  std::istringstream in(text);
  return parse_records(in, InputFormat::kTsv, strict);
}

ParseResult parse_jsonl(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in, InputFormat::kJsonl);
}

}  // namespace

TEST_CASE("normalize_keyword") {
  CHECK(normalize_keyword("Neural  NETWORK ") == "neural network");
  CHECK(normalize_keyword("similarity") == "similarity");
  CHECK_FALSE(normalize_keyword("   ").has_value());
  CHECK_FALSE(normalize_keyword("").has_value());
  CHECK(normalize_keyword("\tDeep\n\nLearning\r") == "deep learning");
  CHECK(normalize_keyword("ÉCOLOGIE Urbaine") == "écologie urbaine");
  CHECK(normalize_keyword("ΒΙΟΛΟΓΙΑ") == "βιολογια");
  CHECK(normalize_keyword("ЭКОЛОГИЯ") == "экология");
  CHECK(normalize_keyword("İstanbul") == "istanbul");
  CHECK(normalize_keyword("a 　b") == "a b");
  CHECK(normalize_keyword("C++; x-ray") == "c++; x-ray");  // no punctuation stripping
}

TEST_CASE("normalize_keyword is idempotent") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> pieces = {"A", "b", " ", "  ", "\t", "É", "ß", "Ж", "Ω", "x-y",
                                           "\xC3", "\xFF", "Ǆ", "Ÿ", "ı", "Ａ", " "};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    for (int k = 0; k < 8; ++k) s += pieces[pick(rng)];
    const auto once = normalize_keyword(s);
    if (!once) continue;
    CHECK(normalize_keyword(*once) == once);
    CHECK(once->front() != ' ');
    CHECK(once->back() != ' ');
    CHECK(once->find("  ") == std::string::npos);
  }
}

TEST_CASE("parse tsv records") {
  const auto r = parse_tsv(
      "id\tyear\tfield\tkeywords\n"
      "A1\t1995\tES\tDeep Learning; similarity\n"
      "A2\t2001\tRE\t\n"
      "A3\t19x1\tMI\ta;b\n"
      "A4\t1999\tES\tx; X ;;y; x\n");
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0] == BibRecord{"A1", 1995, "ES", {"deep learning", "similarity"}, {}});
  CHECK(r.records[1].keywords.empty());
  CHECK(r.records[2].keywords == std::vector<std::string>{"x", "y"});
  REQUIRE(r.issues.size() == 1);
  CHECK(r.issues[0].line == 4);
  CHECK(r.issues[0].message.find("invalid year") != std::string::npos);
}

TEST_CASE("tsv header handling") {
  CHECK_THROWS_AS(parse_tsv("id\tyear\tfield\n"), FormatError);
  CHECK_THROWS_AS(parse_tsv("id\tyear\tfield\tkeywords\tyear\n"), FormatError);
  CHECK_THROWS_AS(parse_tsv(""), FormatError);

  // Columns may come in any order; language is optional and extra columns ignored.
  const auto r = parse_tsv(
      "keywords\tlanguage\tid\tfield\tyear\textra\r\n"
      "a;b\tEnglish\tX\tES\t2000\tz\r\n"
      "c\t\tY\tES\t2001\tz\r\n");
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].language == "English");
  CHECK_FALSE(r.records[1].language.has_value());
  CHECK(r.records[0].year == 2000);
}

TEST_CASE("tsv record-level errors") {
  const std::string text =
      "id\tyear\tfield\tkeywords\n"
      "A1\t1995\tES\n"
      "A2\t995\tES\ta\n"
      "A3\t-995\tES\ta\n"
      "\t1995\tES\ta\n"
      "A5\t1995\t\ta\n"
      "\n"
      "A6\t1995\tES\ta\n";
  const auto r = parse_tsv(text);
  CHECK(r.records.size() == 1);
  REQUIRE(r.issues.size() == 5);
  CHECK(r.issues[0].line == 2);
  CHECK(r.issues[4].line == 6);
  CHECK_THROWS_AS(parse_tsv(text, true), RecordError);
}

TEST_CASE("parse jsonl records") {
  const auto r = parse_jsonl(
      R"({"id":"J1","year":1995,"field":"ES","keywords":["Deep  Learning","similarity","deep learning"],"language":"English"})"
      "\n"
      R"({"id":"J2","year":"1995","field":"ES","keywords":[]})"
      "\n"
      "not json\n"
      R"({"id":"J3","year":2003,"field":"RE","keywords":[" "]})"
      "\n");
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].keywords == std::vector<std::string>{"deep learning", "similarity"});
  CHECK(r.records[0].language == "English");
  CHECK(r.records[1].keywords.empty());
  REQUIRE(r.issues.size() == 2);
  CHECK(r.issues[0].line == 2);
  CHECK(r.issues[1].line == 3);
}

TEST_CASE("write/parse round trip in both formats") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> words = {"alpha", "beta gamma", "δέλτα", "c++", "x-ray", "a,b"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BibRecord> recs;
    for (int i = 0; i < 20; ++i) {
      BibRecord r{"R" + std::to_string(i), 1990 + static_cast<int>(rng() % 30),
                  (rng() % 2) ? "ES" : "RE", {}, {}};
      const auto n = rng() % 4;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& w = words[pick(rng)];
        if (std::find(r.keywords.begin(), r.keywords.end(), w) == r.keywords.end()) {
          r.keywords.push_back(w);
        }
      }
      if (rng() % 3 == 0) r.language = "English";
      recs.push_back(r);
    }
    for (auto fmt : {InputFormat::kTsv, InputFormat::kJsonl}) {
      std::stringstream ss;
      write_records(ss, recs, fmt);
      const auto back = parse_records(ss, fmt, true);
      CHECK(back.issues.empty());
      CHECK(back.records == recs);
    }
  }
}

TEST_CASE("tsv writer rejects unrepresentable keywords") {
  std::ostringstream out;
  CHECK_THROWS_AS(write_records(out, {{"a", 2000, "ES", {"x;y"}, {}}}, InputFormat::kTsv),
                  std::invalid_argument);
}

TEST_CASE("partition") {
  const std::vector<BibRecord> recs = {
      {"1", 1991, "ES", {"a"}, {}}, {"2", 1992, "ES", {"b"}, {}}, {"3", 1991, "RE", {"c"}, {}}};

  SUBCASE("filtered counts") {
    const auto part = partition(recs, {"ES"}, {1991, 1992});
    CHECK(part.buckets.size() == 2);
    CHECK(part.at("ES", 1991).records.size() == 1);
    CHECK(part.at("ES", 1992).records.size() == 1);
    CHECK(part.filtered == 1);
  }
  SUBCASE("empty input") {
    const auto part = partition({}, {"ES", "RE"}, {1991, 1993});
    CHECK(part.buckets.size() == 6);
    CHECK(part.filtered == 0);
    for (const auto& [key, b] : part.buckets) CHECK(b.records.empty());
  }
  SUBCASE("4 fields x 29 years") {
    const auto part = partition(recs, {"ES", "ILS", "MI", "RE"}, {1991, 2019});
    CHECK(part.buckets.size() == 4 * 29);
  }
  SUBCASE("language filter") {
    std::vector<BibRecord> tagged = recs;
    tagged[0].language = "English";
    tagged[1].language = "German";
    const auto part = partition(tagged, {"ES", "RE"}, {1991, 1992}, std::string("English"));
    CHECK(part.at("ES", 1991).records.size() == 1);
    CHECK(part.filtered == 2);
  }
}

TEST_CASE("partition is lossless under filtering") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> all = {"ES", "ILS", "MI", "RE", "XX"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BibRecord> recs;
    const auto n = rng() % 200;
    for (std::size_t i = 0; i < n; ++i) {
      recs.push_back({std::to_string(i), 1985 + static_cast<int>(rng() % 40), all[rng() % 5], {}, {}});
    }
    const auto part = partition(recs, {"ES", "MI"}, {1991, 2019});
    std::size_t total = part.filtered;
    for (const auto& [key, b] : part.buckets) {
      for (const auto& r : b.records) {
        CHECK(r.field == key.first);
        CHECK(r.year == key.second);
      }
      total += b.records.size();
    }
    CHECK(total == recs.size());
  }
}
