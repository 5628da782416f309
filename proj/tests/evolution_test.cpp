#include <random>

#include "doctest.h"
#include "fieldevo/errors.hpp"
#include "fieldevo/evolution.hpp"
#include "fieldevo/synthetic.hpp"

using namespace fieldevo;

namespace {

EvolutionSeries series_of(const std::vector<double>& d, int first_year = 1) {
  EvolutionSeries s{"F", {}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int t = first_year + static_cast<int>(i);
    s.points.push_back({t, t + 1, d[i], d[i]});
  }
  return s;
}

SyntheticConfig small_config() {
  SyntheticConfig cfg;
  cfg.records_per_year = 80;
  cfg.active_vocab = 40;
  return cfg;
}

}  // namespace

TEST_CASE("build_dissimilarity_matrix pair counting") {
  const auto cfg = small_config();
  const auto records = generate_corpus(cfg);

  const auto all = partition(records, cfg.fields, cfg.years);
  const auto m = build_dissimilarity_matrix(all, cfg.fields, cfg.years);
  REQUIRE(m.size() == 4 * 28);
  for (std::size_t f = 0; f < 4; ++f) {
    for (int t = 0; t < 28; ++t) {
      const auto& row = m.rows()[f * 28 + static_cast<std::size_t>(t)];
      CHECK(row.field == cfg.fields[f]);
      CHECK(row.year_from == 1991 + t);
      CHECK(row.year_to == 1992 + t);
    }
  }

  // field order follows the caller, not the alphabet
  const std::vector<std::string> reversed = {"RE", "ES"};
  const auto r = build_dissimilarity_matrix(all, reversed, {1991, 1993});
  CHECK(r.size() == 4);
  CHECK(r.rows()[0].field == "RE");
  CHECK(r.rows()[2].field == "ES");

  CHECK(build_dissimilarity_matrix(all, {"ES"}, {2000, 2002}).size() == 2);
  CHECK_THROWS_AS(build_dissimilarity_matrix(all, {"ES"}, {2000, 2000}), DataError);
}

TEST_CASE("build_dissimilarity_matrix errors name the offending bucket") {
  std::vector<BibRecord> recs = {
      {"1", 2000, "ES", {"a"}, {}}, {"2", 2001, "ES", {}, {}}, {"3", 2002, "ES", {"a"}, {}}};
  auto part = partition(recs, {"ES"}, {2000, 2002});
  try {
    build_dissimilarity_matrix(part, {"ES"}, {2000, 2002});
    FAIL("expected EmptyVocabulary");
  } catch (const EmptyVocabulary& e) {
    CHECK(std::string(e.what()).find("ES/2001") != std::string::npos);
  }

  recs[1].keywords = {"b"};
  part = partition(recs, {"ES"}, {2000, 2002});
  try {
    build_dissimilarity_matrix(part, {"ES"}, {2000, 2002});
    FAIL("expected DivisionByZero");
  } catch (const DivisionByZero& e) {
    CHECK(std::string(e.what()).find("ES 2000->2001") != std::string::npos);
  }
}

TEST_CASE("evolution amount and speed") {
  const auto s = series_of({2, 0, 4});
  CHECK(evolution_amount(s, 1, 4) == 6.0);
  CHECK(evolution_amount(s, 2, 3) == 0.0);
  CHECK(evolution_amount(s, 3, 4) == 4.0);
  CHECK(evolution_amount(s, 1, 3) + evolution_amount(s, 3, 4) == evolution_amount(s, 1, 4));
  CHECK(evolution_speed(s, 1, 4) == 2.0);
  CHECK_THROWS_AS(evolution_amount(s, 0, 3), MissingPair);
  CHECK_THROWS_AS(evolution_amount(s, 2, 5), MissingPair);
  CHECK_THROWS_AS(evolution_amount(s, 3, 3), std::invalid_argument);

  const auto r = speed_report(s, 1, 4);
  CHECK(r.amount == 6.0);
  CHECK(r.speed == 2.0);
  CHECK(r.field == "F");
}

TEST_CASE("window properties on random series") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 12.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> d(28);
    for (auto& v : d) v = u(rng);
    const auto s = series_of(d, 1991);
    for (int t1 = 1991; t1 <= 2019; ++t1) {
      for (int t2 = t1 + 1; t2 <= 2019; ++t2) {
        const auto a = exact_evolution_amount(s, t1, t2);
        const double v = evolution_speed(s, t1, t2);
        const auto lo = *std::min_element(d.begin() + (t1 - 1991), d.begin() + (t2 - 1991));
        const auto hi = *std::max_element(d.begin() + (t1 - 1991), d.begin() + (t2 - 1991));
        CHECK(v >= lo);
        CHECK(v <= hi);
        if (t2 < 2019) CHECK(evolution_amount(s, t1, t2) <= evolution_amount(s, t1, t2 + 1));
        for (int t3 = t2 + 1; t3 <= 2019; t3 += 5) {
          CHECK(exact_evolution_amount(s, t1, t3) == a + exact_evolution_amount(s, t2, t3));
        }
      }
    }
  }
}

TEST_CASE("constant series speed equals the constant") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double c = u(rng);
    const auto s = series_of(std::vector<double>(28, c), 1991);
    const int t1 = 1991 + static_cast<int>(rng() % 27);
    const int t2 = t1 + 1 + static_cast<int>(rng() % static_cast<unsigned>(2019 - t1));
    CHECK(evolution_speed(s, t1, t2) == c);
  }
}

TEST_CASE("series validation") {
  auto s = series_of({1, 2, 3});
  CHECK_NOTHROW(s.validate());
  s.points[1].year_from = 5;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = series_of({1, -2});
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("run_evolution pipeline") {
  const auto cfg = small_config();
  const auto part = partition(generate_corpus(cfg), cfg.fields, cfg.years);
  const auto a = run_evolution(part, cfg.fields, cfg.years);
  const auto b = run_evolution(part, cfg.fields, cfg.years);

  REQUIRE(a.series.size() == 4);
  CHECK(a.scores.translated.minCoeff() == 0.0);
  for (const auto& s : a.series) {
    CHECK(s.points.size() == 28);
    CHECK_NOTHROW(s.validate());
  }
  CHECK(a.series[0].field == "ES");
  CHECK(a.series[3].points.back().year_to == 2019);

  // bit-identical across runs
  CHECK(a.matrix.values() == b.matrix.values());
  CHECK(a.model.loadings == b.model.loadings);
  CHECK(a.model.eigenvalues == b.model.eigenvalues);
  CHECK(a.scores.translated == b.scores.translated);
}
