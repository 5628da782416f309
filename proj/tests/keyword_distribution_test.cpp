#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fieldevo/errors.hpp"
#include "fieldevo/keyword_distribution.hpp"
#include "oracles.hpp"
#include "table_fixture.hpp"

using namespace fieldevo;

TEST_CASE("build_distribution on the year-t table") {
  const auto dist = build_distribution(bucket_from_counts("ES", 1991, kYearT));
  CHECK(dist.total_count() == 70);
  CHECK(dist.vocab_size() == 4);
  for (const auto& [kw, n] : kYearT) {
    const auto* e = dist.find(kw);
    REQUIRE(e != nullptr);
    CHECK(e->count == n);
    CHECK(e->relfreq == static_cast<double>(n) / 70.0);
  }
  double mass = 0.0;
  for (const auto& e : dist.entries()) mass += e.relfreq;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::is_sorted(dist.entries().begin(), dist.entries().end(),
                       [](const auto& a, const auto& b) { return a.keyword < b.keyword; }));
}

TEST_CASE("build_distribution counts one occurrence per record") {
  YearBucket b{"ES", 2000, {}};
  b.records.push_back({"1", 2000, "ES", {"a", "b"}, {}});
  b.records.push_back({"2", 2000, "ES", {"a"}, {}});
  b.records.push_back({"3", 2000, "ES", {}, {}});
  const auto dist = build_distribution(b);
  CHECK(dist.total_count() == 3);
  CHECK(dist.find("a")->count == 2);
  CHECK(dist.find("b")->relfreq == 1.0 / 3.0);
  CHECK(dist.find("c") == nullptr);
}

TEST_CASE("build_distribution degenerate and empty buckets") {
  YearBucket one{"ES", 2000, {{"1", 2000, "ES", {"x"}, {}}}};
  const auto dist = build_distribution(one);
  CHECK(dist.vocab_size() == 1);
  CHECK(dist.total_count() == 1);
  CHECK(dist.entries()[0].relfreq == 1.0);

  YearBucket empty{"ES", 2000, {{"1", 2000, "ES", {}, {}}, {"2", 2000, "ES", {}, {}}}};
  CHECK_THROWS_AS(build_distribution(empty), EmptyVocabulary);
  CHECK_THROWS_AS(build_distribution(YearBucket{"ES", 2000, {}}), EmptyVocabulary);
}

TEST_CASE("align_pair reproduces the worked example") {
  const auto t = build_distribution(bucket_from_counts("ES", 1991, kYearT));
  const auto s = build_distribution(bucket_from_counts("ES", 1992, kYearS));
  const auto pair = align_pair(t, s);
  CHECK(pair.v_left == 4);
  CHECK(pair.v_right == 5);
  CHECK(pair.common_count == 3);
  REQUIRE(pair.size() == 6);
  CHECK(std::is_sorted(pair.union_vocab.begin(), pair.union_vocab.end()));
  for (std::size_t k = 0; k < kExampleVocab.size(); ++k) {
    const auto it = std::find(pair.union_vocab.begin(), pair.union_vocab.end(), kExampleVocab[k]);
    REQUIRE(it != pair.union_vocab.end());
    const auto i = it - pair.union_vocab.begin();
    CHECK(pair.p(i) == doctest::Approx(kP630[k] / 630.0).epsilon(1e-12));
    CHECK(pair.q(i) == doctest::Approx(kQ630[k] / 630.0).epsilon(1e-12));
    CHECK((pair.p(i) == 0.0) == (kP630[k] == 0));
    CHECK((pair.q(i) == 0.0) == (kQ630[k] == 0));
  }
}

TEST_CASE("align_pair full and zero overlap") {
  const KeywordDistribution a("F", 1, {{"x", 2}, {"y", 3}});
  const KeywordDistribution b("F", 2, {{"x", 5}, {"y", 1}});
  const auto full = align_pair(a, b);
  CHECK(full.common_count == 2);
  CHECK((full.p.array() > 0).all());
  CHECK((full.q.array() > 0).all());

  const KeywordDistribution c("F", 3, {{"u", 1}, {"v", 1}, {"w", 4}});
  const auto disjoint = align_pair(a, c);
  CHECK(disjoint.size() == 5);
  CHECK(disjoint.common_count == 0);
  for (Eigen::Index i = 0; i < disjoint.size(); ++i) {
    CHECK(((disjoint.p(i) == 0.0) != (disjoint.q(i) == 0.0)));
  }
}

TEST_CASE("align_pair invariants on random distributions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto random_dist = [&](int year) {
      std::vector<std::pair<std::string, std::int64_t>> counts;
      std::set<std::string> used;
      const int n = 1 + static_cast<int>(rng() % 30);
      while (static_cast<int>(counts.size()) < n) {
        const auto kw = "k" + std::to_string(rng() % 60);
        if (used.insert(kw).second) counts.emplace_back(kw, 1 + static_cast<std::int64_t>(rng() % 20));
      }
      return std::pair(KeywordDistribution("F", year, counts), counts);
    };
    const auto [a, ca] = random_dist(1);
    const auto [b, cb] = random_dist(2);
    const auto ab = align_pair(a, b);
    const auto ba = align_pair(b, a);

    // set-arithmetic oracle
    std::set<std::string> sa, sb, inter, uni;
    for (const auto& [k, n] : ca) sa.insert(k);
    for (const auto& [k, n] : cb) sb.insert(k);
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(inter, inter.end()));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(uni, uni.end()));
    CHECK(ab.common_count == inter.size());
    CHECK(static_cast<std::size_t>(ab.size()) == uni.size());
    CHECK(static_cast<std::size_t>(ab.size()) == ab.v_left + ab.v_right - ab.common_count);
    CHECK(ab.union_vocab == std::vector<std::string>(uni.begin(), uni.end()));

    CHECK(ab.union_vocab == ba.union_vocab);
    CHECK(ab.p == ba.q);
    CHECK(ab.q == ba.p);
    CHECK(((ab.p + ab.q).array() > 0).all());
    CHECK(ab.p.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ab.q.sum() == doctest::Approx(1.0).epsilon(1e-12));

    // exact mass preservation
    std::int64_t ta = 0;
    for (const auto& [k, n] : ca) ta += n;
    oracle::Rational mass = 0;
    for (const auto& kw : ab.union_vocab) {
      const auto* e = a.find(kw);
      mass += e ? oracle::Rational(oracle::Rational(e->count) / ta) : oracle::Rational(0);
    }
    CHECK((mass == oracle::Rational(1)));
  }
}

TEST_CASE("distribution csv") {
  const KeywordDistribution d("F", 1, {{"b", 2}, {"a,c", 1}});
  std::ostringstream out;
  write_distribution_csv(out, d);
  CHECK(out.str() == "keyword,count,relfreq\n\"a,c\",1,0.333333333333\nb,2,0.666666666667\n");
}

TEST_CASE("KeywordDistribution rejects bad counts") {
  CHECK_THROWS_AS(KeywordDistribution("F", 1, {{"a", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(KeywordDistribution("F", 1, {{"a", 1}, {"a", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(KeywordDistribution("F", 1, {}), EmptyVocabulary);
}
