#include "fieldevo/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "fieldevo/csv.hpp"

namespace fieldevo {
namespace {

struct BucketCounts {
  std::int64_t articles = 0;
  std::int64_t keywords = 0;
};

BucketCounts count(const YearBucket& bucket) {
  BucketCounts c;
  c.articles = static_cast<std::int64_t>(bucket.records.size());
  for (const auto& rec : bucket.records) c.keywords += static_cast<std::int64_t>(rec.keywords.size());
  return c;
}

}  // namespace

CorpusStats descriptive_stats(const Partition& corpus, const std::vector<std::string>& fields,
                              YearRange years, const std::vector<YearRange>& periods) {
  CorpusStats stats;
  for (const auto& field : fields) {
    std::unordered_set<std::string> seen;
    for (int y = years.first; y <= years.last; ++y) {
      const auto& bucket = corpus.at(field, y);
      const auto c = count(bucket);
      std::unordered_set<std::string> distinct;
      std::int64_t fresh = 0;
      for (const auto& rec : bucket.records) {
        for (const auto& kw : rec.keywords) {
          if (distinct.insert(kw).second && !seen.contains(kw)) ++fresh;
        }
      }
      YearStats ys{field, y, c.articles, c.keywords,
                   static_cast<std::int64_t>(distinct.size()), std::nullopt};
      if (y > years.first) ys.new_keywords = fresh;
      stats.years.push_back(ys);
      seen.insert(distinct.begin(), distinct.end());
    }
    for (const auto& period : periods) {
      const YearRange clipped{std::max(period.first, years.first),
                              std::min(period.last, years.last)};
      PeriodStats ps{field, clipped, 0, 0, 0, 0.0};
      std::unordered_set<std::string> distinct;
      for (int y = clipped.first; y <= clipped.last; ++y) {
        const auto& bucket = corpus.at(field, y);
        const auto c = count(bucket);
        ps.articles += c.articles;
        ps.keywords += c.keywords;
        for (const auto& rec : bucket.records) distinct.insert(rec.keywords.begin(), rec.keywords.end());
      }
      ps.distinct = static_cast<std::int64_t>(distinct.size());
      ps.keywords_per_article =
          ps.articles ? static_cast<double>(ps.keywords) / static_cast<double>(ps.articles) : 0.0;
      stats.periods.push_back(ps);
    }
  }
  return stats;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = static_cast<double>(values.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  if (frac == 0.0) return values[lo];
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

Summary summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summary of an empty sample");
  Summary s;
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  // Shifted mean: exact on constant samples.
  const double base = values.front();
  double dev = 0.0;
  for (double v : values) dev += v - base;
  s.mean = std::clamp(base + dev / static_cast<double>(values.size()), s.min, s.max);
  return s;
}

MeasureSummary measure_summary(const DissimilarityMatrix& matrix, const std::string& field) {
  const auto values = matrix.for_field(field).values();
  if (values.rows() == 0) throw std::invalid_argument("no rows for field " + field);
  MeasureSummary out{field, {}};
  for (int j = 0; j < kMeasureCount; ++j) {
    const auto col = values.col(j);
    out.measures[static_cast<std::size_t>(j)] = summarize({col.begin(), col.end()});
  }
  return out;
}

CorrelationReport correlation_report(const DissimilarityMatrix& matrix, const std::string& field) {
  const auto rows = matrix.for_field(field);
  if (rows.size() < 3) {
    throw std::invalid_argument("correlation needs at least three rows for field " + field);
  }
  Eigen::MatrixXd c = correlation_of_standardized(standardize(rows).z);
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) = std::clamp(c(i, j), -1.0, 1.0);
    c(i, i) = 1.0;
  }
  return {field, c};
}

void write_dissimilarity_csv(std::ostream& out, const DissimilarityMatrix& matrix) {
  out << "field,year_from,year_to";
  for (auto name : kMeasureNames) out << ',' << name;
  out << '\n';
  for (const auto& row : matrix.rows()) {
    out << csv::escape(row.field) << ',' << row.year_from << ',' << row.year_to;
    for (int j = 0; j < kMeasureCount; ++j) out << ',' << csv::number(row.values(j));
    out << '\n';
  }
}

void write_loadings_csv(std::ostream& out, const PcaModel& model) {
  out << "measure";
  for (Eigen::Index k = 0; k < model.loadings.cols(); ++k) out << ",PC" << k + 1;
  out << '\n';
  for (Eigen::Index j = 0; j < model.loadings.rows(); ++j) {
    out << (j < kMeasureCount ? std::string(kMeasureNames[static_cast<std::size_t>(j)])
                              : std::to_string(j));
    for (Eigen::Index k = 0; k < model.loadings.cols(); ++k) {
      out << ',' << csv::number(model.loadings(j, k));
    }
    out << '\n';
  }
}

void write_scree_csv(std::ostream& out, const PcaModel& model) {
  out << "component,eigenvalue,explained_fraction,cumulative_fraction\n";
  double cumulative = 0.0;
  for (Eigen::Index k = 0; k < model.eigenvalues.size(); ++k) {
    cumulative += model.explained_fraction(k);
    out << k + 1 << ',' << csv::number(model.eigenvalues(k)) << ','
        << csv::number(model.explained_fraction(k)) << ',' << csv::number(cumulative) << '\n';
  }
}

void write_evolution_csv(std::ostream& out, const std::vector<EvolutionSeries>& series) {
  out << "field,year_from,year_to,raw_pc1,dissimilarity\n";
  for (const auto& s : series) {
    for (const auto& pt : s.points) {
      out << csv::escape(s.field) << ',' << pt.year_from << ',' << pt.year_to << ','
          << csv::number(pt.raw_pc1) << ',' << csv::number(pt.dissimilarity) << '\n';
    }
  }
}

void write_speed_csv(std::ostream& out, const std::vector<SpeedReport>& speeds) {
  out << "field,t1,t2,amount_D,speed_V\n";
  for (const auto& s : speeds) {
    out << csv::escape(s.field) << ',' << s.t1 << ',' << s.t2 << ',' << csv::number(s.amount)
        << ',' << csv::number(s.speed) << '\n';
  }
}

void write_corpus_stats_csv(std::ostream& out, const CorpusStats& stats) {
  out << "scope,field,first_year,last_year,articles,keywords,distinct_keywords,"
         "keywords_per_article,new_keywords\n";
  for (const auto& p : stats.periods) {
    out << "period," << csv::escape(p.field) << ',' << p.period.first << ',' << p.period.last
        << ',' << p.articles << ',' << p.keywords << ',' << p.distinct << ','
        << csv::fixed2(p.keywords_per_article) << ",\n";
  }
  for (const auto& y : stats.years) {
    const double kpa =
        y.articles ? static_cast<double>(y.keywords) / static_cast<double>(y.articles) : 0.0;
    out << "year," << csv::escape(y.field) << ',' << y.year << ',' << y.year << ','
        << y.articles << ',' << y.keywords << ',' << y.distinct << ',' << csv::fixed2(kpa)
        << ',';
    if (y.new_keywords) out << *y.new_keywords;
    out << '\n';
  }
}

void write_measure_summary_csv(std::ostream& out, const std::vector<MeasureSummary>& summaries) {
  out << "field,measure,min,q1,median,mean,q3,max\n";
  for (const auto& ms : summaries) {
    for (int j = 0; j < kMeasureCount; ++j) {
      const auto& s = ms.measures[static_cast<std::size_t>(j)];
      out << csv::escape(ms.field) << ',' << kMeasureNames[static_cast<std::size_t>(j)] << ','
          << csv::number(s.min) << ',' << csv::number(s.q1) << ',' << csv::number(s.median)
          << ',' << csv::number(s.mean) << ',' << csv::number(s.q3) << ','
          << csv::number(s.max) << '\n';
    }
  }
}

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationReport>& reports) {
  out << "field,measure";
  for (auto name : kMeasureNames) out << ',' << name;
  out << '\n';
  for (const auto& r : reports) {
    for (int i = 0; i < kMeasureCount; ++i) {
      out << csv::escape(r.field) << ',' << kMeasureNames[static_cast<std::size_t>(i)];
      for (int j = 0; j < kMeasureCount; ++j) out << ',' << csv::number(r.correlation(i, j));
      out << '\n';
    }
  }
}

void write_scatter_csv(std::ostream& out, const DissimilarityMatrix& matrix, MeasureId x,
                       MeasureId y) {
  out << "field,year_from,year_to," << name_of(x) << ',' << name_of(y) << '\n';
  for (const auto& row : matrix.rows()) {
    out << csv::escape(row.field) << ',' << row.year_from << ',' << row.year_to << ','
        << csv::number(row[x]) << ',' << csv::number(row[y]) << '\n';
  }
}

}  // namespace fieldevo
