#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fieldevo/corpus.hpp"
#include "fieldevo/evolution.hpp"
#include "fieldevo/pca.hpp"

namespace fieldevo {

struct PeriodStats {
  std::string field;
  YearRange period;
  std::int64_t articles = 0;
  std::int64_t keywords = 0;
  std::int64_t distinct = 0;
  double keywords_per_article = 0.0;
};

struct YearStats {
  std::string field;
  int year = 0;
  std::int64_t articles = 0;
  std::int64_t keywords = 0;
  std::int64_t distinct = 0;
  std::optional<std::int64_t> new_keywords;  // unset for the first analyzed year
};

struct CorpusStats {
  std::vector<PeriodStats> periods;  // field-major, periods in given order
  std::vector<YearStats> years;      // field-major, ascending years
};

/// Article/keyword counts per field and period and per field and year. A
/// keyword is new in year y when no earlier year of `years` used it. Periods
/// are clipped to `years`.
CorpusStats descriptive_stats(const Partition& corpus, const std::vector<std::string>& fields,
                              YearRange years, const std::vector<YearRange>& periods);

struct Summary {
  double min = 0, q1 = 0, median = 0, mean = 0, q3 = 0, max = 0;
};

/// Quantile by linear interpolation at 1-based rank 1 + (n-1) p.
double quantile(std::vector<double> values, double p);
Summary summarize(std::vector<double> values);

struct MeasureSummary {
  std::string field;
  std::array<Summary, kMeasureCount> measures;
};

/// Six-number summary of every measure over the field's rows. Throws
/// std::invalid_argument if the field has no row.
MeasureSummary measure_summary(const DissimilarityMatrix& matrix, const std::string& field);

struct CorrelationReport {
  std::string field;
  Eigen::MatrixXd correlation;  // 12 x 12
};

/// Sample correlation between measures for one field (at least three rows).
CorrelationReport correlation_report(const DissimilarityMatrix& matrix, const std::string& field);

// CSV emitters. Fixed headers, LF line endings, 12 significant digits.
void write_dissimilarity_csv(std::ostream& out, const DissimilarityMatrix& matrix);
void write_loadings_csv(std::ostream& out, const PcaModel& model);
void write_scree_csv(std::ostream& out, const PcaModel& model);
void write_evolution_csv(std::ostream& out, const std::vector<EvolutionSeries>& series);
void write_speed_csv(std::ostream& out, const std::vector<SpeedReport>& speeds);
void write_corpus_stats_csv(std::ostream& out, const CorpusStats& stats);
void write_measure_summary_csv(std::ostream& out, const std::vector<MeasureSummary>& summaries);
void write_correlation_csv(std::ostream& out, const std::vector<CorrelationReport>& reports);
void write_scatter_csv(std::ostream& out, const DissimilarityMatrix& matrix, MeasureId x,
                       MeasureId y);

}  // namespace fieldevo
