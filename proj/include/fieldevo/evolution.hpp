#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fieldevo/corpus.hpp"
#include "fieldevo/pca.hpp"

namespace fieldevo {

/// Exact sum of translated dissimilarities. Every double is a dyadic
/// rational, so window sums add up without rounding.
using ExactAmount = boost::multiprecision::cpp_rational;

struct EvolutionPoint {
  int year_from = 0;
  int year_to = 0;
  double raw_pc1 = 0.0;
  double dissimilarity = 0.0;
};

/// Translated PC1 dissimilarities of one field for consecutive year pairs.
struct EvolutionSeries {
  std::string field;
  std::vector<EvolutionPoint> points;

  /// Throws std::invalid_argument unless years are consecutive and increasing
  /// and every dissimilarity is non-negative.
  void validate() const;
};

struct SpeedReport {
  std::string field;
  int t1 = 0;
  int t2 = 0;
  double amount = 0.0;
  double speed = 0.0;
};

/// One row per field and successive pair (t, t+1), t in [first, last-1], for
/// all fields in the given order. Throws DataError for a range shorter than
/// two years, EmptyVocabulary for a bucket without keywords, DivisionByZero
/// (with the pair named) when two successive years share no keyword.
DissimilarityMatrix build_dissimilarity_matrix(const Partition& corpus,
                                               const std::vector<std::string>& fields,
                                               YearRange years);

/// D(t1, t2): exact sum over pairs (t1, t1+1) .. (t2-1, t2). Throws
/// std::invalid_argument unless t1 < t2, MissingPair when a pair is absent.
ExactAmount exact_evolution_amount(const EvolutionSeries& series, int t1, int t2);

/// D(t1, t2) rounded once to double.
double evolution_amount(const EvolutionSeries& series, int t1, int t2);

/// V(t1, t2) = D(t1, t2) / (t2 - t1), divided exactly and rounded once.
double evolution_speed(const EvolutionSeries& series, int t1, int t2);

SpeedReport speed_report(const EvolutionSeries& series, int t1, int t2);

/// Everything the evolve pipeline produces for one corpus.
struct EvolutionResult {
  DissimilarityMatrix matrix;
  PcaModel model;
  ScoredSeries scores;
  std::vector<EvolutionSeries> series;  // one per field, input order
};

/// Splits pooled scores back into per-field series (rows must be ordered as
/// build_dissimilarity_matrix emits them).
std::vector<EvolutionSeries> split_series(const DissimilarityMatrix& matrix,
                                          const ScoredSeries& scores,
                                          const std::vector<std::string>& fields);

EvolutionResult run_evolution(const DissimilarityMatrix& matrix,
                              const std::vector<std::string>& fields);
EvolutionResult run_evolution(const Partition& corpus, const std::vector<std::string>& fields,
                              YearRange years);

}  // namespace fieldevo
