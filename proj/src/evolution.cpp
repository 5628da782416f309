#include "fieldevo/evolution.hpp"

#include <map>
#include <stdexcept>

#include "fieldevo/errors.hpp"
#include "fieldevo/keyword_distribution.hpp"

namespace fieldevo {
namespace {

std::string pair_name(const std::string& field, int t) {
  return field + " " + std::to_string(t) + "->" + std::to_string(t + 1);
}

}  // namespace

void EvolutionSeries::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    if (pt.year_to != pt.year_from + 1) {
      throw std::invalid_argument(field + ": pair years are not consecutive");
    }
    if (i > 0 && pt.year_from != points[i - 1].year_to) {
      throw std::invalid_argument(field + ": pairs are not consecutive");
    }
    if (!(pt.dissimilarity >= 0.0)) {
      throw std::invalid_argument(field + ": negative dissimilarity");
    }
  }
}

DissimilarityMatrix build_dissimilarity_matrix(const Partition& corpus,
                                               const std::vector<std::string>& fields,
                                               YearRange years) {
  if (years.size() < 2) {
    throw DataError("year range must span at least two years to form a pair");
  }
  std::vector<DissimilarityVector> rows;
  rows.reserve(fields.size() * static_cast<std::size_t>(years.size() - 1));
  for (const auto& field : fields) {
    KeywordDistribution prev = build_distribution(corpus.at(field, years.first));
    for (int t = years.first; t < years.last; ++t) {
      KeywordDistribution next = build_distribution(corpus.at(field, t + 1));
      const auto pair = align_pair(prev, next);
      try {
        rows.push_back(all_measures(pair, field, t));
      } catch (const DivisionByZero& e) {
        throw DivisionByZero(pair_name(field, t) + ": " + e.what());
      }
      prev = std::move(next);
    }
  }
  return DissimilarityMatrix(std::move(rows));
}

ExactAmount exact_evolution_amount(const EvolutionSeries& series, int t1, int t2) {
  if (t1 >= t2) throw std::invalid_argument("evolution window needs t1 < t2");
  std::map<int, double> by_year;
  for (const auto& pt : series.points) by_year.emplace(pt.year_from, pt.dissimilarity);
  ExactAmount sum = 0;
  for (int t = t1; t < t2; ++t) {
    const auto it = by_year.find(t);
    if (it == by_year.end()) throw MissingPair(pair_name(series.field, t) + " missing");
    sum += ExactAmount(it->second);
  }
  return sum;
}

double evolution_amount(const EvolutionSeries& series, int t1, int t2) {
  return exact_evolution_amount(series, t1, t2).convert_to<double>();
}

double evolution_speed(const EvolutionSeries& series, int t1, int t2) {
  const ExactAmount speed = exact_evolution_amount(series, t1, t2) / (t2 - t1);
  return speed.convert_to<double>();
}

SpeedReport speed_report(const EvolutionSeries& series, int t1, int t2) {
  const ExactAmount amount = exact_evolution_amount(series, t1, t2);
  const ExactAmount speed = amount / (t2 - t1);
  return {series.field, t1, t2, amount.convert_to<double>(), speed.convert_to<double>()};
}

std::vector<EvolutionSeries> split_series(const DissimilarityMatrix& matrix,
                                          const ScoredSeries& scores,
                                          const std::vector<std::string>& fields) {
  std::vector<EvolutionSeries> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back({f, {}});
  const auto& rows = matrix.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& s : out) {
      if (s.field != rows[r].field) continue;
      const auto i = static_cast<Eigen::Index>(r);
      s.points.push_back(
          {rows[r].year_from, rows[r].year_to, scores.raw_pc1(i), scores.translated(i)});
      break;
    }
  }
  return out;
}

EvolutionResult run_evolution(const DissimilarityMatrix& matrix,
                              const std::vector<std::string>& fields) {
  EvolutionResult result;
  result.matrix = matrix;
  result.model = fit_pca(result.matrix);
  result.scores = translate_scores(pc1_scores(result.model, result.matrix));
  result.series = split_series(result.matrix, result.scores, fields);
  return result;
}

EvolutionResult run_evolution(const Partition& corpus, const std::vector<std::string>& fields,
                              YearRange years) {
  return run_evolution(build_dissimilarity_matrix(corpus, fields, years), fields);
}

}  // namespace fieldevo
