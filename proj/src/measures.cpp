#include "fieldevo/measures.hpp"

namespace fieldevo {

std::optional<MeasureId> measure_from_name(std::string_view name) {
  for (auto m : kAllMeasures) {
    if (name_of(m) == name) return m;
  }
  return std::nullopt;
}

double dissimilarity(MeasureId measure, const AlignedDistributionPair& pair) {
  return measures::evaluate(measure, pair.p, pair.q);
}

DissimilarityVector all_measures(const AlignedDistributionPair& pair, const std::string& field,
                                 int year_from) {
  DissimilarityVector row;
  row.field = field;
  row.year_from = year_from;
  row.year_to = year_from + 1;
  for (auto m : kAllMeasures) row.values(index_of(m)) = dissimilarity(m, pair);
  return row;
}

}  // namespace fieldevo
