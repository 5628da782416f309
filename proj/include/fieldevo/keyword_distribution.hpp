#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fieldevo/corpus.hpp"

namespace fieldevo {

struct KeywordEntry {
  std::string keyword;
  std::int64_t count = 0;
  double relfreq = 0.0;
};

/// Relative-frequency table of one field-year, sorted by keyword.
class KeywordDistribution {
 public:
  KeywordDistribution() = default;

  /// Builds from raw (keyword, count) pairs. Counts must be positive and
  /// keywords unique; throws EmptyVocabulary when `counts` is empty.
  KeywordDistribution(std::string field, int year,
                      std::vector<std::pair<std::string, std::int64_t>> counts);

  const std::string& field() const { return field_; }
  int year() const { return year_; }
  const std::vector<KeywordEntry>& entries() const { return entries_; }
  std::int64_t total_count() const { return total_; }
  std::size_t vocab_size() const { return entries_.size(); }

  /// Pointer to the entry for `keyword`, or nullptr.
  const KeywordEntry* find(const std::string& keyword) const;

 private:
  std::string field_;
  int year_ = 0;
  std::vector<KeywordEntry> entries_;
  std::int64_t total_ = 0;
};

/// Counts keyword occurrences across the bucket's records. Throws
/// EmptyVocabulary if the bucket holds no keyword at all.
KeywordDistribution build_distribution(const YearBucket& bucket);

/// Two distributions re-expressed on their union vocabulary (lexicographic
/// order). `p` belongs to the left year, `q` to the right; absent keywords
/// carry probability zero.
struct AlignedDistributionPair {
  std::vector<std::string> union_vocab;
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  std::size_t v_left = 0;
  std::size_t v_right = 0;
  std::size_t common_count = 0;

  Eigen::Index size() const { return p.size(); }
};

AlignedDistributionPair align_pair(const KeywordDistribution& left,
                                   const KeywordDistribution& right);

/// `keyword,count,relfreq` dump, relfreq with 12 significant digits.
void write_distribution_csv(std::ostream& out, const KeywordDistribution& dist);

}  // namespace fieldevo
