#include "fieldevo/keyword_distribution.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "fieldevo/csv.hpp"
#include "fieldevo/errors.hpp"

namespace fieldevo {

KeywordDistribution::KeywordDistribution(
    std::string field, int year, std::vector<std::pair<std::string, std::int64_t>> counts)
    : field_(std::move(field)), year_(year) {
  if (counts.empty()) {
    throw EmptyVocabulary("no keywords for " + field_ + "/" + std::to_string(year_));
  }
  std::sort(counts.begin(), counts.end());
  entries_.reserve(counts.size());
  for (auto& [kw, count] : counts) {
    if (count <= 0) throw std::invalid_argument("non-positive count for '" + kw + "'");
    if (!entries_.empty() && entries_.back().keyword == kw) {
      throw std::invalid_argument("duplicate keyword '" + kw + "'");
    }
    total_ += count;
    entries_.push_back({std::move(kw), count, 0.0});
  }
  const auto total = static_cast<double>(total_);
  for (auto& e : entries_) e.relfreq = static_cast<double>(e.count) / total;
}

const KeywordEntry* KeywordDistribution::find(const std::string& keyword) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), keyword,
      [](const KeywordEntry& e, const std::string& k) { return e.keyword < k; });
  return (it != entries_.end() && it->keyword == keyword) ? &*it : nullptr;
}

KeywordDistribution build_distribution(const YearBucket& bucket) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const auto& rec : bucket.records) {
    for (const auto& kw : rec.keywords) ++counts[kw];
  }
  return KeywordDistribution(bucket.field, bucket.year, {counts.begin(), counts.end()});
}

AlignedDistributionPair align_pair(const KeywordDistribution& left,
                                   const KeywordDistribution& right) {
  if (left.vocab_size() == 0 || right.vocab_size() == 0) {
    throw std::invalid_argument("align_pair requires non-empty distributions");
  }
  const auto& a = left.entries();
  const auto& b = right.entries();

  AlignedDistributionPair out;
  out.v_left = a.size();
  out.v_right = b.size();
  out.union_vocab.reserve(a.size() + b.size());
  std::vector<double> p, q;
  p.reserve(a.size() + b.size());
  q.reserve(a.size() + b.size());

  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].keyword < b[j].keyword)) {
      out.union_vocab.push_back(a[i].keyword);
      p.push_back(a[i++].relfreq);
      q.push_back(0.0);
    } else if (i == a.size() || b[j].keyword < a[i].keyword) {
      out.union_vocab.push_back(b[j].keyword);
      p.push_back(0.0);
      q.push_back(b[j++].relfreq);
    } else {
      out.union_vocab.push_back(a[i].keyword);
      p.push_back(a[i++].relfreq);
      q.push_back(b[j++].relfreq);
      ++out.common_count;
    }
  }
  out.p = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
  out.q = Eigen::Map<const Eigen::VectorXd>(q.data(), static_cast<Eigen::Index>(q.size()));
  return out;
}

void write_distribution_csv(std::ostream& out, const KeywordDistribution& dist) {
  out << "keyword,count,relfreq\n";
  for (const auto& e : dist.entries()) {
    out << csv::escape(e.keyword) << ',' << e.count << ',' << csv::number(e.relfreq) << '\n';
  }
}

}  // namespace fieldevo
