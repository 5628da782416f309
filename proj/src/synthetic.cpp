#include "fieldevo/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <random>

namespace fieldevo {
namespace {

struct Topic {
  int id;
  double weight;
};

std::string keyword_name(const std::string& field, int id) {
  std::string out;
  for (char c : field) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out + " topic " + std::to_string(id);
}

}  // namespace

std::vector<BibRecord> generate_corpus(const SyntheticConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kw_count(config.min_keywords, config.max_keywords);
  std::vector<BibRecord> records;
  records.reserve(config.fields.size() * static_cast<std::size_t>(config.years.size()) *
                  static_cast<std::size_t>(config.records_per_year));

  for (const auto& field : config.fields) {
    int next_id = 0;
    std::vector<Topic> active;
    // Zipf-like popularity: weight ~ 1/(rank+5), shuffled by a random factor.
    for (int i = 0; i < config.active_vocab; ++i) {
      active.push_back({next_id++, (0.5 + unit(rng)) / (i + 5.0)});
    }
    for (int year = config.years.first; year <= config.years.last; ++year) {
      if (year > config.years.first) {
        const double rate =
            config.initial_drift * std::exp(-config.drift_decay * (year - config.years.first - 1));
        for (auto& t : active) {
          if (unit(rng) < rate) t = {next_id++, t.weight};
          // Popularity wobble proportional to the drift rate.
          t.weight *= std::exp(rate * (unit(rng) - 0.5));
        }
      }
      std::vector<double> weights;
      weights.reserve(active.size());
      for (const auto& t : active) weights.push_back(t.weight);
      std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

      for (int r = 0; r < config.records_per_year; ++r) {
        BibRecord rec;
        rec.id = field + "-" + std::to_string(year) + "-" + std::to_string(r);
        rec.year = year;
        rec.field = field;
        if (unit(rng) >= config.empty_record_share) {
          const int k = kw_count(rng);
          for (int draw = 0; draw < 4 * k && static_cast<int>(rec.keywords.size()) < k; ++draw) {
            auto kw = keyword_name(field, active[pick(rng)].id);
            if (std::find(rec.keywords.begin(), rec.keywords.end(), kw) == rec.keywords.end()) {
              rec.keywords.push_back(std::move(kw));
            }
          }
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

}  // namespace fieldevo
