#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fieldevo/corpus.hpp"

namespace fieldevo {

/// Parameters of a synthetic corpus whose keyword usage drifts from year to
/// year at a rate that decays exponentially.
struct SyntheticConfig {
  std::vector<std::string> fields = {"ES", "ILS", "MI", "RE"};
  YearRange years{1991, 2019};
  int records_per_year = 1000;  // per field
  int active_vocab = 300;       // keywords in use at any time, per field
  int min_keywords = 2;
  int max_keywords = 6;
  double initial_drift = 0.6;   // share of the vocabulary replaced after year one
  double drift_decay = 0.12;    // per-year exponential decay of the drift share
  double empty_record_share = 0.02;
  std::uint64_t seed = 42;
};

/// Deterministic for a given config (same seed, same standard library).
std::vector<BibRecord> generate_corpus(const SyntheticConfig& config);

}  // namespace fieldevo
