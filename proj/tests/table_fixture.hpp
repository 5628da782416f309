#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fieldevo/corpus.hpp"

// Keyword counts of the worked example: year t and year s.
inline const std::vector<std::pair<std::string, int>> kYearT = {
    {"neural network", 18}, {"pattern recognition", 14}, {"deep learning", 22}, {"similarity", 16}};
inline const std::vector<std::pair<std::string, int>> kYearS = {{"artificial intelligence", 25},
                                                                {"pattern recognition", 30},
                                                                {"deep learning", 15},
                                                                {"robotics", 10},
                                                                {"similarity", 10}};

// Union vocabulary in the example's column order, with p and q numerators
// over the common denominator 630.
inline const std::vector<std::string> kExampleVocab = {
    "artificial intelligence", "neural network", "pattern recognition",
    "deep learning",           "robotics",       "similarity"};
inline const std::vector<int> kP630 = {0, 162, 126, 198, 0, 144};
inline const std::vector<int> kQ630 = {175, 0, 210, 105, 70, 70};

/// One single-keyword record per occurrence.
inline fieldevo::YearBucket bucket_from_counts(
    const std::string& field, int year, const std::vector<std::pair<std::string, int>>& counts) {
  fieldevo::YearBucket b{field, year, {}};
  int id = 0;
  for (const auto& [kw, n] : counts) {
    for (int i = 0; i < n; ++i) {
      b.records.push_back({field + std::to_string(year) + "-" + std::to_string(id++), year, field,
                           {kw}, {}});
    }
  }
  return b;
}
