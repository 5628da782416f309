#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "fieldevo/errors.hpp"
#include "fieldevo/keyword_distribution.hpp"

namespace fieldevo {

/// The twelve dissimilarity measures in canonical column order.
enum class MeasureId {
  kCanberra,
  kClark,
  kCosine,
  kCzekanowski,
  kEuclidean,
  kJensenShannon,
  kKulczynski,
  kLorentzian,
  kManhattan,
  kProbSymmetricChi2,
  kSoergel,
  kSquaredChord,
};

inline constexpr int kMeasureCount = 12;

inline constexpr std::array<MeasureId, kMeasureCount> kAllMeasures = {
    MeasureId::kCanberra,      MeasureId::kClark,         MeasureId::kCosine,
    MeasureId::kCzekanowski,   MeasureId::kEuclidean,     MeasureId::kJensenShannon,
    MeasureId::kKulczynski,    MeasureId::kLorentzian,    MeasureId::kManhattan,
    MeasureId::kProbSymmetricChi2, MeasureId::kSoergel,   MeasureId::kSquaredChord,
};

inline constexpr std::array<std::string_view, kMeasureCount> kMeasureNames = {
    "canberra",   "clark",     "cosine",    "czekanowski",
    "euclidean",  "jensen_shannon", "kulczynski", "lorentzian",
    "manhattan",  "prob_symmetric_chi2", "soergel", "squared_chord",
};

constexpr int index_of(MeasureId m) { return static_cast<int>(m); }
constexpr std::string_view name_of(MeasureId m) { return kMeasureNames[index_of(m)]; }
std::optional<MeasureId> measure_from_name(std::string_view name);

using MeasureValues = Eigen::Matrix<double, kMeasureCount, 1>;

/// The measures as expression-friendly templates over any pair of dense
/// vectors. Sums run sequentially in ascending index order; coordinates where
/// both probabilities vanish are skipped.
namespace measures {

template <typename DP, typename DQ>
typename DP::Scalar canberra(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S s = p(i) + q(i);
    if (s > S(0)) sum += std::abs(p(i) - q(i)) / s;
  }
  return sum;
}

template <typename DP, typename DQ>
typename DP::Scalar clark(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S s = p(i) + q(i);
    if (s > S(0)) {
      const S r = (p(i) - q(i)) / s;
      sum += r * r;
    }
  }
  return std::sqrt(sum);
}

template <typename DP, typename DQ>
typename DP::Scalar cosine(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S dot(0), pp(0), qq(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    dot += p(i) * q(i);
    pp += p(i) * p(i);
    qq += q(i) * q(i);
  }
  // sqrt(pp * qq) is exact when pp == qq, so identical inputs give 0.
  const S d = S(1) - dot / std::sqrt(pp * qq);
  return std::clamp(d, S(0), S(1));
}

template <typename DP, typename DQ>
typename DP::Scalar czekanowski(const Eigen::MatrixBase<DP>& p,
                                const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S num(0), den(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    num += std::abs(p(i) - q(i));
    den += p(i) + q(i);
  }
  return num / den;
}

template <typename DP, typename DQ>
typename DP::Scalar euclidean(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S d = p(i) - q(i);
    sum += d * d;
  }
  return std::sqrt(sum);
}

template <typename DP, typename DQ>
typename DP::Scalar jensen_shannon(const Eigen::MatrixBase<DP>& p,
                                   const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S s = p(i) + q(i);
    if (!(s > S(0))) continue;
    S term(0);
    if (p(i) > S(0)) term += p(i) * std::log(S(2) * p(i) / s);
    if (q(i) > S(0)) term += q(i) * std::log(S(2) * q(i) / s);
    sum += term;
  }
  return std::max(S(0), sum / S(2));
}

/// Distance form: L1 over the summed coordinate-wise minimum. Throws
/// DivisionByZero when the supports are disjoint.
template <typename DP, typename DQ>
typename DP::Scalar kulczynski(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S num(0), den(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    num += std::abs(p(i) - q(i));
    den += std::min(p(i), q(i));
  }
  if (!(den > S(0))) throw DivisionByZero("kulczynski: distributions share no keyword");
  return num / den;
}

template <typename DP, typename DQ>
typename DP::Scalar lorentzian(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) sum += std::log1p(std::abs(p(i) - q(i)));
  return sum;
}

template <typename DP, typename DQ>
typename DP::Scalar manhattan(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) sum += std::abs(p(i) - q(i));
  return sum;
}

template <typename DP, typename DQ>
typename DP::Scalar prob_symmetric_chi2(const Eigen::MatrixBase<DP>& p,
                                        const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S s = p(i) + q(i);
    if (s > S(0)) {
      const S d = p(i) - q(i);
      sum += d * d / s;
    }
  }
  return S(2) * sum;
}

template <typename DP, typename DQ>
typename DP::Scalar soergel(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S num(0), den(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    num += std::abs(p(i) - q(i));
    den += std::max(p(i), q(i));
  }
  return num / den;
}

template <typename DP, typename DQ>
typename DP::Scalar squared_chord(const Eigen::MatrixBase<DP>& p,
                                  const Eigen::MatrixBase<DQ>& q) {
  using S = typename DP::Scalar;
  S sum(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const S d = std::sqrt(p(i)) - std::sqrt(q(i));
    sum += d * d;
  }
  return sum;
}

template <typename DP, typename DQ>
typename DP::Scalar evaluate(MeasureId m, const Eigen::MatrixBase<DP>& p,
                             const Eigen::MatrixBase<DQ>& q) {
  switch (m) {
    case MeasureId::kCanberra: return canberra(p, q);
    case MeasureId::kClark: return clark(p, q);
    case MeasureId::kCosine: return cosine(p, q);
    case MeasureId::kCzekanowski: return czekanowski(p, q);
    case MeasureId::kEuclidean: return euclidean(p, q);
    case MeasureId::kJensenShannon: return jensen_shannon(p, q);
    case MeasureId::kKulczynski: return kulczynski(p, q);
    case MeasureId::kLorentzian: return lorentzian(p, q);
    case MeasureId::kManhattan: return manhattan(p, q);
    case MeasureId::kProbSymmetricChi2: return prob_symmetric_chi2(p, q);
    case MeasureId::kSoergel: return soergel(p, q);
    case MeasureId::kSquaredChord: return squared_chord(p, q);
  }
  return typename DP::Scalar(0);
}

}  // namespace measures

/// One row of the dissimilarity dataset: all twelve measures for (t, t+1).
struct DissimilarityVector {
  std::string field;
  int year_from = 0;
  int year_to = 0;
  MeasureValues values = MeasureValues::Zero();

  double operator[](MeasureId m) const { return values(index_of(m)); }
};

double dissimilarity(MeasureId measure, const AlignedDistributionPair& pair);

/// All twelve values in canonical order. `year_to` is set to `year_from + 1`.
DissimilarityVector all_measures(const AlignedDistributionPair& pair, const std::string& field,
                                 int year_from);

}  // namespace fieldevo
