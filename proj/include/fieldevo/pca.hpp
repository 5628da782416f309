#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fieldevo/measures.hpp"

namespace fieldevo {

/// Pooled dissimilarity rows, ordered by field (input order) then year.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  explicit DissimilarityMatrix(std::vector<DissimilarityVector> rows) : rows_(std::move(rows)) {}

  const std::vector<DissimilarityVector>& rows() const { return rows_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// n x 12 matrix of measure values.
  Eigen::MatrixXd values() const;

  /// Rows of one field, order preserved.
  DissimilarityMatrix for_field(const std::string& field) const;

 private:
  std::vector<DissimilarityVector> rows_;
};

struct Standardized {
  Eigen::MatrixXd z;
  Eigen::VectorXd means;
  Eigen::VectorXd stddevs;
};

/// Column-wise z-scores with the sample (n-1) standard deviation. Throws
/// ZeroVarianceColumn naming `column_names[j]` (or the index) for a constant
/// column, and std::invalid_argument for fewer than two rows.
Standardized standardize(const Eigen::MatrixXd& x,
                         std::span<const std::string_view> column_names = {});
Standardized standardize(const DissimilarityMatrix& matrix);

/// Sample correlation of an already standardized matrix: z^T z / (n-1).
Eigen::MatrixXd correlation_of_standardized(const Eigen::MatrixXd& z);

struct PcaModel {
  Eigen::VectorXd means;
  Eigen::VectorXd stddevs;
  Eigen::MatrixXd loadings;  // columns are components
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd explained_fraction;
  int sweeps = 0;

  auto pc1() const { return loadings.col(0); }
};

/// Correlation PCA of a standardized matrix via cyclic Jacobi. The first
/// component is oriented so that its loading on `pc1_anchor` is positive;
/// every other component (and PC1 when the anchor loading is exactly zero or
/// absent) has its largest-magnitude loading positive. `means`/`stddevs` of the
/// returned model are left empty.
PcaModel fit_pca(const Eigen::MatrixXd& z, std::optional<Eigen::Index> pc1_anchor = std::nullopt);

/// Standardizes the 12 measure columns and fits with PC1 anchored on manhattan.
PcaModel fit_pca(const DissimilarityMatrix& matrix);

/// PC1 score of every row: sum_i pc1_i * z_i(row), z taken with the model's
/// standardization.
Eigen::VectorXd pc1_scores(const PcaModel& model, const DissimilarityMatrix& matrix);
Eigen::VectorXd pc1_scores(const PcaModel& model, const Eigen::MatrixXd& values);

struct ScoredSeries {
  Eigen::VectorXd raw_pc1;
  Eigen::VectorXd translated;
  double global_min = 0.0;
};

/// Shifts all scores by their pooled minimum so the smallest becomes 0.
ScoredSeries translate_scores(const Eigen::VectorXd& raw);

}  // namespace fieldevo
