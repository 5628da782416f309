#include "fieldevo/pca.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fieldevo/errors.hpp"
#include "fieldevo/jacobi.hpp"

namespace fieldevo {
namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kEigenvalueClamp = 1e-10;

void orient_by_largest(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  }
  if (v(best) < 0.0) v = -v;
}

}  // namespace

Eigen::MatrixXd DissimilarityMatrix::values() const {
  Eigen::MatrixXd out(size(), kMeasureCount);
  for (Eigen::Index r = 0; r < size(); ++r) {
    out.row(r) = rows_[static_cast<std::size_t>(r)].values.transpose();
  }
  return out;
}

DissimilarityMatrix DissimilarityMatrix::for_field(const std::string& field) const {
  std::vector<DissimilarityVector> out;
  for (const auto& row : rows_) {
    if (row.field == field) out.push_back(row);
  }
  return DissimilarityMatrix(std::move(out));
}

Standardized standardize(const Eigen::MatrixXd& x,
                         std::span<const std::string_view> column_names) {
  const Eigen::Index n = x.rows();
  if (n < 2) throw std::invalid_argument("standardize needs at least two rows");

  Standardized out;
  out.z.resize(n, x.cols());
  out.means.resize(x.cols());
  out.stddevs.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) sum += x(i, j);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = x(i, j) - mean;
      ss += d * d;
      scale = std::max(scale, std::abs(x(i, j)));
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    // Rounding of the mean leaves ~eps*scale residue on a constant column.
    if (!(sd > 64.0 * std::numeric_limits<double>::epsilon() * scale)) {
      const auto jj = static_cast<std::size_t>(j);
      throw ZeroVarianceColumn(static_cast<int>(j), jj < column_names.size()
                                                        ? std::string(column_names[jj])
                                                        : std::to_string(j));
    }
    out.means(j) = mean;
    out.stddevs(j) = sd;
    for (Eigen::Index i = 0; i < n; ++i) out.z(i, j) = (x(i, j) - mean) / sd;
  }
  return out;
}

Standardized standardize(const DissimilarityMatrix& matrix) {
  return standardize(matrix.values(), kMeasureNames);
}

Eigen::MatrixXd correlation_of_standardized(const Eigen::MatrixXd& z) {
  const Eigen::Index n = z.rows();
  const Eigen::Index m = z.cols();
  Eigen::MatrixXd c(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a; b < m; ++b) {
      double sum = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) sum += z(i, a) * z(i, b);
      c(a, b) = c(b, a) = sum / static_cast<double>(n - 1);
    }
  }
  return c;
}

PcaModel fit_pca(const Eigen::MatrixXd& z, std::optional<Eigen::Index> pc1_anchor) {
  if (z.rows() < 2) throw std::invalid_argument("PCA needs at least two rows");
  const auto eig =
      jacobi_eigen(correlation_of_standardized(z), kJacobiTolerance, kJacobiMaxSweeps);

  PcaModel model;
  model.sweeps = eig.sweeps;
  model.eigenvalues = eig.eigenvalues;
  model.loadings = eig.eigenvectors;
  for (Eigen::Index k = 0; k < model.eigenvalues.size(); ++k) {
    double& lambda = model.eigenvalues(k);
    if (lambda < 0.0 && lambda >= -kEigenvalueClamp) lambda = 0.0;
  }

  for (Eigen::Index k = 0; k < model.loadings.cols(); ++k) {
    auto col = model.loadings.col(k);
    if (k == 0 && pc1_anchor && col(*pc1_anchor) != 0.0) {
      if (col(*pc1_anchor) < 0.0) col = -col;
    } else {
      orient_by_largest(col);
    }
  }

  const double total = model.eigenvalues.sum();
  model.explained_fraction = model.eigenvalues / total;
  return model;
}

PcaModel fit_pca(const DissimilarityMatrix& matrix) {
  auto std = standardize(matrix);
  auto model = fit_pca(std.z, index_of(MeasureId::kManhattan));
  model.means = std::move(std.means);
  model.stddevs = std::move(std.stddevs);
  return model;
}

Eigen::VectorXd pc1_scores(const PcaModel& model, const Eigen::MatrixXd& values) {
  const auto pc1 = model.pc1();
  Eigen::VectorXd scores(values.rows());
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      s += pc1(j) * (values(r, j) - model.means(j)) / model.stddevs(j);
    }
    scores(r) = s;
  }
  return scores;
}

Eigen::VectorXd pc1_scores(const PcaModel& model, const DissimilarityMatrix& matrix) {
  return pc1_scores(model, matrix.values());
}

ScoredSeries translate_scores(const Eigen::VectorXd& raw) {
  if (raw.size() == 0) throw std::invalid_argument("translate_scores needs at least one score");
  ScoredSeries out;
  out.raw_pc1 = raw;
  out.global_min = raw.minCoeff();
  out.translated = (raw.array() - out.global_min).matrix();
  return out;
}

}  // namespace fieldevo
