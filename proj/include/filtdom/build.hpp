#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "filtdom/graph.hpp"

namespace filtdom {

/// Points are rows.
template <typename Scalar>
using PointCloudT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using PointCloud = PointCloudT<double>;

/// Distances of all unordered pairs in (0,1), (0,2), ..., (1,2), ... order.
struct CondensedDistances {
  std::size_t num_points = 0;
  std::vector<double> values;

  static std::size_t index(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
  /// Requires i != j.
  double at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return values[index(num_points, i, j)];
  }
};

/// Euclidean distances between all pairs of rows.
template <typename Derived>
CondensedDistances pairwise_distances(const Eigen::MatrixBase<Derived>& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  CondensedDistances out{n, {}};
  out.values.reserve(n * (n - 1) / 2);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < points.rows(); ++j) {
      out.values.push_back(static_cast<double>((points.row(i) - points.row(j)).norm()));
    }
  }
  return out;
}

/// Nearest-rank 20th percentile of the distinct nonzero distances. Throws
/// std::invalid_argument if every distance is zero.
double kde_bandwidth(std::span<const double> distances);

/// Unnormalized Gaussian kernel sums, sum_q exp(-d(p,q)^2 / (2 h^2)), with the
/// self term included. Throws std::invalid_argument unless h > 0.
std::vector<double> kde_density(const CondensedDistances& distances, double bandwidth);

template <typename Derived>
std::vector<double> kde_density(const Eigen::MatrixBase<Derived>& points, double bandwidth) {
  if (!(bandwidth > 0)) throw std::invalid_argument("KDE bandwidth must be positive");
  const double scale = 1.0 / (2.0 * bandwidth * bandwidth);
  std::vector<double> out(static_cast<std::size_t>(points.rows()), 0.0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < points.rows(); ++j) {
      sum += std::exp(-static_cast<double>((points.row(i) - points.row(j)).squaredNorm()) * scale);
    }
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

/// Complete graph with crit({u,v}) = (max(-density u, -density v), d(u,v)).
/// Throws std::invalid_argument on a length mismatch.
BifilteredGraph density_rips_graph(const CondensedDistances& distances,
                                   std::span<const double> densities);

/// Distances, bandwidth, density and graph in one step.
BifilteredGraph density_rips_graph(const CondensedDistances& distances);

enum class DatasetKind { kSphere, kUniform, kCircle, kTorus, kSwissRoll };

std::string_view to_string(DatasetKind kind);
std::optional<DatasetKind> parse_dataset_kind(std::string_view name);

struct DatasetParams {
  double outlier_fraction = 0.1;  // sphere: share of points uniform in [-2,2]^3
  double torus_major = 1.0;
  double torus_minor = 0.5;
  double swiss_roll_height = 21.0;
};

/// Seeded synthetic clouds:
///   sphere      unit 2-sphere in R^3 plus outliers in [-2,2]^3
///   uniform     [0,1]^2
///   circle      unit circle in R^2
///   torus       radii (R, r), uniform angles
///   swiss-roll  (t cos t, y, t sin t), t in [1.5 pi, 4.5 pi], y in [0, height]
/// Throws std::invalid_argument if n < 2.
PointCloud generate_dataset(DatasetKind kind, std::size_t n, std::uint64_t seed,
                            const DatasetParams& params = {});

/// As above; throws std::invalid_argument for an unknown kind name.
PointCloud generate_dataset(std::string_view kind, std::size_t n, std::uint64_t seed,
                            const DatasetParams& params = {});

}  // namespace filtdom
