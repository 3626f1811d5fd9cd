#include "filtdom/build.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "filtdom/random.hpp"

namespace filtdom {

double kde_bandwidth(std::span<const double> distances) {
  std::vector<double> distinct;
  for (double d : distances) {
    if (d > 0) distinct.push_back(d);
  }
  if (distinct.empty()) {
    throw std::invalid_argument("cannot pick a KDE bandwidth: all distances are zero");
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t k = distinct.size();
  return distinct[(k + 4) / 5 - 1];  // ceil(0.2 k) - 1
}

std::vector<double> kde_density(const CondensedDistances& distances, double bandwidth) {
  if (!(bandwidth > 0)) throw std::invalid_argument("KDE bandwidth must be positive");
  const double scale = 1.0 / (2.0 * bandwidth * bandwidth);
  const std::size_t n = distances.num_points;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = i == j ? 0.0 : distances.at(i, j);
      sum += std::exp(-d * d * scale);
    }
    out[i] = sum;
  }
  return out;
}

BifilteredGraph density_rips_graph(const CondensedDistances& distances,
                                   std::span<const double> densities) {
  const std::size_t n = distances.num_points;
  if (densities.size() != n) {
    throw std::invalid_argument("got " + std::to_string(densities.size()) + " densities for " +
                                std::to_string(n) + " points");
  }
  std::vector<Edge> edges;
  edges.reserve(distances.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j),
                       {std::max(-densities[i], -densities[j]), distances.at(i, j)}});
    }
  }
  return graph_from_edges(n, edges);
}

BifilteredGraph density_rips_graph(const CondensedDistances& distances) {
  const auto densities = kde_density(distances, kde_bandwidth(distances.values));
  return density_rips_graph(distances, densities);
}

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kSphere: return "sphere";
    case DatasetKind::kUniform: return "uniform";
    case DatasetKind::kCircle: return "circle";
    case DatasetKind::kTorus: return "torus";
    case DatasetKind::kSwissRoll: return "swiss-roll";
  }
  return "?";
}

std::optional<DatasetKind> parse_dataset_kind(std::string_view name) {
  for (DatasetKind k : {DatasetKind::kSphere, DatasetKind::kUniform, DatasetKind::kCircle,
                        DatasetKind::kTorus, DatasetKind::kSwissRoll}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

PointCloud generate_dataset(DatasetKind kind, std::size_t n, std::uint64_t seed,
                            const DatasetParams& params) {
  if (n < 2) throw std::invalid_argument("a dataset needs at least 2 points");
  constexpr double kPi = std::numbers::pi;
  Rng rng(seed);
  const auto rows = static_cast<Eigen::Index>(n);
  PointCloud points;
  switch (kind) {
    case DatasetKind::kUniform:
      points.resize(rows, 2);
      for (Eigen::Index i = 0; i < rows; ++i) {
        points(i, 0) = uniform01(rng);
        points(i, 1) = uniform01(rng);
      }
      break;
    case DatasetKind::kCircle:
      points.resize(rows, 2);
      for (Eigen::Index i = 0; i < rows; ++i) {
        const double angle = uniform(rng, 0.0, 2 * kPi);
        points(i, 0) = std::cos(angle);
        points(i, 1) = std::sin(angle);
      }
      break;
    case DatasetKind::kSphere: {
      points.resize(rows, 3);
      const auto outliers = static_cast<Eigen::Index>(std::llround(params.outlier_fraction * n));
      for (Eigen::Index i = 0; i < rows - outliers; ++i) {
        Eigen::Vector3d x;
        do {
          x = {standard_normal(rng), standard_normal(rng), standard_normal(rng)};
        } while (x.norm() == 0.0);
        points.row(i) = x.normalized().transpose();
      }
      for (Eigen::Index i = rows - outliers; i < rows; ++i) {
        for (Eigen::Index c = 0; c < 3; ++c) points(i, c) = uniform(rng, -2.0, 2.0);
      }
      break;
    }
    case DatasetKind::kTorus:
      points.resize(rows, 3);
      for (Eigen::Index i = 0; i < rows; ++i) {
        const double u = uniform(rng, 0.0, 2 * kPi);
        const double v = uniform(rng, 0.0, 2 * kPi);
        const double ring = params.torus_major + params.torus_minor * std::cos(v);
        points(i, 0) = ring * std::cos(u);
        points(i, 1) = ring * std::sin(u);
        points(i, 2) = params.torus_minor * std::sin(v);
      }
      break;
    case DatasetKind::kSwissRoll:
      points.resize(rows, 3);
      for (Eigen::Index i = 0; i < rows; ++i) {
        const double t = uniform(rng, 1.5 * kPi, 4.5 * kPi);
        points(i, 0) = t * std::cos(t);
        points(i, 1) = uniform(rng, 0.0, params.swiss_roll_height);
        points(i, 2) = t * std::sin(t);
      }
      break;
  }
  return points;
}

PointCloud generate_dataset(std::string_view kind, std::size_t n, std::uint64_t seed,
                            const DatasetParams& params) {
  auto parsed = parse_dataset_kind(kind);
  if (!parsed) throw std::invalid_argument("unknown dataset kind '" + std::string(kind) + "'");
  return generate_dataset(*parsed, n, seed, params);
}

}  // namespace filtdom
