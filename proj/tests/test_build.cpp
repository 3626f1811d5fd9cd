#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "filtdom/build.hpp"
#include "filtdom/io.hpp"

using namespace filtdom;

namespace {

PointCloud cloud(std::initializer_list<std::initializer_list<double>> rows) {
  PointCloud p(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto row : rows) {
    Eigen::Index j = 0;
    for (double x : row) p(i, j++) = x;
    ++i;
  }
  return p;
}

}  // namespace

TEST_CASE("pairwise distances") {
  CHECK(pairwise_distances(cloud({{0, 0}, {3, 4}})).values == std::vector<double>{5.0});
  CHECK(pairwise_distances(cloud({{0, 0}, {0, 0}})).values == std::vector<double>{0.0});
  CHECK(pairwise_distances(cloud({{0, 0}, {1, 0}, {2, 0}})).values == std::vector<double>{1, 2, 1});
  const auto d = pairwise_distances(cloud({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK(d.at(2, 1) == doctest::Approx(std::sqrt(5.0)));
  CHECK(d.at(0, 3) == 3.0);
}

TEST_CASE("KDE bandwidth") {
  CHECK(kde_bandwidth(std::vector<double>{1, 2, 3, 4, 5}) == 1);
  CHECK(kde_bandwidth(std::vector<double>{10, 9, 8, 7, 6, 5, 4, 3, 2, 1}) == 2);
  CHECK(kde_bandwidth(std::vector<double>{5, 5, 5, 1}) == 1);
  CHECK(kde_bandwidth(std::vector<double>{0, 0, 4}) == 4);
  std::vector<double> fifteen;
  for (int k = 1; k <= 15; ++k) fifteen.push_back(k);
  CHECK(kde_bandwidth(fifteen) == 3);  // ceil(3) - 1 = index 2
  CHECK_THROWS_AS(kde_bandwidth(std::vector<double>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kde_bandwidth(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("KDE density") {
  CHECK(kde_density(cloud({{0.3, 0.4}}), 0.7) == std::vector<double>{1.0});
  CHECK(kde_density(cloud({{1, 1}, {1, 1}}), 1.0) == std::vector<double>{2.0, 2.0});
  const double h = 0.37;
  const double d = h * std::sqrt(2 * std::log(2.0));
  for (double x : kde_density(cloud({{0, 0}, {d, 0}}), h)) CHECK(x == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(kde_density(cloud({{0, 0}}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kde_density(CondensedDistances{2, {1.0}}, -1.0), std::invalid_argument);

  SUBCASE("point and distance routes agree") {
    const auto pts = generate_dataset(DatasetKind::kTorus, 40, 3);
    const auto a = kde_density(pts, 0.3);
    const auto b = kde_density(pairwise_distances(pts), 0.3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
  SUBCASE("permutation equivariant") {
    const auto pts = generate_dataset(DatasetKind::kUniform, 30, 9);
    PointCloud reversed = pts.colwise().reverse();
    const auto a = kde_density(pts, 0.2);
    const auto b = kde_density(reversed, 0.2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == doctest::Approx(b[a.size() - 1 - i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("density-Rips graph") {
  auto g = density_rips_graph(CondensedDistances{2, {1.0}}, std::vector<double>{3, 5});
  REQUIRE(g.num_edges() == 1);
  CHECK(g.grade_of(0, 1) == Grade{-3, 1});

  const auto pts = generate_dataset(DatasetKind::kCircle, 12, 1);
  const auto dist = pairwise_distances(pts);
  auto flat = density_rips_graph(dist, std::vector<double>(12, 2.5));
  CHECK(flat.num_edges() == 66);
  for (const Edge& e : flat.edges()) {
    CHECK(e.grade.s == -2.5);
    CHECK(e.grade.t == dist.at(e.u, e.v));
  }
  CHECK_THROWS_AS(density_rips_graph(dist, std::vector<double>(11, 1.0)), std::invalid_argument);

  SUBCASE("raising a density never raises an incident first coordinate") {
    auto dens = kde_density(dist, kde_bandwidth(dist.values));
    const auto before = density_rips_graph(dist, dens);
    dens[4] *= 3;
    const auto after = density_rips_graph(dist, dens);
    for (const Edge& e : before.edges()) {
      CHECK(after.grade_of(e.u, e.v).s <= e.grade.s);
      CHECK(after.grade_of(e.u, e.v).t == e.grade.t);
    }
  }
  SUBCASE("all grades finite, complete graph") {
    const auto h = density_rips_graph(pairwise_distances(generate_dataset(DatasetKind::kSphere, 25, 2)));
    CHECK(h.num_edges() == 25 * 24 / 2);
    for (const Edge& e : h.edges()) CHECK(e.grade.is_finite());
  }
}

TEST_CASE("synthetic datasets") {
  CHECK(generate_dataset(DatasetKind::kCircle, 100, 7) == generate_dataset(DatasetKind::kCircle, 100, 7));
  CHECK(generate_dataset(DatasetKind::kCircle, 100, 7) != generate_dataset(DatasetKind::kCircle, 100, 8));

  const auto uni = generate_dataset(DatasetKind::kUniform, 50, 1);
  CHECK(uni.cols() == 2);
  CHECK(uni.minCoeff() >= 0.0);
  CHECK(uni.maxCoeff() <= 1.0);

  const auto sphere = generate_dataset(DatasetKind::kSphere, 100, 1, {.outlier_fraction = 0.0});
  for (Eigen::Index i = 0; i < sphere.rows(); ++i) CHECK(std::abs(sphere.row(i).norm() - 1.0) < 1e-9);
  const auto noisy = generate_dataset(DatasetKind::kSphere, 100, 1);
  int off_sphere = 0;
  for (Eigen::Index i = 0; i < noisy.rows(); ++i) off_sphere += std::abs(noisy.row(i).norm() - 1.0) > 1e-9;
  CHECK(off_sphere == 10);
  CHECK(noisy.cwiseAbs().maxCoeff() <= 2.0);

  const auto torus = generate_dataset(DatasetKind::kTorus, 60, 4);
  for (Eigen::Index i = 0; i < torus.rows(); ++i) {
    const double ring = std::hypot(torus(i, 0), torus(i, 1)) - 1.0;
    CHECK(std::hypot(ring, torus(i, 2)) == doctest::Approx(0.5));
  }
  const auto roll = generate_dataset(DatasetKind::kSwissRoll, 60, 4);
  CHECK(roll.cols() == 3);
  CHECK(roll.col(1).minCoeff() >= 0.0);
  CHECK(roll.col(1).maxCoeff() <= 21.0);

  CHECK_THROWS_AS(generate_dataset("klein-bottle", 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_dataset(DatasetKind::kUniform, 1, 1), std::invalid_argument);
  for (auto name : {"sphere", "uniform", "circle", "torus", "swiss-roll"}) {
    CHECK(to_string(*parse_dataset_kind(name)) == name);
  }
}

TEST_CASE("point and distance file formats") {
  std::istringstream pts("# header\n0,0\n3 4\n\n1.5, 2\n");
  const auto p = read_points(pts);
  CHECK(p.rows() == 3);
  CHECK(p(2, 0) == 1.5);

  std::istringstream ragged("0 0\n1 2 3\n");
  CHECK_THROWS_AS(read_points(ragged), ParseError);
  std::istringstream junk("0 zero\n");
  CHECK_THROWS_AS(read_points(junk), ParseError);

  std::ostringstream out;
  write_points(out, p);
  std::istringstream back(out.str());
  CHECK(read_points(back) == p);

  for (const char* text : {"1\n2,3\n4,5,6\n", "\n1\n2 3\n4 5 6\n"}) {
    std::istringstream in(text);
    const auto d = read_lower_distance_matrix(in);
    CHECK(d.num_points == 4);
    CHECK(d.at(1, 0) == 1);
    CHECK(d.at(2, 0) == 2);
    CHECK(d.at(2, 1) == 3);
    CHECK(d.at(3, 0) == 4);
    CHECK(d.at(3, 2) == 6);
  }
  std::istringstream bad("1\n2\n");
  CHECK_THROWS_AS(read_lower_distance_matrix(bad), ParseError);
  std::istringstream negative("-1\n");
  CHECK_THROWS_AS(read_lower_distance_matrix(negative), ParseError);

  std::istringstream values("1.5\n# skip\n2\n");
  CHECK(read_values(values) == std::vector<double>{1.5, 2});
}
