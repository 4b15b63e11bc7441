#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lapspread/families.hpp"
#include "lapspread/spectral.hpp"
#include "support.hpp"

using namespace lapspread;

namespace {

Eigen::MatrixXd dense(const SymMatrix& m) {
  Eigen::MatrixXd d(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) d(i, j) = m(i, j);
  }
  return d;
}

// Characteristic polynomial coefficients c_0..c_n of det(xI - M) by the
// Faddeev–LeVerrier recursion (c_n = 1).
std::vector<double> charpoly(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

// Coefficients of prod (x - r_i).
std::vector<double> from_roots(const std::vector<double>& roots) {
  std::vector<double> c = {1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST(Spectral, LaplacianRowsSumToZero) {
  const auto g = gen_petersen();
  const auto l = laplacian(g);
  for (std::size_t i = 0; i < 10; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 10; ++j) s += l(i, j);
    EXPECT_EQ(s, 0.0);
    EXPECT_EQ(l(i, i), 3.0);
  }
}

TEST(Spectral, CompleteGraphK5) {
  const auto s = laplacian_spectrum(gen_complete(5));
  const std::vector<double> want = {5, 5, 5, 5, 0};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(s.values[k], want[k], 1e-12);
  EXPECT_EQ(s.values[4], 0.0);
  // The characteristic polynomial x(x - 5)^4 from the recursion.
  const auto c = charpoly(dense(laplacian(gen_complete(5))));
  const auto r = from_roots(want);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(c[k], r[k], 1e-8);
}

TEST(Spectral, CharacteristicPolynomialOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = support::random_graph(3 + seed % 6, 0.5, seed);
    const auto s = laplacian_spectrum(g);
    const auto c = charpoly(dense(laplacian(g)));
    const auto r = from_roots(s.values);
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(c[k], r[k], 1e-7 * std::max(1.0, std::abs(c[k]))) << seed;
  }
}

TEST(Spectral, MatchesEigenSelfAdjointSolver) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = support::random_graph(2 + seed % 15, 0.45, seed);
    const auto s = laplacian_spectrum(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(laplacian(g)));
    auto ref = std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ref.rbegin(), ref.rend());
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(s.values[k], ref[k], 1e-9) << seed;
  }
}

TEST(Spectral, ResidualAndOrthonormality) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = support::random_graph(2 + seed % 15, 0.5, seed);
    const auto l = laplacian(g);
    const auto s = laplacian_spectrum(g);
    for (std::size_t a = 0; a < s.size(); ++a) {
      EXPECT_LE(eigen_residual(l, s.values[a], s.vectors[a]), 1e-9 * std::max(1.0, s.values[a]));
      for (std::size_t b = 0; b < s.size(); ++b) {
        EXPECT_NEAR(dot(s.vectors[a], s.vectors[b]), a == b ? 1.0 : 0.0, 1e-9);
      }
    }
  }
}

TEST(Spectral, TraceIdentities) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = support::random_graph(2 + seed % 12, 0.5, seed);
    const auto s = laplacian_spectrum(g);
    double sum = 0.0;
    double sq = 0.0;
    for (double v : s.values) {
      sum += v;
      sq += v * v;
    }
    double deg_sq = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) deg_sq += static_cast<double>(g.degree(v) * g.degree(v));
    const double m = static_cast<double>(g.size());
    EXPECT_NEAR(sum, 2.0 * m, 1e-9);
    EXPECT_NEAR(sq, deg_sq + 2.0 * m, 1e-8);
  }
}

TEST(Spectral, ComplementDuality) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const auto g = support::random_graph(n, 0.4, seed);
    const auto s = laplacian_spectrum(g);
    const auto c = laplacian_spectrum(complement(g));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      EXPECT_NEAR(c.values[i], static_cast<double>(n) - s.values[n - 2 - i], 1e-9) << seed;
    }
  }
}

TEST(Spectral, CycleC5) {
  const auto s = laplacian_spectrum(gen_cycle(5));
  std::vector<double> want;
  for (int k = 0; k < 5; ++k) want.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / 5.0));
  std::sort(want.rbegin(), want.rend());
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(s.values[k], want[k], 1e-12);
}

TEST(Spectral, ScalarAccessors) {
  const auto g = gen_path(3);
  EXPECT_NEAR(laplacian_index(g), 3.0, 1e-12);
  EXPECT_NEAR(algebraic_connectivity(g), 1.0, 1e-12);
  EXPECT_NEAR(laplacian_spread(g), 2.0, 1e-12);
  EXPECT_THROW(algebraic_connectivity(Graph(1)), std::invalid_argument);
  EXPECT_THROW(laplacian_spread(Graph(1)), std::invalid_argument);
}

TEST(Spectral, TrivialEigenvectorIsUniformWhenConnected) {
  const auto s = laplacian_spectrum(gen_petersen());
  const double u = 1.0 / std::sqrt(10.0);
  for (double x : s.vectors.back()) EXPECT_DOUBLE_EQ(x, u);
  const auto d = laplacian_spectrum(disjoint_union(gen_path(2), gen_path(3)));
  EXPECT_EQ(d.values[3], 0.0);
  EXPECT_EQ(d.values[4], 0.0);
}

TEST(Spectral, QuadraticFormMatchesMatrixProduct) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = support::random_graph(8, 0.5, seed);
    std::vector<double> x(8);
    for (std::size_t i = 0; i < 8; ++i) x[i] = std::sin(static_cast<double>(seed * 8 + i));
    const auto lx = laplacian(g).multiply(x);
    EXPECT_NEAR(quadratic_form(g, x), dot(x, lx), 1e-12);
  }
}

TEST(Spectral, NonConvergenceIsReported) {
  const auto g = support::random_graph(12, 0.5, 3);
  EXPECT_THROW(eigensolve(laplacian(g), {1e-12, 1}), NumericalError);
}

TEST(Spectral, GeneralSymmetricMatrix) {
  SymMatrix m(3);
  m.set(0, 0, 2);
  m.set(0, 1, -1);
  m.set(1, 1, 2);
  m.set(1, 2, -1);
  m.set(2, 2, 2);
  const auto s = eigensolve(m);
  EXPECT_NEAR(s.values[0], 2 + std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.values[1], 2.0, 1e-12);
  EXPECT_NEAR(s.values[2], 2 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(m.trace(), 6.0, 1e-15);
}
