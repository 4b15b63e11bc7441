#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lapspread/graph.hpp"

namespace lapspread {

/// Raised when the eigensolver fails to reach its convergence threshold.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  /// Off-diagonal Frobenius norm at the point of failure.
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Dense symmetric matrix, row-major. Writes through set() keep it symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  double frobenius_norm() const;
  double off_diagonal_norm() const;
  double trace() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Eigenvalues sorted nonincreasingly; vectors[k] is the unit eigenvector
/// paired with values[k].
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  std::size_t sweeps = 0;
  double off_diagonal_residual = 0.0;

  std::size_t size() const { return values.size(); }
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  std::size_t max_sweeps = 100;
};

/// Eigenvalues with |value| at or below this are snapped to exactly 0.
inline constexpr double kTrivialEigenvalueSnap = 1e-9;

/// L(G) = D(G) - A(G).
SymMatrix laplacian(const Graph& g);

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Iterates until the off-diagonal Frobenius norm drops below
/// `relative_tolerance * ||m||_F`. The sort is stable, so equal eigenvalues
/// keep the rotation output order. Throws NumericalError after
/// `max_sweeps` sweeps without convergence.
Spectrum eigensolve(const SymMatrix& m, const JacobiOptions& opts = {});

/// Laplacian spectrum with the trivial eigenvalue cleaned up: near-zero
/// values are snapped to 0 and, for connected graphs, the kernel vector is
/// replaced by the normalised all-ones vector.
Spectrum laplacian_spectrum(const Graph& g);

double laplacian_index(const Graph& g);
/// Second-smallest Laplacian eigenvalue; requires n >= 2.
double algebraic_connectivity(const Graph& g);
double laplacian_spread(const Graph& g);

/// Sum over edges of (x_j - x_k)^2, i.e. x^T L(G) x.
double quadratic_form(const Graph& g, std::span<const double> x);

/// ||m v - value * v||_2.
double eigen_residual(const SymMatrix& m, double value, std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);

}  // namespace lapspread
