#include "lapspread/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lapspread {

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j) s += data_[i * n_ + j] * data_[i * n_ + j];
    }
  }
  return std::sqrt(s);
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
  return t;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += data_[i * n_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    m.set(i, i, static_cast<double>(g.degree(i)));
    for (Vertex j : g.neighbors(i)) {
      if (i < j) m.set(i, j, -1.0);
    }
  }
  return m;
}

Spectrum eigensolve(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.dim();
  // Work on a plain dense copy; `a` stays symmetric through every rotation.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
  };

  const double threshold = opts.relative_tolerance * m.frobenius_norm();
  std::size_t sweeps = 0;
  double off = off_norm();
  while (off > threshold) {
    if (sweeps == opts.max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                               " sweeps (off-diagonal norm " + std::to_string(off) + ")",
                           off);
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  Spectrum out;
  out.sweeps = sweeps;
  out.off_diagonal_residual = off;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a[k * n + k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

Spectrum laplacian_spectrum(const Graph& g) {
  Spectrum s = eigensolve(laplacian(g));
  const std::size_t n = s.size();
  if (is_connected(g)) {
    std::size_t trivial = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (std::abs(s.values[k]) < std::abs(s.values[trivial])) trivial = k;
    }
    if (std::abs(s.values[trivial]) <= kTrivialEigenvalueSnap) s.values[trivial] = 0.0;
    std::fill(s.vectors[trivial].begin(), s.vectors[trivial].end(), 1.0 / std::sqrt(static_cast<double>(n)));
  } else {
    for (double& value : s.values) {
      if (std::abs(value) <= kTrivialEigenvalueSnap) value = 0.0;
    }
  }
  // Snapping can only reorder values that were within 1e-9 of zero.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return s.values[x] > s.values[y]; });
  Spectrum sorted;
  sorted.sweeps = s.sweeps;
  sorted.off_diagonal_residual = s.off_diagonal_residual;
  for (std::size_t k : order) {
    sorted.values.push_back(s.values[k]);
    sorted.vectors.push_back(std::move(s.vectors[k]));
  }
  return sorted;
}

double laplacian_index(const Graph& g) { return laplacian_spectrum(g).values.front(); }

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs at least 2 vertices");
  const auto s = laplacian_spectrum(g);
  return s.values[s.size() - 2];
}

double laplacian_spread(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("Laplacian spread needs at least 2 vertices");
  const auto s = laplacian_spectrum(g);
  return s.values.front() - s.values[s.size() - 2];
}

double quadratic_form(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) throw std::invalid_argument("quadratic_form: vector length differs from graph order");
  double s = 0.0;
  for (const auto& [j, k] : g.edges()) {
    const double d = x[j] - x[k];
    s += d * d;
  }
  return s;
}

double eigen_residual(const SymMatrix& m, double value, std::span<const double> v) {
  const auto mv = m.multiply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    const double r = mv[i] - value * v[i];
    s += r * r;
  }
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double norm_inf(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace lapspread
