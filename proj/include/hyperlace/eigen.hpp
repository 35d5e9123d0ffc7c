#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperlace/matrix.hpp"

namespace hyperlace {

// Ascending real eigenvalues of a symmetric operator, counted with
// multiplicity; dim is the source matrix dimension. k-th eigenvalue in the
// 1-based lambda_1 <= ... <= lambda_n convention is values[k-1].
struct Spectrum {
  std::vector<double> values;
  std::size_t dim = 0;

  double at(std::size_t k) const {  // 1-based
    if (k < 1 || k > values.size()) throw std::out_of_range("Spectrum::at: index out of range");
    return values[k - 1];
  }

  double min() const { return values.empty() ? 0.0 : values.front(); }
  double max() const { return values.empty() ? 0.0 : values.back(); }
  double radius() const { return std::max(std::fabs(min()), std::fabs(max())); }

  bool operator==(const Spectrum&) const = default;
};

struct EigenDecomposition {
  Spectrum spectrum;
  DenseMatrix vectors;  // orthonormal columns, column k pairs with values[k]
};

class EigenConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Cyclic Jacobi on the full symmetric matrix. Sweeps rotate every (p,q) pair
// in a fixed order until the off-diagonal Frobenius norm drops below
// 1e-13 * max(1, ||M||_F); hard cap 100 sweeps. When `vectors` is non-null it
// accumulates the rotations, so M = V diag V^T on exit. Fully deterministic
// for identical input.
inline std::vector<double> jacobi_diagonalize(std::vector<double> a, std::size_t n,
                                              DenseMatrix* vectors) {
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("eigensolver: non-finite matrix entry");
  if (vectors) *vectors = DenseMatrix::identity(n);
  std::vector<double> diag(n);
  if (n < 2) {
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
    return diag;
  }

  double frob = 0.0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  const double tol = 1e-13 * std::max(1.0, frob);

  auto off_norm = [&]() {
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) acc += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(acc);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // asymptotic form, avoids theta^2 overflow
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          const double nip = aip - s * (aiq + tau * aip);
          const double niq = aiq + s * (aip - tau * aiq);
          a[i * n + p] = nip;
          a[p * n + i] = nip;
          a[i * n + q] = niq;
          a[q * n + i] = niq;
        }
        if (vectors) {
          DenseMatrix& v = *vectors;
          for (std::size_t i = 0; i < n; ++i) {
            const double vip = v(i, p);
            const double viq = v(i, q);
            v(i, p) = vip - s * (viq + tau * vip);
            v(i, q) = viq + s * (vip - tau * viq);
          }
        }
      }
    }
  }
  if (!converged && off_norm() > tol)
    throw EigenConvergenceError("Jacobi eigensolver did not converge within 100 sweeps");
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  return diag;
}

inline std::vector<std::size_t> ascending_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  return order;
}

}  // namespace detail

// Eigenvalues only; skips eigenvector accumulation.
inline Spectrum symmetric_eigenvalues(const DenseSymmetricMatrix& m) {
  std::vector<double> diag = detail::jacobi_diagonalize(m.data(), m.dim(), nullptr);
  Spectrum s;
  s.dim = m.dim();
  s.values.reserve(diag.size());
  for (std::size_t i : detail::ascending_order(diag)) s.values.push_back(diag[i]);
  return s;
}

// Full decomposition M = V diag(spectrum) V^T with ascending eigenvalues.
inline EigenDecomposition symmetric_spectrum(const DenseSymmetricMatrix& m) {
  DenseMatrix vectors;
  std::vector<double> diag = detail::jacobi_diagonalize(m.data(), m.dim(), &vectors);
  std::vector<std::size_t> order = detail::ascending_order(diag);
  EigenDecomposition out;
  out.spectrum.dim = m.dim();
  out.spectrum.values.reserve(diag.size());
  out.vectors = DenseMatrix(m.dim(), m.dim());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.spectrum.values.push_back(diag[order[k]]);
    for (std::size_t i = 0; i < m.dim(); ++i) out.vectors(i, k) = vectors(i, order[k]);
  }
  return out;
}

// x^T M x / x^T x.
inline double rayleigh_quotient(const DenseSymmetricMatrix& m, std::span<const double> x) {
  if (x.size() != m.dim()) throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double mx = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) mx += m(i, j) * x[j];
    num += x[i] * mx;
    den += x[i] * x[i];
  }
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  return num / den;
}

// True iff the two value lists pair off within tol after sorting.
inline bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("multiset_equal: tol must be positive");
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

// Values with |lambda| > tol * max(1, max|lambda|), order preserved.
inline std::vector<double> nonzero_eigenvalues(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("nonzero_eigenvalues: tol must be positive");
  const double threshold = tol * std::max(1.0, s.radius());
  std::vector<double> out;
  for (double v : s.values)
    if (std::fabs(v) > threshold) out.push_back(v);
  return out;
}

inline double trace(const DenseSymmetricMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) acc += m(i, i);
  return acc;
}

}  // namespace hyperlace
