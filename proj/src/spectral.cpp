#include "msc/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "msc/errors.hpp"

namespace msc {

namespace {

constexpr double kSymmetryTol = 1e-8;

void matvec(const Matrix& c, const std::vector<double>& x,
            std::vector<double>& y) {
  const std::size_t n = c.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = c.row_ptr(r);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * x[k];
    y[r] = acc;
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void fix_sign(std::vector<double>& v) {
  for (double x : v) {
    if (x != 0.0) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

Matrix gram(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix g(cols, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* r = m.row_ptr(i);
    for (std::size_t a = 0; a < cols; ++a) {
      const double ra = r[a];
      double* grow = g.row_ptr(a);
      for (std::size_t b = a; b < cols; ++b) grow[b] += ra * r[b];
    }
  }
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = a + 1; b < cols; ++b) g(b, a) = g(a, b);
  return g;
}

SliceSpectrum top_eigenpair(const Matrix& c, double tol, int max_iter) {
  const std::size_t n = c.rows();
  if (n != c.cols()) {
    throw std::invalid_argument("top_eigenpair: matrix must be square");
  }
  if (tol <= 0.0) throw std::invalid_argument("top_eigenpair: tol must be > 0");
  if (max_iter < 1) {
    throw std::invalid_argument("top_eigenpair: max_iter must be >= 1");
  }

  double max_abs = 0.0;
  double max_asym = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      max_abs = std::max(max_abs, std::abs(c(a, b)));
      max_asym = std::max(max_asym, std::abs(c(a, b) - c(b, a)));
    }
  }
  if (max_asym > kSymmetryTol) {
    throw std::invalid_argument("top_eigenpair: matrix is not symmetric");
  }

  if (max_abs < kDegenerateThreshold) {
    SliceSpectrum s;
    s.lambda = 0.0;
    s.vector.assign(n, 0.0);
    s.vector[0] = 1.0;
    s.degenerate = true;
    return s;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  matvec(c, x, y);
  if (norm2(y) == 0.0) {
    // ones vector sits in the null space
    x.assign(n, 0.0);
    x[0] = 1.0;
  }

  double lambda = 0.0;
  double resid = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    matvec(c, x, y);
    lambda = dot(x, y);
    double rr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double diff = y[i] - lambda * x[i];
      rr += diff * diff;
    }
    resid = std::sqrt(rr);
    if (resid <= tol * std::max(1.0, lambda)) {
      fix_sign(x);
      SliceSpectrum s;
      s.lambda = std::max(lambda, 0.0);
      s.vector = std::move(x);
      s.degenerate = false;
      return s;
    }
    const double ny = norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  throw ConvergenceError("power iteration did not converge after " +
                             std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(resid) +
                             ")",
                         resid);
}

std::vector<SliceSpectrum> slice_spectra(const Tensor3& t, int mode,
                                         double tol, int max_iter) {
  const std::size_t count = t.dim(mode);
  std::vector<SliceSpectrum> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      out.push_back(top_eigenpair(gram(slice(t, mode, i)), tol, max_iter));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("mode " + std::to_string(mode) + " slice " +
                                 std::to_string(i) + ": " + e.what(),
                             e.last_residual());
    }
  }
  return out;
}

}  // namespace msc
