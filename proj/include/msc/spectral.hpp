#pragma once

#include <vector>

#include "msc/tensor.hpp"

namespace msc {

/// Residual tolerance and iteration budget of top_eigenpair.
inline constexpr double kEigenTol = 1e-10;
inline constexpr int kEigenMaxIter = 5000;
/// Budget used by the clustering pipeline. Noise slices can have
/// near-degenerate top eigenvalue pairs that need far more than the
/// plain default before the residual bound is met.
inline constexpr int kPipelineEigenMaxIter = 100000;
/// A Gram matrix whose largest entry is below this is treated as zero.
inline constexpr double kDegenerateThreshold = 1e-12;

/// Top eigenvalue/eigenvector of one slice Gram matrix.
struct SliceSpectrum {
  double lambda = 0.0;         ///< top eigenvalue, >= 0
  std::vector<double> vector;  ///< unit norm, first nonzero entry positive
  bool degenerate = false;     ///< true when the Gram matrix is ~zero
};

/// M^t M (cols x cols), exactly symmetric.
Matrix gram(const Matrix& m);

/// Top eigenpair of a symmetric PSD matrix by power iteration from the
/// normalized all-ones vector (first standard basis vector if the ones
/// vector lies in the null space). Converged when
/// ||C v - lambda v||_2 <= tol * max(1, lambda). Returns a degenerate
/// spectrum (0, e1) when max|c_ij| < kDegenerateThreshold. Throws
/// ConvergenceError after max_iter unconverged iterations.
SliceSpectrum top_eigenpair(const Matrix& c, double tol = kEigenTol,
                            int max_iter = kEigenMaxIter);

/// Spectrum of every slice of `t` along `mode`, in slice-index order.
std::vector<SliceSpectrum> slice_spectra(const Tensor3& t, int mode,
                                         double tol = kEigenTol,
                                         int max_iter = kPipelineEigenMaxIter);

}  // namespace msc
