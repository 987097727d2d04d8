#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msc/tensor.hpp"

namespace msc {

struct KMeansResult {
  std::vector<int> assignments;               ///< one of [0, k) per point
  std::vector<std::vector<double>> centroids;
  double inertia = 0.0;                       ///< sum of squared distances
  int iterations = 0;
  std::vector<double> inertia_trace;          ///< nonincreasing, per iteration
};

/// Lloyd's algorithm with k-means++ seeding from a deterministic
/// generator. Empty clusters are reseeded to the point farthest from
/// its centroid. Stops when the largest centroid shift drops below tol
/// or after max_iter rounds.
KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed, int max_iter = 100, double tol = 1e-9);

struct HosvdFactors {
  std::array<Matrix, 3> factors;  ///< mode-n rows, top-r_n eigenvector columns
  std::array<std::vector<double>, 3> eigenvalues;
};

/// Per-mode factor matrices: the top r_n eigenvectors of
/// unfold(t, n) * unfold(t, n)^t, columns sign-fixed like the slice
/// spectra.
HosvdFactors hosvd_factors(const Tensor3& t,
                           const std::array<std::size_t, 3>& ranks);

/// Tucker + k-means comparison pipeline: per mode, k-means (k = 2) on
/// the factor rows scaled column-wise by the singular values
/// sqrt(lambda_r); the cluster with the larger centroid norm is
/// reported. Unweighted eigenvector rows put the noise directions on
/// the same footing as the signal one and make the split unstable.
std::array<IndexSet, 3> tucker_kmeans(const Tensor3& t,
                                      const std::array<std::size_t, 3>& ranks,
                                      std::uint64_t seed);

}  // namespace msc
