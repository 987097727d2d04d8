#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace msc {

/// Centering/scaling constants of the largest eigenvalue of a white
/// Wishart matrix W_{m3}(m2, I); the larger dimension plays the m2
/// role.
struct WishartParams {
  double mu = 0.0;
  double sigma = 0.0;
  std::size_t m2 = 0;
  std::size_t m3 = 0;
};

WishartParams wishart_params(std::size_t m2, std::size_t m3);

/// Shifted-gamma approximation of the Tracy-Widom (beta = 1) law.
struct TwGammaApprox {
  static constexpr double location = -9.8209;  ///< x0
  static constexpr double shape = 46.5651;     ///< k
  static constexpr double scale = 0.1850;      ///< theta
};

/// Density (x - x0)^(k-1) / (theta^k Gamma(k)) * exp(-(x - x0)/theta)
/// for x > x0, else 0.
double tw_gamma_pdf(double x);

/// Cumulative distribution of the same approximation.
double tw_gamma_cdf(double x);

/// k*theta + x0.
double tw_gamma_mean();

/// Standardized top eigenvalues (lambda - mu)/sigma of n_samples white
/// Wishart draws Z^t Z with Z an m2 x m3 standard normal matrix. Sample
/// i uses the stream derive_seed(seed, i). Requires m2, m3 >= 10.
std::vector<double> sample_top_wishart(std::size_t m2, std::size_t m3,
                                       std::size_t n_samples,
                                       std::uint64_t seed);

/// Kolmogorov-Smirnov statistic of `samples` against `cdf`.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

}  // namespace msc
