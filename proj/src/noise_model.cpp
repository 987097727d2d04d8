#include "msc/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "msc/rng.hpp"
#include "msc/spectral.hpp"
#include "msc/tensor.hpp"

namespace msc {

WishartParams wishart_params(std::size_t m2, std::size_t m3) {
  if (m2 < 2 || m3 < 2) {
    throw std::invalid_argument("wishart_params: m2, m3 must be >= 2");
  }
  // Johnstone's parameters with the larger dimension in the m2 role.
  const double a = static_cast<double>(std::max(m2, m3));
  const double b = static_cast<double>(std::min(m2, m3));
  WishartParams p;
  p.m2 = m2;
  p.m3 = m3;
  const double root = std::sqrt(a - 1.0) + std::sqrt(b);
  p.mu = root * root;
  p.sigma = std::sqrt(p.mu) *
            std::cbrt(1.0 / std::sqrt(a - 1.0) + 1.0 / std::sqrt(b));
  return p;
}

double tw_gamma_pdf(double x) {
  const double z = x - TwGammaApprox::location;
  if (z <= 0.0) return 0.0;
  const double k = TwGammaApprox::shape;
  const double theta = TwGammaApprox::scale;
  return std::exp((k - 1.0) * std::log(z) - k * std::log(theta) -
                  std::lgamma(k) - z / theta);
}

double tw_gamma_cdf(double x) {
  const double z = x - TwGammaApprox::location;
  if (z <= 0.0) return 0.0;
  return boost::math::gamma_p(TwGammaApprox::shape, z / TwGammaApprox::scale);
}

double tw_gamma_mean() {
  return TwGammaApprox::shape * TwGammaApprox::scale + TwGammaApprox::location;
}

std::vector<double> sample_top_wishart(std::size_t m2, std::size_t m3,
                                       std::size_t n_samples,
                                       std::uint64_t seed) {
  if (m2 < 10 || m3 < 10) {
    throw std::invalid_argument(
        "sample_top_wishart: the approximation needs m2, m3 >= 10");
  }
  const WishartParams p = wishart_params(m2, m3);
  std::vector<double> out;
  out.reserve(n_samples);
  for (std::size_t s = 0; s < n_samples; ++s) {
    NormalStream stream(derive_seed(seed, s));
    Matrix z(m2, m3);
    for (double& v : z.data()) v = stream.next();
    const SliceSpectrum top =
        top_eigenpair(gram(z), kEigenTol, kPipelineEigenMaxIter);
    out.push_back((top.lambda - p.mu) / p.sigma);
  }
  return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_statistic: no samples");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

}  // namespace msc
