#include "msc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msc/rng.hpp"
#include "msc/spectral.hpp"

namespace msc {

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

std::vector<std::vector<double>> seed_centroids(
    const std::vector<std::vector<double>>& points, int k, SplitMix64& gen) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> centroids;
  centroids.reserve(static_cast<std::size_t>(k));
  centroids.push_back(points[gen.next_index(n)]);

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = dist2(points[i], centroids[0]);

  while (centroids.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t chosen = 0;
    if (total > 0.0) {
      const double target = gen.next_unit() * total;
      double acc = 0.0;
      chosen = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target) {
          chosen = i;
          break;
        }
      }
    } else {
      // all points coincide with a centroid; take the first unused index
      chosen = centroids.size() % n;
    }
    centroids.push_back(points[chosen]);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], dist2(points[i], centroids.back()));
    }
  }
  return centroids;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed, int max_iter, double tol) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("kmeans: no points");
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("kmeans: k must lie in [1, #points]");
  }
  const std::size_t dim = points[0].size();
  if (dim == 0) throw std::invalid_argument("kmeans: zero-dimensional points");
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("kmeans: points of mixed dimensions");
    }
  }

  SplitMix64 gen(seed);
  KMeansResult res;
  res.centroids = seed_centroids(points, k, gen);
  res.assignments.assign(n, 0);
  std::vector<double> point_d2(n, 0.0);

  auto assign = [&]() {
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      int best_c = 0;
      for (int c = 0; c < k; ++c) {
        const double d = dist2(points[i], res.centroids[static_cast<std::size_t>(c)]);
        if (d < best) {
          best = d;
          best_c = c;
        }
      }
      res.assignments[i] = best_c;
      point_d2[i] = best;
      inertia += best;
    }
    return inertia;
  };

  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it + 1;
    res.inertia = assign();
    res.inertia_trace.push_back(res.inertia);

    std::vector<std::vector<double>> next(
        static_cast<std::size_t>(k), std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(res.assignments[i]);
      ++counts[c];
      for (std::size_t d = 0; d < dim; ++d) next[c][d] += points[i][d];
    }
    for (int c = 0; c < k; ++c) {
      const auto cc = static_cast<std::size_t>(c);
      if (counts[cc] == 0) {
        // reseed the empty cluster at the farthest point
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (point_d2[i] > point_d2[far]) far = i;
        }
        next[cc] = points[far];
        point_d2[far] = 0.0;
      } else {
        for (std::size_t d = 0; d < dim; ++d) {
          next[cc][d] /= static_cast<double>(counts[cc]);
        }
      }
    }

    double shift = 0.0;
    for (int c = 0; c < k; ++c) {
      shift = std::max(shift, std::sqrt(dist2(res.centroids[static_cast<std::size_t>(c)],
                                              next[static_cast<std::size_t>(c)])));
    }
    res.centroids = std::move(next);
    if (shift < tol) break;
  }
  res.inertia = assign();
  return res;
}

HosvdFactors hosvd_factors(const Tensor3& t,
                           const std::array<std::size_t, 3>& ranks) {
  HosvdFactors out;
  for (int mode = 1; mode <= 3; ++mode) {
    const auto r = ranks[static_cast<std::size_t>(mode - 1)];
    const std::size_t n = t.dim(mode);
    if (r < 1 || r > n) {
      throw std::invalid_argument("hosvd_factors: rank out of [1, dim]");
    }
    Matrix work = gram(unfold(t, mode).transposed());  // n x n

    Matrix factor(n, r);
    std::vector<double> values;
    values.reserve(r);
    for (std::size_t col = 0; col < r; ++col) {
      const SliceSpectrum s =
          top_eigenpair(work, kEigenTol, kPipelineEigenMaxIter);
      std::vector<double> v;
      if (s.degenerate) {
        // exhausted spectrum: complete with a basis vector orthogonal
        // to the columns found so far
        for (std::size_t cand = 0; cand < n && v.empty(); ++cand) {
          std::vector<double> w(n, 0.0);
          w[cand] = 1.0;
          for (std::size_t prev = 0; prev < col; ++prev) {
            double ip = 0.0;
            for (std::size_t i = 0; i < n; ++i) ip += factor(i, prev) * w[i];
            for (std::size_t i = 0; i < n; ++i) w[i] -= ip * factor(i, prev);
          }
          double norm = 0.0;
          for (double x : w) norm += x * x;
          norm = std::sqrt(norm);
          if (norm > 0.5) {
            for (double& x : w) x /= norm;
            v = std::move(w);
          }
        }
        values.push_back(0.0);
      } else {
        v = s.vector;
        values.push_back(s.lambda);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            work(a, b) -= s.lambda * v[a] * v[b];
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) factor(i, col) = v[i];
    }
    out.factors[static_cast<std::size_t>(mode - 1)] = std::move(factor);
    out.eigenvalues[static_cast<std::size_t>(mode - 1)] = std::move(values);
  }
  return out;
}

std::array<IndexSet, 3> tucker_kmeans(const Tensor3& t,
                                      const std::array<std::size_t, 3>& ranks,
                                      std::uint64_t seed) {
  const HosvdFactors hosvd = hosvd_factors(t, ranks);
  std::array<IndexSet, 3> out;
  for (std::size_t mode = 0; mode < 3; ++mode) {
    const Matrix& factor = hosvd.factors[mode];
    const auto& values = hosvd.eigenvalues[mode];
    const std::size_t n = factor.rows(), r = factor.cols();

    std::vector<std::vector<double>> points(n, std::vector<double>(r));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < r; ++c) {
        points[i][c] = factor(i, c) * std::sqrt(std::max(values[c], 0.0));
      }
    }

    const KMeansResult km = kmeans(points, 2, derive_seed(seed, mode), 200);
    double norm0 = 0.0, norm1 = 0.0;
    for (std::size_t c = 0; c < r; ++c) {
      norm0 += km.centroids[0][c] * km.centroids[0][c];
      norm1 += km.centroids[1][c] * km.centroids[1][c];
    }
    const int winner = norm1 > norm0 ? 1 : 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (km.assignments[i] == winner) out[mode].push_back(i);
    }
  }
  return out;
}

}  // namespace msc
