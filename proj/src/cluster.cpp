#include "msc/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "msc/errors.hpp"

namespace msc {

namespace {

/// sqrt(log(x)) with the convention of value 0 for x <= 1.
double sqrt_log(double x) { return x > 1.0 ? std::sqrt(std::log(x)) : 0.0; }

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 2)");
  }
}

}  // namespace

std::pair<SimilarityMatrix, double> similarity_matrix(
    const std::vector<SliceSpectrum>& spectra) {
  const std::size_t n = spectra.size();
  if (n < 2) {
    throw std::invalid_argument("similarity_matrix: need at least 2 spectra");
  }
  const std::size_t dim = spectra[0].vector.size();
  double lambda_max = 0.0;
  for (const auto& s : spectra) {
    if (s.vector.size() != dim) {
      throw std::invalid_argument(
          "similarity_matrix: spectra of mixed dimensions");
    }
    lambda_max = std::max(lambda_max, s.lambda);
  }
  if (lambda_max <= 0.0) {
    throw DegenerateInputError(
        "similarity_matrix: all slice spectra are degenerate");
  }

  std::vector<double> lt(n);
  for (std::size_t i = 0; i < n; ++i) lt[i] = spectra[i].lambda / lambda_max;

  SimilarityMatrix sim{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    sim.values(i, i) = std::min(lt[i] * lt[i], 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      double ip = 0.0;
      const auto& vi = spectra[i].vector;
      const auto& vj = spectra[j].vector;
      for (std::size_t k = 0; k < dim; ++k) ip += vi[k] * vj[k];
      const double c = std::clamp(lt[i] * lt[j] * std::abs(ip), 0.0, 1.0);
      sim.values(i, j) = c;
      sim.values(j, i) = c;
    }
  }
  return {std::move(sim), lambda_max};
}

std::vector<double> degree_vector(const SimilarityMatrix& c) {
  const std::size_t n = c.n();
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = c.values.row_ptr(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j];
    d[i] = acc;
  }
  return d;
}

GapInit max_gap_init(std::span<const double> d) {
  const std::size_t n = d.size();
  if (n < 2) {
    throw std::invalid_argument("max_gap_init: need at least 2 entries");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  double best_gap = 0.0;
  std::size_t best_pos = 0;
  bool found = false;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const double gap = d[order[p + 1]] - d[order[p]];
    if (gap > 0.0 && gap >= best_gap) {  // >= keeps the later gap on ties
      best_gap = gap;
      best_pos = p;
      found = true;
    }
  }

  GapInit init;
  if (!found) {
    init.indices.resize(n);
    std::iota(init.indices.begin(), init.indices.end(), 0);
    init.no_gap = true;
    return init;
  }
  init.indices.assign(order.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1,
                      order.end());
  std::sort(init.indices.begin(), init.indices.end());
  return init;
}

RefineResult refine(const IndexSet& j0, std::span<const double> d,
                    double epsilon, std::size_t m) {
  check_epsilon(epsilon);
  validate_index_set(j0, m, "refine");
  if (d.size() != m) {
    throw std::invalid_argument("refine: d must have length m");
  }

  RefineResult res;
  res.j = j0;

  const double sqrt_eps = std::sqrt(epsilon);
  const std::size_t l0 = j0.size();
  const bool gate_open =
      m <= l0 || sqrt_eps <= 1.0 / static_cast<double>(m - l0);

  if (gate_open) {
    while (res.j.size() > 1) {
      const std::size_t l = res.j.size();
      double dmin = std::numeric_limits<double>::infinity();
      double dmax = -dmin;
      std::size_t argmin = 0;
      for (std::size_t pos = 0; pos < l; ++pos) {
        const double v = d[res.j[pos]];
        if (v < dmin) {
          dmin = v;
          argmin = pos;  // ties keep the smallest index (j is ascending)
        }
        dmax = std::max(dmax, v);
      }
      const double bound = static_cast<double>(l) * epsilon / 2.0 +
                           sqrt_log(static_cast<double>(m - l));
      if (dmax - dmin <= bound) break;
      res.removed.push_back(res.j[argmin]);
      res.j.erase(res.j.begin() + static_cast<std::ptrdiff_t>(argmin));
    }
  }

  const std::size_t l = res.j.size();
  res.hypothesis_ok = m <= l || sqrt_eps <= 1.0 / static_cast<double>(m - l);
  return res;
}

ModeClusterResult msc_mode(const Tensor3& t, int mode, double epsilon) {
  check_epsilon(epsilon);
  if (t.m1() < 2 || t.m2() < 2 || t.m3() < 2) {
    throw std::invalid_argument("msc_mode: every dimension must be >= 2");
  }

  ModeClusterResult res;
  res.mode = mode;
  const auto spectra = slice_spectra(t, mode);
  auto [sim, lambda_max] = similarity_matrix(spectra);
  res.c = std::move(sim);
  res.lambda_max = lambda_max;
  res.d = degree_vector(res.c);

  const GapInit init = max_gap_init(res.d);
  RefineResult refined = refine(init.indices, res.d, epsilon, res.d.size());
  res.j = std::move(refined.j);
  res.removed = std::move(refined.removed);
  res.epsilon_hypothesis_ok = refined.hypothesis_ok;
  return res;
}

TriclusterResult msc(const Tensor3& t, double epsilon) {
  TriclusterResult res;
  res.epsilon = epsilon;
  for (int mode = 1; mode <= 3; ++mode) {
    res.modes[static_cast<std::size_t>(mode - 1)] = msc_mode(t, mode, epsilon);
  }
  return res;
}

std::pair<ModeClusterResult, ModeClusterResult> msc_bicluster(const Tensor3& t,
                                                              double epsilon,
                                                              int free_mode) {
  if (free_mode < 1 || free_mode > 3) {
    throw std::invalid_argument("msc_bicluster: free_mode must be 1, 2 or 3");
  }
  std::array<int, 2> modes{};
  std::size_t pos = 0;
  for (int mode = 1; mode <= 3; ++mode) {
    if (mode != free_mode) modes[pos++] = mode;
  }
  return {msc_mode(t, modes[0], epsilon), msc_mode(t, modes[1], epsilon)};
}

}  // namespace msc
