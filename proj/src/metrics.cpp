#include "msc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace msc {

namespace {

std::size_t intersection_size(const IndexSet& a, const IndexSet& b) {
  std::size_t count = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double choose2(double n) { return n * (n - 1.0) / 2.0; }

/// Fiber of `t` along free_mode at position (a, b) on the other two
/// modes in ascending mode order.
std::vector<double> fiber(const Tensor3& t, int free_mode, std::size_t a,
                          std::size_t b) {
  const std::size_t len = t.dim(free_mode);
  std::vector<double> f(len);
  switch (free_mode) {
    case 1:
      for (std::size_t x = 0; x < len; ++x) f[x] = t(x, a, b);
      break;
    case 2:
      for (std::size_t x = 0; x < len; ++x) f[x] = t(a, x, b);
      break;
    default:
      for (std::size_t x = 0; x < len; ++x) f[x] = t(a, b, x);
      break;
  }
  return f;
}

bool is_constant(const std::vector<double>& f) {
  const auto [mn, mx] = std::minmax_element(f.begin(), f.end());
  return *mn == *mx;
}

double pearson(const std::vector<double>& f, const std::vector<double>& g) {
  const std::size_t n = f.size();
  double mf = 0.0, mg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mf += f[i];
    mg += g[i];
  }
  mf /= static_cast<double>(n);
  mg /= static_cast<double>(n);
  double cov = 0.0, vf = 0.0, vg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double df = f[i] - mf, dg = g[i] - mg;
    cov += df * dg;
    vf += df * df;
    vg += dg * dg;
  }
  return cov / std::sqrt(vf * vg);
}

}  // namespace

double recovery_rate(const IndexSet& j_est, const IndexSet& j_true,
                     bool penalize_overselection) {
  if (j_true.empty()) {
    throw std::invalid_argument("recovery_rate: j_true must be nonempty");
  }
  const double hit = static_cast<double>(intersection_size(j_est, j_true));
  const double denom = penalize_overselection
                           ? static_cast<double>(std::max(j_est.size(), j_true.size()))
                           : static_cast<double>(j_true.size());
  return hit / denom;
}

double ari_binary(const IndexSet& j_est, const IndexSet& j_true,
                  std::size_t m) {
  for (const IndexSet* s : {&j_est, &j_true}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      if ((*s)[i] >= m) {
        throw std::invalid_argument("ari_binary: index out of range");
      }
      if (i > 0 && (*s)[i] <= (*s)[i - 1]) {
        throw std::invalid_argument("ari_binary: indices must be ascending");
      }
    }
  }

  const std::size_t inter = intersection_size(j_est, j_true);
  const std::size_t n_est = j_est.size(), n_true = j_true.size();
  const bool equal = n_est == n_true && inter == n_true;
  const bool complement = n_est + n_true == m && inter == 0;
  if (equal || complement) return 1.0;

  // 2x2 contingency table of the bipartitions
  const double t11 = static_cast<double>(inter);
  const double t10 = static_cast<double>(n_est - inter);
  const double t01 = static_cast<double>(n_true - inter);
  const double t00 = static_cast<double>(m - n_est - n_true + inter);

  const double sum_a = choose2(t11 + t10) + choose2(t01 + t00);
  const double sum_b = choose2(t11 + t01) + choose2(t10 + t00);
  const double sum_n = choose2(t11) + choose2(t10) + choose2(t01) + choose2(t00);
  const double expected = sum_a * sum_b / choose2(static_cast<double>(m));
  const double denom = 0.5 * (sum_a + sum_b) - expected;
  if (denom == 0.0) return sum_n == expected ? 1.0 : 0.0;
  return (sum_n - expected) / denom;
}

double similarity_index(const std::array<ModeClusterResult, 3>& modes) {
  double total = 0.0;
  for (const auto& mode : modes) {
    if (mode.j.empty()) {
      throw std::invalid_argument("similarity_index: empty cluster");
    }
    double acc = 0.0;
    for (std::size_t a : mode.j) {
      for (std::size_t b : mode.j) acc += mode.c.values(a, b);
    }
    const double l = static_cast<double>(mode.j.size());
    total += acc / (l * l);
  }
  return total / 3.0;
}

double mse_subcube(const Tensor3& t, const IndexSet& j1, const IndexSet& j2,
                   const IndexSet& j3) {
  const Tensor3 block = subcube(t, j1, j2, j3);
  const double n = static_cast<double>(block.size());
  double mean = 0.0;
  for (double x : block.data()) mean += x;
  mean /= n;
  double acc = 0.0;
  for (double x : block.data()) acc += (x - mean) * (x - mean);
  return acc / n;
}

double fiber_correlation(const Tensor3& t, int free_mode, const IndexSet& ja,
                         const IndexSet& jb, bool absolute) {
  std::array<std::size_t, 2> bounds{};
  std::size_t pos = 0;
  for (int mode = 1; mode <= 3; ++mode) {
    if (mode != free_mode) bounds[pos++] = t.dim(mode);
  }
  validate_index_set(ja, bounds[0], "fiber_correlation ja");
  validate_index_set(jb, bounds[1], "fiber_correlation jb");
  if (t.dim(free_mode) < 2) {
    throw std::invalid_argument("fiber_correlation: fibers must have length >= 2");
  }
  if (ja.size() * jb.size() < 2) {
    throw std::invalid_argument("fiber_correlation: need at least 2 fibers");
  }

  std::vector<std::vector<double>> fibers;
  fibers.reserve(ja.size() * jb.size());
  for (std::size_t a : ja) {
    for (std::size_t b : jb) {
      auto f = fiber(t, free_mode, a, b);
      if (!is_constant(f)) fibers.push_back(std::move(f));
    }
  }
  if (fibers.size() < 2) {
    throw std::domain_error(
        "fiber_correlation: correlation undefined, fewer than two "
        "non-constant fibers");
  }

  double acc = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    for (std::size_t j = i + 1; j < fibers.size(); ++j) {
      const double r = pearson(fibers[i], fibers[j]);
      acc += absolute ? std::abs(r) : r;
      ++pairs;
    }
  }
  return acc / static_cast<double>(pairs);
}

double max_frobenius_gap(const Tensor3& t, int mode, const IndexSet& j) {
  validate_index_set(j, t.dim(mode), "max_frobenius_gap");
  if (j.size() < 2) {
    throw std::invalid_argument("max_frobenius_gap: need at least 2 slices");
  }
  std::vector<Matrix> slices;
  slices.reserve(j.size());
  for (std::size_t idx : j) slices.push_back(slice(t, mode, idx));

  double best = 0.0;
  for (std::size_t a = 0; a < slices.size(); ++a) {
    for (std::size_t b = a + 1; b < slices.size(); ++b) {
      double acc = 0.0;
      const auto& da = slices[a].data();
      const auto& db = slices[b].data();
      for (std::size_t i = 0; i < da.size(); ++i) {
        const double diff = da[i] - db[i];
        acc += diff * diff;
      }
      best = std::max(best, acc);
    }
  }
  return std::sqrt(best);
}

EvalReport evaluate_against_truth(const Tensor3& t,
                                  const TriclusterResult& result,
                                  const std::array<IndexSet, 3>& truth) {
  EvalReport report;
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& est = result.modes[r].j;
    report.recovery[r] = recovery_rate(est, truth[r]);
    report.ari[r] = ari_binary(est, truth[r], t.dim(static_cast<int>(r + 1)));
    report.recovery_mean += report.recovery[r] / 3.0;
    report.ari_mean += report.ari[r] / 3.0;
    if (est.size() >= 2) {
      report.frob_gaps[r] = max_frobenius_gap(t, static_cast<int>(r + 1), est);
    }
  }
  report.sim = similarity_index(result.modes);
  report.mse = mse_subcube(t, result.j1(), result.j2(), result.j3());
  for (int free_mode = 1; free_mode <= 3; ++free_mode) {
    std::array<const IndexSet*, 2> other{};
    std::size_t pos = 0;
    for (int mode = 1; mode <= 3; ++mode) {
      if (mode != free_mode) {
        other[pos++] = &result.modes[static_cast<std::size_t>(mode - 1)].j;
      }
    }
    try {
      report.fiber_corr[static_cast<std::size_t>(free_mode - 1)] =
          fiber_correlation(t, free_mode, *other[0], *other[1]);
    } catch (const std::exception&) {
      // undefined (too few / constant fibers); left empty
    }
  }
  return report;
}

}  // namespace msc
