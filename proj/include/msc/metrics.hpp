#pragma once

#include <array>
#include <optional>

#include "msc/cluster.hpp"
#include "msc/tensor.hpp"

namespace msc {

/// |j_est ∩ j_true| / |j_true|. With penalize_overselection the
/// denominator becomes max(|j_est|, |j_true|).
double recovery_rate(const IndexSet& j_est, const IndexSet& j_true,
                     bool penalize_overselection = false);

/// Adjusted Rand index of the two bipartitions {J, complement} of [m].
/// 1.0 whenever the bipartitions coincide (including all-in/all-out).
double ari_binary(const IndexSet& j_est, const IndexSet& j_true,
                  std::size_t m);

/// sim = (1/3) sum_r (1/|J_r|^2) sum_{i,j in J_r} c_ij using each
/// mode's stored similarity matrix.
double similarity_index(const std::array<ModeClusterResult, 3>& modes);

/// Mean squared deviation from the sub-cube mean (within-block
/// variance).
double mse_subcube(const Tensor3& t, const IndexSet& j1, const IndexSet& j2,
                   const IndexSet& j3);

/// Mean Pearson correlation over all unordered pairs of the fibers
/// along free_mode indexed by ja x jb on the other two modes (ascending
/// mode order). Constant fibers are excluded; throws std::domain_error
/// when fewer than two remain.
double fiber_correlation(const Tensor3& t, int free_mode, const IndexSet& ja,
                         const IndexSet& jb, bool absolute = false);

/// max_{i,j in J} ||slice(i) - slice(j)||_F along `mode`; |J| >= 2.
double max_frobenius_gap(const Tensor3& t, int mode, const IndexSet& j);

/// Bundle of the evaluation quantities for one clustering result.
/// Frobenius gaps are absent for singleton clusters, fiber correlations
/// when undefined.
struct EvalReport {
  std::array<double, 3> recovery{};
  double recovery_mean = 0.0;
  std::array<double, 3> ari{};
  double ari_mean = 0.0;
  double sim = 0.0;
  double mse = 0.0;
  std::array<std::optional<double>, 3> fiber_corr{};
  std::array<std::optional<double>, 3> frob_gaps{};
};

/// Scores `result` against the planted truth.
EvalReport evaluate_against_truth(const Tensor3& t,
                                  const TriclusterResult& result,
                                  const std::array<IndexSet, 3>& truth);

}  // namespace msc
