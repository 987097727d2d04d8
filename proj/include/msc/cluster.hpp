#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "msc/spectral.hpp"
#include "msc/tensor.hpp"

namespace msc {

/// Slice-similarity matrix: c_ij = lt_i * lt_j * |<v_i, v_j>| where
/// lt_i is the i-th top eigenvalue normalized by the largest one.
/// Symmetric, entries in [0, 1], c_ii = lt_i^2.
struct SimilarityMatrix {
  Matrix values;
  std::size_t n() const noexcept { return values.rows(); }
};

/// One mode's clustering output.
struct ModeClusterResult {
  int mode = 0;                      ///< 1..3
  IndexSet j;                        ///< selected slice indices, ascending
  std::vector<double> d;             ///< marginal sums of the similarity matrix
  SimilarityMatrix c;
  double lambda_max = 0.0;           ///< largest slice top eigenvalue
  std::vector<std::size_t> removed;  ///< refinement exclusions, removal order
  bool epsilon_hypothesis_ok = false;  ///< sqrt(eps) <= 1/(m-l) at return
};

struct TriclusterResult {
  std::array<ModeClusterResult, 3> modes;
  double epsilon = 0.0;

  const IndexSet& j1() const noexcept { return modes[0].j; }
  const IndexSet& j2() const noexcept { return modes[1].j; }
  const IndexSet& j3() const noexcept { return modes[2].j; }
};

/// Builds the similarity matrix from per-slice spectra and returns it
/// with lambda_max. Needs at least two spectra and one positive
/// eigenvalue; throws DegenerateInputError when all are degenerate.
std::pair<SimilarityMatrix, double> similarity_matrix(
    const std::vector<SliceSpectrum>& spectra);

/// d_i = sum_j c_ij, diagonal included.
std::vector<double> degree_vector(const SimilarityMatrix& c);

struct GapInit {
  IndexSet indices;
  bool no_gap = false;  ///< all degrees equal; indices is the full set
};

/// Initial cluster: entries above the largest consecutive difference of
/// d sorted ascending (stable, ties by original index). Equal largest
/// gaps resolve toward the later gap, i.e. the smaller cluster.
GapInit max_gap_init(std::span<const double> d);

struct RefineResult {
  IndexSet j;
  std::vector<std::size_t> removed;
  bool hypothesis_ok = false;
};

/// Cluster refinement. The similarity-spread criterion
///   max_{i,n in J} |d_i - d_n| <= l*eps/2 + sqrt(log(m - l))
/// (natural log, term zero when m - l <= 1) is tested repeatedly; while
/// it fails the member with the smallest degree is dropped, stopping at
/// l = 1. The criterion's hypothesis sqrt(eps) <= 1/(m - |J0|) is
/// checked once at entry: when it fails the loop is never entered and
/// J0 is returned as-is, so a loose eps keeps the whole initial
/// cluster while a tight one prunes it. hypothesis_ok reports
/// sqrt(eps) <= 1/(m - l) at return; a false value is informational.
/// d is never recomputed.
RefineResult refine(const IndexSet& j0, std::span<const double> d,
                    double epsilon, std::size_t m);

/// Full single-mode pipeline: slice spectra -> similarity matrix ->
/// degree vector -> max-gap initialization -> refinement.
ModeClusterResult msc_mode(const Tensor3& t, int mode, double epsilon);

/// Multi-slice clustering of all three modes.
TriclusterResult msc(const Tensor3& t, double epsilon);

/// Two-mode variant: clusters the two modes other than free_mode, whose
/// fibers play the role of trajectories. Results are ordered by mode.
std::pair<ModeClusterResult, ModeClusterResult> msc_bicluster(
    const Tensor3& t, double epsilon, int free_mode);

}  // namespace msc
