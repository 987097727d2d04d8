#pragma once

#include <array>
#include <cstdint>

#include "msc/tensor.hpp"

namespace msc {

/// Planted rank-1 tricluster: T = gamma * w (x) u (x) v + Z with the
/// factor vectors equal to 1/sqrt(|J_r|) on the planted set and zero
/// elsewhere, Z i.i.d. standard normal over every entry.
struct SyntheticSpec {
  std::array<std::size_t, 3> dims{};
  std::array<IndexSet, 3> planted{};
  double gamma = 1.0;
  std::uint64_t seed = 0;
  bool noise_on = true;
};

/// Noise values are drawn in layout order from NormalStream(seed), so a
/// given spec is bit-identical across runs and platforms.
Tensor3 generate(const SyntheticSpec& spec);

}  // namespace msc
