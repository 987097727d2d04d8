#include "msc/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "msc/rng.hpp"

namespace msc {

Tensor3 generate(const SyntheticSpec& spec) {
  for (std::size_t r = 0; r < 3; ++r) {
    if (spec.dims[r] == 0) {
      throw std::invalid_argument("generate: dimensions must be positive");
    }
    validate_index_set(spec.planted[r], spec.dims[r], "generate planted set");
  }
  if (!(spec.gamma > 0.0)) {
    throw std::invalid_argument("generate: gamma must be positive");
  }

  std::array<std::vector<double>, 3> factors;
  for (std::size_t r = 0; r < 3; ++r) {
    factors[r].assign(spec.dims[r], 0.0);
    const double value =
        1.0 / std::sqrt(static_cast<double>(spec.planted[r].size()));
    for (std::size_t idx : spec.planted[r]) factors[r][idx] = value;
  }

  Tensor3 t(spec.dims[0], spec.dims[1], spec.dims[2]);
  NormalStream noise(spec.seed);
  std::size_t pos = 0;
  auto& data = t.data();
  for (std::size_t i = 0; i < spec.dims[0]; ++i) {
    const double wi = spec.gamma * factors[0][i];
    for (std::size_t j = 0; j < spec.dims[1]; ++j) {
      const double wu = wi * factors[1][j];
      for (std::size_t k = 0; k < spec.dims[2]; ++k, ++pos) {
        data[pos] = wu * factors[2][k] + (spec.noise_on ? noise.next() : 0.0);
      }
    }
  }
  return t;
}

}  // namespace msc
