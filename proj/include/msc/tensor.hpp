#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace msc {

/// Sorted, duplicate-free 0-based indices.
using IndexSet = std::vector<std::size_t>;

/// Throws std::invalid_argument unless `set` is nonempty, strictly
/// ascending and within [0, bound).
void validate_index_set(const IndexSet& set, std::size_t bound,
                        const char* what);

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Validates data length and finiteness.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense 3-order tensor with dims (m1, m2, m3). Element (i, j, k) lives
/// at offset i*m2*m3 + j*m3 + k; mode 3 varies fastest.
class Tensor3 {
 public:
  Tensor3(std::size_t m1, std::size_t m2, std::size_t m3);
  /// Validates data length and finiteness.
  Tensor3(std::size_t m1, std::size_t m2, std::size_t m3,
          std::vector<double> data);

  std::size_t m1() const noexcept { return dims_[0]; }
  std::size_t m2() const noexcept { return dims_[1]; }
  std::size_t m3() const noexcept { return dims_[2]; }
  const std::array<std::size_t, 3>& dims() const noexcept { return dims_; }
  /// mode is 1-based.
  std::size_t dim(int mode) const;
  std::size_t size() const noexcept { return data_.size(); }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

 private:
  std::array<std::size_t, 3> dims_{};
  std::vector<double> data_;
};

/// Matrix slice of `t` at `index` along `mode` (1-based):
/// mode 1 -> m2 x m3, mode 2 -> m1 x m3, mode 3 -> m1 x m2.
Matrix slice(const Tensor3& t, int mode, std::size_t index);

/// Mode-n unfolding: rows indexed by `mode`, columns by the remaining
/// modes in ascending order with the last one fastest.
Matrix unfold(const Tensor3& t, int mode);

/// Sub-tensor selected by the three index sets, relative order kept.
Tensor3 subcube(const Tensor3& t, const IndexSet& j1, const IndexSet& j2,
                const IndexSet& j3);

/// ".t3" text format: "m1 m2 m3" header line, then m1*m2*m3 reals in
/// layout order. Throws ParseError with a 1-based line number.
Tensor3 read_t3(std::istream& in);
void write_t3(std::ostream& out, const Tensor3& t);
Tensor3 load_t3(const std::string& path);
void save_t3(const std::string& path, const Tensor3& t);

}  // namespace msc
