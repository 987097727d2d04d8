#include "msc/tensor.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "msc/errors.hpp"

namespace msc {

namespace {

void check_finite(const std::vector<double>& data, const char* what) {
  for (double x : data) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be finite");
    }
  }
}

void check_mode(int mode) {
  if (mode < 1 || mode > 3) {
    throw std::invalid_argument("mode must be 1, 2 or 3");
  }
}

}  // namespace

void validate_index_set(const IndexSet& set, std::size_t bound,
                        const char* what) {
  if (set.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty index set");
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= bound) {
      throw std::invalid_argument(std::string(what) + ": index " +
                                  std::to_string(set[i]) + " out of range [0, " +
                                  std::to_string(bound) + ")");
    }
    if (i > 0 && set[i] <= set[i - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  ": indices must be strictly ascending");
    }
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data length mismatch");
  }
  check_finite(data_, "matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Tensor3::Tensor3(std::size_t m1, std::size_t m2, std::size_t m3)
    : dims_{m1, m2, m3}, data_(m1 * m2 * m3, 0.0) {
  if (m1 == 0 || m2 == 0 || m3 == 0) {
    throw std::invalid_argument("tensor dimensions must be positive");
  }
}

Tensor3::Tensor3(std::size_t m1, std::size_t m2, std::size_t m3,
                 std::vector<double> data)
    : dims_{m1, m2, m3}, data_(std::move(data)) {
  if (m1 == 0 || m2 == 0 || m3 == 0) {
    throw std::invalid_argument("tensor dimensions must be positive");
  }
  if (data_.size() != m1 * m2 * m3) {
    throw std::invalid_argument("tensor data length mismatch");
  }
  check_finite(data_, "tensor");
}

std::size_t Tensor3::dim(int mode) const {
  check_mode(mode);
  return dims_[static_cast<std::size_t>(mode - 1)];
}

Matrix slice(const Tensor3& t, int mode, std::size_t index) {
  check_mode(mode);
  if (index >= t.dim(mode)) {
    throw std::out_of_range("slice index " + std::to_string(index) +
                            " out of range for mode " + std::to_string(mode));
  }
  const std::size_t m1 = t.m1(), m2 = t.m2(), m3 = t.m3();
  switch (mode) {
    case 1: {
      Matrix s(m2, m3);
      const double* src = t.data().data() + index * m2 * m3;
      std::copy(src, src + m2 * m3, s.data().begin());
      return s;
    }
    case 2: {
      Matrix s(m1, m3);
      for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t k = 0; k < m3; ++k) s(i, k) = t(i, index, k);
      return s;
    }
    default: {
      Matrix s(m1, m2);
      for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) s(i, j) = t(i, j, index);
      return s;
    }
  }
}

Matrix unfold(const Tensor3& t, int mode) {
  check_mode(mode);
  const std::size_t m1 = t.m1(), m2 = t.m2(), m3 = t.m3();
  switch (mode) {
    case 1: {
      Matrix u(m1, m2 * m3);
      std::copy(t.data().begin(), t.data().end(), u.data().begin());
      return u;
    }
    case 2: {
      Matrix u(m2, m1 * m3);
      for (std::size_t j = 0; j < m2; ++j)
        for (std::size_t i = 0; i < m1; ++i)
          for (std::size_t k = 0; k < m3; ++k) u(j, i * m3 + k) = t(i, j, k);
      return u;
    }
    default: {
      Matrix u(m3, m1 * m2);
      for (std::size_t k = 0; k < m3; ++k)
        for (std::size_t i = 0; i < m1; ++i)
          for (std::size_t j = 0; j < m2; ++j) u(k, i * m2 + j) = t(i, j, k);
      return u;
    }
  }
}

Tensor3 subcube(const Tensor3& t, const IndexSet& j1, const IndexSet& j2,
                const IndexSet& j3) {
  validate_index_set(j1, t.m1(), "subcube j1");
  validate_index_set(j2, t.m2(), "subcube j2");
  validate_index_set(j3, t.m3(), "subcube j3");
  Tensor3 out(j1.size(), j2.size(), j3.size());
  for (std::size_t a = 0; a < j1.size(); ++a)
    for (std::size_t b = 0; b < j2.size(); ++b)
      for (std::size_t c = 0; c < j3.size(); ++c)
        out(a, b, c) = t(j1[a], j2[b], j3[c]);
  return out;
}

namespace {

constexpr std::size_t kMaxTensorElems = std::size_t{1} << 31;

}  // namespace

Tensor3 read_t3(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("missing header", 1);
  }
  std::istringstream header(line);
  long long d[3];
  if (!(header >> d[0] >> d[1] >> d[2])) {
    throw ParseError("header must hold three integers \"m1 m2 m3\"", 1);
  }
  std::string extra;
  if (header >> extra) {
    throw ParseError("trailing content after dimensions", 1);
  }
  for (long long v : d) {
    if (v <= 0) throw ParseError("dimensions must be positive", 1);
  }
  const std::size_t m1 = static_cast<std::size_t>(d[0]);
  const std::size_t m2 = static_cast<std::size_t>(d[1]);
  const std::size_t m3 = static_cast<std::size_t>(d[2]);
  if (m1 > kMaxTensorElems / m2 || m1 * m2 > kMaxTensorElems / m3) {
    throw ParseError("tensor too large", 1);
  }
  const std::size_t need = m1 * m2 * m3;

  std::vector<double> data;
  data.reserve(need);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string tok = line.substr(pos, end - pos);
      pos = end;
      if (data.size() == need) {
        throw ParseError("more values than m1*m2*m3 = " + std::to_string(need),
                         line_no);
      }
      char* parse_end = nullptr;
      const double v = std::strtod(tok.c_str(), &parse_end);
      if (parse_end != tok.c_str() + tok.size()) {
        throw ParseError("invalid number \"" + tok + "\"", line_no);
      }
      if (!std::isfinite(v)) {
        throw ParseError("non-finite value \"" + tok + "\"", line_no);
      }
      data.push_back(v);
    }
  }
  if (data.size() != need) {
    throw ParseError("expected " + std::to_string(need) + " values, got " +
                         std::to_string(data.size()),
                     line_no);
  }
  return Tensor3(m1, m2, m3, std::move(data));
}

void write_t3(std::ostream& out, const Tensor3& t) {
  out << t.m1() << ' ' << t.m2() << ' ' << t.m3() << '\n';
  char buf[32];
  const std::size_t m3 = t.m3();
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.data()[idx]);
    out << buf << ((idx % m3 == m3 - 1) ? '\n' : ' ');
  }
}

Tensor3 load_t3(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open \"" + path + "\"");
  }
  return read_t3(in);
}

void save_t3(const std::string& path, const Tensor3& t) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open \"" + path + "\" for writing");
  }
  write_t3(out, t);
  if (!out) {
    throw std::runtime_error("write failed for \"" + path + "\"");
  }
}

}  // namespace msc
