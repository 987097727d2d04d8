#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "msc/errors.hpp"
#include "msc/rng.hpp"
#include "msc/tensor.hpp"

using msc::IndexSet;
using msc::Matrix;
using msc::Tensor3;

namespace {

Tensor3 iota_tensor(std::size_t m1, std::size_t m2, std::size_t m3) {
  std::vector<double> data(m1 * m2 * m3);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<double>(i);
  return Tensor3(m1, m2, m3, std::move(data));
}

}  // namespace

TEST_CASE("construction validates shape and content") {
  CHECK_THROWS_AS(Tensor3(2, 2, 2, std::vector<double>(7, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Tensor3(0, 2, 2), std::invalid_argument);
  std::vector<double> bad(8, 0.0);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(Tensor3(2, 2, 2, bad), std::invalid_argument);
  bad[3] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Tensor3(2, 2, 2, bad), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>(3, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("slice layout") {
  const Tensor3 t = iota_tensor(2, 2, 2);

  const Matrix s1 = slice(t, 1, 0);
  REQUIRE(s1.rows() == 2);
  REQUIRE(s1.cols() == 2);
  CHECK(s1(0, 0) == 0);
  CHECK(s1(0, 1) == 1);
  CHECK(s1(1, 0) == 2);
  CHECK(s1(1, 1) == 3);

  const Matrix s3 = slice(t, 3, 1);
  CHECK(s3(0, 0) == 1);
  CHECK(s3(0, 1) == 3);
  CHECK(s3(1, 0) == 5);
  CHECK(s3(1, 1) == 7);

  CHECK_THROWS_AS(slice(t, 1, 5), std::out_of_range);
  CHECK_THROWS_AS(slice(t, 4, 0), std::invalid_argument);
}

TEST_CASE("slice agrees with the layout formula on every mode") {
  const Tensor3 t = iota_tensor(3, 4, 5);
  for (std::size_t j = 0; j < 4; ++j) {
    const Matrix s = slice(t, 2, j);
    REQUIRE(s.rows() == 3);
    REQUIRE(s.cols() == 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 5; ++k) CHECK(s(i, k) == t(i, j, k));
  }
}

TEST_CASE("unfold layout") {
  const Tensor3 t = iota_tensor(2, 2, 2);

  const Matrix u1 = unfold(t, 1);
  REQUIRE(u1.rows() == 2);
  REQUIRE(u1.cols() == 4);
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(u1(0, c) == static_cast<double>(c));
    CHECK(u1(1, c) == static_cast<double>(4 + c));
  }

  const Matrix u3 = unfold(t, 3);
  CHECK(u3(0, 0) == 0);
  CHECK(u3(0, 1) == 2);
  CHECK(u3(0, 2) == 4);
  CHECK(u3(0, 3) == 6);
  CHECK(u3(1, 0) == 1);
  CHECK(u3(1, 1) == 3);
  CHECK(u3(1, 2) == 5);
  CHECK(u3(1, 3) == 7);

  const Tensor3 z(3, 2, 4);
  const Matrix uz = unfold(z, 2);
  for (double v : uz.data()) CHECK(v == 0.0);
}

TEST_CASE("unfold shape and exact refold") {
  const std::array<std::size_t, 3> dims{3, 4, 5};
  msc::NormalStream rng(11);
  std::vector<double> data(60);
  for (double& v : data) v = rng.next();
  const Tensor3 t(dims[0], dims[1], dims[2], data);

  for (int mode = 1; mode <= 3; ++mode) {
    const Matrix u = unfold(t, mode);
    CHECK(u.rows() == t.dim(mode));
    CHECK(u.cols() == t.size() / t.dim(mode));

    // refold by inverting the column layout: ascending other modes,
    // last fastest
    Tensor3 back(dims[0], dims[1], dims[2]);
    for (std::size_t i = 0; i < dims[0]; ++i)
      for (std::size_t j = 0; j < dims[1]; ++j)
        for (std::size_t k = 0; k < dims[2]; ++k) {
          double v = 0;
          if (mode == 1) v = u(i, j * dims[2] + k);
          if (mode == 2) v = u(j, i * dims[2] + k);
          if (mode == 3) v = u(k, i * dims[1] + j);
          back(i, j, k) = v;
        }
    CHECK(back.data() == t.data());
  }
}

TEST_CASE("subcube") {
  const Tensor3 t = iota_tensor(3, 3, 3);
  const IndexSet full{0, 1, 2};

  SUBCASE("full sets reproduce the tensor") {
    const Tensor3 s = subcube(t, full, full, full);
    CHECK(s.data() == t.data());
  }
  SUBCASE("singleton sets") {
    const Tensor3 s = subcube(t, {0}, {0}, {0});
    CHECK(s.size() == 1);
    CHECK(s(0, 0, 0) == t(0, 0, 0));
  }
  SUBCASE("element-wise agreement on i+j+k tensor") {
    Tensor3 v(3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          v(i, j, k) = static_cast<double>(i + j + k);
    const IndexSet sel{0, 2};
    const Tensor3 s = subcube(v, sel, sel, sel);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < 2; ++c)
          CHECK(s(a, b, c) == v(sel[a], sel[b], sel[c]));
  }
  SUBCASE("idempotence under full re-selection") {
    const Tensor3 s = subcube(t, {0, 2}, {1}, {0, 1});
    const Tensor3 again = subcube(s, {0, 1}, {0}, {0, 1});
    CHECK(again.data() == s.data());
  }
  SUBCASE("bad sets rejected") {
    CHECK_THROWS_AS(subcube(t, {}, full, full), std::invalid_argument);
    CHECK_THROWS_AS(subcube(t, {0, 3}, full, full), std::invalid_argument);
    CHECK_THROWS_AS(subcube(t, {1, 1}, full, full), std::invalid_argument);
    CHECK_THROWS_AS(subcube(t, {2, 0}, full, full), std::invalid_argument);
  }
}

TEST_CASE("tensor reassembles exactly from its mode-1 slices") {
  msc::NormalStream rng(3);
  std::vector<double> data(4 * 5 * 6);
  for (double& v : data) v = rng.next();
  const Tensor3 t(4, 5, 6, data);

  Tensor3 back(4, 5, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    const Matrix s = slice(t, 1, i);
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 6; ++k) back(i, j, k) = s(j, k);
  }
  CHECK(back.data() == t.data());
}

TEST_CASE("t3 round trip is bit exact") {
  msc::NormalStream rng(17);
  std::vector<double> data(2 * 3 * 4);
  for (double& v : data) v = rng.next() * 1e3;
  data[0] = 0.1;  // not exactly representable; must still round-trip
  const Tensor3 t(2, 3, 4, data);

  std::stringstream ss;
  write_t3(ss, t);
  const Tensor3 back = msc::read_t3(ss);
  CHECK(back.dims() == t.dims());
  CHECK(back.data() == t.data());
}

TEST_CASE("t3 parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::stringstream ss(text);
    return msc::read_t3(ss);
  };

  CHECK_THROWS_AS(parse(""), msc::ParseError);
  CHECK_THROWS_AS(parse("2 2\n1 2 3 4"), msc::ParseError);
  CHECK_THROWS_AS(parse("2 2 0\n"), msc::ParseError);
  CHECK_THROWS_AS(parse("1 2 2\n1 2 3"), msc::ParseError);          // too few
  CHECK_THROWS_AS(parse("1 2 2\n1 2 3 4 5"), msc::ParseError);      // too many
  CHECK_THROWS_AS(parse("1 2 2\n1 2 x 4"), msc::ParseError);        // not a number
  CHECK_THROWS_AS(parse("1 2 2\n1 2 inf 4"), msc::ParseError);      // non-finite
  CHECK_THROWS_AS(parse("1 1 1 7\n1"), msc::ParseError);            // long header

  try {
    parse("1 2 2\n1 2\n3 oops");
    FAIL("expected ParseError");
  } catch (const msc::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("t3 accepts arbitrary whitespace layout") {
  std::stringstream ss("2 1 2\n  1 2\n\n3\t4\n");
  const Tensor3 t = msc::read_t3(ss);
  CHECK(t(0, 0, 0) == 1);
  CHECK(t(0, 0, 1) == 2);
  CHECK(t(1, 0, 0) == 3);
  CHECK(t(1, 0, 1) == 4);
}
