#include <doctest.h>

#include "ddgl2/numerics.hpp"

using namespace ddgl2;

TEST_CASE("matrix units are 1-based") {
  MatrixC e13 = unit(1, 3);
  CHECK(e13.rows() == 4);
  CHECK(e13(0, 2) == Complex(1.0));
  CHECK(frob(e13) == doctest::Approx(1.0));
  CHECK(frob(unit(2, 2, 3) * unit(2, 2, 3) - unit(2, 2, 3)) == doctest::Approx(0.0));
}

TEST_CASE("kron matches the block definition") {
  MatrixC a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  MatrixC k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1.0));  // a(0,0) b(0,1)
  CHECK(k(2, 1) == Complex(3.0));  // a(1,0) b(0,1)
  CHECK(k(3, 2) == Complex(4.0));  // a(1,1) b(1,0)
  // mixed-product property
  MatrixC c(2, 2), d(2, 2);
  c << 2, 0, 1, 1;
  d << 1, 1, 0, 2;
  CHECK(frob(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-12);
}

TEST_CASE("vec/unvec are column-major inverses") {
  MatrixC m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  VectorC v = vec(m);
  CHECK(v(0) == Complex(1.0));
  CHECK(v(1) == Complex(4.0));  // column-major: (1,4,2,5,3,6)
  CHECK(v(2) == Complex(2.0));
  CHECK(frob(unvec(v, 2, 3) - m) == doctest::Approx(0.0));
}

TEST_CASE("span dimension and membership") {
  std::vector<MatrixC> mats = {unit(1, 1), unit(2, 2), unit(1, 1) + unit(2, 2)};
  CHECK(span_dim(mats) == 2);
  CHECK(orthonormal_span(mats).size() == 2);
  CHECK(in_span(mats, 3.0 * unit(1, 1) - unit(2, 2)));
  CHECK(!in_span(mats, unit(1, 2)));
  CHECK(span_dim({}) == 0);
}

TEST_CASE("commutant of generic diagonal is the diagonal algebra") {
  MatrixC d = MatrixC::Zero(4, 4);
  d.diagonal() << 1, 2, 3, 5;
  auto c = commutant({d});
  CHECK(c.size() == 4);
  for (const auto& m : c) CHECK(frob(m * d - d * m) < 1e-10);
}

TEST_CASE("commutant of empty input is the full matrix space") {
  CHECK(commutant({}).size() == 16);
}

TEST_CASE("commutant of an irreducible pair is the scalars") {
  // shift + clock generate all of M_4
  MatrixC shift = unit(1, 2) + unit(2, 3) + unit(3, 4) + unit(4, 1);
  MatrixC clock = MatrixC::Zero(4, 4);
  clock.diagonal() << 1, 2, 4, 8;
  auto c = commutant({shift, clock});
  REQUIRE(c.size() == 1);
  CHECK(in_span(c, MatrixC::Identity(4, 4)));
}

TEST_CASE("eigenvalues are sorted by (re, im)") {
  MatrixC m = MatrixC::Zero(3, 3);
  m.diagonal() << Complex(2, 0), Complex(-1, 0), Complex(2, -1);
  auto ev = eigenvalues(m);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0].real() == doctest::Approx(-1.0));
  CHECK(ev[1].imag() == doctest::Approx(-1.0));
  CHECK(ev[2].imag() == doctest::Approx(0.0));
}
