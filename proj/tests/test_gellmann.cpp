#include <doctest.h>

#include "poqrw/gellmann.hpp"
#include "poqrw/model.hpp"
#include "support.hpp"

using namespace poqrw;
using poqrw::testing::max_abs;

TEST_CASE("n = 2 is the normalized Pauli set in row-major order") {
  const auto b = build_basis(2);
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix id(2, 2), x(2, 2), y(2, 2), z(2, 2);
  id << 1, 0, 0, 1;
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  REQUIRE(b.size() == 4);
  CHECK(max_abs(b[0] - r * id) < 1e-15);
  CHECK(max_abs(b[1] - r * x) < 1e-15);
  CHECK(max_abs(b[2] - r * y) < 1e-15);
  CHECK(max_abs(b[3] - r * z) < 1e-15);
}

TEST_CASE("n = 3 diagonal members") {
  const auto b = build_basis(3);
  CMatrix g22 = CMatrix::Zero(3, 3), g33 = CMatrix::Zero(3, 3);
  g22.diagonal() << 1.0, -1.0, 0.0;
  g33.diagonal() << 1.0, 1.0, -2.0;
  CHECK(max_abs(b[GellMannBasis::index(3, 2, 2)] - g22 / std::sqrt(2.0)) < 1e-15);
  CHECK(max_abs(b[GellMannBasis::index(3, 3, 3)] - g33 / std::sqrt(6.0)) < 1e-15);
}

TEST_CASE("basis invariants for every supported n") {
  for (int n = kMinCoinDim; n <= kMaxCoinDim; ++n) {
    CAPTURE(n);
    const auto b = build_basis(n);
    REQUIRE(b.size() == static_cast<std::size_t>(n * n));
    CHECK(max_abs(b[0] - CMatrix(CMatrix::Identity(n, n)) / std::sqrt(double(n))) < 1e-15);
    int diagonal = 0;
    for (std::size_t a = 0; a < b.size(); ++a) {
      CHECK(max_abs(b[a] - b[a].adjoint()) == 0.0);
      const cplx tr = b[a].trace();
      CHECK(std::abs(tr - (a == 0 ? std::sqrt(double(n)) : 0.0)) < 1e-12);
      if (max_abs(CMatrix(b[a] - CMatrix(b[a].diagonal().asDiagonal()))) == 0.0) ++diagonal;
    }
    CHECK(diagonal == n);
    CHECK(max_abs(b.change.adjoint() * b.change - CMatrix(CMatrix::Identity(n * n, n * n))) < 1e-12);
  }
  CHECK_THROWS_AS(build_basis(1), SizeError);
  CHECK_THROWS_AS(build_basis(12), SizeError);
}

TEST_CASE("hs_inner") {
  const auto b = build_basis(4);
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = 0; c < b.size(); ++c)
      CHECK(std::abs(hs_inner(b[a], b[c]) - (a == c ? 1.0 : 0.0)) < 1e-12);
  CHECK(std::abs(hs_inner(CMatrix(CMatrix::Identity(3, 3)), CMatrix(CMatrix::Identity(3, 3))) -
                 3.0) < 1e-15);
  CHECK_THROWS_AS(hs_inner(CMatrix(CMatrix::Zero(2, 2)), CMatrix(CMatrix::Zero(3, 3))),
                  DimensionError);

  std::mt19937_64 rng(2);
  const CMatrix rho = testing::random_density(rng, 4);
  CHECK(std::abs(hs_inner(b[0], rho) - rho.trace() / 2.0) < 1e-14);
}

TEST_CASE("coordinates") {
  const auto b2 = build_basis(2);
  const CVector c = to_coords(CMatrix(CMatrix::Identity(2, 2)), b2);
  CHECK(std::abs(c(0) - std::sqrt(2.0)) < 1e-15);
  CHECK(c.tail(3).norm() < 1e-15);

  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(max_abs(from_coords(CVector(CVector::Unit(4, 1)), b2) - x / std::sqrt(2.0)) < 1e-15);
  CHECK(max_abs(from_coords(c, b2) - CMatrix(CMatrix::Identity(2, 2))) < 1e-15);

  std::mt19937_64 rng(9);
  const auto b3 = build_basis(3);
  const CMatrix rho = testing::random_density(rng, 3);
  CHECK(std::abs(to_coords(rho, b3)(0) - 1.0 / std::sqrt(3.0)) < 1e-14);

  const CMatrix u = example_n3_spec(1.0).unitary;
  CHECK(max_abs(from_coords(to_coords(u, b3), b3) - u) < 1e-14);

  CHECK_THROWS_AS(to_coords(CMatrix(CMatrix::Zero(2, 2)), b3), DimensionError);
  CHECK_THROWS_AS(from_coords(CVector(CVector::Zero(4)), b3), DimensionError);
}

TEST_CASE("completeness and reality on random operators") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 7;
    const auto b = build_basis(n);
    const CMatrix a = testing::random_gaussian(rng, n, n);
    const CMatrix back = from_coords(to_coords(a, b), b);
    CHECK(std::sqrt(hs_inner(CMatrix(back - a), CMatrix(back - a)).real()) <= 1e-11);

    const CMatrix h = a + a.adjoint();
    CHECK(to_coords(h, b).imag().cwiseAbs().maxCoeff() <= 1e-12);
  }
}
