#include <doctest.h>

#include <numbers>

#include "poqrw/model.hpp"
#include "poqrw/numkernel.hpp"
#include "support.hpp"

using namespace poqrw;
using poqrw::testing::max_abs;

namespace {

std::vector<cplx> spectrum(const CMatrix& m) { return to_std_vector(CVector(eigvals(m))); }

}  // namespace

TEST_CASE("eigvals of small closed-form matrices") {
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 1.0, 0.5, -0.5;
  CHECK(multiset_distance(spectrum(d), {1.0, 0.5, -0.5}) < 1e-14);

  CMatrix rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  CHECK(multiset_distance(spectrum(rot), {cplx(0, 1), cplx(0, -1)}) < 1e-14);
}

TEST_CASE("eigvals of the n=3 open superoperator match its characteristic polynomial") {
  const auto spec = example_n3_spec(1.0);
  const auto l = superop_matrix(spec, 0.4, 0.0);
  const double s7 = std::sqrt(7.0);
  const std::vector<cplx> expected{1.0, 0.5, -0.5, cplx(5, s7) / 8.0, cplx(5, -s7) / 8.0,
                                   0.0, 0.0, 0.0, 0.0};
  CHECK(multiset_distance(spectrum(l.m), expected) < 1e-10);
}

TEST_CASE("eigvals rejects non-square and oversized input") {
  CHECK_THROWS_AS(eigvals(CMatrix::Zero(2, 3)), DimensionError);
  CHECK_THROWS_AS(eigvals(CMatrix::Identity(129, 129)), SizeError);
}

TEST_CASE("eigenvalue sum equals the trace") {
  std::mt19937_64 rng(11);
  for (int n : {3, 10, 40}) {
    const CMatrix m = testing::random_gaussian(rng, n, n);
    CHECK(std::abs(eigvals(m).sum() - m.trace()) <= 1e-10 * n);
  }
}

TEST_CASE("det") {
  CHECK(std::abs(det(CMatrix(CMatrix::Identity(4, 4))) - 1.0) < 1e-15);
  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 2.0, 3.0;
  CHECK(std::abs(det(d) - 6.0) < 1e-15);
  CHECK_THROWS_AS(det(CMatrix::Zero(3, 2)), DimensionError);

  std::mt19937_64 rng(5);
  for (int n : {2, 5, 9}) {
    CHECK(std::abs(std::abs(det(testing::random_unitary(rng, n))) - 1.0) < 1e-12);
  }
}

TEST_CASE("det equals the product of eigenvalues") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = testing::random_gaussian(rng, 6, 6);
    const cplx prod = eigvals(m).prod();
    const cplx d = det(m);
    CHECK(std::abs(prod - d) <= 1e-8 * std::abs(d));
  }
}

TEST_CASE("kron conventions") {
  CHECK(max_abs(kron(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(2, 2))) -
                CMatrix(CMatrix::Identity(4, 4))) == 0.0);

  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a.diagonal() << 1.0, 2.0;
  b.diagonal() << 3.0, 4.0;
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 3.0, 4.0, 6.0, 8.0;
  CHECK(max_abs(kron(a, b) - expected) == 0.0);

  CHECK_THROWS_AS(kron(CMatrix(CMatrix::Zero(200, 1)), CMatrix(CMatrix::Zero(100, 1))), SizeError);
}

TEST_CASE("kron(A, conj(B)) acts on rowvec(X) as X -> A X B^+") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = testing::random_gaussian(rng, 3, 3);
    const CMatrix b = testing::random_gaussian(rng, 3, 3);
    const CMatrix x = testing::random_gaussian(rng, 3, 3);
    // Direct triple product, entry by entry.
    CMatrix direct = CMatrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) direct(i, j) += a(i, r) * x(r, c) * std::conj(b(j, c));
    const CVector lhs = kron(a, CMatrix(b.conjugate())) * rowvec(x);
    CHECK(max_abs(unrowvec(lhs, 3) - direct) < 1e-12);
  }
}

TEST_CASE("spectra are similarity invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix m = testing::random_gaussian(rng, 8, 8);
    // Well-conditioned S: unitary plus a small perturbation.
    const CMatrix s = testing::random_unitary(rng, 8) + 0.1 * testing::random_gaussian(rng, 8, 8);
    const CMatrix similar = s.inverse() * m * s;
    CHECK(multiset_distance(spectrum(m), spectrum(similar)) < 1e-8);
  }
}

TEST_CASE("multiset matching and ordering") {
  CHECK(spectra_match<double>({1.0, 2.0}, {2.0, 1.0 + 1e-10}));
  CHECK_FALSE(spectra_match<double>({1.0, 2.0}, {2.0, 1.1}));
  CHECK_FALSE(spectra_match<double>({1.0}, {1.0, 1.0}));
  const auto sorted = sorted_by_modulus(CVector(CVector::LinSpaced(4, 0.0, 3.0)));
  CHECK(sorted.front() == cplx(3.0));
  CHECK(sorted.back() == cplx(0.0));
}
