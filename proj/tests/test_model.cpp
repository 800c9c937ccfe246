#include <doctest.h>

#include <numbers>

#include "poqrw/model.hpp"
#include "support.hpp"

using namespace poqrw;
using poqrw::testing::max_abs;
using std::numbers::pi;

TEST_CASE("validate") {
  CHECK(validate(hadamard_spec(pi / 4, 0.5)).empty());
  CHECK(validate(example_n3_spec(0.3)).empty());

  auto scaled = hadamard_spec(pi / 4, 0.5);
  scaled.unitary.row(0) *= 2.0;
  const auto issues = validate(scaled);
  REQUIRE(!issues.empty());
  CHECK(issues.front().find("U^+U") != std::string::npos);

  auto zero = hadamard_spec(pi / 4, 0.5);
  zero.phi0.setZero();
  const auto phi_issues = validate(zero);
  REQUIRE(phi_issues.size() == 1);
  CHECK(phi_issues.front().find("phi0") != std::string::npos);

  auto bad_p = hadamard_spec(pi / 4, 1.5);
  CHECK(!validate(bad_p).empty());

  auto pure_shift = example_n3_spec(1.0);
  pure_shift.n1 = 3;
  CHECK(!validate(pure_shift).empty());
  pure_shift.n1 = 0;
  CHECK(!validate(pure_shift).empty());

  auto wrong_shape = hadamard_spec(pi / 4, 0.5);
  wrong_shape.n = 3;
  CHECK(validate(wrong_shape).size() >= 2);

  CHECK_THROWS_AS(blocks(scaled), ValidationError);
}

TEST_CASE("blocks") {
  const double th = 0.3;
  const auto h = blocks(hadamard_spec(th, 0.5));
  CMatrix b1(2, 2);
  b1 << std::cos(th), std::sin(th), 0, 0;
  CHECK(max_abs(h.right - b1) < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const auto e = blocks(example_n3_spec(0.5));
  CMatrix b2 = CMatrix::Zero(3, 3);
  b2.row(2) << -r, 1.0, r;
  CHECK(max_abs(e.left - r * b2) < 1e-15);

  WalkSpec id = hadamard_spec(0.0, 0.5);
  id.unitary = CMatrix::Identity(2, 2);
  const auto ib = blocks(id);
  CHECK(max_abs(ib.right - CMatrix(Eigen::Vector2cd(1, 0).asDiagonal())) == 0.0);
  CHECK(max_abs(ib.left - CMatrix(Eigen::Vector2cd(0, 1).asDiagonal())) == 0.0);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_spec(rng);
    const auto b = blocks(s);
    CHECK(max_abs(b.right + b.left - s.unitary) == 0.0);
    CHECK(max_abs(b.right.adjoint() * b.right + b.left.adjoint() * b.left -
                  CMatrix(CMatrix::Identity(s.n, s.n))) < 1e-12);
  }
}

TEST_CASE("momentum unitary") {
  const double th = 0.9, k = 1.3;
  const auto s = hadamard_spec(th, 0.5);
  CHECK(max_abs(momentum_unitary(s, 0.0) - s.unitary) < 1e-15);

  const cplx w = std::polar(1.0, k);
  CMatrix expected(2, 2);
  expected << std::conj(w) * std::cos(th), std::conj(w) * std::sin(th), w * std::sin(th),
      -w * std::cos(th);
  CHECK(max_abs(momentum_unitary(s, k) - expected) < 1e-15);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = testing::random_spec(rng);
    const CMatrix uk = momentum_unitary(r, 0.7);
    CHECK(max_abs(uk.adjoint() * uk - CMatrix(CMatrix::Identity(r.n, r.n))) < 1e-12);
    CHECK(max_abs(momentum_unitary(r, 0.7 + 2 * pi) - uk) < 1e-12);
  }
}

TEST_CASE("Hadamard walk superoperator in the Pauli basis") {
  for (double th : {pi / 4, pi / 3, 0.4}) {
    for (double p : {0.25, 0.5, 1.0}) {
      const double q = 1 - p, k = 0.7, nu = 0.4, w = 2 * k + nu;
      const cplx i(0, 1);
      CMatrix expected(4, 4);
      expected << std::cos(nu), i * std::sin(nu) * std::sin(2 * th), 0.0,
          i * std::sin(nu) * std::cos(2 * th),  //
          0.0, -q * std::cos(w) * std::cos(2 * th), q * std::sin(w),
          q * std::cos(w) * std::sin(2 * th),  //
          0.0, -q * std::sin(w) * std::cos(2 * th), -q * std::cos(w),
          q * std::sin(w) * std::sin(2 * th),  //
          i * std::sin(nu), std::cos(nu) * std::sin(2 * th), 0.0, std::cos(nu) * std::cos(2 * th);
      const auto l = superop_matrix(hadamard_spec(th, p), k, nu, Basis::gellmann);
      CHECK(max_abs(l.m - expected) < 1e-12);
    }
  }
}

TEST_CASE("superop structure on random specs") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_spec(rng, 2, 5, 0.0, 1.0);
    const double k = angle(rng), nu = angle(rng) - pi;
    CAPTURE(trial);

    const auto g0 = superop_matrix(s, k, 0.0, Basis::gellmann).m;
    CHECK(std::abs(g0(0, 0) - 1.0) < 1e-12);
    CHECK(g0.row(0).tail(g0.cols() - 1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(g0.col(0).tail(g0.rows() - 1).cwiseAbs().maxCoeff() < 1e-12);

    const auto gn = superop_matrix(s, k, nu, Basis::gellmann).m;
    const cplx w = std::polar(1.0, nu);
    CHECK(std::abs(gn(0, 0) - (w * double(s.n1) + std::conj(w) * double(s.n2())) / double(s.n)) <
          1e-12);

    const auto st = superop_matrix(s, k, nu, Basis::standard).m;
    const auto ev_std = to_std_vector(CVector(eigvals(st)));
    const auto ev_gm = to_std_vector(CVector(eigvals(gn)));
    CHECK(multiset_distance(ev_std, ev_gm) < 1e-9);
    CHECK(spectral_radius(CVector(eigvals(st))) <= 1 + 1e-9);
  }
}

TEST_CASE("trace preservation at nu = 0") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_spec(rng);
    const auto gm = build_basis(s.n);
    const CMatrix rho = testing::random_density(rng, s.n);
    const CVector out = superop_matrix(s, 1.1, 0.0, Basis::gellmann).m * to_coords(rho, gm);
    CHECK(std::abs(out(0) - to_coords(rho, gm)(0)) < 1e-12);
  }
}

TEST_CASE("first row and column closed forms") {
  const auto s3 = [] {
    auto s = example_n3_spec(0.5);
    return s;
  }();
  const auto ref0 = lemma31_reference_row_col(s3, 0.0);
  CHECK((ref0.column - CVector(CVector::Unit(9, 0))).norm() < 1e-15);

  // n = 3, n1 = 2, nu = pi/6: the gamma_33 entry is 2 * 2 i (1/2) / sqrt(3 * 2 * 3).
  const auto ref = lemma31_reference_row_col(s3, pi / 6);
  CHECK(std::abs(ref.column(GellMannBasis::index(3, 3, 3)) - cplx(0, 2.0 / std::sqrt(18.0))) <
        1e-15);
  CHECK(std::abs(ref.column(GellMannBasis::index(3, 2, 2))) == 0.0);

  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_spec(rng, 2, 6, 0.0, 1.0);
    const double k = angle(rng), nu = angle(rng);
    const auto m = superop_matrix(s, k, nu, Basis::gellmann).m;
    const auto r = lemma31_reference_row_col(s, nu);
    CHECK((m.col(0) - r.column).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((m.row(0).transpose() - r.row).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("basis tags") {
  CHECK(parse_basis("standard") == Basis::standard);
  CHECK(parse_basis("gellmann") == Basis::gellmann);
  CHECK_THROWS_AS(parse_basis("pauli"), ArgumentError);
}

TEST_CASE("scalar-generic instantiation") {
  const auto s = hadamard_spec<long double>(0.6L, 0.5L);
  const auto l = superop_matrix<long double>(s, 0.3L, 0.0L, Basis::gellmann);
  CHECK(std::abs(l.m(0, 0) - std::complex<long double>(1)) < 1e-17L);
}
