#pragma once

// Test-only helpers: random Haar unitaries and random walk specs.

#include <cmath>
#include <complex>
#include <random>

#include "poqrw/model.hpp"

namespace poqrw::testing {

inline CMatrix random_gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

/// Haar-distributed unitary via QR with the phase of R's diagonal removed.
inline CMatrix random_unitary(std::mt19937_64& rng, int n) {
  const CMatrix z = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline CVector random_state(std::mt19937_64& rng, int n) {
  return random_gaussian(rng, n, 1).col(0).normalized();
}

/// Random density matrix of full rank.
inline CMatrix random_density(std::mt19937_64& rng, int n) {
  const CMatrix a = random_gaussian(rng, n, n);
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

inline WalkSpec random_spec(std::mt19937_64& rng, int n_min = 2, int n_max = 6,
                            double p_min = 0.05, double p_max = 1.0) {
  std::uniform_int_distribution<int> dn(n_min, n_max);
  WalkSpec s;
  s.n = dn(rng);
  s.n1 = std::uniform_int_distribution<int>(1, s.n - 1)(rng);
  s.p = std::uniform_real_distribution<double>(p_min, p_max)(rng);
  s.unitary = random_unitary(rng, s.n);
  s.phi0 = random_state(rng, s.n);
  return s;
}

inline double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace poqrw::testing
