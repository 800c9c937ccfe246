#pragma once

// Normalized generalized Gell-Mann basis of n x n complex matrices.
//
// Elements are indexed by (k, j), 1-based, and stored in row-major order
// gamma_11, gamma_12, ..., gamma_1n, gamma_21, ..., gamma_nn:
//   k < j : (E_kj + E_jk) / sqrt(2)
//   k > j : -i (E_jk - E_kj) / sqrt(2)
//   k = j = 1 : I / sqrt(n)
//   k = j = l >= 2 : diag(1, ..., 1, -(l-1), 0, ..., 0) / sqrt(l (l-1)), l-1 leading ones

#include <cmath>
#include <string>
#include <vector>

#include "poqrw/numkernel.hpp"

namespace poqrw {

inline constexpr int kMinCoinDim = 2;
inline constexpr int kMaxCoinDim = 11;

template <class Real>
struct BasicGellMannBasis {
  int n = 0;
  std::vector<CMat<Real>> elements;
  /// Unitary n^2 x n^2 change of basis; column a is rowvec(elements[a]).
  CMat<Real> change;

  std::size_t size() const { return elements.size(); }
  const CMat<Real>& operator[](std::size_t a) const { return elements[a]; }

  /// Position of gamma_{k,j} (1-based indices) in the ordering.
  static constexpr std::size_t index(int n, int k, int j) {
    return static_cast<std::size_t>((k - 1) * n + (j - 1));
  }
};

using GellMannBasis = BasicGellMannBasis<double>;

template <class Real = double>
BasicGellMannBasis<Real> build_basis(int n) {
  if (n < kMinCoinDim || n > kMaxCoinDim) {
    throw SizeError("build_basis: coin dimension " + std::to_string(n) + " outside [" +
                    std::to_string(kMinCoinDim) + ", " + std::to_string(kMaxCoinDim) + "]");
  }
  using C = std::complex<Real>;
  const Real inv_sqrt2 = Real(1) / std::sqrt(Real(2));

  BasicGellMannBasis<Real> basis;
  basis.n = n;
  basis.elements.reserve(static_cast<std::size_t>(n * n));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      CMat<Real> g = CMat<Real>::Zero(n, n);
      if (k < j) {
        g(k, j) = g(j, k) = C(inv_sqrt2, 0);
      } else if (k > j) {
        g(j, k) = C(0, -inv_sqrt2);
        g(k, j) = C(0, inv_sqrt2);
      } else if (k == 0) {
        g.diagonal().setConstant(C(Real(1) / std::sqrt(Real(n)), 0));
      } else {
        const int l = k + 1;
        const Real norm = std::sqrt(Real(l) * Real(l - 1));
        for (int a = 0; a < l - 1; ++a) g(a, a) = C(Real(1) / norm, 0);
        g(l - 1, l - 1) = C(-Real(l - 1) / norm, 0);
      }
      basis.elements.push_back(std::move(g));
    }
  }

  basis.change.resize(n * n, n * n);
  for (std::size_t a = 0; a < basis.elements.size(); ++a)
    basis.change.col(static_cast<Eigen::Index>(a)) = rowvec(basis.elements[a]);
  return basis;
}

/// Hilbert-Schmidt inner product Tr(a^dagger b).
template <class DerivedA, class DerivedB>
std::complex<RealOf<DerivedA>> hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  require_square(a, "hs_inner");
  return (a.adjoint() * b).trace();
}

template <class Real, class Derived>
CVec<Real> to_coords(const Eigen::MatrixBase<Derived>& a, const BasicGellMannBasis<Real>& basis) {
  if (a.rows() != basis.n || a.cols() != basis.n) {
    throw DimensionError("to_coords: operator is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", basis dimension " +
                         std::to_string(basis.n));
  }
  return basis.change.adjoint() * rowvec(a);
}

template <class Real, class Derived>
CMat<Real> from_coords(const Eigen::MatrixBase<Derived>& c, const BasicGellMannBasis<Real>& basis) {
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  if (c.size() != m) {
    throw DimensionError("from_coords: " + std::to_string(c.size()) + " coordinates for " +
                         std::to_string(m) + " basis elements");
  }
  return unrowvec(CVec<Real>(basis.change * c), basis.n);
}

}  // namespace poqrw
