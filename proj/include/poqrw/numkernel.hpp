#pragma once

// Dense complex linear algebra used throughout the library. Everything here is
// a thin layer over Eigen, templated on the real scalar type.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "poqrw/errors.hpp"

namespace poqrw {

template <class Real>
using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using CVec = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using cplx = std::complex<double>;
using CMatrix = CMat<double>;
using CVector = CVec<double>;

/// Largest side length accepted by the spectral routines.
inline constexpr Eigen::Index kMaxSpectralDim = 128;
/// Largest side length a Kronecker product may produce.
inline constexpr Eigen::Index kMaxKronDim = 16384;

template <class Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <class Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) throw NumericError(std::string(what) + ": non-finite entry");
}

/// All eigenvalues of a general complex matrix, with algebraic multiplicity.
template <class Derived>
CVec<RealOf<Derived>> eigvals(const Eigen::MatrixBase<Derived>& m) {
  using Real = RealOf<Derived>;
  require_square(m, "eigvals");
  if (m.rows() > kMaxSpectralDim) {
    throw SizeError("eigvals: dimension " + std::to_string(m.rows()) + " exceeds cap " +
                    std::to_string(kMaxSpectralDim));
  }
  if (m.rows() == 0) return CVec<Real>();
  Eigen::ComplexEigenSolver<CMat<Real>> solver(m.template cast<std::complex<Real>>(), false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigvals: QR iteration did not converge within " +
                       std::to_string(30 * m.rows()) + " iterations per row");
  }
  return solver.eigenvalues();
}

/// Determinant by partial-pivot LU.
template <class Derived>
std::complex<RealOf<Derived>> det(const Eigen::MatrixBase<Derived>& m) {
  using Real = RealOf<Derived>;
  require_square(m, "det");
  if (m.rows() == 0) return {1, 0};
  return m.template cast<std::complex<Real>>().partialPivLu().determinant();
}

/// Kronecker product: (a (x) b)(i*rb + j, k*cb + l) = a(i,k) * b(j,l).
template <class DerivedA, class DerivedB>
CMat<RealOf<DerivedA>> kron(const Eigen::MatrixBase<DerivedA>& a,
                            const Eigen::MatrixBase<DerivedB>& b) {
  using Real = RealOf<DerivedA>;
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxKronDim || cols > kMaxKronDim) {
    throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds cap " + std::to_string(kMaxKronDim));
  }
  CMat<Real> out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) =
          std::complex<Real>(a(i, k)) * b.template cast<std::complex<Real>>();
    }
  }
  return out;
}

// Project-wide vectorization is row-major: rowvec(X)[i*n + j] = X(i, j), so that
// the map X -> A X B^dagger has matrix kron(A, conj(B)).

template <class Derived>
CVec<RealOf<Derived>> rowvec(const Eigen::MatrixBase<Derived>& x) {
  using Real = RealOf<Derived>;
  CVec<Real> v(x.rows() * x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

template <class Derived>
CMat<RealOf<Derived>> unrowvec(const Eigen::MatrixBase<Derived>& v, Eigen::Index n) {
  using Real = RealOf<Derived>;
  if (v.size() != n * n) {
    throw DimensionError("unrowvec: length " + std::to_string(v.size()) + " is not " +
                         std::to_string(n) + "^2");
  }
  CMat<Real> x(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) x(i, j) = v(i * n + j);
  return x;
}

/// Largest modulus among the eigenvalues.
template <class Real>
Real spectral_radius(const CVec<Real>& eigenvalues) {
  return eigenvalues.size() == 0 ? Real(0) : eigenvalues.cwiseAbs().maxCoeff();
}

/// Sort by descending modulus; ties broken by real then imaginary part so the
/// order is reproducible.
template <class Real>
std::vector<std::complex<Real>> sorted_by_modulus(const CVec<Real>& eigenvalues) {
  std::vector<std::complex<Real>> out(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

/// Largest distance in a greedy nearest-neighbour pairing of two multisets.
/// Returns +inf when the sizes differ.
template <class Real>
Real multiset_distance(const std::vector<std::complex<Real>>& a,
                       const std::vector<std::complex<Real>>& b) {
  if (a.size() != b.size()) return std::numeric_limits<Real>::infinity();
  std::vector<bool> used(b.size(), false);
  Real worst = 0;
  for (const auto& x : a) {
    std::size_t best = b.size();
    Real best_d = std::numeric_limits<Real>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const Real d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

template <class Real>
bool spectra_match(const std::vector<std::complex<Real>>& a,
                   const std::vector<std::complex<Real>>& b, Real tol = Real(1e-8)) {
  return multiset_distance(a, b) <= tol;
}

template <class Real>
std::vector<std::complex<Real>> to_std_vector(const CVec<Real>& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace poqrw
