#pragma once

// Partially open quantum random walk on the integer line.
//
// The coin space is split into a right-moving block (first n1 basis states,
// shift +1) and a left-moving block (remaining n2 = n - n1 states, shift -1).
// With B1 = P1 U and B2 = P2 U, the momentum blocks are B1k = e^{-ik} B1 and
// B2k = e^{+ik} B2, and one step of the walk acts on coin operators as
//   L_{k,k'}(X) = p (B1k X B1k'^+ + B2k X B2k'^+) + q U_k X U_k'^+,  k' = k + nu.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "poqrw/errors.hpp"
#include "poqrw/gellmann.hpp"
#include "poqrw/numkernel.hpp"

namespace poqrw {

template <class Real>
struct BasicWalkSpec {
  int n = 2;
  int n1 = 1;
  Real p = 1;
  CMat<Real> unitary;
  CVec<Real> phi0;

  int n2() const { return n - n1; }
  Real q() const { return Real(1) - p; }
};

using WalkSpec = BasicWalkSpec<double>;

enum class Basis { standard, gellmann };

inline const char* to_string(Basis b) { return b == Basis::standard ? "standard" : "gellmann"; }

inline Basis parse_basis(const std::string& tag) {
  if (tag == "standard") return Basis::standard;
  if (tag == "gellmann") return Basis::gellmann;
  throw ArgumentError("unknown basis tag '" + tag + "' (expected standard or gellmann)");
}

template <class Real>
struct BasicSuperopMatrix {
  Real k = 0;
  Real nu = 0;
  Basis basis = Basis::standard;
  CMat<Real> m;
};

using SuperopMatrix = BasicSuperopMatrix<double>;

template <class Real>
struct BasicBlocks {
  CMat<Real> right;  // B1 = P1 U
  CMat<Real> left;   // B2 = P2 U
};

using Blocks = BasicBlocks<double>;

namespace detail {

template <class Real>
constexpr Real kUnitaryTol = Real(1e-10);
template <class Real>
constexpr Real kNormTol = Real(1e-12);

template <class Real>
BasicBlocks<Real> split(const CMat<Real>& u, int n1) {
  BasicBlocks<Real> b{u, u};
  b.right.bottomRows(u.rows() - n1).setZero();
  b.left.topRows(n1).setZero();
  return b;
}

}  // namespace detail

/// Lists every violated invariant; empty means the spec is usable.
template <class Real>
std::vector<std::string> validate(const BasicWalkSpec<Real>& spec) {
  std::vector<std::string> issues;
  if (spec.n < kMinCoinDim || spec.n > kMaxCoinDim) {
    issues.push_back("coin dimension n=" + std::to_string(spec.n) + " outside [2, 11]");
  }
  if (spec.unitary.rows() != spec.n || spec.unitary.cols() != spec.n) {
    issues.push_back("unitary is " + std::to_string(spec.unitary.rows()) + "x" +
                     std::to_string(spec.unitary.cols()) + ", expected " + std::to_string(spec.n) +
                     "x" + std::to_string(spec.n));
  }
  if (spec.phi0.size() != spec.n) {
    issues.push_back("phi0 has length " + std::to_string(spec.phi0.size()) + ", expected " +
                     std::to_string(spec.n));
  }
  if (spec.n1 < 1 || spec.n1 > spec.n - 1) {
    issues.push_back("partition n1=" + std::to_string(spec.n1) +
                     " must satisfy 1 <= n1 <= n-1 (both blocks nonempty)");
  }
  if (!(spec.p >= 0 && spec.p <= 1)) {
    issues.push_back("decoherence p=" + std::to_string(double(spec.p)) + " outside [0, 1]");
  }
  if (!issues.empty()) return issues;

  if (!spec.unitary.allFinite()) issues.push_back("unitary has non-finite entries");
  if (!spec.phi0.allFinite()) issues.push_back("phi0 has non-finite entries");
  if (!issues.empty()) return issues;

  const CMat<Real> id = CMat<Real>::Identity(spec.n, spec.n);
  const Real unitarity = (spec.unitary.adjoint() * spec.unitary - id).cwiseAbs().maxCoeff();
  if (unitarity > detail::kUnitaryTol<Real>) {
    issues.push_back("unitary violates U^+U = I (max deviation " + std::to_string(double(unitarity)) +
                     ")");
  } else {
    const auto b = detail::split(spec.unitary, spec.n1);
    const Real unital = (b.right.adjoint() * b.right + b.left.adjoint() * b.left - id)
                            .cwiseAbs()
                            .maxCoeff();
    if (unital > detail::kUnitaryTol<Real>) {
      issues.push_back("blocks violate B1^+B1 + B2^+B2 = I (max deviation " +
                       std::to_string(double(unital)) + ")");
    }
  }
  const Real norm = spec.phi0.norm();
  if (std::abs(norm - Real(1)) > detail::kNormTol<Real>) {
    issues.push_back("phi0 is not normalized (norm " + std::to_string(double(norm)) + ")");
  }
  return issues;
}

template <class Real>
void require_valid(const BasicWalkSpec<Real>& spec) {
  const auto issues = validate(spec);
  if (!issues.empty()) throw ValidationError("invalid walk spec: " + issues.front());
}

template <class Real>
BasicBlocks<Real> blocks(const BasicWalkSpec<Real>& spec) {
  require_valid(spec);
  return detail::split(spec.unitary, spec.n1);
}

/// Phase-twisted blocks (B1k, B2k) at momentum k.
template <class Real>
BasicBlocks<Real> momentum_blocks(const BasicWalkSpec<Real>& spec, Real k) {
  auto b = blocks(spec);
  const std::complex<Real> w = std::polar(Real(1), k);
  b.right *= std::conj(w);
  b.left *= w;
  return b;
}

/// U_k = e^{-ik} B1 + e^{ik} B2.
template <class Real>
CMat<Real> momentum_unitary(const BasicWalkSpec<Real>& spec, Real k) {
  const auto b = momentum_blocks(spec, k);
  return b.right + b.left;
}

/// Standard-basis matrices of the two terms of L_{k,k+nu}, unweighted:
/// `open` = B1k (x) conj(B1k') + B2k (x) conj(B2k'), `coherent` = U_k (x) conj(U_k').
template <class Real>
struct BasicSuperopParts {
  CMat<Real> open;
  CMat<Real> coherent;
};

template <class Real>
BasicSuperopParts<Real> superop_parts(const BasicWalkSpec<Real>& spec, Real k, Real nu) {
  const auto bk = momentum_blocks(spec, k);
  const auto bkp = momentum_blocks(spec, k + nu);
  BasicSuperopParts<Real> parts;
  parts.open = kron(bk.right, bkp.right.conjugate()) + kron(bk.left, bkp.left.conjugate());
  parts.coherent = kron(CMat<Real>(bk.right + bk.left), CMat<Real>((bkp.right + bkp.left).conjugate()));
  return parts;
}

/// Matrix of L_{k,k+nu} in the requested basis. The Gell-Mann entries are
/// <gamma_a, L(gamma_b)>.
template <class Real>
BasicSuperopMatrix<Real> superop_matrix(const BasicWalkSpec<Real>& spec, Real k, Real nu,
                                        Basis basis = Basis::standard) {
  const auto parts = superop_parts(spec, k, nu);
  BasicSuperopMatrix<Real> out{k, nu, basis, spec.p * parts.open + spec.q() * parts.coherent};
  if (basis == Basis::gellmann) {
    const auto gm = build_basis<Real>(spec.n);
    out.m = gm.change.adjoint() * out.m * gm.change;
  }
  return out;
}

/// Closed forms for the first column and first row of the Gell-Mann matrix of
/// L_{k,k+nu}. Both are independent of k.
template <class Real>
struct BasicFirstRowCol {
  CVec<Real> column;  // <gamma_a, L(gamma_11)>
  CVec<Real> row;     // <gamma_11, L(gamma_b)>
};

using FirstRowCol = BasicFirstRowCol<double>;

template <class Real>
BasicFirstRowCol<Real> lemma31_reference_row_col(const BasicWalkSpec<Real>& spec, Real nu) {
  const auto b = blocks(spec);
  const auto gm = build_basis<Real>(spec.n);
  const int n = spec.n;
  const int n1 = spec.n1;
  const int n2 = spec.n2();
  const std::complex<Real> w = std::polar(Real(1), nu);
  const std::complex<Real> i_sin(0, std::sin(nu));
  const Real rn = std::sqrt(Real(n));

  BasicFirstRowCol<Real> out;
  out.column = CVec<Real>::Zero(n * n);
  out.column(0) = Real(2 * n2) * std::cos(nu) / Real(n) + Real(n1 - n2) / Real(n) * w;
  for (int l = n1 + 1; l <= n; ++l) {
    if (l < 2) continue;
    const auto idx = static_cast<Eigen::Index>(BasicGellMannBasis<Real>::index(n, l, l));
    out.column(idx) = Real(2 * n1) * i_sin / std::sqrt(Real(n) * Real(l - 1) * Real(l));
  }

  out.row.resize(n * n);
  for (Eigen::Index a = 0; a < n * n; ++a) {
    const auto& g = gm[static_cast<std::size_t>(a)];
    const std::complex<Real> tr = (b.left * g * b.left.adjoint()).trace();
    out.row(a) = (a == 0 ? w : std::complex<Real>(0)) - Real(2) * i_sin / rn * tr;
  }
  return out;
}

// Presets.

/// Two-state walk with U = [[cos t, sin t], [sin t, -cos t]]; phi0 = xi_1.
template <class Real = double>
BasicWalkSpec<Real> hadamard_spec(Real theta, Real p) {
  BasicWalkSpec<Real> s;
  s.n = 2;
  s.n1 = 1;
  s.p = p;
  const Real c = std::cos(theta);
  const Real sn = std::sin(theta);
  s.unitary.resize(2, 2);
  s.unitary << c, sn, sn, -c;
  s.phi0 = CVec<Real>::Unit(2, 0);
  return s;
}

/// Three-state walk with r = 1/sqrt(2), U = r [[1, 0, 1], [r, 1, -r], [-r, 1, r]],
/// n1 = 2; phi0 = xi_1.
template <class Real = double>
BasicWalkSpec<Real> example_n3_spec(Real p) {
  BasicWalkSpec<Real> s;
  s.n = 3;
  s.n1 = 2;
  s.p = p;
  const Real r = Real(1) / std::sqrt(Real(2));
  s.unitary.resize(3, 3);
  s.unitary << 1, 0, 1, r, 1, -r, -r, 1, r;
  s.unitary *= r;
  s.phi0 = CVec<Real>::Unit(3, 0);
  return s;
}

}  // namespace poqrw
