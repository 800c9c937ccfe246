#pragma once

// Limit law of the walk: drift, the second derivative of the root z0(nu) of
// g(z, nu) = det(I - z L_{k,k+nu}) with z0(0) = 1, and the Gaussian-mixture
// characteristic function built from sigma^2(k) = z0''(0) - z0'(0)^2.

#include <string>
#include <vector>

#include "poqrw/model.hpp"

namespace poqrw {

/// Partial derivatives of g at (z, nu) = (1, 0).
struct GDerivatives {
  cplx g;
  cplx g_z;
  cplx g_nu;
  cplx g_zz;
  cplx g_znu;
  cplx g_nunu;
  /// -det(I - M(0)) with M(0) the trailing (n^2-1)-block of the Gell-Mann
  /// matrix of L_{kk}; equals g_z analytically.
  cplx g_z_block;
};

struct DerivativeOptions {
  double step = 1e-3;
  bool richardson = true;
};

GDerivatives g_derivs(const WalkSpec& spec, double k, const DerivativeOptions& opts = {});

struct Z0Derivatives {
  cplx first;
  cplx second;
};

/// Implicit differentiation of g(z0(nu), nu) = 0.
Z0Derivatives z0_derivatives(const WalkSpec& spec, double k, const DerivativeOptions& opts = {});

/// Tracks the root of g(., nu) nearest 1 by damped Newton at nu in
/// {0, +-h, +-2h} and differentiates the track with 5-point stencils.
Z0Derivatives root_track_oracle(const WalkSpec& spec, double k, double h = 1e-3);

/// Root of z -> det(I - z L_{k,k+nu}) reached by damped Newton from z = 1.
cplx track_root(const WalkSpec& spec, double k, double nu, double* residual = nullptr);

enum class LimitMethod { implicit_derivative, root_tracking };

inline const char* to_string(LimitMethod m) {
  return m == LimitMethod::implicit_derivative ? "implicit-derivative" : "root-tracking";
}

struct LimitReport {
  double k = 0;
  cplx z0_prime;
  cplx z0_doubleprime;
  double sigma2 = 0;
  LimitMethod method = LimitMethod::implicit_derivative;
  // Oracle values, recorded next to the primary ones.
  cplx oracle_z0_prime;
  cplx oracle_z0_doubleprime;
  double oracle_sigma2 = 0;
};

LimitReport limit_report(const WalkSpec& spec, double k, const DerivativeOptions& opts = {});

/// sigma^2(k) by implicit differentiation.
double sigma2(const WalkSpec& spec, double k, const DerivativeOptions& opts = {});

struct MixtureLaw {
  std::vector<double> kgrid;
  double drift = 0;
  std::vector<double> sigma2_of_k;
};

MixtureLaw mixture_law(const WalkSpec& spec, int kgrid_size);

/// Mean over the uniform k-grid of exp(-sigma^2(k) nu^2 / 2).
cplx mixture_charfn(const MixtureLaw& law, double nu);
cplx mixture_charfn(const WalkSpec& spec, int kgrid_size, double nu);

struct DriftReport {
  double drift = 0;       // (n1 - n2) / n, displacement per step
  cplx z0_prime;          // raw root derivative at k = 0
  bool cross_checked = false;
};

/// Ballistic drift. When the eigenvalue condition holds at k = 0 it is checked
/// against -Im z0'(0); a mismatch above 1e-6 raises ConsistencyError.
DriftReport drift(const WalkSpec& spec);

}  // namespace poqrw
