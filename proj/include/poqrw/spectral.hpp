#pragma once

// Eigenvalue condition for L_{kk}: 1 is a simple eigenvalue and every other
// eigenvalue lies strictly inside the unit disk.

#include <string>
#include <vector>

#include "poqrw/model.hpp"

namespace poqrw {

inline constexpr double kDefaultEigTol = 1e-8;
inline constexpr int kDefaultKGrid = 64;

struct SpectralReport {
  double k = 0;
  double p = 0;
  std::vector<cplx> eigenvalues;  // descending modulus
  double gap = 0;                 // 1 - second largest modulus
  bool condition_holds = false;
  double tolerance = kDefaultEigTol;
};

SpectralReport eig_condition(const WalkSpec& spec, double k, double tol = kDefaultEigTol);

/// One report per k = 2 pi j / k_count.
std::vector<SpectralReport> condition_grid(const WalkSpec& spec, int k_count,
                                           double tol = kDefaultEigTol);

bool all_hold(const std::vector<SpectralReport>& reports);
double min_gap(const std::vector<SpectralReport>& reports);

struct LiftSample {
  double p = 0;
  bool condition_holds = false;
  /// Every eigenvalue with |lambda| >= 1 - tol sits within tol of 1.
  bool peripheral_only_at_one = false;
  double gap = 0;
};

struct LiftReport {
  bool applicable = false;
  std::string reason;  // why the lift does not apply, when it doesn't
  std::vector<LiftSample> samples;
  /// max |L^dagger(I/n) - I/n| over the samples
  double fixed_point_residual = 0;
  bool passed = false;
};

/// Checks that the eigenvalue condition at p = 1 carries over to each sampled
/// p in (0, 1], together with the peripheral-spectrum property of the mixture
/// and the unital fixed point I/n of the adjoint map.
LiftReport pf_lift_check(const WalkSpec& spec, double k, const std::vector<double>& p_samples,
                         double tol = kDefaultEigTol);

/// For every eigenpair (lambda, v) of L_{kk} with |lambda| >= 1 - tol, the
/// largest of ||C v - lambda v|| and ||D v - lambda v||, where C is the coherent
/// part and D the open part. Zero when no eigenvalue is peripheral.
double peripheral_split_residual(const WalkSpec& spec, double k, double tol = 1e-9);

}  // namespace poqrw
