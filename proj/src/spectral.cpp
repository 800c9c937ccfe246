#include "poqrw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace poqrw {

SpectralReport eig_condition(const WalkSpec& spec, double k, double tol) {
  if (!(tol > 0 && tol <= 1e-3)) {
    throw ArgumentError("eig_condition: tolerance must lie in (0, 1e-3]");
  }
  const auto l = superop_matrix(spec, k, 0.0, Basis::standard);
  SpectralReport r;
  r.k = k;
  r.p = spec.p;
  r.tolerance = tol;
  r.eigenvalues = sorted_by_modulus(eigvals(l.m));
  r.gap = 1.0 - (r.eigenvalues.size() > 1 ? std::abs(r.eigenvalues[1]) : 0.0);

  int near_one = 0;
  bool others_inside = true;
  for (const auto& lam : r.eigenvalues) {
    if (std::abs(lam - 1.0) <= tol) {
      ++near_one;
    } else if (std::abs(lam) > 1.0 - tol) {
      others_inside = false;
    }
  }
  r.condition_holds = near_one == 1 && others_inside;
  return r;
}

std::vector<SpectralReport> condition_grid(const WalkSpec& spec, int k_count, double tol) {
  if (k_count < 1) throw ArgumentError("condition_grid: k_count must be >= 1");
  std::vector<SpectralReport> out;
  out.reserve(static_cast<std::size_t>(k_count));
  for (int j = 0; j < k_count; ++j) {
    out.push_back(eig_condition(spec, 2.0 * std::numbers::pi * j / k_count, tol));
  }
  return out;
}

bool all_hold(const std::vector<SpectralReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SpectralReport& r) { return r.condition_holds; });
}

double min_gap(const std::vector<SpectralReport>& reports) {
  double g = 1.0;
  for (const auto& r : reports) g = std::min(g, r.gap);
  return g;
}

LiftReport pf_lift_check(const WalkSpec& spec, double k, const std::vector<double>& p_samples,
                         double tol) {
  LiftReport report;
  WalkSpec open = spec;
  open.p = 1.0;
  const auto base = eig_condition(open, k, tol);
  if (!base.condition_holds) {
    report.reason = "lift not applicable: eigenvalue condition fails at p = 1";
    return report;
  }
  report.applicable = true;

  const int n = spec.n;
  const CVector mixed = rowvec(CMatrix(CMatrix::Identity(n, n) / double(n)));
  bool ok = true;
  for (double p : p_samples) {
    if (!(p > 0 && p <= 1)) throw ArgumentError("pf_lift_check: p samples must lie in (0, 1]");
    WalkSpec s = spec;
    s.p = p;
    const auto r = eig_condition(s, k, tol);
    LiftSample sample{p, r.condition_holds, true, r.gap};
    for (const auto& lam : r.eigenvalues) {
      if (std::abs(lam) >= 1.0 - tol && std::abs(lam - 1.0) > tol) sample.peripheral_only_at_one = false;
    }
    const auto l = superop_matrix(s, k, 0.0, Basis::standard);
    const double residual = (l.m.adjoint() * mixed - mixed).cwiseAbs().maxCoeff();
    report.fixed_point_residual = std::max(report.fixed_point_residual, residual);
    ok = ok && sample.condition_holds && sample.peripheral_only_at_one;
    report.samples.push_back(sample);
  }
  report.passed = ok && report.fixed_point_residual <= 1e-12;
  return report;
}

double peripheral_split_residual(const WalkSpec& spec, double k, double tol) {
  const auto parts = superop_parts(spec, k, 0.0);
  const CMatrix l = spec.p * parts.open + spec.q() * parts.coherent;
  Eigen::ComplexEigenSolver<CMatrix> solver(l, true);
  if (solver.info() != Eigen::Success) {
    throw NumericError("peripheral_split_residual: eigen-solver did not converge");
  }
  double worst = 0;
  for (Eigen::Index a = 0; a < l.rows(); ++a) {
    const cplx lam = solver.eigenvalues()(a);
    if (std::abs(lam) < 1.0 - tol) continue;
    const CVector v = solver.eigenvectors().col(a).normalized();
    worst = std::max(worst, (parts.coherent * v - lam * v).norm());
    worst = std::max(worst, (parts.open * v - lam * v).norm());
  }
  return worst;
}

}  // namespace poqrw
